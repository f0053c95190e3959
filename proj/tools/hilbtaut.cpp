// Command-line front end: runs a JSON job file and/or the complex
// verification suite.
//
// Exit codes: 0 success, 1 a job failed, 2 a verification failed,
// 3 the command line or the job file is invalid.

#include "hilbtaut/runner.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

int parseVerifyBound(const std::string &arg) {
  if (arg.rfind("k=", 0) != 0)
    throw hilbtaut::Error("--verify expects k=<max>, got '" + arg + "'");
  const std::string num = arg.substr(2);
  if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos || num.size() > 3)
    throw hilbtaut::Error("--verify expects k=<max>, got '" + arg + "'");
  return std::stoi(num);
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Euler characteristics of tautological bundles on Hilbert schemes of points"};
  std::string jobsPath, outPath, verifySpec;
  bool forceBrute = false;
  unsigned threads = 1;
  app.add_option("--jobs", jobsPath, "JSON job file")->check(CLI::ExistingFile);
  app.add_option("--out", outPath, "write machine-readable results (JSON) to this file");
  app.add_flag("--force-brute-N", forceBrute,
               "compute N(k,l) from the explicit complexes (k <= 7) in euler_two jobs");
  app.add_option("--threads", threads, "run independent jobs in parallel")
      ->check(CLI::Range(1u, 256u));
  app.add_option("--verify", verifySpec, "run the complex verification suite, e.g. k=5");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 3;
  }
  if (jobsPath.empty() && verifySpec.empty()) {
    std::cerr << "nothing to do: give --jobs <file> and/or --verify k=<max>\n";
    return 3;
  }

  hilbtaut::ResultTable table;
  try {
    if (!verifySpec.empty())
      table = hilbtaut::verifyComplexes(parseVerifyBound(verifySpec));
    if (!jobsPath.empty()) {
      const hilbtaut::JobFile file = hilbtaut::loadJobFile(jobsPath);
      for (auto &row : hilbtaut::runJobs(file, {forceBrute, threads}))
        table.push_back(std::move(row));
    }
  } catch (const hilbtaut::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }

  hilbtaut::printTable(std::cout, table);
  if (!outPath.empty()) {
    std::ofstream out(outPath);
    if (!out) {
      std::cerr << "error: cannot write '" << outPath << "'\n";
      return 3;
    }
    out << hilbtaut::toJson(table).dump(2) << "\n";
  }
  for (const auto &row : table)
    if (!row.message.empty())
      std::cerr << row.message << "\n";
  return hilbtaut::exitCodeFor(table);
}
