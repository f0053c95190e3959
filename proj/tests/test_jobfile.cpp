#include "generators.hpp"

#include "hilbtaut/runner.hpp"

#include <gtest/gtest.h>

using namespace hilbtaut;

namespace {

const std::string kSamples = HILBTAUT_SAMPLES;

JobFile sample(const std::string &name) { return loadJobFile(kSamples + "/" + name); }

const ResultRow &rowById(const ResultTable &t, const std::string &id) {
  for (const auto &r : t)
    if (r.id == id)
      return r;
  throw std::runtime_error("no row " + id);
}

std::string errorOf(const std::string &text) {
  try {
    parseJobFileText(text);
  } catch (const JobFileError &e) {
    return e.what();
  }
  return "";
}

std::string withJobs(const std::string &jobs) {
  return R"({"surface": {"preset": "P2"},
             "bundles": [{"name": "O", "c1": [0]}, {"name": "T", "rank": 2, "c1": [3], "c2": 3}],
             "jobs": )" +
         jobs + "}";
}

/// A random valid job file built directly from the domain types.
JobFile randomJobFile(std::mt19937 &rng) {
  JobFile f;
  switch (gen::uniform(rng, 0, 3)) {
  case 0:
    f.surface.preset = "P2";
    break;
  case 1:
    f.surface.preset = "P1xP1";
    break;
  case 2:
    f.surface.preset = "K3";
    f.surface.selfIntersection = 2 * gen::uniform(rng, 1, 4);
    break;
  default:
    f.surface = {"", 2, "plane", {{1}}, {-3}, 3};
  }
  const SurfaceModel S = f.surface.build();
  const int nb = static_cast<int>(gen::uniform(rng, 1, 4));
  for (int i = 0; i < nb; ++i)
    f.bundles.push_back({"B" + std::to_string(i), i == 0 ? 1 : gen::uniform(rng, -2, 3),
                         gen::divisor(rng, S.picardRank(), i != 0), gen::rational(rng)});
  if (gen::uniform(rng, 0, 1))
    f.lineBundle = gen::divisor(rng, S.picardRank(), true);
  auto names = [&](int count) {
    std::vector<std::string> v;
    for (int i = 0; i < count; ++i)
      v.push_back("B" + std::to_string(gen::uniform(rng, 0, nb - 1)));
    return v;
  };
  const int nj = static_cast<int>(gen::uniform(rng, 0, 6));
  for (int i = 0; i < nj; ++i) {
    Job j;
    j.id = "job" + std::to_string(i);
    j.kind = static_cast<JobKind>(gen::uniform(rng, 0, 8));
    if (usesN(j.kind)) {
      if (gen::uniform(rng, 0, 2) == 0)
        j.sweep = SweepSpec{static_cast<int>(gen::uniform(rng, 3, 5)),
                            static_cast<int>(gen::uniform(rng, 2, 7))};
      else
        j.n = static_cast<int>(gen::uniform(rng, 3, 6));
    }
    switch (j.kind) {
    case JobKind::Scala:
      j.bundles = names(1);
      break;
    case JobKind::EulerTwo:
    case JobKind::K0Invariants:
      j.bundles = names(static_cast<int>(gen::uniform(rng, 1, 4)));
      break;
    case JobKind::EulerBicharTwo:
      j.bundles = names(static_cast<int>(gen::uniform(rng, 1, 3)));
      j.targets = names(static_cast<int>(gen::uniform(rng, 1, 3)));
      break;
    case JobKind::EulerThree:
      j.bundles = names(3);
      break;
    case JobKind::SymPowerTwo:
      j.bundles = {"B0"};
      j.k = static_cast<int>(gen::uniform(rng, 1, 7));
      j.exterior = gen::uniform(rng, 0, 1);
      break;
    case JobKind::HTop:
      j.k = static_cast<int>(gen::uniform(rng, 1, 3));
      j.q = gen::uniform(rng, 0, 3);
      for (const Subset &s : {Subset{1}, Subset{1, j.k}})
        j.h2.emplace_back(s, gen::uniform(rng, 0, 5));
      break;
    case JobKind::H0:
      for (int x = 0; x < 3; ++x)
        j.h0.push_back(gen::uniform(rng, 0, 4));
      break;
    case JobKind::VerifyComplexes:
      j.kMax = static_cast<int>(gen::uniform(rng, 1, 7));
      break;
    }
    f.jobs.push_back(std::move(j));
  }
  return f;
}

} // namespace

TEST(JobFile, SamplesRoundTrip) {
  for (const char *name : {"scala_p2.json", "fixtures.json", "k3_sweep.json",
                           "twisted_quadric.json", "missing_h2.json"}) {
    const JobFile f = sample(name);
    const JobFile again = parseJobFile(toJson(f));
    EXPECT_EQ(again, f) << name;
    EXPECT_EQ(parseJobFileText(toJson(again).dump(2)), f) << name;
  }
}

TEST(JobFile, RandomRoundTrip) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const JobFile f = randomJobFile(rng);
    const Json j = toJson(f);
    JobFile back;
    ASSERT_NO_THROW(back = parseJobFileText(j.dump())) << j.dump(2);
    ASSERT_EQ(back, f) << j.dump(2);
    ASSERT_EQ(toJson(back).dump(), j.dump());
  }
}

TEST(JobFile, ExplicitSurfaceAndDefaults) {
  const JobFile f = sample("twisted_quadric.json");
  EXPECT_TRUE(f.surface.preset.empty());
  EXPECT_EQ(f.surface.build().chiO(), 1);
  ASSERT_TRUE(f.lineBundle.has_value());
  EXPECT_EQ(f.bundles[2].rank, -1);
  EXPECT_EQ(f.bundles[2].c2num, Rational(3, 2));
  EXPECT_EQ(f.jobs[3].kMax, 4);
  const JobFile g = parseJobFileText(withJobs(R"([{"id": "a", "kind": "scala", "bundle": "O", "n": 2}])"));
  EXPECT_EQ(g.bundles[0].rank, 1);
  EXPECT_EQ(g.bundles[0].c2num, 0);
}

TEST(Validation, UndefinedBundleNamesPathAndName) {
  try {
    sample("undefined_bundle.json");
    FAIL() << "expected an error";
  } catch (const JobFileError &e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("jobs[0].bundles[1]"), std::string::npos) << msg;
    EXPECT_NE(msg.find("'E9'"), std::string::npos) << msg;
    EXPECT_NE(msg.find("'bad'"), std::string::npos) << msg;
  }
}

TEST(Validation, Preconditions) {
  const std::vector<std::pair<std::string, std::string>> cases{
      {R"([{"id": "t", "kind": "euler_three", "bundles": ["O", "O", "O"], "n": 2}])", "n >= 3"},
      {R"([{"id": "t", "kind": "euler_three", "bundles": ["O", "O"], "n": 3}])", "expected 3"},
      {R"([{"id": "s", "kind": "sym_power_two", "bundle": "T", "k": 2}])", "line bundle"},
      {R"([{"id": "s", "kind": "sym_power_two", "bundle": "O", "k": 8}])", "jobs[0].k"},
      {R"([{"id": "h", "kind": "h0", "n": 1, "h0": [1, 2]}])", "n >= k"},
      {R"([{"id": "h", "kind": "euler_two", "bundles": ["O"], "sweep": {"parameter": "n", "from": 1, "to": 2}}])",
       "no parameter n"},
      {R"([{"id": "x", "kind": "scala", "bundle": "O"}])", "missing field 'n'"},
      {R"([{"id": "x", "kind": "frobnicate"}])", "unknown job kind"},
      {R"([{"id": "x", "kind": "scala", "bundle": "O", "n": 1}, {"id": "x", "kind": "scala", "bundle": "O", "n": 1}])",
       "duplicate job id"},
      {R"([{"id": "x", "kind": "scala", "bundle": "O", "n": 1, "colour": 3}])", "colour"},
      {R"([{"id": "v", "kind": "verify_complexes", "k_max": 9}])", "k_max"},
      {R"([{"id": "h", "kind": "h_top", "n": 2, "k": 1, "q": 0, "h2": [{"subset": [2], "value": 1}]}])",
       "out of range"},
  };
  for (const auto &[jobs, needle] : cases) {
    const std::string msg = errorOf(withJobs(jobs));
    EXPECT_NE(msg.find(needle), std::string::npos) << jobs << " -> " << msg;
    EXPECT_NE(msg.find("jobs["), std::string::npos) << msg;
  }
}

TEST(Validation, SurfaceAndSyntax) {
  EXPECT_NE(errorOf(R"({"surface": {"name": "bad", "gram": [[1]], "canonical": [-2], "c2": 3}, "jobs": []})")
                .find("surface"),
            std::string::npos);
  EXPECT_NE(errorOf(R"({"surface": {"preset": "P2"}, "bundles": [{"name": "O", "c1": [0, 1]}], "jobs": []})")
                .find("bundles[0].c1"),
            std::string::npos);
  EXPECT_NE(errorOf(R"({"surface": {"preset": "P2"}, "jobs": [)").find("line 1"), std::string::npos);
  EXPECT_NE(errorOf(R"({"surface": {"preset": "P2"}, "bundles": [{"name": "O", "c2": "1/0"}], "jobs": []})"),
            "");
  EXPECT_THROW(loadJobFile(kSamples + "/does_not_exist.json"), JobFileError);
}

TEST(Runner, FixtureValues) {
  const JobFile f = sample("fixtures.json");
  const ResultTable t = runJobs(f);
  const SurfaceModel P2 = SurfaceModel::projectivePlane();
  const ChernCharacter O = ChernCharacter::unit(1), O1 = chLineBundle(DivisorClass({1}), P2);
  EXPECT_EQ(rowById(t, "two-OO").value, "1");
  EXPECT_EQ(rowById(t, "bichar-OO").value, "2");
  EXPECT_EQ(rowById(t, "three-OOO").value, "1");
  for (int n = 3; n <= 6; ++n)
    EXPECT_EQ(rowById(t, "three-sweep[n=" + std::to_string(n) + "]").value, "1");
  EXPECT_EQ(rowById(t, "k0-OOO").value, "5");
  EXPECT_EQ(rowById(t, "htop").value, "3");
  EXPECT_EQ(rowById(t, "h0").value, "6");
  EXPECT_EQ(rowById(t, "sym2-O1").value, toString(symPowerEulerTwo(P2, O1, 2, O).value()));
  EXPECT_EQ(rowById(t, "alt2-O1").value, toString(altPowerEulerTwo(P2, O1, 2, O).value()));
  EXPECT_EQ(parseRational(rowById(t, "sym2-O1").value) + parseRational(rowById(t, "alt2-O1").value),
            eulerTwo(P2, {O1, O1}, O).value());
  for (const auto &r : t) {
    EXPECT_EQ(r.status, "ok") << r.id << ": " << r.message;
    EXPECT_EQ(toString(parseRational(r.value)), r.value);
    Rational sum = 0;
    for (const auto &term : r.terms)
      sum += term.value();
    if (!r.terms.empty()) {
      EXPECT_EQ(toString(sum), r.value) << r.id;
    }
  }
  EXPECT_EQ(exitCodeFor(t), 0);
}

TEST(Runner, SweepsAndEmptyRanges) {
  const ResultTable t = runJobs(sample("k3_sweep.json"));
  ASSERT_EQ(t.size(), 6u);
  for (int n = 1; n <= 5; ++n)
    EXPECT_EQ(t[n - 1].value, std::to_string(2 * n));
  EXPECT_EQ(t[5].id, "three");
  EXPECT_EQ(t[5].value, "38");
  const JobFile f = sample("k3_sweep.json");
  EXPECT_TRUE(runJob(f, f.jobs[1]).empty());
}

TEST(Runner, ErrorsBecomeRows) {
  const ResultTable t = runJobs(sample("missing_h2.json"));
  ASSERT_FALSE(t.empty());
  bool sawError = false;
  for (const auto &r : t)
    if (r.status == "error") {
      sawError = true;
      EXPECT_TRUE(r.value.empty());
      EXPECT_NE(r.message.find(r.id), std::string::npos) << r.message;
    }
  EXPECT_TRUE(sawError);
  EXPECT_EQ(exitCodeFor(t), 1);
  ResultTable failing = t;
  failing.push_back(makeRow("v", "verify_complexes", Json::object()));
  failing.back().status = "FAIL";
  EXPECT_EQ(exitCodeFor(failing), 2);
}

TEST(Runner, ThreadsDoNotChangeOutput) {
  for (const char *name : {"fixtures.json", "twisted_quadric.json", "k3_sweep.json"}) {
    const JobFile f = sample(name);
    const std::string serial = toJson(runJobs(f, {false, 1})).dump();
    EXPECT_EQ(toJson(runJobs(f, {false, 4})).dump(), serial) << name;
    EXPECT_EQ(toJson(runJobs(f, {true, 3})).dump(), serial) << name;
  }
}

TEST(Runner, VerifyRowsPass) {
  const ResultTable t = verifyComplexes(4, "v");
  std::size_t perPair = 0;
  for (const auto &r : t) {
    EXPECT_EQ(r.status, "PASS") << r.id;
    for (const auto &[name, ok] : r.checks)
      EXPECT_TRUE(ok) << r.id << " " << name;
    perPair += r.params.contains("l");
  }
  EXPECT_EQ(perPair, 10u);
  EXPECT_EQ(exitCodeFor(t), 0);
}
