#pragma once

// JSON job files: a surface, named bundles, an optional twisting line
// bundle and a list of jobs.  Rationals are written as strings "p/q" (plain
// integers are accepted on input).  Validation errors carry the JSON path of
// the offending value.

#include "hilbtaut/euler.hpp"
#include "hilbtaut/surface.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace hilbtaut {

using Json = nlohmann::json;

/// Malformed or inconsistent job file; what() names the JSON path.
class JobFileError : public Error {
public:
  using Error::Error;
};

struct SurfaceSpec {
  std::string preset; // "P2", "P1xP1", "K3", or empty for an explicit surface
  long selfIntersection = 2;
  std::string name;
  std::vector<std::vector<long>> gram;
  std::vector<long> canonical;
  long c2 = 0;

  SurfaceModel build() const {
    if (preset == "P2")
      return SurfaceModel::projectivePlane();
    if (preset == "P1xP1")
      return SurfaceModel::quadric();
    if (preset == "K3")
      return SurfaceModel::k3(selfIntersection);
    if (!preset.empty())
      throw Error("unknown surface preset '" + preset + "'");
    return SurfaceModel(name, gram, canonical, c2);
  }
  friend bool operator==(const SurfaceSpec &, const SurfaceSpec &) = default;
};

enum class JobKind {
  EulerTwo,
  EulerBicharTwo,
  EulerThree,
  SymPowerTwo,
  Scala,
  HTop,
  H0,
  K0Invariants,
  VerifyComplexes
};

inline const std::map<std::string, JobKind> &jobKindNames() {
  static const std::map<std::string, JobKind> names{
      {"euler_two", JobKind::EulerTwo},       {"euler_bichar_two", JobKind::EulerBicharTwo},
      {"euler_three", JobKind::EulerThree},   {"sym_power_two", JobKind::SymPowerTwo},
      {"scala", JobKind::Scala},              {"h_top", JobKind::HTop},
      {"h0", JobKind::H0},                    {"k0_invariants", JobKind::K0Invariants},
      {"verify_complexes", JobKind::VerifyComplexes}};
  return names;
}

inline std::string toString(JobKind k) {
  for (const auto &[name, kind] : jobKindNames())
    if (kind == k)
      return name;
  return "?";
}

inline bool usesN(JobKind k) {
  return k == JobKind::Scala || k == JobKind::EulerThree || k == JobKind::K0Invariants ||
         k == JobKind::HTop || k == JobKind::H0;
}

struct SweepSpec {
  int from = 1;
  int to = 0;
  friend bool operator==(const SweepSpec &, const SweepSpec &) = default;
};

struct Job {
  std::string id;
  JobKind kind = JobKind::Scala;
  std::optional<int> n;
  std::vector<std::string> bundles; // E_1..E_k (a single entry for scala, sym_power_two)
  std::vector<std::string> targets; // F_1..F_k^ for euler_bichar_two
  int k = 0;                        // sym_power_two exponent, h_top tensor length
  bool exterior = false;            // sym_power_two: Lambda^k instead of S^k
  Integer q = 0;                    // h_top
  std::vector<std::pair<Subset, Integer>> h2;
  std::vector<Integer> h0;
  int kMax = 7; // verify_complexes
  std::optional<SweepSpec> sweep;

  friend bool operator==(const Job &, const Job &) = default;
};

struct JobFile {
  SurfaceSpec surface;
  std::vector<BundleSpec> bundles;
  std::optional<DivisorClass> lineBundle;
  std::vector<Job> jobs;

  friend bool operator==(const JobFile &, const JobFile &) = default;
};

namespace detail {

inline std::string at(const std::string &path, const std::string &key) {
  return path.empty() ? key : path + "." + key;
}
inline std::string at(const std::string &path, std::size_t idx) {
  return path + "[" + std::to_string(idx) + "]";
}

[[noreturn]] inline void fail(const std::string &path, const std::string &msg) {
  throw JobFileError(path + ": " + msg);
}

inline const Json &field(const Json &obj, const std::string &key, const std::string &path) {
  if (!obj.is_object())
    fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end())
    fail(path, "missing field '" + key + "'");
  return *it;
}

inline long asLong(const Json &v, const std::string &path) {
  if (!v.is_number_integer())
    fail(path, "expected an integer");
  return v.get<long>();
}

inline int asInt(const Json &v, const std::string &path) {
  const long x = asLong(v, path);
  if (x < -1000000 || x > 1000000)
    fail(path, "integer out of range");
  return static_cast<int>(x);
}

inline Rational asRational(const Json &v, const std::string &path) {
  if (v.is_number_integer())
    return Rational(v.get<long>());
  if (v.is_string()) {
    try {
      return parseRational(v.get<std::string>());
    } catch (const Error &e) {
      fail(path, e.what());
    }
  }
  fail(path, "expected a rational (integer or string \"p/q\")");
}

inline Integer asInteger(const Json &v, const std::string &path) {
  const Rational q = asRational(v, path);
  if (!isInteger(q))
    fail(path, "expected an integer");
  return q.get_num();
}

inline std::string asString(const Json &v, const std::string &path) {
  if (!v.is_string())
    fail(path, "expected a string");
  return v.get<std::string>();
}

inline std::vector<std::string> asStrings(const Json &v, const std::string &path) {
  if (!v.is_array())
    fail(path, "expected an array of names");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(asString(v[i], at(path, i)));
  return out;
}

inline DivisorClass asDivisor(const Json &v, const std::string &path) {
  if (!v.is_array())
    fail(path, "expected an array of coordinates");
  std::vector<Rational> c;
  for (std::size_t i = 0; i < v.size(); ++i)
    c.push_back(asRational(v[i], at(path, i)));
  return DivisorClass(std::move(c));
}

inline Json ratJson(const Rational &q) { return toString(q); }

inline Json divisorJson(const DivisorClass &d) {
  Json a = Json::array();
  for (const auto &c : d.coeffs())
    a.push_back(ratJson(c));
  return a;
}

inline void checkKeys(const Json &obj, const std::set<std::string> &allowed,
                      const std::string &path) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key()))
      fail(at(path, it.key()), "unknown field");
}

inline SurfaceSpec parseSurface(const Json &v, const std::string &path) {
  if (!v.is_object())
    fail(path, "expected an object");
  SurfaceSpec s;
  if (v.contains("preset")) {
    checkKeys(v, {"preset", "self_intersection"}, path);
    s.preset = asString(v["preset"], at(path, "preset"));
    if (s.preset != "P2" && s.preset != "P1xP1" && s.preset != "K3")
      fail(at(path, "preset"), "unknown preset '" + s.preset + "' (expected P2, P1xP1 or K3)");
    if (v.contains("self_intersection")) {
      if (s.preset != "K3")
        fail(at(path, "self_intersection"), "only the K3 preset takes a self-intersection");
      s.selfIntersection = asLong(v["self_intersection"], at(path, "self_intersection"));
    }
  } else {
    checkKeys(v, {"name", "gram", "canonical", "c2"}, path);
    s.name = v.contains("name") ? asString(v["name"], at(path, "name")) : "X";
    const Json &g = field(v, "gram", path);
    if (!g.is_array())
      fail(at(path, "gram"), "expected an array of rows");
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (!g[i].is_array())
        fail(at(at(path, "gram"), i), "expected an array");
      std::vector<long> row;
      for (std::size_t j = 0; j < g[i].size(); ++j)
        row.push_back(asLong(g[i][j], at(at(at(path, "gram"), i), j)));
      s.gram.push_back(std::move(row));
    }
    const Json &kc = field(v, "canonical", path);
    if (!kc.is_array())
      fail(at(path, "canonical"), "expected an array");
    for (std::size_t i = 0; i < kc.size(); ++i)
      s.canonical.push_back(asLong(kc[i], at(at(path, "canonical"), i)));
    s.c2 = asLong(field(v, "c2", path), at(path, "c2"));
  }
  try {
    s.build();
  } catch (const Error &e) {
    fail(path, e.what());
  }
  return s;
}

inline Job parseJob(const Json &v, const std::string &path) {
  if (!v.is_object())
    fail(path, "expected an object");
  checkKeys(v, {"id", "kind", "n", "bundles", "bundle", "targets", "k", "exterior", "q", "h2", "h0",
                "k_max", "sweep"},
            path);
  Job j;
  j.id = asString(field(v, "id", path), at(path, "id"));
  const std::string kind = asString(field(v, "kind", path), at(path, "kind"));
  auto kit = jobKindNames().find(kind);
  if (kit == jobKindNames().end())
    fail(at(path, "kind"), "unknown job kind '" + kind + "'");
  j.kind = kit->second;
  if (v.contains("n"))
    j.n = asInt(v["n"], at(path, "n"));
  if (v.contains("bundles"))
    j.bundles = asStrings(v["bundles"], at(path, "bundles"));
  if (v.contains("bundle")) {
    if (v.contains("bundles"))
      fail(path, "give either 'bundle' or 'bundles', not both");
    j.bundles = {asString(v["bundle"], at(path, "bundle"))};
  }
  if (v.contains("targets"))
    j.targets = asStrings(v["targets"], at(path, "targets"));
  if (v.contains("k"))
    j.k = asInt(v["k"], at(path, "k"));
  if (v.contains("exterior")) {
    if (!v["exterior"].is_boolean())
      fail(at(path, "exterior"), "expected true or false");
    j.exterior = v["exterior"].get<bool>();
  }
  if (v.contains("q"))
    j.q = asInteger(v["q"], at(path, "q"));
  if (v.contains("h2")) {
    const Json &h = v["h2"];
    const std::string hp = at(path, "h2");
    if (!h.is_array())
      fail(hp, "expected an array of {subset, value}");
    for (std::size_t i = 0; i < h.size(); ++i) {
      const std::string ep = at(hp, i);
      const Json &sub = field(h[i], "subset", ep);
      if (!sub.is_array())
        fail(at(ep, "subset"), "expected an array");
      Subset s;
      for (std::size_t x = 0; x < sub.size(); ++x)
        s.push_back(asInt(sub[x], at(at(ep, "subset"), x)));
      std::sort(s.begin(), s.end());
      j.h2.emplace_back(std::move(s), asInteger(field(h[i], "value", ep), at(ep, "value")));
    }
  }
  if (v.contains("h0")) {
    const Json &h = v["h0"];
    if (!h.is_array())
      fail(at(path, "h0"), "expected an array");
    for (std::size_t i = 0; i < h.size(); ++i)
      j.h0.push_back(asInteger(h[i], at(at(path, "h0"), i)));
  }
  if (v.contains("k_max"))
    j.kMax = asInt(v["k_max"], at(path, "k_max"));
  if (v.contains("sweep")) {
    const Json &s = v["sweep"];
    const std::string sp = at(path, "sweep");
    checkKeys(s, {"parameter", "from", "to"}, sp);
    const std::string param = asString(field(s, "parameter", sp), at(sp, "parameter"));
    if (param != "n")
      fail(at(sp, "parameter"), "only the parameter 'n' can be swept");
    j.sweep = SweepSpec{asInt(field(s, "from", sp), at(sp, "from")),
                        asInt(field(s, "to", sp), at(sp, "to"))};
  }
  return j;
}

/// Checks names and per-kind preconditions against the file's bundles.
inline void validateJob(const Job &j, const std::map<std::string, BundleSpec> &bundles,
                        const std::string &path) {
  auto resolve = [&](const std::vector<std::string> &names, const std::string &key) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (!bundles.count(names[i]))
        fail(at(at(path, key), i), "job '" + j.id + "': undefined bundle '" + names[i] + "'");
  };
  resolve(j.bundles, "bundles");
  resolve(j.targets, "targets");
  auto needBundles = [&](std::size_t lo, std::size_t hi) {
    if (j.bundles.size() < lo || j.bundles.size() > hi)
      fail(path, "job '" + j.id + "': expected " +
                     (lo == hi ? std::to_string(lo) : "at least " + std::to_string(lo)) +
                     " bundle(s), got " + std::to_string(j.bundles.size()));
  };
  if (j.sweep && !usesN(j.kind))
    fail(at(path, "sweep"), "job '" + j.id + "': kind " + toString(j.kind) + " has no parameter n");
  if (usesN(j.kind) && !j.n && !j.sweep)
    fail(path, "job '" + j.id + "': missing field 'n'");
  std::vector<int> ns;
  if (j.sweep)
    for (int n = j.sweep->from; n <= j.sweep->to; ++n)
      ns.push_back(n);
  else if (j.n)
    ns.push_back(*j.n);
  for (int n : ns)
    if (n < 1)
      fail(path, "job '" + j.id + "': n must be positive");
  switch (j.kind) {
  case JobKind::Scala:
    needBundles(1, 1);
    break;
  case JobKind::EulerTwo:
  case JobKind::K0Invariants:
    needBundles(1, 62);
    break;
  case JobKind::EulerBicharTwo:
    needBundles(1, 24);
    if (j.targets.empty() || j.targets.size() > 24)
      fail(at(path, "targets"), "job '" + j.id + "': expected between 1 and 24 target bundles");
    break;
  case JobKind::EulerThree:
    needBundles(3, 3);
    for (int n : ns)
      if (n < 3)
        fail(path, "job '" + j.id + "': euler_three requires n >= 3");
    break;
  case JobKind::SymPowerTwo:
    needBundles(1, 1);
    if (j.k < 1 || j.k > kMaxProjectorK)
      fail(at(path, "k"), "job '" + j.id + "': k must lie in 1.." + std::to_string(kMaxProjectorK));
    if (bundles.at(j.bundles[0]).rank != 1)
      fail(at(path, "bundles"), "job '" + j.id + "': sym_power_two needs a line bundle");
    break;
  case JobKind::HTop:
    if (j.k < 1)
      fail(at(path, "k"), "job '" + j.id + "': k must be positive");
    if (j.q < 0)
      fail(at(path, "q"), "job '" + j.id + "': q must be non-negative");
    for (const auto &[s, val] : j.h2) {
      for (int t : s)
        if (t < 1 || t > j.k)
          fail(at(path, "h2"), "job '" + j.id + "': subset element out of range 1..k");
      if (val < 0)
        fail(at(path, "h2"), "job '" + j.id + "': h2 values must be non-negative");
    }
    break;
  case JobKind::H0:
    for (int n : ns)
      if (n < static_cast<int>(j.h0.size()))
        fail(path, "job '" + j.id + "': h0 requires n >= k");
    for (const auto &v : j.h0)
      if (v < 0)
        fail(at(path, "h0"), "job '" + j.id + "': h0 values must be non-negative");
    break;
  case JobKind::VerifyComplexes:
    if (j.kMax < 1 || j.kMax > kMaxProjectorK)
      fail(at(path, "k_max"),
           "job '" + j.id + "': k_max must lie in 1.." + std::to_string(kMaxProjectorK));
    break;
  }
}

} // namespace detail

inline JobFile parseJobFile(const Json &root) {
  using namespace detail;
  if (!root.is_object())
    fail("$", "expected a JSON object");
  checkKeys(root, {"surface", "bundles", "line_bundle", "jobs"}, "");
  JobFile f;
  f.surface = parseSurface(field(root, "surface", "$"), "surface");
  const SurfaceModel S = f.surface.build();
  std::map<std::string, BundleSpec> byName;
  if (root.contains("bundles")) {
    const Json &bs = root["bundles"];
    if (!bs.is_array())
      fail("bundles", "expected an array");
    for (std::size_t i = 0; i < bs.size(); ++i) {
      const std::string p = at("bundles", i);
      checkKeys(bs[i], {"name", "rank", "c1", "c2"}, p);
      BundleSpec b;
      b.name = asString(field(bs[i], "name", p), at(p, "name"));
      b.rank = bs[i].contains("rank") ? asLong(bs[i]["rank"], at(p, "rank")) : 1;
      b.c1 = bs[i].contains("c1") ? asDivisor(bs[i]["c1"], at(p, "c1"))
                                  : DivisorClass::zero(S.picardRank());
      b.c2num = bs[i].contains("c2") ? asRational(bs[i]["c2"], at(p, "c2")) : Rational(0);
      if (b.c1.size() != S.picardRank())
        fail(at(p, "c1"), "length " + std::to_string(b.c1.size()) + " differs from Picard rank " +
                              std::to_string(S.picardRank()));
      if (!byName.emplace(b.name, b).second)
        fail(at(p, "name"), "duplicate bundle name '" + b.name + "'");
      f.bundles.push_back(std::move(b));
    }
  }
  if (root.contains("line_bundle")) {
    f.lineBundle = asDivisor(root["line_bundle"], "line_bundle");
    if (f.lineBundle->size() != S.picardRank())
      fail("line_bundle", "length differs from the Picard rank");
  }
  const Json &js = field(root, "jobs", "$");
  if (!js.is_array())
    fail("jobs", "expected an array");
  std::set<std::string> ids;
  for (std::size_t i = 0; i < js.size(); ++i) {
    const std::string p = at("jobs", i);
    Job j = parseJob(js[i], p);
    if (!ids.insert(j.id).second)
      fail(at(p, "id"), "duplicate job id '" + j.id + "'");
    validateJob(j, byName, p);
    f.jobs.push_back(std::move(j));
  }
  return f;
}

inline JobFile parseJobFileText(const std::string &text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error &e) {
    throw JobFileError(std::string("JSON syntax error: ") + e.what());
  }
  return parseJobFile(root);
}

inline JobFile loadJobFile(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw JobFileError("cannot open job file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parseJobFileText(ss.str());
}

inline Json toJson(const Job &j) {
  using detail::ratJson;
  Json o{{"id", j.id}, {"kind", toString(j.kind)}};
  if (j.n)
    o["n"] = *j.n;
  if (!j.bundles.empty())
    o["bundles"] = j.bundles;
  if (!j.targets.empty())
    o["targets"] = j.targets;
  if (j.kind == JobKind::SymPowerTwo || j.kind == JobKind::HTop || j.k != 0)
    o["k"] = j.k;
  if (j.kind == JobKind::SymPowerTwo || j.exterior)
    o["exterior"] = j.exterior;
  if (j.kind == JobKind::HTop || j.q != 0 || !j.h2.empty()) {
    o["q"] = ratJson(Rational(j.q));
    Json h = Json::array();
    for (const auto &[s, v] : j.h2)
      h.push_back({{"subset", s}, {"value", ratJson(Rational(v))}});
    o["h2"] = h;
  }
  if (j.kind == JobKind::H0 || !j.h0.empty()) {
    Json h = Json::array();
    for (const auto &v : j.h0)
      h.push_back(ratJson(Rational(v)));
    o["h0"] = h;
  }
  if (j.kind == JobKind::VerifyComplexes || j.kMax != 7)
    o["k_max"] = j.kMax;
  if (j.sweep)
    o["sweep"] = {{"parameter", "n"}, {"from", j.sweep->from}, {"to", j.sweep->to}};
  return o;
}

inline Json toJson(const JobFile &f) {
  Json root;
  if (!f.surface.preset.empty()) {
    root["surface"] = {{"preset", f.surface.preset}};
    if (f.surface.preset == "K3")
      root["surface"]["self_intersection"] = f.surface.selfIntersection;
  } else {
    root["surface"] = {{"name", f.surface.name},
                       {"gram", f.surface.gram},
                       {"canonical", f.surface.canonical},
                       {"c2", f.surface.c2}};
  }
  Json bs = Json::array();
  for (const auto &b : f.bundles)
    bs.push_back({{"name", b.name},
                  {"rank", b.rank},
                  {"c1", detail::divisorJson(b.c1)},
                  {"c2", detail::ratJson(b.c2num)}});
  root["bundles"] = bs;
  if (f.lineBundle)
    root["line_bundle"] = detail::divisorJson(*f.lineBundle);
  Json js = Json::array();
  for (const auto &j : f.jobs)
    js.push_back(toJson(j));
  root["jobs"] = js;
  return root;
}

} // namespace hilbtaut
