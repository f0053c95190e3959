#pragma once

// Euler characteristics of tensor products of tautological bundles on
// Hilbert schemes of points, evaluated through Hirzebruch-Riemann-Roch on
// the surface.  Each engine returns the value together with the list of
// terms it is the sum of.

#include "hilbtaut/complexes.hpp"
#include "hilbtaut/graded.hpp"
#include "hilbtaut/surface.hpp"
#include "hilbtaut/symgroup.hpp"

#include <map>
#include <string>
#include <vector>

namespace hilbtaut {

struct ChiTerm {
  std::string label;
  Rational coefficient;
  std::vector<Rational> factors;

  Rational value() const {
    Rational v = coefficient;
    for (const auto &f : factors)
      v *= f;
    return v;
  }
};

/// A value with its term breakdown; the value is always the sum of the
/// terms, re-checked on construction.
class ChiResult {
public:
  ChiResult() = default;
  explicit ChiResult(std::vector<ChiTerm> terms) : terms_(std::move(terms)) {
    value_ = reconstruct();
  }
  ChiResult(Rational value, std::vector<ChiTerm> terms)
      : value_(std::move(value)), terms_(std::move(terms)) {
    if (reconstruct() != value_)
      throw Error("term breakdown does not sum to the stated value");
  }

  const Rational &value() const { return value_; }
  const std::vector<ChiTerm> &terms() const { return terms_; }
  Rational reconstruct() const {
    Rational s = 0;
    for (const auto &t : terms_)
      s += t.value();
    return s;
  }

private:
  Rational value_ = 0;
  std::vector<ChiTerm> terms_;
};

/// Inputs shared by the engines: the E_i may be virtual, L must be the
/// class of a line bundle.
struct ChiRequest {
  SurfaceModel surface;
  std::vector<ChernCharacter> bundles;
  ChernCharacter L;
  int n = 2;
};

inline void requireLineBundle(const ChernCharacter &L, const SurfaceModel &S,
                              const std::string &what = "L") {
  S.requireRank(L.ch1);
  if (L.ch0 != 1 || L.ch2 != S.pairing(L.ch1, L.ch1) / 2)
    throw Error(what + " is not the Chern character of a line bundle");
}

struct EulerOptions {
  bool forceBruteN = false; // N(k,l) from the complexes for k <= kMaxProjectorK
  int kGuard = 24;          // refuse eulerTwo above this k unless raised
};

/// Absolute limit for the 2^{k-1} subset enumeration in eulerTwo.
inline constexpr int kHardCapEulerTwo = 62;

namespace detail {

inline ChernCharacter tensorAll(const std::vector<ChernCharacter> &xs, std::uint64_t mask,
                                const ChernCharacter &L, const SurfaceModel &S) {
  ChernCharacter r = L;
  for (std::size_t t = 0; t < xs.size(); ++t)
    if (mask >> t & 1u)
      r = chTensor(r, xs[t], S);
  return r;
}

inline std::string subsetLabel(std::uint64_t mask, std::size_t k) {
  std::string s = "{";
  bool first = true;
  for (std::size_t t = 0; t < k; ++t)
    if (mask >> t & 1u) {
      s += (first ? "" : ",") + std::to_string(t + 1);
      first = false;
    }
  return s + "}";
}

inline Integer nValue(int k, int ell, const EulerOptions &opt) {
  if (opt.forceBruteN && k <= kMaxProjectorK) {
    const NklReport r = NklBrute(k, ell);
    if (r.kernelMethod != r.alternatingMethod)
      throw Error("N(" + std::to_string(k) + "," + std::to_string(ell) +
                  "): brute-force methods disagree");
    return r.kernelMethod;
  }
  return NklClosedForm(k, ell);
}

} // namespace detail

/// chi(F^[n] (x) D_L) = chi(F (x) L) s^{n-1} chi(L).
inline Rational chiScala(const SurfaceModel &S, int n, const ChernCharacter &F,
                         const ChernCharacter &L) {
  if (n < 1)
    throw Error("chiScala requires n >= 1");
  requireLineBundle(L, S);
  return hrrChi(chTensor(F, L, S), S) * sChi(n - 1, hrrChi(L, S));
}

/// chi(E_1^[2] (x) ... (x) E_k^[2] (x) D_L).
inline ChiResult eulerTwo(const SurfaceModel &S, const std::vector<ChernCharacter> &E,
                          const ChernCharacter &L, const EulerOptions &opt = {}) {
  const int k = static_cast<int>(E.size());
  if (k < 1)
    throw Error("eulerTwo requires at least one bundle");
  if (k > kHardCapEulerTwo || k > opt.kGuard)
    throw Error("eulerTwo: k=" + std::to_string(k) + " exceeds the limit " +
                std::to_string(std::min(opt.kGuard, kHardCapEulerTwo)));
  requireLineBundle(L, S);
  const std::uint64_t full = k == 64 ? ~0ull : (1ull << k) - 1;
  std::vector<ChiTerm> terms;
  // P runs over the subsets containing 1
  for (std::uint64_t rest = 0; rest < (1ull << (k - 1)); ++rest) {
    const std::uint64_t P = 1u | rest << 1;
    terms.push_back({"P=" + detail::subsetLabel(P, k), 1,
                     {hrrChi(detail::tensorAll(E, P, L, S), S),
                      hrrChi(detail::tensorAll(E, full & ~P, L, S), S)}});
  }
  const ChernCharacter all = detail::tensorAll(E, full, chTensor(L, L, S), S);
  for (int ell = 1; ell < k; ++ell) {
    const Integer N = detail::nValue(k, ell, opt);
    terms.push_back({"N(" + std::to_string(k) + "," + std::to_string(ell) + ")*chi(S^" +
                         std::to_string(ell - 1) + "Omega E L^2)",
                     Rational(-N),
                     {hrrChi(chTensor(chSymCotangent(ell - 1, S), all, S), S)}});
  }
  return ChiResult(std::move(terms));
}

namespace detail {

inline void requireRankOne(const ChernCharacter &E) {
  if (E.ch0 != 1)
    throw Error("symmetric and exterior powers are implemented for rank-one E only");
}

inline std::vector<ChiTerm> powerSubtraction(const SurfaceModel &S, const ChernCharacter &E, int k,
                                             const ChernCharacter &L, SkCharacter character) {
  std::vector<ChiTerm> terms;
  const ChernCharacter all = chTensor(chPower(E, k, S), chTensor(L, L, S), S);
  for (int ell = 1; ell <= k; ++ell) {
    const Integer m = powerMultiplicity(buildRComplex(k, ell), character);
    terms.push_back({"m_" + std::to_string(ell) + "*chi(S^" + std::to_string(ell - 1) +
                         "Omega E^" + std::to_string(k) + " L^2)",
                     Rational(-m), {hrrChi(chTensor(chSymCotangent(ell - 1, S), all, S), S)}});
  }
  return terms;
}

inline void requirePowerRange(int k) {
  if (k < 1 || k > kMaxProjectorK)
    throw Error("power of E^[2] requires 1 <= k <= " + std::to_string(kMaxProjectorK));
}

} // namespace detail

/// chi(S^k E^[2] (x) D_L) for a line bundle E.
inline ChiResult symPowerEulerTwo(const SurfaceModel &S, const ChernCharacter &E, int k,
                                  const ChernCharacter &L) {
  detail::requireRankOne(E);
  detail::requirePowerRange(k);
  requireLineBundle(L, S);
  auto chiPow = [&](int j) { return hrrChi(chTensor(chPower(E, j, S), L, S), S); };
  std::vector<ChiTerm> terms;
  for (int j = 0; 2 * j < k; ++j)
    terms.push_back({"split " + std::to_string(j) + "+" + std::to_string(k - j), 1,
                     {chiPow(j), chiPow(k - j)}});
  if (k % 2 == 0)
    terms.push_back({"split " + std::to_string(k / 2) + "+" + std::to_string(k / 2), 1,
                     {sChi(2, chiPow(k / 2))}});
  for (auto &t : detail::powerSubtraction(S, E, k, L, SkCharacter::Trivial))
    terms.push_back(std::move(t));
  return ChiResult(std::move(terms));
}

/// chi(Lambda^k E^[2] (x) D_L) for a line bundle E.  Only the splits whose
/// stabilizer has trivial sign survive: j = 0, 1 for k = 1 and j = 1 for k = 2.
inline ChiResult altPowerEulerTwo(const SurfaceModel &S, const ChernCharacter &E, int k,
                                  const ChernCharacter &L) {
  detail::requireRankOne(E);
  detail::requirePowerRange(k);
  requireLineBundle(L, S);
  auto chiPow = [&](int j) { return hrrChi(chTensor(chPower(E, j, S), L, S), S); };
  std::vector<ChiTerm> terms;
  if (k == 1)
    terms.push_back({"split 0+1", 1, {chiPow(0), chiPow(1)}});
  if (k == 2)
    terms.push_back({"split 1+1", 1, {binomial(chiPow(1), 2)}});
  for (auto &t : detail::powerSubtraction(S, E, k, L, SkCharacter::Sign))
    terms.push_back(std::move(t));
  return ChiResult(std::move(terms));
}

/// a(k, k^, l^) = 2^{k-1} sum_{j^=l^}^{k^} binom(k^, j^).
inline Integer bicharA(int k, int kh, int ellh) { return pow2(k - 1) * dimU(kh, ellh); }
/// b(k, l, k^) = 2^{k^-1} sum_{j=l}^{k} binom(k, j).
inline Integer bicharB(int k, int ell, int kh) { return pow2(kh - 1) * dimU(k, ell); }
/// c_+ and c_- as a pair.
inline std::pair<Integer, Integer> bicharC(int k, int kh, int ell, int ellh) {
  const Integer prod = dimU(k, ell) * dimU(kh, ellh);
  const Integer corr = binomial(k - 1, ell - 1) * binomial(kh - 1, ellh - 1);
  if ((prod + corr) % 2 != 0)
    throw Error("bicharacteristic coefficient c is not an integer");
  return {(prod + corr) / 2, (prod - corr) / 2};
}

/// sum_i (-1)^i dim Ext^i(E_1^[2] (x) ... (x) E_k^[2], F_1^[2] (x) ... (x) F_k^^[2]).
inline ChiResult eulerBicharTwo(const SurfaceModel &S, const std::vector<ChernCharacter> &E,
                                const std::vector<ChernCharacter> &F) {
  const int k = static_cast<int>(E.size());
  const int kh = static_cast<int>(F.size());
  if (k < 1 || kh < 1)
    throw Error("eulerBicharTwo requires k, k^ >= 1");
  if (k > 24 || kh > 24)
    throw Error("eulerBicharTwo: too many bundles");
  const ChernCharacter O = ChernCharacter::unit(S.picardRank());
  const std::uint64_t fullE = (1ull << k) - 1;
  const std::uint64_t fullF = (1ull << kh) - 1;
  const ChernCharacter allE = detail::tensorAll(E, fullE, O, S);
  const ChernCharacter allF = detail::tensorAll(F, fullF, O, S);
  const ChernCharacter omegaDual = chAnticanonical(S);
  const ChernCharacter tangent = chTangent(S);
  std::vector<ChiTerm> terms;
  for (std::uint64_t rest = 0; rest < (1ull << (k - 1)); ++rest) {
    const std::uint64_t P = 1u | rest << 1;
    for (std::uint64_t Q = 0; Q <= fullF; ++Q) {
      const ChernCharacter h1 =
          chHom(detail::tensorAll(E, P, O, S), detail::tensorAll(F, Q, O, S), S);
      const ChernCharacter h2 = chHom(detail::tensorAll(E, fullE & ~P, O, S),
                                      detail::tensorAll(F, fullF & ~Q, O, S), S);
      terms.push_back({"P=" + detail::subsetLabel(P, k) + " Q=" + detail::subsetLabel(Q, kh), 1,
                       {hrrChi(h1, S), hrrChi(h2, S)}});
    }
  }
  for (int lh = 1; lh <= kh; ++lh) {
    const ChernCharacter A = chHom(allE, chTensor(chSymCotangent(lh - 1, S), allF, S), S);
    terms.push_back({"a(" + std::to_string(lh) + ")*chi(A)", Rational(-bicharA(k, kh, lh)),
                     {hrrChi(A, S)}});
  }
  for (int l = 1; l <= k; ++l) {
    const ChernCharacter B =
        chTensor(omegaDual, chHom(chTensor(chSymCotangent(l - 1, S), allE, S), allF, S), S);
    terms.push_back({"b(" + std::to_string(l) + ")*chi(B)", Rational(-bicharB(k, l, kh)),
                     {hrrChi(B, S)}});
  }
  for (int l = 1; l <= k; ++l)
    for (int lh = 1; lh <= kh; ++lh) {
      const ChernCharacter C = chHom(chTensor(chSymCotangent(l - 1, S), allE, S),
                                     chTensor(chSymCotangent(lh - 1, S), allF, S), S);
      const auto [cp, cm] = bicharC(k, kh, l, lh);
      const std::string idx = "(" + std::to_string(l) + "," + std::to_string(lh) + ")";
      terms.push_back({"c+" + idx + "*chi(C)", Rational(cp), {hrrChi(C, S)}});
      terms.push_back(
          {"c+" + idx + "*chi(omega^v C)", Rational(cp), {hrrChi(chTensor(omegaDual, C, S), S)}});
      terms.push_back(
          {"c-" + idx + "*chi(T C)", Rational(-cm), {hrrChi(chTensor(tangent, C, S), S)}});
    }
  return ChiResult(std::move(terms));
}

/// chi(E_1^[n] (x) E_2^[n] (x) E_3^[n] (x) D_L), n >= 3.
inline ChiResult eulerThree(const SurfaceModel &S, int n, const ChernCharacter &E1,
                            const ChernCharacter &E2, const ChernCharacter &E3,
                            const ChernCharacter &L) {
  if (n < 3)
    throw Error("eulerThree requires n >= 3 (got n=" + std::to_string(n) + ")");
  requireLineBundle(L, S);
  const ChernCharacter L2 = chTensor(L, L, S);
  const ChernCharacter L3 = chTensor(L2, L, S);
  auto chi = [&](const ChernCharacter &x) { return hrrChi(x, S); };
  auto t = [&](const ChernCharacter &a, const ChernCharacter &b) { return chTensor(a, b, S); };
  const Rational chiL = chi(L);
  const Rational s1 = sChi(n - 1, chiL), s2 = sChi(n - 2, chiL), s3 = sChi(n - 3, chiL);
  const ChernCharacter e123 = t(t(E1, E2), E3);
  const ChernCharacter omega123 = t(chCotangent(S), e123);
  struct Pair {
    const ChernCharacter *a, *b, *c;
    const char *name;
  };
  const Pair pairs[] = {{&E1, &E2, &E3, "12;3"}, {&E1, &E3, &E2, "13;2"}, {&E2, &E3, &E1, "23;1"}};
  std::vector<ChiTerm> terms;
  terms.push_back({"E1L E2L E3L s^{n-3}", 1, {chi(t(E1, L)), chi(t(E2, L)), chi(t(E3, L)), s3}});
  for (const auto &p : pairs)
    terms.push_back({std::string("EaEbL EcL s^{n-2} ") + p.name, 1,
                     {chi(t(t(*p.a, *p.b), L)), chi(t(*p.c, L)), s2}});
  for (const auto &p : pairs)
    terms.push_back({std::string("EaEbL^2 EcL s^{n-3} ") + p.name, -1,
                     {chi(t(t(*p.a, *p.b), L2)), chi(t(*p.c, L)), s3}});
  terms.push_back({"E123 L s^{n-1}", 1, {chi(t(e123, L)), s1}});
  terms.push_back({"E123 L^2 s^{n-2}", -3, {chi(t(e123, L2)), s2}});
  terms.push_back({"E123 L^3 s^{n-3}", 2, {chi(t(e123, L3)), s3}});
  terms.push_back({"Omega E123 L^2 s^{n-2}", -1, {chi(t(omega123, L2)), s2}});
  terms.push_back({"Omega E123 L^3 s^{n-3}", 1, {chi(t(omega123, L3)), s3}});
  return ChiResult(std::move(terms));
}

/// The untwisted triple product grouped by chi factors (L = O).  The middle
/// group runs over the three ways to pair two of the E_i.
inline ChiResult eulerThreeGrouped(const SurfaceModel &S, int n, const ChernCharacter &E1,
                                   const ChernCharacter &E2, const ChernCharacter &E3) {
  if (n < 3)
    throw Error("eulerThree requires n >= 3 (got n=" + std::to_string(n) + ")");
  auto chi = [&](const ChernCharacter &x) { return hrrChi(x, S); };
  auto t = [&](const ChernCharacter &a, const ChernCharacter &b) { return chTensor(a, b, S); };
  const Rational chiO = Rational(S.chiO());
  const Rational s1 = sChi(n - 1, chiO), s2 = sChi(n - 2, chiO), s3 = sChi(n - 3, chiO);
  const ChernCharacter e123 = t(t(E1, E2), E3);
  const Rational pairs =
      chi(t(E1, E2)) * chi(E3) + chi(t(E1, E3)) * chi(E2) + chi(t(E2, E3)) * chi(E1);
  std::vector<ChiTerm> terms;
  terms.push_back({"E1 E2 E3", 1, {chi(E1), chi(E2), chi(E3), s3}});
  terms.push_back({"pairs", 1, {pairs, Rational(s2 - s3)}});
  terms.push_back({"E123", 1, {chi(e123), Rational(s1 - 3 * s2 + 2 * s3)}});
  terms.push_back({"Omega E123", 1, {chi(t(chCotangent(S), e123)), Rational(s3 - s2)}});
  return ChiResult(std::move(terms));
}

namespace detail {
inline std::string valuesLabel(const std::vector<int> &v) {
  std::string s = "a=(";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}
} // namespace detail

/// chi of the S_n-invariants of K_0 (x) L^{boxtimes n}: a sum over the
/// orbit representatives J_0.
inline ChiResult chiK0Invariants(const SurfaceModel &S, int n, const std::vector<ChernCharacter> &E,
                                 const ChernCharacter &L) {
  const int k = static_cast<int>(E.size());
  if (k < 1 || n < 1)
    throw Error("chiK0Invariants requires k, n >= 1");
  requireLineBundle(L, S);
  const Rational chiL = hrrChi(L, S);
  std::vector<ChiTerm> terms;
  for (const J0Entry &e : enumerateJ0(k, n)) {
    ChiTerm term{detail::valuesLabel(e.a.values), 1, {}};
    for (int m = 1; m <= e.maxValue; ++m) {
      std::uint64_t mask = 0;
      for (int t : e.a.fiber(m))
        mask |= 1ull << (t - 1);
      term.factors.push_back(hrrChi(detail::tensorAll(E, mask, L, S), S));
    }
    term.factors.push_back(sChi(n - e.maxValue, chiL));
    terms.push_back(std::move(term));
  }
  return ChiResult(std::move(terms));
}

/// h^{2n} of E_1^[n] (x) ... (x) E_k^[n] (x) D_L.  h2 maps each subset of
/// [k] occurring as a fiber to h^2 of the corresponding tensor product with
/// L; q is h^2(L).
inline Integer hTopDim(int n, int k, const std::map<Subset, Integer> &h2, const Integer &q) {
  if (n < 1 || k < 1)
    throw Error("hTopDim requires n, k >= 1");
  if (q < 0)
    throw Error("hTopDim: q must be non-negative");
  Integer total = 0;
  for (const J0Entry &e : enumerateJ0(k, n)) {
    Integer prod = 1;
    for (int r = 1; r <= e.maxValue; ++r) {
      const Subset fiber = e.a.fiber(r);
      auto it = h2.find(fiber);
      if (it == h2.end()) {
        std::string name = "{";
        for (std::size_t x = 0; x < fiber.size(); ++x)
          name += (x ? "," : "") + std::to_string(fiber[x]);
        throw Error("hTopDim: missing h2 value for the subset " + name + "}");
      }
      prod *= it->second;
    }
    const long free = n - e.maxValue;
    prod *= binomial(Rational(q + free - 1), static_cast<unsigned long>(free)).get_num();
    total += prod;
  }
  return total;
}

/// h^0(E_1^[n] (x) ... (x) E_k^[n]) = prod h^0(E_i) for n >= k.
inline Integer h0Dim(const std::vector<Integer> &h0, int n) {
  if (n < static_cast<int>(h0.size()))
    throw Error("h0Dim requires n >= k (n=" + std::to_string(n) +
                ", k=" + std::to_string(h0.size()) + ")");
  Integer p = 1;
  for (const auto &v : h0) {
    if (v < 0)
      throw Error("h0Dim: negative dimension");
    p *= v;
  }
  return p;
}

} // namespace hilbtaut
