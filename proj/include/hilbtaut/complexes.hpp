#pragma once

// The complexes R_l^-1 -> R_l^0 -> ... -> R_l^{k-l} over Q, with the S_k
// and S_2 actions, and the invariant counts derived from them.
//
// A basis vector of R_l^i (i >= 0) is a triple (M, a, T): M a subset of [k]
// with |M| = l + i, a: [k] \ M -> {1, 2}, and T a sorted (l-1)-subset of
// {1, ..., |M|-1} naming the wedge zeta^{t_1} ^ ... ^ zeta^{t_{l-1}} of the
// standard representation rho_M, where zeta^r = e_{m_r} - e_{m_{r+1}} for
// M = {m_1 < m_2 < ...}.  Degree -1 has the basis a: [k] -> {1, 2}.
// Subsets are stored as bitmasks (bit t-1 for the element t).

#include "hilbtaut/qmatrix.hpp"
#include "hilbtaut/symgroup.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace hilbtaut {

/// Complexes are built explicitly only up to this k.
inline constexpr int kMaxComplexK = 10;
/// Full-group projectors for S_k are enumerated only up to this k.
inline constexpr int kMaxProjectorK = 7;

struct BasisLabel {
  std::uint32_t M = 0;    // subset of [k]
  std::uint32_t aTwo = 0; // {t not in M : a(t) = 2}
  std::uint32_t T = 0;    // wedge indices, bit r-1 for zeta^r

  friend bool operator==(const BasisLabel &, const BasisLabel &) = default;
};

inline Subset maskToSubset(std::uint32_t mask) {
  Subset s;
  for (int t = 0; mask >> t; ++t)
    if (mask >> t & 1u)
      s.push_back(t + 1);
  return s;
}

inline std::uint32_t subsetToMask(const Subset &s) {
  std::uint32_t m = 0;
  for (int t : s)
    m |= 1u << (t - 1);
  return m;
}

inline std::string describe(const BasisLabel &b, int k) {
  std::string s = "M={";
  bool first = true;
  for (int t : maskToSubset(b.M)) {
    s += (first ? "" : ",") + std::to_string(t);
    first = false;
  }
  s += "} a=(";
  for (int t = 1; t <= k; ++t)
    s += (b.M >> (t - 1) & 1u) ? '*' : ((b.aTwo >> (t - 1) & 1u) ? '2' : '1');
  s += ") T={";
  first = true;
  for (int r : maskToSubset(b.T)) {
    s += (first ? "" : ",") + std::to_string(r);
    first = false;
  }
  return s + "}";
}

namespace detail {

inline std::uint64_t labelKey(const BasisLabel &b) {
  return std::uint64_t(b.M) | std::uint64_t(b.aTwo) << 20 | std::uint64_t(b.T) << 40;
}

/// Coordinates in the zeta_M basis of the images of zeta_N^r under the map
/// e_t -> e_{f(t)}, f: N -> M injective.  Row s, column r (0-based).
/// A vector v in rho_M has zeta-coordinates c_s = v_{m_1} + ... + v_{m_s}.
template <class F>
std::vector<std::vector<long>> zetaMap(const Subset &N, const Subset &M, F &&f) {
  const std::size_t rowsM = M.empty() ? 0 : M.size() - 1;
  const std::size_t colsN = N.empty() ? 0 : N.size() - 1;
  std::vector<std::vector<long>> A(rowsM, std::vector<long>(colsN, 0));
  auto pos = [&](int x) {
    return static_cast<std::size_t>(std::lower_bound(M.begin(), M.end(), x) - M.begin());
  };
  for (std::size_t r = 0; r < colsN; ++r) {
    const std::size_t p = pos(f(N[r]));
    const std::size_t q = pos(f(N[r + 1]));
    // +e at position p, -e at position q: partial sums are +1 on [p, q), -1 on [q, p)
    for (std::size_t s = 0; s < rowsM; ++s) {
      if (p <= s && s < q)
        A[s][r] = 1;
      else if (q <= s && s < p)
        A[s][r] = -1;
    }
  }
  return A;
}

/// Determinant of A[rows, cols] by Bareiss elimination.
inline long minor(const std::vector<std::vector<long>> &A, const std::vector<int> &rows,
                       const std::vector<int> &cols) {
  const std::size_t n = rows.size();
  if (n == 0)
    return 1;
  std::vector<std::vector<long>> m(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = A[rows[i]][cols[j]];
  long sign = 1, prev = 1;
  for (std::size_t p = 0; p + 1 < n; ++p) {
    if (m[p][p] == 0) {
      std::size_t swapRow = p + 1;
      while (swapRow < n && m[swapRow][p] == 0)
        ++swapRow;
      if (swapRow == n)
        return 0;
      std::swap(m[p], m[swapRow]);
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < n; ++i)
      for (std::size_t j = p + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[p][p] - m[i][p] * m[p][j]) / prev;
    prev = m[p][p];
  }
  return sign * m[n - 1][n - 1];
}

inline std::vector<int> maskIndices(std::uint32_t mask) {
  std::vector<int> v;
  for (int t = 0; mask >> t; ++t)
    if (mask >> t & 1u)
      v.push_back(t);
  return v;
}

/// (l-1)-subsets of {1, ..., dim} as bitmasks, lexicographic in sorted form.
inline std::vector<std::uint32_t> wedgeBasis(int dim, int size) {
  std::vector<std::uint32_t> out;
  for (const Subset &s : subsetsOfSize(dim, size))
    out.push_back(subsetToMask(s));
  return out;
}

} // namespace detail

class ChainComplexQ {
public:
  int k() const { return k_; }
  int ell() const { return ell_; }
  int minDegree() const { return -1; }
  int maxDegree() const { return k_ - ell_; }
  bool hasDegree(int d) const { return d >= minDegree() && d <= maxDegree(); }

  std::size_t dim(int d) const { return hasDegree(d) ? basis_[d + 1].size() : 0; }
  const std::vector<BasisLabel> &basis(int d) const { return basis_.at(d + 1); }
  /// d^d: degree d -> d + 1, for minDegree() <= d < maxDegree().  The
  /// matrix of degree -1 is phi~.
  const QMatrix &differential(int d) const { return differentials_.at(d + 1); }

  std::size_t indexOf(int d, const BasisLabel &b) const {
    auto it = index_.at(d + 1).find(detail::labelKey(b));
    if (it == index_.at(d + 1).end())
      throw Error("basis label " + describe(b, k_) + " not in degree " + std::to_string(d));
    return it->second;
  }

  friend ChainComplexQ buildRComplex(int k, int ell);

private:
  int k_ = 0;
  int ell_ = 0;
  std::vector<std::vector<BasisLabel>> basis_;
  std::vector<std::unordered_map<std::uint64_t, std::size_t>> index_;
  std::vector<QMatrix> differentials_;
};

inline ChainComplexQ buildRComplex(int k, int ell) {
  if (ell < 1 || ell > k)
    throw Error("buildRComplex requires 1 <= ell <= k (got k=" + std::to_string(k) +
                ", ell=" + std::to_string(ell) + ")");
  if (k > kMaxComplexK)
    throw Error("buildRComplex: k=" + std::to_string(k) + " exceeds the supported bound " +
                std::to_string(kMaxComplexK));
  ChainComplexQ c;
  c.k_ = k;
  c.ell_ = ell;
  const std::uint32_t full = (1u << k) - 1;
  const int top = k - ell;
  c.basis_.resize(top + 2);
  c.index_.resize(top + 2);

  for (std::uint32_t a = 0; a <= full; ++a)
    c.basis_[0].push_back({0, a, 0});
  for (int i = 0; i <= top; ++i) {
    const auto wedges = detail::wedgeBasis(ell + i - 1, ell - 1);
    for (const Subset &Ms : subsetsOfSize(k, ell + i)) {
      const std::uint32_t M = subsetToMask(Ms);
      const std::uint32_t rest = full & ~M;
      // submasks of rest in increasing order
      for (std::uint32_t a = 0;; a = (a - rest) & rest) {
        for (std::uint32_t T : wedges)
          c.basis_[i + 1].push_back({M, a, T});
        if (a == rest)
          break;
      }
    }
  }
  for (std::size_t d = 0; d < c.basis_.size(); ++d)
    for (std::size_t x = 0; x < c.basis_[d].size(); ++x)
      c.index_[d].emplace(detail::labelKey(c.basis_[d][x]), x);

  // phi~(s)(M; a) = sum_b eps_b s(a + b), times the top wedge of rho_M
  const std::uint32_t topWedge = ell == 1 ? 0 : (1u << (ell - 1)) - 1;
  QMatrix phi(c.dim(0), c.dim(-1));
  for (std::size_t col = 0; col < c.dim(-1); ++col) {
    const std::uint32_t a = c.basis_[0][col].aTwo;
    for (const Subset &Ms : subsetsOfSize(k, ell)) {
      const std::uint32_t M = subsetToMask(Ms);
      const int eps = std::popcount(a & M) % 2 ? -1 : 1;
      phi.set(c.indexOf(0, {M, a & ~M, topWedge}), col, eps);
    }
  }
  c.differentials_.push_back(std::move(phi));

  // d(s)(M; a) = sum_{m in M} eps_{m,M} iota(s(M\m; a, m->1) - s(M\m; a, m->2))
  for (int i = 0; i < top; ++i) {
    QMatrix d(c.dim(i + 1), c.dim(i));
    const auto wedgesM = detail::wedgeBasis(ell + i, ell - 1);
    for (std::size_t col = 0; col < c.dim(i); ++col) {
      const BasisLabel &src = c.basis_[i + 1][col];
      const Subset N = maskToSubset(src.M);
      const std::vector<int> colIdx = detail::maskIndices(src.T);
      for (int m = 1; m <= k; ++m) {
        const std::uint32_t bit = 1u << (m - 1);
        if (src.M & bit)
          continue;
        const std::uint32_t M = src.M | bit;
        const Subset Ms = maskToSubset(M);
        const int sign = epsmM(m, Ms) * ((src.aTwo & bit) ? -1 : 1);
        const auto A = detail::zetaMap(N, Ms, [](int t) { return t; });
        for (std::uint32_t TM : wedgesM) {
          const long coeff = detail::minor(A, detail::maskIndices(TM), colIdx);
          if (coeff != 0)
            d.add(c.indexOf(i + 1, {M, src.aTwo & ~bit, TM}), col, Rational(sign * coeff));
        }
      }
    }
    c.differentials_.push_back(std::move(d));
  }
  return c;
}

// ---------------------------------------------------------------------------
// Dimension formulas

/// 2^{k-l-i} binom(k, l+i) binom(l+i-1, l-1) for 0 <= i <= k-l, 2^k for i = -1.
inline Integer dimRFormula(int k, int ell, int i) {
  if (i == -1)
    return pow2(k);
  if (i < 0 || i > k - ell)
    return 0;
  return pow2(k - ell - i) * binomial(k, ell + i) * binomial(ell + i - 1, ell - 1);
}

/// sum_{i >= 0} (-1)^i dim R_l^i.
inline Integer eulerCharNonnegative(int k, int ell) {
  Integer s = 0;
  for (int i = 0; i <= k - ell; ++i)
    s += (i % 2 ? -1 : 1) * dimRFormula(k, ell, i);
  return s;
}

/// dim U_l = sum_{j=l}^k binom(k, j).
inline Integer dimU(int k, int ell) {
  Integer s = 0;
  for (int j = ell; j <= k; ++j)
    s += binomial(k, j);
  return s;
}

/// N(k, l) = (sum_{j=l}^k binom(k,j) - binom(k-1, l-1)) / 2.
inline Integer NklClosedForm(int k, int ell) {
  if (ell < 1 || ell > k)
    throw Error("N(k,l) requires 1 <= l <= k");
  const Integer twice = dimU(k, ell) - binomial(k - 1, ell - 1);
  if (twice % 2 != 0)
    throw Error("N(k,l): odd numerator");
  return twice / 2;
}

/// dim R_l^i by enumerating the basis labels (M, a, T) without building
/// any matrix.
inline Integer countBasis(int k, int ell, int i) {
  if (i == -1)
    return pow2(k);
  if (i < 0 || i > k - ell)
    return 0;
  const std::size_t wedges = detail::wedgeBasis(ell + i - 1, ell - 1).size();
  Integer count = 0;
  for (const Subset &M : subsetsOfSize(k, ell + i)) {
    const std::uint32_t rest = ((1u << k) - 1) & ~subsetToMask(M);
    for (std::uint32_t a = 0;; a = (a - rest) & rest) {
      count += static_cast<unsigned long>(wedges);
      if (a == rest)
        break;
    }
  }
  return count;
}

// ---------------------------------------------------------------------------
// Exactness

struct DegreeReport {
  int degree;
  std::size_t dim;
  std::size_t rankOut; // rank of the differential leaving this degree
  std::size_t kernel;
  std::size_t cohomology;
};

struct ExactnessReport {
  int k;
  int ell;
  bool dSquaredZero;
  std::vector<DegreeReport> degrees;

  /// H^i = 0 for every i >= 0 and d o d = 0.
  bool pass() const {
    if (!dSquaredZero)
      return false;
    for (const auto &d : degrees)
      if (d.degree >= 0 && d.cohomology != 0)
        return false;
    return true;
  }
};

inline ExactnessReport verifyExactness(const ChainComplexQ &c) {
  ExactnessReport rep{c.k(), c.ell(), true, {}};
  for (int d = c.minDegree(); d + 1 < c.maxDegree(); ++d)
    if (!(c.differential(d + 1) * c.differential(d)).isZero())
      rep.dSquaredZero = false;
  std::vector<std::size_t> ranks;
  for (int d = c.minDegree(); d <= c.maxDegree(); ++d)
    ranks.push_back(d < c.maxDegree() ? c.differential(d).rank() : 0);
  for (int d = c.minDegree(); d <= c.maxDegree(); ++d) {
    const std::size_t idx = static_cast<std::size_t>(d - c.minDegree());
    const std::size_t rankIn = idx == 0 ? 0 : ranks[idx - 1];
    const std::size_t ker = c.dim(d) - ranks[idx];
    rep.degrees.push_back({d, c.dim(d), ranks[idx], ker, ker - rankIn});
  }
  return rep;
}

struct UlReport {
  std::size_t rankOnU; // rank of phi~ on the columns with |a^{-1}(2)| >= l
  Integer dimU;
  std::size_t kernelD0;
  bool pass() const { return Integer(rankOnU) == dimU && rankOnU == kernelD0; }
};

/// phi~ is injective on the coordinate subspace U_l and its image is ker d^0.
inline UlReport checkUl(const ChainComplexQ &c) {
  const QMatrix &phi = c.differential(-1);
  std::vector<std::size_t> keep(c.dim(-1), static_cast<std::size_t>(-1));
  std::size_t cols = 0;
  for (std::size_t x = 0; x < c.dim(-1); ++x)
    if (std::popcount(c.basis(-1)[x].aTwo) >= c.ell())
      keep[x] = cols++;
  QMatrix restricted(phi.rows(), cols);
  for (const auto &[key, v] : phi.entries())
    if (keep[key.second] != static_cast<std::size_t>(-1))
      restricted.set(key.first, keep[key.second], v);
  const std::size_t rankD0 = c.maxDegree() > 0 ? c.differential(0).rank() : 0;
  return {restricted.rank(), dimU(c.k(), c.ell()), c.dim(0) - rankD0};
}

// ---------------------------------------------------------------------------
// Group actions

enum class S2Action { Hat, Tilde };
enum class GroupKind { S2, Sk, SkTimesS2 };
enum class SkCharacter { Trivial, Sign };

/// Matrix of sigma in S_k on degree d:
///   (sigma s)(M; a) = eps_{sigma, sigma^{-1} M} sigma_*(s(sigma^{-1} M; a o sigma)).
/// In degree -1 this is (sigma s)(a) = s(a o sigma).
inline QMatrix skMatrix(const ChainComplexQ &c, const Permutation &sigma, int d) {
  if (sigma.size() != c.k())
    throw Error("permutation degree differs from k");
  auto image = [&](std::uint32_t mask) {
    std::uint32_t out = 0;
    for (int t = 1; t <= c.k(); ++t)
      if (mask >> (t - 1) & 1u)
        out |= 1u << (sigma(t) - 1);
    return out;
  };
  QMatrix g(c.dim(d), c.dim(d));
  for (std::size_t col = 0; col < c.dim(d); ++col) {
    const BasisLabel &src = c.basis(d)[col];
    const std::uint32_t M = image(src.M);
    const std::uint32_t a = image(src.aTwo);
    if (d == -1) {
      g.set(c.indexOf(d, {0, a, 0}), col, 1);
      continue;
    }
    const Subset N = maskToSubset(src.M);
    const Subset Ms = maskToSubset(M);
    const int eps = epsSigmaM(sigma, N);
    const auto A = detail::zetaMap(N, Ms, [&](int t) { return sigma(t); });
    const std::vector<int> colIdx = detail::maskIndices(src.T);
    for (std::uint32_t TM : detail::wedgeBasis(static_cast<int>(Ms.size()) - 1, c.ell() - 1)) {
      const long coeff = detail::minor(A, detail::maskIndices(TM), colIdx);
      if (coeff != 0)
        g.add(c.indexOf(d, {M, a, TM}), col, Rational(eps * coeff));
    }
  }
  return g;
}

/// Matrix of tau = (1 2) acting on the values of a.  Tilde: s(tau o a) in
/// degree -1 and (-1)^{l+i} s(M; tau o a) in degree i.  Hat: the tilde
/// action times (-1)^{l-1} in every degree.
inline QMatrix tauMatrix(const ChainComplexQ &c, int d, S2Action kind) {
  const std::uint32_t full = (1u << c.k()) - 1;
  int sign = d == -1 ? 1 : ((c.ell() + d) % 2 ? -1 : 1);
  if (kind == S2Action::Hat && (c.ell() - 1) % 2)
    sign = -sign;
  QMatrix g(c.dim(d), c.dim(d));
  for (std::size_t col = 0; col < c.dim(d); ++col) {
    const BasisLabel &src = c.basis(d)[col];
    g.set(c.indexOf(d, {src.M, full & ~src.M & ~src.aTwo, src.T}), col, sign);
  }
  return g;
}

struct ComplexGroupAction {
  GroupKind group;
  std::string label;
  std::vector<Permutation> generators; // S_k generators; empty for S_2
  /// matrices[degree + 1][generator]
  std::vector<std::vector<QMatrix>> matrices;
};

namespace detail {
inline void requireChainMap(const ChainComplexQ &c, const ComplexGroupAction &act) {
  for (int d = c.minDegree(); d < c.maxDegree(); ++d)
    for (std::size_t g = 0; g < act.matrices[d + 1].size(); ++g)
      if (!(act.matrices[d + 2][g] * c.differential(d) == c.differential(d) * act.matrices[d + 1][g]))
        throw Error(act.label + ": generator " + std::to_string(g) +
                    " does not commute with the differential in degree " + std::to_string(d));
}
} // namespace detail

inline ComplexGroupAction attachS2(const ChainComplexQ &c, S2Action kind) {
  ComplexGroupAction act{GroupKind::S2, kind == S2Action::Hat ? "S2hat" : "S2tilde", {}, {}};
  for (int d = c.minDegree(); d <= c.maxDegree(); ++d)
    act.matrices.push_back({tauMatrix(c, d, kind)});
  detail::requireChainMap(c, act);
  return act;
}

inline ComplexGroupAction attachS2Hat(const ChainComplexQ &c) { return attachS2(c, S2Action::Hat); }
inline ComplexGroupAction attachS2Tilde(const ChainComplexQ &c) {
  return attachS2(c, S2Action::Tilde);
}

inline ComplexGroupAction attachSk(const ChainComplexQ &c) {
  ComplexGroupAction act{GroupKind::Sk, "Sk", symmetricGenerators(c.k()), {}};
  if (act.generators.empty())
    act.generators.push_back(Permutation::identity(c.k()));
  for (int d = c.minDegree(); d <= c.maxDegree(); ++d) {
    std::vector<QMatrix> mats;
    for (const auto &g : act.generators)
      mats.push_back(skMatrix(c, g, d));
    act.matrices.push_back(std::move(mats));
  }
  detail::requireChainMap(c, act);
  return act;
}

// ---------------------------------------------------------------------------
// Invariant dimensions

struct InvariantQuery {
  GroupKind group = GroupKind::S2;
  S2Action s2 = S2Action::Hat;
  SkCharacter character = SkCharacter::Trivial;
};

struct InvariantResult {
  Integer byTrace;
  std::size_t byProjectorRank;
};

/// Dimension of the chi-isotypic part {v : g v = chi(g) v} in degree d,
/// by the trace average and by the rank of |G| times the projector.
inline InvariantResult invariantDimBoth(const ChainComplexQ &c, int d, const InvariantQuery &q) {
  const std::size_t n = c.dim(d);
  std::vector<std::pair<QMatrix, int>> elements; // (matrix, character value)
  const bool withSk = q.group != GroupKind::S2;
  const bool withS2 = q.group != GroupKind::Sk;
  if (withSk && c.k() > kMaxProjectorK)
    throw Error("S_k projector requested for k=" + std::to_string(c.k()) + " > " +
                std::to_string(kMaxProjectorK));
  std::vector<std::pair<QMatrix, int>> skPart;
  if (withSk) {
    for (const auto &sigma : allPermutations(c.k()))
      skPart.emplace_back(skMatrix(c, sigma, d),
                          q.character == SkCharacter::Sign ? sigma.sign() : 1);
  } else {
    skPart.emplace_back(QMatrix::identity(n), 1);
  }
  const QMatrix tau = tauMatrix(c, d, q.s2);
  for (auto &[m, chi] : skPart) {
    if (withS2)
      elements.emplace_back(m * tau, chi);
    elements.emplace_back(std::move(m), chi);
  }
  const Integer order = Integer(static_cast<unsigned long>(elements.size()));
  Rational traceSum = 0;
  std::vector<Integer> proj(n * n);
  for (const auto &[m, chi] : elements) {
    traceSum += chi * m.trace();
    for (const auto &[key, v] : m.entries())
      proj[key.first * n + key.second] += chi * v.get_num(); // entries are integers
  }
  const Rational avg = traceSum / Rational(order);
  if (!isInteger(avg))
    throw Error("invariantDim: trace average is not an integer");
  QMatrix P(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t col = 0; col < n; ++col)
      if (proj[r * n + col] != 0)
        P.set(r, col, Rational(proj[r * n + col]));
  return {avg.get_num(), P.rank()};
}

inline Integer invariantDim(const ChainComplexQ &c, int d, const InvariantQuery &q) {
  const InvariantResult r = invariantDimBoth(c, d, q);
  if (r.byTrace != Integer(r.byProjectorRank))
    throw Error("invariantDim: trace method " + r.byTrace.get_str() + " and projector method " +
                std::to_string(r.byProjectorRank) + " disagree in degree " + std::to_string(d));
  return r.byTrace;
}

/// The same dimension as the common kernel of g - chi(g) over the group
/// generators.  No group enumeration, so this also runs for k = kMaxComplexK.
inline Integer invariantDimByGenerators(const ChainComplexQ &c, int d, const InvariantQuery &q) {
  const std::size_t n = c.dim(d);
  const QMatrix id = QMatrix::identity(n);
  QMatrix stacked(0, n);
  if (q.group != GroupKind::S2)
    for (const auto &g : symmetricGenerators(c.k())) {
      const int chi = q.character == SkCharacter::Sign ? g.sign() : 1;
      stacked = QMatrix::vstack(stacked, skMatrix(c, g, d) - Rational(chi) * id);
    }
  if (q.group != GroupKind::Sk)
    stacked = QMatrix::vstack(stacked, tauMatrix(c, d, q.s2) - id);
  return Integer(static_cast<unsigned long>(n - stacked.rank()));
}

struct NklReport {
  int k;
  int ell;
  Integer kernelMethod;      // dim (ker d^0)^tau via a kernel basis
  Integer alternatingMethod; // sum_{i>=0} (-1)^i dim (R^i)^tau
  Integer closedForm;
  bool pass() const { return kernelMethod == closedForm && alternatingMethod == closedForm; }
};

/// N(k, l) = dim (ker d^0)^{S_2} for the hat action, computed two ways.
inline NklReport NklBrute(const ChainComplexQ &c) {
  const int k = c.k(), ell = c.ell();
  const QMatrix tau0 = tauMatrix(c, 0, S2Action::Hat);
  const QMatrix kernel =
      c.maxDegree() > 0 ? c.differential(0).nullspace() : QMatrix::identity(c.dim(0));
  const QMatrix projected = (QMatrix::identity(c.dim(0)) + tau0) * kernel;
  Integer alt = 0;
  for (int i = 0; i <= c.maxDegree(); ++i)
    alt += (i % 2 ? -1 : 1) * invariantDim(c, i, {GroupKind::S2, S2Action::Hat});
  return {k, ell, Integer(static_cast<unsigned long>(projected.rank())), alt,
          NklClosedForm(k, ell)};
}

inline NklReport NklBrute(int k, int ell) { return NklBrute(buildRComplex(k, ell)); }

/// dim (ker d^0)^{S_k x S_2} for the hat tau, with S_k acting through the
/// given character, as the alternating sum over the degrees i >= 0.
inline Integer powerMultiplicity(const ChainComplexQ &c, SkCharacter character) {
  Integer alt = 0;
  for (int i = 0; i <= c.maxDegree(); ++i)
    alt += (i % 2 ? -1 : 1) *
           invariantDimByGenerators(c, i, {GroupKind::SkTimesS2, S2Action::Hat, character});
  return alt;
}

/// Multiplicity m_l for S^k.  The S_k-invariants vanish in positive
/// degrees, so this is also dim (R_l^0)^{S_k x S_2}.
inline Integer symPowerMultiplicity(int k, int ell) {
  return powerMultiplicity(buildRComplex(k, ell), SkCharacter::Trivial);
}

/// The multiplicity for Lambda^k: S_k acts through the sign character.
/// Here the positive degrees do contribute.
inline Integer altPowerMultiplicity(int k, int ell) {
  return powerMultiplicity(buildRComplex(k, ell), SkCharacter::Sign);
}

} // namespace hilbtaut
