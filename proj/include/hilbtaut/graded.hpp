#pragma once

// Euler characteristics of graded vector spaces, their tensor products and
// symmetric powers (with the Koszul sign rule).

#include "hilbtaut/rational.hpp"

#include <functional>
#include <map>
#include <vector>

namespace hilbtaut {

/// s^m chi = binom(chi + m - 1, m), the Euler characteristic of the m-th
/// graded symmetric power of a space with Euler characteristic chi.
inline Rational sChi(unsigned long m, const Rational &chi) {
  return binomial(Rational(chi + static_cast<long>(m) - 1), m);
}

/// (degree, dimension) pairs; repeated degrees are summed.
struct GradedPiece {
  int degree;
  unsigned dim;
};
using GradedDims = std::vector<GradedPiece>;

inline Integer gradedChi(const GradedDims &dims) {
  Integer chi = 0;
  for (const auto &p : dims)
    chi += (p.degree % 2 == 0) ? Integer(p.dim) : Integer(-static_cast<long>(p.dim));
  return chi;
}

namespace detail {
inline std::vector<int> basisDegrees(const GradedDims &dims) {
  std::vector<int> deg;
  for (const auto &p : dims)
    for (unsigned i = 0; i < p.dim; ++i)
      deg.push_back(p.degree);
  return deg;
}
} // namespace detail

/// Dimensions per degree of V (x) W, built from the product basis.
inline std::map<int, Integer> gradedTensorDims(const GradedDims &v, const GradedDims &w) {
  std::map<int, Integer> out;
  for (int a : detail::basisDegrees(v))
    for (int b : detail::basisDegrees(w))
      out[a + b] += 1;
  return out;
}

inline Integer gradedTensorChi(const GradedDims &v, const GradedDims &w) {
  Integer chi = 0;
  for (const auto &[deg, dim] : gradedTensorDims(v, w))
    chi += (deg % 2 == 0) ? dim : Integer(-dim);
  return chi;
}

/// Dimensions per degree of S^m V.  A basis of S^m V is given by the
/// monomials in a basis of V in which odd-degree vectors occur at most once
/// (they anticommute) while even-degree vectors may repeat.  The monomials
/// are enumerated one by one.
inline std::map<int, Integer> gradedSymDims(const GradedDims &dims, unsigned m) {
  const std::vector<int> deg = detail::basisDegrees(dims);
  std::map<int, Integer> out;
  std::function<void(std::size_t, unsigned, int)> walk = [&](std::size_t idx, unsigned left,
                                                             int total) {
    if (left == 0) {
      out[total] += 1;
      return;
    }
    if (idx == deg.size())
      return;
    const unsigned maxMult = (deg[idx] % 2 == 0) ? left : 1;
    for (unsigned mult = 0; mult <= maxMult; ++mult)
      walk(idx + 1, left - mult, total + static_cast<int>(mult) * deg[idx]);
  };
  walk(0, m, 0);
  return out;
}

inline Integer gradedSymChiOracle(const GradedDims &dims, unsigned m) {
  Integer chi = 0;
  for (const auto &[d, dim] : gradedSymDims(dims, m))
    chi += (d % 2 == 0) ? dim : Integer(-dim);
  return chi;
}

} // namespace hilbtaut
