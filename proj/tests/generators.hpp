#pragma once

// Random inputs for the property tests.  Every generator takes the engine
// explicitly so that each test fixes its own seed.

#include "hilbtaut/surface.hpp"
#include "hilbtaut/symgroup.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace gen {

using hilbtaut::ChernCharacter;
using hilbtaut::DivisorClass;
using hilbtaut::Rational;
using hilbtaut::SurfaceModel;

inline long uniform(std::mt19937 &rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// p/q with |p| <= bound and 1 <= q <= 6.
inline Rational rational(std::mt19937 &rng, long bound = 6) {
  Rational q(uniform(rng, -bound, bound), uniform(rng, 1, 6));
  q.canonicalize();
  return q;
}

inline DivisorClass divisor(std::mt19937 &rng, std::size_t rank, bool integral, long bound = 3) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i < rank; ++i)
    c.push_back(integral ? Rational(uniform(rng, -bound, bound)) : rational(rng, bound));
  return DivisorClass(std::move(c));
}

/// A virtual class with rational entries.
inline ChernCharacter virtualClass(std::mt19937 &rng, const SurfaceModel &S) {
  return {Rational(uniform(rng, -3, 3)), divisor(rng, S.picardRank(), false), rational(rng)};
}

/// The class of a vector bundle with integral Chern classes.
inline ChernCharacter integralBundle(std::mt19937 &rng, const SurfaceModel &S) {
  const long rank = uniform(rng, 1, 3);
  const DivisorClass c1 = divisor(rng, S.picardRank(), true);
  const Rational c2 = uniform(rng, -4, 4);
  return {Rational(rank), c1, (S.pairing(c1, c1) - 2 * c2) / 2};
}

inline ChernCharacter lineBundle(std::mt19937 &rng, const SurfaceModel &S, long bound = 3) {
  return hilbtaut::chLineBundle(divisor(rng, S.picardRank(), true, bound), S);
}

inline std::vector<SurfaceModel> presets() {
  return {SurfaceModel::projectivePlane(), SurfaceModel::quadric(), SurfaceModel::k3(2),
          SurfaceModel::k3(4)};
}

inline hilbtaut::Permutation permutation(std::mt19937 &rng, int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  return hilbtaut::Permutation(std::move(v));
}

/// A random subset of [n], optionally forced to be non-empty.
inline hilbtaut::Subset subset(std::mt19937 &rng, int n, bool nonEmpty = false) {
  hilbtaut::Subset s;
  do {
    s.clear();
    for (int t = 1; t <= n; ++t)
      if (uniform(rng, 0, 1))
        s.push_back(t);
  } while (nonEmpty && s.empty());
  return s;
}

} // namespace gen
