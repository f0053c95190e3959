#pragma once

// Truncated cohomology ring of a smooth projective surface: a Picard
// lattice with its intersection form, the canonical class and c2.  Chern
// characters live in Q + Pic(X)_Q + Q and are multiplied with the gram
// pairing; Hirzebruch-Riemann-Roch turns them into Euler characteristics.

#include "hilbtaut/rational.hpp"

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace hilbtaut {

/// Coordinates of a (rational) divisor class in the declared Picard basis.
class DivisorClass {
public:
  DivisorClass() = default;
  explicit DivisorClass(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

  static DivisorClass zero(std::size_t rank) {
    return DivisorClass(std::vector<Rational>(rank, Rational(0)));
  }
  static DivisorClass fromIntegers(const std::vector<long> &v) {
    std::vector<Rational> c;
    c.reserve(v.size());
    for (long x : v)
      c.emplace_back(x);
    return DivisorClass(std::move(c));
  }

  std::size_t size() const { return coeffs_.size(); }
  const Rational &operator[](std::size_t i) const { return coeffs_[i]; }
  const std::vector<Rational> &coeffs() const { return coeffs_; }

  bool isZero() const {
    for (const auto &c : coeffs_)
      if (c != 0)
        return false;
    return true;
  }

  friend DivisorClass operator+(const DivisorClass &a, const DivisorClass &b) {
    requireSameRank(a, b);
    std::vector<Rational> c(a.size());
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = a[i] + b[i];
    return DivisorClass(std::move(c));
  }
  friend DivisorClass operator-(const DivisorClass &a) {
    std::vector<Rational> c(a.size());
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = -a[i];
    return DivisorClass(std::move(c));
  }
  friend DivisorClass operator-(const DivisorClass &a, const DivisorClass &b) { return a + (-b); }
  friend DivisorClass operator*(const Rational &s, const DivisorClass &a) {
    std::vector<Rational> c(a.size());
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = s * a[i];
    return DivisorClass(std::move(c));
  }
  friend bool operator==(const DivisorClass &a, const DivisorClass &b) {
    return a.coeffs_ == b.coeffs_;
  }

  static void requireSameRank(const DivisorClass &a, const DivisorClass &b) {
    if (a.size() != b.size())
      throw Error("divisor classes of different Picard rank (" + std::to_string(a.size()) +
                  " vs " + std::to_string(b.size()) + ")");
  }

private:
  std::vector<Rational> coeffs_;
};

/// A surface given by its intersection numbers.  Invariants (symmetric
/// gram, Noether integrality) are enforced by the constructor.
class SurfaceModel {
public:
  SurfaceModel(std::string name, std::vector<std::vector<long>> gram, std::vector<long> canonical,
               long c2)
      : name_(std::move(name)), gram_(std::move(gram)), c2_(c2) {
    const std::size_t p = gram_.size();
    if (p == 0)
      throw Error("surface '" + name_ + "': Picard rank must be positive");
    for (const auto &row : gram_)
      if (row.size() != p)
        throw Error("surface '" + name_ + "': gram matrix is not square");
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (gram_[i][j] != gram_[j][i])
          throw Error("surface '" + name_ + "': gram matrix is not symmetric");
    if (canonical.size() != p)
      throw Error("surface '" + name_ + "': canonical class has length " +
                  std::to_string(canonical.size()) + ", expected " + std::to_string(p));
    canonical_ = DivisorClass::fromIntegers(canonical);
    const Rational kk = pairing(canonical_, canonical_);
    const Integer noether = kk.get_num() + c2_;
    if (noether % 12 != 0)
      throw Error("surface '" + name_ + "': K^2 + c2 = " + noether.get_str() +
                  " violates Noether's formula (not divisible by 12)");
    chiO_ = noether / 12;
  }

  const std::string &name() const { return name_; }
  std::size_t picardRank() const { return gram_.size(); }
  const std::vector<std::vector<long>> &gram() const { return gram_; }
  const DivisorClass &canonical() const { return canonical_; }
  long c2() const { return c2_; }
  /// chi(O_X) = (K^2 + c2) / 12.
  const Integer &chiO() const { return chiO_; }
  Rational canonicalSquare() const { return pairing(canonical_, canonical_); }

  Rational pairing(const DivisorClass &a, const DivisorClass &b) const {
    requireRank(a);
    requireRank(b);
    Rational s = 0;
    for (std::size_t i = 0; i < gram_.size(); ++i)
      for (std::size_t j = 0; j < gram_.size(); ++j)
        if (gram_[i][j] != 0)
          s += a[i] * b[j] * gram_[i][j];
    return s;
  }

  void requireRank(const DivisorClass &d) const {
    if (d.size() != gram_.size())
      throw Error("divisor class of length " + std::to_string(d.size()) + " on surface '" + name_ +
                  "' of Picard rank " + std::to_string(gram_.size()));
  }

  static SurfaceModel projectivePlane() { return SurfaceModel("P2", {{1}}, {-3}, 3); }
  static SurfaceModel quadric() { return SurfaceModel("P1xP1", {{0, 1}, {1, 0}}, {-2, -2}, 4); }
  /// K3 surface with a single polarization class of self-intersection 2g-2.
  static SurfaceModel k3(long selfIntersection = 2) {
    return SurfaceModel("K3", {{selfIntersection}}, {0}, 24);
  }

private:
  std::string name_;
  std::vector<std::vector<long>> gram_;
  DivisorClass canonical_;
  long c2_;
  Integer chiO_;
};

/// (ch0, ch1, ch2) with ch2 integrated against the fundamental class.
struct ChernCharacter {
  Rational ch0;
  DivisorClass ch1;
  Rational ch2;

  static ChernCharacter unit(std::size_t rank) { return {1, DivisorClass::zero(rank), 0}; }
  static ChernCharacter zero(std::size_t rank) { return {0, DivisorClass::zero(rank), 0}; }

  friend bool operator==(const ChernCharacter &a, const ChernCharacter &b) {
    return a.ch0 == b.ch0 && a.ch1 == b.ch1 && a.ch2 == b.ch2;
  }
  friend std::ostream &operator<<(std::ostream &os, const ChernCharacter &c) {
    os << "(" << toString(c.ch0) << ", [";
    for (std::size_t i = 0; i < c.ch1.size(); ++i)
      os << (i ? "," : "") << toString(c.ch1[i]);
    return os << "], " << toString(c.ch2) << ")";
  }
};

inline ChernCharacter chAdd(const ChernCharacter &a, const ChernCharacter &b) {
  return {a.ch0 + b.ch0, a.ch1 + b.ch1, a.ch2 + b.ch2};
}

inline ChernCharacter chNegate(const ChernCharacter &a) { return {-a.ch0, -a.ch1, -a.ch2}; }

inline ChernCharacter chScale(const Rational &s, const ChernCharacter &a) {
  return {s * a.ch0, s * a.ch1, s * a.ch2};
}

inline ChernCharacter chTensor(const ChernCharacter &a, const ChernCharacter &b,
                               const SurfaceModel &S) {
  S.requireRank(a.ch1);
  S.requireRank(b.ch1);
  return {a.ch0 * b.ch0, a.ch0 * b.ch1 + b.ch0 * a.ch1,
          a.ch0 * b.ch2 + b.ch0 * a.ch2 + S.pairing(a.ch1, b.ch1)};
}

inline ChernCharacter chDual(const ChernCharacter &a) { return {a.ch0, -a.ch1, a.ch2}; }

inline ChernCharacter chHom(const ChernCharacter &a, const ChernCharacter &b,
                            const SurfaceModel &S) {
  return chTensor(chDual(a), b, S);
}

/// Tensor power a^{\otimes e}; e = 0 gives the unit.
inline ChernCharacter chPower(const ChernCharacter &a, unsigned e, const SurfaceModel &S) {
  ChernCharacter r = ChernCharacter::unit(S.picardRank());
  for (unsigned i = 0; i < e; ++i)
    r = chTensor(r, a, S);
  return r;
}

/// ch(L) for the line bundle with first Chern class c1.
inline ChernCharacter chLineBundle(const DivisorClass &c1, const SurfaceModel &S) {
  return {1, c1, S.pairing(c1, c1) / 2};
}

/// ch(S^m Omega_X) from the Chern roots of the cotangent bundle
/// (a + b = K, ab = c2).
inline ChernCharacter chSymCotangent(unsigned m, const SurfaceModel &S) {
  const Rational mm = m;
  const Rational sumSquares = mm * (mm + 1) * (2 * mm + 1) / 6; // sum_{i<=m} i^2
  const Rational mixed = mm * (mm + 1) * (mm - 1) / 3;           // 2 sum i(m-i)
  const Rational kk = S.canonicalSquare();
  const Rational c2 = S.c2();
  return {mm + 1, (mm * (mm + 1) / 2) * S.canonical(), (sumSquares * (kk - 2 * c2) + mixed * c2) / 2};
}

inline ChernCharacter chCotangent(const SurfaceModel &S) { return chSymCotangent(1, S); }

/// ch(omega_X^\vee) = ch(O(-K)).
inline ChernCharacter chAnticanonical(const SurfaceModel &S) {
  return chLineBundle(-S.canonical(), S);
}

/// ch(T_X), the dual of the cotangent bundle.
inline ChernCharacter chTangent(const SurfaceModel &S) { return chDual(chCotangent(S)); }

/// Hirzebruch-Riemann-Roch: chi = ch2 - <ch1, K>/2 + ch0 chi(O_X).
inline Rational hrrChi(const ChernCharacter &a, const SurfaceModel &S) {
  return a.ch2 - S.pairing(a.ch1, S.canonical()) / 2 + a.ch0 * Rational(S.chiO());
}

/// Input form of a locally free sheaf (or a virtual class).
struct BundleSpec {
  std::string name;
  long rank = 1;
  DivisorClass c1;
  Rational c2num;

  ChernCharacter chernCharacter(const SurfaceModel &S) const {
    S.requireRank(c1);
    return {rank, c1, (S.pairing(c1, c1) - 2 * c2num) / 2};
  }

  friend bool operator==(const BundleSpec &a, const BundleSpec &b) {
    return a.name == b.name && a.rank == b.rank && a.c1 == b.c1 && a.c2num == b.c2num;
  }
};

} // namespace hilbtaut
