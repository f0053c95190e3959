#pragma once

// Symmetric-group combinatorics: permutations and the inversion signs
// attached to ordered subsets, multi-indices a: [k] -> [n], the index
// tuples (M; i, j; a), and orbit representatives of the S_n actions on
// them.

#include "hilbtaut/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <string>
#include <vector>

namespace hilbtaut {

/// Sorted list of elements of {1, ..., k}.
using Subset = std::vector<int>;

inline bool contains(const Subset &s, int x) { return std::binary_search(s.begin(), s.end(), x); }

/// A bijection of {1, ..., n}, stored 1-based: images[i-1] = sigma(i).
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
      if (v < 1 || v > static_cast<int>(images_.size()) || seen[v])
        throw Error("not a permutation of 1..n");
      seen[v] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }
  static Permutation transposition(int n, int a, int b) {
    Permutation p = identity(n);
    std::swap(p.images_[a - 1], p.images_[b - 1]);
    return p;
  }
  /// The cycle 1 -> 2 -> ... -> n -> 1.
  static Permutation longCycle(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i)
      v[i] = (i + 1) % n + 1;
    return Permutation(std::move(v));
  }

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int> &images() const { return images_; }

  Permutation inverse() const {
    std::vector<int> v(images_.size());
    for (int i = 1; i <= size(); ++i)
      v[(*this)(i)-1] = i;
    return Permutation(std::move(v));
  }

  /// Image of a subset, sorted.
  Subset apply(const Subset &s) const {
    Subset out;
    out.reserve(s.size());
    for (int x : s)
      out.push_back((*this)(x));
    std::sort(out.begin(), out.end());
    return out;
  }

  int sign() const { return inversionSign(Permutation::all(size())); }

  /// (-1)^{#{(i,j) in M x M : i < j, sigma(i) > sigma(j)}}.
  int inversionSign(const Subset &m) const {
    int inv = 0;
    for (std::size_t x = 0; x < m.size(); ++x)
      for (std::size_t y = x + 1; y < m.size(); ++y)
        if ((*this)(m[x]) > (*this)(m[y]))
          ++inv;
    return inv % 2 ? -1 : 1;
  }

  friend Permutation operator*(const Permutation &mu, const Permutation &sigma) {
    if (mu.size() != sigma.size())
      throw Error("composing permutations of different degree");
    std::vector<int> v(sigma.size());
    for (int i = 1; i <= sigma.size(); ++i)
      v[i - 1] = mu(sigma(i));
    return Permutation(std::move(v));
  }
  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

  static Subset all(int n) {
    Subset s(n);
    std::iota(s.begin(), s.end(), 1);
    return s;
  }

private:
  std::vector<int> images_;
};

/// Generators (1 2) and (1 2 ... n) of S_n; empty for n <= 1.
inline std::vector<Permutation> symmetricGenerators(int n) {
  if (n <= 1)
    return {};
  if (n == 2)
    return {Permutation::transposition(2, 1, 2)};
  return {Permutation::transposition(n, 1, 2), Permutation::longCycle(n)};
}

/// Every element of S_n in lexicographic order of the image lists.
inline std::vector<Permutation> allPermutations(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// epsilon_{sigma,M}
inline int epsSigmaM(const Permutation &sigma, const Subset &m) {
  for (int x : m)
    if (x < 1 || x > sigma.size())
      throw Error("subset element outside the domain of the permutation");
  return sigma.inversionSign(m);
}

// epsilon_{m,M} = (-1)^{#{j in M : j < m}}
inline int epsmM(int m, const Subset &M) {
  if (!contains(M, m))
    throw Error("epsmM: " + std::to_string(m) + " is not an element of M");
  const auto below = std::lower_bound(M.begin(), M.end(), m) - M.begin();
  return below % 2 ? -1 : 1;
}

/// epsilon_b = (-1)^{#b^{-1}(larger)} for b: M -> {smaller < larger}.
inline int epsB(const std::vector<int> &values, int smaller, int larger) {
  if (!(smaller < larger))
    throw Error("epsB: codomain must be ordered smaller < larger");
  int count = 0;
  for (int v : values) {
    if (v == larger)
      ++count;
    else if (v != smaller)
      throw Error("epsB: value outside the two-element codomain");
  }
  return count % 2 ? -1 : 1;
}

/// Total order on subsets of [k]: the empty set is the maximum, non-empty
/// subsets are compared lexicographically on their sorted elements (hence
/// first by their minimum).  Returns true iff a strictly precedes b.
inline bool subsetPrecedes(const Subset &a, const Subset &b) {
  if (a.empty())
    return false;
  if (b.empty())
    return true;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

/// a: [k] -> [n], stored as values[t-1] = a(t).
struct MultiIndex {
  int n = 1;
  std::vector<int> values;

  int k() const { return static_cast<int>(values.size()); }
  int operator()(int t) const { return values[t - 1]; }
  int maxValue() const { return values.empty() ? 0 : *std::max_element(values.begin(), values.end()); }
  Subset fiber(int v) const {
    Subset s;
    for (int t = 1; t <= k(); ++t)
      if (values[t - 1] == v)
        s.push_back(t);
    return s;
  }
  friend bool operator==(const MultiIndex &, const MultiIndex &) = default;
  friend auto operator<=>(const MultiIndex &, const MultiIndex &) = default;
};

/// (M; i, j; a) with M a subset of [k], 1 <= i < j <= n, and a defined on
/// [k] \ M.  values[t-1] is a(t) for t outside M and 0 for t in M.
struct TupleMIA {
  int n = 2;
  Subset M;
  int i = 1;
  int j = 2;
  std::vector<int> values;

  int k() const { return static_cast<int>(values.size()); }
  /// M together with a^{-1}({i, j}).
  Subset mHat() const {
    Subset s;
    for (int t = 1; t <= k(); ++t)
      if (contains(M, t) || values[t - 1] == i || values[t - 1] == j)
        s.push_back(t);
    return s;
  }
  /// max(a, 2): the largest value of a, at least 2.
  int maxValue() const {
    int m = 2;
    for (int t = 1; t <= k(); ++t)
      if (!contains(M, t))
        m = std::max(m, values[t - 1]);
    return m;
  }
  bool isHat() const { return mHat().size() > M.size(); }
  friend bool operator==(const TupleMIA &, const TupleMIA &) = default;
  friend auto operator<=>(const TupleMIA &, const TupleMIA &) = default;
};

/// Set partitions of [k] as restricted growth strings: a(1) = 1 and
/// a(t) <= 1 + max(a(1..t-1)); at most maxBlocks blocks.  Block r is the
/// r-th block in order of minima.
inline void forEachSetPartition(int k, int maxBlocks,
                                const std::function<void(const std::vector<int> &)> &fn) {
  if (k == 0) {
    fn({});
    return;
  }
  if (maxBlocks < 1)
    return;
  std::vector<int> a(k, 0);
  std::function<void(int, int)> rec = [&](int t, int used) {
    if (t == k) {
      fn(a);
      return;
    }
    for (int v = 1; v <= std::min(used + 1, maxBlocks); ++v) {
      a[t] = v;
      rec(t + 1, std::max(used, v));
    }
  };
  rec(0, 0);
}

inline std::vector<Subset> subsetsOfSize(int k, int size) {
  std::vector<Subset> out;
  if (size < 0 || size > k)
    return out;
  std::vector<bool> pick(k, false);
  std::fill(pick.begin(), pick.begin() + size, true);
  do {
    Subset s;
    for (int t = 0; t < k; ++t)
      if (pick[t])
        s.push_back(t + 1);
    out.push_back(std::move(s));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

struct J0Entry {
  MultiIndex a;
  int maxValue;
  Integer stabilizerOrder; // |S_{[max a + 1, n]}| = (n - max a)!
};

/// One representative per S_n-orbit of Map([k], [n]): the a with
/// a^{-1}(1) < a^{-1}(2) < ... < a^{-1}(n).
inline std::vector<J0Entry> enumerateJ0(int k, int n) {
  if (k < 1 || n < 1)
    throw Error("enumerateJ0 requires k, n >= 1");
  std::vector<J0Entry> out;
  forEachSetPartition(k, n, [&](const std::vector<int> &rgs) {
    MultiIndex a{n, rgs};
    const int mx = a.maxValue();
    out.push_back({std::move(a), mx, factorial(static_cast<unsigned long>(n - mx))});
  });
  return out;
}

struct JEllEntry {
  TupleMIA tuple;
  int maxValue;            // max(a, 2)
  Integer stabilizerOrder; // (n - max(a,2))!, doubled when a^{-1}({1,2}) is empty
};

/// Representatives (M; 1, 2; a) of the S_n-orbits of I_ell with
/// a^{-1}(1) < a^{-1}(2) and a^{-1}(3) < ... < a^{-1}(n).  By default only
/// the hat part (a^{-1}({1,2}) non-empty) is returned; includeNonHat also
/// yields the tuples with a^{-1}({1,2}) empty.
inline std::vector<JEllEntry> enumerateJHatEll(int k, int n, int ell, bool includeNonHat = false) {
  if (ell < 1 || ell > k)
    throw Error("enumerateJHatEll requires 1 <= ell <= k");
  if (n < 2)
    throw Error("enumerateJHatEll requires n >= 2");
  std::vector<JEllEntry> out;
  for (const Subset &M : subsetsOfSize(k, ell)) {
    Subset rest;
    for (int t = 1; t <= k; ++t)
      if (!contains(M, t))
        rest.push_back(t);
    const int r = static_cast<int>(rest.size());
    // colour each element of rest by 1, 2 or "other" (0)
    std::vector<int> colour(r, 0);
    std::function<void(int)> rec = [&](int idx) {
      if (idx < r) {
        for (int c = 0; c <= 2; ++c) {
          colour[idx] = c;
          rec(idx + 1);
        }
        return;
      }
      Subset a1, a2, others;
      for (int x = 0; x < r; ++x)
        (colour[x] == 1 ? a1 : colour[x] == 2 ? a2 : others).push_back(rest[x]);
      const bool hat = !a1.empty() || !a2.empty();
      if (!hat && !includeNonHat)
        return;
      if (hat && !subsetPrecedes(a1, a2))
        return;
      forEachSetPartition(static_cast<int>(others.size()), n - 2, [&](const std::vector<int> &rgs) {
        TupleMIA tup{n, M, 1, 2, std::vector<int>(k, 0)};
        for (int t : a1)
          tup.values[t - 1] = 1;
        for (int t : a2)
          tup.values[t - 1] = 2;
        for (std::size_t x = 0; x < others.size(); ++x)
          tup.values[others[x] - 1] = rgs[x] + 2;
        const int mx = tup.maxValue();
        Integer stab = factorial(static_cast<unsigned long>(n - mx));
        if (!hat)
          stab *= 2;
        out.push_back({std::move(tup), mx, std::move(stab)});
      });
    };
    rec(0);
  }
  return out;
}

template <class T> struct Orbit {
  T representative;
  std::size_t size;
  Integer stabilizerOrder;
};

template <class T> struct OrbitDecomposition {
  std::vector<Orbit<T>> orbits;
  std::vector<std::size_t> orbitOf; // orbit index of every input element
};

/// Orbits of a finite set under a group given by generators.  The action
/// is a pure function (element, generator index) -> element; orbits are
/// closed breadth-first, so the group itself is never materialized.  The
/// representative of an orbit is its first element in input order.
template <class T, class Action>
OrbitDecomposition<T> orbitDecompose(const Integer &groupOrder, const std::vector<T> &elements,
                                     std::size_t generatorCount, Action &&act) {
  std::map<T, std::size_t> index;
  for (std::size_t x = 0; x < elements.size(); ++x)
    if (!index.emplace(elements[x], x).second)
      throw Error("orbitDecompose: duplicate element in the input set");
  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  OrbitDecomposition<T> dec;
  dec.orbitOf.assign(elements.size(), unassigned);
  for (std::size_t start = 0; start < elements.size(); ++start) {
    if (dec.orbitOf[start] != unassigned)
      continue;
    const std::size_t orbitId = dec.orbits.size();
    std::size_t size = 0;
    std::queue<std::size_t> todo;
    todo.push(start);
    dec.orbitOf[start] = orbitId;
    while (!todo.empty()) {
      const std::size_t cur = todo.front();
      todo.pop();
      ++size;
      for (std::size_t g = 0; g < generatorCount; ++g) {
        auto it = index.find(act(elements[cur], g));
        if (it == index.end())
          throw Error("orbitDecompose: the action leaves the given set");
        if (dec.orbitOf[it->second] == unassigned) {
          dec.orbitOf[it->second] = orbitId;
          todo.push(it->second);
        }
      }
    }
    if (groupOrder % size != 0)
      throw Error("orbitDecompose: orbit size does not divide the group order");
    dec.orbits.push_back({elements[start], size, Integer(groupOrder / size)});
  }
  return dec;
}

} // namespace hilbtaut
