#pragma once

// Sparse exact-rational matrices with fraction-free elimination.  Rows are
// cleared of denominators and reduced to primitive integer vectors, so all
// elimination runs over Z with gcd normalization.

#include "hilbtaut/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <ostream>
#include <utility>
#include <vector>

namespace hilbtaut {

class QMatrix {
public:
  using Key = std::pair<std::size_t, std::size_t>;

  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  static QMatrix identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m.set(i, i, 1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonZeros() const { return entries_.size(); }
  const std::map<Key, Rational> &entries() const { return entries_; }

  Rational at(std::size_t r, std::size_t c) const {
    check(r, c);
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Rational(0) : it->second;
  }
  void set(std::size_t r, std::size_t c, const Rational &v) {
    check(r, c);
    if (v == 0)
      entries_.erase({r, c});
    else
      entries_[{r, c}] = v;
  }
  void add(std::size_t r, std::size_t c, const Rational &v) {
    check(r, c);
    if (v == 0)
      return;
    auto [it, inserted] = entries_.emplace(Key{r, c}, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0)
        entries_.erase(it);
    }
  }

  bool isZero() const { return entries_.empty(); }

  /// True iff every column has exactly one non-zero entry, equal to +1 or
  /// -1, and the rows hit are pairwise distinct.
  bool isSignedPermutation() const {
    if (rows_ != cols_ || entries_.size() != cols_)
      return false;
    std::vector<bool> rowSeen(rows_, false), colSeen(cols_, false);
    for (const auto &[key, v] : entries_) {
      if (v != 1 && v != -1)
        return false;
      if (rowSeen[key.first] || colSeen[key.second])
        return false;
      rowSeen[key.first] = colSeen[key.second] = true;
    }
    return true;
  }

  Rational trace() const {
    Rational t = 0;
    for (const auto &[key, v] : entries_)
      if (key.first == key.second)
        t += v;
    return t;
  }

  QMatrix transpose() const {
    QMatrix t(cols_, rows_);
    for (const auto &[key, v] : entries_)
      t.entries_.emplace(Key{key.second, key.first}, v);
    return t;
  }

  friend QMatrix operator*(const QMatrix &a, const QMatrix &b) {
    if (a.cols_ != b.rows_)
      throw Error("matrix product: inner dimensions differ");
    std::vector<std::vector<std::pair<std::size_t, const Rational *>>> bRows(b.rows_);
    for (const auto &[key, v] : b.entries_)
      bRows[key.first].emplace_back(key.second, &v);
    QMatrix out(a.rows_, b.cols_);
    for (const auto &[key, v] : a.entries_)
      for (const auto &[c, w] : bRows[key.second])
        out.add(key.first, c, v * *w);
    return out;
  }
  friend QMatrix operator+(const QMatrix &a, const QMatrix &b) {
    requireSameShape(a, b);
    QMatrix out = a;
    for (const auto &[key, v] : b.entries_)
      out.add(key.first, key.second, v);
    return out;
  }
  friend QMatrix operator-(const QMatrix &a, const QMatrix &b) {
    requireSameShape(a, b);
    QMatrix out = a;
    for (const auto &[key, v] : b.entries_)
      out.add(key.first, key.second, -v);
    return out;
  }
  friend QMatrix operator*(const Rational &s, const QMatrix &a) {
    QMatrix out(a.rows_, a.cols_);
    if (s != 0)
      for (const auto &[key, v] : a.entries_)
        out.entries_.emplace(key, s * v);
    return out;
  }
  friend bool operator==(const QMatrix &a, const QMatrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  /// Stacks a on top of b.
  static QMatrix vstack(const QMatrix &a, const QMatrix &b) {
    if (a.cols_ != b.cols_)
      throw Error("vstack: column counts differ");
    QMatrix out(a.rows_ + b.rows_, a.cols_);
    out.entries_ = a.entries_;
    for (const auto &[key, v] : b.entries_)
      out.entries_.emplace(Key{key.first + a.rows_, key.second}, v);
    return out;
  }

  std::vector<std::vector<Rational>> toDense() const {
    std::vector<std::vector<Rational>> d(rows_, std::vector<Rational>(cols_, Rational(0)));
    for (const auto &[key, v] : entries_)
      d[key.first][key.second] = v;
    return d;
  }

  std::size_t rank() const;
  /// Columns form a basis of the right kernel {x : A x = 0}; entries are
  /// integers with coprime content.
  QMatrix nullspace() const;

  friend std::ostream &operator<<(std::ostream &os, const QMatrix &m) {
    for (const auto &row : m.toDense()) {
      for (std::size_t c = 0; c < row.size(); ++c)
        os << (c ? " " : "") << toString(row[c]);
      os << "\n";
    }
    return os;
  }

private:
  void check(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
      throw Error("matrix index out of range");
  }
  static void requireSameShape(const QMatrix &a, const QMatrix &b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw Error("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::map<Key, Rational> entries_;
};

namespace detail {

using SparseRow = std::vector<std::pair<std::size_t, Integer>>;

inline void makePrimitive(SparseRow &r) {
  if (r.empty())
    return;
  Integer g = 0;
  for (const auto &e : r) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
    if (g == 1)
      break;
  }
  if (r.front().second < 0)
    g = -g;
  if (g != 1)
    for (auto &e : r)
      mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
}

inline const Integer *entryAt(const SparseRow &r, std::size_t col) {
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const auto &e, std::size_t c) { return e.first < c; });
  return (it != r.end() && it->first == col) ? &it->second : nullptr;
}

/// r := (p[col]/g) r - (r[col]/g) p, which clears column col of r.
inline void eliminate(SparseRow &r, const SparseRow &p, std::size_t col) {
  const Integer &rc = *entryAt(r, col);
  const Integer &pc = *entryAt(p, col);
  Integer g;
  mpz_gcd(g.get_mpz_t(), rc.get_mpz_t(), pc.get_mpz_t());
  const Integer fr = pc / g;
  const Integer fp = rc / g;
  SparseRow out;
  out.reserve(r.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.emplace_back(r[i].first, fr * r[i].second);
      ++i;
    } else if (i == r.size() || p[j].first < r[i].first) {
      out.emplace_back(p[j].first, -fp * p[j].second);
      ++j;
    } else {
      Integer v = fr * r[i].second - fp * p[j].second;
      if (v != 0)
        out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  r = std::move(out);
  makePrimitive(r);
}

/// Row echelon form built one row at a time.  A pivot is keyed by its
/// leading column; on a collision the shorter row keeps the pivot slot.
class Echelon {
public:
  void insert(SparseRow r) {
    makePrimitive(r);
    while (!r.empty()) {
      const std::size_t lead = r.front().first;
      auto it = pivots_.find(lead);
      if (it == pivots_.end()) {
        pivots_.emplace(lead, std::move(r));
        return;
      }
      if (r.size() < it->second.size())
        std::swap(r, it->second);
      eliminate(r, it->second, lead);
    }
  }
  std::size_t rank() const { return pivots_.size(); }

  /// Clears every pivot column above its pivot.
  void reduce() {
    for (auto q = pivots_.rbegin(); q != pivots_.rend(); ++q)
      for (auto p = pivots_.begin(); p != pivots_.end() && p->first < q->first; ++p)
        if (entryAt(p->second, q->first))
          eliminate(p->second, q->second, q->first);
  }
  const std::map<std::size_t, SparseRow> &pivots() const { return pivots_; }

private:
  std::map<std::size_t, SparseRow> pivots_;
};

inline std::vector<SparseRow> integerRows(const QMatrix &m) {
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows(m.rows());
  for (const auto &[key, v] : m.entries())
    rows[key.first].emplace_back(key.second, v);
  std::vector<SparseRow> out;
  out.reserve(rows.size());
  for (auto &row : rows) {
    if (row.empty())
      continue;
    Integer l = 1;
    for (const auto &e : row)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.second.get_den_mpz_t());
    SparseRow r;
    r.reserve(row.size());
    for (const auto &e : row)
      r.emplace_back(e.first, Integer(e.second.get_num() * (l / e.second.get_den())));
    out.push_back(std::move(r));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const SparseRow &a, const SparseRow &b) { return a.size() < b.size(); });
  return out;
}

} // namespace detail

inline std::size_t QMatrix::rank() const {
  detail::Echelon e;
  for (auto &r : detail::integerRows(*this))
    e.insert(std::move(r));
  return e.rank();
}

inline QMatrix QMatrix::nullspace() const {
  detail::Echelon e;
  for (auto &r : detail::integerRows(*this))
    e.insert(std::move(r));
  e.reduce();
  const auto &piv = e.pivots();
  std::vector<std::size_t> freeCols;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!piv.count(c))
      freeCols.push_back(c);
  QMatrix basis(cols_, freeCols.size());
  for (std::size_t f = 0; f < freeCols.size(); ++f) {
    // x_free = L, x_lead = -L * row[free] / row[lead] with L clearing denominators
    Integer l = 1;
    for (const auto &[lead, row] : piv)
      if (detail::entryAt(row, freeCols[f]))
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), row.front().second.get_mpz_t());
    basis.set(freeCols[f], f, Rational(l));
    for (const auto &[lead, row] : piv)
      if (const Integer *v = detail::entryAt(row, freeCols[f]))
        basis.set(lead, f, Rational(Integer(-(l / row.front().second) * *v)));
  }
  return basis;
}

} // namespace hilbtaut
