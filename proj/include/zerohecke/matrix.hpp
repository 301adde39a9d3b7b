#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zerohecke/errors.hpp"
#include "zerohecke/field.hpp"

namespace zerohecke {

template <class K>
using Vec = std::vector<K>;

/// Dense row-major matrix over an exact field K.
template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, K(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }
  static Matrix from_columns(const std::vector<Vec<K>>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
  }
  static Matrix from_rows(const std::vector<Vec<K>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec<K> row(std::size_t i) const { return Vec<K>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }
  Vec<K> column(std::size_t j) const {
    Vec<K> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }
  /// Row-major entries.
  const std::vector<K>& entries() const { return data_; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const K& x) { return x.is_zero(); });
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Vec<K> apply(const Vec<K>& v) const {
    if (v.size() != cols_) throw ArgumentError("dimension mismatch in matrix-vector product");
    Vec<K> out(rows_, K(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const K& c) {
    for (auto& x : data_) x *= c;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const K& c, Matrix a) { return a *= c; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ArgumentError("dimension mismatch in matrix product");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const K& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const K& y = b(k, j);
          if (!y.is_zero()) c(i, j) += x * y;
        }
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ArgumentError("dimension mismatch");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<K> data_;
};

template <class K>
struct RrefResult {
  Matrix<K> reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination to reduced row echelon form.
template <class K>
RrefResult<K> rref(Matrix<K> m) {
  RrefResult<K> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    K inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      K f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

template <class K>
std::size_t rank(const Matrix<K>& m) {
  return rref(m).rank;
}

/// A linear subspace of K^n held as a reduced echelon basis (rows).
template <class K>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace span(const std::vector<Vec<K>>& vectors, std::size_t ambient) {
    for (const auto& v : vectors)
      if (v.size() != ambient) throw ArgumentError("vector has wrong length for subspace");
    auto rr = rref(Matrix<K>::from_rows(vectors, ambient));
    Subspace s(ambient);
    s.basis_ = Matrix<K>(rr.rank, ambient);
    for (std::size_t i = 0; i < rr.rank; ++i)
      for (std::size_t j = 0; j < ambient; ++j) s.basis_(i, j) = rr.reduced(i, j);
    s.pivots_ = rr.pivots;
    return s;
  }
  static Subspace whole(std::size_t n) {
    std::vector<Vec<K>> vs;
    for (std::size_t i = 0; i < n; ++i) {
      Vec<K> e(n, K(0));
      e[i] = K(1);
      vs.push_back(std::move(e));
    }
    return span(vs, n);
  }
  /// Span of the standard basis vectors with the given indices.
  static Subspace coordinate(const std::vector<std::size_t>& indices, std::size_t n) {
    std::vector<Vec<K>> vs;
    for (std::size_t i : indices) {
      Vec<K> e(n, K(0));
      e[i] = K(1);
      vs.push_back(std::move(e));
    }
    return span(vs, n);
  }

  std::size_t dim() const { return pivots_.size(); }
  std::size_t ambient() const { return ambient_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Basis vectors as rows, in reduced echelon form.
  const Matrix<K>& rows() const { return basis_; }
  std::vector<Vec<K>> basis() const {
    std::vector<Vec<K>> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
    return out;
  }
  /// Basis vectors as the columns of an ambient x dim matrix.
  Matrix<K> columns() const { return basis_.transpose(); }

  /// v minus its component along the pivots; zero iff v lies in the subspace.
  Vec<K> reduce(Vec<K> v) const {
    for (std::size_t i = 0; i < dim(); ++i) {
      K f = v[pivots_[i]];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < ambient_; ++j)
        if (!basis_(i, j).is_zero()) v[j] -= f * basis_(i, j);
    }
    return v;
  }
  bool contains(const Vec<K>& v) const {
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const K& x) { return x.is_zero(); });
  }
  bool contains(const Subspace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_.row(i))) return false;
    return true;
  }
  /// Coefficients of v in the echelon basis; v must lie in the subspace.
  Vec<K> coordinates(const Vec<K>& v) const {
    Vec<K> c(dim());
    for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
    return c;
  }
  /// Indices not used as pivots; the matching unit vectors span a complement.
  std::vector<std::size_t> complement_indices() const {
    std::vector<std::size_t> out;
    std::size_t p = 0;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (p < pivots_.size() && pivots_[p] == j) {
        ++p;
        continue;
      }
      out.push_back(j);
    }
    return out;
  }
  /// Coordinates of v + U in the quotient basis given by complement_indices().
  Vec<K> quotient_coordinates(const Vec<K>& v) const {
    auto r = reduce(v);
    Vec<K> out;
    for (std::size_t j : complement_indices()) out.push_back(r[j]);
    return out;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix<K> basis_;
  std::vector<std::size_t> pivots_;
};

/// Null space {x : m x = 0}.
template <class K>
Subspace<K> kernel(const Matrix<K>& m) {
  auto rr = rref(m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (auto p : rr.pivots) is_pivot[p] = 1;
  std::vector<Vec<K>> vs;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec<K> x(m.cols(), K(0));
    x[f] = K(1);
    for (std::size_t i = 0; i < rr.rank; ++i) x[rr.pivots[i]] = -rr.reduced(i, f);
    vs.push_back(std::move(x));
  }
  return Subspace<K>::span(vs, m.cols());
}

/// Column space.
template <class K>
Subspace<K> image(const Matrix<K>& m) {
  std::vector<Vec<K>> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return Subspace<K>::span(cols, m.rows());
}

/// One solution of a x = b, or nullopt when inconsistent.
template <class K>
std::optional<Vec<K>> solve(const Matrix<K>& a, const Vec<K>& b) {
  if (b.size() != a.rows()) throw ArgumentError("dimension mismatch in solve");
  Matrix<K> aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto rr = rref(aug);
  if (!rr.pivots.empty() && rr.pivots.back() == a.cols()) return std::nullopt;
  Vec<K> x(a.cols(), K(0));
  for (std::size_t i = 0; i < rr.rank; ++i) x[rr.pivots[i]] = rr.reduced(i, a.cols());
  return x;
}

template <class K>
Subspace<K> sum(const Subspace<K>& u, const Subspace<K>& v) {
  if (u.ambient() != v.ambient()) throw ArgumentError("subspaces live in different spaces");
  auto vs = u.basis();
  for (auto& x : v.basis()) vs.push_back(std::move(x));
  return Subspace<K>::span(vs, u.ambient());
}

template <class K>
Subspace<K> intersect(const Subspace<K>& u, const Subspace<K>& v) {
  if (u.ambient() != v.ambient()) throw ArgumentError("subspaces live in different spaces");
  const std::size_t n = u.ambient(), a = u.dim(), b = v.dim();
  Matrix<K> m(n, a + b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < n; ++j) m(j, i) = u.rows()(i, j);
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < n; ++j) m(j, a + i) = -v.rows()(i, j);
  auto ker = kernel(m);
  std::vector<Vec<K>> out;
  for (const auto& c : ker.basis()) {
    Vec<K> x(n, K(0));
    for (std::size_t i = 0; i < a; ++i)
      if (!c[i].is_zero())
        for (std::size_t j = 0; j < n; ++j) x[j] += c[i] * u.rows()(i, j);
    out.push_back(std::move(x));
  }
  return Subspace<K>::span(out, n);
}

template <class K>
bool is_invertible(const Matrix<K>& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

template <class K>
K determinant(Matrix<K> m) {
  if (m.rows() != m.cols()) throw ArgumentError("determinant of a non-square matrix");
  K det(1);
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return K(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    K inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      K f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

template <class K>
Matrix<K> inverse(const Matrix<K>& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw ArgumentError("inverse of a non-square matrix");
  Matrix<K> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = K(1);
  }
  auto rr = rref(aug);
  if (rr.rank < n || rr.pivots[n - 1] != n - 1) throw ArgumentError("matrix is singular");
  Matrix<K> out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = rr.reduced(i, n + j);
  return out;
}

/// (ker m^n, im m^n) for square m: the Fitting decomposition. m is nilpotent
/// on the first part and invertible on the second.
template <class K>
std::pair<Subspace<K>, Subspace<K>> fitting_split(const Matrix<K>& m) {
  if (m.rows() != m.cols()) throw ArgumentError("fitting_split needs a square matrix");
  Matrix<K> power = m;
  std::size_t r = rank(power);
  while (true) {
    Matrix<K> next = power * m;
    std::size_t rn = rank(next);
    if (rn == r) break;
    power = std::move(next);
    r = rn;
  }
  return {kernel(power), image(power)};
}

/// Coefficients low to high.
template <class K>
struct Polynomial {
  std::vector<K> coeffs;

  int degree() const {
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
      if (!coeffs[i].is_zero()) return i;
    return -1;
  }
  K eval(const K& x) const {
    K acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  Matrix<K> eval(const Matrix<K>& m) const {
    Matrix<K> acc(m.rows(), m.cols());
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * m + (*it) * Matrix<K>::identity(m.rows());
    return acc;
  }
};

/// Minimal polynomial (monic) from the first linear dependency among
/// I, m, m^2, ...
template <class K>
Polynomial<K> min_poly(const Matrix<K>& m) {
  if (m.rows() != m.cols()) throw ArgumentError("min_poly needs a square matrix");
  const std::size_t n = m.rows();
  struct Reduced {
    std::vector<K> vec;
    std::size_t pivot;
    std::vector<K> combo;  // over powers
  };
  std::vector<Reduced> done;
  Matrix<K> power = Matrix<K>::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<K> v = power.entries();
    std::vector<K> combo(k + 1, K(0));
    combo[k] = K(1);
    for (const auto& r : done) {
      if (v[r.pivot].is_zero()) continue;
      K f = v[r.pivot] / r.vec[r.pivot];
      for (std::size_t j = 0; j < v.size(); ++j)
        if (!r.vec[j].is_zero()) v[j] -= f * r.vec[j];
      for (std::size_t j = 0; j < r.combo.size(); ++j)
        if (!r.combo[j].is_zero()) combo[j] -= f * r.combo[j];
    }
    auto nz = std::find_if(v.begin(), v.end(), [](const K& x) { return !x.is_zero(); });
    if (nz == v.end()) return Polynomial<K>{combo};
    auto pivot = static_cast<std::size_t>(nz - v.begin());
    done.push_back({std::move(v), pivot, std::move(combo)});
    power = power * m;
  }
  throw ArgumentError("min_poly: no dependency found (unreachable)");
}

/// Roots of p lying in the field itself.
std::vector<Rational> roots_in_field(const Polynomial<Rational>& p);
std::vector<Fp> roots_in_field(const Polynomial<Fp>& p);

}  // namespace zerohecke
