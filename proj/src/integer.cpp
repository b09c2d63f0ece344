#include "conjtop/integer.hpp"

#include <sstream>

#include "conjtop/errors.hpp"

namespace conjtop {

namespace {

Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("ragged integer matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows, std::size_t cols) {
  std::vector<std::vector<Integer>> big;
  big.reserve(rows.size());
  for (const auto& r : rows) big.emplace_back(r.begin(), r.end());
  return from_rows(big, cols);
}

IntMatrix IntMatrix::column(const IntVector& v) {
  IntMatrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntVector IntMatrix::apply(const IntVector& x) const {
  if (x.size() != cols_) throw InputError("integer matrix-vector dimension mismatch");
  IntVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) y[r] += (*this)(r, c) * x[c];
  return y;
}

IntVector IntMatrix::column_vector(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

bool IntMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

Gf2Matrix IntMatrix::mod2() const {
  Gf2Matrix m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (boost::multiprecision::bit_test(abs_value((*this)(r, c)), 0)) m.set(r, c);
  return m;
}

std::vector<std::vector<Integer>> IntMatrix::to_rows() const {
  std::vector<std::vector<Integer>> out(rows_, std::vector<Integer>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c);
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("integer matrix product dimension mismatch");
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) p(r, c) += x * b(k, c);
    }
  return p;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("integer matrix sum mismatch");
  IntMatrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += b.data_[i];
  return s;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("integer matrix sum mismatch");
  IntMatrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] -= b.data_[i];
  return s;
}

IntMatrix operator*(const Integer& s, const IntMatrix& m) {
  IntMatrix out = m;
  for (auto& x : out.data_) x *= s;
  return out;
}

IntVector SmithForm::invariant_factors() const {
  IntVector f;
  for (std::size_t i = 0; i < rank; ++i) f.push_back(D(i, i));
  return f;
}

namespace {

// Row/column operations applied simultaneously to D and the transform.
void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}
void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}
// row_t += q * row_s
void add_row(IntMatrix& m, std::size_t t, std::size_t s, const Integer& q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < m.cols(); ++c) m(t, c) += q * m(s, c);
}
void add_col(IntMatrix& m, std::size_t t, std::size_t s, const Integer& q) {
  if (q == 0) return;
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, t) += q * m(r, s);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm f{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()), 0};
  IntMatrix& D = f.D;
  const std::size_t rows = m.rows(), cols = m.cols();

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block, first in row-major order.
      std::size_t pr = rows, pc = cols;
      Integer best = 0;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (D(r, c) != 0 && (pr == rows || abs_value(D(r, c)) < best)) {
            best = abs_value(D(r, c));
            pr = r;
            pc = c;
          }
      if (pr == rows) break;
      swap_rows(D, t, pr);
      swap_rows(f.U, t, pr);
      swap_cols(D, t, pc);
      swap_cols(f.V, t, pc);

      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (D(r, t) == 0) continue;
        const Integer q = D(r, t) / D(t, t);
        add_row(D, r, t, -q);
        add_row(f.U, r, t, -q);
        if (D(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (D(t, c) == 0) continue;
        const Integer q = D(t, c) / D(t, t);
        add_col(D, c, t, -q);
        add_col(f.V, c, t, -q);
        if (D(t, c) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into row t and reduce again.
      bool divides = true;
      for (std::size_t r = t + 1; r < rows && divides; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (D(r, c) % D(t, t) != 0) {
            add_row(D, t, r, 1);
            add_row(f.U, t, r, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (D(t, t) == 0) break;
    if (D(t, t) < 0) {
      for (std::size_t c = 0; c < cols; ++c) D(t, c) = -D(t, c);
      for (std::size_t c = 0; c < rows; ++c) f.U(t, c) = -f.U(t, c);
    }
    f.rank = t + 1;
  }
  return f;
}

std::optional<IntVector> integer_solve(const IntMatrix& m, const IntVector& b) {
  if (b.size() != m.rows()) throw InputError("integer_solve: right-hand side length mismatch");
  const SmithForm f = smith_normal_form(m);
  // D y = U b with x = V y.
  const IntVector ub = f.U.apply(b);
  IntVector y(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i < f.rank) {
      if (ub[i] % f.D(i, i) != 0) return std::nullopt;
      y[i] = ub[i] / f.D(i, i);
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return f.V.apply(y);
}

std::vector<IntVector> integer_kernel(const IntMatrix& m) {
  const SmithForm f = smith_normal_form(m);
  std::vector<IntVector> basis;
  for (std::size_t c = f.rank; c < m.cols(); ++c) basis.push_back(f.V.column_vector(c));
  return hermite_basis(std::move(basis));
}

std::vector<IntVector> hermite_basis(std::vector<IntVector> vectors) {
  if (vectors.empty()) return {};
  const std::size_t n = vectors.front().size();
  std::vector<IntVector> rows = std::move(vectors);
  std::size_t next = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < n && next < rows.size(); ++c) {
    // Euclid on column c among rows next..end.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = next; r < rows.size(); ++r)
        if (rows[r][c] != 0 && (best == rows.size() || abs_value(rows[r][c]) < abs_value(rows[best][c])))
          best = r;
      if (best == rows.size()) break;
      std::swap(rows[next], rows[best]);
      bool done = true;
      for (std::size_t r = next + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        const Integer q = rows[r][c] / rows[next][c];
        for (std::size_t k = 0; k < n; ++k) rows[r][k] -= q * rows[next][k];
        if (rows[r][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[next][c] == 0) continue;
    if (rows[next][c] < 0)
      for (auto& x : rows[next]) x = -x;
    for (std::size_t r = 0; r < next; ++r) {
      Integer q = rows[r][c] / rows[next][c];
      if (rows[r][c] - q * rows[next][c] < 0) q -= 1;
      if (q != 0)
        for (std::size_t k = 0; k < n; ++k) rows[r][k] -= q * rows[next][k];
    }
    pivots.push_back(c);
    ++next;
  }
  rows.resize(next);
  return rows;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && a(s, k) == 0) ++s;
      if (s == n) return 0;
      swap_rows(a, k, s);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

}  // namespace conjtop
