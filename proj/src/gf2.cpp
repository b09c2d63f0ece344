#include "conjtop/gf2.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "conjtop/errors.hpp"

namespace conjtop {

BitVector BitVector::unit(std::size_t n, std::size_t i) {
  BitVector v(n);
  v.set(i);
  return v;
}

BitVector BitVector::from_bits(const std::vector<int>& bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i] & 1) v.set(i);
  return v;
}

BitVector BitVector::from_indices(std::size_t n, const std::vector<std::size_t>& idx) {
  BitVector v(n);
  for (auto i : idx) v.flip(i);
  return v;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) throw InputError("BitVector size mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

bool BitVector::dot(const BitVector& other) const {
  if (other.size_ != size_) throw InputError("BitVector size mismatch");
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
  return std::popcount(acc) & 1;
}

bool BitVector::any() const noexcept {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVector::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t BitVector::first_set() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return npos;
}

std::vector<std::size_t> BitVector::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t word = words_[w];
    while (word) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

std::vector<int> BitVector::bits() const {
  std::vector<int> out(size_);
  for (std::size_t i = 0; i < size_; ++i) out[i] = get(i) ? 1 : 0;
  return out;
}

std::string BitVector::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < size_; ++i) os << (i ? "," : "") << (get(i) ? 1 : 0);
  return os.str();
}

bool operator<(const BitVector& a, const BitVector& b) {
  if (a.size_ != b.size_) return a.size_ < b.size_;
  return a.words_ < b.words_;
}

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<std::vector<int>>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  Gf2Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("ragged GF(2) matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c] != 0 && rows[r][c] != 1) throw InputError("GF(2) entries must be 0 or 1");
      if (rows[r][c]) m.set(r, c);
    }
  }
  return m;
}

Gf2Matrix Gf2Matrix::from_columns(const std::vector<BitVector>& columns, std::size_t rows) {
  Gf2Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw InputError("column length mismatch");
    for (auto r : columns[c].indices()) m.set(r, c);
  }
  return m;
}

BitVector Gf2Matrix::column(std::size_t c) const {
  BitVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    if (get(r, c)) v.set(r);
  return v;
}

Gf2Matrix Gf2Matrix::transpose() const {
  Gf2Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (auto c : data_[r].indices()) t.set(c, r);
  return t;
}

BitVector Gf2Matrix::apply(const BitVector& x) const {
  if (x.size() != cols_) throw InputError("matrix-vector dimension mismatch");
  BitVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    if (data_[r].dot(x)) y.set(r);
  return y;
}

bool Gf2Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](const BitVector& r) { return r.none(); });
}

bool Gf2Matrix::is_symmetric() const noexcept {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if (get(r, c) != get(c, r)) return false;
  return true;
}

BitVector Gf2Matrix::diagonal() const {
  BitVector d(std::min(rows_, cols_));
  for (std::size_t i = 0; i < d.size(); ++i)
    if (get(i, i)) d.set(i);
  return d;
}

std::vector<std::vector<int>> Gf2Matrix::to_rows() const {
  std::vector<std::vector<int>> out;
  out.reserve(rows_);
  for (const auto& r : data_) out.push_back(r.bits());
  return out;
}

Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix product dimension mismatch");
  Gf2Matrix p(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (auto k : a.data_[r].indices()) p.data_[r] ^= b.data_[k];
  return p;
}

Gf2Matrix operator+(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix sum dimension mismatch");
  Gf2Matrix s = a;
  for (std::size_t r = 0; r < a.rows_; ++r) s.data_[r] ^= b.data_[r];
  return s;
}

RowEchelon row_reduce(Gf2Matrix m) {
  RowEchelon out;
  std::size_t next = 0;
  for (std::size_t c = 0; c < m.cols() && next < m.rows(); ++c) {
    std::size_t pivot = m.rows();
    for (std::size_t r = next; r < m.rows(); ++r)
      if (m.get(r, c)) {
        pivot = r;
        break;
      }
    if (pivot == m.rows()) continue;
    std::swap(m.row(pivot), m.row(next));
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (r != next && m.get(r, c)) m.row(r) ^= m.row(next);
    out.pivot_cols.push_back(c);
    ++next;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t gf2_rank(const Gf2Matrix& m) { return row_reduce(m).pivot_cols.size(); }

namespace {

std::vector<BitVector> kernel_from_echelon(const RowEchelon& e) {
  const auto& m = e.reduced;
  std::vector<char> is_pivot(m.cols(), 0);
  for (auto c : e.pivot_cols) is_pivot[c] = 1;
  std::vector<BitVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    BitVector k(m.cols());
    k.set(f);
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
      if (m.get(i, f)) k.set(e.pivot_cols[i]);
    basis.push_back(std::move(k));
  }
  return basis;
}

}  // namespace

std::vector<BitVector> gf2_kernel(const Gf2Matrix& m) { return kernel_from_echelon(row_reduce(m)); }

std::optional<Gf2Solution> gf2_solve(const Gf2Matrix& m, const BitVector& b) {
  if (b.size() != m.rows()) throw InputError("gf2_solve: right-hand side has length " +
                                             std::to_string(b.size()) + ", expected " +
                                             std::to_string(m.rows()));
  Gf2Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (auto c : m.row(r).indices()) aug.set(r, c);
    if (b.get(r)) aug.set(r, m.cols());
  }
  RowEchelon e = row_reduce(std::move(aug));
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols()) return std::nullopt;

  Gf2Solution sol;
  sol.particular = BitVector(m.cols());
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
    if (e.reduced.get(i, m.cols())) sol.particular.set(e.pivot_cols[i]);

  // Kernel of M from the same echelon form, ignoring the augmented column.
  std::vector<char> is_pivot(m.cols(), 0);
  for (auto c : e.pivot_cols) is_pivot[c] = 1;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    BitVector k(m.cols());
    k.set(f);
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
      if (e.reduced.get(i, f)) k.set(e.pivot_cols[i]);
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

std::optional<Gf2Matrix> gf2_inverse(const Gf2Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Gf2Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (auto c : m.row(r).indices()) aug.set(r, c);
    aug.set(r, n + r);
  }
  RowEchelon e = row_reduce(std::move(aug));
  if (n == 0) return Gf2Matrix(0, 0);
  if (e.pivot_cols.size() < n || e.pivot_cols[n - 1] != n - 1) return std::nullopt;
  Gf2Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (e.reduced.get(r, n + c)) inv.set(r, c);
  return inv;
}

SubspaceReducer::Reduced SubspaceReducer::reduce(BitVector v, BitVector tag) const {
  if (v.size() != ambient_) throw InputError("SubspaceReducer: vector length mismatch");
  // The stored basis is fully reduced, so one pass over the pivots suffices.
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (v.get(pivots_[i])) {
      v ^= basis_[i];
      tag ^= tags_[i];
    }
  return {std::move(v), std::move(tag)};
}

bool SubspaceReducer::insert(const BitVector& v, const BitVector& tag) {
  auto [res, t] = reduce(v, tag);
  if (res.none()) return false;
  const std::size_t p = res.first_set();
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].get(p)) {
      basis_[i] ^= res;
      tags_[i] ^= t;
    }
  basis_.push_back(std::move(res));
  tags_.push_back(std::move(t));
  pivots_.push_back(p);
  return true;
}

}  // namespace conjtop
