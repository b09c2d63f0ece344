#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace conjtop {

/// Bit-packed vector over GF(2).
class BitVector {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  BitVector() = default;
  explicit BitVector(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

  static BitVector unit(std::size_t n, std::size_t i);
  static BitVector from_bits(const std::vector<int>& bits);
  static BitVector from_indices(std::size_t n, const std::vector<std::size_t>& idx);

  std::size_t size() const noexcept { return size_; }
  bool get(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v = true) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

  /// Parity of the coordinatewise product.
  bool dot(const BitVector& other) const;
  bool any() const noexcept;
  bool none() const noexcept { return !any(); }
  std::size_t count() const noexcept;
  std::size_t first_set() const noexcept;
  std::vector<std::size_t> indices() const;
  std::vector<int> bits() const;
  std::string to_string() const;  // "1,0,1"

  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend bool operator<(const BitVector& a, const BitVector& b);

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Dense GF(2) matrix stored as packed rows. Dimensions are fixed once built.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);

  static Gf2Matrix identity(std::size_t n);
  static Gf2Matrix from_rows(const std::vector<std::vector<int>>& rows, std::size_t cols = 0);
  static Gf2Matrix from_columns(const std::vector<BitVector>& columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool get(std::size_t r, std::size_t c) const noexcept { return data_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v = true) noexcept { data_[r].set(c, v); }
  void flip(std::size_t r, std::size_t c) noexcept { data_[r].flip(c); }
  const BitVector& row(std::size_t r) const noexcept { return data_[r]; }
  BitVector& row(std::size_t r) noexcept { return data_[r]; }
  BitVector column(std::size_t c) const;

  Gf2Matrix transpose() const;
  BitVector apply(const BitVector& x) const;  // M x
  bool is_zero() const noexcept;
  bool is_symmetric() const noexcept;
  BitVector diagonal() const;
  std::vector<std::vector<int>> to_rows() const;

  friend Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b);
  friend Gf2Matrix operator+(const Gf2Matrix& a, const Gf2Matrix& b);
  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BitVector> data_;
};

/// Reduced row echelon form with pivot columns scanned left to right and the
/// lowest remaining row carrying a one chosen as pivot row.
struct RowEchelon {
  Gf2Matrix reduced;
  std::vector<std::size_t> pivot_cols;
};
RowEchelon row_reduce(Gf2Matrix m);

std::size_t gf2_rank(const Gf2Matrix& m);

/// Basis of {x : Mx = 0}: one vector per free column, in increasing order.
std::vector<BitVector> gf2_kernel(const Gf2Matrix& m);

struct Gf2Solution {
  BitVector particular;
  std::vector<BitVector> kernel;
};

/// Solves Mx = b. Returns nullopt when inconsistent; throws InputError when
/// b has the wrong length.
std::optional<Gf2Solution> gf2_solve(const Gf2Matrix& m, const BitVector& b);

std::optional<Gf2Matrix> gf2_inverse(const Gf2Matrix& m);

/// Incremental echelon basis of a subspace. Each stored vector carries a tag
/// recording which inserted generators it is a combination of, which turns
/// membership tests into coordinate extraction.
class SubspaceReducer {
 public:
  explicit SubspaceReducer(std::size_t ambient = 0, std::size_t tag_size = 0)
      : ambient_(ambient), tag_size_(tag_size) {}

  struct Reduced {
    BitVector residual;
    BitVector tag;
  };

  Reduced reduce(BitVector v, BitVector tag) const;
  Reduced reduce(const BitVector& v) const { return reduce(v, BitVector(tag_size_)); }
  /// Inserts the residual of v; returns false if v was already in the span.
  bool insert(const BitVector& v, const BitVector& tag);
  bool insert(const BitVector& v) { return insert(v, BitVector(tag_size_)); }
  bool contains(const BitVector& v) const { return reduce(v).residual.none(); }
  std::size_t rank() const noexcept { return basis_.size(); }
  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t tag_size() const noexcept { return tag_size_; }

 private:
  std::size_t ambient_;
  std::size_t tag_size_;
  std::vector<BitVector> basis_;
  std::vector<BitVector> tags_;
  std::vector<std::size_t> pivots_;
};

}  // namespace conjtop
