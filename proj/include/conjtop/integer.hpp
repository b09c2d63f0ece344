#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "conjtop/gf2.hpp"

namespace conjtop {

using Integer = boost::multiprecision::cpp_int;
using IntVector = std::vector<Integer>;

/// Dense matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols = 0);
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows, std::size_t cols = 0);
  static IntMatrix column(const IntVector& v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transpose() const;
  IntVector apply(const IntVector& x) const;
  IntVector column_vector(std::size_t c) const;
  bool is_zero() const;
  bool is_symmetric() const;
  Gf2Matrix mod2() const;
  std::vector<std::vector<Integer>> to_rows() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Integer& s, const IntMatrix& m);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// U * M * V = D with U, V unimodular and D diagonal, d_i >= 0, d_i | d_{i+1}.
struct SmithForm {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;
  std::size_t rank = 0;
  /// Nonzero diagonal entries in order.
  IntVector invariant_factors() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Integer solution of M x = b, or nullopt if none exists over Z.
std::optional<IntVector> integer_solve(const IntMatrix& m, const IntVector& b);

/// Z-basis of {x : M x = 0}, returned in Hermite normal form.
std::vector<IntVector> integer_kernel(const IntMatrix& m);

/// Row Hermite normal form of the lattice spanned by the given vectors:
/// echelon, positive pivots, entries above a pivot reduced into [0, pivot).
std::vector<IntVector> hermite_basis(std::vector<IntVector> vectors);

/// Fraction-free (Bareiss) determinant.
Integer determinant(const IntMatrix& m);

std::string to_string(const IntVector& v);

}  // namespace conjtop
