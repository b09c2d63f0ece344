#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "conjtop/gf2.hpp"

namespace conjtop {

/// Z/2-valued quadratic refinement of an alternating GF(2) pairing, stored by
/// its values on a basis.
struct QForm2 {
  Gf2Matrix gram;
  BitVector values;

  QForm2() = default;
  QForm2(Gf2Matrix gram, BitVector values);
  std::size_t dimension() const noexcept { return gram.rows(); }
};

/// Z/4-valued refinement with q(x) mod 2 = x . x.
struct QForm4 {
  Gf2Matrix gram;
  std::vector<int> values;  // in [0, 4)

  QForm4() = default;
  QForm4(Gf2Matrix gram, std::vector<int> values);
  std::size_t dimension() const noexcept { return gram.rows(); }
};

int evaluate_q2(const QForm2& q, const BitVector& x);
int evaluate_q4(const QForm4& q, const BitVector& x);

/// Symplectic basis (a_1, b_1, ..., a_g, b_g) of a nondegenerate alternating
/// pairing. Pivots are chosen by lowest index.
std::vector<std::pair<BitVector, BitVector>> symplectic_basis(const Gf2Matrix& gram);

int arf(const QForm2& q);

/// Gauss sum of i^q(x) over all classes, as an exact Gaussian integer.
std::pair<long long, long long> gauss_sum(const QForm4& q);
/// Brown invariant in Z/8 from the Gauss sum.
int brown(const QForm4& q);

QForm2 direct_sum(const QForm2& a, const QForm2& b);
QForm4 direct_sum(const QForm4& a, const QForm4& b);
/// Same form expressed in a new basis: the i-th new basis vector is row i of `change`.
QForm2 change_basis(const QForm2& q, const Gf2Matrix& change);
QForm4 change_basis(const QForm4& q, const Gf2Matrix& change);

/// Loops representing a class, with their linking numbers and the number of
/// points where they meet the real hyperplane section.
struct LoopData {
  int k = 0;
  std::vector<int> lambda;
  long long rc_intersections = 0;
  friend bool operator==(const LoopData&, const LoopData&) = default;
};
void validate(const LoopData& d);

int spin_value_from_loops(const LoopData& d);
int pin_value_from_loops(const LoopData& d);

/// Loop data for a class that is not a basis vector, used for cross-checks.
struct RedundantEntry {
  BitVector cls;
  LoopData loops;
  friend bool operator==(const RedundantEntry&, const RedundantEntry&) = default;
};
enum class FormKind { Spin, Pin };
/// One loop entry per basis class; redundant entries must agree with the
/// quadratic law or InputError is thrown.
std::variant<QForm2, QForm4> qform_from_loop_table(FormKind kind, const Gf2Matrix& gram,
                                                   const std::vector<LoopData>& basis_entries,
                                                   const std::vector<RedundantEntry>& redundant = {});

}  // namespace conjtop
