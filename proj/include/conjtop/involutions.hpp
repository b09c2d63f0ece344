#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conjtop/gf2.hpp"
#include "conjtop/homology.hpp"
#include "conjtop/simplicial.hpp"

namespace conjtop {

/// Symmetric bilinear form over GF(2) given by its Gram matrix.
struct BilinearFormGF2 {
  Gf2Matrix gram;

  std::size_t dimension() const noexcept { return gram.rows(); }
  bool operator()(const BitVector& x, const BitVector& y) const { return x.dot(gram.apply(y)); }
  bool is_nondegenerate() const { return gram.rows() == gram.cols() && gf2_rank(gram) == gram.rows(); }
  friend bool operator==(const BilinearFormGF2&, const BilinearFormGF2&) = default;
};

struct FixedSet {
  SimplicialComplex complex;          // subcomplex in the ambient numbering
  std::vector<int> component_dimensions;
  std::vector<std::size_t> betti;     // of the fixed set
  std::size_t total_betti = 0;
  int middle_degree = 0;
  BitVector middle_cycle;             // sum of middle simplices of middle-dimensional components
  BitVector middle_class;             // coordinates in the middle homology of the ambient complex

  int dimension() const noexcept { return complex.dimension(); }
  bool empty() const noexcept { return complex.dimension() < 0; }
};

/// Fixed subcomplex of a pointwise-regular involution on a closed
/// even-dimensional complex, with its middle-dimensional class.
FixedSet fixed_subcomplex(const SimplicialMap& tau);

/// Everything needed to evaluate the form of an involution on middle homology.
struct InvolutionFormData {
  int half_dimension = 0;
  HomologyBasis middle;
  Gf2Matrix intersection;  // x . y
  Gf2Matrix tau_star;      // induced map on middle homology
  BilinearFormGF2 form;    // x . tau_* y
};

InvolutionFormData involution_form_data(const SimplicialMap& tau);
InvolutionFormData involution_form_data(const ChainComplexData& c);
BilinearFormGF2 involution_form(const SimplicialMap& tau);
BilinearFormGF2 involution_form(const ChainComplexData& c);

/// Unique solution of B chi = diag(B). Throws InputError for a degenerate B,
/// naming a kernel vector.
BitVector characteristic_class(const BilinearFormGF2& b);
bool is_even(const BilinearFormGF2& b);

struct FixedClassReport {
  bool holds = false;
  int fixed_dimension = -1;
  int half_dimension = 0;
  BitVector fixed_class;
  BitVector characteristic;
};
/// Checks that the middle-dimensional part of the fixed set realizes the
/// characteristic class of the involution form. Rejects fixed sets of
/// dimension above the middle.
FixedClassReport verify_fixed_class_characteristic(const SimplicialMap& tau);
FixedClassReport verify_fixed_class_characteristic(const ChainComplexData& c);

enum class SurfaceType { I_abs, I_rel, II };
std::string to_string(SurfaceType t);
SurfaceType parse_surface_type(const std::string& s);

struct TypeVerdict {
  SurfaceType type = SurfaceType::II;
  BitVector witness;                  // class of the fixed set
  std::optional<BitVector> compared;  // hyperplane class when supplied
};
/// I_abs when the fixed class vanishes, I_rel when it equals a nonzero h,
/// II otherwise.
TypeVerdict classify_class(const BitVector& fixed_class, const std::optional<BitVector>& h);
TypeVerdict classify_type(const SimplicialMap& tau, const std::optional<BitVector>& h = std::nullopt);
TypeVerdict classify_type(const ChainComplexData& c, const std::optional<BitVector>& h = std::nullopt);

struct HarnackReport {
  std::size_t fixed_total = 0;
  std::size_t ambient_total = 0;
  bool is_m = false;
};
/// Throws ModelIntegrityError when the fixed set is larger than the bound.
HarnackReport harnack_audit(const SimplicialMap& tau);
HarnackReport harnack_audit(const ChainComplexData& c);
HarnackReport harnack_from_totals(std::size_t fixed_total, std::size_t ambient_total);

struct SmithReport {
  bool h1_trivial = false;
  std::size_t kernel_dimension = 0;
  bool bound_asserted = false;
  /// (k, dim H_k(K/tau, Fix)) for k = 4, 3, 2.
  std::vector<std::pair<int, std::size_t>> relative_quotient_ranks;
};
/// Kernel of H_2(Fix) -> H_2(K) for a four-dimensional complex; asserts it
/// has dimension at most one when H_1(K) vanishes.
SmithReport smith_kernel_bound(const SimplicialMap& tau);
/// Assertion semantics on its own: throws ModelIntegrityError for a kernel of
/// dimension two or more under trivial H_1.
void assert_smith_bound(std::size_t kernel_dimension, bool h1_trivial);

struct ParityVerdict {
  bool obstructed = false;  // the class cannot bound
  BitVector witness;
  std::string message;
};
/// Odd d with a witness of odd self-pairing rules out type I_abs.
ParityVerdict parity_obstruction(long long d, const BilinearFormGF2& b, const BitVector& invariant_class);

struct MVarietyReport {
  bool is_m = false;
  bool even_form = false;
  bool fixed_class_zero = false;
  bool vacuous = true;
  bool acts_trivially = false;  // induced map is the identity in every degree
};
/// Evaluates: M-variety with even intersection form implies zero fixed
/// class, and with it the triviality of the action in homology. Throws
/// ModelIntegrityError on violation.
MVarietyReport check_m_variety_bounds(const SimplicialMap& tau);
MVarietyReport check_m_variety_bounds(const ChainComplexData& c);

}  // namespace conjtop
