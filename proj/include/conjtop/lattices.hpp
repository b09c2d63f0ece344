#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conjtop/integer.hpp"
#include "conjtop/involutions.hpp"

namespace conjtop {

/// Second integer homology of a complexification with its intersection form
/// and the isometry induced by conjugation.
struct IntegerLattice {
  std::size_t rank = 0;
  IntMatrix gram;
  IntMatrix isometry;
  std::map<std::string, IntVector> marks;
  /// Relation matrix whose cokernel is the ambient integral homology, when known.
  std::optional<IntMatrix> presentation;
  /// Euler characteristic of the real part, when known.
  std::optional<long long> real_euler_characteristic;

  Integer pairing(const IntVector& x, const IntVector& y) const;
  const IntVector& mark(const std::string& name) const;
  friend bool operator==(const IntegerLattice&, const IntegerLattice&) = default;
};

/// Validates symmetry of the form, the isometry and involution identities,
/// and the lengths of marked classes. Each failure throws InputError naming it.
IntegerLattice build_lattice(IntMatrix gram, IntMatrix isometry, std::map<std::string, IntVector> marks = {});

struct InvariantSublattices {
  std::vector<IntVector> invariant;       // basis of ker(T - I)
  std::vector<IntVector> anti_invariant;  // basis of ker(T + I)
};
InvariantSublattices invariant_sublattices(const IntegerLattice& l);

/// The form (x, T y) reduced modulo 2.
BilinearFormGF2 conj_form_mod2(const IntegerLattice& l);

/// Transfer maps between the lattice and the quotient lattice:
/// push is quotient_rank x rank, pull is rank x quotient_rank.
struct QuotientTransferData {
  std::size_t quotient_rank = 0;
  IntMatrix push;
  IntMatrix pull;
  friend bool operator==(const QuotientTransferData&, const QuotientTransferData&) = default;
};

struct TransferReport {
  bool composition_is_double = false;  // push * pull = 2
  bool pull_injective = false;
  bool image_invariant = false;        // T * pull = pull
  bool invariant_doubles_into_image = false;
  std::vector<std::string> failures;
  bool ok() const noexcept { return failures.empty(); }
};
/// Evaluates every transfer identity without throwing (shape mismatches
/// aside).
TransferReport transfer_report(const IntegerLattice& l, const QuotientTransferData& q);
/// Same checks; a failed contract identity throws InputError, and an
/// invariant class whose double misses the image throws ModelIntegrityError.
TransferReport transfer_audit(const IntegerLattice& l, const QuotientTransferData& q);

struct OrientationClassVerdict {
  bool realizable = false;
  std::optional<IntVector> delta;  // alpha = 2 * pull(delta)
};
OrientationClassVerdict orientation_class_check(const IntegerLattice& l, const QuotientTransferData& q,
                                                const IntVector& alpha);

struct OrderVerdict {
  bool obstructed = false;
  IntVector witness;
  std::string message;
};
/// An invariant class of odd self-intersection d rules out type I_abs.
/// Requires T beta = beta and beta . beta = d modulo 2.
OrderVerdict order_obstruction(const IntegerLattice& l, long long d, const IntVector& beta);

struct TorsionReport {
  bool presentation_supplied = false;
  IntVector torsion;        // invariant factors greater than one
  bool two_torsion = false;
  std::string note;
};
TorsionReport torsion_audit(const IntegerLattice& l);

struct SelfIntersectionCheck {
  Integer self_intersection;
  long long expected = 0;  // minus the Euler characteristic of the real part
  bool holds = false;
};
/// alpha . alpha against -chi, when the lattice marks both.
std::optional<SelfIntersectionCheck> self_intersection_check(const IntegerLattice& l,
                                                             const std::string& alpha_mark = "alpha");

}  // namespace conjtop
