#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conjtop/gf2.hpp"
#include "conjtop/involutions.hpp"
#include "conjtop/simplicial.hpp"

namespace conjtop {

/// Double cover of a base complex with its deck involution. Vertices of the
/// total space are ordered by (base vertex, lift), so the projection is
/// monotone and orientation signs transfer from the base unchanged.
struct CoverComplex {
  ComplexPtr base;
  ComplexPtr total;
  SimplicialMap projection;
  SimplicialMap deck;
  SimplicialComplex branch;           // branch locus, base numbering
  std::vector<int> sheet_labels;      // per top simplex of the total space
  std::vector<std::size_t> base_top;  // base top simplex under each total top simplex
};

/// Unbranched cover defined by a one-cocycle: each simplex lifts to two,
/// changing sheet along edges where w = 1.
CoverComplex double_cover_unbranched(ComplexPtr k, const BitVector& w);

/// Cut-and-glue cover of a closed pseudomanifold along a codimension-one
/// chain C, branched over A = closure of the boundary of C. A must be full.
CoverComplex branched_double_cover(ComplexPtr k, const BitVector& c);

/// Audits the cover identities; throws ModelIntegrityError.
void check_cover(const CoverComplex& cover);

/// Orientation of top simplices up to a global sign. The canonical
/// representative gives the first top simplex the sign +1.
class SemiOrientation {
 public:
  SemiOrientation() = default;
  SemiOrientation(SimplicialComplex carrier, std::vector<int> signs);

  const SimplicialComplex& carrier() const noexcept { return carrier_; }
  const std::vector<int>& signs() const noexcept { return signs_; }
  int sign_of(const Simplex& top) const;
  /// Coherent across every interior codimension-one face of the carrier.
  bool is_coherent() const;

  friend bool operator==(const SemiOrientation&, const SemiOrientation&) = default;

 private:
  SimplicialComplex carrier_;
  std::vector<int> signs_;
};

/// Sign induced on the face opposite vertex position i of a top simplex.
inline int induced_sign(int top_sign, std::size_t position) { return position % 2 ? -top_sign : top_sign; }

/// Coherent orientation of the top simplices not crossing the cut faces
/// (indices into simplices(dim - 1)); nullopt when some component is
/// non-orientable. Components are seeded with +1 in increasing order.
std::optional<std::vector<int>> orient_top_simplices(const SimplicialComplex& k,
                                                     const std::vector<char>& cut_face);

/// Signs of top simplices carried by an automorphism: (f_* s)(f sigma) =
/// s(sigma) * sign of the vertex permutation.
std::vector<int> push_orientation(const SimplicialMap& f, const std::vector<int>& signs);

bool is_orientable(const SimplicialComplex& k);

struct DividingResult {
  bool dividing = false;
  std::size_t component_count = 0;
  std::vector<std::vector<std::size_t>> halves;  // top simplex indices
};
/// Components of K minus the fixed curve. Throws ModelIntegrityError when
/// the components match neither the dividing nor the non-dividing case.
DividingResult dividing_test(const SimplicialMap& tau);

struct CurveOrientation {
  SemiOrientation semi;              // on the fixed curve
  std::vector<int> half_signs;       // orientation of the chosen half, per top simplex (0 outside)
  std::size_t chosen_half = 0;
  bool halves_opposite = false;
};
/// Complex semi-orientation of a dividing fixed curve induced by a half.
CurveOrientation curve_complex_semiorientation(const SimplicialMap& tau, std::size_t half = 0);

enum class Extension { Extends, Flips, Mixed };
std::string to_string(Extension e);

struct CurveComponentVerdict {
  std::vector<Simplex> faces;
  Extension verdict = Extension::Extends;
};
/// For each component of Y, whether the coherent orientation s of X minus Y
/// extends across it or flips there. Throws InputError if s is incoherent
/// away from Y.
std::vector<CurveComponentVerdict> extendibility_check(const SimplicialComplex& x,
                                                       const SimplicialComplex& y,
                                                       const SemiOrientation& s);

/// Orientation of X minus Y used by default: coherent off Y, seeded per
/// component with +1.
SemiOrientation complement_orientation(const SimplicialComplex& x, const SimplicialComplex& y);

struct OrientationCover {
  CoverComplex cover;
  SemiOrientation semi;   // on the total space
  bool deck_reverses = false;
};
/// The cover D_Y X: cut X along Y, take two copies, reglue crossing sheets,
/// orienting the copies oppositely.
OrientationCover orientation_cover(ComplexPtr x, const SimplicialComplex& y);

struct Comparison {
  std::vector<std::size_t> part_h;        // top simplices of H
  std::vector<std::size_t> part_rest;     // complement
  std::optional<bool> agree_on_h;         // nullopt when the part is empty
  std::optional<bool> agree_on_rest;
};
/// Compares two orientations s1, s2 flipping exactly across homologous
/// curves Y1, Y2 via a 2-chain H with boundary Y1 + Y2.
Comparison compare_mod_curves(const SimplicialComplex& x, const SimplicialComplex& y1,
                              const SimplicialComplex& y2, const SemiOrientation& s1,
                              const SemiOrientation& s2);
/// Same labeling evaluated on a prescribed H (used to audit stability).
Comparison compare_on_chain(const SimplicialComplex& x, const BitVector& h, const SemiOrientation& s1,
                            const SemiOrientation& s2);

struct Lifts {
  SimplicialMap plus;
  SimplicialMap minus;
  bool plus_squared_is_deck = false;  // otherwise the identity
};
/// Both lifts of a base involution to the total space, with minus = deck
/// after plus. Throws InputError when the cover is not preserved.
Lifts lift_involution(const CoverComplex& cover, const SimplicialMap& tau);

struct KharlamovReport {
  bool applicable = false;
  bool holds = true;
  long long chi = 0;
  long long s_ca = 0;     // self-intersection in the complexification
  long long s_quot = 0;   // in the quotient
  std::string trace;
};
/// Arithmetic of the congruence chi = 0 mod 8; never throws.
KharlamovReport kharlamov_trace(long long chi, SurfaceType type, bool h1_trivial);
/// Same, throwing ModelIntegrityError when applicable and violated.
KharlamovReport kharlamov_check(long long chi, SurfaceType type, bool h1_trivial);

}  // namespace conjtop
