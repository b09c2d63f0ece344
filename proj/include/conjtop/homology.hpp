#pragma once

#include <optional>
#include <vector>

#include "conjtop/gf2.hpp"
#include "conjtop/integer.hpp"
#include "conjtop/simplicial.hpp"

namespace conjtop {

/// Abstract GF(2) chain complex C_0 ... C_top with optional extra structure.
/// boundary[k] is the matrix of C_k -> C_{k-1} (0 x dims[0] for k = 0).
struct ChainComplexData {
  std::vector<std::size_t> dims;
  std::vector<Gf2Matrix> boundary;
  /// Optional integer lifts of the boundaries, same shapes.
  std::vector<std::optional<IntMatrix>> int_boundary;
  /// Empty, or one involution chain map per degree.
  std::vector<Gf2Matrix> involution;
  /// Optional pairing on middle-degree chains, inducing the intersection form.
  std::optional<Gf2Matrix> pairing;
  /// Optional middle-degree cycle carried by the fixed set, and the total
  /// Betti number of the fixed set.
  std::optional<BitVector> fixed_class;
  std::optional<std::size_t> fixed_betti_total;

  int top() const noexcept { return static_cast<int>(dims.size()) - 1; }
  std::size_t dim(int k) const noexcept {
    return k >= 0 && k <= top() ? dims[static_cast<std::size_t>(k)] : 0;
  }
  /// C_{k+1} -> C_k; zero matrix outside the stored range.
  Gf2Matrix boundary_into(int k) const;
  bool has_involution() const noexcept { return !involution.empty(); }

  /// Throws InputError naming the first violated identity: shapes,
  /// boundary squared, involutivity, commutation, pairing symmetry.
  void validate() const;

  static ChainComplexData from_complex(const SimplicialComplex& k);
  static ChainComplexData from_complex(const SimplicialMap& tau);
  friend bool operator==(const ChainComplexData&, const ChainComplexData&) = default;
};

/// Canonical basis of H_k. Cycles are vectors over all k-chains of the
/// ambient chain complex; relative homology reports only the cells outside
/// the subcomplex through `cells`.
class HomologyBasis {
 public:
  int degree = 0;
  std::vector<BitVector> cycles;
  std::size_t betti() const noexcept { return cycles.size(); }

  /// Coordinates of a (relative) cycle in this basis. Throws InputError if
  /// the chain is not a cycle of the right length.
  BitVector coordinates(const BitVector& chain) const;
  bool is_boundary(const BitVector& chain) const { return coordinates(chain).none(); }
  /// Sum of basis cycles selected by coordinates.
  BitVector representative(const BitVector& coords) const;

 private:
  friend HomologyBasis compute_homology(const ChainComplexData&, int,
                                        const std::vector<std::vector<std::size_t>>*);
  std::size_t chain_size_ = 0;
  std::vector<std::size_t> cells_;  // relative cells, empty for absolute homology
  bool relative_ = false;
  Gf2Matrix cycle_test_;            // restricted boundary C_k -> C_{k-1}
  SubspaceReducer reducer_;
  BitVector restrict(const BitVector& chain) const;
};

/// H_k of the chain complex. `excluded`, when supplied, holds one sorted list
/// per degree of the cells of a subcomplex to quotient out.
HomologyBasis compute_homology(const ChainComplexData& c, int k,
                               const std::vector<std::vector<std::size_t>>* excluded = nullptr);

HomologyBasis homology(const ChainComplexData& c, int k);
HomologyBasis homology(const SimplicialComplex& k, int degree, const SimplicialComplex* rel = nullptr);

std::vector<std::size_t> betti_numbers(const ChainComplexData& c);
std::vector<std::size_t> betti_numbers(const SimplicialComplex& k);
std::size_t total_betti(const SimplicialComplex& k);

/// Chain map f_# : C_k -> C_k expressed on the bases of H_k.
Gf2Matrix induced_map(const HomologyBasis& source, const HomologyBasis& target,
                      const Gf2Matrix& chain_map);
Gf2Matrix induced_map(const SimplicialMap& f, int k);

/// Cocycles Kronecker-dual to the homology basis: phi_i(h_j) = delta_ij.
std::vector<BitVector> dual_cocycles(const ChainComplexData& c, const HomologyBasis& h);

/// Sum of top simplices after the closed-pseudomanifold check. Throws
/// InputError naming the violating face or the disconnected part.
BitVector fundamental_class(const SimplicialComplex& k);

/// Alexander-Whitney cup product a (degree p) with b (degree n - p)
/// evaluated on the fundamental cycle.
bool cup_pairing(const SimplicialComplex& k, int p, const BitVector& a, const BitVector& b);
/// Same, on an explicit top chain.
bool cup_evaluate(const SimplicialComplex& k, int p, const BitVector& a, const BitVector& b,
                  const BitVector& top_chain);

/// Intersection form on H_mid in the canonical basis. For complexes it is
/// obtained by inverting the cup-product form of the dual cocycles; throws
/// InputError when the Poincare duality audit fails.
Gf2Matrix intersection_form(const SimplicialComplex& k, const HomologyBasis& mid);
Gf2Matrix intersection_form(const ChainComplexData& c, const HomologyBasis& mid);

/// Cup-product form on H^p x H^{n-p} in the dual cocycle bases.
Gf2Matrix cup_form(const SimplicialComplex& k, int p);

/// Orbit chain complex of a pointwise-regular involution: one cell per
/// orbit of simplices, relative to the fixed subcomplex when requested.
/// Its homology is H_*(K/tau) resp. H_*(K/tau, Fix).
ChainComplexData orbit_chain_complex(const SimplicialMap& tau, bool relative_to_fixed);

/// Integer homology from integer boundaries: ranks and torsion per degree.
struct IntegerHomology {
  std::vector<std::size_t> ranks;
  std::vector<IntVector> torsion;  // invariant factors > 1
};
IntegerHomology integer_homology(const ChainComplexData& c);
/// Oriented boundary matrices with the sign (-1)^i for dropping vertex i.
std::vector<IntMatrix> oriented_boundaries(const SimplicialComplex& k);

}  // namespace conjtop
