#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "conjtop/gf2.hpp"

namespace conjtop {

using Vertex = int;
/// Strictly increasing vertex indices.
using Simplex = std::vector<Vertex>;

std::string to_string(const Simplex& s);

/// Finite abstract simplicial complex over the vertex range [0, vertex_count).
/// Only indices that occur as 0-simplices are vertices of the complex; this
/// lets subcomplexes share the numbering of the ambient complex.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Closure of the given simplices (each is sorted and deduplicated first).
  static SimplicialComplex from_simplices(int vertex_count, const std::vector<Simplex>& simplices);

  int vertex_count() const noexcept { return vertex_count_; }
  /// -1 for the empty complex.
  int dimension() const noexcept { return static_cast<int>(simplices_.size()) - 1; }
  std::size_t count(int k) const noexcept {
    return k >= 0 && k <= dimension() ? simplices_[static_cast<std::size_t>(k)].size() : 0;
  }
  std::size_t total_count() const noexcept;
  /// Lexicographically sorted k-simplices.
  const std::vector<Simplex>& simplices(int k) const;
  std::optional<std::size_t> index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }
  std::vector<Vertex> vertices() const;
  std::vector<Simplex> maximal_simplices() const;

  /// Matrix of the boundary C_k -> C_{k-1}; 0 x n_0 for k = 0.
  Gf2Matrix boundary(int k) const;
  long long euler_characteristic() const;
  bool is_subcomplex_of(const SimplicialComplex& other) const;
  bool is_pure() const;

  /// Chain indicator of the given k-simplices.
  BitVector chain(int k, const std::vector<Simplex>& simplices) const;
  std::vector<Simplex> support(int k, const BitVector& chain) const;

  /// Every codimension-one face with the top simplices containing it, ordered
  /// by face; faces with other than two cofaces are reported too.
  struct FaceIncidence {
    Simplex face;
    std::vector<std::size_t> cofaces;  // indices into simplices(dimension())
  };
  std::vector<FaceIncidence> top_face_incidences() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<std::vector<Simplex>> simplices_;
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

inline ComplexPtr make_complex(SimplicialComplex k) {
  return std::make_shared<const SimplicialComplex>(std::move(k));
}

/// Vertex map that carries every simplex onto a simplex of the target.
class SimplicialMap {
 public:
  SimplicialMap() = default;
  /// Throws InputError naming the first simplex whose image is not a simplex.
  SimplicialMap(ComplexPtr source, ComplexPtr target, std::vector<Vertex> images);

  static SimplicialMap identity(ComplexPtr k);

  const SimplicialComplex& source() const { return *source_; }
  const SimplicialComplex& target() const { return *target_; }
  const ComplexPtr& source_ptr() const noexcept { return source_; }
  const ComplexPtr& target_ptr() const noexcept { return target_; }
  const std::vector<Vertex>& images() const noexcept { return images_; }
  Vertex operator()(Vertex v) const { return images_[static_cast<std::size_t>(v)]; }

  /// Sorted, deduplicated image vertex set.
  Simplex image(const Simplex& s) const;
  bool is_degenerate_on(const Simplex& s) const { return image(s).size() != s.size(); }

  bool is_automorphism() const;
  bool is_involution() const;
  /// Sign of the vertex permutation from the sorted order of s to the sorted
  /// order of its image (s must be mapped nondegenerately).
  int orientation_sign(const Simplex& s) const;

  /// Matrix of the chain map C_k(source) -> C_k(target) over GF(2).
  Gf2Matrix chain_map(int k) const;

  friend SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);  // g after f
  friend bool operator==(const SimplicialMap& a, const SimplicialMap& b);

 private:
  ComplexPtr source_;
  ComplexPtr target_;
  std::vector<Vertex> images_;
};

struct Subdivision {
  SimplicialComplex complex;
  std::optional<SimplicialMap> map;
};

/// Barycentric subdivision. New vertices are the simplices of K ordered by
/// (dimension, lexicographic); an optional automorphism is carried along.
Subdivision barycentric_subdivide(const SimplicialComplex& k, const SimplicialMap* f = nullptr);

/// Throws NonRegularInvolution when some simplex is carried onto itself
/// without being fixed pointwise.
void check_pointwise_regular(const SimplicialMap& tau);

/// Pointwise regularity plus: distinct orbits of simplices have distinct
/// projected vertex sets, so the orbit space is a simplicial complex.
void check_quotient_regular(const SimplicialMap& tau);

struct Quotient {
  SimplicialComplex complex;
  SimplicialMap projection;
};

/// Orbit complex K/tau; vertices are orbits ordered by least representative.
Quotient quotient_by_involution(const SimplicialMap& tau);

struct Regularized {
  ComplexPtr complex;
  SimplicialMap tau;
  int subdivisions = 0;
};

/// Subdivides at most twice until the involution is quotient-regular.
Regularized regularize(const SimplicialMap& tau);

}  // namespace conjtop
