#pragma once

#include <vector>

#include "conjtop/simplicial.hpp"

namespace conjtop::build {

/// Complex together with a vertex map on it (typically an involution).
struct Equivariant {
  SimplicialComplex complex;
  std::vector<Vertex> tau;
};

SimplicialComplex boundary_of_simplex(int n);
/// Closed edge cycle 0-1-...-(n-1)-0.
SimplicialComplex cycle(int n);

/// m x n grid torus, vertex (i, j) numbered i * n + j. The square spanned by
/// (i, j)..(i+1, j+1) is cut along (i, j)-(i+1, j+1), except in odd columns j
/// when alternating, where the cut is (i+1, j)-(i, j+1).
SimplicialComplex grid_torus(int m, int n, bool alternate_by_column);

/// Klein bottle from an m x n grid whose last row is glued to the first by
/// (i, n) ~ (-i, 0).
SimplicialComplex grid_klein_bottle(int m, int n);

SimplicialComplex seven_vertex_torus();
SimplicialComplex six_vertex_rp2();
/// Octahedron with poles 0 and 5 and equator 1-2-3-4.
SimplicialComplex octahedron();

/// Ordered (staircase) triangulation of the product of two complexes.
/// Vertex (a, b) is numbered a * nb + b.
SimplicialComplex ordered_product(const SimplicialComplex& a, const SimplicialComplex& b);

/// Equivariant connected sum of two surfaces at fixed vertices whose links
/// are cycles of equal length. The identification of the two links is the
/// first rotation/reflection that intertwines the involutions and yields a
/// closed surface with the expected Euler characteristic.
Equivariant connected_sum(const Equivariant& a, Vertex va, const Equivariant& b, Vertex vb);

/// Link of a vertex in a surface as a cyclically ordered vertex list.
std::vector<Vertex> link_cycle(const SimplicialComplex& k, Vertex v);

}  // namespace conjtop::build
