#include "conjtop/builders.hpp"
#include "conjtop/model.hpp"

namespace conjtop {

namespace {

using Rows = std::vector<std::vector<long long>>;

std::vector<Vertex> grid_map(int m, int n, Vertex (*image)(int, int, int, int)) {
  std::vector<Vertex> out;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) out.push_back(image(i, j, m, n));
  return out;
}

void add_involution(ModelFile& m, const std::string& name, SimplicialComplex k, std::vector<Vertex> tau,
                    const std::string& complex_name = "") {
  const std::string cname = complex_name.empty() ? name : complex_name;
  m.complexes.emplace(cname, std::move(k));
  m.maps.emplace(name, MapSpec{cname, cname, std::move(tau)});
}

ChainComplexData t4_chain() {
  // Exterior algebra of Z^4 with zero differentials, basis of the middle
  // degree ordered e12 e13 e14 e23 e24 e34.
  ChainComplexData c;
  c.dims = {1, 4, 6, 4, 1};
  for (std::size_t k = 0; k < c.dims.size(); ++k) {
    c.boundary.emplace_back(k == 0 ? 0 : c.dims[k - 1], c.dims[k]);
    c.involution.push_back(Gf2Matrix::identity(c.dims[k]));
  }
  Gf2Matrix p(6, 6);
  for (std::size_t i = 0; i < 6; ++i) p.set(i, 5 - i);
  c.pairing = p;
  c.fixed_class = BitVector(6);
  c.fixed_betti_total = 16;
  return c;
}

ModelFile build_library() {
  ModelFile m;
  add_involution(m, "square_circle", build::cycle(4), {0, 3, 2, 1});
  add_involution(m, "hexagon_circle", build::cycle(6), {3, 4, 5, 0, 1, 2});

  const auto reflection = grid_map(4, 4, [](int i, int j, int, int n) { return i * n + (n - j) % n; });
  const auto diagonal = grid_map(4, 4, [](int i, int j, int, int n) { return j * n + i; });
  const auto shift = grid_map(4, 4, [](int i, int j, int m, int n) { return ((i + 2) % m) * n + j; });
  add_involution(m, "torus_reflection", build::grid_torus(4, 4, true), reflection);
  add_involution(m, "torus_diagonal", build::grid_torus(4, 4, false), diagonal, "torus_grid");
  m.maps.emplace("torus_free", MapSpec{"torus_grid", "torus_grid", shift});
  m.complexes.emplace("seven_vertex_torus", build::seven_vertex_torus());

  add_involution(m, "klein_bottle", build::grid_klein_bottle(4, 3),
                 grid_map(4, 3, [](int i, int j, int m, int n) { return ((i + 2) % m) * n + j; }));
  m.complexes.emplace("klein_bottle_curve", SimplicialComplex::from_simplices(12, {{0, 3}, {3, 6}, {6, 9}, {0, 9}}));
  m.complexes.emplace("klein_bottle_curve2", SimplicialComplex::from_simplices(12, {{1, 4}, {4, 7}, {7, 10}, {1, 10}}));

  m.complexes.emplace("rp2_6vertex", build::six_vertex_rp2());
  m.complexes.emplace("rp2_6vertex_curve", SimplicialComplex::from_simplices(6, {{0, 1}, {1, 3}, {0, 3}}));

  m.complexes.emplace("sphere_boundary_3simplex", build::boundary_of_simplex(3));
  add_involution(m, "octahedron", build::octahedron(), {5, 1, 2, 3, 4, 0});

  // Subdivided tetrahedron boundary: vertex 4 is the midpoint of 01, vertex 9
  // the midpoint of 23. The cuts are arcs joining the branch points.
  m.complexes.emplace("sphere_sd", barycentric_subdivide(build::boundary_of_simplex(3), nullptr).complex);
  m.complexes.emplace("sphere_sd_cut", SimplicialComplex::from_simplices(14, {{0, 4}, {1, 4}}));
  m.complexes.emplace("sphere_sd_cut4", SimplicialComplex::from_simplices(14, {{0, 4}, {1, 4}, {2, 9}, {3, 9}}));

  const build::Equivariant refl{build::grid_torus(4, 4, true), reflection};
  const build::Equivariant diag{build::grid_torus(4, 4, false), diagonal};
  auto g_div = build::connected_sum(refl, 0, refl, 0);
  auto g_non = build::connected_sum(refl, 0, diag, 0);
  add_involution(m, "genus2_dividing", std::move(g_div.complex), std::move(g_div.tau));
  add_involution(m, "genus2_nondividing", std::move(g_non.complex), std::move(g_non.tau));

  const auto s2 = build::boundary_of_simplex(3);
  std::vector<Vertex> swap;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) swap.push_back(b * 4 + a);
  add_involution(m, "quadric", build::ordered_product(s2, s2), swap);

  m.chains.emplace("t4_chain", t4_chain());

  LatticeSpec quadric;
  quadric.lattice = build_lattice(IntMatrix::from_rows(Rows{{0, 1}, {1, 0}}), IntMatrix::from_rows(Rows{{0, 1}, {1, 0}}),
                                  {{"alpha", {2, 2}}, {"h", {1, 1}}});
  quadric.lattice.presentation = IntMatrix(2, 0);
  quadric.transfer = QuotientTransferData{1, IntMatrix::from_rows(Rows{{1, 1}}), IntMatrix::from_rows(Rows{{1}, {1}})};
  m.lattices.emplace("quadric", std::move(quadric));

  LatticeSpec t4;
  Rows gram(6, std::vector<long long>(6, 0));
  gram[0][5] = gram[5][0] = 1;
  gram[1][4] = gram[4][1] = -1;
  gram[2][3] = gram[3][2] = 1;
  Rows iso(6, std::vector<long long>(6, 0));
  const long long diag_signs[6] = {-1, 1, -1, -1, 1, -1};
  for (int i = 0; i < 6; ++i) iso[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = diag_signs[i];
  t4.lattice = build_lattice(IntMatrix::from_rows(gram), IntMatrix::from_rows(iso));
  m.lattices.emplace("t4", std::move(t4));

  LatticeSpec odd;
  odd.lattice = build_lattice(IntMatrix::from_rows(Rows{{3}}), IntMatrix::identity(1), {{"beta", {1}}});
  odd.order = std::pair<long long, std::string>{3, "beta"};
  m.lattices.emplace("odd_order", std::move(odd));

  LoopTable spin;
  spin.kind = FormKind::Spin;
  spin.gram = Gf2Matrix::from_rows({{0, 1}, {1, 0}});
  spin.basis = {LoopData{1, {1}, 0}, LoopData{1, {1}, 0}};
  spin.redundant = {RedundantEntry{BitVector::from_bits({1, 1}), LoopData{1, {0}, 0}}};
  m.loops.emplace("torus_spin", std::move(spin));

  LoopTable pin;
  pin.kind = FormKind::Pin;
  pin.gram = Gf2Matrix::from_rows({{1}});
  pin.basis = {LoopData{1, {0}, 1}};
  m.loops.emplace("rp2_pin", std::move(pin));

  m.validate();
  return m;
}

}  // namespace

const ModelFile& model_library() {
  static const ModelFile library = build_library();
  return library;
}

}  // namespace conjtop
