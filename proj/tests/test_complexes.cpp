#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "conjtop/builders.hpp"
#include "conjtop/errors.hpp"
#include "conjtop/homology.hpp"
#include "conjtop/model.hpp"
#include "oracle.hpp"

using namespace conjtop;

namespace {

std::vector<int> oracle_betti(const SimplicialComplex& k) {
  std::vector<oracle::Cell> tops;
  for (const auto& s : k.maximal_simplices()) tops.push_back(s);
  return oracle::betti_mod2(tops);
}

std::vector<int> as_int(const std::vector<std::size_t>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("textbook Betti numbers") {
  CHECK(betti_numbers(build::boundary_of_simplex(3)) == std::vector<std::size_t>{1, 0, 1});
  CHECK(betti_numbers(build::seven_vertex_torus()) == std::vector<std::size_t>{1, 2, 1});
  CHECK(betti_numbers(build::six_vertex_rp2()) == std::vector<std::size_t>{1, 1, 1});
  CHECK(betti_numbers(build::grid_klein_bottle(4, 3)) == std::vector<std::size_t>{1, 2, 1});
  CHECK(betti_numbers(model_library().complexes.at("quadric")) == std::vector<std::size_t>{1, 0, 2, 0, 1});
}

TEST_CASE("Betti numbers of every bundled complex match the dense oracle") {
  for (const auto& [name, k] : model_library().complexes) {
    INFO(name);
    CHECK(as_int(betti_numbers(k)) == oracle_betti(k));
  }
}

TEST_CASE("Euler characteristic from counts and from Betti numbers") {
  CHECK(build::boundary_of_simplex(3).euler_characteristic() == 2);
  CHECK(build::seven_vertex_torus().euler_characteristic() == 0);
  CHECK(build::six_vertex_rp2().euler_characteristic() == 1);
  for (const auto& [name, k] : model_library().complexes) {
    const auto b = betti_numbers(k);
    long long chi = 0;
    for (std::size_t i = 0; i < b.size(); ++i) chi += (i % 2 ? -1 : 1) * static_cast<long long>(b[i]);
    CHECK(k.euler_characteristic() == chi);
  }
}

TEST_CASE("boundary squared vanishes") {
  for (const auto& [name, k] : model_library().complexes)
    for (int d = 2; d <= k.dimension(); ++d) CHECK((k.boundary(d - 1) * k.boundary(d)).is_zero());
  for (const auto& [name, k] : model_library().complexes) {
    const auto ints = oriented_boundaries(k);
    for (std::size_t d = 2; d < ints.size(); ++d) CHECK((ints[d - 1] * ints[d]).is_zero());
  }
}

TEST_CASE("homology basis vectors are independent cycles") {
  const auto q = model_library().complexes.at("quadric");
  for (int d = 0; d <= 4; ++d) {
    const HomologyBasis h = homology(q, d);
    for (std::size_t i = 0; i < h.betti(); ++i) {
      if (d > 0) CHECK(q.boundary(d).apply(h.cycles[i]).none());
      CHECK(h.coordinates(h.cycles[i]) == BitVector::unit(h.betti(), i));
    }
  }
}

TEST_CASE("relative homology") {
  const auto s2 = build::boundary_of_simplex(3);
  const auto point = SimplicialComplex::from_simplices(4, {{0}});
  CHECK(homology(s2, 0, &point).betti() == 0);
  CHECK(homology(s2, 2, &point).betti() == 1);
  const auto other = build::cycle(5);
  CHECK_THROWS_AS(homology(s2, 1, &other), InputError);
  // torus relative to a meridian circle: one class survives in each of H_1, H_2
  const auto t = build::grid_torus(4, 4, false);
  const auto meridian = SimplicialComplex::from_simplices(16, {{0, 4}, {4, 8}, {8, 12}, {0, 12}});
  CHECK(homology(t, 1, &meridian).betti() == 1);
  CHECK(homology(t, 2, &meridian).betti() == 1);
}

TEST_CASE("induced maps") {
  const auto& lib = model_library();
  const auto t = lib.complex("torus_reflection");
  CHECK(induced_map(SimplicialMap::identity(t), 1) == Gf2Matrix::identity(2));
  // the reflection acts as diag(1, -1), which is the identity mod 2
  CHECK(induced_map(lib.map("torus_reflection"), 1) == Gf2Matrix::identity(2));
  const auto free = lib.map("torus_free");
  const auto sq = induced_map(free, 1) * induced_map(free, 1);
  CHECK(sq == Gf2Matrix::identity(2));
  CHECK(induced_map(compose(free, free), 1) == sq);
  const auto swap = lib.map("torus_diagonal");
  CHECK(induced_map(compose(swap, free), 1) == induced_map(swap, 1) * induced_map(free, 1));
}

TEST_CASE("barycentric subdivision") {
  const auto tri = build::cycle(3);
  const auto sd = barycentric_subdivide(tri).complex;
  CHECK(sd.vertex_count() == 6);
  CHECK(sd.count(1) == 6);
  for (const auto& name : {"torus_reflection", "rp2_6vertex", "klein_bottle", "octahedron"}) {
    const auto k = model_library().complexes.at(name);
    const auto s = barycentric_subdivide(k).complex;
    CHECK(s.euler_characteristic() == k.euler_characteristic());
    CHECK(betti_numbers(s) == betti_numbers(k));
  }
  const auto tau = model_library().map("torus_reflection");
  const auto sub = barycentric_subdivide(tau.source(), &tau);
  REQUIRE(sub.map);
  CHECK(sub.map->is_involution());
  CHECK(compose(*sub.map, *sub.map) == SimplicialMap::identity(sub.map->source_ptr()));
}

TEST_CASE("quotients by involutions") {
  const auto& lib = model_library();
  const auto arc = quotient_by_involution(lib.map("square_circle"));
  CHECK(arc.complex.count(1) == 2);
  CHECK(arc.complex.euler_characteristic() == 1);
  const auto circle = quotient_by_involution(lib.map("hexagon_circle"));
  CHECK(circle.complex.vertex_count() == 3);
  CHECK(betti_numbers(circle.complex) == std::vector<std::size_t>{1, 1});
  const auto t = lib.complex("torus_reflection");
  const auto same = quotient_by_involution(SimplicialMap::identity(t));
  CHECK(same.complex == *t);
}

TEST_CASE("non-regular involutions are rejected with the offending simplex") {
  // exchanging 0 and 1 on the tetrahedron boundary flips the edge 01
  const auto s2 = make_complex(build::boundary_of_simplex(3));
  const SimplicialMap flip(s2, s2, {1, 0, 2, 3});
  try {
    check_pointwise_regular(flip);
    FAIL("expected a regularity failure");
  } catch (const NonRegularInvolution& e) {
    CHECK_FALSE(e.offending().empty());
  }
  const auto reg = regularize(flip);
  CHECK(reg.subdivisions >= 1);
  CHECK_NOTHROW(check_quotient_regular(reg.tau));
}

TEST_CASE("fundamental classes") {
  const auto s2 = build::boundary_of_simplex(3);
  const auto f = fundamental_class(s2);
  CHECK(f.count() == 4);
  CHECK(s2.boundary(2).apply(f).none());
  const auto disk = SimplicialComplex::from_simplices(3, {{0, 1, 2}});
  CHECK_THROWS_AS(fundamental_class(disk), InputError);
  const auto q = model_library().complexes.at("quadric");
  const auto fq = fundamental_class(q);
  CHECK(fq.count() == 96);
  CHECK(q.boundary(4).apply(fq).none());
}

TEST_CASE("cup products on the torus and the quadric") {
  const auto t = build::seven_vertex_torus();
  const auto c = ChainComplexData::from_complex(t);
  const auto h1 = homology(c, 1);
  const auto dual = dual_cocycles(c, h1);
  REQUIRE(dual.size() == 2);
  CHECK(cup_pairing(t, 1, dual[0], dual[1]));
  CHECK_FALSE(cup_pairing(t, 1, dual[0], dual[0]));
  CHECK_FALSE(cup_pairing(t, 1, dual[1], dual[1]));
  // a coboundary pairs to zero with any cocycle
  BitVector f(t.count(0));
  f.set(0);
  f.set(3);
  const BitVector cob = t.boundary(1).transpose().apply(f);
  CHECK_FALSE(cup_pairing(t, 1, cob, dual[0]));
  CHECK_FALSE(cup_pairing(t, 1, dual[1], cob));

  const auto q = model_library().complexes.at("quadric");
  CHECK(cup_form(q, 2) == Gf2Matrix::from_rows({{0, 1}, {1, 0}}));
  // Poincare duality audit: every cup form of a bundled closed manifold is nondegenerate
  for (const auto& name : {"torus_reflection", "seven_vertex_torus", "rp2_6vertex", "klein_bottle", "octahedron"}) {
    const auto& k = model_library().complexes.at(name);
    const auto form = cup_form(k, 1);
    CHECK(gf2_rank(form) == form.rows());
  }
}

TEST_CASE("chain data validation names the failure") {
  ChainComplexData c;
  c.dims = {1, 1};
  c.boundary = {Gf2Matrix(0, 1), Gf2Matrix::from_rows({{1}})};
  CHECK_NOTHROW(c.validate());
  c.involution = {Gf2Matrix::identity(1), Gf2Matrix(1, 1)};
  CHECK_THROWS_AS(c.validate(), InputError);
  const auto t4 = model_library().chains.at("t4_chain");
  CHECK(betti_numbers(t4) == std::vector<std::size_t>{1, 4, 6, 4, 1});
}

TEST_CASE("integer homology sees the Klein bottle torsion") {
  const auto c = ChainComplexData::from_complex(build::grid_klein_bottle(4, 3));
  const auto ih = integer_homology(c);
  CHECK(ih.ranks == std::vector<std::size_t>{1, 1, 0});
  CHECK(ih.torsion[1] == IntVector{Integer(2)});
}
