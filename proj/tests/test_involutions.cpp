#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "conjtop/errors.hpp"
#include "conjtop/homology.hpp"
#include "conjtop/involutions.hpp"
#include "conjtop/model.hpp"
#include "oracle.hpp"

using namespace conjtop;

namespace {

const std::vector<std::string> kSurfaceMaps = {"torus_reflection", "torus_diagonal", "torus_free", "klein_bottle",
                                               "octahedron", "genus2_dividing", "genus2_nondividing"};

BilinearFormGF2 form_of(const oracle::Dense& d) { return {Gf2Matrix::from_rows(d)}; }

}  // namespace

TEST_CASE("fixed class realizes the characteristic class on bundled involutions") {
  const auto& lib = model_library();
  for (const auto& name : kSurfaceMaps) {
    INFO(name);
    const auto r = verify_fixed_class_characteristic(lib.map(name));
    CHECK(r.holds);
    CHECK(r.fixed_class == r.characteristic);
  }
  const auto q = verify_fixed_class_characteristic(lib.map("quadric"));
  CHECK(q.holds);
  CHECK(q.fixed_dimension == 2);
  CHECK(q.half_dimension == 2);
  CHECK(q.fixed_class == BitVector::from_bits({1, 1}));
  const auto t4 = verify_fixed_class_characteristic(lib.chains.at("t4_chain"));
  CHECK(t4.holds);
  CHECK(t4.characteristic.none());
}

TEST_CASE("characteristic class solves B chi = diag B and vanishes exactly for even forms") {
  std::mt19937 rng(20261014);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto b = form_of(oracle::random_nondegenerate_symmetric(rng, n));
    const BitVector chi = characteristic_class(b);
    CHECK(b.gram.apply(chi) == b.gram.diagonal());
    CHECK(is_even(b) == chi.none());
    // x . x = x . chi for every x, checked on all of GF(2)^n
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      BitVector x(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1u) x.set(static_cast<std::size_t>(i));
      CHECK(b(x, x) == b(x, chi));
    }
  }
}

TEST_CASE("characteristic class of fixed forms") {
  CHECK(characteristic_class(form_of({{0, 1}, {1, 0}})).none());
  CHECK(characteristic_class(form_of({{1, 0}, {0, 1}})) == BitVector::from_bits({1, 1}));
  CHECK(characteristic_class(form_of({{1}})) == BitVector::from_bits({1}));
  CHECK_THROWS_AS(characteristic_class(form_of({{1, 1}, {1, 1}})), InputError);
}

TEST_CASE("type classification") {
  const auto& lib = model_library();
  CHECK(classify_type(lib.map("torus_reflection")).type == SurfaceType::I_abs);
  CHECK(classify_type(lib.map("torus_diagonal")).type == SurfaceType::II);
  CHECK(classify_type(lib.map("genus2_dividing")).type == SurfaceType::I_abs);
  CHECK(classify_type(lib.map("genus2_nondividing")).type == SurfaceType::II);
  CHECK(classify_type(lib.map("octahedron")).type == SurfaceType::I_abs);
  const BitVector h = BitVector::from_bits({1, 1});
  const auto q = classify_type(lib.map("quadric"), h);
  CHECK(q.type == SurfaceType::I_rel);
  REQUIRE(q.compared);
  CHECK(*q.compared == h);
  CHECK(classify_type(lib.map("quadric")).type == SurfaceType::II);
  CHECK(classify_type(lib.map("quadric"), BitVector::from_bits({1, 0})).type == SurfaceType::II);
  CHECK(classify_type(lib.chains.at("t4_chain")).type == SurfaceType::I_abs);

  CHECK(classify_class(BitVector(2), h).type == SurfaceType::I_abs);
  CHECK(classify_class(h, BitVector(2)).type == SurfaceType::II);
  for (auto t : {SurfaceType::I_abs, SurfaceType::I_rel, SurfaceType::II})
    CHECK(parse_surface_type(to_string(t)) == t);
  CHECK_THROWS_AS(parse_surface_type("III"), InputError);
}

TEST_CASE("the identity fixes everything and has no middle-dimensional fixed class") {
  const auto t = model_library().complex("torus_reflection");
  const auto fs = fixed_subcomplex(SimplicialMap::identity(t));
  CHECK(fs.complex == *t);
  CHECK(fs.dimension() == 2);
  CHECK_THROWS_AS(verify_fixed_class_characteristic(SimplicialMap::identity(t)), InputError);
}

TEST_CASE("classification is unchanged by subdivision") {
  const auto& lib = model_library();
  for (const auto& name : {"torus_reflection", "torus_diagonal", "octahedron", "genus2_nondividing"}) {
    INFO(name);
    const auto tau = lib.map(name);
    const auto sd = barycentric_subdivide(tau.source(), &tau);
    REQUIRE(sd.map);
    CHECK(classify_type(*sd.map).type == classify_type(tau).type);
    CHECK(harnack_audit(*sd.map).fixed_total == harnack_audit(tau).fixed_total);
  }
}

TEST_CASE("Harnack bound") {
  const auto& lib = model_library();
  const auto refl = harnack_audit(lib.map("torus_reflection"));
  CHECK(refl.fixed_total == 4);
  CHECK(refl.ambient_total == 4);
  CHECK(refl.is_m);
  const auto diag = harnack_audit(lib.map("torus_diagonal"));
  CHECK(diag.fixed_total == 2);
  CHECK_FALSE(diag.is_m);
  CHECK(harnack_audit(lib.map("torus_free")).fixed_total == 0);
  const auto q = harnack_audit(lib.map("quadric"));
  CHECK(q.fixed_total == 2);
  CHECK(q.ambient_total == 4);
  CHECK(harnack_audit(lib.chains.at("t4_chain")).is_m);
  for (const auto& name : kSurfaceMaps) {
    const auto r = harnack_audit(lib.map(name));
    CHECK(r.fixed_total <= r.ambient_total);
  }
  CHECK_THROWS_AS(harnack_from_totals(5, 4), ModelIntegrityError);
  CHECK(harnack_from_totals(4, 4).is_m);
}

TEST_CASE("Smith kernel bound") {
  const auto r = smith_kernel_bound(model_library().map("quadric"));
  CHECK(r.h1_trivial);
  CHECK(r.kernel_dimension <= 1);
  CHECK(r.kernel_dimension == 0);
  CHECK(r.bound_asserted);
  CHECK_THROWS_AS(assert_smith_bound(2, true), ModelIntegrityError);
  CHECK_NOTHROW(assert_smith_bound(2, false));
  CHECK_NOTHROW(assert_smith_bound(1, true));
  CHECK_THROWS_AS(smith_kernel_bound(model_library().map("torus_reflection")), InputError);
}

TEST_CASE("parity obstruction") {
  const auto odd = form_of({{1}});
  const auto v = parity_obstruction(3, odd, BitVector::from_bits({1}));
  CHECK(v.obstructed);
  CHECK(v.message == "cannot be I_abs");
  const auto hyp = form_of({{0, 1}, {1, 0}});
  const auto w = parity_obstruction(2, hyp, BitVector::from_bits({1, 0}));
  CHECK_FALSE(w.obstructed);
  CHECK(w.message == "no obstruction");
  CHECK_THROWS_AS(parity_obstruction(2, odd, BitVector::from_bits({1})), InputError);
  CHECK_THROWS_AS(parity_obstruction(3, odd, BitVector::from_bits({1, 0})), InputError);
}

TEST_CASE("M-variety bounds") {
  const auto& lib = model_library();
  const auto t4 = check_m_variety_bounds(lib.chains.at("t4_chain"));
  CHECK(t4.is_m);
  CHECK(t4.even_form);
  CHECK(t4.fixed_class_zero);
  CHECK_FALSE(t4.vacuous);
  CHECK(t4.acts_trivially);
  const auto refl = check_m_variety_bounds(lib.map("torus_reflection"));
  CHECK(refl.is_m);
  CHECK(refl.acts_trivially);
  const auto q = check_m_variety_bounds(lib.map("quadric"));
  CHECK_FALSE(q.is_m);
  CHECK(q.vacuous);

  // an M-variety whose involution exchanges two classes cannot exist
  auto bad = lib.chains.at("t4_chain");
  bad.involution[1] = Gf2Matrix::from_rows({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK_THROWS(check_m_variety_bounds(bad));
}

TEST_CASE("involution form on the quadric") {
  const auto d = involution_form_data(model_library().map("quadric"));
  CHECK(d.half_dimension == 2);
  CHECK(d.middle.betti() == 2);
  CHECK(d.intersection == Gf2Matrix::from_rows({{0, 1}, {1, 0}}));
  CHECK(d.tau_star == Gf2Matrix::from_rows({{0, 1}, {1, 0}}));
  CHECK(d.form.gram == Gf2Matrix::identity(2));
  CHECK(d.form.is_nondegenerate());
}
