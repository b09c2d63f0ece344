#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "conjtop/errors.hpp"
#include "conjtop/lattices.hpp"
#include "conjtop/model.hpp"

using namespace conjtop;

namespace {

using Rows = std::vector<std::vector<long long>>;

IntMatrix m(const Rows& r) { return IntMatrix::from_rows(r); }
IntVector v(std::initializer_list<long long> xs) { return {xs.begin(), xs.end()}; }

IntegerLattice quadric() { return model_library().lattices.at("quadric").lattice; }
QuotientTransferData quadric_transfer() { return *model_library().lattices.at("quadric").transfer; }

// Random lattice with a fixed-point-free permutation involution and its
// orbit transfer data.
struct Swapped {
  IntegerLattice lattice;
  QuotientTransferData transfer;
};

Swapped random_swapped(std::mt19937& rng, std::size_t pairs) {
  const std::size_t n = 2 * pairs;
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::size_t> partner(n), orbit(n);
  for (std::size_t k = 0; k < pairs; ++k) {
    partner[perm[2 * k]] = perm[2 * k + 1];
    partner[perm[2 * k + 1]] = perm[2 * k];
    orbit[perm[2 * k]] = orbit[perm[2 * k + 1]] = k;
  }
  IntMatrix t(n, n), g(n, n);
  for (std::size_t i = 0; i < n; ++i) t(i, partner[i]) = 1;
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Integer c = coeff(rng);
      g(i, j) += c;
      if (i != j) g(j, i) += c;
      // symmetrize under the involution as well
      const std::size_t a = partner[i], b = partner[j];
      g(a, b) += c;
      if (a != b) g(b, a) += c;
    }
  QuotientTransferData q;
  q.quotient_rank = pairs;
  q.push = IntMatrix(pairs, n);
  q.pull = IntMatrix(n, pairs);
  for (std::size_t i = 0; i < n; ++i) {
    q.push(orbit[i], i) = 1;
    q.pull(i, orbit[i]) = 1;
  }
  return {build_lattice(g, t), q};
}

}  // namespace

TEST_CASE("building lattices validates every identity by name") {
  const auto l = build_lattice(m({{0, 1}, {1, 0}}), m({{0, 1}, {1, 0}}), {{"h", v({1, 1})}});
  CHECK(l.rank == 2);
  CHECK(l.pairing(l.mark("h"), l.mark("h")) == 2);
  CHECK(l.isometry.transpose() * l.gram * l.isometry == l.gram);

  try {
    build_lattice(m({{0, 1}, {2, 0}}), IntMatrix::identity(2));
    FAIL("asymmetric Gram accepted");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("not symmetric") != std::string::npos);
  }
  try {
    build_lattice(m({{1, 0}, {0, 2}}), m({{0, 1}, {1, 0}}));
    FAIL("non-isometry accepted");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("isometry") != std::string::npos);
  }
  try {
    // a hyperbolic isometry of infinite order
    build_lattice(m({{0, 1}, {1, 0}}), m({{2, 0}, {0, 1}}));
    FAIL("non-involution accepted");
  } catch (const InputError&) {
  }
  CHECK_THROWS_AS(build_lattice(m({{0, 1}, {1, 0}}), m({{0, 1}, {1, 0}}), {{"h", v({1})}}), InputError);
  CHECK_THROWS_AS(l.mark("missing"), InputError);
}

TEST_CASE("an isometry that is not an involution is rejected") {
  // rotation by a quarter turn preserves the standard form but has order four
  try {
    build_lattice(IntMatrix::identity(2), m({{0, -1}, {1, 0}}));
    FAIL("order-four isometry accepted");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("not an involution") != std::string::npos);
  }
}

TEST_CASE("invariant sublattices") {
  const auto s = invariant_sublattices(quadric());
  REQUIRE(s.invariant.size() == 1);
  REQUIRE(s.anti_invariant.size() == 1);
  const auto& inv = s.invariant[0];
  const auto& anti = s.anti_invariant[0];
  CHECK(((inv == v({1, 1})) || (inv == v({-1, -1}))));
  CHECK(((anti == v({1, -1})) || (anti == v({-1, 1}))));

  const auto id = build_lattice(IntMatrix::identity(3), IntMatrix::identity(3));
  CHECK(invariant_sublattices(id).invariant.size() == 3);
  CHECK(invariant_sublattices(id).anti_invariant.empty());
  const auto neg = build_lattice(IntMatrix::identity(3), Integer(-1) * IntMatrix::identity(3));
  CHECK(invariant_sublattices(neg).invariant.empty());
  CHECK(invariant_sublattices(neg).anti_invariant.size() == 3);
}

TEST_CASE("random swapped lattices: kernels, transfer and orientation classes") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t pairs = 1 + rng() % 4;
    const auto [l, q] = random_swapped(rng, pairs);
    const auto s = invariant_sublattices(l);
    CHECK(s.invariant.size() == pairs);
    CHECK(s.anti_invariant.size() == pairs);
    for (const auto& x : s.invariant) CHECK(l.isometry.apply(x) == x);
    for (const auto& x : s.anti_invariant) {
      IntVector neg = x;
      for (auto& c : neg) c = -c;
      CHECK(l.isometry.apply(x) == neg);
    }
    const auto r = transfer_report(l, q);
    CHECK(r.ok());
    CHECK(r.composition_is_double);
    CHECK(r.pull_injective);
    CHECK(r.image_invariant);
    CHECK(r.invariant_doubles_into_image);

    IntVector delta(pairs);
    for (auto& c : delta) c = static_cast<long long>(rng() % 7) - 3;
    IntVector alpha = q.pull.apply(delta);
    for (auto& c : alpha) c *= 2;
    const auto yes = orientation_class_check(l, q, alpha);
    CHECK(yes.realizable);
    REQUIRE(yes.delta);
    CHECK(*yes.delta == delta);
    IntVector minus = alpha;
    for (auto& c : minus) c = -c;
    CHECK(orientation_class_check(l, q, minus).realizable);
    alpha[0] += 1;
    CHECK_FALSE(orientation_class_check(l, q, alpha).realizable);
  }
}

TEST_CASE("conjugation form mod 2") {
  const auto f = conj_form_mod2(quadric());
  CHECK(f.gram == Gf2Matrix::identity(2));
  CHECK(characteristic_class(f) == BitVector::from_bits({1, 1}));

  const auto t4 = conj_form_mod2(model_library().lattices.at("t4").lattice);
  CHECK(t4.dimension() == 6);
  CHECK(is_even(t4));
  CHECK(characteristic_class(t4).none());

  const auto hyp = build_lattice(m({{0, 1}, {1, 0}}), IntMatrix::identity(2));
  CHECK(is_even(conj_form_mod2(hyp)));

  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    IntMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) g(i, j) = g(j, i) = static_cast<long long>(rng() % 9) - 4;
    const auto l = build_lattice(g, IntMatrix::identity(n));
    CHECK(conj_form_mod2(l).gram == g.mod2());
  }
}

TEST_CASE("transfer audit on the quadric and on broken data") {
  const auto l = quadric();
  const auto q = quadric_transfer();
  CHECK(transfer_audit(l, q).ok());

  // pull (2, 0): injective over the rationals but push * pull = 2 fails and the image is not invariant
  QuotientTransferData bad = q;
  bad.pull = m({{2}, {0}});
  CHECK_FALSE(transfer_report(l, bad).ok());
  CHECK_THROWS(transfer_audit(l, bad));

  QuotientTransferData zero = q;
  zero.pull = m({{0}, {0}});
  const auto zr = transfer_report(l, zero);
  CHECK_FALSE(zr.pull_injective);
  CHECK_THROWS_AS(transfer_audit(l, zero), InputError);

  // push * pull = 2 holds, but 2 * e_2 is invariant and misses the image of pull
  const auto plain = build_lattice(IntMatrix::identity(2), IntMatrix::identity(2));
  QuotientTransferData thin;
  thin.quotient_rank = 1;
  thin.push = m({{2, 0}});
  thin.pull = m({{1}, {0}});
  const auto tr = transfer_report(plain, thin);
  CHECK(tr.composition_is_double);
  CHECK(tr.pull_injective);
  CHECK(tr.image_invariant);
  CHECK_FALSE(tr.invariant_doubles_into_image);
  CHECK_THROWS_AS(transfer_audit(plain, thin), ModelIntegrityError);
}

TEST_CASE("orientation class check on the quadric") {
  const auto l = quadric();
  const auto q = quadric_transfer();
  const auto zero = orientation_class_check(l, q, v({0, 0}));
  CHECK(zero.realizable);
  REQUIRE(zero.delta);
  CHECK(*zero.delta == v({0}));
  const auto two = orientation_class_check(l, q, v({2, 2}));
  CHECK(two.realizable);
  REQUIRE(two.delta);
  CHECK(*two.delta == v({1}));
  CHECK(orientation_class_check(l, q, v({-2, -2})).realizable);
  CHECK_FALSE(orientation_class_check(l, q, v({1, 1})).realizable);
  CHECK_FALSE(orientation_class_check(l, q, v({2, 0})).realizable);
}

TEST_CASE("order obstruction") {
  const auto odd = model_library().lattices.at("odd_order");
  const auto r = order_obstruction(odd.lattice, 3, odd.lattice.mark("beta"));
  CHECK(r.obstructed);
  CHECK(r.message == "cannot be I_abs");
  const auto four = build_lattice(m({{4}}), IntMatrix::identity(1));
  const auto e = order_obstruction(four, 4, v({1}));
  CHECK_FALSE(e.obstructed);
  CHECK(e.message == "no obstruction");
  // beta = (1, 0) is moved by the swap
  CHECK_THROWS_AS(order_obstruction(quadric(), 2, v({1, 0})), InputError);
  CHECK_THROWS_AS(order_obstruction(odd.lattice, 4, odd.lattice.mark("beta")), InputError);
}

TEST_CASE("torsion audit") {
  auto l = quadric();
  const auto free = torsion_audit(l);
  CHECK(free.presentation_supplied);
  CHECK(free.torsion.empty());
  CHECK_FALSE(free.two_torsion);

  l.presentation = m({{2, 0}, {0, 1}});
  const auto two = torsion_audit(l);
  CHECK(two.two_torsion);
  CHECK(two.torsion == v({2}));

  l.presentation = m({{3, 0}, {0, 1}});
  const auto three = torsion_audit(l);
  CHECK_FALSE(three.two_torsion);
  CHECK(three.torsion == v({3}));

  l.presentation = m({{6}});
  CHECK(torsion_audit(l).two_torsion);

  l.presentation.reset();
  const auto none = torsion_audit(l);
  CHECK_FALSE(none.presentation_supplied);
  CHECK_FALSE(none.note.empty());
}

TEST_CASE("self-intersection of the real part") {
  auto l = build_lattice(m({{-2}}), IntMatrix::identity(1), {{"alpha", v({1})}});
  CHECK_FALSE(self_intersection_check(l));
  l.real_euler_characteristic = 2;
  const auto c = self_intersection_check(l);
  REQUIRE(c);
  CHECK(c->self_intersection == -2);
  CHECK(c->expected == -2);
  CHECK(c->holds);
  l.real_euler_characteristic = 0;
  CHECK_FALSE(self_intersection_check(l)->holds);
}
