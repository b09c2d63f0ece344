#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "conjtop/errors.hpp"
#include "conjtop/invariants.hpp"
#include "conjtop/model.hpp"
#include "oracle.hpp"

using namespace conjtop;

namespace {

BitVector from_mask(std::size_t n, unsigned mask) {
  BitVector x(n);
  for (std::size_t i = 0; i < n; ++i)
    if (mask >> i & 1u) x.set(i);
  return x;
}

oracle::Dense random_alternating(std::mt19937& rng, int n) {
  oracle::Dense m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) m[i][j] = m[j][i] = static_cast<int>(rng() & 1u);
  return m;
}

oracle::Dense random_symmetric(std::mt19937& rng, int n) {
  oracle::Dense m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m[i][j] = m[j][i] = static_cast<int>(rng() & 1u);
  return m;
}

// Values on the basis compatible with the diagonal.
std::vector<int> q4_values(std::mt19937& rng, const oracle::Dense& g) {
  std::vector<int> v(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) v[i] = g[i][i] + 2 * static_cast<int>(rng() & 1u);
  return v;
}

BitVector random_bits(std::mt19937& rng, std::size_t n) {
  BitVector b(n);
  for (std::size_t i = 0; i < n; ++i) b.set(i, rng() & 1u);
  return b;
}

Gf2Matrix random_invertible(std::mt19937& rng, std::size_t n) {
  while (true) {
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, rng() & 1u);
    if (gf2_rank(m) == n) return m;
  }
}

QForm2 hyperbolic2(int a, int b) {
  return {Gf2Matrix::from_rows({{0, 1}, {1, 0}}), BitVector::from_bits({a, b})};
}

}  // namespace

TEST_CASE("fixed evaluations of Z/2 forms") {
  const auto q = hyperbolic2(0, 0);
  CHECK(evaluate_q2(q, BitVector(2)) == 0);
  CHECK(evaluate_q2(q, BitVector::from_bits({1, 1})) == 1);
  CHECK_THROWS_AS(evaluate_q2(q, BitVector(3)), InputError);
  CHECK_THROWS_AS(QForm2(Gf2Matrix::identity(2), BitVector(2)), InputError);
}

TEST_CASE("quadratic laws hold exhaustively up to dimension 8") {
  std::mt19937 rng(42);
  for (int n = 1; n <= 8; ++n) {
    const auto alt = random_alternating(rng, n);
    std::vector<int> bits(static_cast<std::size_t>(n));
    for (auto& b : bits) b = static_cast<int>(rng() & 1u);
    const QForm2 q2(Gf2Matrix::from_rows(alt), BitVector::from_bits(bits));

    const auto sym = random_symmetric(rng, n);
    const auto vals = q4_values(rng, sym);
    const QForm4 q4(Gf2Matrix::from_rows(sym), vals);

    const unsigned size = 1u << n;
    std::vector<int> v2(size), v4(size);
    for (unsigned x = 0; x < size; ++x) {
      const auto bx = from_mask(static_cast<std::size_t>(n), x);
      v2[x] = evaluate_q2(q2, bx);
      v4[x] = evaluate_q4(q4, bx);
      // second expansion oracle, straight from the definition
      CHECK(v2[x] == oracle::q_value(alt, bits, x, 2));
      CHECK(v4[x] == oracle::q_value(sym, vals, x, 4));
      CHECK(v4[x] % 2 == static_cast<int>(bx.dot(q4.gram.apply(bx))));
    }
    for (unsigned x = 0; x < size; ++x)
      for (unsigned y = 0; y < size; ++y) {
        const auto bx = from_mask(static_cast<std::size_t>(n), x);
        const auto by = from_mask(static_cast<std::size_t>(n), y);
        const int pair2 = bx.dot(q2.gram.apply(by));
        const int pair4 = bx.dot(q4.gram.apply(by));
        if (v2[x ^ y] != (v2[x] + v2[y] + pair2) % 2) FAIL("Z/2 law fails in dimension " << n);
        if (v4[x ^ y] != (v4[x] + v4[y] + 2 * pair4) % 4) FAIL("Z/4 law fails in dimension " << n);
      }
  }
}

TEST_CASE("Z/4 forms need values compatible with the pairing") {
  CHECK_THROWS_AS(QForm4(Gf2Matrix::identity(1), {2}), InputError);
  CHECK_THROWS_AS(QForm4(Gf2Matrix(1, 1), {1}), InputError);
  CHECK(QForm4(Gf2Matrix::identity(1), {7}).values == std::vector<int>{3});
  CHECK(QForm4(Gf2Matrix::identity(1), {-1}).values == std::vector<int>{3});
}

TEST_CASE("Arf invariant") {
  CHECK(arf(hyperbolic2(0, 0)) == 0);
  CHECK(arf(hyperbolic2(1, 1)) == 1);
  CHECK(arf(hyperbolic2(1, 0)) == 0);
  CHECK(arf(direct_sum(hyperbolic2(0, 0), hyperbolic2(1, 1))) == 1);
  CHECK(arf(direct_sum(hyperbolic2(1, 1), hyperbolic2(1, 1))) == 0);
  CHECK_THROWS_AS(arf(QForm2(Gf2Matrix(2, 2), BitVector(2))), InputError);

  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 * (1 + static_cast<int>(rng() % 4));
    const auto g = oracle::random_alternating_nondegenerate(rng, n);
    std::vector<int> bits(static_cast<std::size_t>(n));
    for (auto& b : bits) b = static_cast<int>(rng() & 1u);
    const QForm2 q(Gf2Matrix::from_rows(g), BitVector::from_bits(bits));
    const int a = arf(q);
    CHECK(a == oracle::arf_majority(g, bits));
    CHECK(arf(change_basis(q, random_invertible(rng, static_cast<std::size_t>(n)))) == a);
  }
}

TEST_CASE("symplectic bases") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 * (1 + static_cast<int>(rng() % 5));
    const auto g = Gf2Matrix::from_rows(oracle::random_alternating_nondegenerate(rng, n));
    const auto basis = symplectic_basis(g);
    REQUIRE(basis.size() == static_cast<std::size_t>(n / 2));
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const auto& [a, b] = basis[i];
        const auto& [c, d] = basis[j];
        CHECK(a.dot(g.apply(c)) == false);
        CHECK(b.dot(g.apply(d)) == false);
        CHECK(a.dot(g.apply(d)) == (i == j));
      }
  }
}

TEST_CASE("Brown invariant fixed values") {
  CHECK(brown(QForm4(Gf2Matrix::identity(1), {1})) == 1);
  CHECK(brown(QForm4(Gf2Matrix::identity(1), {3})) == 7);
  CHECK(brown(QForm4(Gf2Matrix::from_rows({{0, 1}, {1, 0}}), {0, 0})) == 0);
  CHECK(brown(QForm4(Gf2Matrix::from_rows({{0, 1}, {1, 0}}), {2, 2})) == 4);
  CHECK(gauss_sum(QForm4(Gf2Matrix::identity(1), {1})) == std::pair<long long, long long>{1, 1});
  CHECK(gauss_sum(QForm4(Gf2Matrix::identity(1), {3})) == std::pair<long long, long long>{1, -1});
  CHECK_THROWS_AS(brown(QForm4(Gf2Matrix(1, 1), {0})), InputError);
  // Z/2 forms embed by doubling: brown = 4 * arf
  CHECK(brown(QForm4(Gf2Matrix::from_rows({{0, 1}, {1, 0}}), {2, 2})) == 4 * arf(hyperbolic2(1, 1)));
}

TEST_CASE("Brown invariant against a floating-point Gauss sum and under base change") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto g = oracle::random_nondegenerate_symmetric(rng, n);
    const auto vals = q4_values(rng, g);
    const QForm4 q(Gf2Matrix::from_rows(g), vals);
    const int b = brown(q);
    CHECK(b == oracle::brown_float(g, vals));
    CHECK(brown(change_basis(q, random_invertible(rng, static_cast<std::size_t>(n)))) == b);
  }
}

TEST_CASE("Brown invariant is additive on direct sums") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n1 = 1 + static_cast<int>(rng() % 6), n2 = 1 + static_cast<int>(rng() % 6);
    const auto g1 = oracle::random_nondegenerate_symmetric(rng, n1);
    const auto g2 = oracle::random_nondegenerate_symmetric(rng, n2);
    const QForm4 a(Gf2Matrix::from_rows(g1), q4_values(rng, g1));
    const QForm4 b(Gf2Matrix::from_rows(g2), q4_values(rng, g2));
    if ((brown(direct_sum(a, b))) != (brown(a) + brown(b)) % 8) FAIL("additivity fails at trial " << trial);
  }
  SUCCEED();
}

TEST_CASE("shifting a Z/4 form by twice a linear form") {
  // q'(x) = q(x) + 2 (x . c) satisfies q'(x) = q(x + c) - q(c), so brown' = brown - 2 q(c)
  std::mt19937 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const auto g = oracle::random_nondegenerate_symmetric(rng, n);
    const auto vals = q4_values(rng, g);
    const QForm4 q(Gf2Matrix::from_rows(g), vals);
    const BitVector c = random_bits(rng, static_cast<std::size_t>(n));
    std::vector<int> shifted = vals;
    for (std::size_t i = 0; i < shifted.size(); ++i)
      shifted[i] += 2 * static_cast<int>(BitVector::unit(static_cast<std::size_t>(n), i).dot(q.gram.apply(c)));
    const QForm4 q2(q.gram, shifted);
    const int expected = ((brown(q) - 2 * evaluate_q4(q, c)) % 8 + 8) % 8;
    CHECK(brown(q2) == expected);
    CHECK(oracle::brown_float(g, q2.values) == expected);
  }
}

TEST_CASE("loop formulas") {
  CHECK(spin_value_from_loops({1, {0}, 0}) == 1);
  CHECK(spin_value_from_loops({2, {1, 1}, 0}) == 0);
  CHECK(spin_value_from_loops({0, {}, 0}) == 0);
  CHECK(pin_value_from_loops({1, {0}, 1}) == 3);
  CHECK(pin_value_from_loops({0, {}, 0}) == 0);
  CHECK(pin_value_from_loops({1, {1}, 0}) == 0);
  for (int k = 0; k <= 4; ++k)
    for (unsigned mask = 0; mask < (1u << k); ++mask)
      for (long long rc = 0; rc < 6; ++rc) {
        LoopData d{k, {}, rc};
        int sum = 0;
        for (int i = 0; i < k; ++i) {
          d.lambda.push_back(static_cast<int>(mask >> i & 1u));
          sum += d.lambda.back();
        }
        CHECK(spin_value_from_loops(d) == (k + sum) % 2);
        CHECK(pin_value_from_loops(d) == static_cast<int>((2 * sum + 2 * k + rc) % 4));
      }
  CHECK_THROWS_AS(validate(LoopData{2, {0}, 0}), InputError);
  CHECK_THROWS_AS(validate(LoopData{1, {0}, -1}), InputError);
}

TEST_CASE("forms from loop tables") {
  const auto& lib = model_library();
  const auto& spin = lib.loops.at("torus_spin");
  const auto q2 = std::get<QForm2>(qform_from_loop_table(spin.kind, spin.gram, spin.basis, spin.redundant));
  CHECK(q2.values == BitVector::from_bits({0, 0}));
  CHECK(arf(q2) == 0);

  const auto& pin = lib.loops.at("rp2_pin");
  const auto q4 = std::get<QForm4>(qform_from_loop_table(pin.kind, pin.gram, pin.basis, pin.redundant));
  CHECK(q4.values == std::vector<int>{3});
  CHECK(brown(q4) == 7);

  // q(a + b) must be q(a) + q(b) + 1 = 1; two loops with zero linking give 0
  std::vector<RedundantEntry> bad{{BitVector::from_bits({1, 1}), {2, {0, 0}, 0}}};
  CHECK_THROWS_AS(qform_from_loop_table(FormKind::Spin, spin.gram, spin.basis, bad), InputError);
  CHECK_THROWS_AS(qform_from_loop_table(FormKind::Spin, spin.gram, {spin.basis[0]}), InputError);
}
