// One PASS/FAIL line per acceptance criterion, each timed against its limit.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "conjtop/coverings.hpp"
#include "conjtop/errors.hpp"
#include "conjtop/homology.hpp"
#include "conjtop/invariants.hpp"
#include "conjtop/involutions.hpp"
#include "conjtop/lattices.hpp"
#include "conjtop/model.hpp"
#include "oracle.hpp"

using namespace conjtop;

namespace {

int failures = 0;

void criterion(const std::string& name, double limit_seconds, const std::function<bool(std::string&)>& body) {
  std::string detail;
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (ok && secs >= limit_seconds) {
    ok = false;
    detail = "too slow";
  }
  if (!ok) ++failures;
  std::printf("%s %-28s %.3fs (limit %.0fs)%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), secs, limit_seconds,
              detail.empty() ? "" : "  ", detail.c_str());
  std::fflush(stdout);
}

using Betti = std::vector<std::size_t>;

bool homology_oracle(std::string& detail) {
  const auto& lib = model_library();
  const std::vector<std::pair<std::string, Betti>> expected = {
      {"sphere_boundary_3simplex", {1, 0, 1}}, {"seven_vertex_torus", {1, 2, 1}}, {"torus_reflection", {1, 2, 1}},
      {"rp2_6vertex", {1, 1, 1}},              {"klein_bottle", {1, 2, 1}},       {"quadric", {1, 0, 2, 0, 1}}};
  for (const auto& [name, b] : expected)
    if (betti_numbers(lib.complexes.at(name)) != b) {
      detail = name;
      return false;
    }
  return true;
}

bool fixed_class_suite(std::string& detail) {
  const auto& lib = model_library();
  int checked = 0;
  for (const auto& [name, entry] : lib.maps) {
    const auto tau = lib.map(name);
    if (tau.source().dimension() % 2 != 0) continue;
    const auto fs = fixed_subcomplex(tau);
    if (fs.dimension() > tau.source().dimension() / 2) continue;
    const auto r = verify_fixed_class_characteristic(tau);
    if (!r.holds || r.fixed_class != r.characteristic) {
      detail = name;
      return false;
    }
    ++checked;
  }
  for (const auto& [name, c] : lib.chains) {
    const auto r = verify_fixed_class_characteristic(c);
    if (!r.holds || r.fixed_class != r.characteristic) {
      detail = name;
      return false;
    }
    ++checked;
  }
  detail = std::to_string(checked) + " involutions";
  return checked > 0;
}

bool evenness_suite(std::string& detail) {
  std::mt19937 rng(1);
  const int samples = 10000;
  for (int s = 0; s < samples; ++s) {
    const int n = 1 + s % 10;
    const BilinearFormGF2 b{Gf2Matrix::from_rows(oracle::random_nondegenerate_symmetric(rng, n))};
    const BitVector chi = characteristic_class(b);
    bool even = true;
    for (int i = 0; i < n; ++i) even = even && !b.gram.get(static_cast<std::size_t>(i), static_cast<std::size_t>(i));
    if (is_even(b) != even || even != chi.none() || b.gram.apply(chi) != b.gram.diagonal()) {
      detail = "sample " + std::to_string(s);
      return false;
    }
  }
  detail = std::to_string(samples) + " forms";
  return true;
}

bool type_verdicts(std::string&) {
  const auto& lib = model_library();
  const bool rel = classify_type(lib.map("quadric"), BitVector::from_bits({1, 1})).type == SurfaceType::I_rel;
  const auto refl = dividing_test(lib.map("torus_reflection"));
  const auto diag = dividing_test(lib.map("torus_diagonal"));
  return rel && refl.dividing && refl.halves.size() == 2 && !diag.dividing;
}

bool curve_orientations(std::string& detail) {
  const auto& lib = model_library();
  int dividing = 0;
  for (const auto& [name, entry] : lib.maps) {
    const auto tau = lib.map(name);
    if (tau.source().dimension() != 2) continue;
    if (fixed_subcomplex(tau).empty()) continue;
    if (!dividing_test(tau).dividing) continue;
    const auto a = curve_complex_semiorientation(tau, 0);
    const auto b = curve_complex_semiorientation(tau, 1);
    if (!a.halves_opposite || !b.halves_opposite || !(a.semi == b.semi)) {
      detail = name;
      return false;
    }
    ++dividing;
  }
  detail = std::to_string(dividing) + " dividing models";
  return dividing > 0;
}

bool covering_law(std::string& detail) {
  const auto& lib = model_library();
  int covers = 0;
  const auto law = [&](const CoverComplex& c) {
    ++covers;
    return c.total->euler_characteristic() == 2 * c.base->euler_characteristic() - c.branch.euler_characteristic();
  };
  const auto s = lib.complex("sphere_sd");
  const auto two = branched_double_cover(s, s->chain(1, lib.complexes.at("sphere_sd_cut").simplices(1)));
  const auto four = branched_double_cover(s, s->chain(1, lib.complexes.at("sphere_sd_cut4").simplices(1)));
  if (!law(two) || two.total->euler_characteristic() != 2 || betti_numbers(*two.total) != Betti{1, 0, 1}) {
    detail = "two branch points";
    return false;
  }
  if (!law(four) || four.total->euler_characteristic() != 0 || betti_numbers(*four.total) != Betti{1, 2, 1}) {
    detail = "four branch points";
    return false;
  }
  if (!law(branched_double_cover(s, BitVector(s->count(1))))) return false;

  std::mt19937 rng(2);
  for (const auto& name : {"seven_vertex_torus", "rp2_6vertex", "klein_bottle", "torus_grid", "genus2_dividing"}) {
    const auto k = lib.complex(name);
    const auto cd = ChainComplexData::from_complex(*k);
    const auto gens = dual_cocycles(cd, homology(cd, 1));
    for (int t = 0; t < 4; ++t) {
      BitVector w(k->count(1));
      for (const auto& g : gens)
        if (rng() & 1u) w ^= g;
      if (!law(double_cover_unbranched(k, w))) {
        detail = name;
        return false;
      }
    }
  }
  const auto oc = orientation_cover(lib.complex("rp2_6vertex"), lib.complexes.at("rp2_6vertex_curve"));
  if (!law(oc.cover) || betti_numbers(*oc.cover.total) != Betti{1, 0, 1} || !oc.deck_reverses) {
    detail = "orientation cover of the projective plane";
    return false;
  }
  detail = std::to_string(covers) + " covers";
  return covers >= 20;
}

bool kharlamov_arithmetic(std::string& detail) {
  for (long long chi : {-16, -8, 0, 8, 16}) {
    const auto r = kharlamov_check(chi, SurfaceType::I_abs, true);
    if (!r.holds || r.s_quot != -2 * chi || r.s_quot % 16 != 0 || r.trace.find("16 | s_quot: yes") == std::string::npos) {
      detail = "chi = " + std::to_string(chi);
      return false;
    }
  }
  for (long long chi : {2, 4, 6}) {
    try {
      kharlamov_check(chi, SurfaceType::I_abs, true);
      detail = "chi = " + std::to_string(chi) + " accepted";
      return false;
    } catch (const ModelIntegrityError& e) {
      if (std::string(e.what()).find("χ(RA) ≡ 0 (mod 8)") == std::string::npos) {
        detail = e.what();
        return false;
      }
    }
  }
  return true;
}

bool smith_bound(std::string& detail) {
  const auto r = smith_kernel_bound(model_library().map("quadric"));
  detail = "kernel dimension " + std::to_string(r.kernel_dimension);
  return r.h1_trivial && r.kernel_dimension == 0;
}

bool transfer_identities(std::string& detail) {
  const auto& fixture = model_library().lattices.at("quadric");
  const auto rep = transfer_audit(fixture.lattice, *fixture.transfer);
  if (!rep.composition_is_double || !rep.pull_injective) return false;
  using V = IntVector;
  const std::vector<std::pair<V, bool>> cases = {
      {{1, 1}, false}, {{2, 2}, true}, {{-2, -2}, true}, {{2, 0}, false}};
  for (const auto& [alpha, expected] : cases)
    if (orientation_class_check(fixture.lattice, *fixture.transfer, alpha).realizable != expected) {
      detail = "alpha = " + to_string(alpha);
      return false;
    }
  return true;
}

bool qform_suite(std::string& detail) {
  std::mt19937 rng(3);
  for (int n = 1; n <= 8; ++n) {
    oracle::Dense alt(n, std::vector<int>(n, 0)), sym(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        if (j > i) alt[i][j] = alt[j][i] = static_cast<int>(rng() & 1u);
        sym[i][j] = sym[j][i] = static_cast<int>(rng() & 1u);
      }
    BitVector bits(static_cast<std::size_t>(n));
    std::vector<int> vals(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      bits.set(static_cast<std::size_t>(i), rng() & 1u);
      vals[static_cast<std::size_t>(i)] = sym[i][i] + 2 * static_cast<int>(rng() & 1u);
    }
    const QForm2 q2(Gf2Matrix::from_rows(alt), bits);
    const QForm4 q4(Gf2Matrix::from_rows(sym), vals);
    const unsigned size = 1u << n;
    std::vector<BitVector> xs(size);
    std::vector<int> v2(size), v4(size);
    for (unsigned x = 0; x < size; ++x) {
      xs[x] = BitVector(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i)
        if (x >> i & 1u) xs[x].set(static_cast<std::size_t>(i));
      v2[x] = evaluate_q2(q2, xs[x]);
      v4[x] = evaluate_q4(q4, xs[x]);
    }
    for (unsigned x = 0; x < size; ++x)
      for (unsigned y = 0; y < size; ++y) {
        const int p2 = xs[x].dot(q2.gram.apply(xs[y])), p4 = xs[x].dot(q4.gram.apply(xs[y]));
        if (v2[x ^ y] != (v2[x] + v2[y] + p2) % 2 || v4[x ^ y] != (v4[x] + v4[y] + 2 * p4) % 4) {
          detail = "law fails in dimension " + std::to_string(n);
          return false;
        }
      }
  }
  const Gf2Matrix hyp = Gf2Matrix::from_rows({{0, 1}, {1, 0}});
  if (arf(QForm2(hyp, BitVector::from_bits({0, 0}))) != 0 || arf(QForm2(hyp, BitVector::from_bits({1, 1}))) != 1) {
    detail = "Arf of the standard forms";
    return false;
  }
  if (brown(QForm4(Gf2Matrix::identity(1), {1})) != 1 || brown(QForm4(Gf2Matrix::identity(1), {3})) != 7) {
    detail = "Brown of <1>, <-1>";
    return false;
  }
  const int sums = 1000;
  for (int t = 0; t < sums; ++t) {
    const int n1 = 1 + static_cast<int>(rng() % 6), n2 = 1 + static_cast<int>(rng() % 6);
    const auto g1 = oracle::random_nondegenerate_symmetric(rng, n1);
    const auto g2 = oracle::random_nondegenerate_symmetric(rng, n2);
    std::vector<int> a(static_cast<std::size_t>(n1)), b(static_cast<std::size_t>(n2));
    for (int i = 0; i < n1; ++i) a[static_cast<std::size_t>(i)] = g1[i][i] + 2 * static_cast<int>(rng() & 1u);
    for (int i = 0; i < n2; ++i) b[static_cast<std::size_t>(i)] = g2[i][i] + 2 * static_cast<int>(rng() & 1u);
    oracle::Dense g(n1 + n2, std::vector<int>(n1 + n2, 0));
    for (int i = 0; i < n1; ++i)
      for (int j = 0; j < n1; ++j) g[i][j] = g1[i][j];
    for (int i = 0; i < n2; ++i)
      for (int j = 0; j < n2; ++j) g[n1 + i][n1 + j] = g2[i][j];
    std::vector<int> ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    const QForm4 qa(Gf2Matrix::from_rows(g1), a), qb(Gf2Matrix::from_rows(g2), b);
    const int sum = brown(direct_sum(qa, qb));
    if (sum != (brown(qa) + brown(qb)) % 8 || sum != oracle::brown_float(g, ab)) {
      detail = "additivity at sample " + std::to_string(t);
      return false;
    }
  }
  detail = std::to_string(sums) + " direct sums";
  return true;
}

bool loop_formulas(std::string& detail) {
  int rows = 0;
  for (int k = 0; k <= 3; ++k)
    for (unsigned mask = 0; mask < (1u << k); ++mask)
      for (long long rc = 0; rc <= 7; ++rc) {
        LoopData d{k, {}, rc};
        int lambda_sum = 0;
        for (int i = 0; i < k; ++i) {
          d.lambda.push_back(static_cast<int>(mask >> i & 1u));
          lambda_sum += d.lambda.back();
        }
        // hand table: spin = k + sum(lambda) mod 2, pin = 2 sum(lambda) + 2k + rc mod 4
        const int spin = (k + lambda_sum) % 2;
        const int pin = static_cast<int>((2 * lambda_sum + 2 * k + rc) % 4);
        if (spin_value_from_loops(d) != spin || pin_value_from_loops(d) != pin) {
          detail = "k = " + std::to_string(k) + ", rc = " + std::to_string(rc);
          return false;
        }
        ++rows;
      }
  detail = std::to_string(rows) + " table rows";
  return true;
}

}  // namespace

int main() {
  criterion("homology-oracle", 1, homology_oracle);
  criterion("fixed-class-characteristic", 5, fixed_class_suite);
  criterion("evenness-characteristic", 5, evenness_suite);
  criterion("type-verdicts", 1, type_verdicts);
  criterion("curve-complex-orientations", 1, curve_orientations);
  criterion("covering-euler-law", 2, covering_law);
  criterion("kharlamov-arithmetic", 1, kharlamov_arithmetic);
  criterion("smith-kernel-bound", 5, smith_bound);
  criterion("transfer-identities", 1, transfer_identities);
  criterion("quadratic-forms", 10, qform_suite);
  criterion("loop-formulas", 1, loop_formulas);
  std::printf("%d failed\n", failures);
  return failures == 0 ? 0 : 1;
}
