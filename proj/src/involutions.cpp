#include "conjtop/involutions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "conjtop/errors.hpp"

namespace conjtop {

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::size_t> parent;
};

std::size_t sum(const std::vector<std::size_t>& v) { return std::accumulate(v.begin(), v.end(), std::size_t{0}); }

}  // namespace

FixedSet fixed_subcomplex(const SimplicialMap& tau) {
  check_pointwise_regular(tau);
  const auto& k = tau.source();
  FixedSet fs;
  std::vector<Simplex> fixed;
  for (int d = 0; d <= k.dimension(); ++d)
    for (const auto& s : k.simplices(d))
      if (std::all_of(s.begin(), s.end(), [&](Vertex v) { return tau(v) == v; })) fixed.push_back(s);
  fs.complex = SimplicialComplex::from_simplices(k.vertex_count(), fixed);
  fs.betti = betti_numbers(fs.complex);
  fs.total_betti = sum(fs.betti);

  // Components by least vertex, with their dimensions.
  UnionFind uf(static_cast<std::size_t>(k.vertex_count()));
  for (const auto& e : fs.complex.simplices(1)) uf.unite(static_cast<std::size_t>(e[0]), static_cast<std::size_t>(e[1]));
  std::map<std::size_t, int> dims;
  for (const auto& v : fs.complex.vertices()) dims.emplace(uf.find(static_cast<std::size_t>(v)), 0);
  for (int d = 1; d <= fs.complex.dimension(); ++d)
    for (const auto& s : fs.complex.simplices(d)) {
      int& cd = dims[uf.find(static_cast<std::size_t>(s[0]))];
      cd = std::max(cd, d);
    }
  std::map<Vertex, int> by_least;
  std::map<std::size_t, Vertex> least;
  for (const auto& v : fs.complex.vertices()) least.emplace(uf.find(static_cast<std::size_t>(v)), v);
  for (auto [root, d] : dims) by_least[least[root]] = d;
  for (auto [v, d] : by_least) fs.component_dimensions.push_back(d);

  fs.middle_degree = k.dimension() / 2;
  const int n = fs.middle_degree;
  fs.middle_cycle = BitVector(k.count(n));
  if (k.dimension() >= 0 && k.dimension() % 2 == 0) {
    for (const auto& s : fs.complex.simplices(n))
      if (dims[uf.find(static_cast<std::size_t>(s[0]))] == n) fs.middle_cycle.set(*k.index_of(s));
    if (n >= 1 && k.boundary(n).apply(fs.middle_cycle).any())
      throw InputError("middle-dimensional part of the fixed set is not a cycle");
    fs.middle_class = homology(k, n).coordinates(fs.middle_cycle);
  }
  return fs;
}

InvolutionFormData involution_form_data(const SimplicialMap& tau) {
  if (!tau.is_involution()) throw InputError("map is not a simplicial involution");
  const auto& k = tau.source();
  if (k.dimension() < 2 || k.dimension() % 2 != 0)
    throw InputError("involution form needs an even-dimensional complex, got dimension " +
                     std::to_string(k.dimension()));
  InvolutionFormData d;
  d.half_dimension = k.dimension() / 2;
  d.middle = homology(k, d.half_dimension);
  d.intersection = intersection_form(k, d.middle);
  d.tau_star = induced_map(d.middle, d.middle, tau.chain_map(d.half_dimension));
  d.form.gram = d.intersection * d.tau_star;
  if (!d.form.gram.is_symmetric()) throw ModelIntegrityError("form of the involution is not symmetric");
  return d;
}

InvolutionFormData involution_form_data(const ChainComplexData& c) {
  c.validate();
  if (!c.has_involution()) throw InputError("chain data has no involution");
  if (!c.pairing) throw InputError("chain data has no pairing");
  InvolutionFormData d;
  d.half_dimension = c.top() / 2;
  d.middle = homology(c, d.half_dimension);
  d.intersection = intersection_form(c, d.middle);
  d.tau_star = induced_map(d.middle, d.middle, c.involution[static_cast<std::size_t>(d.half_dimension)]);
  d.form.gram = d.intersection * d.tau_star;
  if (!d.form.gram.is_symmetric()) throw ModelIntegrityError("form of the involution is not symmetric");
  return d;
}

BilinearFormGF2 involution_form(const SimplicialMap& tau) { return involution_form_data(tau).form; }
BilinearFormGF2 involution_form(const ChainComplexData& c) { return involution_form_data(c).form; }

BitVector characteristic_class(const BilinearFormGF2& b) {
  if (b.gram.rows() != b.gram.cols()) throw InputError("form matrix is not square");
  const auto kernel = gf2_kernel(b.gram);
  if (!kernel.empty())
    throw InputError("form is degenerate; kernel contains (" + kernel.front().to_string() + ")");
  auto sol = gf2_solve(b.gram, b.gram.diagonal());
  return sol->particular;
}

bool is_even(const BilinearFormGF2& b) { return b.gram.diagonal().none(); }

FixedClassReport verify_fixed_class_characteristic(const SimplicialMap& tau) {
  const FixedSet fs = fixed_subcomplex(tau);
  const int n = tau.source().dimension() / 2;
  if (fs.dimension() > n)
    throw InputError("fixed set has dimension " + std::to_string(fs.dimension()) +
                     ", above the middle dimension " + std::to_string(n));
  const InvolutionFormData d = involution_form_data(tau);
  FixedClassReport r;
  r.fixed_dimension = fs.dimension();
  r.half_dimension = n;
  r.fixed_class = fs.middle_class;
  r.characteristic = characteristic_class(d.form);
  r.holds = r.fixed_class == r.characteristic;
  return r;
}

FixedClassReport verify_fixed_class_characteristic(const ChainComplexData& c) {
  if (!c.fixed_class) throw InputError("chain data has no fixed class");
  const InvolutionFormData d = involution_form_data(c);
  FixedClassReport r;
  r.half_dimension = d.half_dimension;
  r.fixed_class = d.middle.coordinates(*c.fixed_class);
  r.characteristic = characteristic_class(d.form);
  r.holds = r.fixed_class == r.characteristic;
  return r;
}

std::string to_string(SurfaceType t) {
  switch (t) {
    case SurfaceType::I_abs: return "I_abs";
    case SurfaceType::I_rel: return "I_rel";
    case SurfaceType::II: return "II";
  }
  return "II";
}

SurfaceType parse_surface_type(const std::string& s) {
  if (s == "I_abs") return SurfaceType::I_abs;
  if (s == "I_rel") return SurfaceType::I_rel;
  if (s == "II") return SurfaceType::II;
  throw InputError("unknown type '" + s + "' (expected I_abs, I_rel or II)");
}

TypeVerdict classify_class(const BitVector& fixed_class, const std::optional<BitVector>& h) {
  if (h && h->size() != fixed_class.size())
    throw InputError("hyperplane class has " + std::to_string(h->size()) + " coordinates, expected " +
                     std::to_string(fixed_class.size()));
  TypeVerdict v;
  v.witness = fixed_class;
  v.compared = h;
  if (fixed_class.none())
    v.type = SurfaceType::I_abs;
  else if (h && *h == fixed_class)
    v.type = SurfaceType::I_rel;
  else
    v.type = SurfaceType::II;
  return v;
}

TypeVerdict classify_type(const SimplicialMap& tau, const std::optional<BitVector>& h) {
  return classify_class(fixed_subcomplex(tau).middle_class, h);
}

TypeVerdict classify_type(const ChainComplexData& c, const std::optional<BitVector>& h) {
  if (!c.fixed_class) throw InputError("chain data has no fixed class");
  c.validate();
  return classify_class(homology(c, c.top() / 2).coordinates(*c.fixed_class), h);
}

HarnackReport harnack_from_totals(std::size_t fixed_total, std::size_t ambient_total) {
  if (fixed_total > ambient_total)
    throw ModelIntegrityError("fixed set total Betti number " + std::to_string(fixed_total) + " exceeds " +
                              std::to_string(ambient_total) + ": not realizable as a complex conjugation");
  return {fixed_total, ambient_total, fixed_total == ambient_total};
}

HarnackReport harnack_audit(const SimplicialMap& tau) {
  return harnack_from_totals(fixed_subcomplex(tau).total_betti, total_betti(tau.source()));
}

HarnackReport harnack_audit(const ChainComplexData& c) {
  if (!c.fixed_betti_total) throw InputError("chain data has no fixed-set Betti total");
  c.validate();
  return harnack_from_totals(*c.fixed_betti_total, sum(betti_numbers(c)));
}

void assert_smith_bound(std::size_t kernel_dimension, bool h1_trivial) {
  if (h1_trivial && kernel_dimension > 1)
    throw ModelIntegrityError("kernel of H_2(Fix) -> H_2(K) has dimension " + std::to_string(kernel_dimension) +
                              " although H_1(K) vanishes; at most 1 is possible");
}

SmithReport smith_kernel_bound(const SimplicialMap& tau) {
  const auto& k = tau.source();
  if (k.dimension() != 4) throw InputError("kernel bound needs a four-dimensional complex");
  const FixedSet fs = fixed_subcomplex(tau);
  SmithReport r;
  const auto betti = betti_numbers(k);
  r.h1_trivial = betti.size() > 1 && betti[1] == 0;

  const HomologyBasis fix2 = homology(fs.complex, 2);
  const HomologyBasis k2 = homology(k, 2);
  std::vector<BitVector> images;
  for (const auto& z : fix2.cycles) {
    BitVector pushed(k.count(2));
    for (auto i : z.indices()) pushed.set(*k.index_of(fs.complex.simplices(2)[i]));
    images.push_back(k2.coordinates(pushed));
  }
  r.kernel_dimension = fix2.betti() - gf2_rank(Gf2Matrix::from_columns(images, k2.betti()));

  const auto rel = betti_numbers(orbit_chain_complex(tau, true));
  for (int d : {4, 3, 2}) r.relative_quotient_ranks.emplace_back(d, d < static_cast<int>(rel.size()) ? rel[static_cast<std::size_t>(d)] : 0);

  assert_smith_bound(r.kernel_dimension, r.h1_trivial);
  r.bound_asserted = r.h1_trivial;
  return r;
}

ParityVerdict parity_obstruction(long long d, const BilinearFormGF2& b, const BitVector& invariant_class) {
  if (invariant_class.size() != b.dimension())
    throw InputError("witness has " + std::to_string(invariant_class.size()) + " coordinates, form has dimension " +
                     std::to_string(b.dimension()));
  const bool odd = (d % 2 + 2) % 2 == 1;
  if (b(invariant_class, invariant_class) != odd)
    throw InputError("witness self-pairing does not agree with " + std::to_string(d) + " mod 2");
  ParityVerdict v;
  v.witness = invariant_class;
  v.obstructed = odd;
  v.message = odd ? "cannot be I_abs" : "no obstruction";
  return v;
}

namespace {

MVarietyReport finish_m_report(MVarietyReport r) {
  r.vacuous = !(r.is_m && r.even_form);
  if (r.is_m && !r.acts_trivially)
    throw ModelIntegrityError("M-variety whose involution acts nontrivially in homology");
  if (!r.vacuous && !r.fixed_class_zero)
    throw ModelIntegrityError("M-variety with even intersection form whose fixed set does not bound");
  return r;
}

}  // namespace

MVarietyReport check_m_variety_bounds(const SimplicialMap& tau) {
  MVarietyReport r;
  r.is_m = harnack_audit(tau).is_m;
  const InvolutionFormData d = involution_form_data(tau);
  r.even_form = is_even(BilinearFormGF2{d.intersection});
  r.fixed_class_zero = fixed_subcomplex(tau).middle_class.none();
  r.acts_trivially = true;
  for (int k = 0; k <= tau.source().dimension(); ++k) {
    const Gf2Matrix m = induced_map(tau, k);
    if (!(m == Gf2Matrix::identity(m.rows()))) r.acts_trivially = false;
  }
  return finish_m_report(r);
}

MVarietyReport check_m_variety_bounds(const ChainComplexData& c) {
  if (!c.fixed_class) throw InputError("chain data has no fixed class");
  MVarietyReport r;
  r.is_m = harnack_audit(c).is_m;
  const InvolutionFormData d = involution_form_data(c);
  r.even_form = is_even(BilinearFormGF2{d.intersection});
  r.fixed_class_zero = d.middle.coordinates(*c.fixed_class).none();
  r.acts_trivially = true;
  for (int k = 0; k <= c.top(); ++k) {
    const HomologyBasis h = homology(c, k);
    const Gf2Matrix m = induced_map(h, h, c.involution[static_cast<std::size_t>(k)]);
    if (!(m == Gf2Matrix::identity(m.rows()))) r.acts_trivially = false;
  }
  return finish_m_report(r);
}

}  // namespace conjtop
