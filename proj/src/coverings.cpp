#include "conjtop/coverings.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "conjtop/errors.hpp"
#include "conjtop/homology.hpp"

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

// Position in `top` of the vertex missing from `face`.
std::size_t missing_position(const Simplex& top, const Simplex& face) {
  for (std::size_t i = 0; i < top.size(); ++i)
    if (i == face.size() || top[i] != face[i]) return i;
  return top.size() - 1;
}

std::vector<char> face_mask(const SimplicialComplex& x, const SimplicialComplex& y) {
  const int n = x.dimension();
  std::vector<char> cut(x.count(n - 1), 0);
  if (y.dimension() < 0) return cut;
  if (y.dimension() != n - 1 || !y.is_subcomplex_of(x))
    throw InputError("curve must be a subcomplex of codimension one");
  for (const auto& f : y.simplices(n - 1)) cut[*x.index_of(f)] = 1;
  return cut;
}

}  // namespace

CoverComplex double_cover_unbranched(ComplexPtr k, const BitVector& w) {
  if (w.size() != k->count(1))
    throw InputError("cocycle has length " + std::to_string(w.size()) + ", expected " + std::to_string(k->count(1)));
  if (k->dimension() >= 2 && k->boundary(2).transpose().apply(w).any())
    throw InputError("w is not a cocycle");
  auto weight = [&](Vertex a, Vertex b) {
    if (a == b) return false;
    return w.get(*k->index_of({std::min(a, b), std::max(a, b)}));
  };
  std::vector<Simplex> lifts;
  for (const auto& s : k->maximal_simplices())
    for (int sheet = 0; sheet < 2; ++sheet) {
      Simplex l;
      for (Vertex v : s) l.push_back(2 * v + (sheet ^ static_cast<int>(weight(s[0], v))));
      lifts.push_back(l);
    }
  const int vc = 2 * k->vertex_count();
  auto total = make_complex(SimplicialComplex::from_simplices(vc, lifts));
  std::vector<Vertex> proj(static_cast<std::size_t>(vc), 0), deck(static_cast<std::size_t>(vc), 0);
  for (int x = 0; x < vc; ++x) {
    proj[static_cast<std::size_t>(x)] = x / 2;
    deck[static_cast<std::size_t>(x)] = x ^ 1;
  }
  CoverComplex c{k, total, SimplicialMap(total, k, proj), SimplicialMap(total, total, deck),
                 SimplicialComplex::from_simplices(k->vertex_count(), {}), {}, {}};
  const int n = total->dimension();
  for (const auto& t : total->simplices(n)) {
    c.sheet_labels.push_back(t[0] % 2);
    c.base_top.push_back(*k->index_of(c.projection.image(t)));
  }
  check_cover(c);
  return c;
}

CoverComplex branched_double_cover(ComplexPtr k, const BitVector& chain) {
  const int n = k->dimension();
  if (n < 1) throw InputError("branched cover needs a complex of positive dimension");
  if (chain.size() != k->count(n - 1))
    throw InputError("cut chain has length " + std::to_string(chain.size()) + ", expected " +
                     std::to_string(k->count(n - 1)));
  fundamental_class(*k);
  // Branch locus: closure of the boundary of the cut chain.
  std::vector<Simplex> branch_cells;
  if (n >= 2) branch_cells = k->support(n - 2, k->boundary(n - 1).apply(chain));
  SimplicialComplex branch = SimplicialComplex::from_simplices(k->vertex_count(), branch_cells);
  std::set<Vertex> branch_vertices;
  for (Vertex v : branch.vertices()) branch_vertices.insert(v);
  for (int d = 1; d <= n; ++d)
    for (const auto& s : k->simplices(d))
      if (std::all_of(s.begin(), s.end(), [&](Vertex v) { return branch_vertices.count(v); }) && !branch.contains(s))
        throw InputError("branch locus is not full: " + to_string(s) + " spans branch vertices; subdivide first");

  const auto& tops = k->simplices(n);
  const std::size_t width = static_cast<std::size_t>(n) + 1;
  auto node = [&](std::size_t top, std::size_t pos, int sheet) { return (top * width + pos) * 2 + static_cast<std::size_t>(sheet); };
  UnionFind uf(tops.size() * width * 2);
  for (const auto& inc : k->top_face_incidences()) {
    const std::size_t a = inc.cofaces[0], b = inc.cofaces[1];
    const int cross = chain.get(*k->index_of(inc.face)) ? 1 : 0;
    for (Vertex v : inc.face) {
      const auto pa = static_cast<std::size_t>(std::lower_bound(tops[a].begin(), tops[a].end(), v) - tops[a].begin());
      const auto pb = static_cast<std::size_t>(std::lower_bound(tops[b].begin(), tops[b].end(), v) - tops[b].begin());
      for (int s = 0; s < 2; ++s) uf.unite(node(a, pa, s), node(b, pb, s ^ cross));
    }
  }
  // Lifts of each base vertex in order of first appearance.
  std::map<Vertex, std::vector<std::size_t>> roots;
  for (std::size_t j = 0; j < tops.size(); ++j)
    for (int s = 0; s < 2; ++s)
      for (std::size_t p = 0; p < width; ++p) {
        auto& r = roots[tops[j][p]];
        const std::size_t root = uf.find(node(j, p, s));
        if (std::find(r.begin(), r.end(), root) == r.end()) r.push_back(root);
      }
  std::map<std::size_t, Vertex> total_vertex;
  std::vector<Vertex> proj;
  for (const auto& [v, r] : roots) {
    const bool is_branch = branch_vertices.count(v) > 0;
    if (r.size() != (is_branch ? 1u : 2u))
      throw InputError("cover is ill-defined at vertex " + std::to_string(v) + ": " + std::to_string(r.size()) +
                       " lifts found");
    for (auto root : r) {
      total_vertex[root] = static_cast<Vertex>(proj.size());
      proj.push_back(v);
    }
  }
  std::vector<Simplex> lifted;
  std::vector<Vertex> deck(proj.size(), -1);
  for (std::size_t j = 0; j < tops.size(); ++j)
    for (int s = 0; s < 2; ++s) {
      Simplex t;
      for (std::size_t p = 0; p < width; ++p) {
        const Vertex x = total_vertex.at(uf.find(node(j, p, s)));
        deck[static_cast<std::size_t>(x)] = total_vertex.at(uf.find(node(j, p, 1 - s)));
        t.push_back(x);
      }
      lifted.push_back(t);
    }
  auto total = make_complex(SimplicialComplex::from_simplices(static_cast<int>(proj.size()), lifted));
  if (total->count(n) != 2 * tops.size())
    throw InputError("cut-and-glue produced coinciding lifts; subdivide the base first");
  CoverComplex c{k, total, SimplicialMap(total, k, proj), SimplicialMap(total, total, deck), std::move(branch), {}, {}};
  c.sheet_labels.assign(total->count(n), 0);
  c.base_top.assign(total->count(n), 0);
  for (std::size_t j = 0; j < tops.size(); ++j)
    for (int s = 0; s < 2; ++s) {
      const std::size_t idx = *total->index_of(lifted[j * 2 + static_cast<std::size_t>(s)]);
      c.sheet_labels[idx] = s;
      c.base_top[idx] = j;
    }
  check_cover(c);
  return c;
}

void check_cover(const CoverComplex& c) {
  const auto& total = *c.total;
  for (Vertex x : total.vertices()) {
    const Vertex d = c.deck(x);
    if (c.projection(d) != c.projection(x)) throw ModelIntegrityError("deck does not commute with the projection");
    if (c.deck(d) != x) throw ModelIntegrityError("deck is not an involution");
    const bool over_branch = c.branch.contains({c.projection(x)});
    if ((d == x) != over_branch) throw ModelIntegrityError("deck fixes a vertex off the branch locus or moves one on it");
  }
  if (!c.deck.is_automorphism()) throw ModelIntegrityError("deck is not an automorphism");
  const long long expected = 2 * c.base->euler_characteristic() - c.branch.euler_characteristic();
  if (total.euler_characteristic() != expected)
    throw ModelIntegrityError("Euler characteristic of the cover is " + std::to_string(total.euler_characteristic()) +
                              ", expected " + std::to_string(expected));
}

SemiOrientation::SemiOrientation(SimplicialComplex carrier, std::vector<int> signs)
    : carrier_(std::move(carrier)), signs_(std::move(signs)) {
  if (carrier_.dimension() < 0) {
    if (!signs_.empty()) throw InputError("semi-orientation of an empty carrier has signs");
    return;
  }
  if (!carrier_.is_pure()) throw InputError("semi-orientation carrier is not pure");
  if (signs_.size() != carrier_.count(carrier_.dimension()))
    throw InputError("semi-orientation needs one sign per top simplex");
  for (int s : signs_)
    if (s != 1 && s != -1) throw InputError("orientation signs must be +1 or -1");
  if (!signs_.empty() && signs_.front() == -1)
    for (int& s : signs_) s = -s;
}

int SemiOrientation::sign_of(const Simplex& top) const {
  auto idx = carrier_.index_of(top);
  if (!idx || static_cast<int>(top.size()) - 1 != carrier_.dimension())
    throw InputError("simplex " + to_string(top) + " is not a top simplex of the carrier");
  return signs_[*idx];
}

bool SemiOrientation::is_coherent() const {
  const int n = carrier_.dimension();
  if (n < 1) return true;
  const auto& tops = carrier_.simplices(n);
  for (const auto& inc : carrier_.top_face_incidences()) {
    if (inc.cofaces.size() != 2) continue;
    const std::size_t a = inc.cofaces[0], b = inc.cofaces[1];
    if (induced_sign(signs_[a], missing_position(tops[a], inc.face)) ==
        induced_sign(signs_[b], missing_position(tops[b], inc.face)))
      return false;
  }
  return true;
}

std::optional<std::vector<int>> orient_top_simplices(const SimplicialComplex& k, const std::vector<char>& cut_face) {
  const int n = k.dimension();
  const auto& tops = k.simplices(n);
  std::vector<int> sign(tops.size(), 0);
  if (n < 1) {
    std::fill(sign.begin(), sign.end(), 1);
    return sign;
  }
  // Adjacency across uncut faces with the product of the two face signs.
  std::vector<std::vector<std::pair<std::size_t, int>>> adj(tops.size());
  const auto& faces = k.simplices(n - 1);
  for (const auto& inc : k.top_face_incidences()) {
    if (inc.cofaces.size() != 2) continue;
    if (!cut_face.empty() && cut_face[*k.index_of(inc.face)]) continue;
    const std::size_t a = inc.cofaces[0], b = inc.cofaces[1];
    const int rel = -induced_sign(1, missing_position(tops[a], inc.face)) * induced_sign(1, missing_position(tops[b], inc.face));
    adj[a].emplace_back(b, rel);
    adj[b].emplace_back(a, rel);
  }
  (void)faces;
  for (std::size_t seed = 0; seed < tops.size(); ++seed) {
    if (sign[seed]) continue;
    sign[seed] = 1;
    std::deque<std::size_t> queue{seed};
    while (!queue.empty()) {
      const std::size_t a = queue.front();
      queue.pop_front();
      for (auto [b, rel] : adj[a]) {
        const int want = sign[a] * rel;
        if (!sign[b]) {
          sign[b] = want;
          queue.push_back(b);
        } else if (sign[b] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return sign;
}

std::vector<int> push_orientation(const SimplicialMap& f, const std::vector<int>& signs) {
  const auto& src = f.source();
  const int n = src.dimension();
  if (signs.size() != src.count(n)) throw InputError("orientation has the wrong number of signs");
  std::vector<int> out(f.target().count(n), 0);
  for (std::size_t j = 0; j < signs.size(); ++j) {
    const Simplex& s = src.simplices(n)[j];
    const Simplex img = f.image(s);
    if (img.size() != s.size()) throw InputError("cannot push an orientation through a degenerate map");
    out[*f.target().index_of(img)] = signs[j] * f.orientation_sign(s);
  }
  return out;
}

bool is_orientable(const SimplicialComplex& k) { return orient_top_simplices(k, {}).has_value(); }

DividingResult dividing_test(const SimplicialMap& tau) {
  const auto& k = tau.source();
  if (k.dimension() != 2) throw InputError("dividing test needs a surface");
  const FixedSet fs = fixed_subcomplex(tau);
  if (fs.dimension() > 1) throw InputError("fixed set must be a curve or empty");
  const auto cut = face_mask(k, fs.dimension() == 1 ? fs.complex : SimplicialComplex{});
  const std::size_t nt = k.count(2);
  UnionFind uf(nt);
  std::vector<char> touched(nt, 0);
  for (const auto& inc : k.top_face_incidences()) {
    if (inc.cofaces.size() != 2) throw InputError("dividing test needs a closed surface");
    if (!cut[*k.index_of(inc.face)]) uf.unite(inc.cofaces[0], inc.cofaces[1]);
  }
  std::map<std::size_t, std::size_t> comp_of_root;
  std::vector<std::vector<std::size_t>> comps;
  for (std::size_t j = 0; j < nt; ++j) {
    auto [it, inserted] = comp_of_root.emplace(uf.find(j), comps.size());
    if (inserted) comps.emplace_back();
    comps[it->second].push_back(j);
  }
  DividingResult r;
  r.component_count = comps.size();
  if (comps.size() == 1) return r;
  if (comps.size() == 2) {
    const Simplex image = tau.image(k.simplices(2)[comps[0].front()]);
    const std::size_t target = comp_of_root.at(uf.find(*k.index_of(image)));
    if (target == 1) {
      r.dividing = true;
      r.halves = std::move(comps);
      return r;
    }
  }
  throw ModelIntegrityError("complement of the fixed curve has " + std::to_string(comps.size()) +
                            " components not matching a real structure");
}

CurveOrientation curve_complex_semiorientation(const SimplicialMap& tau, std::size_t half) {
  const auto& k = tau.source();
  const DividingResult div = dividing_test(tau);
  if (!div.dividing) throw InputError("curve semi-orientation needs a dividing fixed curve");
  if (half > 1) throw InputError("half index must be 0 or 1");
  const FixedSet fs = fixed_subcomplex(tau);
  const auto cut = face_mask(k, fs.complex);
  auto oriented = orient_top_simplices(k, cut);
  if (!oriented) throw ModelIntegrityError("a half of the complement is not orientable");

  CurveOrientation out;
  out.chosen_half = half;
  out.half_signs.assign(k.count(2), 0);
  for (auto j : div.halves[half]) out.half_signs[j] = (*oriented)[j];
  // The other half carries the reversed push-forward of the chosen one.
  std::vector<int> other = push_orientation(tau, out.half_signs);
  for (auto& s : other) s = -s;

  const auto& tops = k.simplices(2);
  const auto& edges = fs.complex.simplices(1);
  std::vector<int> induced(edges.size(), 0);
  out.halves_opposite = true;
  for (const auto& inc : k.top_face_incidences()) {
    if (!fs.complex.contains(inc.face)) continue;
    int mine = 0, theirs = 0;
    for (auto j : inc.cofaces) {
      const int pos = induced_sign(1, missing_position(tops[j], inc.face));
      if (out.half_signs[j]) mine = pos * out.half_signs[j];
      if (other[j]) theirs = pos * other[j];
    }
    if (!mine || !theirs) throw ModelIntegrityError("fixed edge " + to_string(inc.face) + " does not separate the halves");
    if (mine != -theirs) out.halves_opposite = false;
    induced[*fs.complex.index_of(inc.face)] = mine;
  }
  if (!out.halves_opposite) throw ModelIntegrityError("the two halves induce the same orientation on the fixed curve");
  out.semi = SemiOrientation(SimplicialComplex::from_simplices(k.vertex_count(), edges), induced);
  return out;
}

std::string to_string(Extension e) {
  switch (e) {
    case Extension::Extends: return "extends";
    case Extension::Flips: return "flips";
    case Extension::Mixed: return "mixed";
  }
  return "mixed";
}

std::vector<CurveComponentVerdict> extendibility_check(const SimplicialComplex& x, const SimplicialComplex& y,
                                                       const SemiOrientation& s) {
  const int n = x.dimension();
  if (!(s.carrier() == x)) throw InputError("semi-orientation must be given on the top simplices of X");
  const auto cut = face_mask(x, y);
  const auto& tops = x.simplices(n);
  auto coherent = [&](const SimplicialComplex::FaceIncidence& inc) {
    const std::size_t a = inc.cofaces[0], b = inc.cofaces[1];
    return induced_sign(s.signs()[a], missing_position(tops[a], inc.face)) !=
           induced_sign(s.signs()[b], missing_position(tops[b], inc.face));
  };
  const auto incidences = x.top_face_incidences();
  for (const auto& inc : incidences)
    if (inc.cofaces.size() == 2 && !cut[*x.index_of(inc.face)] && !coherent(inc))
      throw InputError("orientation is incoherent across " + to_string(inc.face) + " away from the curve");

  std::vector<CurveComponentVerdict> out;
  if (y.dimension() < 0) return out;
  // Components of Y through shared codimension-two faces.
  const auto& yfaces = y.simplices(n - 1);
  UnionFind uf(yfaces.size());
  std::map<Simplex, std::size_t> first_owner;
  for (std::size_t j = 0; j < yfaces.size(); ++j)
    for (std::size_t i = 0; i < yfaces[j].size(); ++i) {
      Simplex r = yfaces[j];
      r.erase(r.begin() + static_cast<std::ptrdiff_t>(i));
      auto [it, inserted] = first_owner.emplace(r, j);
      if (!inserted) uf.unite(j, it->second);
    }
  std::map<std::size_t, std::size_t> comp;
  for (std::size_t j = 0; j < yfaces.size(); ++j) {
    auto [it, inserted] = comp.emplace(uf.find(j), out.size());
    if (inserted) out.emplace_back();
    out[it->second].faces.push_back(yfaces[j]);
  }
  std::vector<int> state(out.size(), 0);  // bit 1: coherent seen, bit 2: flip seen
  for (const auto& inc : incidences) {
    if (inc.cofaces.size() != 2 || !cut[*x.index_of(inc.face)]) continue;
    const std::size_t c = comp.at(uf.find(*y.index_of(inc.face)));
    state[c] |= coherent(inc) ? 1 : 2;
  }
  for (std::size_t c = 0; c < out.size(); ++c)
    out[c].verdict = state[c] == 2 ? Extension::Flips : state[c] == 1 ? Extension::Extends : Extension::Mixed;
  return out;
}

SemiOrientation complement_orientation(const SimplicialComplex& x, const SimplicialComplex& y) {
  auto signs = orient_top_simplices(x, face_mask(x, y));
  if (!signs) throw InputError("complement of the curve is not orientable");
  return SemiOrientation(x, *signs);
}

OrientationCover orientation_cover(ComplexPtr x, const SimplicialComplex& y) {
  const int n = x->dimension();
  if (n < 1) throw InputError("orientation cover needs a complex of positive dimension");
  const SemiOrientation s = complement_orientation(*x, y);
  for (const auto& comp : extendibility_check(*x, y, s))
    if (comp.verdict != Extension::Flips)
      throw InputError("orientation of the complement " + to_string(comp.verdict) + " across the component through " +
                       to_string(comp.faces.front()));
  BitVector chain(x->count(n - 1));
  for (const auto& f : y.simplices(n - 1)) chain.set(*x->index_of(f));
  if (n >= 2 && x->boundary(n - 1).apply(chain).any()) throw InputError("curve is not closed");

  OrientationCover out{branched_double_cover(x, chain), {}, false};
  const auto& total = *out.cover.total;
  std::vector<int> signs(total.count(n));
  for (std::size_t t = 0; t < signs.size(); ++t)
    signs[t] = s.signs()[out.cover.base_top[t]] * (out.cover.sheet_labels[t] ? -1 : 1);
  out.semi = SemiOrientation(total, signs);
  if (!out.semi.is_coherent()) throw ModelIntegrityError("orientation cover is not coherently oriented");
  const auto pushed = push_orientation(out.cover.deck, signs);
  out.deck_reverses = std::equal(pushed.begin(), pushed.end(), signs.begin(), [](int a, int b) { return a == -b; });
  if (!out.deck_reverses) throw ModelIntegrityError("deck transformation preserves the semi-orientation");
  return out;
}

Comparison compare_on_chain(const SimplicialComplex& x, const BitVector& h, const SemiOrientation& s1,
                            const SemiOrientation& s2) {
  const int n = x.dimension();
  if (h.size() != x.count(n)) throw InputError("2-chain has the wrong length");
  if (!(s1.carrier() == x) || !(s2.carrier() == x)) throw InputError("orientations must live on X");
  Comparison c;
  for (std::size_t j = 0; j < h.size(); ++j) {
    const bool agree = s1.signs()[j] == s2.signs()[j];
    auto& part = h.get(j) ? c.part_h : c.part_rest;
    auto& label = h.get(j) ? c.agree_on_h : c.agree_on_rest;
    part.push_back(j);
    if (!label) label = agree;
    else if (*label != agree) throw ModelIntegrityError("agreement of the orientations is not constant on a part");
  }
  return c;
}

Comparison compare_mod_curves(const SimplicialComplex& x, const SimplicialComplex& y1, const SimplicialComplex& y2,
                              const SemiOrientation& s1, const SemiOrientation& s2) {
  const int n = x.dimension();
  for (const auto& [y, s] : {std::pair{&y1, &s1}, std::pair{&y2, &s2}})
    for (const auto& comp : extendibility_check(x, *y, *s))
      if (comp.verdict != Extension::Flips)
        throw InputError("orientation must flip exactly across its curve; it " + to_string(comp.verdict) +
                         " across the component through " + to_string(comp.faces.front()));
  BitVector rhs(x.count(n - 1));
  for (const auto* y : {&y1, &y2})
    for (const auto& f : y->simplices(n - 1)) rhs.flip(*x.index_of(f));
  const auto sol = gf2_solve(x.boundary(n), rhs);
  if (!sol) throw InputError("curves are not homologous: no 2-chain bounds their sum");
  return compare_on_chain(x, sol->particular, s1, s2);
}

Lifts lift_involution(const CoverComplex& cover, const SimplicialMap& tau) {
  if (!tau.is_involution() || !(tau.source() == *cover.base)) throw InputError("lift needs an involution of the base");
  for (int d = 0; d <= cover.branch.dimension(); ++d)
    for (const auto& s : cover.branch.simplices(d))
      if (!cover.branch.contains(tau.image(s))) throw InputError("involution does not preserve the branch locus");
  const auto& total = *cover.total;
  const int n = total.dimension();
  const auto& tops = total.simplices(n);
  std::vector<std::vector<std::size_t>> lifts_of(cover.base->count(n));
  for (std::size_t t = 0; t < tops.size(); ++t) lifts_of[cover.base_top[t]].push_back(t);

  std::map<Simplex, std::vector<std::size_t>> cofaces;
  for (const auto& inc : total.top_face_incidences()) cofaces[inc.face] = inc.cofaces;

  std::vector<Vertex> vimg(static_cast<std::size_t>(total.vertex_count()), -1);
  std::vector<long long> timg(tops.size(), -1);
  const std::string not_preserved = "cover is not preserved by the involution";
  auto bind = [&](std::size_t t, std::size_t u) {
    if (timg[t] >= 0) {
      if (timg[t] != static_cast<long long>(u)) throw InputError(not_preserved);
      return false;
    }
    timg[t] = static_cast<long long>(u);
    for (Vertex xv : tops[t]) {
      const Vertex target_base = tau(cover.projection(xv));
      Vertex y = -1;
      for (Vertex yv : tops[u])
        if (cover.projection(yv) == target_base) y = yv;
      if (y < 0) throw InputError(not_preserved);
      auto& slot = vimg[static_cast<std::size_t>(xv)];
      if (slot >= 0 && slot != y) throw InputError(not_preserved);
      slot = y;
    }
    return true;
  };
  auto deck_top = [&](std::size_t t) { return *total.index_of(cover.deck.image(tops[t])); };

  for (std::size_t seed = 0; seed < tops.size(); ++seed) {
    if (timg[seed] >= 0) continue;
    const Simplex base_image = tau.image(cover.base->simplices(n)[cover.base_top[seed]]);
    const std::size_t u = lifts_of[*cover.base->index_of(base_image)].front();
    std::deque<std::size_t> queue;
    if (bind(seed, u)) queue.push_back(seed);
    if (bind(deck_top(seed), deck_top(u))) queue.push_back(deck_top(seed));
    while (!queue.empty()) {
      const std::size_t t = queue.front();
      queue.pop_front();
      const std::size_t u_img = static_cast<std::size_t>(timg[t]);
      for (std::size_t i = 0; i < tops[t].size(); ++i) {
        Simplex f = tops[t];
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
        const auto& cf = cofaces.at(f);
        if (cf.size() != 2) continue;
        const std::size_t nb = cf[0] == t ? cf[1] : cf[0];
        Simplex fi;
        for (Vertex v : f) fi.push_back(vimg[static_cast<std::size_t>(v)]);
        std::sort(fi.begin(), fi.end());
        const auto it = cofaces.find(fi);
        if (it == cofaces.end() || it->second.size() != 2) throw InputError(not_preserved);
        const std::size_t nb_img = it->second[0] == u_img ? it->second[1] : it->second[0];
        if (bind(nb, nb_img)) queue.push_back(nb);
      }
    }
  }
  Lifts out{SimplicialMap(cover.total, cover.total, vimg), {}, false};
  out.minus = compose(cover.deck, out.plus);
  for (const auto* c : {&out.plus, &out.minus}) {
    if (!c->is_automorphism()) throw InputError(not_preserved);
    for (Vertex xv : total.vertices())
      if (cover.projection((*c)(xv)) != tau(cover.projection(xv)))
        throw ModelIntegrityError("lift does not commute with the projection");
  }
  const SimplicialMap sq = compose(out.plus, out.plus);
  if (sq == cover.deck && !(sq == SimplicialMap::identity(cover.total)))
    out.plus_squared_is_deck = true;
  else if (!(sq == SimplicialMap::identity(cover.total)))
    throw ModelIntegrityError("square of the lift is neither the identity nor the deck transformation");
  return out;
}

KharlamovReport kharlamov_trace(long long chi, SurfaceType type, bool h1_trivial) {
  KharlamovReport r;
  r.chi = chi;
  r.applicable = type == SurfaceType::I_abs && h1_trivial;
  std::ostringstream os;
  if (!r.applicable) {
    r.trace = "congruence not applicable";
    return r;
  }
  r.s_ca = -chi;
  r.s_quot = 2 * r.s_ca;
  r.holds = r.s_quot % 16 == 0;
  os << "s_CA = -chi = " << r.s_ca << "; s_quot = 2*s_CA = " << r.s_quot << "; 16 | s_quot: "
     << (r.holds ? "yes" : "no") << "; chi mod 8 = " << ((chi % 8) + 8) % 8;
  r.trace = os.str();
  return r;
}

KharlamovReport kharlamov_check(long long chi, SurfaceType type, bool h1_trivial) {
  KharlamovReport r = kharlamov_trace(chi, type, h1_trivial);
  if (r.applicable && !r.holds)
    throw ModelIntegrityError("violates χ(RA) ≡ 0 (mod 8): chi = " + std::to_string(chi) + "; " + r.trace);
  return r;
}

}  // namespace conjtop
