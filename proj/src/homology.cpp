#include "conjtop/homology.hpp"

#include <algorithm>
#include <numeric>

#include "conjtop/errors.hpp"

namespace conjtop {

namespace {

Gf2Matrix submatrix(const Gf2Matrix& m, const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols) {
  Gf2Matrix s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (m.get(rows[i], cols[j])) s.set(i, j);
  return s;
}

std::vector<std::size_t> kept_cells(std::size_t n, const std::vector<std::size_t>* excluded) {
  std::vector<std::size_t> keep;
  std::size_t e = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (excluded && e < excluded->size() && (*excluded)[e] == i) {
      ++e;
      continue;
    }
    keep.push_back(i);
  }
  return keep;
}

std::string degree_name(const char* what, int k) { return std::string(what) + " " + std::to_string(k); }

}  // namespace

Gf2Matrix ChainComplexData::boundary_into(int k) const {
  if (k + 1 >= 1 && k + 1 <= top()) return boundary[static_cast<std::size_t>(k) + 1];
  return Gf2Matrix(dim(k), dim(k + 1));
}

void ChainComplexData::validate() const {
  if (boundary.size() != dims.size())
    throw InputError("chain data: " + std::to_string(dims.size()) + " degrees but " +
                     std::to_string(boundary.size()) + " boundary matrices");
  for (int k = 0; k <= top(); ++k) {
    const auto& d = boundary[static_cast<std::size_t>(k)];
    if (d.rows() != dim(k - 1) || d.cols() != dim(k))
      throw InputError("chain data: " + degree_name("boundary", k) + " has the wrong shape");
    if (k >= 2 && !(boundary[static_cast<std::size_t>(k) - 1] * d).is_zero())
      throw InputError("chain data: boundary squared is nonzero in degree " + std::to_string(k));
  }
  if (!int_boundary.empty()) {
    if (int_boundary.size() != dims.size())
      throw InputError("chain data: integer boundaries must cover every degree");
    for (int k = 0; k <= top(); ++k) {
      const auto& d = int_boundary[static_cast<std::size_t>(k)];
      if (!d) continue;
      if (d->rows() != dim(k - 1) || d->cols() != dim(k))
        throw InputError("chain data: " + degree_name("integer boundary", k) + " has the wrong shape");
      if (!(d->mod2() == boundary[static_cast<std::size_t>(k)]))
        throw InputError("chain data: " + degree_name("integer boundary", k) +
                         " does not reduce to the mod 2 boundary");
      if (k < 2) continue;
      const auto& prev = int_boundary[static_cast<std::size_t>(k) - 1];
      if (prev && !((*prev) * (*d)).is_zero())
        throw InputError("chain data: integer boundary squared is nonzero in degree " +
                         std::to_string(k));
    }
  }
  if (has_involution()) {
    if (involution.size() != dims.size())
      throw InputError("chain data: involution must be given in every degree");
    for (int k = 0; k <= top(); ++k) {
      const auto& t = involution[static_cast<std::size_t>(k)];
      if (t.rows() != dim(k) || t.cols() != dim(k))
        throw InputError("chain data: " + degree_name("involution", k) + " has the wrong shape");
      if (!(t * t == Gf2Matrix::identity(dim(k))))
        throw InputError("chain data: involution does not square to the identity in degree " +
                         std::to_string(k));
      if (k >= 1) {
        const auto& d = boundary[static_cast<std::size_t>(k)];
        if (!(d * t == involution[static_cast<std::size_t>(k) - 1] * d))
          throw InputError("chain data: involution does not commute with the boundary in degree " +
                           std::to_string(k));
      }
    }
  }
  if (pairing) {
    if (top() < 0 || top() % 2 != 0)
      throw InputError("chain data: a pairing needs an even top degree");
    const std::size_t m = dim(top() / 2);
    if (pairing->rows() != m || pairing->cols() != m)
      throw InputError("chain data: pairing has the wrong shape");
    if (!pairing->is_symmetric()) throw InputError("chain data: pairing is not symmetric");
  }
  if (fixed_class) {
    const int mid = top() / 2;
    if (fixed_class->size() != dim(mid))
      throw InputError("chain data: fixed class has the wrong length");
    if (mid >= 1 && boundary[static_cast<std::size_t>(mid)].apply(*fixed_class).any())
      throw InputError("chain data: fixed class is not a cycle");
  }
}

ChainComplexData ChainComplexData::from_complex(const SimplicialComplex& k) {
  ChainComplexData c;
  const auto oriented = oriented_boundaries(k);
  for (int d = 0; d <= k.dimension(); ++d) {
    c.dims.push_back(k.count(d));
    c.boundary.push_back(k.boundary(d));
    c.int_boundary.emplace_back(oriented[static_cast<std::size_t>(d)]);
  }
  return c;
}

ChainComplexData ChainComplexData::from_complex(const SimplicialMap& tau) {
  if (!tau.is_involution()) throw InputError("map is not a simplicial involution");
  ChainComplexData c = from_complex(tau.source());
  for (int d = 0; d <= tau.source().dimension(); ++d) c.involution.push_back(tau.chain_map(d));
  return c;
}

BitVector HomologyBasis::restrict(const BitVector& chain) const {
  if (chain.size() != chain_size_)
    throw InputError("chain of length " + std::to_string(chain.size()) + " given, expected " +
                     std::to_string(chain_size_));
  if (!relative_) return chain;
  BitVector r(cells_.size());
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (chain.get(cells_[i])) r.set(i);
  return r;
}

BitVector HomologyBasis::coordinates(const BitVector& chain) const {
  const BitVector r = restrict(chain);
  if (cycle_test_.apply(r).any()) throw InputError("chain is not a cycle");
  auto red = reducer_.reduce(r);
  if (red.residual.any()) throw ModelIntegrityError("cycle escaped the homology basis");
  return red.tag;
}

BitVector HomologyBasis::representative(const BitVector& coords) const {
  if (coords.size() != betti()) throw InputError("coordinate vector has the wrong length");
  BitVector out(chain_size_);
  for (auto i : coords.indices()) out ^= cycles[i];
  return out;
}

HomologyBasis compute_homology(const ChainComplexData& c,
                               int k, const std::vector<std::vector<std::size_t>>* excluded) {
  auto excluded_in = [&](int d) -> const std::vector<std::size_t>* {
    if (!excluded || d < 0 || static_cast<std::size_t>(d) >= excluded->size()) return nullptr;
    return &(*excluded)[static_cast<std::size_t>(d)];
  };
  HomologyBasis h;
  h.degree = k;
  h.chain_size_ = c.dim(k);
  h.relative_ = excluded != nullptr;
  const auto here = kept_cells(c.dim(k), excluded_in(k));
  const auto below = kept_cells(c.dim(k - 1), excluded_in(k - 1));
  const auto above = kept_cells(c.dim(k + 1), excluded_in(k + 1));
  if (h.relative_) h.cells_ = here;

  const Gf2Matrix dk = k >= 1 && k <= c.top() ? c.boundary[static_cast<std::size_t>(k)]
                                              : Gf2Matrix(c.dim(k - 1), c.dim(k));
  h.cycle_test_ = submatrix(dk, below, here);
  const Gf2Matrix up = submatrix(c.boundary_into(k), here, above);

  SubspaceReducer probe(here.size());
  for (std::size_t j = 0; j < up.cols(); ++j) probe.insert(up.column(j));
  std::vector<BitVector> local;
  for (const auto& z : gf2_kernel(h.cycle_test_))
    if (probe.insert(z)) local.push_back(z);

  h.reducer_ = SubspaceReducer(here.size(), local.size());
  for (std::size_t j = 0; j < up.cols(); ++j) h.reducer_.insert(up.column(j), BitVector(local.size()));
  for (std::size_t i = 0; i < local.size(); ++i) {
    h.reducer_.insert(local[i], BitVector::unit(local.size(), i));
    BitVector full(h.chain_size_);
    for (auto j : local[i].indices()) full.set(h.relative_ ? here[j] : j);
    h.cycles.push_back(std::move(full));
  }
  return h;
}

HomologyBasis homology(const ChainComplexData& c, int k) { return compute_homology(c, k); }

HomologyBasis homology(const SimplicialComplex& k, int degree, const SimplicialComplex* rel) {
  const ChainComplexData c = ChainComplexData::from_complex(k);
  if (!rel) return compute_homology(c, degree);
  if (!rel->is_subcomplex_of(k)) throw InputError("relative homology: not a subcomplex");
  std::vector<std::vector<std::size_t>> excluded(static_cast<std::size_t>(std::max(k.dimension(), 0)) + 1);
  for (int d = 0; d <= rel->dimension(); ++d) {
    for (const auto& s : rel->simplices(d)) excluded[static_cast<std::size_t>(d)].push_back(*k.index_of(s));
    std::sort(excluded[static_cast<std::size_t>(d)].begin(), excluded[static_cast<std::size_t>(d)].end());
  }
  return compute_homology(c, degree, &excluded);
}

std::vector<std::size_t> betti_numbers(const ChainComplexData& c) {
  // Rank bookkeeping avoids building bases.
  std::vector<std::size_t> ranks(c.dims.size() + 1, 0);
  for (int k = 1; k <= c.top(); ++k) ranks[static_cast<std::size_t>(k)] = gf2_rank(c.boundary[static_cast<std::size_t>(k)]);
  std::vector<std::size_t> b;
  for (int k = 0; k <= c.top(); ++k)
    b.push_back(c.dim(k) - ranks[static_cast<std::size_t>(k)] - ranks[static_cast<std::size_t>(k) + 1]);
  return b;
}

std::vector<std::size_t> betti_numbers(const SimplicialComplex& k) {
  return betti_numbers(ChainComplexData::from_complex(k));
}

std::size_t total_betti(const SimplicialComplex& k) {
  const auto b = betti_numbers(k);
  return std::accumulate(b.begin(), b.end(), std::size_t{0});
}

Gf2Matrix induced_map(const HomologyBasis& source, const HomologyBasis& target,
                      const Gf2Matrix& chain_map) {
  std::vector<BitVector> cols;
  for (const auto& z : source.cycles) cols.push_back(target.coordinates(chain_map.apply(z)));
  return Gf2Matrix::from_columns(cols, target.betti());
}

Gf2Matrix induced_map(const SimplicialMap& f, int k) {
  return induced_map(homology(f.source(), k), homology(f.target(), k), f.chain_map(k));
}

std::vector<BitVector> dual_cocycles(const ChainComplexData& c, const HomologyBasis& h) {
  const int k = h.degree;
  // Cocycles: kernel of the transposed boundary out of degree k.
  const Gf2Matrix delta = c.boundary_into(k).transpose();
  const Gf2Matrix cobound =
      k >= 1 && k <= c.top() ? c.boundary[static_cast<std::size_t>(k)].transpose() : Gf2Matrix(c.dim(k), 0);
  SubspaceReducer probe(c.dim(k));
  for (std::size_t j = 0; j < cobound.cols(); ++j) probe.insert(cobound.column(j));
  std::vector<BitVector> coclasses;
  for (const auto& z : gf2_kernel(delta))
    if (probe.insert(z)) coclasses.push_back(z);
  if (coclasses.size() != h.betti())
    throw ModelIntegrityError("cohomology and homology dimensions differ in degree " + std::to_string(k));
  const std::size_t b = h.betti();
  Gf2Matrix p(b, b);
  for (std::size_t l = 0; l < b; ++l)
    for (std::size_t j = 0; j < b; ++j)
      if (coclasses[l].dot(h.cycles[j])) p.set(l, j);
  const auto inv = gf2_inverse(p);
  if (!inv) throw ModelIntegrityError("Kronecker pairing is degenerate in degree " + std::to_string(k));
  std::vector<BitVector> dual;
  for (std::size_t i = 0; i < b; ++i) {
    BitVector phi(c.dim(k));
    for (std::size_t l = 0; l < b; ++l)
      if (inv->get(i, l)) phi ^= coclasses[l];
    dual.push_back(std::move(phi));
  }
  return dual;
}

BitVector fundamental_class(const SimplicialComplex& k) {
  const int n = k.dimension();
  if (n < 1) throw InputError("fundamental class needs a complex of dimension at least 1");
  if (!k.is_pure()) throw InputError("not a pseudomanifold: complex is not pure");
  const auto inc = k.top_face_incidences();
  std::vector<std::size_t> parent(k.count(n));
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& f : inc) {
    if (f.cofaces.size() != 2)
      throw InputError("not a closed pseudomanifold: face " + to_string(f.face) + " has " +
                       std::to_string(f.cofaces.size()) + " cofaces");
    parent[find(f.cofaces[0])] = find(f.cofaces[1]);
  }
  for (std::size_t j = 1; j < parent.size(); ++j)
    if (find(j) != find(0))
      throw InputError("not a closed pseudomanifold: top simplex " + to_string(k.simplices(n)[j]) +
                       " is not strongly connected to " + to_string(k.simplices(n)[0]));
  BitVector all(k.count(n));
  for (std::size_t j = 0; j < all.size(); ++j) all.set(j);
  if (k.boundary(n).apply(all).any()) throw ModelIntegrityError("sum of top simplices is not a cycle");
  return all;
}

bool cup_evaluate(const SimplicialComplex& k, int p, const BitVector& a, const BitVector& b,
                  const BitVector& top_chain) {
  const int n = k.dimension();
  if (p < 0 || p > n) throw InputError("cup product degree out of range");
  if (a.size() != k.count(p) || b.size() != k.count(n - p))
    throw InputError("cup product: cochain degrees do not add up to the dimension");
  bool total = false;
  for (auto j : top_chain.indices()) {
    const Simplex& s = k.simplices(n)[j];
    const Simplex front(s.begin(), s.begin() + p + 1);
    const Simplex back(s.begin() + p, s.end());
    if (a.get(*k.index_of(front)) && b.get(*k.index_of(back))) total = !total;
  }
  return total;
}

bool cup_pairing(const SimplicialComplex& k, int p, const BitVector& a, const BitVector& b) {
  const int n = k.dimension();
  if (p < 0 || p > n) throw InputError("cup product degree out of range");
  if (a.size() != k.count(p) || b.size() != k.count(n - p))
    throw InputError("cup product: cochain degrees do not add up to the dimension");
  if (p < n && k.boundary(p + 1).transpose().apply(a).any()) throw InputError("first argument is not a cocycle");
  if (n - p < n && k.boundary(n - p + 1).transpose().apply(b).any())
    throw InputError("second argument is not a cocycle");
  return cup_evaluate(k, p, a, b, fundamental_class(k));
}

Gf2Matrix cup_form(const SimplicialComplex& k, int p) {
  const int n = k.dimension();
  const ChainComplexData c = ChainComplexData::from_complex(k);
  const BitVector top = fundamental_class(k);
  const auto left = dual_cocycles(c, compute_homology(c, p));
  const auto right = p == n - p ? left : dual_cocycles(c, compute_homology(c, n - p));
  Gf2Matrix q(left.size(), right.size());
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = 0; j < right.size(); ++j)
      if (cup_evaluate(k, p, left[i], right[j], top)) q.set(i, j);
  return q;
}

Gf2Matrix intersection_form(const SimplicialComplex& k, const HomologyBasis& mid) {
  const int n = k.dimension();
  if (n % 2 != 0) throw InputError("intersection form needs an even-dimensional complex");
  if (mid.degree != n / 2) throw InputError("intersection form expects the middle-dimensional basis");
  const ChainComplexData c = ChainComplexData::from_complex(k);
  const BitVector top = fundamental_class(k);
  const auto dual = dual_cocycles(c, mid);
  Gf2Matrix q(dual.size(), dual.size());
  for (std::size_t i = 0; i < dual.size(); ++i)
    for (std::size_t j = 0; j < dual.size(); ++j)
      if (cup_evaluate(k, n / 2, dual[i], dual[j], top)) q.set(i, j);
  const auto inv = gf2_inverse(q);
  if (!inv) throw InputError("Poincare duality audit failed: cup-product form is degenerate");
  return *inv;
}

Gf2Matrix intersection_form(const ChainComplexData& c, const HomologyBasis& mid) {
  if (!c.pairing) throw InputError("chain data has no pairing");
  if (mid.degree * 2 != c.top()) throw InputError("intersection form expects the middle-dimensional basis");
  const std::size_t b = mid.betti();
  const Gf2Matrix up = c.boundary_into(mid.degree);
  for (const auto& z : mid.cycles) {
    const BitVector pz = c.pairing->apply(z);
    for (std::size_t j = 0; j < up.cols(); ++j)
      if (pz.dot(up.column(j))) throw InputError("pairing does not vanish on boundaries");
  }
  Gf2Matrix form(b, b);
  for (std::size_t i = 0; i < b; ++i) {
    const BitVector pz = c.pairing->apply(mid.cycles[i]);
    for (std::size_t j = 0; j < b; ++j)
      if (pz.dot(mid.cycles[j])) form.set(i, j);
  }
  if (!gf2_inverse(form)) throw InputError("Poincare duality audit failed: pairing is degenerate");
  return form;
}

ChainComplexData orbit_chain_complex(const SimplicialMap& tau, bool relative_to_fixed) {
  check_pointwise_regular(tau);
  const auto& k = tau.source();
  const int n = k.dimension();
  // cell_of[d][j]: orbit cell of the j-th d-simplex, or npos.
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::vector<std::size_t>> cell_of(static_cast<std::size_t>(std::max(n, 0)) + 1);
  std::vector<std::vector<std::size_t>> rep(cell_of.size());
  for (int d = 0; d <= n; ++d) {
    auto& cells = cell_of[static_cast<std::size_t>(d)];
    cells.assign(k.count(d), none);
    for (std::size_t j = 0; j < k.count(d); ++j) {
      const Simplex& s = k.simplices(d)[j];
      const Simplex t = tau.image(s);
      if (t == s && relative_to_fixed) continue;
      if (t < s) continue;
      cells[j] = rep[static_cast<std::size_t>(d)].size();
      rep[static_cast<std::size_t>(d)].push_back(j);
      if (t != s) cells[*k.index_of(t)] = cells[j];
    }
  }
  ChainComplexData c;
  for (int d = 0; d <= n; ++d) {
    const auto& reps = rep[static_cast<std::size_t>(d)];
    c.dims.push_back(reps.size());
    Gf2Matrix bd(d ? rep[static_cast<std::size_t>(d) - 1].size() : 0, reps.size());
    if (d >= 1)
      for (std::size_t col = 0; col < reps.size(); ++col) {
        const Simplex& s = k.simplices(d)[reps[col]];
        for (std::size_t i = 0; i < s.size(); ++i) {
          Simplex f = s;
          f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
          const std::size_t cell = cell_of[static_cast<std::size_t>(d) - 1][*k.index_of(f)];
          if (cell != none) bd.flip(cell, col);
        }
      }
    c.boundary.push_back(std::move(bd));
  }
  return c;
}

std::vector<IntMatrix> oriented_boundaries(const SimplicialComplex& k) {
  std::vector<IntMatrix> out;
  for (int d = 0; d <= k.dimension(); ++d) {
    if (d == 0) {
      out.emplace_back(0, k.count(0));
      continue;
    }
    IntMatrix m(k.count(d - 1), k.count(d));
    const auto& layer = k.simplices(d);
    for (std::size_t j = 0; j < layer.size(); ++j)
      for (std::size_t i = 0; i < layer[j].size(); ++i) {
        Simplex f = layer[j];
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
        m(*k.index_of(f), j) = i % 2 ? -1 : 1;
      }
    out.push_back(std::move(m));
  }
  return out;
}

IntegerHomology integer_homology(const ChainComplexData& c) {
  if (c.int_boundary.size() != c.dims.size()) throw InputError("chain data has no integer boundaries");
  std::vector<std::size_t> rank(c.dims.size() + 1, 0);
  std::vector<IntVector> factors(c.dims.size() + 1);
  for (int k = 1; k <= c.top(); ++k) {
    const auto& d = c.int_boundary[static_cast<std::size_t>(k)];
    if (!d) throw InputError("integer boundary missing in degree " + std::to_string(k));
    const SmithForm f = smith_normal_form(*d);
    rank[static_cast<std::size_t>(k)] = f.rank;
    factors[static_cast<std::size_t>(k)] = f.invariant_factors();
  }
  IntegerHomology h;
  for (int k = 0; k <= c.top(); ++k) {
    h.ranks.push_back(c.dim(k) - rank[static_cast<std::size_t>(k)] - rank[static_cast<std::size_t>(k) + 1]);
    IntVector t;
    for (const auto& x : factors[static_cast<std::size_t>(k) + 1])
      if (x > 1) t.push_back(x);
    h.torsion.push_back(std::move(t));
  }
  return h;
}

}  // namespace conjtop
