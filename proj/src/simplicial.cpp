#include "conjtop/simplicial.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "conjtop/errors.hpp"

namespace conjtop {

std::string to_string(const Simplex& s) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? " " : "") << s[i];
  os << ']';
  return os.str();
}

SimplicialComplex SimplicialComplex::from_simplices(int vertex_count,
                                                    const std::vector<Simplex>& simplices) {
  std::vector<std::set<Simplex>> by_dim;
  for (Simplex s : simplices) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) continue;
    if (s.front() < 0 || s.back() >= vertex_count)
      throw InputError("simplex " + to_string(s) + " has a vertex outside [0, " +
                       std::to_string(vertex_count) + ")");
    if (s.size() > 20) throw InputError("simplex dimension too large: " + to_string(s));
    const std::size_t n = s.size();
    if (by_dim.size() < n) by_dim.resize(n);
    if (by_dim[n - 1].count(s)) continue;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) face.push_back(s[i]);
      by_dim[face.size() - 1].insert(std::move(face));
    }
  }
  SimplicialComplex k;
  k.vertex_count_ = vertex_count;
  for (auto& layer : by_dim) k.simplices_.emplace_back(layer.begin(), layer.end());
  return k;
}

std::size_t SimplicialComplex::total_count() const noexcept {
  std::size_t n = 0;
  for (const auto& layer : simplices_) n += layer.size();
  return n;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int k) const {
  static const std::vector<Simplex> empty;
  if (k < 0 || k > dimension()) return empty;
  return simplices_[static_cast<std::size_t>(k)];
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  const int k = static_cast<int>(s.size()) - 1;
  if (k < 0 || k > dimension()) return std::nullopt;
  const auto& layer = simplices_[static_cast<std::size_t>(k)];
  auto it = std::lower_bound(layer.begin(), layer.end(), s);
  if (it == layer.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - layer.begin());
}

std::vector<Vertex> SimplicialComplex::vertices() const {
  std::vector<Vertex> out;
  for (const auto& s : simplices(0)) out.push_back(s.front());
  return out;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  std::vector<Simplex> out;
  for (int k = 0; k <= dimension(); ++k) {
    std::vector<char> covered(count(k), 0);
    if (k < dimension())
      for (const auto& s : simplices(k + 1))
        for (std::size_t i = 0; i < s.size(); ++i) {
          Simplex f = s;
          f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
          covered[*index_of(f)] = 1;
        }
    for (std::size_t j = 0; j < count(k); ++j)
      if (!covered[j]) out.push_back(simplices(k)[j]);
  }
  return out;
}

Gf2Matrix SimplicialComplex::boundary(int k) const {
  if (k <= 0) return Gf2Matrix(0, count(0));
  Gf2Matrix d(count(k - 1), count(k));
  const auto& layer = simplices(k);
  for (std::size_t j = 0; j < layer.size(); ++j)
    for (std::size_t i = 0; i < layer[j].size(); ++i) {
      Simplex f = layer[j];
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
      d.set(*index_of(f), j);
    }
  return d;
}

long long SimplicialComplex::euler_characteristic() const {
  long long chi = 0;
  for (int k = 0; k <= dimension(); ++k) chi += (k % 2 ? -1 : 1) * static_cast<long long>(count(k));
  return chi;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  for (int k = 0; k <= dimension(); ++k)
    for (const auto& s : simplices(k))
      if (!other.contains(s)) return false;
  return true;
}

bool SimplicialComplex::is_pure() const {
  for (const auto& s : maximal_simplices())
    if (static_cast<int>(s.size()) - 1 != dimension()) return false;
  return true;
}

BitVector SimplicialComplex::chain(int k, const std::vector<Simplex>& list) const {
  BitVector c(count(k));
  for (Simplex s : list) {
    std::sort(s.begin(), s.end());
    if (static_cast<int>(s.size()) - 1 != k) throw InputError("chain simplex " + to_string(s) +
                                                              " has wrong dimension");
    auto idx = index_of(s);
    if (!idx) throw InputError("chain simplex " + to_string(s) + " is not in the complex");
    c.flip(*idx);
  }
  return c;
}

std::vector<Simplex> SimplicialComplex::support(int k, const BitVector& c) const {
  std::vector<Simplex> out;
  for (auto i : c.indices()) out.push_back(simplices(k)[i]);
  return out;
}

std::vector<SimplicialComplex::FaceIncidence> SimplicialComplex::top_face_incidences() const {
  const int n = dimension();
  std::vector<FaceIncidence> inc;
  if (n <= 0) return inc;
  for (const auto& f : simplices(n - 1)) inc.push_back({f, {}});
  const auto& top = simplices(n);
  for (std::size_t j = 0; j < top.size(); ++j)
    for (std::size_t i = 0; i < top[j].size(); ++i) {
      Simplex f = top[j];
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
      inc[*index_of(f)].cofaces.push_back(j);
    }
  return inc;
}

SimplicialMap::SimplicialMap(ComplexPtr source, ComplexPtr target, std::vector<Vertex> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (!source_ || !target_) throw InputError("simplicial map needs a source and a target");
  if (images_.size() != static_cast<std::size_t>(source_->vertex_count()))
    throw InputError("simplicial map lists " + std::to_string(images_.size()) +
                     " vertex images, source has " + std::to_string(source_->vertex_count()));
  for (Vertex v : source_->vertices()) {
    const Vertex w = images_[static_cast<std::size_t>(v)];
    if (w < 0 || w >= target_->vertex_count() || !target_->contains({w}))
      throw InputError("vertex " + std::to_string(v) + " maps to " + std::to_string(w) +
                       ", which is not a vertex of the target");
  }
  for (const auto& s : source_->maximal_simplices()) {
    const Simplex img = image(s);
    if (!target_->contains(img))
      throw InputError("map is not simplicial: image of " + to_string(s) + " is " +
                       to_string(img) + ", not a simplex of the target");
  }
}

SimplicialMap SimplicialMap::identity(ComplexPtr k) {
  std::vector<Vertex> img(static_cast<std::size_t>(k->vertex_count()));
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = static_cast<Vertex>(i);
  return SimplicialMap(k, k, std::move(img));
}

Simplex SimplicialMap::image(const Simplex& s) const {
  Simplex out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(images_[static_cast<std::size_t>(v)]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool SimplicialMap::is_automorphism() const {
  if (!(*source_ == *target_)) return false;
  const auto verts = source_->vertices();
  std::set<Vertex> seen;
  for (Vertex v : verts) seen.insert((*this)(v));
  if (seen.size() != verts.size()) return false;
  for (int k = 0; k <= source_->dimension(); ++k)
    for (const auto& s : source_->simplices(k))
      if (image(s).size() != s.size()) return false;
  return true;
}

bool SimplicialMap::is_involution() const {
  if (!is_automorphism()) return false;
  for (Vertex v : source_->vertices())
    if ((*this)((*this)(v)) != v) return false;
  return true;
}

int SimplicialMap::orientation_sign(const Simplex& s) const {
  std::vector<Vertex> img;
  for (Vertex v : s) img.push_back((*this)(v));
  int sign = 1;
  for (std::size_t i = 0; i < img.size(); ++i)
    for (std::size_t j = i + 1; j < img.size(); ++j) {
      if (img[i] == img[j]) throw InputError("orientation sign of a degenerate image");
      if (img[i] > img[j]) sign = -sign;
    }
  return sign;
}

Gf2Matrix SimplicialMap::chain_map(int k) const {
  Gf2Matrix m(target_->count(k), source_->count(k));
  const auto& layer = source_->simplices(k);
  for (std::size_t j = 0; j < layer.size(); ++j) {
    const Simplex img = image(layer[j]);
    if (img.size() != layer[j].size()) continue;
    m.set(*target_->index_of(img), j);
  }
  return m;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (!(f.target() == g.source())) throw InputError("compose: target/source mismatch");
  std::vector<Vertex> img(f.images_.size(), -1);
  for (Vertex v : f.source().vertices()) img[static_cast<std::size_t>(v)] = g(f(v));
  return SimplicialMap(f.source_, g.target_, std::move(img));
}

bool operator==(const SimplicialMap& a, const SimplicialMap& b) {
  if (!(a.source() == b.source()) || !(a.target() == b.target())) return false;
  for (Vertex v : a.source().vertices())
    if (a(v) != b(v)) return false;
  return true;
}

Subdivision barycentric_subdivide(const SimplicialComplex& k, const SimplicialMap* f) {
  if (f && !f->is_automorphism())
    throw InputError("barycentric_subdivide: the map must be an automorphism");
  // Vertex index of each simplex of K.
  std::vector<std::size_t> offset(static_cast<std::size_t>(k.dimension()) + 2, 0);
  for (int d = 0; d <= k.dimension(); ++d)
    offset[static_cast<std::size_t>(d) + 1] = offset[static_cast<std::size_t>(d)] + k.count(d);
  auto vertex_of = [&](const Simplex& s) {
    return static_cast<Vertex>(offset[s.size() - 1] + *k.index_of(s));
  };

  std::vector<Simplex> flags;
  for (const auto& top : k.maximal_simplices()) {
    std::vector<std::size_t> perm(top.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    do {
      Simplex flag;
      Simplex partial;
      for (auto p : perm) {
        partial.insert(std::upper_bound(partial.begin(), partial.end(), top[p]), top[p]);
        flag.push_back(vertex_of(partial));
      }
      flags.push_back(std::move(flag));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  const int new_count = static_cast<int>(offset.back());
  Subdivision out{SimplicialComplex::from_simplices(new_count, flags), std::nullopt};
  if (f) {
    auto sub = make_complex(out.complex);
    std::vector<Vertex> img(static_cast<std::size_t>(new_count));
    for (int d = 0; d <= k.dimension(); ++d)
      for (const auto& s : k.simplices(d))
        img[static_cast<std::size_t>(vertex_of(s))] = vertex_of(f->image(s));
    out.map = SimplicialMap(sub, sub, std::move(img));
  }
  return out;
}

void check_pointwise_regular(const SimplicialMap& tau) {
  if (!tau.is_involution()) throw InputError("map is not a simplicial involution");
  const auto& k = tau.source();
  for (int d = 1; d <= k.dimension(); ++d)
    for (const auto& s : k.simplices(d)) {
      if (tau.image(s) != s) continue;
      for (Vertex v : s)
        if (tau(v) != v)
          throw NonRegularInvolution("simplex mapped onto itself without being fixed pointwise",
                                     to_string(s));
    }
}

namespace {

Simplex orbit_set(const SimplicialMap& tau, const Simplex& s) {
  Simplex out;
  for (Vertex v : s) out.push_back(std::min(v, tau(v)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

void check_quotient_regular(const SimplicialMap& tau) {
  check_pointwise_regular(tau);
  const auto& k = tau.source();
  for (int d = 0; d <= k.dimension(); ++d) {
    std::map<Simplex, Simplex> seen;  // projected set -> orbit representative
    for (const auto& s : k.simplices(d)) {
      const Simplex rep = std::min(s, tau.image(s));
      auto [it, inserted] = seen.emplace(orbit_set(tau, s), rep);
      if (!inserted && it->second != rep)
        throw NonRegularInvolution("two orbits of simplices project onto the same vertex set",
                                   to_string(it->second) + " and " + to_string(rep));
    }
  }
}

Quotient quotient_by_involution(const SimplicialMap& tau) {
  check_quotient_regular(tau);
  const auto& k = tau.source();
  std::vector<Vertex> orbit_index(static_cast<std::size_t>(k.vertex_count()), -1);
  int next = 0;
  for (Vertex v : k.vertices())
    if (std::min(v, tau(v)) == v) orbit_index[static_cast<std::size_t>(v)] = next++;
  for (Vertex v : k.vertices())
    orbit_index[static_cast<std::size_t>(v)] = orbit_index[static_cast<std::size_t>(std::min(v, tau(v)))];

  std::vector<Simplex> cells;
  for (const auto& s : k.maximal_simplices()) {
    Simplex c;
    for (Vertex v : s) c.push_back(orbit_index[static_cast<std::size_t>(v)]);
    cells.push_back(std::move(c));
  }
  auto q = make_complex(SimplicialComplex::from_simplices(next, cells));
  return {*q, SimplicialMap(tau.source_ptr(), q, std::move(orbit_index))};
}

Regularized regularize(const SimplicialMap& tau) {
  Regularized r{tau.source_ptr(), tau, 0};
  while (true) {
    try {
      check_quotient_regular(r.tau);
      return r;
    } catch (const NonRegularInvolution&) {
      if (r.subdivisions == 2) throw;
    }
    Subdivision sd = barycentric_subdivide(*r.complex, &r.tau);
    r.complex = sd.map->source_ptr();
    r.tau = *sd.map;
    ++r.subdivisions;
  }
}

}  // namespace conjtop
