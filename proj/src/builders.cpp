#include "conjtop/builders.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "conjtop/errors.hpp"
#include "conjtop/homology.hpp"

namespace conjtop::build {

SimplicialComplex boundary_of_simplex(int n) {
  std::vector<Simplex> faces;
  for (int skip = 0; skip <= n; ++skip) {
    Simplex f;
    for (int v = 0; v <= n; ++v)
      if (v != skip) f.push_back(v);
    faces.push_back(f);
  }
  return SimplicialComplex::from_simplices(n + 1, faces);
}

SimplicialComplex cycle(int n) {
  std::vector<Simplex> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return SimplicialComplex::from_simplices(n, edges);
}

SimplicialComplex grid_torus(int m, int n, bool alternate_by_column) {
  auto v = [&](int i, int j) { return ((i % m + m) % m) * n + (j % n + n) % n; };
  std::vector<Simplex> tris;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      if (alternate_by_column && j % 2 == 1) {
        tris.push_back({v(i, j), v(i + 1, j), v(i, j + 1)});
        tris.push_back({v(i + 1, j), v(i, j + 1), v(i + 1, j + 1)});
      } else {
        tris.push_back({v(i, j), v(i + 1, j), v(i + 1, j + 1)});
        tris.push_back({v(i, j), v(i, j + 1), v(i + 1, j + 1)});
      }
    }
  return SimplicialComplex::from_simplices(m * n, tris);
}

SimplicialComplex grid_klein_bottle(int m, int n) {
  auto v = [&](int i, int j) {
    if (j == n) {
      i = -i;
      j = 0;
    }
    return ((i % m + m) % m) * n + j;
  };
  std::vector<Simplex> tris;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      tris.push_back({v(i, j), v(i + 1, j), v(i + 1, j + 1)});
      tris.push_back({v(i, j), v(i, j + 1), v(i + 1, j + 1)});
    }
  return SimplicialComplex::from_simplices(m * n, tris);
}

SimplicialComplex seven_vertex_torus() {
  std::vector<Simplex> tris;
  for (int i = 0; i < 7; ++i) {
    tris.push_back({i, (i + 1) % 7, (i + 3) % 7});
    tris.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return SimplicialComplex::from_simplices(7, tris);
}

SimplicialComplex six_vertex_rp2() {
  return SimplicialComplex::from_simplices(
      6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
          {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
}

SimplicialComplex octahedron() {
  std::vector<Simplex> tris;
  for (int i = 0; i < 4; ++i) {
    const int a = 1 + i, b = 1 + (i + 1) % 4;
    tris.push_back({0, a, b});
    tris.push_back({5, a, b});
  }
  return SimplicialComplex::from_simplices(6, tris);
}

SimplicialComplex ordered_product(const SimplicialComplex& a, const SimplicialComplex& b) {
  const int nb = b.vertex_count();
  std::vector<Simplex> cells;
  for (const auto& s : a.maximal_simplices())
    for (const auto& t : b.maximal_simplices()) {
      Simplex path;
      std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t i, std::size_t j) {
        path.push_back(s[i] * nb + t[j]);
        if (i + 1 == s.size() && j + 1 == t.size()) cells.push_back(path);
        if (i + 1 < s.size()) walk(i + 1, j);
        if (j + 1 < t.size()) walk(i, j + 1);
        path.pop_back();
      };
      walk(0, 0);
    }
  return SimplicialComplex::from_simplices(a.vertex_count() * nb, cells);
}

std::vector<Vertex> link_cycle(const SimplicialComplex& k, Vertex v) {
  std::map<Vertex, std::vector<Vertex>> adj;
  for (const auto& t : k.simplices(2)) {
    if (!std::binary_search(t.begin(), t.end(), v)) continue;
    Simplex e;
    for (Vertex w : t)
      if (w != v) e.push_back(w);
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  if (adj.empty()) throw InputError("vertex " + std::to_string(v) + " has an empty link");
  for (auto& [w, nbrs] : adj) {
    if (nbrs.size() != 2) throw InputError("link of vertex " + std::to_string(v) + " is not a cycle");
    std::sort(nbrs.begin(), nbrs.end());
  }
  std::vector<Vertex> cyc{adj.begin()->first};
  Vertex prev = -1, cur = cyc.front();
  while (true) {
    const auto& nbrs = adj[cur];
    const Vertex next = nbrs[0] != prev ? nbrs[0] : nbrs[1];
    if (next == cyc.front()) break;
    cyc.push_back(next);
    prev = cur;
    cur = next;
  }
  if (cyc.size() != adj.size()) throw InputError("link of vertex " + std::to_string(v) + " is disconnected");
  return cyc;
}

Equivariant connected_sum(const Equivariant& a, Vertex va, const Equivariant& b, Vertex vb) {
  if (a.tau[static_cast<std::size_t>(va)] != va || b.tau[static_cast<std::size_t>(vb)] != vb)
    throw InputError("connected sum must be taken at fixed vertices");
  const auto la = link_cycle(a.complex, va);
  const auto lb = link_cycle(b.complex, vb);
  if (la.size() != lb.size()) throw InputError("connected sum: links have different lengths");
  const int len = static_cast<int>(la.size());

  // Renumbering of the first surface: drop va, keep order.
  std::vector<Vertex> new_a(static_cast<std::size_t>(a.complex.vertex_count()), -1);
  int next = 0;
  for (Vertex v : a.complex.vertices())
    if (v != va) new_a[static_cast<std::size_t>(v)] = next++;
  const int base_b = next;

  const long long chi_expected = a.complex.euler_characteristic() + b.complex.euler_characteristic() - 2;
  for (int dir : {1, -1})
    for (int shift = 0; shift < len; ++shift) {
      std::map<Vertex, Vertex> glue;  // link vertex of b -> link vertex of a
      for (int i = 0; i < len; ++i)
        glue[lb[static_cast<std::size_t>(i)]] = la[static_cast<std::size_t>(((shift + dir * i) % len + len) % len)];
      bool equivariant = true;
      for (auto [x, y] : glue)
        if (glue.at(b.tau[static_cast<std::size_t>(x)]) != a.tau[static_cast<std::size_t>(y)]) equivariant = false;
      if (!equivariant) continue;

      std::vector<Vertex> new_b(static_cast<std::size_t>(b.complex.vertex_count()), -1);
      int nb = base_b;
      for (Vertex v : b.complex.vertices()) {
        if (v == vb) continue;
        auto it = glue.find(v);
        new_b[static_cast<std::size_t>(v)] = it != glue.end() ? new_a[static_cast<std::size_t>(it->second)] : nb++;
      }
      std::vector<Simplex> tris;
      for (const auto& t : a.complex.simplices(2))
        if (!std::binary_search(t.begin(), t.end(), va))
          tris.push_back({new_a[static_cast<std::size_t>(t[0])], new_a[static_cast<std::size_t>(t[1])],
                          new_a[static_cast<std::size_t>(t[2])]});
      for (const auto& t : b.complex.simplices(2))
        if (!std::binary_search(t.begin(), t.end(), vb))
          tris.push_back({new_b[static_cast<std::size_t>(t[0])], new_b[static_cast<std::size_t>(t[1])],
                          new_b[static_cast<std::size_t>(t[2])]});
      SimplicialComplex sum = SimplicialComplex::from_simplices(nb, tris);
      if (sum.count(2) != tris.size() || sum.euler_characteristic() != chi_expected) continue;
      try {
        fundamental_class(sum);
      } catch (const InputError&) {
        continue;
      }
      std::vector<Vertex> tau(static_cast<std::size_t>(nb), -1);
      for (Vertex v : a.complex.vertices())
        if (v != va) tau[static_cast<std::size_t>(new_a[static_cast<std::size_t>(v)])] = new_a[static_cast<std::size_t>(a.tau[static_cast<std::size_t>(v)])];
      for (Vertex v : b.complex.vertices())
        if (v != vb) tau[static_cast<std::size_t>(new_b[static_cast<std::size_t>(v)])] = new_b[static_cast<std::size_t>(b.tau[static_cast<std::size_t>(v)])];
      return {std::move(sum), std::move(tau)};
    }
  throw InputError("connected sum: no equivariant identification of the links gives a surface");
}

}  // namespace conjtop::build
