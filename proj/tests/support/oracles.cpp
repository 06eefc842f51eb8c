#include "oracles.hpp"

#include <algorithm>
#include <set>

#include "cartfact/traversal.hpp"

namespace cartfact::oracle {

namespace {

std::vector<char> matrix(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<char> a(n * n, 0);
  for (const Edge& e : g.edges()) a[e.u * n + e.v] = a[e.v * n + e.u] = 1;
  return a;
}

}  // namespace

std::vector<FourCycle> four_cycles(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const auto a = matrix(g);
  auto adj = [&](Vertex x, Vertex y) { return a[x * n + y] != 0; };
  std::vector<FourCycle> out;
  for (Vertex p = 0; p < n; ++p)
    for (Vertex q = p + 1; q < n; ++q)
      for (Vertex r = q + 1; r < n; ++r)
        for (Vertex s = r + 1; s < n; ++s) {
          // The three ways to arrange four vertices on a ring.
          const std::array<std::array<Vertex, 4>, 3> rings{{{p, q, r, s}, {p, q, s, r}, {p, r, q, s}}};
          for (const auto& c : rings) {
            if (!(adj(c[0], c[1]) && adj(c[1], c[2]) && adj(c[2], c[3]) && adj(c[3], c[0]))) continue;
            out.push_back({c, !adj(c[0], c[2]) && !adj(c[1], c[3])});
          }
        }
  return out;
}

std::vector<std::pair<EdgeId, EdgeId>> delta_pairs(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const auto a = matrix(g);
  auto adj = [&](Vertex x, Vertex y) { return a[x * n + y] != 0; };
  const auto cycles = four_cycles(g);
  auto id = [&](Vertex x, Vertex y) { return *g.edge_between(x, y); };

  std::set<std::pair<EdgeId, EdgeId>> related;
  auto add = [&](EdgeId e, EdgeId f) {
    if (e != f) related.insert({std::min(e, f), std::max(e, f)});
  };
  // Opposite edges of chordless 4-cycles.
  for (const auto& c : cycles) {
    if (!c.chordless) continue;
    const auto& r = c.ring;
    add(id(r[0], r[1]), id(r[2], r[3]));
    add(id(r[1], r[2]), id(r[3], r[0]));
  }
  // Incident pairs: related unless they span exactly one 4-cycle, which is
  // chordless and whose top x has |N[x] intersect N[v]| = 2.
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u = 0; u < n; ++u)
      for (Vertex w = u + 1; w < n; ++w) {
        if (u == v || w == v || !adj(v, u) || !adj(v, w)) continue;
        std::vector<const FourCycle*> spanned;
        for (const auto& c : cycles)
          for (int i = 0; i < 4; ++i) {
            const Vertex prev = c.ring[(i + 3) % 4], mid = c.ring[i], next = c.ring[(i + 1) % 4];
            if (mid == v && ((prev == u && next == w) || (prev == w && next == u))) spanned.push_back(&c);
          }
        bool exempt = false;
        if (spanned.size() == 1 && spanned[0]->chordless) {
          const auto& r = spanned[0]->ring;
          const Vertex x = *std::find_if(r.begin(), r.end(), [&](Vertex z) { return z != v && z != u && z != w; });
          std::size_t meet = 0;
          for (Vertex z = 0; z < n; ++z)
            if ((z == x || adj(z, x)) && (z == v || adj(z, v))) ++meet;
          exempt = meet == 2;
        }
        if (!exempt) add(id(v, u), id(v, w));
      }
  return {related.begin(), related.end()};
}

std::vector<std::uint32_t> closure_labels(std::size_t domain, const std::vector<std::pair<EdgeId, EdgeId>>& pairs) {
  std::vector<std::uint32_t> label(domain);
  for (std::size_t i = 0; i < domain; ++i) label[i] = static_cast<std::uint32_t>(i);
  for (bool changed = true; changed;) {
    changed = false;
    for (auto [e, f] : pairs) {
      const std::uint32_t m = std::min(label[e], label[f]);
      if (label[e] != m || label[f] != m) {
        label[e] = label[f] = m;
        changed = true;
      }
    }
  }
  return label;
}

bool same_partition(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if ((a[i] == a[j]) != (b[i] == b[j])) return false;
  return true;
}

std::size_t count_classes(std::span<const std::uint32_t> labels) {
  return std::set<std::uint32_t>(labels.begin(), labels.end()).size();
}

std::vector<std::uint32_t> floyd_warshall(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const std::uint64_t inf = kUnreachable;
  std::vector<std::uint64_t> d(n * n, inf);
  for (std::size_t i = 0; i < n; ++i) d[i * n + i] = 0;
  for (const Edge& e : g.edges()) d[e.u * n + e.v] = d[e.v * n + e.u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i * n + k] != inf && d[k * n + j] != inf) d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
  return {d.begin(), d.end()};
}

std::vector<Graph> random_corpus(std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  const double densities[] = {0.2, 0.4, 0.6};
  std::uniform_int_distribution<std::size_t> size(2, 12);
  std::vector<Graph> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_connected_gnp(size(rng), densities[i % 3], rng));
  return out;
}

std::vector<Graph> random_star_factors(Rng& rng, std::size_t max_vertices) {
  std::uniform_int_distribution<int> k_pick(2, 3);
  for (;;) {
    const int k = k_pick(rng);
    std::uniform_int_distribution<std::size_t> leaves(1, k == 2 ? 7 : 3);
    std::vector<Graph> f;
    std::size_t total = 1;
    for (int i = 0; i < k; ++i) {
      const std::size_t l = leaves(rng);
      total *= l + 1;
      f.push_back(make_star(l));
    }
    if (total <= max_vertices) return f;
  }
}

Graph random_small_factor(Rng& rng) {
  std::uniform_int_distribution<std::size_t> size(3, 8);
  std::bernoulli_distribution star(0.3);
  const std::size_t n = size(rng);
  return star(rng) ? make_star(n - 1) : random_tree(n, rng);
}

}  // namespace cartfact::oracle
