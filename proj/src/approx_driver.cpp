#include "cartfact/approx_driver.hpp"

#include <algorithm>
#include <deque>
#include <iomanip>
#include <ostream>
#include <set>
#include <tuple>

#include "cartfact/disjoint_sets.hpp"
#include "cartfact/errors.hpp"
#include "cartfact/factorizer.hpp"
#include "cartfact/generators.hpp"
#include "cartfact/isomorphism.hpp"
#include "cartfact/parallel.hpp"
#include "cartfact/product.hpp"
#include "cartfact/traversal.hpp"

namespace cartfact {

namespace {

Vertex pick_seed(const Graph& g, const std::vector<PartialStarProduct>& psps, const HeuristicConfig& cfg) {
  if (cfg.seed_strategy == SeedStrategy::Explicit) {
    if (!cfg.explicit_seed) throw Error(ErrorCode::InvalidArgument, "explicit seed strategy needs a seed vertex");
    const Vertex s = *cfg.explicit_seed;
    if (s >= g.vertex_count()) throw Error(ErrorCode::VertexOutOfRange, "seed vertex out of range");
    if (psps[s].class_count() < cfg.threshold) throw Error(ErrorCode::NoSeed, "seed vertex has too few classes");
    return s;
  }
  std::optional<Vertex> best;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (psps[v].class_count() < cfg.threshold) continue;
    if (!best) {
      best = v;
      continue;
    }
    const bool better = cfg.seed_strategy == SeedStrategy::MaxDegree
                            ? g.degree(v) > g.degree(*best)
                            : psps[v].class_count() > psps[*best].class_count();
    if (better) best = v;
  }
  if (!best) throw Error(ErrorCode::NoSeed, "no vertex has a partial star product with enough classes");
  return *best;
}

}  // namespace

RegionResult grow_region(const Graph& g, const HeuristicConfig& cfg) {
  if (cfg.threshold < 1) throw Error(ErrorCode::InvalidArgument, "threshold must be at least 1");
  if (g.vertex_count() == 0) throw Error(ErrorCode::EmptyGraph, "graph has no vertices");
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "graph is not connected");

  const SquareIndex index(g);
  std::vector<PartialStarProduct> psps(g.vertex_count());
  parallel_for(g.vertex_count(), configured_threads(), [&](std::size_t v) {
    psps[v] = build_psp(g, index, static_cast<Vertex>(v));
  });

  RegionResult result;
  result.seed = pick_seed(g, psps, cfg);

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  RollbackDisjointSets keys;
  std::vector<std::size_t> owner(g.edge_count(), kNone);
  std::vector<EdgeId> owned;  // edges in the order their owner was set

  auto admit = [&](Vertex v) {
    const PartialStarProduct& p = psps[v];
    const std::size_t base = keys.element_count();
    for (std::size_t c = 0; c < p.class_count(); ++c) keys.add();
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
      const std::size_t key = base + p.classes.class_of(i);
      const EdgeId e = p.edges[i];
      if (owner[e] == kNone) {
        owner[e] = key;
        owned.push_back(e);
      } else {
        keys.unite(owner[e], key);
      }
    }
  };

  std::vector<bool> queued(g.vertex_count(), false);
  std::vector<Vertex> region;
  std::deque<Vertex> queue{result.seed};
  queued[result.seed] = true;
  while (!queue.empty()) {
    if (cfg.max_region_size != 0 && region.size() >= cfg.max_region_size) break;
    const Vertex v = queue.front();
    queue.pop_front();
    const std::size_t mark = keys.checkpoint();
    const std::size_t owned_mark = owned.size();
    admit(v);
    if (keys.set_count() < cfg.threshold) {
      keys.rollback(mark);
      while (owned.size() > owned_mark) {
        owner[owned.back()] = kNone;
        owned.pop_back();
      }
      result.skipped.push_back(v);
      continue;
    }
    region.push_back(v);
    for (const Incidence& i : g.incidences(v))
      if (!queued[i.neighbor]) {
        queued[i.neighbor] = true;
        queue.push_back(i.neighbor);
      }
  }
  result.class_count = keys.set_count();
  result.region = VertexSubset(g.vertex_count(), std::move(region));
  return result;
}

namespace {

Graph graph_from_set(std::size_t n, const std::set<Edge>& edges) {
  std::vector<Edge> list(edges.begin(), edges.end());
  return Graph::from_edges(n, list);
}

Edge normalized(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

}  // namespace

Perturbation perturb(const Graph& g, const PerturbationSpec& spec) {
  const std::size_t n = g.vertex_count();
  if (spec.k_delete > 0 && spec.k_delete >= g.edge_count())
    throw Error(ErrorCode::InvalidArgument, "cannot delete that many edges");
  Rng rng(spec.seed);
  std::set<Edge> edges(g.edges().begin(), g.edges().end());
  std::set<Edge> deleted;
  Perturbation out;

  for (std::size_t d = 0; d < spec.k_delete; ++d) {
    bool done = false;
    for (std::size_t attempt = 0; attempt < spec.max_retries && !done; ++attempt) {
      std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
      auto it = std::next(edges.begin(), static_cast<std::ptrdiff_t>(pick(rng)));
      const Edge e = *it;
      edges.erase(it);
      if (is_connected(graph_from_set(n, edges))) {
        deleted.insert(e);
        out.log.push_back({EditEntry::Kind::Deleted, e});
        done = true;
      } else {
        edges.insert(e);
      }
    }
    if (!done) throw Error(ErrorCode::CannotPreserveConnectivity, "no deletable edge keeps the graph connected");
  }

  for (std::size_t a = 0; a < spec.k_add; ++a) {
    std::optional<Edge> chosen;
    if (n >= 2) {
      std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
      for (std::size_t attempt = 0; attempt < spec.max_retries && !chosen; ++attempt) {
        const Vertex x = pick(rng), y = pick(rng);
        if (x == y) continue;
        const Edge e = normalized(x, y);
        if (!edges.contains(e) && !deleted.contains(e)) chosen = e;
      }
    }
    if (!chosen) {
      // Dense graph: enumerate what is left.
      std::vector<Edge> free;
      for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y)
          if (!edges.contains({x, y}) && !deleted.contains({x, y})) free.push_back({x, y});
      if (free.empty()) throw Error(ErrorCode::InvalidArgument, "no non-edge left to insert");
      std::uniform_int_distribution<std::size_t> pick(0, free.size() - 1);
      chosen = free[pick(rng)];
    }
    edges.insert(*chosen);
    out.log.push_back({EditEntry::Kind::Added, *chosen});
  }
  out.graph = graph_from_set(n, edges);
  return out;
}

Graph replay_backwards(const Graph& perturbed, std::span<const EditEntry> log) {
  std::set<Edge> edges(perturbed.edges().begin(), perturbed.edges().end());
  for (auto it = log.rbegin(); it != log.rend(); ++it) {
    if (it->kind == EditEntry::Kind::Added) edges.erase(it->edge);
    else edges.insert(it->edge);
  }
  return graph_from_set(perturbed.vertex_count(), edges);
}

std::size_t best_bijection_matches(std::span<const std::uint32_t> truth, std::span<const std::uint32_t> predicted) {
  if (truth.size() != predicted.size()) throw Error(ErrorCode::InvalidArgument, "labelings differ in length");
  auto dense = [](std::span<const std::uint32_t> raw) {
    std::vector<std::uint32_t> values(raw.begin(), raw.end());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::vector<std::uint32_t> out;
    for (auto x : raw)
      out.push_back(static_cast<std::uint32_t>(std::lower_bound(values.begin(), values.end(), x) - values.begin()));
    return std::pair{out, values.size()};
  };
  const auto [t, nt] = dense(truth);
  const auto [p, np] = dense(predicted);
  std::vector<std::size_t> count(nt * np, 0);
  for (std::size_t i = 0; i < t.size(); ++i) ++count[t[i] * np + p[i]];

  if (nt <= 16) {
    // dp[mask]: best total with the truth classes in mask already used.
    std::vector<std::size_t> dp(std::size_t{1} << nt, 0);
    for (std::size_t q = 0; q < np; ++q) {
      std::vector<std::size_t> next = dp;
      for (std::size_t mask = 0; mask < dp.size(); ++mask)
        for (std::size_t c = 0; c < nt; ++c)
          if (!(mask & (std::size_t{1} << c))) {
            auto& slot = next[mask | (std::size_t{1} << c)];
            slot = std::max(slot, dp[mask] + count[c * np + q]);
          }
      dp = std::move(next);
    }
    return *std::max_element(dp.begin(), dp.end());
  }

  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> cells;
  for (std::size_t c = 0; c < nt; ++c)
    for (std::size_t q = 0; q < np; ++q)
      if (count[c * np + q] > 0) cells.emplace_back(count[c * np + q], c, q);
  std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) > std::get<0>(b);
    return std::pair{std::get<1>(a), std::get<2>(a)} < std::pair{std::get<1>(b), std::get<2>(b)};
  });
  std::vector<bool> used_t(nt, false), used_p(np, false);
  std::size_t total = 0;
  for (auto [w, c, q] : cells)
    if (!used_t[c] && !used_p[q]) {
      used_t[c] = used_p[q] = true;
      total += w;
    }
  return total;
}

RecoveryReport evaluate_recovery(const Graph& g, const GroundTruth& truth, const PipelineResult& result) {
  RecoveryReport r;
  r.region_size = result.covering.subset.size();
  r.class_count = result.assignment.class_count();
  r.vertices_total = g.vertex_count();
  r.vertices_retained = result.h.h.graph.vertex_count();
  r.factor_count = result.factors.factors.size();
  r.embedding_verified = verify_embedding(result.factors, result.h.h.graph);

  std::vector<std::uint32_t> expected, predicted;
  const Graph& hg = result.h.h.graph;
  for (EdgeId e = 0; e < hg.edge_count(); ++e) {
    const Vertex a = result.h.host_vertex[hg.edge(e).u];
    const Vertex b = result.h.host_vertex[hg.edge(e).v];
    const auto original = truth.original.edge_between(a, b);
    if (!original) continue;
    expected.push_back(truth.colors.class_of(*original));
    predicted.push_back(result.h.edge_class[e]);
  }
  r.edges_scored = expected.size();
  r.edges_correct = best_bijection_matches(expected, predicted);
  r.accuracy = r.edges_scored == 0 ? 0.0 : static_cast<double>(r.edges_correct) / static_cast<double>(r.edges_scored);

  std::vector<bool> taken(result.factors.factors.size(), false);
  for (const Graph& t : truth.factors) {
    if (t.vertex_count() > kSmallIsomorphismLimit) continue;
    ++r.factors_compared;
    for (std::size_t i = 0; i < taken.size(); ++i) {
      const Graph& f = result.factors.factors[i].graph;
      if (taken[i] || f.vertex_count() != t.vertex_count()) continue;
      if (isomorphism_check_small(f, t)) {
        taken[i] = true;
        ++r.factors_matched;
        break;
      }
    }
  }
  return r;
}

ExperimentRow run_experiment(const ExperimentSpec& spec) {
  ExperimentRow row;
  row.spec = spec;
  try {
    const ProductGraph product = cartesian_product(spec.factors);
    GroundTruth truth{product.graph, product.colors, spec.factors};
    const Perturbation p = perturb(product.graph, spec.perturbation);
    const RegionResult region = grow_region(p.graph, spec.heuristic);
    const PipelineResult result = run_pipeline(p.graph, region.region);
    row.report = evaluate_recovery(p.graph, truth, result);
  } catch (const Error& e) {
    row.failure = std::string(to_string(e.code())) + ": " + e.what();
  }
  return row;
}

std::vector<ExperimentRow> run_experiments(std::span<const ExperimentSpec> specs, std::size_t threads) {
  std::vector<ExperimentRow> rows(specs.size());
  parallel_for(specs.size(), threads, [&](std::size_t i) { rows[i] = run_experiment(specs[i]); });
  return rows;
}

namespace {

std::string_view strategy_name(SeedStrategy s) {
  switch (s) {
    case SeedStrategy::MaxDegree: return "max-degree";
    case SeedStrategy::MaxPspClasses: return "max-psp-classes";
    case SeedStrategy::Explicit: return "explicit";
  }
  return "unknown";
}

}  // namespace

void write_csv_header(std::ostream& out) {
  out << "factors,k_delete,k_add,perturb_seed,threshold,seed_strategy,region_size,class_count,edges_scored,"
         "edges_correct,accuracy,vertices_retained,vertices_total,factor_count,factors_matched,factors_compared,"
         "embedding_verified,failure\n";
}

void write_csv_row(std::ostream& out, const ExperimentRow& row) {
  const ExperimentSpec& s = row.spec;
  for (std::size_t i = 0; i < s.factors.size(); ++i) out << (i ? "x" : "") << s.factors[i].vertex_count();
  out << ',' << s.perturbation.k_delete << ',' << s.perturbation.k_add << ',' << s.perturbation.seed << ','
      << s.heuristic.threshold << ',' << strategy_name(s.heuristic.seed_strategy) << ',';
  if (row.report) {
    const RecoveryReport& r = *row.report;
    out << r.region_size << ',' << r.class_count << ',' << r.edges_scored << ',' << r.edges_correct << ','
        << std::fixed << std::setprecision(6) << r.accuracy << std::defaultfloat << ',' << r.vertices_retained
        << ',' << r.vertices_total << ',' << r.factor_count << ',' << r.factors_matched << ','
        << r.factors_compared << ',' << (r.embedding_verified ? 1 : 0) << ',';
  } else {
    out << ",,,,,,,,,,,";
  }
  std::string failure = row.failure;
  std::replace(failure.begin(), failure.end(), ',', ';');
  out << failure << '\n';
}

}  // namespace cartfact
