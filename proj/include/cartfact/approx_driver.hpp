#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cartfact/edge_partition.hpp"
#include "cartfact/graph.hpp"
#include "cartfact/pipeline.hpp"

namespace cartfact {

enum class SeedStrategy { MaxDegree, MaxPspClasses, Explicit };

struct HeuristicConfig {
  std::size_t threshold = 2;
  SeedStrategy seed_strategy = SeedStrategy::MaxPspClasses;
  std::optional<Vertex> explicit_seed;
  std::size_t max_region_size = 0;  // 0: unbounded
  std::uint64_t random_seed = 0;
};

struct RegionResult {
  VertexSubset region;
  Vertex seed = 0;
  std::size_t class_count = 0;
  std::vector<Vertex> skipped;  // candidates rejected once, never retried
};

/// Grows W from a seed in BFS order over G, admitting a neighbor of the
/// region only if the merged relation keeps at least `threshold` classes.
/// Rejected candidates are skipped and not revisited. Throws NoSeed,
/// Disconnected, InvalidArgument.
RegionResult grow_region(const Graph& g, const HeuristicConfig& cfg);

struct PerturbationSpec {
  std::size_t k_delete = 0;
  std::size_t k_add = 0;
  std::uint64_t seed = 0;
  std::size_t max_retries = 1000;
};

struct EditEntry {
  enum class Kind { Deleted, Added };
  Kind kind;
  Edge edge;
};

struct Perturbation {
  Graph graph;
  std::vector<EditEntry> log;
};

/// Deletes k_delete edges (keeping the graph connected) then inserts k_add
/// new edges, drawing from a generator seeded with spec.seed. Throws
/// CannotPreserveConnectivity or InvalidArgument.
Perturbation perturb(const Graph& g, const PerturbationSpec& spec);

/// Undoes an edit log, last entry first.
Graph replay_backwards(const Graph& perturbed, std::span<const EditEntry> log);

struct GroundTruth {
  Graph original;
  EdgePartition colors;         // over original edge ids
  std::vector<Graph> factors;
};

struct RecoveryReport {
  std::size_t region_size = 0;
  std::size_t class_count = 0;
  std::size_t edges_scored = 0;
  std::size_t edges_correct = 0;
  double accuracy = 0.0;
  std::size_t vertices_retained = 0;
  std::size_t vertices_total = 0;
  std::size_t factor_count = 0;
  std::size_t factors_matched = 0;
  std::size_t factors_compared = 0;  // truth factors small enough to test
  bool embedding_verified = false;
};

/// Best agreement between two labelings over a maximum-weight one-to-one
/// matching of their classes. Returns the matched count.
std::size_t best_bijection_matches(std::span<const std::uint32_t> truth,
                                   std::span<const std::uint32_t> predicted);

/// Scores the pipeline output on `g` (the perturbed graph, same vertex ids as
/// the original) against the ground truth. Edges added by the perturbation
/// carry no truth color and are not scored.
RecoveryReport evaluate_recovery(const Graph& g, const GroundTruth& truth, const PipelineResult& result);

struct ExperimentSpec {
  std::vector<Graph> factors;
  PerturbationSpec perturbation;
  HeuristicConfig heuristic;
};

struct ExperimentRow {
  ExperimentSpec spec;
  std::optional<RecoveryReport> report;  // empty when the run failed
  std::string failure;
};

/// Builds the product, perturbs it, grows a region, runs the pipeline and
/// scores it. Independent runs may execute concurrently.
ExperimentRow run_experiment(const ExperimentSpec& spec);
std::vector<ExperimentRow> run_experiments(std::span<const ExperimentSpec> specs, std::size_t threads);

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const ExperimentRow& row);

}  // namespace cartfact
