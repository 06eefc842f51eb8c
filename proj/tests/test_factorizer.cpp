#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "cartfact/approx_driver.hpp"
#include "cartfact/errors.hpp"
#include "cartfact/factorizer.hpp"
#include "cartfact/generators.hpp"
#include "cartfact/isomorphism.hpp"
#include "cartfact/pipeline.hpp"
#include "oracles.hpp"

using namespace cartfact;

namespace {

PipelineResult factor_all(const Graph& g) { return run_pipeline(g, VertexSubset::all(g.vertex_count())); }

std::vector<std::size_t> factor_sizes(const FactorSet& fs) {
  std::vector<std::size_t> s;
  for (const Factor& f : fs.factors) s.push_back(f.graph.vertex_count());
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST_CASE("small products split into their factors") {
  SUBCASE("C4") {
    const PipelineResult r = factor_all(make_cycle(4));
    CHECK(factor_sizes(r.factors) == std::vector<std::size_t>{2, 2});
    for (const Factor& f : r.factors.factors) CHECK(isomorphism_check_small(f.graph, make_path(2)));
    CHECK(embedding_is_isomorphism(r.factors, r.h.h.graph));
  }
  SUBCASE("P2 x P3") {
    const Graph f[] = {make_path(2), make_path(3)};
    const PipelineResult r = factor_all(cartesian_product(f).graph);
    REQUIRE(factor_sizes(r.factors) == std::vector<std::size_t>{2, 3});
    for (const Factor& x : r.factors.factors)
      CHECK(isomorphism_check_small(x.graph, make_path(x.graph.vertex_count())));
    CHECK(embedding_is_isomorphism(r.factors, r.h.h.graph));
  }
  SUBCASE("Q3") {
    const PipelineResult r = factor_all(make_hypercube(3));
    CHECK(factor_sizes(r.factors) == std::vector<std::size_t>{2, 2, 2});
    CHECK(embedding_is_isomorphism(r.factors, r.h.h.graph));
  }
}

TEST_CASE("single-valued positions are reported as dropped") {
  CoordinatizedGraph h;
  h.h.graph = make_path(3);
  h.h.parent_vertex = {0, 1, 2};
  h.h.parent_edge = {0, 1};
  h.host_vertex = {0, 1, 2};
  h.coordinates = {{0, 5}, {1, 5}, {2, 5}};
  h.edge_class = {0, 0};
  h.class_count = 2;
  const FactorSet fs = extract_factors(h);
  REQUIRE(fs.factors.size() == 1);
  CHECK(fs.factors[0].labels == std::vector<std::uint32_t>{0, 1, 2});
  CHECK(fs.dropped_positions == std::vector<std::uint32_t>{1});
  CHECK(verify_embedding(fs, h.h.graph));
  CHECK(embedding_is_isomorphism(fs, h.h.graph));

  h.coordinates[2] = {0, 5};  // duplicate vector
  CHECK_THROWS_AS(extract_factors(h), Error);
  FactorSet bad = fs;
  bad.embedding[2] = bad.embedding[0];
  CHECK_FALSE(verify_embedding(bad, h.h.graph));
}

TEST_CASE("embedding witnesses every factor edge and counts match on exact products") {
  Rng rng(61);
  for (int i = 0; i < 25; ++i) {
    std::vector<Graph> fsrc{oracle::random_small_factor(rng), oracle::random_small_factor(rng)};
    if (i % 5 == 0) fsrc.push_back(make_path(2));
    const ProductGraph pg = cartesian_product(fsrc);
    const PipelineResult r = factor_all(pg.graph);
    CHECK(verify_embedding(r.factors, r.h.h.graph));
    CHECK(embedding_is_isomorphism(r.factors, r.h.h.graph));
    CHECK(r.factors.factors.size() == fsrc.size());

    std::size_t prod = 1;
    for (const Factor& f : r.factors.factors) prod *= f.graph.vertex_count();
    CHECK(prod == pg.graph.vertex_count());
    std::size_t edges = 0;
    for (const Factor& f : r.factors.factors) edges += f.graph.edge_count() * (prod / f.graph.vertex_count());
    CHECK(edges == pg.graph.edge_count());

    // Each factor edge appears as some edge of H.
    for (const Factor& f : r.factors.factors)
      for (const Edge& fe : f.graph.edges()) {
        bool witnessed = false;
        for (const Edge& e : r.h.h.graph.edges()) {
          const auto a = r.factors.embedding[e.u][f.position];
          const auto b = r.factors.embedding[e.v][f.position];
          if (std::minmax(a, b) == std::minmax(f.labels[fe.u], f.labels[fe.v])) witnessed = true;
        }
        CHECK(witnessed);
      }

    // Factors match the inputs up to isomorphism when small enough.
    std::vector<bool> used(fsrc.size(), false);
    for (const Factor& f : r.factors.factors)
      for (std::size_t k = 0; k < fsrc.size(); ++k)
        if (!used[k] && fsrc[k].vertex_count() == f.graph.vertex_count() &&
            isomorphism_check_small(fsrc[k], f.graph)) {
          used[k] = true;
          break;
        }
    CHECK(std::all_of(used.begin(), used.end(), [](bool b) { return b; }));
  }
}

TEST_CASE("perturbed products still give a verifiable embedding") {
  const Graph f[] = {make_star(4), make_star(5)};
  const Graph g = cartesian_product(f).graph;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Perturbation p = perturb(g, {2, 2, seed, 1000});
    const RegionResult region = grow_region(p.graph, {});
    const PipelineResult r = run_pipeline(p.graph, region.region);
    CHECK(verify_embedding(r.factors, r.h.h.graph));
  }
}

TEST_CASE("small isomorphism check") {
  CHECK(isomorphism_check_small(make_path(3), relabel(make_path(3), std::vector<Vertex>{1, 0, 2})));
  CHECK_FALSE(isomorphism_check_small(make_star(3), make_path(4)));
  CHECK_FALSE(isomorphism_check_small(make_path(3), make_path(4)));
  CHECK(isomorphism_check_small(make_cycle(6), relabel(make_cycle(6), std::vector<Vertex>{3, 5, 1, 0, 2, 4})));
  CHECK_FALSE(isomorphism_check_small(make_cycle(6), cartesian_product(std::vector<Graph>{make_path(2), make_path(3)}).graph));

  Rng rng(62);
  for (int i = 0; i < 20; ++i) {
    const Graph t = random_tree(9, rng);
    std::vector<Vertex> perm(9);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(isomorphism_check_small(t, relabel(t, perm)));
  }

  try {
    isomorphism_check_small(make_path(11), make_path(11));
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
}
