#include "cartfact/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "cartfact/approx_driver.hpp"
#include "cartfact/covering.hpp"
#include "cartfact/errors.hpp"
#include "cartfact/factorizer.hpp"
#include "cartfact/graph_io.hpp"
#include "cartfact/pipeline.hpp"
#include "cartfact/product.hpp"
#include "cartfact/psp.hpp"
#include "cartfact/traversal.hpp"

namespace cartfact::cli {

namespace {

constexpr const char* kHeader = "# cartfact v1";

struct Io {
  std::istream& in;
  std::ostream& out;
};

Graph read_graph(const std::string& path, Io io) {
  if (path.empty() || path == "-") return load_edge_list(io.in);
  return load_edge_list_file(path);
}

VertexSubset read_subset(const std::string& path, const Graph& g) {
  if (path.empty()) return VertexSubset::all(g.vertex_count());
  return VertexSubset(g.vertex_count(), load_vertex_list_file(path));
}

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  return f;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void print_vector(std::ostream& out, const CoordinateVector& c) {
  for (std::uint32_t x : c) out << ' ' << x;
}

void print_factors(std::ostream& out, const PipelineResult& r) {
  const FactorSet& fs = r.factors;
  out << "# factors " << fs.factors.size() << '\n';
  for (std::uint32_t p : fs.dropped_positions) out << "# dropped position " << p << " (single vertex)\n";
  for (std::size_t i = 0; i < fs.factors.size(); ++i) {
    const Factor& f = fs.factors[i];
    out << "factor " << i << " position " << f.position << " vertices " << f.graph.vertex_count() << " edges "
        << f.graph.edge_count() << '\n';
    out << "labels";
    for (std::uint32_t l : f.labels) out << ' ' << l;
    out << '\n';
    for (const Edge& e : f.graph.edges()) out << f.labels[e.u] << ' ' << f.labels[e.v] << '\n';
    out << "end\n";
  }
  out << "embedding " << r.h.host_vertex.size() << '\n';
  for (std::size_t x = 0; x < r.h.host_vertex.size(); ++x) {
    out << r.h.host_vertex[x];
    print_vector(out, r.h.coordinates[x]);
    out << '\n';
  }
}

void write_coordinate_dot(std::ostream& out, const PipelineResult& r) {
  DotStyle style;
  style.name = "H";
  style.edge_class = r.h.edge_class;
  style.coordinates = r.h.coordinates;
  style.vertex_names = r.h.host_vertex;
  write_dot(out, r.h.h.graph, style);
}

void print_deletions(std::ostream& out, const CoordinateAssignment& ca, const char* prefix) {
  for (const DeletionEntry& d : ca.deletions()) {
    out << prefix << "deleted " << to_string(d.reason) << " vertex " << ca.host_vertex(d.vertex);
    if (d.edge) {
      const Edge& e = ca.graph().edge(*d.edge);
      out << " edge " << ca.host_vertex(e.u) << ' ' << ca.host_vertex(e.v);
    }
    out << '\n';
  }
  for (const FreshLabelEvent& f : ca.fresh_labels())
    out << prefix << "fresh vertex " << ca.host_vertex(f.vertex) << " position " << f.position << " label "
        << f.label << '\n';
}

SeedStrategy parse_strategy(const std::string& s) {
  if (s == "max-degree") return SeedStrategy::MaxDegree;
  if (s == "explicit") return SeedStrategy::Explicit;
  return SeedStrategy::MaxPspClasses;
}

int error_exit(const Error& e, std::ostream& err) {
  err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
  switch (e.code()) {
    case ErrorCode::ParseError:
    case ErrorCode::SelfLoop:
    case ErrorCode::EmptyGraph:
    case ErrorCode::EmptySubset:
    case ErrorCode::VertexOutOfRange:
    case ErrorCode::InvalidArgument:
      return kExitUsage;
    default:
      return kExitDomainError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and approximate Cartesian product recognition", "cartfact"};
  app.require_subcommand(1);
  Io io{in, out};

  std::string graph_path, subset_path, dot_path, log_path;
  std::optional<Vertex> root;

  auto* product = app.add_subcommand("product", "Cartesian product of edge-list factors");
  std::vector<std::string> factor_paths;
  product->add_option("--factors", factor_paths, "factor edge lists")->required()->expected(1, -1);
  product->add_option("--dot", dot_path, "also write DOT colored by factor");

  auto* delta = app.add_subcommand("delta", "classes of the closure of the local relations");
  delta->add_option("graph", graph_path, "edge list, '-' or empty for stdin");
  delta->add_option("--subset", subset_path, "vertex list W (default: all vertices)");
  delta->add_option("--dot", dot_path, "also write DOT colored by class");

  auto* psp = app.add_subcommand("psp", "partial star product at one vertex");
  Vertex center = 0;
  bool check_iso = false;
  psp->add_option("graph", graph_path);
  psp->add_option("--vertex", center, "center vertex")->required();
  psp->add_flag("--verify", check_iso, "check the embedding into the product of star factors");
  psp->add_option("--dot", dot_path);

  auto* coordinatize = app.add_subcommand("coordinatize", "coordinate vectors of the repaired subgraph");
  coordinatize->add_option("graph", graph_path);
  coordinatize->add_option("--subset", subset_path);
  coordinatize->add_option("--root", root, "root vertex, must lie in W");
  coordinatize->add_option("--log", log_path, "write the deletion log here instead of inline comments");
  coordinatize->add_option("--dot", dot_path);

  auto* factorize = app.add_subcommand("factorize", "factor graphs and the embedding table");
  factorize->add_option("graph", graph_path);
  factorize->add_option("--subset", subset_path);
  factorize->add_option("--root", root);
  factorize->add_option("--dot", dot_path);

  auto* approx = app.add_subcommand("approx", "grow a product-like region and factor it");
  std::size_t threshold = 2, max_region = 0;
  std::string strategy = "max-psp-classes";
  std::optional<Vertex> seed_vertex;
  approx->add_option("graph", graph_path);
  approx->add_option("--threshold", threshold, "minimum class count")->check(CLI::PositiveNumber);
  approx->add_option("--seed-strategy", strategy)->check(CLI::IsMember({"max-degree", "max-psp-classes", "explicit"}));
  approx->add_option("--seed-vertex", seed_vertex, "seed for the explicit strategy");
  approx->add_option("--max-region", max_region, "stop growing at this many vertices (0: no limit)");
  approx->add_option("--dot", dot_path);

  auto* perturb_cmd = app.add_subcommand("perturb", "random edge deletions and insertions");
  std::size_t k_delete = 0, k_add = 0;
  std::uint64_t seed = 0;
  perturb_cmd->add_option("graph", graph_path);
  perturb_cmd->add_option("--del", k_delete, "edges to delete");
  perturb_cmd->add_option("--add", k_add, "edges to insert");
  perturb_cmd->add_option("--seed", seed, "generator seed")->required();

  auto* verify = app.add_subcommand("verify", "run the pipeline and check its guarantees");
  bool verify_psps = false;
  verify->add_option("graph", graph_path);
  verify->add_option("--subset", subset_path);
  verify->add_option("--root", root);
  verify->add_flag("--psp", verify_psps, "also check every partial star product embedding");

  auto* experiment = app.add_subcommand("experiment", "perturbation experiments as CSV");
  std::size_t runs = 1, threads = 1;
  experiment->add_option("--factors", factor_paths)->required()->expected(1, -1);
  experiment->add_option("--del", k_delete);
  experiment->add_option("--add", k_add);
  experiment->add_option("--seed", seed, "seed of the first run; run i uses seed + i")->required();
  experiment->add_option("--runs", runs);
  experiment->add_option("--threshold", threshold)->check(CLI::PositiveNumber);
  experiment->add_option("--seed-strategy", strategy)->check(CLI::IsMember({"max-degree", "max-psp-classes"}));
  experiment->add_option("--threads", threads, "concurrent runs");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (product->parsed()) {
      std::vector<Graph> factors;
      for (const auto& p : factor_paths) factors.push_back(load_edge_list_file(p));
      const ProductGraph pg = cartesian_product(factors);
      out << kHeader << '\n';
      write_edge_list(out, pg.graph);
      for (EdgeId e = 0; e < pg.graph.edge_count(); ++e)
        out << "# color " << pg.color_of_edge[e] << ' ' << pg.graph.edge(e).u << ' ' << pg.graph.edge(e).v << '\n';
      if (!dot_path.empty()) {
        auto f = open_output(dot_path);
        DotStyle style;
        style.edge_class = pg.color_of_edge;
        style.coordinates = pg.coordinates;
        write_dot(f, pg.graph, style);
      }
      return kExitOk;
    }

    if (delta->parsed()) {
      const Graph g = read_graph(graph_path, io);
      out << kHeader << '\n';
      std::vector<std::uint32_t> cls;
      Subgraph shown;
      if (subset_path.empty()) {
        CoverOptions opts;
        opts.threads = 0;
        const EdgePartition p = compute_delta_star(g, opts);
        cls.assign(p.labels().begin(), p.labels().end());
        shown.graph = g;
        for (Vertex v = 0; v < g.vertex_count(); ++v) shown.parent_vertex.push_back(v);
      } else {
        CoverOptions opts;
        opts.threads = 0;
        const CoveringResult c = cover(g, read_subset(subset_path, g), opts);
        cls.assign(c.partition.labels().begin(), c.partition.labels().end());
        shown = c.union_graph;
      }
      std::size_t k = 0;
      for (auto c : cls) k = std::max<std::size_t>(k, c + 1);
      out << "# classes " << k << '\n';
      for (EdgeId e = 0; e < shown.graph.edge_count(); ++e) {
        const Edge& ed = shown.graph.edge(e);
        out << shown.parent_vertex[ed.u] << ' ' << shown.parent_vertex[ed.v] << ' ' << cls[e] << '\n';
      }
      if (!dot_path.empty()) {
        auto f = open_output(dot_path);
        DotStyle style;
        style.edge_class = cls;
        style.vertex_names = shown.parent_vertex;
        write_dot(f, shown.graph, style);
      }
      return kExitOk;
    }

    if (psp->parsed()) {
      const Graph g = read_graph(graph_path, io);
      if (center >= g.vertex_count()) throw Error(ErrorCode::VertexOutOfRange, "center out of range");
      const PartialStarProduct p = build_psp(g, center);
      out << kHeader << '\n';
      out << "center " << center << '\n';
      out << "classes " << p.class_count() << '\n';
      out << "primal " << p.primal_edges.size() << " nonprimal " << p.nonprimal_edges.size() << '\n';
      for (std::size_t i = 0; i < p.edges.size(); ++i) {
        const Edge& e = g.edge(p.edges[i]);
        out << e.u << ' ' << e.v << ' ' << p.classes.class_of(i) << ' '
            << (p.is_primal(p.edges[i]) ? "primal" : "nonprimal") << '\n';
      }
      if (check_iso) {
        const auto stars = star_factors(p);
        const IsometryReport rep = verify_psp_isometric(g, p, stars);
        out << "isomorphic_to_2_ball " << yes_no(rep.isomorphic_to_2_ball) << '\n';
        out << "isometric " << yes_no(rep.isometric) << '\n';
      }
      if (!dot_path.empty()) {
        auto f = open_output(dot_path);
        write_psp_dot(f, g, p);
      }
      return kExitOk;
    }

    if (coordinatize->parsed() || factorize->parsed() || verify->parsed()) {
      const Graph g = read_graph(graph_path, io);
      PipelineOptions opts;
      opts.cover.threads = 0;
      opts.coordinates.root = root;
      const PipelineResult r = run_pipeline(g, read_subset(subset_path, g), opts);
      out << kHeader << '\n';

      if (coordinatize->parsed()) {
        out << "# classes " << r.assignment.class_count() << " root " << r.assignment.host_vertex(r.assignment.root())
            << '\n';
        for (std::size_t x = 0; x < r.h.host_vertex.size(); ++x) {
          out << r.h.host_vertex[x];
          print_vector(out, r.h.coordinates[x]);
          out << '\n';
        }
        if (log_path.empty()) {
          print_deletions(out, r.assignment, "# ");
        } else {
          auto f = open_output(log_path);
          f << kHeader << '\n';
          print_deletions(f, r.assignment, "");
        }
      } else if (factorize->parsed()) {
        print_factors(out, r);
      } else {
        const bool consistent = coordinates_consistent(r.h);
        const bool embedded = verify_embedding(r.factors, r.h.h.graph);
        const bool iso = embedded && r.h.h.graph.vertex_count() == g.vertex_count() &&
                         r.h.h.graph.edge_count() == g.edge_count() &&
                         embedding_is_isomorphism(r.factors, r.h.h.graph);
        out << "consistent " << yes_no(consistent) << '\n';
        out << "embedding " << yes_no(embedded) << '\n';
        out << "product " << yes_no(iso) << '\n';
        bool psp_ok = true;
        if (verify_psps) {
          const SquareIndex index(g);
          std::size_t good = 0;
          for (Vertex v = 0; v < g.vertex_count(); ++v) {
            const PartialStarProduct p = build_psp(g, index, v);
            const auto stars = star_factors(p);
            const IsometryReport rep = verify_psp_isometric(g, p, stars);
            if (rep.isomorphic_to_2_ball && rep.isometric) ++good;
          }
          psp_ok = good == g.vertex_count();
          out << "psp_isometric " << good << '/' << g.vertex_count() << '\n';
        }
        return consistent && embedded && psp_ok ? kExitOk : kExitDomainError;
      }
      if (!dot_path.empty()) {
        auto f = open_output(dot_path);
        write_coordinate_dot(f, r);
      }
      return kExitOk;
    }

    if (approx->parsed()) {
      const Graph g = read_graph(graph_path, io);
      HeuristicConfig cfg;
      cfg.threshold = threshold;
      cfg.seed_strategy = parse_strategy(strategy);
      cfg.explicit_seed = seed_vertex;
      cfg.max_region_size = max_region;
      const RegionResult region = grow_region(g, cfg);
      PipelineOptions opts;
      opts.cover.threads = 0;
      const PipelineResult r = run_pipeline(g, region.region, opts);
      out << kHeader << '\n';
      out << "seed " << region.seed << '\n';
      out << "region " << region.region.size() << ':';
      for (Vertex v : region.region.members()) out << ' ' << v;
      out << '\n';
      out << "skipped " << region.skipped.size() << ':';
      for (Vertex v : region.skipped) out << ' ' << v;
      out << '\n';
      out << "classes " << r.assignment.class_count() << '\n';
      out << "retained " << r.h.h.graph.vertex_count() << " of " << r.covering.union_graph.graph.vertex_count()
          << '\n';
      print_factors(out, r);
      print_deletions(out, r.assignment, "# ");
      if (!dot_path.empty()) {
        auto f = open_output(dot_path);
        write_coordinate_dot(f, r);
      }
      return kExitOk;
    }

    if (perturb_cmd->parsed()) {
      const Graph g = read_graph(graph_path, io);
      const Perturbation p = perturb(g, PerturbationSpec{k_delete, k_add, seed, 1000});
      out << kHeader << '\n';
      out << "# seed " << seed << '\n';
      for (const EditEntry& e : p.log)
        out << (e.kind == EditEntry::Kind::Deleted ? "# deleted " : "# added ") << e.edge.u << ' ' << e.edge.v
            << '\n';
      write_edge_list(out, p.graph);
      return kExitOk;
    }

    if (experiment->parsed()) {
      std::vector<Graph> factors;
      for (const auto& p : factor_paths) factors.push_back(load_edge_list_file(p));
      std::vector<ExperimentSpec> specs;
      for (std::size_t i = 0; i < runs; ++i) {
        ExperimentSpec s;
        s.factors = factors;
        s.perturbation = {k_delete, k_add, seed + i, 1000};
        s.heuristic.threshold = threshold;
        s.heuristic.seed_strategy = parse_strategy(strategy);
        specs.push_back(std::move(s));
      }
      const auto rows = run_experiments(specs, std::max<std::size_t>(1, threads));
      out << kHeader << '\n';
      write_csv_header(out);
      for (const auto& row : rows) write_csv_row(out, row);
      return kExitOk;
    }
  } catch (const Error& e) {
    return error_exit(e, err);
  }
  return kExitUsage;
}

}  // namespace cartfact::cli
