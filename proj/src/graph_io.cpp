#include "cartfact/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "cartfact/errors.hpp"

namespace cartfact {

namespace {

std::string_view strip_comment(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  return line;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

Vertex parse_vertex(std::string_view tok, std::size_t line_no) {
  Vertex value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || value == kUnreachable) {
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line_no) + ": bad vertex token '" + std::string(tok) + "'");
  }
  return value;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return in;
}

}  // namespace

Graph load_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  Vertex max_vertex = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = tokens(strip_comment(line));
    if (toks.empty()) continue;
    if (toks.size() != 2) {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": expected two vertex ids");
    }
    Vertex u = parse_vertex(toks[0], line_no);
    Vertex v = parse_vertex(toks[1], line_no);
    if (u == v) {
      throw Error(ErrorCode::SelfLoop, "line " + std::to_string(line_no) + ": self-loop at " + std::to_string(u));
    }
    max_vertex = std::max({max_vertex, u, v});
    edges.push_back({u, v});
  }
  if (edges.empty()) throw Error(ErrorCode::EmptyGraph, "edge list contains no edges");
  return Graph::from_edges(static_cast<std::size_t>(max_vertex) + 1, edges);
}

Graph load_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_edge_list(in);
}

Graph load_edge_list_file(const std::string& path) {
  auto in = open_or_throw(path);
  return load_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::vector<Vertex> load_vertex_list(std::istream& in) {
  std::vector<Vertex> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    for (auto tok : tokens(strip_comment(line))) out.push_back(parse_vertex(tok, line_no));
  }
  return out;
}

std::vector<Vertex> load_vertex_list_file(const std::string& path) {
  auto in = open_or_throw(path);
  return load_vertex_list(in);
}

std::string format_coordinates(std::span<const std::uint32_t> c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  s += ')';
  return s;
}

void write_dot(std::ostream& out, const Graph& g, const DotStyle& style) {
  auto name = [&](Vertex v) { return style.vertex_names.empty() ? v : style.vertex_names[v]; };
  out << "graph " << style.name << " {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << name(v);
    if (!style.coordinates.empty()) out << " [coords=\"" << format_coordinates(style.coordinates[v]) << "\"]";
    out << ";\n";
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    out << "  " << name(ed.u) << " -- " << name(ed.v);
    bool has_class = !style.edge_class.empty();
    bool has_dash = !style.dashed.empty();
    if (has_class || has_dash) {
      out << " [";
      if (has_class) out << "color=" << style.edge_class[e];
      if (has_dash) out << (has_class ? ", " : "") << "style=" << (style.dashed[e] ? "dashed" : "solid");
      out << "]";
    }
    out << ";\n";
  }
  out << "}\n";
}

}  // namespace cartfact
