#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cartfact/graph.hpp"

namespace cartfact {

/// Reads "u v" lines; '#' starts a comment, blank lines are ignored.
/// The vertex count is the largest index plus one and duplicate lines
/// collapse. Throws ParseError, SelfLoop or EmptyGraph.
Graph load_edge_list(std::istream& in);
Graph load_edge_list(std::string_view text);
Graph load_edge_list_file(const std::string& path);

/// One "u v" line per edge in edge-id order.
void write_edge_list(std::ostream& out, const Graph& g);

/// Whitespace separated vertex ids with '#' comments.
std::vector<Vertex> load_vertex_list(std::istream& in);
std::vector<Vertex> load_vertex_list_file(const std::string& path);

struct DotStyle {
  std::string name = "G";
  std::span<const std::uint32_t> edge_class = {};
  std::span<const std::vector<std::uint32_t>> coordinates = {};
  /// Edges flagged here are drawn dashed.
  std::span<const bool> dashed = {};
  /// Optional labels used instead of raw vertex ids.
  std::span<const Vertex> vertex_names = {};
};

/// Undirected DOT. Edge classes go to `color=<label>`, coordinate vectors to
/// `coords="(c_1,...,c_k)"`.
void write_dot(std::ostream& out, const Graph& g, const DotStyle& style = {});

std::string format_coordinates(std::span<const std::uint32_t> c);

}  // namespace cartfact
