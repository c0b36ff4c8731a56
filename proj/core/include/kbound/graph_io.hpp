#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kbound/graph.hpp"

namespace kbound {

enum class GraphFormat { Graph6, EdgeList, Dimacs };

struct ParseOptions {
  /// Edge-list only: accept arbitrary nonnegative labels and map the distinct
  /// values, in ascending order, onto 0..m-1.
  bool remap_labels = false;
};

struct ParsedGraph {
  Graph graph;
  /// labels[v] is the input label of dense vertex v, or -1 for vertices the
  /// input never named. Identity when no remapping took place.
  std::vector<long long> labels;
  bool remapped = false;
};

/// Decode one graph. Errors are Input errors carrying the byte offset.
ParsedGraph parse_graph(std::string_view input, GraphFormat format, const ParseOptions& options = {});

/// One graph per non-empty line. An optional ">>graph6<<" header is skipped.
/// Offsets in errors are relative to the start of `input`.
std::vector<Graph> parse_graph6_corpus(std::string_view input);

std::string emit_graph6(const Graph& g);
std::string emit_edge_list(const Graph& g);

/// Guess the format from a file extension: .g6 graph6, .col/.dimacs DIMACS,
/// anything else edge-list.
GraphFormat format_from_extension(std::string_view path);
GraphFormat format_from_name(std::string_view name);

}  // namespace kbound
