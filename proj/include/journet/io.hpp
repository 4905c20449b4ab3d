#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "journet/graph.hpp"

namespace journet {

/// Pajek .net text: "*Vertices N", one `<i> "<label>"` line per node in
/// canonical order, then "*Edges" or "*Arcs" and one "<i> <j> <w>" line per
/// link (edges once, i < j).  LF line endings.
std::string export_pajek(const Graph& graph);

/// Parses the layout written by export_pajek.  Labels become node ids of the
/// given kind.  Throws Error{Data} with a line number on malformed input.
Graph parse_pajek(std::string_view text, NodeKind kind);

/// "node_id,neighbour_ids,degree,aux_count" with space-separated neighbour ids.
std::string export_adjacency_report(
    const Graph& graph, const std::map<NodeRef, std::int64_t>* aux = nullptr);

/// Renders a double with the shortest text that round-trips.
std::string format_real(double value);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(std::string_view text);

}  // namespace journet
