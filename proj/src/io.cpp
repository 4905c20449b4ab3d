#include "journet/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "journet/error.hpp"

namespace journet {

namespace {

std::string quote_label(std::string_view id) {
  std::string out = "\"";
  for (char c : id) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::Data, "pajek:" + std::to_string(line) + ": " + what);
}

}  // namespace

std::string format_real(double value) {
  if (value == 0.0) return "0";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string export_pajek(const Graph& graph) {
  std::string out = "*Vertices " + std::to_string(graph.node_count()) + "\n";
  for (std::size_t i = 0; i < graph.node_count(); ++i)
    out += std::to_string(i + 1) + " " + quote_label(graph.node(i).id) + "\n";
  out += graph.directed() ? "*Arcs\n" : "*Edges\n";
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    for (const auto& n : graph.out(i)) {
      if (!graph.directed() && n.index < i) continue;
      out += std::to_string(i + 1) + " " + std::to_string(n.index + 1) + " " +
             std::to_string(n.weight) + "\n";
    }
  }
  return out;
}

Graph parse_pajek(std::string_view text, NodeKind kind) {
  std::vector<std::string> lines;
  {
    std::string line;
    std::istringstream in{std::string(text)};
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back(line);
    }
  }
  std::size_t at = 0;
  auto skip_blank = [&] {
    while (at < lines.size() && lines[at].find_first_not_of(" \t") == std::string::npos) ++at;
  };

  skip_blank();
  if (at >= lines.size()) fail(1, "missing *Vertices line");
  std::size_t count = 0;
  {
    std::istringstream hdr(lines[at]);
    std::string tag;
    hdr >> tag;
    if (lower(tag) != "*vertices" || !(hdr >> count)) fail(at + 1, "expected '*Vertices N'");
  }
  ++at;

  std::vector<NodeRef> nodes;
  nodes.reserve(count);
  for (std::size_t k = 1; k <= count; ++k, ++at) {
    if (at >= lines.size()) fail(at + 1, "vertex list ends early");
    const std::string& line = lines[at];
    std::size_t idx = 0;
    auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), idx);
    if (ec != std::errc{} || idx != k) fail(at + 1, "expected vertex index " + std::to_string(k));
    std::size_t pos = line.find('"', static_cast<std::size_t>(ptr - line.data()));
    if (pos == std::string::npos) fail(at + 1, "missing quoted label");
    std::string label;
    bool closed = false;
    for (++pos; pos < line.size(); ++pos) {
      char c = line[pos];
      if (c == '\\' && pos + 1 < line.size()) {
        label += line[++pos];
      } else if (c == '"') {
        closed = true;
        break;
      } else {
        label += c;
      }
    }
    if (!closed) fail(at + 1, "unterminated label");
    nodes.push_back({kind, label});
  }

  skip_blank();
  if (at >= lines.size()) fail(at + 1, "missing *Edges or *Arcs section");
  const std::string section = lower(lines[at].substr(0, lines[at].find_first_of(" \t")));
  bool directed;
  if (section == "*edges") directed = false;
  else if (section == "*arcs") directed = true;
  else fail(at + 1, "expected *Edges or *Arcs");
  ++at;

  GraphBuilder builder(directed);
  for (const auto& n : nodes) builder.add_node(n);
  for (; at < lines.size(); ++at) {
    if (lines[at].find_first_not_of(" \t") == std::string::npos) continue;
    std::istringstream row(lines[at]);
    std::size_t i = 0, j = 0;
    Weight w = 1;
    if (!(row >> i >> j)) fail(at + 1, "expected '<i> <j> [w]'");
    if (!(row >> w)) w = 1;
    if (i < 1 || i > count || j < 1 || j > count) fail(at + 1, "vertex index out of range");
    builder.add_link(nodes[i - 1], nodes[j - 1], w);
  }
  return builder.build();
}

std::string export_adjacency_report(const Graph& graph, const std::map<NodeRef, std::int64_t>* aux) {
  std::string out = "node_id,neighbour_ids,degree,aux_count\n";
  for (const auto& row : adjacency_rows(graph, aux)) {
    std::string ids;
    for (const auto& n : row.neighbours) {
      if (!ids.empty()) ids += ' ';
      ids += n.id;
    }
    out += csv_field(row.node.id) + "," + csv_field(ids) + "," + std::to_string(row.degree) + "," +
           std::to_string(row.aux_count) + "\n";
  }
  return out;
}

}  // namespace journet
