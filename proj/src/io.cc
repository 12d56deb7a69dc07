#include "lmc/io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

namespace lmc {

namespace {

std::string describe(GraphIOError::Kind kind, std::size_t line, const std::string &what) {
  std::string prefix;
  switch (kind) {
  case GraphIOError::Kind::io:
    prefix = "I/O error";
    break;
  case GraphIOError::Kind::parse:
    prefix = "parse error";
    break;
  case GraphIOError::Kind::integrity:
    prefix = "integrity error";
    break;
  }
  if (line > 0) {
    prefix += " at line " + std::to_string(line);
  }
  return prefix + ": " + what;
}

class Tokenizer {
public:
  explicit Tokenizer(std::string_view line) : _rest(line) {}

  // Returns false at end of line; throws on a token that is not an unsigned
  // integer.
  bool next(std::uint64_t &value, std::size_t line_no) {
    const auto start = _rest.find_first_not_of(" \t\r");
    if (start == std::string_view::npos) {
      return false;
    }
    _rest.remove_prefix(start);
    const auto end = std::min(_rest.find_first_of(" \t\r"), _rest.size());
    const std::string_view token = _rest.substr(0, end);
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw GraphIOError(GraphIOError::Kind::parse, line_no,
                         "expected non-negative integer, got '" + std::string(token) + "'");
    }
    _rest.remove_prefix(end);
    return true;
  }

private:
  std::string_view _rest;
};

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

} // namespace

GraphFormat parse_graph_format(const std::string &name) {
  if (name == "metis") {
    return GraphFormat::metis;
  }
  if (name == "edgelist" || name == "snap") {
    return GraphFormat::edgelist;
  }
  throw std::invalid_argument("unknown graph format '" + name + "'");
}

GraphIOError::GraphIOError(Kind kind, std::size_t line, const std::string &what)
    : std::runtime_error(describe(kind, line, what)), _kind(kind), _line(line) {}

Graph load_graph(const std::string &path, GraphFormat format, LoadOptions options) {
  std::ifstream in(path);
  if (!in) {
    throw GraphIOError(GraphIOError::Kind::io, 0, "cannot open '" + path + "'");
  }
  return format == GraphFormat::metis ? read_metis(in, options) : read_edgelist(in, options);
}

Graph read_metis(std::istream &in, LoadOptions options) {
  std::string line;
  std::size_t line_no = 0;

  auto next_content_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line[0] == '%') {
        continue;
      }
      return true;
    }
    return false;
  };

  // Skip leading blank and comment lines before the header.
  do {
    if (!next_content_line()) {
      throw GraphIOError(GraphIOError::Kind::parse, line_no, "missing METIS header");
    }
  } while (is_blank(line));

  std::uint64_t header[4] = {0, 0, 0, 1};
  std::size_t header_fields = 0;
  {
    Tokenizer tok(line);
    std::uint64_t value;
    while (tok.next(value, line_no)) {
      if (header_fields == 4) {
        throw GraphIOError(GraphIOError::Kind::parse, line_no, "too many header fields");
      }
      header[header_fields++] = value;
    }
  }
  if (header_fields < 2) {
    throw GraphIOError(GraphIOError::Kind::parse, line_no, "header needs at least 'n m'");
  }
  const std::uint64_t n = header[0];
  const std::uint64_t m = header[1];
  const std::uint64_t fmt = header[2];
  if (fmt != 0 && fmt != 1 && fmt != 10 && fmt != 11) {
    throw GraphIOError(GraphIOError::Kind::parse, line_no,
                       "unsupported fmt " + std::to_string(fmt));
  }
  if (n >= kInvalidNode) {
    throw GraphIOError(GraphIOError::Kind::parse, line_no, "node count too large");
  }
  const bool has_edge_weights = fmt % 10 == 1;
  const bool has_node_weights = fmt >= 10;
  const std::uint64_t ncon = has_node_weights ? header[3] : 0;

  GraphBuilder builder(static_cast<NodeID>(n));
  std::uint64_t entries = 0;

  for (NodeID u = 0; u < n; ++u) {
    if (!next_content_line()) {
      throw GraphIOError(GraphIOError::Kind::integrity, line_no,
                         "expected " + std::to_string(n) + " node lines, found " +
                             std::to_string(u));
    }
    Tokenizer tok(line);
    std::uint64_t value;
    for (std::uint64_t c = 0; c < ncon; ++c) {
      if (!tok.next(value, line_no)) {
        throw GraphIOError(GraphIOError::Kind::parse, line_no, "missing node weight");
      }
      if (c == 0 && options.keep_weights) {
        builder.set_node_weight(u, static_cast<Weight>(value));
      }
    }
    while (tok.next(value, line_no)) {
      if (value < 1 || value > n) {
        throw GraphIOError(GraphIOError::Kind::parse, line_no,
                           "neighbor " + std::to_string(value) + " out of range 1.." +
                               std::to_string(n));
      }
      Weight w = 1;
      if (has_edge_weights) {
        std::uint64_t ew;
        if (!tok.next(ew, line_no)) {
          throw GraphIOError(GraphIOError::Kind::parse, line_no, "missing edge weight");
        }
        if (ew == 0) {
          throw GraphIOError(GraphIOError::Kind::parse, line_no, "edge weight must be positive");
        }
        if (options.keep_weights) {
          w = static_cast<Weight>(ew);
        }
      }
      ++entries;
      builder.add_edge(u, static_cast<NodeID>(value - 1), w);
    }
  }
  while (next_content_line()) {
    if (!is_blank(line)) {
      throw GraphIOError(GraphIOError::Kind::integrity, line_no, "trailing content after node lines");
    }
  }
  if (entries != 2 * m) {
    throw GraphIOError(GraphIOError::Kind::integrity, 0,
                       "header declares " + std::to_string(m) + " edges but adjacency lists hold " +
                           std::to_string(entries) + " entries");
  }
  return std::move(builder).build(ParallelEdges::keep_first);
}

Graph read_edgelist(std::istream &in, LoadOptions options) {
  struct RawEdge {
    std::uint64_t u;
    std::uint64_t v;
    Weight w;
  };
  std::vector<RawEdge> edges;
  std::vector<std::uint64_t> ids;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line) || line[line.find_first_not_of(" \t")] == '#' ||
        line[line.find_first_not_of(" \t")] == '%') {
      continue;
    }
    Tokenizer tok(line);
    std::uint64_t fields[3];
    std::size_t count = 0;
    std::uint64_t value;
    while (tok.next(value, line_no)) {
      if (count == 3) {
        throw GraphIOError(GraphIOError::Kind::parse, line_no, "expected 'u v [w]'");
      }
      fields[count++] = value;
    }
    if (count < 2) {
      throw GraphIOError(GraphIOError::Kind::parse, line_no, "expected 'u v [w]'");
    }
    Weight w = 1;
    if (count == 3 && options.keep_weights) {
      if (fields[2] == 0) {
        throw GraphIOError(GraphIOError::Kind::parse, line_no, "edge weight must be positive");
      }
      w = static_cast<Weight>(fields[2]);
    }
    edges.push_back({fields[0], fields[1], w});
    ids.push_back(fields[0]);
    ids.push_back(fields[1]);
  }

  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.size() >= kInvalidNode) {
    throw GraphIOError(GraphIOError::Kind::integrity, 0, "too many nodes");
  }
  auto local = [&](std::uint64_t id) {
    return static_cast<NodeID>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };

  GraphBuilder builder(static_cast<NodeID>(ids.size()));
  for (const RawEdge &e : edges) {
    builder.add_edge(local(e.u), local(e.v), e.w);
  }
  Graph g = std::move(builder).build(ParallelEdges::keep_first);

  const bool identity =
      ids.empty() || (ids.front() == 0 && ids.back() == static_cast<std::uint64_t>(ids.size() - 1));
  if (!identity) {
    g.set_original_ids(std::move(ids));
  }
  return g;
}

void write_metis(const Graph &g, std::ostream &out) {
  bool edge_weighted = false;
  bool node_weighted = false;
  for (const Weight w : g.raw_edge_weights()) {
    edge_weighted |= w != 1;
  }
  for (const Weight w : g.raw_node_weights()) {
    node_weighted |= w != 1;
  }
  out << g.n() << ' ' << g.m();
  if (edge_weighted || node_weighted) {
    out << ' ' << (node_weighted ? "1" : "") << (edge_weighted ? "1" : "0");
  }
  out << '\n';
  for (NodeID u = 0; u < g.n(); ++u) {
    bool first = true;
    auto sep = [&] {
      if (!first) {
        out << ' ';
      }
      first = false;
    };
    if (node_weighted) {
      sep();
      out << g.node_weight(u);
    }
    const auto nbrs = g.neighbors(u);
    const auto weights = g.incident_weights(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      sep();
      out << nbrs[i] + 1;
      if (edge_weighted) {
        out << ' ' << weights[i];
      }
    }
    out << '\n';
  }
}

void write_metis(const Graph &g, const std::string &path) {
  std::ofstream out(path);
  if (!out) {
    throw GraphIOError(GraphIOError::Kind::io, 0, "cannot write '" + path + "'");
  }
  write_metis(g, out);
}

void write_hmetis(const Hypergraph &h, std::ostream &out) {
  out << h.num_nets() << ' ' << h.n() << " 11\n";
  for (NetID e = 0; e < h.num_nets(); ++e) {
    out << h.net_weight(e);
    for (const NodeID p : h.pins(e)) {
      out << ' ' << p + 1;
    }
    out << '\n';
  }
  for (NodeID u = 0; u < h.n(); ++u) {
    out << h.node_weight(u) << '\n';
  }
}

} // namespace lmc
