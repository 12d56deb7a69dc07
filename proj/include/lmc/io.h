#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "lmc/graph.h"
#include "lmc/hypergraph.h"

namespace lmc {

enum class GraphFormat { metis, edgelist };

[[nodiscard]] GraphFormat parse_graph_format(const std::string &name);

class GraphIOError : public std::runtime_error {
public:
  enum class Kind { io, parse, integrity };

  GraphIOError(Kind kind, std::size_t line, const std::string &what);

  [[nodiscard]] Kind kind() const { return _kind; }
  // 1-based line number of the offending line, 0 when not line-specific.
  [[nodiscard]] std::size_t line() const { return _line; }

private:
  Kind _kind;
  std::size_t _line;
};

struct LoadOptions {
  // Instances are treated as unweighted: self-loops, parallel edges and
  // weights from the source are dropped unless this is set.
  bool keep_weights = false;
};

[[nodiscard]] Graph load_graph(const std::string &path, GraphFormat format, LoadOptions options = {});
[[nodiscard]] Graph read_metis(std::istream &in, LoadOptions options = {});
[[nodiscard]] Graph read_edgelist(std::istream &in, LoadOptions options = {});

// Canonical METIS writer: sorted neighbor lists, 1-based IDs, fmt flags only
// when some weight differs from 1.
void write_metis(const Graph &g, std::ostream &out);
void write_metis(const Graph &g, const std::string &path);

// hMETIS: header "nets nodes fmt", one line per net ("weight pins..."),
// followed by node weights when fmt includes 10.
void write_hmetis(const Hypergraph &h, std::ostream &out);

} // namespace lmc
