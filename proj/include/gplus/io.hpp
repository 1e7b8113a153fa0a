#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "gplus/graph.hpp"

namespace gplus {

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// graph6: N(n) followed by the upper triangle of the adjacency matrix,
// column by column, packed six bits per byte with an offset of 63.
std::string to_graph6(const LabeledGraph& g, bool header = false);
LabeledGraph from_graph6(std::string_view text);

// Undirected DOT; labels become `label` node attributes.
void write_dot(const LabeledGraph& g, std::ostream& out, std::string_view name = "G");

// CSV with header `u,v` and one 1-based edge per line.
void write_edgelist(const LabeledGraph& g, std::ostream& out);

// Accepts an optional `u,v` header, blank lines and `#` comments. The order
// is the largest index seen unless a `# n=<order>` comment raises it.
LabeledGraph read_edgelist(std::istream& in);

// Picks graph6 or edge list by extension (.g6 / .csv, .edges, .txt) and
// falls back to sniffing the first data line.
LabeledGraph read_graph_file(const std::filesystem::path& path);

}  // namespace gplus
