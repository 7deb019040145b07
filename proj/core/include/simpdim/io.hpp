#pragma once

#include <string>
#include <vector>

#include "simpdim/complex.hpp"

namespace simpdim {

// JSON object with a "generators" array of label arrays; the complex is
// their downward closure. A "faces" array is accepted instead and is
// validated for closure. Throws std::invalid_argument on malformed input.
Complex complex_from_json(const std::string& text);

// {"faces": [...], "f_vector": [...]}; f-vector entries are JSON numbers
// when they fit in 64 bits and decimal strings otherwise.
std::string complex_to_json(const Complex& G);

// Whitespace-separated "u v" pairs, one edge per line; '#' starts a
// comment. Vertex count is 1 + max label, or the value of an optional
// leading "n <count>" line if that is larger.
Graph graph_from_edge_list(const std::string& text);

// graph6 codec. Emission supports n <= 62; parsing also accepts the
// 3- and 6-byte long forms.
Graph graph_from_graph6(const std::string& s);
std::string graph_to_graph6(const Graph& g);

std::string read_file(const std::string& path);

// One CSV record, newline included. Fields with commas, quotes, or
// newlines are quoted.
std::string csv_row(const std::vector<std::string>& fields);

}  // namespace simpdim
