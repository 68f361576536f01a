#pragma once

#include <string>
#include <string_view>

#include "tutte/gf_matrix.hpp"
#include "tutte/graph.hpp"
#include "tutte/matroid.hpp"

namespace tutte {

// All readers throw ParseError on malformed input.

/// "p <vertices> <edges>" then one "e <u> <v>" line per edge, 0-indexed.
/// Blank lines and lines starting with 'c' or '#' are ignored.
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

/// "gf <p> <rows> <cols>" followed by rows*cols residues in row-major order.
GFMatrix parse_gf_matrix(std::string_view text);
std::string format_gf_matrix(const GFMatrix& m);

/// {"kind": ..., payload}. Kinds: uniform {r, n}; graphic {vertices, edges};
/// linear {p, rows}; sparse_paving {r, n, circuit_hyperplanes};
/// paving {r, n, blocks}; bases {r, n, bases}; lattice_path {lower, upper};
/// recipe {recipe}.
Matroid parse_matroid_json(std::string_view json);

/// JSON for the base variants; derived views are written as explicit basis
/// lists.
std::string matroid_to_json(const Matroid& m);

/// Whole file contents; throws ParseError if the file cannot be read.
std::string read_file(const std::string& path);

}  // namespace tutte
