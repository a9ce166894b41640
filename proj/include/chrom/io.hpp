#pragma once

#include <iosfwd>
#include <string>

#include "chrom/constructors.hpp"

namespace chrom {

/// Tensor file: either whitespace-insensitive text
///
///   n 3
///   a 2
///   1 0 0   0 1 0   0 0 1
///   2 0 0   0 0 0   0 0 5
///
/// (a matrices of n x n integers after the two header fields, '#'
/// comments to end of line), or a JSON object
/// {"n": 3, "a": 2, "slices": [[[...]]]} when the first character is '{'.
Tensor parse_tensor(std::istream& in);
Tensor parse_tensor_file(const std::string& path);

/// Graph file: first line "V E", then E lines "u v" with 0-indexed
/// vertices; '#' comments allowed.
Graph parse_graph(std::istream& in);
Graph parse_graph_file(const std::string& path);

} // namespace chrom
