#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pathlayout/dag.hpp"

namespace pathlayout {

// "source target" per line, whitespace separated. '#' starts a comment that
// runs to the end of the line; blank lines are skipped. Throws
// Error(kMalformedLine) with the 1-based line number, or any build_dag error.
Dag parse_edge_list(std::string_view text);

// Inverse of parse_edge_list for graphs without isolated vertices (the format
// cannot declare them); a header comment records n and m.
std::string write_edge_list(const Dag& g);

// One path per line, comma-separated vertex tokens. Lines whose first
// non-blank character is '#' are comments.
std::vector<std::vector<std::string>> parse_path_file(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace pathlayout
