#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sds/domination.hpp"
#include "sds/graph.hpp"

namespace sds::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInvalidSet = 1;
inline constexpr int kParseError = 2;
inline constexpr int kDisconnected = 3;
inline constexpr int kBudgetExceeded = 4;
inline constexpr int kInternalError = 5;

/// Entry point behind the `sds` binary. Writes results to `out` only on
/// success paths and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// "v colour" lines (colour 1, 0 or 0hat), '#' comments; unlisted vertices
/// are ZERO_HAT. Throws ParseError.
Colouring parse_colouring(std::istream& in, int n);
/// Whitespace separated 0-based vertex ids, '#' comments. Throws ParseError.
VertexSet parse_vertex_set(std::istream& in, int n);

}  // namespace sds::cli
