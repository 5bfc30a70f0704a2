#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bcfusion/fusion.hpp"

namespace bcfusion {

/// Searches for a bijection f with b(f(i), f(j)) == a(i, j) for all i, j,
/// honoring the given (a-vertex, b-vertex) pins. Vertex classes are first
/// split by iterated neighborhood refinement, then matched by backtracking.
/// Returns f as a vector indexed by a-vertices.
std::optional<std::vector<std::size_t>> find_graph_isomorphism(
    const IntMatrix& a, const IntMatrix& b, const std::vector<std::pair<std::size_t, std::size_t>>& pins = {});

/// True when b(f(i), f(j)) == a(i, j) for all i, j.
bool is_graph_isomorphism(const IntMatrix& a, const IntMatrix& b, const std::vector<std::size_t>& f);

}  // namespace bcfusion
