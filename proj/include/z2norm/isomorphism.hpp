#pragma once

#include <vector>

#include "z2norm/triangulation.hpp"

namespace z2norm {

/// Canonical relabelling: the lexicographically least encoding over all starting
/// (tetrahedron, vertex permutation) pairs of a breadth-first relabelling, applied
/// componentwise with components ordered by their codes.
Triangulation canonical(const Triangulation& tri);

/// The integer code underlying canonical(); equal codes iff combinatorially isomorphic.
std::vector<int> canonicalCode(const Triangulation& tri);

bool isomorphic(const Triangulation& a, const Triangulation& b);

}  // namespace z2norm
