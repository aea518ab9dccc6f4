#pragma once

#include <array>
#include <string>
#include <vector>

#include "z2norm/skeleton.hpp"
#include "z2norm/triangulation.hpp"
#include "z2norm/z2.hpp"

namespace z2norm {

enum class MoveKind { Move23, Move32, Move44 };

const char* toString(MoveKind k);

/// target is a face class for Move23 and an edge class otherwise (classes of Skeleton(tri)).
/// axis only matters for Move44: 0 makes c0-c2 the new edge, 1 makes c1-c3, where c0..c3 are the far
/// vertices of the four tetrahedra met walking around the edge from its first slot.
struct MoveSpec {
    MoveKind kind = MoveKind::Move23;
    int target = 0;
    int axis = 0;
};

/// Vertices of the ball being replaced carry abstract labels; these arrays give, per tetrahedron, the label of
/// local vertex 0..3.
struct MoveResult {
    Triangulation tri;
    std::vector<int> oldTets;
    std::vector<std::array<int, 4>> oldLabels;
    std::vector<int> newTets;  // indices in `tri`, appended after the surviving tetrahedra
    std::vector<std::array<int, 4>> newLabels;
    std::vector<int> keptIndex;  // old tetrahedron -> index in `tri`, or -1 when removed
    int newEdge = -1;  // edge class of `tri` created by Move23/Move44, -1 for Move32
};

/// Throws DomainError naming the failed precondition.
MoveResult applyMove(const Triangulation& tri, const MoveSpec& move);

inline Triangulation pachner(const Triangulation& tri, const MoveSpec& move) { return applyMove(tri, move).tri; }

/// The class of phi on the triangulation produced by a move.
Cocycle transportCocycle(const Triangulation& before, const Cocycle& phi, const MoveResult& r);

/// Tetrahedra around an edge in cyclic order, starting from its first slot, with labels 0, 1 on the edge and
/// 2 + i, 3 + i on the far edge of the i-th tetrahedron (taken mod the degree).
struct EdgeWheel {
    std::vector<int> tets;
    std::vector<std::array<int, 4>> labels;
};

/// Throws DomainError on boundary edges.
EdgeWheel edgeWheel(const Triangulation& tri, const Skeleton& sk, int edge);

}  // namespace z2norm
