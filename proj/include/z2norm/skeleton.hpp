#pragma once

#include <array>
#include <map>
#include <vector>

#include "z2norm/triangulation.hpp"

namespace z2norm {

/// One of the six edges of a particular tetrahedron.
struct EdgeSlot {
    int tet = 0;
    int edge = 0;  // 0..5, see kEdgeVertices

    auto operator<=>(const EdgeSlot&) const = default;
};

struct FacetSlot {
    int tet = 0;
    int facet = 0;

    auto operator<=>(const FacetSlot&) const = default;
};

struct EdgeClass {
    std::vector<EdgeSlot> slots;
    /// +1 if the slot's low-to-high vertex direction agrees with the class direction, -1 otherwise.
    std::vector<int> orientation;
    bool boundary = false;
    /// The class is identified with itself in reverse; only possible in invalid triangulations.
    bool selfReversed = false;

    int degree() const { return static_cast<int>(slots.size()); }
};

struct FaceClass {
    std::vector<FacetSlot> slots;  // one (boundary) or two
    bool boundary() const { return slots.size() == 1; }
};

/// Identification classes of vertices, edges and faces of a triangulation.
class Skeleton {
public:
    explicit Skeleton(const Triangulation& tri);

    int vertexCount() const { return vertexCount_; }
    int edgeCount() const { return static_cast<int>(edges_.size()); }
    int faceCount() const { return static_cast<int>(faces_.size()); }
    int tetCount() const { return tetCount_; }

    const std::vector<EdgeClass>& edges() const { return edges_; }
    const EdgeClass& edge(int e) const { return edges_.at(e); }
    const std::vector<FaceClass>& faces() const { return faces_; }

    int edgeOf(int tet, int edge) const { return edgeOf_[tet][edge]; }
    int edgeOrientation(int tet, int edge) const { return edgeOrient_[tet][edge]; }
    int faceOf(int tet, int facet) const { return faceOf_[tet][facet]; }
    int vertexOf(int tet, int vertex) const { return vertexOf_[tet][vertex]; }

    int degree(int e) const { return edges_.at(e).degree(); }
    /// Number of edges of each degree, indexed by degree.
    std::map<int, int> degreeHistogram() const;

    bool hasBoundary() const;
    bool isValid() const;  // no edge identified with itself in reverse

private:
    int tetCount_ = 0;
    int vertexCount_ = 0;
    std::vector<EdgeClass> edges_;
    std::vector<FaceClass> faces_;
    std::vector<std::array<int, 6>> edgeOf_;
    std::vector<std::array<int, 6>> edgeOrient_;
    std::vector<std::array<int, 4>> faceOf_;
    std::vector<std::array<int, 4>> vertexOf_;
};

/// Consistent orientation exists for all tetrahedra (per connected component).
bool isOrientable(const Triangulation& tri);

/// Number of connected components of the dual graph.
int componentCount(const Triangulation& tri);

}  // namespace z2norm
