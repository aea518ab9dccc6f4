#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "z2norm/skeleton.hpp"
#include "z2norm/triangulation.hpp"

namespace z2norm {

/// The two boundary triangles of a one-vertex torus boundary, with the position of each
/// boundary edge class inside each triangle.
struct BoundaryTorus {
    FacetSlot faceA;
    FacetSlot faceB;
    std::array<int, 3> edges{};  // the three boundary edge classes

    /// Tail, head (in class direction) and third vertex of edge class `edge` inside the given face.
    struct EdgeInFace {
        int tail = 0;
        int head = 0;
        int third = 0;
    };
    EdgeInFace locate(const Skeleton& sk, const FacetSlot& face, int edge) const;
};

/// Finds the boundary torus; throws DomainError unless the boundary is exactly two
/// triangles sharing the same three edge classes.
BoundaryTorus boundaryTorus(const Triangulation& tri, const Skeleton& sk);

/// Metadata of a layered solid torus T(p, q, p+q).
struct LstMeta {
    std::int64_t p = 0;  // p < q
    std::int64_t q = 0;
    /// Meridian weight per edge class of the solid torus.
    std::vector<std::int64_t> edgeWeights;
    /// Boundary edge classes carrying weights p, q, p+q in that order.
    std::array<int, 3> boundaryEdges{};
    int univalentEdge = -1;
    std::optional<int> baseEdge;

    int edgeWithWeight(std::int64_t w) const;
};

struct LayeredSolidTorus {
    Triangulation tri;
    LstMeta meta;
};

/// Layered solid torus with boundary weights {p, q, p+q}, built along the minimal L-graph path.
/// Throws DomainError when gcd(p,q) != 1 or {p,q} = {1,1}.
LayeredSolidTorus layeredSolidTorus(std::int64_t p, std::int64_t q);

/// Number of tetrahedra of the minimal layered solid torus with boundary {p, q, p+q} (its L-graph depth).
int lgraphDepth(std::int64_t p, std::int64_t q);

/// Layers a new tetrahedron on boundary edge class `edge`; the result has one more tetrahedron.
Triangulation layerOnEdge(const Triangulation& tri, int edge);

/// Folds the two boundary triangles onto each other, fixing boundary edge class `edge`.
Triangulation foldAlongEdge(const Triangulation& tri, int edge);

/// Meridian weights recomputed from homology: |class of each edge in H1(solid torus) = Z|.
std::vector<std::int64_t> meridianWeightsFromHomology(const Triangulation& solidTorus);

}  // namespace z2norm
