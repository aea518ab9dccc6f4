#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "z2norm/skeleton.hpp"
#include "z2norm/triangulation.hpp"
#include "z2norm/z2.hpp"

namespace z2norm {

// Disc types inside one tetrahedron:
//   triangle v (v = 0..3) cuts off vertex v;
//   quad k (k = 0..2) misses edges k and 5-k, separating their endpoint pairs;
//   octagon k meets edges k and 5-k twice and the other four edges once.
// kDiscEdgeHits[type][edge] is how often a disc crosses each of the six edges; type = 0..3 triangles,
// 4..6 quads, 7..9 octagons. Every arc count and Euler characteristic below is derived from this table.
extern const std::array<std::array<int, 6>, 10> kDiscEdgeHits;

struct TetCoord {
    std::array<std::int64_t, 4> tri{};
    std::array<std::int64_t, 3> quad{};
    std::array<std::int64_t, 3> oct{};

    std::int64_t disc(int type) const;
    std::int64_t& disc(int type);
    bool operator==(const TetCoord&) const = default;
};

struct NormalCoordinate {
    std::vector<TetCoord> tets;
    bool formal = false;

    /// One line per tetrahedron: "t: a b c d | q0 q1 q2 | o0 o1 o2".
    std::string dump() const;

    NormalCoordinate operator+(const NormalCoordinate& o) const;
    NormalCoordinate operator-(const NormalCoordinate& o) const;
    NormalCoordinate scaled(std::int64_t s) const;
    bool operator==(const NormalCoordinate&) const = default;
};

/// Number of crossings of the coordinate with edge slot (tet, edge).
std::int64_t slotWeight(const NormalCoordinate& c, int tet, int edge);

/// Arcs cut off at `corner` inside facet `facet` of tetrahedron `tet`.
std::int64_t arcCount(const NormalCoordinate& c, int tet, int facet, int corner);

/// Empty string when the matching equations hold across every glued facet, otherwise the first violation.
std::string matchingViolation(const Triangulation& tri, const NormalCoordinate& c);

/// Empty string when entries are nonnegative and each tetrahedron uses at most one quad-or-octagon type.
std::string embeddabilityViolation(const NormalCoordinate& c);

struct CanonicalSurface {
    NormalCoordinate coord;
    Cocycle cls;
    std::int64_t chi = 0;
};

/// Quad dual to the even pair in each Dq tetrahedron, the vertex triangle in each Dt, nothing in D0.
CanonicalSurface canonicalSurface(const Triangulation& tri, const Cocycle& phi);

/// Euler characteristic by counting the cells of the normal decomposition. Throws DomainError on matching or
/// embeddability violations.
std::int64_t eulerChar(const Triangulation& tri, const NormalCoordinate& c);

/// (2 - 2e + n_t + 2 n_0) / 2. Throws std::logic_error when the numerator is odd.
std::int64_t chiFormula(const ParityCensus& census);

/// Vertex link: one triangle at every corner of every tetrahedron.
NormalCoordinate vertexLink(const Triangulation& tri);

struct BModification {
    NormalCoordinate coord;
    int octagons = 0;
    std::int64_t chi = 0;
};

/// Raises the weight of the even edges in `b` from 0 to 2. Requires every tetrahedron to be Dq.
/// The result's directly counted chi is checked against chi(S) - 2*octagons + 2|b|.
BModification bModification(const Triangulation& tri, const Cocycle& phi, const std::vector<int>& b);

using Rational = boost::rational<std::int64_t>;

struct SpecialSolutions {
    std::vector<NormalCoordinate> edge;  // indexed by edge class
    std::vector<NormalCoordinate> tet;   // indexed by tetrahedron
};

/// Edge and tetrahedral solutions of a closed triangulation, with negative quad entries.
SpecialSolutions specialSolutions(const Triangulation& tri);

/// Linear Euler characteristic functional: discs - arcs/2 + sum over edge crossings of 1/degree.
/// Agrees with eulerChar on embedded coordinates of closed triangulations.
Rational formalChi(const Triangulation& tri, const NormalCoordinate& c);

enum class SquareKind { PinchedRP2, Klein, Torus };

const char* toString(SquareKind k);

struct TwistedSquare {
    int tet = 0;
    int quad = 0;  // the quad type whose boundary is the square
    SquareKind kind = SquareKind::PinchedRP2;
};

/// Tetrahedra in which two pairs of opposite edges are identified.
std::vector<TwistedSquare> twistedSquareScan(const Triangulation& tri);

struct SurfaceShape {
    std::int64_t chi = 0;
    bool orientable = true;
    bool connected = true;
    int discs = 0;
};

/// Orientability and connectivity from the normal disc adjacency graph. Octagon entries must be 0 or 1.
SurfaceShape surfaceClassify(const Triangulation& tri, const NormalCoordinate& c);

}  // namespace z2norm
