#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "z2norm/moves.hpp"
#include "z2norm/skeleton.hpp"
#include "z2norm/surface.hpp"
#include "z2norm/triangulation.hpp"
#include "z2norm/z2.hpp"

namespace z2norm {

/// A layered solid torus found inside a triangulation. Edge data is indexed by the torus's own edge classes,
/// which map onto (possibly fewer) edge classes of the ambient triangulation.
struct LstEmbedding {
    std::vector<int> tets;  // ambient tetrahedra in layering order
    std::vector<int> ambientEdge;  // local edge class -> ambient edge class
    std::vector<int> localDegree;
    std::vector<std::int64_t> weights;  // meridian weight per local edge class
    std::array<int, 3> boundary{};  // local classes
    int univalent = -1;  // local class of the boundary edge of local degree one
    std::optional<int> base;  // local class layered on first
    std::vector<int> interior;  // local classes
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::optional<TetType> type;  // set by tagLst when all tetrahedra share one type

    std::vector<int> ambientEdgeSet() const;
};

/// Maximal layered solid tori, grown from every self-glued tetrahedron that is a one-tetrahedron solid torus.
std::vector<LstEmbedding> findMaximalLsts(const Triangulation& tri);

/// Embedded tori with exactly `tets` tetrahedra, one per seed that grows that far.
std::vector<LstEmbedding> layeredSubtori(const Triangulation& tri, int tets);

/// Sets `type` when every tetrahedron of the torus has the same type under phi; returns the distinct types seen.
std::vector<TetType> tagLst(const Triangulation& tri, const Cocycle& phi, LstEmbedding& lst);

/// Entry (i, j) counts ambient edge classes shared by tori i and j; the diagonal is zero.
std::vector<std::vector<int>> lstIntersectionMatrix(const std::vector<LstEmbedding>& lsts);


enum class TorusRole { Plain, Supportive, AlmostSupportive };

const char* toString(TorusRole r);

/// A maximal torus of type Dq with an even edge of degree three and every other even interior edge of degree
/// four. Supportive when its even boundary edge has degree four, almost supportive when five or more.
struct TorusFinding {
    LstEmbedding lst;
    TorusRole role = TorusRole::Plain;
    int evenBoundaryEdge = -1;  // ambient class
    bool evenEdgeIsUnivalent = false;
    bool evenEdgeInFourDistinct = false;
};

std::vector<TorusFinding> torusRoles(const Triangulation& tri, const Cocycle& phi);

int supportiveCount(const Triangulation& tri, const Cocycle& phi);

struct FlipRecord {
    int edge = -1;  // ambient class in the triangulation before the flip
    int axis = 0;
    std::vector<TetType> before;  // cyclic, starting at the tetrahedron of the torus
    std::vector<TetType> after;   // the four new tetrahedra
    int supportiveBefore = 0;
    int supportiveAfter = 0;
};

struct PromoteResult {
    Triangulation tri;
    Cocycle phi;
    std::vector<FlipRecord> log;
    std::vector<std::string> unresolved;  // supportive tori that could not be flipped away
};

/// Removes supportive tori by 4-4 flips about their even univalent edge; each flip must lower (n_0, #supportive)
/// lexicographically.
PromoteResult promote(const Triangulation& tri, const Cocycle& phi);


enum class LintStatus {
    ExceptionS3,        // degree one, homology trivial
    ExceptionSmallLens, // degree two, |H1| in {3, 4}
    Case3a,             // one tetrahedron, |H1| = 5
    Case3b,             // two tetrahedra, |H1| in {5, 7}
    Case3c,             // interior edge of an embedded T(1,3,4)
    Unexplained,
};

const char* toString(LintStatus s);

struct LintEdge {
    int edge = -1;
    int degree = 0;
    LintStatus status = LintStatus::Unexplained;
};

struct LintReport {
    std::vector<LintEdge> edges;  // every edge of degree at most three
    std::map<int, int> degreeHistogram;
    int tets = 0;
    int edgeCount = 0;
    int weightedDegreeSum = 0;  // sum over degrees i of (6 - i) E_i

    bool edgeCountIdentity() const { return edgeCount == tets + 1; }
    bool degreeIdentity() const { return weightedDegreeSum == 6; }
};

/// Requires a closed one-vertex triangulation (DomainError otherwise). Advisory on arbitrary input.
LintReport lowDegreeLint(const Triangulation& tri);

struct BoundReport {
    ParityCensus census;
    std::int64_t chi = 0;
    std::int64_t g = 0;
    int kPhi = 0;
    std::int64_t identityLhs = 0;  // 4 chi + 2T
    std::int64_t identityRhs = 0;  // 4 + sum (d - 4) e_d + n_t
    std::int64_t eq1Lhs = 0;       // e_3
    std::int64_t eq1Rhs = 0;       // 2 + sum_{j >= 5} (j - 4) e_j + 8 k_phi + n_t
    bool balanced = false;
};

/// Throws std::logic_error if the identity fails; the inequality is only evaluated.
BoundReport fundamentalReport(const Triangulation& tri, const Cocycle& phi, int kPhi = 0);

struct WheelSlot {
    int tet = -1;
    TetColouring colour;
    int torus = -1;  // index of the almost supportive torus holding this tetrahedron, or -1
};

struct CurveDisc {
    int tet = -1;
    int disc = -1;  // row of kDiscEdgeHits
};

struct CompressionPattern {
    std::string kind;  // "d6k3" or "d5k2"
    int edge = -1;
    std::vector<CurveDisc> curve;
};

/// Pattern name for a cyclic wheel of tetrahedra around an even edge with `k` almost supportive tori meeting
/// it, or empty when the wheel matches neither pattern.
std::string matchCompressionPattern(const std::vector<WheelSlot>& wheel, int k);

std::vector<CompressionPattern> compressionPatternScan(const Triangulation& tri, const Cocycle& phi);

struct CertificateClass {
    Cocycle phi;
    std::int64_t chi = 0;
    std::int64_t normBound = 0;  // -chi of the canonical surface, an upper bound for the norm
    bool balanced = false;
};

struct Certificate {
    int tets = 0;
    int z2Rank = 0;
    std::vector<CertificateClass> classes;
    std::vector<TwistedSquare> squares;
    std::string boundForm;  // "1+2n", "2+2n", "2+sum", "3+sum" or "none"
    bool familyCertified = false;
    std::string family;
};

/// `family` names a known construction ("balanced_lens", "lens", "M", "M'", "P", "Q") or is empty.
Certificate complexityCertificate(const Triangulation& tri, const std::string& family = "");

}  // namespace z2norm
