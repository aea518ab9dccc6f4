#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "z2norm/layered.hpp"
#include "z2norm/triangulation.hpp"
#include "z2norm/z2.hpp"

namespace z2norm {

struct LGraphNode {
    std::int64_t p = 0;
    std::int64_t q = 0;
    int depth = 0;
    int eBar = 0;  // even-weight edges of lst(p,q)
    int oBar = 0;  // odd-weight edges
    int deficiency = 0;  // oBar - eBar
};

/// Every node p/q (p < q coprime) of depth at most depthLimit, breadth first, children p/(p+q) before q/(p+q).
std::vector<LGraphNode> lgraph(int depthLimit);

/// Annotation of one node, computed from the weights of lst(p,q).
LGraphNode lgraphNode(std::int64_t p, std::int64_t q);

/// Lens space L(a, b) produced by folding.
struct FoldRecord {
    std::int64_t foldEdgeWeight = 0;
    std::int64_t lensA = 0;
    std::int64_t lensB = 0;
};

/// Lens parameters for folding T(p,q,p+q) along the boundary edge of the given weight.
FoldRecord foldRecord(std::int64_t p, std::int64_t q, std::int64_t weight);

struct FoldedLens {
    Triangulation tri;
    FoldRecord record;
};

/// Folds lst(p,q) along its boundary edge of the given weight.
FoldedLens foldLst(std::int64_t p, std::int64_t q, std::int64_t weight);

enum class LensPattern { Balanced, E3OneE5One, E3TwoE6One };

const char* toString(LensPattern p);

struct LensFamilyItem {
    LGraphNode node;
    FoldRecord fold;
    LensPattern pattern = LensPattern::Balanced;
    ParityCensus census;
};

/// Folds along every even-weight boundary edge at nodes down to depthLimit and keeps the folds whose
/// parity census (recomputed from the cocycle of the folded triangulation) is balanced or has one of the
/// two low-degree patterns. Throws std::logic_error if weight parity and cocycle parity ever disagree.
std::vector<LensFamilyItem> enumerateMinimalLensFamilies(int depthLimit);

}  // namespace z2norm
