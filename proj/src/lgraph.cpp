#include "z2norm/lgraph.hpp"

#include <cstdlib>
#include <deque>
#include <stdexcept>

namespace z2norm {

LGraphNode lgraphNode(std::int64_t p, std::int64_t q) {
    const LayeredSolidTorus lst = layeredSolidTorus(p, q);
    LGraphNode node;
    node.p = lst.meta.p;
    node.q = lst.meta.q;
    node.depth = lst.tri.size();
    for (auto w : lst.meta.edgeWeights) (w % 2 == 0 ? node.eBar : node.oBar)++;
    node.deficiency = node.oBar - node.eBar;
    return node;
}

std::vector<LGraphNode> lgraph(int depthLimit) {
    if (depthLimit < 1) throw DomainError("lgraph: depth limit must be positive");
    std::vector<LGraphNode> out;
    std::deque<std::pair<std::int64_t, std::int64_t>> queue{{1, 2}};
    while (!queue.empty()) {
        const auto [p, q] = queue.front();
        queue.pop_front();
        out.push_back(lgraphNode(p, q));
        if (out.back().depth < depthLimit) {
            queue.emplace_back(p, p + q);
            queue.emplace_back(q, p + q);
        }
    }
    return out;
}

FoldRecord foldRecord(std::int64_t p, std::int64_t q, std::int64_t weight) {
    if (p > q) std::swap(p, q);
    FoldRecord r;
    r.foldEdgeWeight = weight;
    if (weight == p) {
        r.lensA = 2 * q + p;
        r.lensB = q;
    } else if (weight == q) {
        r.lensA = 2 * p + q;
        r.lensB = p;
    } else if (weight == p + q) {
        r.lensA = std::llabs(p - q);
        r.lensB = p;
    } else {
        throw DomainError("fold: no boundary edge of weight " + std::to_string(weight));
    }
    return r;
}

FoldedLens foldLst(std::int64_t p, std::int64_t q, std::int64_t weight) {
    const LayeredSolidTorus lst = layeredSolidTorus(p, q);
    FoldRecord rec = foldRecord(p, q, weight);
    return {foldAlongEdge(lst.tri, lst.meta.edgeWithWeight(weight)), rec};
}

const char* toString(LensPattern p) {
    switch (p) {
        case LensPattern::Balanced: return "balanced";
        case LensPattern::E3OneE5One: return "e3=1&e5=1";
        case LensPattern::E3TwoE6One: return "e3=2&e6=1";
    }
    return "?";
}

namespace {

bool onlyDegreeFourBesides(const ParityCensus& c, std::initializer_list<std::pair<int, int>> allowed) {
    int counted = 0;
    for (auto [d, n] : allowed) {
        if (c.evenOfDegree(d) != n) return false;
        counted += n;
    }
    return c.eCount == counted + c.evenOfDegree(4);
}

}  // namespace

std::vector<LensFamilyItem> enumerateMinimalLensFamilies(int depthLimit) {
    if (depthLimit < 3) throw DomainError("enumerate-lens: depth limit must be at least 3");
    std::vector<LensFamilyItem> out;
    for (const auto& node : lgraph(depthLimit)) {
        const LayeredSolidTorus lst = layeredSolidTorus(node.p, node.q);
        for (int i = 0; i < 3; ++i) {
            const int edge = lst.meta.boundaryEdges[i];
            const std::int64_t w = lst.meta.edgeWeights[edge];
            if (w % 2 != 0) continue;
            const Triangulation folded = foldAlongEdge(lst.tri, edge);
            const auto basis = cocycleBasis(folded);
            if (basis.size() != 1) throw std::logic_error("enumerate-lens: even lens space without a unique class");
            const Cocycle& phi = basis.front();

            // Folding merges the two non-fold boundary edges, so edge classes of the LST map onto the folded ones.
            const Skeleton before(lst.tri);
            const Skeleton after(folded);
            for (int t = 0; t < lst.tri.size(); ++t)
                for (int e = 0; e < 6; ++e)
                    if ((lst.meta.edgeWeights[before.edgeOf(t, e)] % 2 != 0) != phi.odd(after.edgeOf(t, e)))
                        throw std::logic_error("enumerate-lens: weight parity disagrees with the cocycle");

            const ParityCensus census = parityCensus(after, phi);
            LensFamilyItem item{node, foldRecord(node.p, node.q, w), LensPattern::Balanced, census};
            if (census.balanced())
                item.pattern = LensPattern::Balanced;
            else if (onlyDegreeFourBesides(census, {{3, 1}, {5, 1}}))
                item.pattern = LensPattern::E3OneE5One;
            else if (onlyDegreeFourBesides(census, {{3, 2}, {6, 1}}))
                item.pattern = LensPattern::E3TwoE6One;
            else
                continue;
            out.push_back(item);
        }
    }
    return out;
}

}  // namespace z2norm
