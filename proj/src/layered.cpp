#include "z2norm/layered.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

#include "z2norm/homology.hpp"

namespace z2norm {

BoundaryTorus::EdgeInFace BoundaryTorus::locate(const Skeleton& sk, const FacetSlot& face, int edge) const {
    const auto v = facetVertices(face.facet);
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            const int slot = edgeNumber(v[i], v[j]);
            if (sk.edgeOf(face.tet, slot) != edge) continue;
            EdgeInFace out;
            out.tail = v[i];
            out.head = v[j];
            if (sk.edgeOrientation(face.tet, slot) < 0) std::swap(out.tail, out.head);
            out.third = v[3 - i - j];
            return out;
        }
    }
    throw DomainError("edge " + std::to_string(edge) + " is not a boundary edge");
}

BoundaryTorus boundaryTorus(const Triangulation& tri, const Skeleton& sk) {
    std::vector<FacetSlot> free;
    for (int t = 0; t < tri.size(); ++t)
        for (int f = 0; f < 4; ++f)
            if (!tri.isGlued(t, f)) free.push_back({t, f});
    if (free.size() != 2) throw DomainError("boundary is not a two-triangle torus");
    auto edgesOf = [&](const FacetSlot& s) {
        const auto v = facetVertices(s.facet);
        std::array<int, 3> e{sk.edgeOf(s.tet, edgeNumber(v[0], v[1])), sk.edgeOf(s.tet, edgeNumber(v[0], v[2])),
                             sk.edgeOf(s.tet, edgeNumber(v[1], v[2]))};
        std::sort(e.begin(), e.end());
        return e;
    };
    const auto ea = edgesOf(free[0]);
    const auto eb = edgesOf(free[1]);
    if (ea != eb || ea[0] == ea[1] || ea[1] == ea[2]) throw DomainError("boundary is not a two-triangle torus");
    BoundaryTorus bt;
    bt.faceA = free[0];
    bt.faceB = free[1];
    bt.edges = ea;
    return bt;
}

int LstMeta::edgeWithWeight(std::int64_t w) const {
    for (int e : boundaryEdges)
        if (edgeWeights[e] == w) return e;
    throw DomainError("no boundary edge of weight " + std::to_string(w));
}

Triangulation layerOnEdge(const Triangulation& tri, int edge) {
    const Skeleton sk(tri);
    const BoundaryTorus bt = boundaryTorus(tri, sk);
    if (std::find(bt.edges.begin(), bt.edges.end(), edge) == bt.edges.end())
        throw DomainError("layer_on_edge: edge " + std::to_string(edge) + " is not a boundary edge");
    const auto a = bt.locate(sk, bt.faceA, edge);
    const auto b = bt.locate(sk, bt.faceB, edge);
    Triangulation out = tri;
    const int n = out.addTetrahedron();
    // New edge 01 lies on `edge`; facet 3 (012) covers face A, facet 2 (013) covers face B.
    out.join(n, 3, bt.faceA.tet, Perm4(a.tail, a.head, a.third, bt.faceA.facet));
    out.join(n, 2, bt.faceB.tet, Perm4(b.tail, b.head, bt.faceB.facet, b.third));
    return out;
}

Triangulation foldAlongEdge(const Triangulation& tri, int edge) {
    const Skeleton sk(tri);
    const BoundaryTorus bt = boundaryTorus(tri, sk);
    if (std::find(bt.edges.begin(), bt.edges.end(), edge) == bt.edges.end())
        throw DomainError("fold: edge " + std::to_string(edge) + " is not a boundary edge");
    const auto a = bt.locate(sk, bt.faceA, edge);
    const auto b = bt.locate(sk, bt.faceB, edge);
    std::array<int, 4> img{};
    img[a.tail] = b.tail;
    img[a.head] = b.head;
    img[a.third] = b.third;
    img[bt.faceA.facet] = bt.faceB.facet;
    Triangulation out = tri;
    out.join(bt.faceA.tet, bt.faceA.facet, bt.faceB.tet, Perm4::fromImages(img));
    return out;
}

namespace {

void checkLstParams(std::int64_t p, std::int64_t q) {
    if (p <= 0 || q <= 0) throw DomainError("layered solid torus: parameters must be positive");
    if (std::gcd(p, q) != 1) throw DomainError("layered solid torus: parameters are not coprime");
    if (p == 1 && q == 1) throw DomainError("layered solid torus: degenerate boundary {1,1,2} (Moebius band) rejected");
}

// Ancestors of p/q down to 1/2, ordered root-first.
std::vector<std::pair<std::int64_t, std::int64_t>> lgraphPath(std::int64_t p, std::int64_t q) {
    if (p > q) std::swap(p, q);
    std::vector<std::pair<std::int64_t, std::int64_t>> path;
    while (!(p == 1 && q == 1)) {
        path.emplace_back(p, q);
        const std::int64_t other = q - p;
        q = std::max(p, other);
        p = std::min(p, other);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

int lgraphDepth(std::int64_t p, std::int64_t q) {
    checkLstParams(p, q);
    return static_cast<int>(lgraphPath(p, q).size());
}

LayeredSolidTorus layeredSolidTorus(std::int64_t p, std::int64_t q) {
    checkLstParams(p, q);
    if (p > q) std::swap(p, q);
    const auto path = lgraphPath(p, q);

    Triangulation tri(1);
    tri.join(0, 0, 0, Perm4(1, 2, 3, 0));
    // Weights of the one-tetrahedron solid torus, keyed by a representative edge slot.
    std::map<EdgeSlot, std::int64_t> weights{{{0, 0}, 3}, {{0, 1}, 2}, {{0, 3}, 1}};
    std::optional<EdgeSlot> baseSlot;

    for (std::size_t step = 1; step < path.size(); ++step) {
        const auto [x, y] = path[step - 1];
        const auto [a, b] = path[step];
        // child x/(x+y) layers on the y edge, child y/(x+y) on the x edge
        const std::int64_t layerWeight = (a == x) ? y : x;
        const Skeleton sk(tri);
        int edge = -1;
        EdgeSlot layerSlot{};
        for (const auto& [slot, w] : weights) {
            if (w == layerWeight && sk.edge(sk.edgeOf(slot.tet, slot.edge)).boundary) {
                edge = sk.edgeOf(slot.tet, slot.edge);
                layerSlot = slot;
            }
        }
        if (edge < 0) throw std::logic_error("layered solid torus: lost track of boundary weights");
        if (!baseSlot) baseSlot = layerSlot;
        tri = layerOnEdge(tri, edge);
        weights[{tri.size() - 1, 5}] = a + b;  // the new boundary edge is 23 of the new tetrahedron
        (void)b;
    }

    const Skeleton sk(tri);
    LayeredSolidTorus out{tri, {}};
    LstMeta& m = out.meta;
    m.p = p;
    m.q = q;
    m.edgeWeights.assign(sk.edgeCount(), -1);
    for (const auto& [slot, w] : weights) m.edgeWeights[sk.edgeOf(slot.tet, slot.edge)] = w;
    for (auto w : m.edgeWeights)
        if (w < 0) throw std::logic_error("layered solid torus: untracked edge weight");
    std::array<std::int64_t, 3> target{p, q, p + q};
    for (int i = 0; i < 3; ++i) {
        m.boundaryEdges[i] = -1;
        for (int e = 0; e < sk.edgeCount(); ++e)
            if (sk.edge(e).boundary && m.edgeWeights[e] == target[i]) m.boundaryEdges[i] = e;
        if (m.boundaryEdges[i] < 0) throw std::logic_error("layered solid torus: boundary weights mismatch");
    }
    for (int e : m.boundaryEdges)
        if (sk.degree(e) == 1) m.univalentEdge = e;
    if (baseSlot) m.baseEdge = sk.edgeOf(baseSlot->tet, baseSlot->edge);
    return out;
}

std::vector<std::int64_t> meridianWeightsFromHomology(const Triangulation& solidTorus) {
    auto cls = edgeClassesInInfiniteCyclicH1(solidTorus);
    for (auto& c : cls) c = std::llabs(c);
    return cls;
}

}  // namespace z2norm
