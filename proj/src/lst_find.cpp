#include <algorithm>
#include <set>

#include "z2norm/analyze.hpp"
#include "z2norm/isomorphism.hpp"
#include "z2norm/layered.hpp"

namespace z2norm {

std::vector<int> LstEmbedding::ambientEdgeSet() const {
    std::set<int> s(ambientEdge.begin(), ambientEdge.end());
    return {s.begin(), s.end()};
}

namespace {

// The two boundary faces of the model, seen in the ambient triangulation, must be distinct faces.
bool embedded(const Triangulation& tri, const std::vector<int>& tets, const BoundaryTorus& bt) {
    const auto& g = tri.adjacent(tets[bt.faceA.tet], bt.faceA.facet);
    return !(g && g->tet == tets[bt.faceB.tet] && g->perm[bt.faceA.facet] == bt.faceB.facet);
}

// Edge class and direction (+1/-1) of the model edge under N's edge u->v, seen through the face glued to N.
std::pair<int, int> commonEdge(const Skeleton& sk, const FacetSlot& face, const Perm4& toNew, int u, int v) {
    const Perm4 back = toNew.inverse();
    const int a = back[u], b = back[v];
    const int slot = edgeNumber(a, b);
    return {sk.edgeOf(face.tet, slot), sk.edgeOrientation(face.tet, slot) * (a < b ? 1 : -1)};
}

std::optional<LstEmbedding> growFrom(const Triangulation& tri, const Skeleton& ambient, int seed, int f1,
                                     const Triangulation& oneTet, int limit) {
    const auto& g = tri.adjacent(seed, f1);
    Triangulation model(1);
    model.join(0, f1, 0, g->perm);
    if (!isomorphic(model, oneTet)) return std::nullopt;
    std::vector<int> tets{seed};
    if (!embedded(tri, tets, boundaryTorus(model, Skeleton(model)))) return std::nullopt;

    std::optional<EdgeSlot> baseSlot;
    while (static_cast<int>(tets.size()) < limit) {
        const Skeleton sk(model);
        const BoundaryTorus bt = boundaryTorus(model, sk);
        const auto& ga = tri.adjacent(tets[bt.faceA.tet], bt.faceA.facet);
        const auto& gb = tri.adjacent(tets[bt.faceB.tet], bt.faceB.facet);
        if (!ga || !gb || ga->tet != gb->tet) break;
        const int next = ga->tet;
        if (std::find(tets.begin(), tets.end(), next) != tets.end()) break;
        const int fa = ga->perm[bt.faceA.facet];
        const int fb = gb->perm[bt.faceB.facet];
        if (fa == fb) break;

        // A layering: the edge of the new tetrahedron shared by both glued facets lies on one boundary edge
        // class, running the same way seen from either face.
        int u = -1, v = -1;
        for (int w = 0; w < 4; ++w)
            if (w != fa && w != fb) (u < 0 ? u : v) = w;
        const auto ea = commonEdge(sk, bt.faceA, ga->perm, u, v);
        const auto eb = commonEdge(sk, bt.faceB, gb->perm, u, v);
        if (ea != eb) break;

        Triangulation grown = model;
        const int n = grown.addTetrahedron();
        grown.join(bt.faceA.tet, bt.faceA.facet, n, ga->perm);
        grown.join(bt.faceB.tet, bt.faceB.facet, n, gb->perm);
        std::vector<int> grownTets = tets;
        grownTets.push_back(next);
        if (!embedded(tri, grownTets, boundaryTorus(grown, Skeleton(grown)))) break;
        if (!baseSlot) baseSlot = sk.edge(ea.first).slots.front();
        model = std::move(grown);
        tets = std::move(grownTets);
    }

    const Skeleton sk(model);
    const BoundaryTorus bt = boundaryTorus(model, sk);
    LstEmbedding out;
    out.tets = tets;
    out.ambientEdge.resize(sk.edgeCount());
    out.localDegree.resize(sk.edgeCount());
    for (int c = 0; c < sk.edgeCount(); ++c) {
        const auto s = sk.edge(c).slots.front();
        out.ambientEdge[c] = ambient.edgeOf(tets[s.tet], s.edge);
        out.localDegree[c] = sk.degree(c);
    }
    out.weights = meridianWeightsFromHomology(model);
    out.boundary = bt.edges;
    std::array<std::int64_t, 3> w{};
    for (int i = 0; i < 3; ++i) w[i] = out.weights[bt.edges[i]];
    std::sort(w.begin(), w.end());
    out.p = w[0];
    out.q = w[1];
    for (int e : bt.edges)
        if (sk.degree(e) == 1) out.univalent = e;
    for (int c = 0; c < sk.edgeCount(); ++c)
        if (std::find(bt.edges.begin(), bt.edges.end(), c) == bt.edges.end()) out.interior.push_back(c);
    if (baseSlot) out.base = sk.edgeOf(baseSlot->tet, baseSlot->edge);
    return out;
}

std::vector<LstEmbedding> grownFromSeeds(const Triangulation& tri, int limit) {
    const Skeleton ambient(tri);
    const Triangulation oneTet = layeredSolidTorus(1, 2).tri;
    std::vector<LstEmbedding> found;
    for (int t = 0; t < tri.size(); ++t) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = tri.adjacent(t, f);
            if (!g || g->tet != t || g->perm[f] < f) continue;
            if (auto lst = growFrom(tri, ambient, t, f, oneTet, limit)) found.push_back(std::move(*lst));
        }
    }
    return found;
}

}  // namespace

std::vector<LstEmbedding> layeredSubtori(const Triangulation& tri, int tets) {
    auto found = grownFromSeeds(tri, tets);
    std::erase_if(found, [&](const LstEmbedding& l) { return static_cast<int>(l.tets.size()) != tets; });
    return found;
}

std::vector<LstEmbedding> findMaximalLsts(const Triangulation& tri) {
    auto found = grownFromSeeds(tri, tri.size());
    std::vector<std::set<int>> sets;
    for (const auto& l : found) sets.emplace_back(l.tets.begin(), l.tets.end());
    std::vector<LstEmbedding> out;
    for (std::size_t i = 0; i < found.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < found.size() && keep; ++j) {
            if (i == j) continue;
            const bool subset = std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(), sets[i].end());
            if (subset && (sets[i].size() < sets[j].size() || j < i)) keep = false;
        }
        if (keep) out.push_back(std::move(found[i]));
    }
    return out;
}

std::vector<TetType> tagLst(const Triangulation& tri, const Cocycle& phi, LstEmbedding& lst) {
    const Skeleton sk(tri);
    const auto types = classifyTetrahedra(sk, phi);
    std::set<TetType> seen;
    for (int t : lst.tets) seen.insert(types[t].type);
    if (seen.size() == 1) lst.type = *seen.begin();
    return {seen.begin(), seen.end()};
}

std::vector<std::vector<int>> lstIntersectionMatrix(const std::vector<LstEmbedding>& lsts) {
    const std::size_t n = lsts.size();
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        const auto a = lsts[i].ambientEdgeSet();
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto b = lsts[j].ambientEdgeSet();
            std::vector<int> common;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
            m[i][j] = m[j][i] = static_cast<int>(common.size());
        }
    }
    return m;
}

}  // namespace z2norm
