#include "z2norm/moves.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace z2norm {

const char* toString(MoveKind k) {
    switch (k) {
        case MoveKind::Move23: return "move23";
        case MoveKind::Move32: return "move32";
        case MoveKind::Move44: return "move44";
    }
    return "?";
}

EdgeWheel edgeWheel(const Triangulation& tri, const Skeleton& sk, int edge) {
    if (edge < 0 || edge >= sk.edgeCount()) throw DomainError("edge " + std::to_string(edge) + " out of range");
    if (sk.edge(edge).boundary) throw DomainError("edge " + std::to_string(edge) + " is on the boundary");
    const int d = sk.degree(edge);
    const EdgeSlot start = sk.edge(edge).slots.front();

    std::array<int, 4> lab{};
    const auto& ev = kEdgeVertices[start.edge];
    lab[ev[0]] = 0;
    lab[ev[1]] = 1;
    const auto& far = kEdgeVertices[oppositeEdge(start.edge)];
    lab[far[0]] = 2;
    lab[far[1]] = 3;

    EdgeWheel w;
    int t = start.tet;
    for (int i = 0; i < d; ++i) {
        w.tets.push_back(t);
        w.labels.push_back(lab);
        // Leave through the facet opposite the vertex labelled 2 + i.
        const int cross = static_cast<int>(std::find(lab.begin(), lab.end(), 2 + i) - lab.begin());
        const auto& g = tri.adjacent(t, cross);
        if (!g) throw DomainError("edge " + std::to_string(edge) + " touches the boundary");
        std::array<int, 4> next{-1, -1, -1, -1};
        for (int v = 0; v < 4; ++v)
            if (v != cross) next[g->perm[v]] = lab[v];
        next[g->perm[cross]] = 2 + i + 2;
        t = g->tet;
        lab = next;
    }
    // Back at the start with the far labels shifted by d.
    for (int& x : lab)
        if (x >= 2 + d) x -= d;
    if (t != start.tet || lab != w.labels.front())
        throw std::logic_error("edge wheel did not close up");
    for (auto& l : w.labels)
        for (int& x : l)
            if (x >= 2 + d) x -= d;
    return w;
}

namespace {

std::array<int, 3> facetLabels(const std::array<int, 4>& lab, int facet) {
    std::array<int, 3> out{};
    int k = 0;
    for (int v = 0; v < 4; ++v)
        if (v != facet) out[k++] = lab[v];
    std::sort(out.begin(), out.end());
    return out;
}

int localOf(const std::array<int, 4>& lab, int label) {
    return static_cast<int>(std::find(lab.begin(), lab.end(), label) - lab.begin());
}

// Replaces the tetrahedra of a labelled ball by a new labelled triangulation of the same ball.
MoveResult retriangulate(const Triangulation& tri, const std::vector<int>& oldTets,
                         const std::vector<std::array<int, 4>>& oldLabels,
                         const std::vector<std::array<int, 4>>& newLabels) {
    MoveResult r;
    r.oldTets = oldTets;
    r.oldLabels = oldLabels;
    r.newLabels = newLabels;
    r.keptIndex.assign(tri.size(), -1);
    std::vector<int> oldPos(tri.size(), -1);
    for (std::size_t i = 0; i < oldTets.size(); ++i) oldPos[oldTets[i]] = static_cast<int>(i);
    int kept = 0;
    for (int t = 0; t < tri.size(); ++t)
        if (oldPos[t] < 0) r.keptIndex[t] = kept++;
    Triangulation out(kept + static_cast<int>(newLabels.size()));
    for (std::size_t s = 0; s < newLabels.size(); ++s) r.newTets.push_back(kept + static_cast<int>(s));

    for (int t = 0; t < tri.size(); ++t) {
        if (oldPos[t] >= 0) continue;
        for (int f = 0; f < 4; ++f) {
            const auto& g = tri.adjacent(t, f);
            if (!g || oldPos[g->tet] >= 0 || out.isGlued(r.keptIndex[t], f)) continue;
            out.join(r.keptIndex[t], f, r.keptIndex[g->tet], g->perm);
        }
    }

    std::map<std::array<int, 3>, FacetSlot> oldFace;
    for (std::size_t i = 0; i < oldTets.size(); ++i)
        for (int f = 0; f < 4; ++f) {
            const auto key = facetLabels(oldLabels[i], f);
            if (oldFace.count(key)) oldFace.erase(key);  // internal to the ball
            else oldFace[key] = {static_cast<int>(i), f};
        }
    std::map<std::array<int, 3>, std::vector<FacetSlot>> newFace;
    for (std::size_t s = 0; s < newLabels.size(); ++s)
        for (int f = 0; f < 4; ++f) newFace[facetLabels(newLabels[s], f)].push_back({static_cast<int>(s), f});

    // Glue new facet (s, f) to new facet (s2, f2), matching labels through `relabel`.
    auto glueNew = [&](int s, int f, int s2, int f2, const std::map<int, int>& relabel) {
        if (out.isGlued(r.newTets[s], f)) return;
        std::array<int, 4> img{};
        for (int v = 0; v < 4; ++v)
            img[v] = (v == f) ? f2 : localOf(newLabels[s2], relabel.at(newLabels[s][v]));
        out.join(r.newTets[s], f, r.newTets[s2], Perm4::fromImages(img));
    };

    for (const auto& [key, slots] : newFace) {
        if (slots.size() == 2) {
            std::map<int, int> same;
            for (int x : key) same[x] = x;
            glueNew(slots[0].tet, slots[0].facet, slots[1].tet, slots[1].facet, same);
            continue;
        }
        const auto it = oldFace.find(key);
        if (slots.size() != 1 || it == oldFace.end()) throw std::logic_error("retriangulation has a different boundary");
        const int s = slots[0].tet, f = slots[0].facet;
        const int ot = oldTets[it->second.tet], of = it->second.facet;
        const auto& g = tri.adjacent(ot, of);
        if (!g) continue;
        const auto& oLab = oldLabels[it->second.tet];
        if (oldPos[g->tet] < 0) {
            if (out.isGlued(r.newTets[s], f)) continue;
            std::array<int, 4> img{};
            for (int v = 0; v < 4; ++v)
                img[v] = (v == f) ? g->perm[of] : g->perm[localOf(oLab, newLabels[s][v])];
            out.join(r.newTets[s], f, r.keptIndex[g->tet], Perm4::fromImages(img));
        } else {
            // Two boundary faces of the ball glued to each other.
            const auto& pLab = oldLabels[oldPos[g->tet]];
            std::map<int, int> relabel;
            for (int x : key) relabel[x] = pLab[g->perm[localOf(oLab, x)]];
            const auto pkey = facetLabels(pLab, g->perm[of]);
            const auto& ps = newFace.at(pkey);
            if (ps.size() != 1) throw std::logic_error("retriangulation lost a boundary face");
            glueNew(s, f, ps[0].tet, ps[0].facet, relabel);
        }
    }
    if (!out.isValid()) throw std::logic_error("move produced invalid gluings: " + out.validationError());
    r.tri = std::move(out);
    return r;
}

int edgeWithLabels(const MoveResult& r, int a, int b) {
    const Skeleton sk(r.tri);
    for (std::size_t s = 0; s < r.newLabels.size(); ++s) {
        const int u = localOf(r.newLabels[s], a), v = localOf(r.newLabels[s], b);
        if (u < 4 && v < 4) return sk.edgeOf(r.newTets[s], edgeNumber(u, v));
    }
    return -1;
}

std::vector<int> requireDistinct(const std::vector<int>& tets, const std::string& what) {
    if (std::set<int>(tets.begin(), tets.end()).size() != tets.size())
        throw DomainError(what + ": the tetrahedra involved are not distinct");
    return tets;
}

}  // namespace

MoveResult applyMove(const Triangulation& tri, const MoveSpec& move) {
    const Skeleton sk(tri);
    switch (move.kind) {
        case MoveKind::Move23: {
            if (move.target < 0 || move.target >= sk.faceCount())
                throw DomainError("move23: face " + std::to_string(move.target) + " out of range");
            const auto& fc = sk.faces()[move.target];
            if (fc.boundary()) throw DomainError("move23: face is on the boundary");
            const auto [t0, f0] = fc.slots[0];
            const auto& g = tri.adjacent(t0, f0);
            requireDistinct({t0, g->tet}, "move23");
            // Face vertices 0, 1, 2; apex 3 on the first side, 4 on the second.
            std::array<int, 4> l0{}, l1{};
            int k = 0;
            for (int v = 0; v < 4; ++v) l0[v] = (v == f0) ? 3 : k++;
            for (int v = 0; v < 4; ++v) l1[g->perm[v]] = (v == f0) ? 4 : l0[v];
            MoveResult r = retriangulate(tri, {t0, g->tet}, {l0, l1}, {{3, 4, 0, 1}, {3, 4, 1, 2}, {3, 4, 2, 0}});
            r.newEdge = edgeWithLabels(r, 3, 4);
            return r;
        }
        case MoveKind::Move32:
        case MoveKind::Move44: {
            const bool is32 = move.kind == MoveKind::Move32;
            const std::string name = toString(move.kind);
            if (move.target < 0 || move.target >= sk.edgeCount())
                throw DomainError(name + ": edge " + std::to_string(move.target) + " out of range");
            const int want = is32 ? 3 : 4;
            if (sk.degree(move.target) != want)
                throw DomainError(name + ": edge " + std::to_string(move.target) + " has degree " +
                                  std::to_string(sk.degree(move.target)) + ", need " + std::to_string(want));
            const EdgeWheel w = edgeWheel(tri, sk, move.target);
            requireDistinct(w.tets, name);
            if (is32) return retriangulate(tri, w.tets, w.labels, {{2, 3, 4, 0}, {2, 3, 4, 1}});
            if (move.axis != 0 && move.axis != 1) throw DomainError("move44: axis must be 0 or 1");
            const int x = 2 + move.axis, y = 4 + move.axis;
            const int p = 3 - move.axis, q = p + 2;
            MoveResult r = retriangulate(tri, w.tets, w.labels, {{x, y, 0, p}, {x, y, p, 1}, {x, y, 1, q}, {x, y, q, 0}});
            r.newEdge = edgeWithLabels(r, x, y);
            return r;
        }
    }
    throw DomainError("unknown move");
}

Cocycle transportCocycle(const Triangulation& before, const Cocycle& phi, const MoveResult& r) {
    const Skeleton sb(before);
    const Skeleton sa(r.tri);
    Cocycle out;
    out.bits.assign(sa.edgeCount(), 2);  // 2 = unknown
    for (int t = 0; t < before.size(); ++t) {
        if (r.keptIndex[t] < 0) continue;
        for (int e = 0; e < 6; ++e) out.bits[sa.edgeOf(r.keptIndex[t], e)] = phi.bits[sb.edgeOf(t, e)];
    }
    // Parity of every label pair seen in the old ball, then paths through it for new pairs.
    std::map<std::pair<int, int>, std::uint8_t> known;
    for (std::size_t i = 0; i < r.oldTets.size(); ++i)
        for (int e = 0; e < 6; ++e) {
            int a = r.oldLabels[i][kEdgeVertices[e][0]], b = r.oldLabels[i][kEdgeVertices[e][1]];
            known[{std::min(a, b), std::max(a, b)}] = phi.bits[sb.edgeOf(r.oldTets[i], e)];
        }
    auto parity = [&](int a, int b) -> std::uint8_t {
        std::map<int, std::uint8_t> dist{{a, 0}};
        std::deque<int> queue{a};
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop_front();
            if (x == b) return dist[x];
            for (const auto& [pr, bit] : known) {
                int y = -1;
                if (pr.first == x) y = pr.second;
                else if (pr.second == x) y = pr.first;
                if (y >= 0 && !dist.count(y)) {
                    dist[y] = dist[x] ^ bit;
                    queue.push_back(y);
                }
            }
        }
        throw std::logic_error("transportCocycle: labels not connected");
    };
    for (std::size_t s = 0; s < r.newTets.size(); ++s)
        for (int e = 0; e < 6; ++e) {
            auto& bit = out.bits[sa.edgeOf(r.newTets[s], e)];
            const std::uint8_t v = parity(r.newLabels[s][kEdgeVertices[e][0]], r.newLabels[s][kEdgeVertices[e][1]]);
            if (bit != 2 && bit != v) throw std::logic_error("transportCocycle: inconsistent parity");
            bit = v;
        }
    if (std::count(out.bits.begin(), out.bits.end(), 2) != 0 || !isCocycle(r.tri, sa, out))
        throw std::logic_error("transportCocycle: result is not a cocycle");
    return out;
}

}  // namespace z2norm
