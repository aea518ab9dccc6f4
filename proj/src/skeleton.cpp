#include "z2norm/skeleton.hpp"

#include <numeric>
#include <queue>

namespace z2norm {

namespace {

// Union-find carrying the parity of each element relative to its root.
class ParityUnionFind {
public:
    explicit ParityUnionFind(int n) : parent_(n), parity_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::pair<int, int> find(int x) {
        int p = 0;
        int r = x;
        while (parent_[r] != r) {
            p ^= parity_[r];
            r = parent_[r];
        }
        // path compression
        int cur = x;
        int curParity = p;
        while (parent_[cur] != cur) {
            const int next = parent_[cur];
            const int nextParity = curParity ^ parity_[cur];
            parent_[cur] = r;
            parity_[cur] = curParity;
            cur = next;
            curParity = nextParity;
        }
        return {r, p};
    }

    // Records parity(a) ^ parity(b) == rel. Returns false on contradiction.
    bool unite(int a, int b, int rel) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) return (pa ^ pb) == rel;
        parent_[rb] = ra;
        parity_[rb] = pa ^ pb ^ rel;
        return true;
    }

private:
    std::vector<int> parent_;
    std::vector<int> parity_;
};

}  // namespace

Skeleton::Skeleton(const Triangulation& tri) : tetCount_(tri.size()) {
    const int n = tri.size();
    edgeOf_.assign(n, {});
    edgeOrient_.assign(n, {});
    faceOf_.assign(n, {});
    vertexOf_.assign(n, {});

    ParityUnionFind edgeUf(6 * n);
    ParityUnionFind vertexUf(4 * n);
    std::vector<char> reversedRoot(6 * n, 0);

    for (int t = 0; t < n; ++t) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = tri.adjacent(t, f);
            if (!g) continue;
            for (int v = 0; v < 4; ++v)
                if (v != f) vertexUf.unite(4 * t + v, 4 * g->tet + g->perm[v], 0);
            for (int e = 0; e < 6; ++e) {
                const int a = kEdgeVertices[e][0];
                const int b = kEdgeVertices[e][1];
                if (a == f || b == f) continue;
                const int pa = g->perm[a];
                const int pb = g->perm[b];
                const int rel = pa < pb ? 0 : 1;
                if (!edgeUf.unite(6 * t + e, 6 * g->tet + edgeNumber(pa, pb), rel))
                    reversedRoot[edgeUf.find(6 * t + e).first] = 1;
            }
        }
    }

    std::vector<int> rootToClass(6 * n, -1);
    for (int t = 0; t < n; ++t) {
        for (int e = 0; e < 6; ++e) {
            auto [root, parity] = edgeUf.find(6 * t + e);
            if (rootToClass[root] < 0) {
                rootToClass[root] = static_cast<int>(edges_.size());
                edges_.emplace_back();
            }
            const int c = rootToClass[root];
            edgeOf_[t][e] = c;
            edgeOrient_[t][e] = parity == 0 ? 1 : -1;
            edges_[c].slots.push_back({t, e});
            edges_[c].orientation.push_back(edgeOrient_[t][e]);
        }
    }
    // Contradictions may have been recorded on a root that later got merged.
    for (int i = 0; i < 6 * n; ++i)
        if (reversedRoot[i]) edges_[rootToClass[edgeUf.find(i).first]].selfReversed = true;

    // The orientation of a slot is relative to the class root; normalise so the first slot is +1.
    for (auto& ec : edges_) {
        if (ec.orientation.front() == -1) {
            for (auto& o : ec.orientation) o = -o;
            for (const auto& s : ec.slots) edgeOrient_[s.tet][s.edge] = -edgeOrient_[s.tet][s.edge];
        }
    }

    std::vector<int> vRoot(4 * n, -1);
    for (int t = 0; t < n; ++t) {
        for (int v = 0; v < 4; ++v) {
            const int r = vertexUf.find(4 * t + v).first;
            if (vRoot[r] < 0) vRoot[r] = vertexCount_++;
            vertexOf_[t][v] = vRoot[r];
        }
    }

    for (int t = 0; t < n; ++t) faceOf_[t].fill(-1);
    for (int t = 0; t < n; ++t) {
        for (int f = 0; f < 4; ++f) {
            if (faceOf_[t][f] >= 0) continue;
            const int c = static_cast<int>(faces_.size());
            faces_.emplace_back();
            faces_[c].slots.push_back({t, f});
            faceOf_[t][f] = c;
            const auto& g = tri.adjacent(t, f);
            if (g) {
                const int of = g->perm[f];
                faceOf_[g->tet][of] = c;
                faces_[c].slots.push_back({g->tet, of});
            }
        }
    }

    for (int t = 0; t < n; ++t) {
        for (int f = 0; f < 4; ++f) {
            if (tri.isGlued(t, f)) continue;
            for (int e = 0; e < 6; ++e)
                if (kEdgeVertices[e][0] != f && kEdgeVertices[e][1] != f) edges_[edgeOf_[t][e]].boundary = true;
        }
    }
}

std::map<int, int> Skeleton::degreeHistogram() const {
    std::map<int, int> h;
    for (const auto& e : edges_) ++h[e.degree()];
    return h;
}

bool Skeleton::hasBoundary() const {
    for (const auto& f : faces_)
        if (f.boundary()) return true;
    return false;
}

bool Skeleton::isValid() const {
    for (const auto& e : edges_)
        if (e.selfReversed) return false;
    return true;
}

bool isOrientable(const Triangulation& tri) {
    const int n = tri.size();
    std::vector<int> orient(n, 0);
    for (int start = 0; start < n; ++start) {
        if (orient[start]) continue;
        orient[start] = 1;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            const int t = q.front();
            q.pop();
            for (int f = 0; f < 4; ++f) {
                const auto& g = tri.adjacent(t, f);
                if (!g) continue;
                // Coherently oriented neighbours are glued by odd permutations.
                const int want = -g->perm.sign() * orient[t];
                if (orient[g->tet] == 0) {
                    orient[g->tet] = want;
                    q.push(g->tet);
                } else if (orient[g->tet] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

int componentCount(const Triangulation& tri) {
    const int n = tri.size();
    std::vector<char> seen(n, 0);
    int comps = 0;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++comps;
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            const int t = q.front();
            q.pop();
            for (int f = 0; f < 4; ++f) {
                const auto& g = tri.adjacent(t, f);
                if (g && !seen[g->tet]) {
                    seen[g->tet] = 1;
                    q.push(g->tet);
                }
            }
        }
    }
    return comps;
}

}  // namespace z2norm
