#include "z2norm/isomorphism.hpp"

#include <algorithm>
#include <queue>

namespace z2norm {

namespace {

struct Labelling {
    std::vector<int> code;
    std::vector<int> order;       // new index -> old tet
    std::vector<Perm4> vertexMap;  // old tet -> (old vertex -> new vertex)
};

// Breadth-first relabelling of the component containing `start`.
Labelling relabelFrom(const Triangulation& tri, int start, Perm4 startMap) {
    const int n = tri.size();
    Labelling lab;
    std::vector<int> newIndex(n, -1);
    lab.vertexMap.assign(n, Perm4());
    newIndex[start] = 0;
    lab.vertexMap[start] = startMap;
    lab.order.push_back(start);
    for (std::size_t i = 0; i < lab.order.size(); ++i) {
        const int t = lab.order[i];
        const Perm4 p = lab.vertexMap[t];
        const Perm4 pinv = p.inverse();
        for (int f = 0; f < 4; ++f) {
            const int oldF = pinv[f];
            const auto& g = tri.adjacent(t, oldF);
            if (!g) {
                lab.code.push_back(-1);
                lab.code.push_back(0);
                continue;
            }
            if (newIndex[g->tet] < 0) {
                newIndex[g->tet] = static_cast<int>(lab.order.size());
                lab.order.push_back(g->tet);
                // make the relabelled gluing the identity
                lab.vertexMap[g->tet] = p * g->perm.inverse();
            }
            const Perm4 q = lab.vertexMap[g->tet] * g->perm * pinv;
            lab.code.push_back(newIndex[g->tet]);
            lab.code.push_back(q.index());
        }
    }
    return lab;
}

std::vector<std::vector<int>> components(const Triangulation& tri) {
    const int n = tri.size();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        out.emplace_back();
        std::queue<int> q;
        q.push(s);
        comp[s] = static_cast<int>(out.size()) - 1;
        while (!q.empty()) {
            const int t = q.front();
            q.pop();
            out.back().push_back(t);
            for (int f = 0; f < 4; ++f) {
                const auto& g = tri.adjacent(t, f);
                if (g && comp[g->tet] < 0) {
                    comp[g->tet] = comp[s];
                    q.push(g->tet);
                }
            }
        }
    }
    return out;
}

Labelling bestLabelling(const Triangulation& tri, const std::vector<int>& comp) {
    Labelling best;
    bool have = false;
    for (int t : comp) {
        for (int pi = 0; pi < 24; ++pi) {
            Labelling l = relabelFrom(tri, t, Perm4::fromIndex(pi));
            if (!have || l.code < best.code) {
                best = std::move(l);
                have = true;
            }
        }
    }
    return best;
}

}  // namespace

Triangulation canonical(const Triangulation& tri) {
    std::vector<Labelling> labs;
    for (const auto& comp : components(tri)) labs.push_back(bestLabelling(tri, comp));
    std::sort(labs.begin(), labs.end(), [](const Labelling& a, const Labelling& b) {
        if (a.order.size() != b.order.size()) return a.order.size() < b.order.size();
        return a.code < b.code;
    });
    std::vector<int> newIndex(tri.size());
    std::vector<Perm4> vmap(tri.size());
    int next = 0;
    for (const auto& l : labs) {
        for (int old : l.order) {
            newIndex[old] = next++;
            vmap[old] = l.vertexMap[old];
        }
    }
    return tri.relabelled(newIndex, vmap);
}

std::vector<int> canonicalCode(const Triangulation& tri) {
    std::vector<Labelling> labs;
    for (const auto& comp : components(tri)) labs.push_back(bestLabelling(tri, comp));
    std::sort(labs.begin(), labs.end(), [](const Labelling& a, const Labelling& b) {
        if (a.order.size() != b.order.size()) return a.order.size() < b.order.size();
        return a.code < b.code;
    });
    std::vector<int> code{tri.size()};
    for (const auto& l : labs) {
        code.push_back(static_cast<int>(l.order.size()));
        code.insert(code.end(), l.code.begin(), l.code.end());
    }
    return code;
}

bool isomorphic(const Triangulation& a, const Triangulation& b) {
    if (a.size() != b.size()) return false;
    return canonicalCode(a) == canonicalCode(b);
}

}  // namespace z2norm
