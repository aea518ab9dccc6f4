#include <algorithm>
#include <set>

#include "z2norm/analyze.hpp"

namespace z2norm {

const char* toString(TorusRole r) {
    switch (r) {
        case TorusRole::Plain: return "plain";
        case TorusRole::Supportive: return "supportive";
        case TorusRole::AlmostSupportive: return "almost_supportive";
    }
    return "?";
}

std::vector<TorusFinding> torusRoles(const Triangulation& tri, const Cocycle& phi) {
    const Skeleton sk(tri);
    std::vector<TorusFinding> out;
    for (auto& lst : findMaximalLsts(tri)) {
        tagLst(tri, phi, lst);
        TorusFinding f;
        f.lst = lst;
        if (lst.type != TetType::Dq) {
            out.push_back(std::move(f));
            continue;
        }
        std::vector<int> evenBoundary;
        for (int c : lst.boundary)
            if (phi.even(lst.ambientEdge[c])) evenBoundary.push_back(c);
        int degreeThree = 0;
        bool interiorFour = true;
        for (int c : lst.interior) {
            const int a = lst.ambientEdge[c];
            if (phi.odd(a)) continue;
            if (sk.degree(a) == 3) ++degreeThree;
            else if (sk.degree(a) != 4) interiorFour = false;
        }
        if (evenBoundary.size() == 1) {
            const int c = evenBoundary.front();
            f.evenBoundaryEdge = lst.ambientEdge[c];
            f.evenEdgeIsUnivalent = c == lst.univalent;
            const int d = sk.degree(f.evenBoundaryEdge);
            if (d == 3) ++degreeThree;
            if (d == 4) {
                const EdgeWheel w = edgeWheel(tri, sk, f.evenBoundaryEdge);
                f.evenEdgeInFourDistinct = std::set<int>(w.tets.begin(), w.tets.end()).size() == 4;
            }
            if (degreeThree == 1 && interiorFour) {
                if (d == 4) f.role = TorusRole::Supportive;
                else if (d >= 5) f.role = TorusRole::AlmostSupportive;
            }
        }
        out.push_back(std::move(f));
    }
    return out;
}

int supportiveCount(const Triangulation& tri, const Cocycle& phi) {
    const auto roles = torusRoles(tri, phi);
    return static_cast<int>(std::count_if(roles.begin(), roles.end(),
                                          [](const TorusFinding& f) { return f.role == TorusRole::Supportive; }));
}

namespace {

int emptyCount(const Triangulation& tri, const Cocycle& phi) {
    const auto types = classifyTetrahedra(Skeleton(tri), phi);
    return static_cast<int>(std::count_if(types.begin(), types.end(),
                                          [](const TetColouring& c) { return c.type == TetType::D0; }));
}

}  // namespace

PromoteResult promote(const Triangulation& tri, const Cocycle& phi) {
    PromoteResult res{tri, phi, {}, {}};
    // The measure (n_0, #supportive) strictly drops with each accepted flip, so this bound is never reached on
    // honest input; it guards against a broken measure.
    const int cap = 4 * (tri.size() + 1) * (tri.size() + 1);
    for (int round = 0; round < cap; ++round) {
        const auto roles = torusRoles(res.tri, res.phi);
        const int supportive = static_cast<int>(std::count_if(
            roles.begin(), roles.end(), [](const TorusFinding& f) { return f.role == TorusRole::Supportive; }));
        if (supportive == 0) return res;
        const int n0 = emptyCount(res.tri, res.phi);
        const Skeleton sk(res.tri);
        const auto types = classifyTetrahedra(sk, res.phi);

        bool flipped = false;
        res.unresolved.clear();
        for (const auto& f : roles) {
            if (f.role != TorusRole::Supportive) continue;
            const std::string where = "torus on tetrahedra starting " + std::to_string(f.lst.tets.front()) +
                                      ", even edge " + std::to_string(f.evenBoundaryEdge);
            if (!f.evenEdgeIsUnivalent || !f.evenEdgeInFourDistinct) {
                res.unresolved.push_back(where + ": even edge is not univalent in four distinct tetrahedra");
                continue;
            }
            const EdgeWheel w = edgeWheel(res.tri, sk, f.evenBoundaryEdge);
            std::vector<TetType> before;
            const auto start = std::find_if(w.tets.begin(), w.tets.end(), [&](int t) {
                return std::find(f.lst.tets.begin(), f.lst.tets.end(), t) != f.lst.tets.end();
            });
            const auto off = static_cast<std::size_t>(start - w.tets.begin());
            for (std::size_t i = 0; i < 4; ++i) before.push_back(types[w.tets[(off + i) % 4]].type);
            for (int axis = 0; axis < 2 && !flipped; ++axis) {
                const MoveResult r = applyMove(res.tri, {MoveKind::Move44, f.evenBoundaryEdge, axis});
                const Cocycle next = transportCocycle(res.tri, res.phi, r);
                const int n0After = emptyCount(r.tri, next);
                const int supAfter = supportiveCount(r.tri, next);
                if (std::pair(n0After, supAfter) >= std::pair(n0, supportive)) continue;
                FlipRecord rec{f.evenBoundaryEdge, axis, before, {}, supportive, supAfter};
                const auto after = classifyTetrahedra(Skeleton(r.tri), next);
                for (int t : r.newTets) rec.after.push_back(after[t].type);
                res.log.push_back(rec);
                res.tri = r.tri;
                res.phi = next;
                flipped = true;
            }
            if (flipped) break;
            res.unresolved.push_back(where + ": neither 4-4 flip lowers the measure");
        }
        if (!flipped) return res;
    }
    throw std::logic_error("promote: flip budget exhausted");
}

}  // namespace z2norm
