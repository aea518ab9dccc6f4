#include "z2norm/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "z2norm/analyze.hpp"
#include "z2norm/families.hpp"
#include "z2norm/homology.hpp"
#include "z2norm/isomorphism.hpp"
#include "z2norm/layered.hpp"
#include "z2norm/lgraph.hpp"
#include "z2norm/moves.hpp"
#include "z2norm/oracle.hpp"
#include "z2norm/surface.hpp"

namespace z2norm {

std::vector<GridInstance> defaultGrid(int lensDepth) {
    std::vector<GridInstance> g;
    for (int k = 1; k <= 3; ++k)
        for (int m = 1; m <= 3; ++m)
            for (int n = 1; n <= 3; ++n) {
                const std::string kmn = std::to_string(k) + "," + std::to_string(m) + "," + std::to_string(n);
                g.push_back({"M/" + kmn, "M", seifertFamily(SeifertFamily::M, k, m, n).first});
                g.push_back({"M'/" + kmn, "M'", seifertFamily(SeifertFamily::MPrime, k, m, n).first});
            }
    for (int k = 1; k <= 4; ++k) g.push_back({"P/" + std::to_string(k), "P", seifertFamily(SeifertFamily::P, k).first});
    for (int k = 4; k <= 10; k += 2)
        g.push_back({"Q/" + std::to_string(k), "Q", seifertFamily(SeifertFamily::Q, k).first});
    for (const auto& node : lgraph(lensDepth)) {
        const LayeredSolidTorus lst = layeredSolidTorus(node.p, node.q);
        for (int e : lst.meta.boundaryEdges) {
            const auto w = lst.meta.edgeWeights[e];
            std::ostringstream key;
            key << "lens/" << node.p << "/" << node.q << "/w" << w;
            const bool balanced = node.p == 1 && w == node.q && node.q % 2 == 0;
            g.push_back({key.str(), balanced ? "balanced_lens" : "lens", foldAlongEdge(lst.tri, e)});
        }
    }
    std::sort(g.begin(), g.end(), [](const GridInstance& a, const GridInstance& b) { return a.key < b.key; });
    return g;
}

const std::vector<std::string>& acceptanceCheckNames() {
    static const std::vector<std::string> names{"lst",  "fold",     "onetet",   "balanced", "chi",    "m",        "mprime",
                                                "quaternionic", "octagon", "formal", "moves", "lsts", "identity", "lint"};
    return names;
}

namespace {

// Collects failures and keeps the first few messages.
struct Tally {
    long checked = 0;
    long failed = 0;
    std::vector<std::string> messages;

    void expect(bool ok, const std::function<std::string()>& what) {
        ++checked;
        if (ok) return;
        ++failed;
        if (messages.size() < 8) messages.push_back(what());
    }
};

std::string str(const std::vector<std::int64_t>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

const std::vector<GridInstance>& grid() {
    static const std::vector<GridInstance> g = defaultGrid();
    return g;
}

// Seeded walk of 2-3 and 4-4 moves. Uses raw engine output so the sequence is the same on every platform.
Triangulation randomWalk(Triangulation t, std::mt19937& rng, int steps) {
    for (int s = 0; s < steps; ++s) {
        const Skeleton sk(t);
        try {
            if (rng() % 2 == 0) {
                t = pachner(t, {MoveKind::Move23, static_cast<int>(rng() % sk.faceCount())});
            } else {
                std::vector<int> d4;
                for (int e = 0; e < sk.edgeCount(); ++e)
                    if (sk.degree(e) == 4) d4.push_back(e);
                if (!d4.empty())
                    t = pachner(t, {MoveKind::Move44, d4[rng() % d4.size()], static_cast<int>(rng() % 2)});
            }
        } catch (const DomainError&) {
        }
    }
    return t;
}

std::string checkLst(Tally& t) {
    const auto nodes = lgraph(12);
    int maxDepth = 0;
    for (const auto& node : nodes) {
        const LayeredSolidTorus lst = layeredSolidTorus(node.p, node.q);
        const Skeleton sk(lst.tri);
        const int k = lst.tri.size();
        maxDepth = std::max(maxDepth, k);
        t.expect(sk.vertexCount() == 1 && sk.edgeCount() == k + 2 && sk.faceCount() == 2 * k + 1, [&] {
            return "lst(" + std::to_string(node.p) + "," + std::to_string(node.q) + "): V,E,F = " +
                   std::to_string(sk.vertexCount()) + "," + std::to_string(sk.edgeCount()) + "," +
                   std::to_string(sk.faceCount());
        });
    }
    return std::to_string(nodes.size()) + " nodes to depth " + std::to_string(maxDepth);
}

std::string checkFold(Tally& t) {
    int folds = 0;
    for (const auto& node : lgraph(10)) {
        const LayeredSolidTorus lst = layeredSolidTorus(node.p, node.q);
        for (int e : lst.meta.boundaryEdges) {
            const auto w = lst.meta.edgeWeights[e];
            const FoldRecord rec = foldRecord(node.p, node.q, w);
            const Triangulation folded = foldAlongEdge(lst.tri, e);
            const auto h = oracle::firstHomology(folded);
            const auto lib = firstHomology(folded);
            ++folds;
            t.expect(h.order() == rec.lensA && h.torsion == lib.invariantFactors, [&] {
                return std::to_string(node.p) + "/" + std::to_string(node.q) + " fold w" + std::to_string(w) +
                       ": oracle |H1| " + std::to_string(h.order()) + ", expected " + std::to_string(rec.lensA) +
                       ", library " + str(lib.invariantFactors);
            });
        }
    }
    return std::to_string(folds) + " folds";
}

std::string checkOneTet(Tally& t) {
    // Fold of lst(1,2) along weights 1, 2, 3: L(5,2), L(4,1), S^3.
    const std::vector<std::pair<int, std::int64_t>> expected{{1, 5}, {2, 4}, {3, 1}};
    for (auto [w, order] : expected) {
        const auto f = foldLst(1, 2, w);
        const auto h = oracle::firstHomology(f.tri);
        t.expect(f.tri.size() == 1 && h.order() == order, [&] {
            return "fold w" + std::to_string(w) + ": |H1| " + std::to_string(h.order());
        });
    }
    return "L(5,2), L(4,1), S^3";
}

std::string checkBalanced(Tally& t) {
    for (int n = 3; n <= 12; ++n) {
        const auto f = foldLst(1, 2 * n - 2, 2 * n - 2);
        const auto basis = cocycleBasis(f.tri);
        const std::string name = "L(" + std::to_string(2 * n) + ",1)";
        t.expect(basis.size() == 1, [&] { return name + ": rank " + std::to_string(basis.size()); });
        if (basis.size() != 1) continue;
        const BoundReport r = fundamentalReport(f.tri, basis[0]);
        t.expect(f.tri.size() == 2 * n - 3 && r.census.eCount == n - 1 && r.census.oCount == n - 1 &&
                     r.chi == 2 - n && r.eq1Lhs == r.eq1Rhs && r.census.evenOfDegree(3) == 2 && r.census.nt == 0 &&
                     r.kPhi == 0,
                 [&] {
                     return name + ": tets " + std::to_string(f.tri.size()) + " e " + std::to_string(r.census.eCount) +
                            " o " + std::to_string(r.census.oCount) + " chi " + std::to_string(r.chi) + " eq1 " +
                            std::to_string(r.eq1Lhs) + " vs " + std::to_string(r.eq1Rhs);
                 });
    }
    return "n = 3..12";
}

std::string checkChi(Tally& t) {
    long classes = 0;
    for (const auto& inst : grid()) {
        const Skeleton sk(inst.tri);
        for (const auto& phi : nonzeroClasses(cocycleBasis(inst.tri))) {
            ++classes;
            const auto cs = canonicalSurface(inst.tri, phi);
            const auto formula = chiFormula(parityCensus(sk, phi));
            t.expect(eulerChar(inst.tri, cs.coord) == formula, [&] {
                return inst.key + " class " + phi.str() + ": cells " + std::to_string(eulerChar(inst.tri, cs.coord)) +
                       " formula " + std::to_string(formula);
            });
        }
    }
    return std::to_string(grid().size()) + " instances, " + std::to_string(classes) + " classes";
}

std::string checkM(Tally& t) {
    for (int k = 1; k <= 3; ++k)
        for (int m = 1; m <= 3; ++m)
            for (int n = 1; n <= 3; ++n) {
                const auto tri = seifertFamily(SeifertFamily::M, k, m, n).first;
                const auto basis = cocycleBasis(tri);
                const std::int64_t chi = basis.size() == 1 ? canonicalSurface(tri, basis[0]).chi : 0;
                t.expect(tri.size() == 2 * (k + m + n + 1) && basis.size() == 1 && firstHomology(tri).z2Rank == 1 &&
                             chi == -(k + m + n),
                         [&] {
                             return "M(" + std::to_string(k) + "," + std::to_string(m) + "," + std::to_string(n) +
                                    "): tets " + std::to_string(tri.size()) + " rank " +
                                    std::to_string(basis.size()) + " chi " + std::to_string(chi);
                         });
            }
    return "27 instances";
}

std::string checkMPrime(Tally& t) {
    for (int k = 1; k <= 3; ++k)
        for (int m = 1; m <= 3; ++m)
            for (int n = 1; n <= 3; ++n) {
                const auto tri = seifertFamily(SeifertFamily::MPrime, k, m, n).first;
                const auto classes = nonzeroClasses(cocycleBasis(tri));
                std::int64_t sum = 0;
                for (const auto& phi : classes) sum -= canonicalSurface(tri, phi).chi;
                t.expect(tri.size() == 2 * k + 2 * m + 2 * n + 3 && classes.size() == 3 &&
                             sum == 2 * (k + m + n) && tri.size() == 3 + sum,
                         [&] {
                             return "M'(" + std::to_string(k) + "," + std::to_string(m) + "," + std::to_string(n) +
                                    "): tets " + std::to_string(tri.size()) + " classes " +
                                    std::to_string(classes.size()) + " sum " + std::to_string(sum);
                         });
            }
    return "27 instances";
}

std::string checkQuaternionic(Tally& t) {
    for (int k = 4; k <= 10; k += 2) {
        const auto tri = seifertFamily(SeifertFamily::Q, k).first;
        const std::string name = "Q" + std::to_string(k);
        const auto h = oracle::firstHomology(tri);
        t.expect(tri.size() == k && h.betti == 0 && h.torsion == std::vector<std::int64_t>{2, 2},
                 [&] { return name + ": tets " + std::to_string(tri.size()) + " H1 " + str(h.torsion); });
        const Skeleton sk(tri);
        int klein = 0;
        for (const auto& phi : nonzeroClasses(cocycleBasis(tri))) {
            const auto types = classifyTetrahedra(sk, phi);
            t.expect(std::all_of(types.begin(), types.end(), [](const TetColouring& c) { return c.type == TetType::Dq; }),
                     [&] { return name + " class " + phi.str() + ": not all Dq"; });
            const SurfaceShape s = surfaceClassify(tri, canonicalSurface(tri, phi).coord);
            if (s.connected && s.chi == 0 && !s.orientable) ++klein;
        }
        t.expect(klein == 1, [&] { return name + ": " + std::to_string(klein) + " Klein bottle classes"; });
        const auto squares = twistedSquareScan(tri);
        t.expect(std::any_of(squares.begin(), squares.end(), [](const TwistedSquare& s) { return s.kind == SquareKind::Klein; }),
                 [&] { return name + ": no Klein square"; });
    }
    return "k = 4, 6, 8, 10";
}

std::string checkOctagon(Tally& t) {
    std::vector<std::pair<std::string, Triangulation>> inst;
    for (int k : {4, 6}) inst.push_back({"Q" + std::to_string(k), seifertFamily(SeifertFamily::Q, k).first});
    const std::size_t taut = inst.size();
    for (const auto& g : grid()) {
        if (g.family != "lens" && g.family != "balanced_lens") continue;
        if (g.tri.size() > 12) continue;
        const auto basis = cocycleBasis(g.tri);
        if (basis.size() != 1) continue;
        const Skeleton sk(g.tri);
        const auto types = classifyTetrahedra(sk, basis[0]);
        const auto census = parityCensus(sk, basis[0]);
        if (census.eCount > 12 ||
            !std::all_of(types.begin(), types.end(), [](const TetColouring& c) { return c.type == TetType::Dq; }))
            continue;
        inst.push_back({g.key, g.tri});
    }
    long subsets = 0;
    for (std::size_t i = 0; i < inst.size(); ++i) {
        const auto& [name, tri] = inst[i];
        for (const auto& phi : nonzeroClasses(cocycleBasis(tri))) {
            std::vector<int> even;
            for (int e = 0; e < static_cast<int>(phi.bits.size()); ++e)
                if (phi.even(e)) even.push_back(e);
            const std::int64_t base = canonicalSurface(tri, phi).chi;
            for (unsigned mask = 0; mask < (1u << even.size()); ++mask) {
                std::vector<int> b;
                for (std::size_t j = 0; j < even.size(); ++j)
                    if (mask & (1u << j)) b.push_back(even[j]);
                const BModification mod = bModification(tri, phi, b);
                const auto nb = static_cast<std::int64_t>(b.size());
                ++subsets;
                t.expect(mod.chi == base - 2 * mod.octagons + 2 * nb && (i >= taut || mod.octagons >= nb), [&] {
                    return name + " class " + phi.str() + " b-mask " + std::to_string(mask) + ": chi " +
                           std::to_string(mod.chi) + " octagons " + std::to_string(mod.octagons);
                });
            }
        }
    }
    return std::to_string(inst.size()) + " instances, " + std::to_string(subsets) + " subsets";
}

std::string checkFormal(Tally& t) {
    long count = 0;
    for (const auto& g : grid()) {
        const SpecialSolutions sol = specialSolutions(g.tri);
        for (std::size_t e = 0; e < sol.edge.size(); ++e) {
            ++count;
            t.expect(formalChi(g.tri, sol.edge[e]) == Rational(2), [&] { return g.key + " edge " + std::to_string(e); });
        }
        for (std::size_t i = 0; i < sol.tet.size(); ++i) {
            ++count;
            t.expect(formalChi(g.tri, sol.tet[i]) == Rational(1), [&] { return g.key + " tet " + std::to_string(i); });
        }
    }
    return std::to_string(count) + " solutions";
}

std::string checkMoves(Tally& t) {
    std::mt19937 rng(20240611);
    std::vector<const GridInstance*> pool;
    for (const auto& g : grid())
        if (g.tri.size() >= 2 && g.tri.size() <= 16) pool.push_back(&g);

    int sites = 0, attempts = 0;
    while (sites < 100 && attempts < 10000) {
        ++attempts;
        const GridInstance& g = *pool[rng() % pool.size()];
        const Skeleton sk(g.tri);
        MoveResult up;
        try {
            up = applyMove(g.tri, {MoveKind::Move23, static_cast<int>(rng() % sk.faceCount())});
        } catch (const DomainError&) {
            continue;
        }
        ++sites;
        const MoveResult down = applyMove(up.tri, {MoveKind::Move32, up.newEdge});
        t.expect(isomorphic(down.tri, g.tri), [&] { return g.key + ": 2-3 then 3-2 not isomorphic"; });
        const auto h0 = oracle::firstHomology(g.tri);
        for (const Triangulation* r : std::vector<const Triangulation*>{&up.tri, &down.tri})
            t.expect(oracle::firstHomology(*r).torsion == h0.torsion && isOrientable(*r) == isOrientable(g.tri),
                     [&] { return g.key + ": homology changed by 2-3/3-2"; });
    }
    t.expect(sites == 100, [&] { return "only " + std::to_string(sites) + " 2-3 sites"; });

    // 4-4 flips: homology everywhere, type patterns on even octahedra met along seeded walks.
    int flips = 0, allDq = 0, withEmpty = 0;
    std::vector<Triangulation> seeds;
    for (const auto& g : grid())
        if (g.family != "lens" || g.tri.size() <= 6) seeds.push_back(g.tri);
    for (std::size_t trial = 0; trial < 600; ++trial) {
        const Triangulation tri = randomWalk(seeds[trial % seeds.size()], rng, 1 + trial % 6);
        const Skeleton sk(tri);
        const auto h0 = oracle::firstHomology(tri);
        const auto classes = nonzeroClasses(cocycleBasis(tri));
        for (int e = 0; e < sk.edgeCount(); ++e) {
            if (sk.degree(e) != 4) continue;
            const EdgeWheel w = edgeWheel(tri, sk, e);
            if (std::set<int>(w.tets.begin(), w.tets.end()).size() != 4) continue;
            for (int axis = 0; axis < 2; ++axis) {
                const MoveResult r = applyMove(tri, {MoveKind::Move44, e, axis});
                ++flips;
                if (flips <= 400)
                    t.expect(oracle::firstHomology(r.tri).torsion == h0.torsion, [&] { return "4-4 changed homology"; });
                for (const auto& phi : classes) {
                    if (phi.odd(e)) continue;
                    const auto before = classifyTetrahedra(sk, phi);
                    std::vector<TetType> cyc;
                    for (int x : w.tets) cyc.push_back(before[x].type);
                    const Cocycle next = transportCocycle(tri, phi, r);
                    const auto after = classifyTetrahedra(Skeleton(r.tri), next);
                    std::vector<TetType> made;
                    for (int x : r.newTets) made.push_back(after[x].type);
                    std::sort(made.begin(), made.end());
                    if (std::count(cyc.begin(), cyc.end(), TetType::Dq) == 4) {
                        ++allDq;
                        t.expect(std::count(made.begin(), made.end(), TetType::Dt) == 4,
                                 [&] { return "all-Dq octahedron did not give four Dt"; });
                    }
                    // (Dq, Dt, D0, Dt) up to rotation and reflection: D0 opposite Dq, Dt on both sides.
                    for (int s = 0; s < 4; ++s)
                        if (cyc[s] == TetType::Dq && cyc[(s + 1) % 4] == TetType::Dt &&
                            cyc[(s + 2) % 4] == TetType::D0 && cyc[(s + 3) % 4] == TetType::Dt) {
                            ++withEmpty;
                            t.expect(made == std::vector<TetType>{TetType::Dq, TetType::Dq, TetType::Dt, TetType::Dt},
                                     [&] { return "(Dq,Dt,D0,Dt) octahedron gave other types"; });
                        }
                }
            }
        }
    }
    t.expect(allDq > 0, [] { return "no all-Dq even octahedron met"; });
    t.expect(withEmpty > 0, [] { return "no (Dq,Dt,D0,Dt) octahedron met"; });
    return "100 2-3 sites, " + std::to_string(flips) + " 4-4 flips, " + std::to_string(allDq) + " all-Dq, " +
           std::to_string(withEmpty) + " (Dq,Dt,D0,Dt)";
}

std::string checkLsts(Tally& t) {
    int lens = 0;
    for (const auto& node : lgraph(10)) {
        if (node.depth < 3) continue;
        for (auto w : {node.p, node.q}) {
            const auto f = foldLst(node.p, node.q, w);
            const auto lsts = findMaximalLsts(f.tri);
            ++lens;
            int common = -1;
            if (lsts.size() == 2) {
                const std::set<int> a(lsts[0].tets.begin(), lsts[0].tets.end());
                common = static_cast<int>(std::count_if(lsts[1].tets.begin(), lsts[1].tets.end(),
                                                        [&](int x) { return a.count(x) > 0; }));
            }
            t.expect(lsts.size() == 2 && common == f.tri.size() - 2, [&] {
                return "fold " + std::to_string(node.p) + "/" + std::to_string(node.q) + " w" + std::to_string(w) +
                       ": " + std::to_string(lsts.size()) + " maximal tori, common " + std::to_string(common);
            });
        }
    }
    int augmented = 0;
    for (const auto& g : grid()) {
        if (g.family != "M" && g.family != "M'") continue;
        ++augmented;
        const auto lsts = findMaximalLsts(g.tri);
        const auto m = lstIntersectionMatrix(lsts);
        int worst = 0;
        for (const auto& row : m)
            for (int x : row) worst = std::max(worst, x);
        t.expect(lsts.size() == 3 && worst <= 1, [&] {
            return g.key + ": " + std::to_string(lsts.size()) + " maximal tori, max shared " + std::to_string(worst);
        });
    }
    return std::to_string(lens) + " layered lens spaces, " + std::to_string(augmented) + " augmented";
}

std::string checkIdentity(Tally& t) {
    long pairs = 0;
    auto one = [&](const std::string& key, const Triangulation& tri, const Cocycle& phi) {
        ++pairs;
        try {
            const BoundReport r = fundamentalReport(tri, phi);
            t.expect(r.identityLhs == r.identityRhs, [&] { return key; });
        } catch (const std::logic_error& e) {
            t.expect(false, [&] { return key + ": " + e.what(); });
        }
    };
    for (const auto& g : grid())
        for (const auto& phi : nonzeroClasses(cocycleBasis(g.tri))) one(g.key, g.tri, phi);
    std::mt19937 rng(977);
    std::vector<const GridInstance*> pool;
    for (const auto& g : grid())
        if (g.tri.size() <= 12 && !cocycleBasis(g.tri).empty()) pool.push_back(&g);
    for (int i = 0; i < 200; ++i) {
        const GridInstance& g = *pool[rng() % pool.size()];
        const Triangulation tri = randomWalk(g.tri, rng, 1 + static_cast<int>(rng() % 5));
        const auto basis = cocycleBasis(tri);
        Cocycle phi;
        do {
            phi.bits.assign(basis.front().bits.size(), 0);
            for (const auto& b : basis)
                if (rng() % 2) phi = phi + b;
        } while (phi.isZero());
        one(g.key + " walk " + std::to_string(i), tri, phi);
    }
    return std::to_string(pairs) + " (T, phi) pairs";
}

std::string checkLint(Tally& t) {
    int count = 0;
    for (const auto& g : grid()) {
        if (Skeleton(g.tri).vertexCount() != 1) continue;
        ++count;
        const LintReport r = lowDegreeLint(g.tri);
        t.expect(r.degreeIdentity() && r.edgeCountIdentity(), [&] {
            return g.key + ": sum " + std::to_string(r.weightedDegreeSum) + " E " + std::to_string(r.edgeCount) +
                   " T " + std::to_string(r.tets);
        });
    }
    return std::to_string(count) + " one-vertex instances";
}

}  // namespace

std::vector<CheckResult> runAcceptance(const std::set<std::string>& only) {
    using Fn = std::string (*)(Tally&);
    static const std::vector<Fn> fns{checkLst,    checkFold,   checkOneTet, checkBalanced,     checkChi,
                                     checkM,      checkMPrime, checkQuaternionic, checkOctagon, checkFormal,
                                     checkMoves,  checkLsts,   checkIdentity, checkLint};
    const auto& names = acceptanceCheckNames();
    for (const auto& o : only)
        if (std::find(names.begin(), names.end(), o) == names.end()) throw DomainError("unknown check: " + o);
    std::vector<CheckResult> out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!only.empty() && !only.count(names[i])) continue;
        CheckResult r;
        r.id = static_cast<int>(i) + 1;
        r.name = names[i];
        Tally tally;
        const auto start = std::chrono::steady_clock::now();
        try {
            r.detail = fns[i](tally);
        } catch (const std::exception& e) {
            tally.failed++;
            tally.messages.push_back(std::string("exception: ") + e.what());
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        r.passed = tally.failed == 0;
        r.failures = tally.messages;
        if (!r.passed) r.detail += (r.detail.empty() ? "" : "; ") + std::to_string(tally.failed) + " failures";
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace z2norm
