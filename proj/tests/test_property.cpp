#include <doctest.h>

#include <random>

#include "z2norm/analyze.hpp"
#include "z2norm/families.hpp"
#include "z2norm/homology.hpp"
#include "z2norm/lgraph.hpp"
#include "z2norm/oracle.hpp"

using namespace z2norm;

// Random Pachner walks: homology matches the oracle, the transported class stays a nonzero cocycle, and the
// canonical surface satisfies the identity at every step.
TEST_CASE("random move walks preserve invariants") {
    std::mt19937 rng(8675309);
    const std::vector<Triangulation> starts{foldLst(2, 5, 2).tri, layeredLoop(5, true),
                                            seifertFamily(SeifertFamily::M, 1, 2, 1).first,
                                            seifertFamily(SeifertFamily::P, 1).first};
    for (const auto& start : starts) {
        Triangulation t = start;
        Cocycle phi = nonzeroClasses(cocycleBasis(t)).at(0);
        const oracle::H1 h = oracle::firstHomology(t);
        int applied = 0;
        for (int step = 0; step < 40; ++step) {
            const Skeleton sk(t);
            const int kind = static_cast<int>(rng() % 3);
            MoveSpec spec;
            spec.kind = kind == 0 ? MoveKind::Move23 : (kind == 1 ? MoveKind::Move32 : MoveKind::Move44);
            spec.target = static_cast<int>(rng() % static_cast<unsigned>(kind == 0 ? sk.faceCount() : sk.edgeCount()));
            spec.axis = static_cast<int>(rng() % 2);
            if (spec.kind == MoveKind::Move23 && t.size() > start.size() + 4) continue;
            MoveResult r;
            try {
                r = applyMove(t, spec);
            } catch (const DomainError&) {
                continue;
            }
            phi = transportCocycle(t, phi, r);
            t = r.tri;
            ++applied;
            const oracle::H1 now = oracle::firstHomology(t);
            CHECK(now.torsion == h.torsion);
            CHECK(now.betti == h.betti);
            const Skeleton after(t);
            CHECK(isCocycle(t, after, phi));
            CHECK_FALSE(phi.isZero());
            const BoundReport b = fundamentalReport(t, phi);
            CHECK(b.identityLhs == b.identityRhs);
            CHECK(b.chi == chiFormula(b.census));
        }
        CHECK(applied > 5);
    }
}
