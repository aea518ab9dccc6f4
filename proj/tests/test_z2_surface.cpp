#include <doctest.h>

#include "z2norm/families.hpp"
#include "z2norm/homology.hpp"
#include "z2norm/lgraph.hpp"
#include "z2norm/skeleton.hpp"
#include "z2norm/surface.hpp"
#include "z2norm/z2.hpp"

using namespace z2norm;

namespace {

std::vector<Triangulation> sample() {
    std::vector<Triangulation> out;
    for (const auto& n : lgraph(5))
        for (std::int64_t w : {n.p, n.q, n.p + n.q}) out.push_back(foldLst(n.p, n.q, w).tri);
    for (int k = 3; k <= 6; ++k) out.push_back(layeredLoop(k, true));
    out.push_back(seifertFamily(SeifertFamily::M, 1, 1, 1).first);
    out.push_back(seifertFamily(SeifertFamily::MPrime, 1, 2, 3).first);
    out.push_back(seifertFamily(SeifertFamily::P, 2).first);
    return out;
}

}  // namespace

TEST_CASE("cocycle basis has the Z2 rank") {
    for (const auto& t : sample()) {
        const Skeleton sk(t);
        const auto basis = cocycleBasis(t);
        CHECK(static_cast<int>(basis.size()) == firstHomology(t).z2Rank);
        for (const auto& c : basis) CHECK(isCocycle(t, sk, c));
        const auto all = nonzeroClasses(basis);
        CHECK(all.size() == (std::size_t{1} << basis.size()) - 1);
        for (const auto& c : all) CHECK_FALSE(c.isZero());
    }
}

TEST_CASE("tetrahedron types and census") {
    for (const auto& t : sample()) {
        const Skeleton sk(t);
        for (const auto& phi : nonzeroClasses(cocycleBasis(t))) {
            const auto types = classifyTetrahedra(sk, phi);
            const ParityCensus c = parityCensus(sk, phi);
            int nq = 0, nt = 0, n0 = 0;
            for (const auto& tc : types) {
                if (tc.type == TetType::Dq) ++nq;
                if (tc.type == TetType::Dt) ++nt;
                if (tc.type == TetType::D0) ++n0;
            }
            CHECK(nq == c.nq);
            CHECK(nt == c.nt);
            CHECK(n0 == c.n0);
            CHECK(c.eCount + c.oCount == sk.edgeCount());
            CHECK(c.nq + c.nt + c.n0 == t.size());
        }
    }
}

TEST_CASE("canonical surface Euler characteristic three ways") {
    for (const auto& t : sample()) {
        const Skeleton sk(t);
        for (const auto& phi : nonzeroClasses(cocycleBasis(t))) {
            const CanonicalSurface s = canonicalSurface(t, phi);
            CHECK(matchingViolation(t, s.coord).empty());
            CHECK(embeddabilityViolation(s.coord).empty());
            CHECK(s.chi == eulerChar(t, s.coord));
            CHECK(s.chi == chiFormula(parityCensus(sk, phi)));
            CHECK(formalChi(t, s.coord) == Rational(s.chi));
        }
    }
}

TEST_CASE("vertex link is a sphere") {
    for (const auto& t : sample()) {
        const NormalCoordinate v = vertexLink(t);
        CHECK(eulerChar(t, v) == 2);
        CHECK(formalChi(t, v) == Rational(2));
        CHECK(surfaceClassify(t, v).orientable);
    }
}

TEST_CASE("special solutions satisfy the matching equations") {
    for (const auto& t : sample()) {
        const SpecialSolutions s = specialSolutions(t);
        CHECK(static_cast<int>(s.edge.size()) == Skeleton(t).edgeCount());
        CHECK(static_cast<int>(s.tet.size()) == t.size());
        for (const auto& c : s.edge) CHECK(matchingViolation(t, c).empty());
        for (const auto& c : s.tet) CHECK(matchingViolation(t, c).empty());
    }
}

TEST_CASE("L(4,1) contains a Klein bottle") {
    const Triangulation t = foldLst(1, 2, 2).tri;
    const auto classes = nonzeroClasses(cocycleBasis(t));
    REQUIRE(classes.size() == 1);
    const CanonicalSurface s = canonicalSurface(t, classes[0]);
    const SurfaceShape shape = surfaceClassify(t, s.coord);
    CHECK(shape.chi == 0);
    CHECK_FALSE(shape.orientable);
    CHECK(shape.connected);
    CHECK(shape.discs == 1);
}

TEST_CASE("frozen census of M(1,1,1)") {
    const Triangulation t = seifertFamily(SeifertFamily::M, 1, 1, 1).first;
    const auto classes = nonzeroClasses(cocycleBasis(t));
    REQUIRE(classes.size() == 1);
    const ParityCensus c = parityCensus(Skeleton(t), classes[0]);
    CHECK(c.eCount == 5);
    CHECK(c.oCount == 4);
    CHECK(c.nq == 6);
    CHECK(c.nt == 2);
    CHECK(c.n0 == 0);
    CHECK(c.evenOfDegree(3) == 2);
    CHECK(c.evenOfDegree(4) == 3);
    CHECK(canonicalSurface(t, classes[0]).chi == -3);
}

TEST_CASE("twisted squares in the one-tetrahedron L(4,1)") {
    const auto sq = twistedSquareScan(foldLst(1, 2, 2).tri);
    REQUIRE(sq.size() == 3);
    CHECK((sq[0].kind == SquareKind::Torus));
    CHECK((sq[1].kind == SquareKind::PinchedRP2));
    CHECK((sq[2].kind == SquareKind::Klein));
}

TEST_CASE("b-modification on an all-Dq class") {
    bool found = false;
    for (const auto& t : sample()) {
        const Skeleton sk(t);
        for (const auto& phi : nonzeroClasses(cocycleBasis(t))) {
            const ParityCensus c = parityCensus(sk, phi);
            if (c.nt != 0 || c.n0 != 0) continue;
            std::vector<int> b;
            for (int e = 0; e < sk.edgeCount() && b.empty(); ++e)
                if (phi.even(e)) b.push_back(e);
            if (b.empty()) continue;
            const BModification m = bModification(t, phi, b);
            CHECK(matchingViolation(t, m.coord).empty());
            CHECK(m.chi == canonicalSurface(t, phi).chi - 2 * m.octagons + 2);
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("b-modification refuses classes with non-Dq tetrahedra") {
    const Triangulation t = seifertFamily(SeifertFamily::M, 1, 1, 1).first;
    const auto phi = nonzeroClasses(cocycleBasis(t))[0];
    CHECK_THROWS_AS(bModification(t, phi, {0}), DomainError);
}
