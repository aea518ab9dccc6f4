#include <doctest.h>

#include <set>

#include "z2norm/homology.hpp"
#include "z2norm/isomorphism.hpp"
#include "z2norm/layered.hpp"
#include "z2norm/oracle.hpp"
#include "z2norm/perm.hpp"
#include "z2norm/skeleton.hpp"
#include "z2norm/tri_io.hpp"

using namespace z2norm;

TEST_CASE("perm4 group laws") {
    std::set<std::string> seen;
    for (int i = 0; i < 24; ++i) {
        const Perm4 p = Perm4::fromIndex(i);
        CHECK(p.index() == i);
        CHECK(p.isBijective());
        CHECK((p * p.inverse()).isIdentity());
        seen.insert(p.str());
        for (int j = 0; j < 24; ++j) {
            const Perm4 q = Perm4::fromIndex(j);
            CHECK((p * q).sign() == p.sign() * q.sign());
        }
    }
    CHECK(seen.size() == 24);
    CHECK(Perm4(1, 2, 3, 0).str() == "1230");
    CHECK(Perm4(1, 2, 3, 0).sign() == -1);
    CHECK(transposition(1, 3).str() == "0321");
}

TEST_CASE("perm4 parse rejects non-bijections") {
    Perm4 p;
    CHECK(Perm4::parse("3012", p));
    CHECK(p == Perm4(3, 0, 1, 2));
    CHECK_FALSE(Perm4::parse("0012", p));
    CHECK_FALSE(Perm4::parse("012", p));
    CHECK_FALSE(Perm4::parse("0124", p));
}

TEST_CASE("edge numbering") {
    for (int e = 0; e < 6; ++e) {
        CHECK(edgeNumber(kEdgeVertices[e][0], kEdgeVertices[e][1]) == e);
        CHECK(edgeNumber(kEdgeVertices[e][1], kEdgeVertices[e][0]) == e);
        std::set<int> all{kEdgeVertices[e][0], kEdgeVertices[e][1], kEdgeVertices[oppositeEdge(e)][0],
                          kEdgeVertices[oppositeEdge(e)][1]};
        CHECK(all.size() == 4);
    }
}

TEST_CASE("tri format round trip") {
    const Triangulation lst = layeredSolidTorus(3, 5).tri;
    const std::string text = serializeTriangulation(lst);
    CHECK(parseTriangulation(text) == lst);
    CHECK(serializeTriangulation(parseTriangulation("% comment\n" + text)) == text);
}

TEST_CASE("tri parse errors carry the line") {
    auto lineOf = [](const std::string& text) {
        try {
            parseTriangulation(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(lineOf("tri 1\ntet 0: 0:1230 0:3012 0:1230 0:3012\n") == 0);
    CHECK(lineOf("tri 1\ntet 0: 0:1230 0:3012 0:2130\n") == 2);
    CHECK(lineOf("tri 1\ntet 0: 0:1230 0:3012 0:2130 0:0311\n") == 2);
    CHECK(lineOf("tri 2\ntet 0: - - - -\ntet 1: - - - 5:0123\n") == 3);
    CHECK(lineOf("banana\n") == 1);
}

TEST_CASE("join keeps gluings involutive") {
    Triangulation t(2);
    t.join(0, 0, 1, Perm4(1, 0, 2, 3));
    REQUIRE(t.adjacent(1, 1).has_value());
    CHECK(t.adjacent(1, 1)->tet == 0);
    CHECK(t.adjacent(1, 1)->perm == Perm4(1, 0, 2, 3));
    CHECK(t.isValid());
    CHECK(t.boundaryFacetCount() == 6);
    t.unjoin(1, 1);
    CHECK_FALSE(t.isGlued(0, 0));
}

TEST_CASE("skeleton of the one-tetrahedron solid torus") {
    const Triangulation t = layeredSolidTorus(1, 2).tri;
    const Skeleton sk(t);
    CHECK(t.size() == 1);
    CHECK(sk.vertexCount() == 1);
    CHECK(sk.edgeCount() == 3);
    CHECK(sk.faceCount() == 3);
    std::map<int, int> expected{{1, 1}, {2, 1}, {3, 1}};
    CHECK(sk.degreeHistogram() == expected);
    CHECK(sk.hasBoundary());
    CHECK(isOrientable(t));
}

TEST_CASE("smith normal form") {
    IntMatrix a(2, 2);
    a(0, 0) = 2;
    a(0, 1) = 4;
    a(1, 0) = 6;
    a(1, 1) = 8;
    const SmithForm s = smithNormalForm(a);
    CHECK(s.diagonal == std::vector<std::int64_t>{2, 4});
    CHECK(rankMod2(a) == 0);

    IntMatrix b(3, 3);
    for (int i = 0; i < 3; ++i) b(i, i) = (i == 0) ? 6 : (i == 1 ? 4 : 1);
    CHECK(smithNormalForm(b).diagonal == std::vector<std::int64_t>{1, 2, 12});
}

TEST_CASE("homology agrees with the independent oracle") {
    for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}, {3, 5}, {3, 7}}) {
        const Triangulation lst = layeredSolidTorus(p, q).tri;
        for (int e = 0; e < 3; ++e) {
            const Triangulation closed = foldAlongEdge(lst, boundaryTorus(lst, Skeleton(lst)).edges[e]);
            const HomologyProfile h = firstHomology(closed);
            const oracle::H1 o = oracle::firstHomology(closed);
            CHECK(h.betti == o.betti);
            std::vector<std::int64_t> nontrivial;
            for (auto f : h.invariantFactors)
                if (f > 1) nontrivial.push_back(f);
            CHECK(nontrivial == o.torsion);
        }
    }
}

TEST_CASE("solid torus meridian weights") {
    const auto lst = layeredSolidTorus(3, 5);
    const auto w = meridianWeightsFromHomology(lst.tri);
    CHECK(w[lst.meta.boundaryEdges[0]] == 3);
    CHECK(w[lst.meta.boundaryEdges[1]] == 5);
    CHECK(w[lst.meta.boundaryEdges[2]] == 8);
    CHECK(firstHomologyAny(lst.tri).betti == 1);
}

TEST_CASE("isomorphism is invariant under relabelling") {
    const Triangulation a = layeredSolidTorus(5, 8).tri;
    std::vector<int> order{3, 0, 2, 1};
    std::vector<Perm4> maps{Perm4(1, 0, 3, 2), Perm4(2, 3, 0, 1), Perm4(0, 1, 2, 3), Perm4(3, 1, 2, 0)};
    const Triangulation b = a.relabelled(order, maps);
    CHECK_FALSE(a == b);
    CHECK(isomorphic(a, b));
    CHECK(canonicalCode(a) == canonicalCode(b));
    CHECK_FALSE(isomorphic(a, layeredSolidTorus(4, 7).tri));
}
