#include <doctest.h>

#include "z2norm/families.hpp"
#include "z2norm/homology.hpp"
#include "z2norm/layered.hpp"
#include "z2norm/lgraph.hpp"
#include "z2norm/oracle.hpp"
#include "z2norm/skeleton.hpp"

using namespace z2norm;

namespace {

std::vector<std::int64_t> factors(const Triangulation& t) { return firstHomology(t).invariantFactors; }

}  // namespace

TEST_CASE("layered solid torus size follows the L-graph depth") {
    CHECK(layeredSolidTorus(1, 2).tri.size() == 1);
    CHECK(layeredSolidTorus(1, 3).tri.size() == 2);
    CHECK(layeredSolidTorus(2, 3).tri.size() == 2);
    CHECK(layeredSolidTorus(3, 5).tri.size() == 3);
    CHECK(layeredSolidTorus(5, 8).tri.size() == 4);
    CHECK(layeredSolidTorus(1, 10).tri.size() == 9);
    for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 2}, {2, 5}, {3, 8}, {7, 10}})
        CHECK(lgraphDepth(p, q) == layeredSolidTorus(p, q).tri.size());
}

TEST_CASE("layered solid torus rejects bad parameters") {
    CHECK_THROWS_AS(layeredSolidTorus(2, 4), DomainError);
    CHECK_THROWS_AS(layeredSolidTorus(4, 6), DomainError);
    CHECK_THROWS_AS(layeredSolidTorus(0, 1), DomainError);
}

TEST_CASE("layering adds one tetrahedron and a boundary edge of weight p+q") {
    const auto lst = layeredSolidTorus(2, 3);
    const Triangulation grown = layerOnEdge(lst.tri, lst.meta.boundaryEdges[0]);
    CHECK(grown.size() == 3);
    const auto w = meridianWeightsFromHomology(grown);
    const auto bt = boundaryTorus(grown, Skeleton(grown));
    std::vector<std::int64_t> ws;
    for (int e : bt.edges) ws.push_back(w[e]);
    std::sort(ws.begin(), ws.end());
    CHECK(ws == std::vector<std::int64_t>{3, 5, 8});
}

TEST_CASE("folding lst(1,2)") {
    CHECK(factors(foldLst(1, 2, 1).tri) == std::vector<std::int64_t>{5});
    CHECK(factors(foldLst(1, 2, 2).tri) == std::vector<std::int64_t>{4});
    CHECK(factors(foldLst(1, 2, 3).tri).empty());
}

TEST_CASE("fold records match homology") {
    for (const auto& node : lgraph(6)) {
        for (std::int64_t w : {node.p, node.q, node.p + node.q}) {
            const FoldedLens f = foldLst(node.p, node.q, w);
            const std::int64_t predicted = (w == node.p) ? node.p + 2 * node.q
                                           : (w == node.q) ? 2 * node.p + node.q
                                                           : node.q - node.p;
            CHECK(f.record.lensA == predicted);
            CHECK(oracle::firstHomology(f.tri).order() == predicted);
            CHECK(f.tri.size() == node.depth);
        }
    }
}

TEST_CASE("L-graph breadth first order and deficiency") {
    const auto nodes = lgraph(3);
    REQUIRE(nodes.size() == 7);
    CHECK(nodes[0].p == 1);
    CHECK(nodes[0].q == 2);
    CHECK(nodes[1].q == 3);
    CHECK(nodes[2].p == 2);
    CHECK(nodes[2].q == 3);
    CHECK(lgraph(10).size() == 1023);
    for (const auto& n : lgraph(8)) {
        CHECK(n.eBar + n.oBar == n.depth + 2);
        CHECK(n.deficiency == n.oBar - n.eBar);
        CHECK(n.deficiency >= 0);
    }
    CHECK(lgraphNode(1, 2).deficiency == 1);
    CHECK(lgraphNode(1, 3).deficiency == 0);
}

TEST_CASE("minimal lens families have the advertised census") {
    const auto items = enumerateMinimalLensFamilies(7);
    REQUIRE_FALSE(items.empty());
    for (const auto& it : items) {
        const auto& c = it.census;
        switch (it.pattern) {
            case LensPattern::Balanced: CHECK(c.eCount == c.oCount); break;
            case LensPattern::E3OneE5One:
                CHECK(c.evenOfDegree(3) == 1);
                CHECK(c.evenOfDegree(5) == 1);
                break;
            case LensPattern::E3TwoE6One:
                CHECK(c.evenOfDegree(3) == 2);
                CHECK(c.evenOfDegree(6) == 1);
                break;
        }
        CHECK(it.fold.foldEdgeWeight % 2 == 0);
    }
}

TEST_CASE("twisted layered loops are quaternionic") {
    CHECK(factors(layeredLoop(3, true)) == std::vector<std::int64_t>{4});
    CHECK(factors(layeredLoop(4, true)) == std::vector<std::int64_t>{2, 2});
    CHECK(factors(layeredLoop(5, true)) == std::vector<std::int64_t>{4});
    CHECK(factors(layeredLoop(6, true)) == std::vector<std::int64_t>{2, 2});
    CHECK(Skeleton(layeredLoop(5, true)).vertexCount() == 1);
}

TEST_CASE("Seifert families") {
    struct Row {
        SeifertFamily f;
        int k, m, n;
        int tets;
        std::vector<std::int64_t> h1;
    };
    const std::vector<Row> rows{
        {SeifertFamily::M, 1, 1, 1, 8, {3, 18}},
        {SeifertFamily::M, 1, 1, 2, 10, {84}},
        {SeifertFamily::MPrime, 1, 2, 3, 15, {2, 44}},
        {SeifertFamily::P, 2, 0, 0, 9, {2, 26}},
        {SeifertFamily::Q, 4, 0, 0, 4, {2, 2}},
    };
    for (const auto& r : rows) {
        const auto [tri, params] = seifertFamily(r.f, r.k, r.m, r.n);
        CAPTURE(toString(r.f));
        CHECK(tri.size() == r.tets);
        CHECK(tri.isClosed());
        CHECK(Skeleton(tri).vertexCount() == 1);
        CHECK(factors(tri) == r.h1);
        CHECK(params.predicted == firstHomology(tri));
        CHECK(seifertHomology(params.fibres) == params.predicted);
    }
}

TEST_CASE("family tags") {
    SeifertFamily f;
    CHECK(parseSeifertFamily("M'", f));
    CHECK((f == SeifertFamily::MPrime));
    CHECK(parseSeifertFamily("Q", f));
    CHECK_FALSE(parseSeifertFamily("R", f));
}
