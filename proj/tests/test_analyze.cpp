#include <doctest.h>

#include "z2norm/analyze.hpp"
#include "z2norm/families.hpp"
#include "z2norm/homology.hpp"
#include "z2norm/isomorphism.hpp"
#include "z2norm/lgraph.hpp"

using namespace z2norm;

namespace {

Triangulation family(SeifertFamily f, int k, int m = 0, int n = 0) { return seifertFamily(f, k, m, n).first; }

Cocycle firstClass(const Triangulation& t) { return nonzeroClasses(cocycleBasis(t)).at(0); }

}  // namespace

TEST_CASE("maximal layered solid tori in M(1,1,1)") {
    const Triangulation t = family(SeifertFamily::M, 1, 1, 1);
    const auto lsts = findMaximalLsts(t);
    REQUIRE(lsts.size() == 3);
    CHECK(lsts[0].tets == std::vector<int>{3, 4});
    CHECK(lsts[0].p == 1);
    CHECK(lsts[0].q == 3);
    const auto matrix = lstIntersectionMatrix(lsts);
    for (std::size_t i = 0; i < lsts.size(); ++i) {
        CHECK(matrix[i][i] == 0);
        for (std::size_t j = 0; j < lsts.size(); ++j) CHECK(matrix[i][j] == matrix[j][i]);
    }
}

TEST_CASE("a layered solid torus inside itself") {
    for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 5}, {3, 5}}) {
        const auto lst = layeredSolidTorus(p, q);
        const auto found = findMaximalLsts(lst.tri);
        REQUIRE(found.size() == 1);
        CHECK(found[0].p == p);
        CHECK(found[0].q == q);
        CHECK(static_cast<int>(found[0].tets.size()) == lst.tri.size());
    }
}

TEST_CASE("2-3 then 3-2 is the identity up to isomorphism") {
    const Triangulation t = family(SeifertFamily::M, 1, 1, 1);
    const Skeleton sk(t);
    int tried = 0;
    for (int f = 0; f < sk.faceCount(); ++f) {
        MoveResult r;
        try {
            r = applyMove(t, {MoveKind::Move23, f, 0});
        } catch (const DomainError&) {
            continue;
        }
        ++tried;
        CHECK(r.tri.size() == t.size() + 1);
        CHECK(firstHomology(r.tri) == firstHomology(t));
        const Triangulation back = pachner(r.tri, {MoveKind::Move32, r.newEdge, 0});
        CHECK(isomorphic(back, t));
    }
    CHECK(tried > 0);
}

TEST_CASE("4-4 flips keep size and homology and transport the class") {
    const Triangulation t = family(SeifertFamily::M, 1, 2, 3);
    const Skeleton sk(t);
    const Cocycle phi = firstClass(t);
    int flipped = 0;
    for (int e = 0; e < sk.edgeCount(); ++e) {
        if (sk.degree(e) != 4) continue;
        for (int axis = 0; axis < 2; ++axis) {
            MoveResult r;
            try {
                r = applyMove(t, {MoveKind::Move44, e, axis});
            } catch (const DomainError&) {
                continue;
            }
            ++flipped;
            CHECK(r.tri.size() == t.size());
            CHECK(firstHomology(r.tri) == firstHomology(t));
            const Cocycle moved = transportCocycle(t, phi, r);
            CHECK(isCocycle(r.tri, Skeleton(r.tri), moved));
            CHECK_FALSE(moved.isZero());
        }
    }
    CHECK(flipped > 0);
}

TEST_CASE("moves report failed preconditions") {
    const Triangulation lst = layeredSolidTorus(1, 2).tri;
    CHECK_THROWS_AS(applyMove(lst, {MoveKind::Move32, 0, 0}), DomainError);
    CHECK_THROWS_AS(applyMove(lst, {MoveKind::Move44, 99, 0}), DomainError);
}

TEST_CASE("promote removes the supportive tori of M(1,1,1)") {
    const Triangulation t = family(SeifertFamily::M, 1, 1, 1);
    const Cocycle phi = firstClass(t);
    CHECK(supportiveCount(t, phi) == 2);
    const PromoteResult r = promote(t, phi);
    REQUIRE(r.log.size() == 1);
    CHECK(r.log[0].supportiveBefore == 2);
    CHECK(r.log[0].supportiveAfter == 0);
    CHECK(r.unresolved.empty());
    CHECK(supportiveCount(r.tri, r.phi) == 0);
    CHECK(r.tri.size() == t.size());
    CHECK(isomorphic(r.tri, r.tri));
    CHECK(firstHomology(r.tri) == firstHomology(t));
}

TEST_CASE("low degree lint on small folds") {
    auto statuses = [](const Triangulation& t) {
        std::vector<LintStatus> out;
        const LintReport r = lowDegreeLint(t);
        CHECK(r.edgeCountIdentity());
        CHECK(r.degreeIdentity());
        for (const auto& e : r.edges) out.push_back(e.status);
        return out;
    };
    CHECK(statuses(foldLst(1, 2, 1).tri) == std::vector<LintStatus>{LintStatus::Case3a, LintStatus::Case3a});
    CHECK(statuses(foldLst(1, 2, 2).tri) == std::vector<LintStatus>{LintStatus::ExceptionSmallLens});
    CHECK(statuses(foldLst(1, 2, 3).tri) == std::vector<LintStatus>{LintStatus::ExceptionS3});
    CHECK_THROWS_AS(lowDegreeLint(layeredSolidTorus(1, 2).tri), DomainError);
}

TEST_CASE("L(2n,1): degree three edges sit inside T(1,3,4) and the inequality is tight") {
    for (int n = 3; n <= 7; ++n) {
        const Triangulation t = foldLst(1, 2 * n - 2, 2 * n - 2).tri;
        CHECK(firstHomology(t).order() == 2 * n);
        for (const auto& e : lowDegreeLint(t).edges)
            if (e.degree == 3) CHECK((e.status == LintStatus::Case3c));
        const BoundReport b = fundamentalReport(t, firstClass(t));
        CHECK(b.identityLhs == b.identityRhs);
        CHECK(b.eq1Lhs == 2);
        CHECK(b.eq1Rhs == 2);
        CHECK(b.balanced);
    }
}

TEST_CASE("fundamental identity on the families") {
    for (const Triangulation& t : {family(SeifertFamily::M, 2, 1, 3), family(SeifertFamily::MPrime, 3, 1, 2),
                                   family(SeifertFamily::P, 3), family(SeifertFamily::Q, 6)})
        for (const auto& phi : nonzeroClasses(cocycleBasis(t))) {
            const BoundReport b = fundamentalReport(t, phi, 1);
            CHECK(b.identityLhs == b.identityRhs);
            CHECK(b.g == 2 - b.chi);
            CHECK(b.eq1Rhs >= 10);
        }
    CHECK_THROWS_AS(fundamentalReport(family(SeifertFamily::Q, 4), firstClass(family(SeifertFamily::Q, 4)), -1),
                    DomainError);
}

TEST_CASE("compression pattern matcher") {
    auto q = [](int tet, int torus) { return WheelSlot{tet, {TetType::Dq, 0}, torus}; };
    auto t = [](int tet) { return WheelSlot{tet, {TetType::Dt, 0}, -1}; };
    CHECK(matchCompressionPattern({q(0, 0), q(1, -1), q(2, 1), q(3, -1), q(4, 2), q(5, -1)}, 3) == "d6k3");
    CHECK(matchCompressionPattern({q(0, -1), q(1, 0), q(2, -1), q(3, 1), q(4, -1), q(5, 2)}, 3) == "d6k3");
    CHECK(matchCompressionPattern({q(0, 0), q(1, -1), q(2, 0), q(3, -1), q(4, 2), q(5, -1)}, 3).empty());
    CHECK(matchCompressionPattern({q(0, 0), q(1, -1), q(2, 1), q(3, -1), q(3, 2), q(5, -1)}, 3).empty());

    CHECK(matchCompressionPattern({q(0, 0), q(1, -1), q(2, 1), t(3), t(4)}, 2) == "d5k2");
    CHECK(matchCompressionPattern({t(3), q(0, 0), q(1, -1), q(2, 1), t(4)}, 2) == "d5k2");
    CHECK(matchCompressionPattern({q(0, 0), q(1, -1), q(2, 1), q(3, -1), q(4, -1)}, 2) == "d5k2");
    CHECK(matchCompressionPattern({q(0, 0), q(1, -1), q(2, 1), q(3, -1), t(4)}, 2).empty());
    CHECK(matchCompressionPattern({q(0, 0), t(1), q(2, 1), t(3), t(4)}, 2).empty());
    CHECK(matchCompressionPattern({q(0, 0), q(1, -1), q(2, 1), t(3), t(4)}, 3).empty());
}

TEST_CASE("no compression patterns on the families") {
    for (const Triangulation& t : {family(SeifertFamily::M, 1, 2, 3), family(SeifertFamily::P, 2)})
        for (const auto& phi : nonzeroClasses(cocycleBasis(t))) CHECK(compressionPatternScan(t, phi).empty());
}

TEST_CASE("complexity certificates") {
    struct Row {
        Triangulation tri;
        std::string family;
        std::string form;
    };
    const std::vector<Row> rows{
        {foldLst(1, 6, 6).tri, "balanced_lens", "1+2n"},
        {family(SeifertFamily::M, 1, 1, 2), "M", "2+2n"},
        {family(SeifertFamily::MPrime, 1, 2, 3), "M'", "3+sum"},
        {family(SeifertFamily::P, 2), "P", "3+sum"},
        {family(SeifertFamily::Q, 4), "Q", "2+sum"},
    };
    for (const auto& r : rows) {
        CAPTURE(r.family);
        const Certificate c = complexityCertificate(r.tri, r.family);
        CHECK(c.boundForm == r.form);
        CHECK(c.familyCertified);
        CHECK(c.tets == r.tri.size());
        for (const auto& cls : c.classes) CHECK(cls.normBound == -cls.chi);
    }
    CHECK_FALSE(complexityCertificate(family(SeifertFamily::Q, 4), "M").familyCertified);
    CHECK_FALSE(complexityCertificate(family(SeifertFamily::Q, 4)).familyCertified);
}
