#include <algorithm>
#include <set>

#include "z2norm/analyze.hpp"
#include "z2norm/homology.hpp"

namespace z2norm {

const char* toString(LintStatus s) {
    switch (s) {
        case LintStatus::ExceptionS3: return "exception_s3";
        case LintStatus::ExceptionSmallLens: return "exception_l31_l41";
        case LintStatus::Case3a: return "case_3a";
        case LintStatus::Case3b: return "case_3b";
        case LintStatus::Case3c: return "case_3c";
        case LintStatus::Unexplained: return "unexplained";
    }
    return "?";
}

LintReport lowDegreeLint(const Triangulation& tri) {
    const Skeleton sk(tri);
    if (!tri.isClosed() || sk.vertexCount() != 1) throw DomainError("lint: needs a closed one-vertex triangulation");
    LintReport rep;
    rep.tets = tri.size();
    rep.edgeCount = sk.edgeCount();
    rep.degreeHistogram = sk.degreeHistogram();
    for (auto [d, n] : rep.degreeHistogram) rep.weightedDegreeSum += (6 - d) * n;

    const std::int64_t order = firstHomology(tri).order();
    std::set<int> t134Interior;
    for (const auto& l : layeredSubtori(tri, 2))
        if (l.p == 1 && l.q == 3)
            for (int c : l.interior) t134Interior.insert(l.ambientEdge[c]);

    for (int e = 0; e < sk.edgeCount(); ++e) {
        const int d = sk.degree(e);
        if (d > 3) continue;
        LintEdge le{e, d, LintStatus::Unexplained};
        if (d == 1 && order == 1) le.status = LintStatus::ExceptionS3;
        if (d == 2 && (order == 3 || order == 4)) le.status = LintStatus::ExceptionSmallLens;
        if (d == 3) {
            if (rep.tets == 1 && order == 5) le.status = LintStatus::Case3a;
            else if (rep.tets == 2 && (order == 5 || order == 7)) le.status = LintStatus::Case3b;
            else if (t134Interior.count(e)) le.status = LintStatus::Case3c;
        }
        rep.edges.push_back(le);
    }
    return rep;
}

BoundReport fundamentalReport(const Triangulation& tri, const Cocycle& phi, int kPhi) {
    if (kPhi < 0) throw DomainError("k_phi must be nonnegative");
    const Skeleton sk(tri);
    BoundReport r;
    r.census = parityCensus(sk, phi);
    r.chi = canonicalSurface(tri, phi).chi;
    r.g = 2 - r.chi;
    r.kPhi = kPhi;
    r.balanced = r.census.balanced();
    std::int64_t excess = 0, excessAboveFour = 0;
    for (auto [d, n] : r.census.evenDegreeHistogram) {
        excess += static_cast<std::int64_t>(d - 4) * n;
        if (d >= 5) excessAboveFour += static_cast<std::int64_t>(d - 4) * n;
    }
    r.identityLhs = 4 * r.chi + 2 * tri.size();
    r.identityRhs = 4 + excess + r.census.nt;
    if (r.identityLhs != r.identityRhs)
        throw std::logic_error("fundamental identity fails: " + std::to_string(r.identityLhs) +
                               " != " + std::to_string(r.identityRhs));
    r.eq1Lhs = r.census.evenOfDegree(3);
    r.eq1Rhs = 2 + excessAboveFour + 8 * static_cast<std::int64_t>(kPhi) + r.census.nt;
    return r;
}

namespace {

int discOf(const TetColouring& c) {
    switch (c.type) {
        case TetType::Dq: return 4 + c.index;
        case TetType::Dt: return c.index;
        case TetType::D0: return -1;
    }
    return -1;
}

}  // namespace

std::string matchCompressionPattern(const std::vector<WheelSlot>& wheel, int k) {
    const int d = static_cast<int>(wheel.size());
    std::set<int> tets;
    for (const auto& s : wheel) tets.insert(s.tet);
    if (static_cast<int>(tets.size()) != d) return "";
    auto at = [&](int i) -> const WheelSlot& { return wheel[((i % d) + d) % d]; };
    auto isQ = [&](int i) { return at(i).colour.type == TetType::Dq; };

    if (d == 6 && k == 3) {
        for (const auto& s : wheel)
            if (s.colour.type != TetType::Dq) return "";
        for (int par = 0; par < 2; ++par) {
            std::set<int> ids;
            bool ok = true;
            for (int i = 0; i < 6; ++i) {
                if (i % 2 == par) {
                    if (at(i).torus < 0) ok = false;
                    ids.insert(at(i).torus);
                } else if (at(i).torus >= 0) {
                    ok = false;
                }
            }
            if (ok && ids.size() == 3) return "d6k3";
        }
    }
    if (d == 5 && k == 2) {
        for (int i = 0; i < 5; ++i) {
            if (at(i).torus < 0 || at(i + 2).torus < 0 || at(i).torus == at(i + 2).torus) continue;
            if (at(i + 1).torus >= 0 || at(i + 3).torus >= 0 || at(i + 4).torus >= 0) continue;
            if (!isQ(i) || !isQ(i + 1) || !isQ(i + 2)) continue;
            const TetType a = at(i + 3).colour.type, b = at(i + 4).colour.type;
            if (a == b && (a == TetType::Dq || a == TetType::Dt)) return "d5k2";
        }
    }
    return "";
}

std::vector<CompressionPattern> compressionPatternScan(const Triangulation& tri, const Cocycle& phi) {
    const Skeleton sk(tri);
    const auto types = classifyTetrahedra(sk, phi);
    const auto roles = torusRoles(tri, phi);
    std::vector<CompressionPattern> out;
    for (int e = 0; e < sk.edgeCount(); ++e) {
        const int d = sk.degree(e);
        if (phi.odd(e) || sk.edge(e).boundary || (d != 5 && d != 6)) continue;
        std::vector<const TorusFinding*> meeting;
        for (const auto& f : roles)
            if (f.role == TorusRole::AlmostSupportive && f.evenBoundaryEdge == e) meeting.push_back(&f);
        const int k = static_cast<int>(meeting.size());
        if (k == 0) continue;
        const EdgeWheel w = edgeWheel(tri, sk, e);
        std::vector<WheelSlot> wheel;
        for (int t : w.tets) {
            WheelSlot s{t, types[t], -1};
            for (int i = 0; i < k; ++i) {
                const auto& ts = meeting[i]->lst.tets;
                if (std::find(ts.begin(), ts.end(), t) != ts.end()) s.torus = i;
            }
            wheel.push_back(s);
        }
        const std::string kind = matchCompressionPattern(wheel, k);
        if (kind.empty()) continue;
        CompressionPattern p{kind, e, {}};
        for (const auto& s : wheel) p.curve.push_back({s.tet, discOf(s.colour)});
        out.push_back(std::move(p));
    }
    return out;
}

Certificate complexityCertificate(const Triangulation& tri, const std::string& family) {
    const Skeleton sk(tri);
    if (!tri.isClosed() || sk.vertexCount() != 1)
        throw DomainError("certificate: needs a closed one-vertex triangulation");
    Certificate c;
    c.tets = tri.size();
    c.family = family;
    const auto basis = cocycleBasis(tri);
    c.z2Rank = static_cast<int>(basis.size());
    std::int64_t sum = 0;
    for (const auto& phi : nonzeroClasses(basis)) {
        CertificateClass cc;
        cc.phi = phi;
        cc.chi = canonicalSurface(tri, phi).chi;
        cc.normBound = -cc.chi;
        cc.balanced = parityCensus(sk, phi).balanced();
        sum += cc.normBound;
        c.classes.push_back(cc);
    }
    c.squares = twistedSquareScan(tri);

    c.boundForm = "none";
    if (c.z2Rank == 1) {
        const std::int64_t n = c.classes.front().normBound;
        if (c.tets == 1 + 2 * n) c.boundForm = "1+2n";
        else if (c.tets == 2 + 2 * n) c.boundForm = "2+2n";
    } else if (c.z2Rank == 2) {
        if (c.tets == 2 + sum) c.boundForm = "2+sum";
        else if (c.tets == 3 + sum) c.boundForm = "3+sum";
    }
    static const std::map<std::string, std::string> expected{
        {"balanced_lens", "1+2n"}, {"lens", "2+2n"}, {"M", "2+2n"}, {"M'", "3+sum"}, {"Q", "2+sum"}, {"P", "3+sum"}};
    const auto it = expected.find(family);
    c.familyCertified = it != expected.end() && it->second == c.boundForm;
    return c;
}

}  // namespace z2norm
