#include "z2norm/surface.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace z2norm {

const std::array<std::array<int, 6>, 10> kDiscEdgeHits{{
    {1, 1, 1, 0, 0, 0},  // triangle 0
    {1, 0, 0, 1, 1, 0},  // triangle 1
    {0, 1, 0, 1, 0, 1},  // triangle 2
    {0, 0, 1, 0, 1, 1},  // triangle 3
    {0, 1, 1, 1, 1, 0},  // quad 0: misses 01, 23
    {1, 0, 1, 1, 0, 1},  // quad 1: misses 02, 13
    {1, 1, 0, 0, 1, 1},  // quad 2: misses 03, 12
    {2, 1, 1, 1, 1, 2},  // octagon 0
    {1, 2, 1, 1, 2, 1},  // octagon 1
    {1, 1, 2, 2, 1, 1},  // octagon 2
}};

namespace {

constexpr int kTypes = 10;

std::array<int, 2> otherTwo(int facet, int v) {
    std::array<int, 2> out{};
    int i = 0;
    for (int w : facetVertices(facet))
        if (w != v) out[i++] = w;
    return out;
}

// Arcs of a single disc of the given type at `corner` of `facet`.
int discArcs(int type, int facet, int corner) {
    if (corner == facet) return 0;
    const auto [x, y] = otherTwo(facet, corner);
    const auto& h = kDiscEdgeHits[type];
    return (h[edgeNumber(corner, x)] + h[edgeNumber(corner, y)] - h[edgeNumber(x, y)]) / 2;
}

int discArcTotal(int type) { return type < 4 ? 3 : (type < 7 ? 4 : 8); }

// Which side of the disc a tetrahedron vertex lies on.
int discSide(int type, int v) {
    if (type < 4) return v == type ? 1 : 0;
    const int k = (type - 4) % 3;
    const auto& ends = kEdgeVertices[k];
    return (v == ends[0] || v == ends[1]) ? 1 : 0;
}

int quadOf(int edge) { return std::min(edge, 5 - edge); }

}  // namespace

std::int64_t TetCoord::disc(int type) const {
    if (type < 4) return tri[type];
    if (type < 7) return quad[type - 4];
    return oct[type - 7];
}

std::int64_t& TetCoord::disc(int type) {
    if (type < 4) return tri[type];
    if (type < 7) return quad[type - 4];
    return oct[type - 7];
}

std::string NormalCoordinate::dump() const {
    std::ostringstream out;
    for (std::size_t t = 0; t < tets.size(); ++t) {
        const auto& c = tets[t];
        out << t << ':';
        for (auto v : c.tri) out << ' ' << v;
        out << " |";
        for (auto v : c.quad) out << ' ' << v;
        out << " |";
        for (auto v : c.oct) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

NormalCoordinate NormalCoordinate::operator+(const NormalCoordinate& o) const {
    if (tets.size() != o.tets.size()) throw DomainError("normal coordinates of different sizes");
    NormalCoordinate out{tets, formal || o.formal};
    for (std::size_t t = 0; t < tets.size(); ++t)
        for (int d = 0; d < kTypes; ++d) out.tets[t].disc(d) += o.tets[t].disc(d);
    return out;
}

NormalCoordinate NormalCoordinate::operator-(const NormalCoordinate& o) const { return *this + o.scaled(-1); }

NormalCoordinate NormalCoordinate::scaled(std::int64_t s) const {
    NormalCoordinate out{tets, formal || s < 0};
    for (auto& tc : out.tets)
        for (int d = 0; d < kTypes; ++d) tc.disc(d) *= s;
    return out;
}

std::int64_t slotWeight(const NormalCoordinate& c, int tet, int edge) {
    std::int64_t w = 0;
    for (int d = 0; d < kTypes; ++d) w += c.tets.at(tet).disc(d) * kDiscEdgeHits[d][edge];
    return w;
}

std::int64_t arcCount(const NormalCoordinate& c, int tet, int facet, int corner) {
    std::int64_t n = 0;
    for (int d = 0; d < kTypes; ++d) n += c.tets.at(tet).disc(d) * discArcs(d, facet, corner);
    return n;
}

std::string matchingViolation(const Triangulation& tri, const NormalCoordinate& c) {
    if (static_cast<int>(c.tets.size()) != tri.size()) return "coordinate size differs from tetrahedron count";
    for (int t = 0; t < tri.size(); ++t) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = tri.adjacent(t, f);
            if (!g) continue;
            for (int v : facetVertices(f)) {
                if (arcCount(c, t, f, v) != arcCount(c, g->tet, g->perm[f], g->perm[v]))
                    return "matching fails at tetrahedron " + std::to_string(t) + " facet " + std::to_string(f) +
                           " corner " + std::to_string(v);
            }
        }
    }
    return {};
}

std::string embeddabilityViolation(const NormalCoordinate& c) {
    for (std::size_t t = 0; t < c.tets.size(); ++t) {
        int kinds = 0;
        for (int d = 0; d < kTypes; ++d) {
            if (c.tets[t].disc(d) < 0) return "negative entry in tetrahedron " + std::to_string(t);
            if (d >= 4 && c.tets[t].disc(d) > 0) ++kinds;
        }
        if (kinds > 1) return "two quad/octagon types in tetrahedron " + std::to_string(t);
    }
    return {};
}

std::int64_t eulerChar(const Triangulation& tri, const NormalCoordinate& c) {
    if (c.formal) throw DomainError("euler_char: formal coordinate");
    if (auto e = embeddabilityViolation(c); !e.empty()) throw DomainError("euler_char: " + e);
    if (auto m = matchingViolation(tri, c); !m.empty()) throw DomainError("euler_char: " + m);
    const Skeleton sk(tri);
    std::int64_t vertices = 0, edges = 0, faces = 0;
    for (const auto& ec : sk.edges()) vertices += slotWeight(c, ec.slots.front().tet, ec.slots.front().edge);
    for (const auto& fc : sk.faces()) {
        const auto s = fc.slots.front();
        for (int v : facetVertices(s.facet)) edges += arcCount(c, s.tet, s.facet, v);
    }
    for (const auto& tc : c.tets)
        for (int d = 0; d < kTypes; ++d) faces += tc.disc(d);
    return vertices - edges + faces;
}

std::int64_t chiFormula(const ParityCensus& census) {
    const std::int64_t numerator = 2 - 2 * std::int64_t{census.eCount} + census.nt + 2 * std::int64_t{census.n0};
    if (numerator % 2 != 0) throw std::logic_error("chi formula: odd numerator, census is corrupt");
    return numerator / 2;
}

CanonicalSurface canonicalSurface(const Triangulation& tri, const Cocycle& phi) {
    const Skeleton sk(tri);
    const auto types = classifyTetrahedra(sk, phi);
    CanonicalSurface cs;
    cs.cls = phi;
    cs.coord.tets.assign(tri.size(), {});
    for (int t = 0; t < tri.size(); ++t) {
        if (types[t].type == TetType::Dq) cs.coord.tets[t].quad[types[t].index] = 1;
        if (types[t].type == TetType::Dt) cs.coord.tets[t].tri[types[t].index] = 1;
    }
    cs.chi = eulerChar(tri, cs.coord);
    return cs;
}

NormalCoordinate vertexLink(const Triangulation& tri) {
    NormalCoordinate c;
    c.tets.assign(tri.size(), {});
    for (auto& tc : c.tets) tc.tri = {1, 1, 1, 1};
    return c;
}

BModification bModification(const Triangulation& tri, const Cocycle& phi, const std::vector<int>& b) {
    const Skeleton sk(tri);
    const std::set<int> bs(b.begin(), b.end());
    for (int e : bs) {
        if (e < 0 || e >= sk.edgeCount()) throw DomainError("b-modification: no edge " + std::to_string(e));
        if (phi.odd(e)) throw DomainError("b-modification: edge " + std::to_string(e) + " is odd");
    }
    const auto types = classifyTetrahedra(sk, phi);
    BModification out;
    out.coord.tets.assign(tri.size(), {});
    for (int t = 0; t < tri.size(); ++t) {
        if (types[t].type != TetType::Dq)
            throw DomainError("b-modification: tetrahedron " + std::to_string(t) + " is not of type Dq");
        const int k = types[t].index;
        const bool first = bs.count(sk.edgeOf(t, k)) > 0;
        const bool second = bs.count(sk.edgeOf(t, 5 - k)) > 0;
        auto& tc = out.coord.tets[t];
        if (first && second) {
            tc.oct[k] = 1;
            ++out.octagons;
        } else if (first || second) {
            const auto& ends = kEdgeVertices[first ? k : 5 - k];
            tc.tri[ends[0]] = 1;
            tc.tri[ends[1]] = 1;
        } else {
            tc.quad[k] = 1;
        }
    }
    out.chi = eulerChar(tri, out.coord);
    const std::int64_t base = eulerChar(tri, canonicalSurface(tri, phi).coord);
    if (out.chi != base - 2 * out.octagons + 2 * static_cast<std::int64_t>(bs.size()))
        throw std::logic_error("b-modification: octagon formula disagrees with the cell count");
    return out;
}

SpecialSolutions specialSolutions(const Triangulation& tri) {
    if (!tri.isClosed()) throw DomainError("special solutions: triangulation is not closed");
    const Skeleton sk(tri);
    SpecialSolutions out;
    const NormalCoordinate zero{std::vector<TetCoord>(tri.size()), true};
    for (int t = 0; t < tri.size(); ++t) {
        NormalCoordinate c = zero;
        c.tets[t].tri = {1, 1, 1, 1};
        c.tets[t].quad = {-1, -1, -1};
        out.tet.push_back(std::move(c));
    }
    for (const auto& ec : sk.edges()) {
        NormalCoordinate c = zero;
        for (const auto& s : ec.slots) {
            const auto& ends = kEdgeVertices[s.edge];
            c.tets[s.tet].tri[ends[0]] += 1;
            c.tets[s.tet].tri[ends[1]] += 1;
            c.tets[s.tet].quad[quadOf(s.edge)] -= 1;
        }
        out.edge.push_back(std::move(c));
    }
    return out;
}

Rational formalChi(const Triangulation& tri, const NormalCoordinate& c) {
    if (!tri.isClosed()) throw DomainError("formal chi: triangulation is not closed");
    const Skeleton sk(tri);
    Rational chi = 0;
    for (int t = 0; t < tri.size(); ++t) {
        for (int d = 0; d < kTypes; ++d) {
            const std::int64_t x = c.tets.at(t).disc(d);
            if (x == 0) continue;
            Rational perDisc = Rational(1) - Rational(discArcTotal(d), 2);
            for (int e = 0; e < 6; ++e)
                if (kDiscEdgeHits[d][e]) perDisc += Rational(kDiscEdgeHits[d][e], sk.degree(sk.edgeOf(t, e)));
            chi += perDisc * x;
        }
    }
    return chi;
}

const char* toString(SquareKind k) {
    switch (k) {
        case SquareKind::PinchedRP2: return "pinched_rp2";
        case SquareKind::Klein: return "klein";
        case SquareKind::Torus: return "torus";
    }
    return "?";
}

std::vector<TwistedSquare> twistedSquareScan(const Triangulation& tri) {
    const Skeleton sk(tri);
    auto dir = [&](int t, int u, int v) { return sk.edgeOrientation(t, edgeNumber(u, v)) * (u < v ? 1 : -1); };
    std::vector<TwistedSquare> out;
    for (int t = 0; t < tri.size(); ++t) {
        for (int k = 0; k < 3; ++k) {
            bool identified = true;
            for (int i = 0; i < 3; ++i)
                if (i != k && sk.edgeOf(t, i) != sk.edgeOf(t, 5 - i)) identified = false;
            if (!identified) continue;
            // The square x z y w runs around the quad missing edges xy and zw.
            const int x = kEdgeVertices[k][0], y = kEdgeVertices[k][1];
            const int z = kEdgeVertices[5 - k][0], w = kEdgeVertices[5 - k][1];
            const int translations = (dir(t, x, z) == dir(t, w, y) ? 1 : 0) + (dir(t, z, y) == dir(t, x, w) ? 1 : 0);
            const SquareKind kind =
                translations == 2 ? SquareKind::Torus : (translations == 1 ? SquareKind::Klein : SquareKind::PinchedRP2);
            out.push_back({t, k, kind});
        }
    }
    return out;
}

SurfaceShape surfaceClassify(const Triangulation& tri, const NormalCoordinate& c) {
    SurfaceShape shape;
    shape.chi = eulerChar(tri, c);
    for (const auto& tc : c.tets)
        for (auto o : tc.oct)
            if (o > 1) throw DomainError("surface classify: more than one octagon in a tetrahedron");

    // Disc ids: per tetrahedron and type, a contiguous run of copies.
    std::vector<std::array<int, kTypes>> first(tri.size());
    int discs = 0;
    for (int t = 0; t < tri.size(); ++t)
        for (int d = 0; d < kTypes; ++d) {
            first[t][d] = discs;
            discs += static_cast<int>(c.tets[t].disc(d));
        }
    shape.discs = discs;

    // Arcs at a corner, ordered outward from the corner vertex.
    auto arcsAt = [&](int t, int f, int v) {
        std::vector<std::pair<int, int>> arcs;  // (disc id, disc type)
        const auto& tc = c.tets[t];
        for (int j = 0; j < tc.tri[v]; ++j) arcs.emplace_back(first[t][v] + j, v);
        for (int d = 4; d < kTypes; ++d) {
            const int n = static_cast<int>(tc.disc(d));
            if (n == 0 || discArcs(d, f, v) == 0) continue;
            const auto& ends = kEdgeVertices[(d - 4) % 3];
            const bool nearSide = f == ends[0] || f == ends[1];
            for (int j = 0; j < n; ++j) {
                const int copy = nearSide ? j : n - 1 - j;
                arcs.emplace_back(first[t][d] + copy, d);
            }
        }
        return arcs;
    };

    std::vector<int> parent(discs), parity(discs, 0);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        if (parent[a] == a) return a;
        const int root = find(parent[a]);
        parity[a] ^= parity[parent[a]];
        parent[a] = root;
        return root;
    };
    bool orientable = true;
    auto unite = [&](int a, int b, int rel) {
        const int ra = find(a), rb = find(b);
        if (ra == rb) {
            if ((parity[a] ^ parity[b]) != rel) orientable = false;
            return;
        }
        parent[ra] = rb;
        parity[ra] = parity[a] ^ parity[b] ^ rel;
    };

    for (int t = 0; t < tri.size(); ++t) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = tri.adjacent(t, f);
            if (!g) continue;
            const int evenGluing = g->perm.sign() > 0 ? 1 : 0;
            for (int v : facetVertices(f)) {
                const auto here = arcsAt(t, f, v);
                const auto there = arcsAt(g->tet, g->perm[f], g->perm[v]);
                for (std::size_t i = 0; i < here.size(); ++i) {
                    const int rel = discSide(here[i].second, v) ^ discSide(there[i].second, g->perm[v]) ^ evenGluing;
                    unite(here[i].first, there[i].first, rel);
                }
            }
        }
    }
    std::set<int> roots;
    for (int d = 0; d < discs; ++d) roots.insert(find(d));
    shape.connected = roots.size() <= 1;
    shape.orientable = orientable;
    return shape;
}

}  // namespace z2norm
