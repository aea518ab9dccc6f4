#include "z2norm/z2.hpp"

#include <stdexcept>

#include "z2norm/homology.hpp"

namespace z2norm {

bool Cocycle::isZero() const {
    for (auto b : bits)
        if (b) return false;
    return true;
}

int Cocycle::oddCount() const {
    int n = 0;
    for (auto b : bits) n += b ? 1 : 0;
    return n;
}

std::string Cocycle::str() const {
    std::string s;
    for (auto b : bits) s.push_back(b ? '1' : '0');
    return s;
}

Cocycle Cocycle::operator+(const Cocycle& o) const {
    Cocycle out{bits};
    for (std::size_t i = 0; i < bits.size(); ++i) out.bits[i] ^= o.bits.at(i);
    return out;
}

bool isCocycle(const Triangulation& tri, const Skeleton& sk, const Cocycle& c) {
    if (static_cast<int>(c.bits.size()) != sk.edgeCount()) return false;
    for (int t = 0; t < tri.size(); ++t) {
        for (int f = 0; f < 4; ++f) {
            const auto v = facetVertices(f);
            const int sum = c.bits[sk.edgeOf(t, edgeNumber(v[0], v[1]))] + c.bits[sk.edgeOf(t, edgeNumber(v[0], v[2]))] +
                            c.bits[sk.edgeOf(t, edgeNumber(v[1], v[2]))];
            if (sum % 2 != 0) return false;
        }
    }
    return true;
}

std::vector<Cocycle> cocycleBasis(const Triangulation& tri) {
    if (!tri.isClosed()) throw DomainError("cocycle basis: triangulation is not closed");
    const Skeleton sk(tri);
    if (sk.vertexCount() != 1)
        throw DomainError("cocycle basis: multi-vertex triangulations are not supported");

    // Relation rows: one per face class, over the edge classes, packed as bitsets.
    const int edges = sk.edgeCount();
    const int words = (edges + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows;
    for (const auto& fc : sk.faces()) {
        const auto s = fc.slots.front();
        const auto v = facetVertices(s.facet);
        std::vector<std::uint64_t> row(words, 0);
        for (auto [a, b] : {std::pair{v[0], v[1]}, std::pair{v[0], v[2]}, std::pair{v[1], v[2]}}) {
            const int e = sk.edgeOf(s.tet, edgeNumber(a, b));
            row[e / 64] ^= std::uint64_t{1} << (e % 64);
        }
        rows.push_back(std::move(row));
    }

    // Reduced row echelon form with pivots chosen left to right.
    std::vector<int> pivotCol;
    int rank = 0;
    for (int c = 0; c < edges && rank < static_cast<int>(rows.size()); ++c) {
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        int piv = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][c / 64] & bit) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r)
            if (r != rank && (rows[r][c / 64] & bit))
                for (int w = 0; w < words; ++w) rows[r][w] ^= rows[rank][w];
        pivotCol.push_back(c);
        ++rank;
    }

    std::vector<char> isPivot(edges, 0);
    for (int c : pivotCol) isPivot[c] = 1;
    std::vector<Cocycle> basis;
    for (int freeCol = 0; freeCol < edges; ++freeCol) {
        if (isPivot[freeCol]) continue;
        Cocycle v{std::vector<std::uint8_t>(edges, 0)};
        v.bits[freeCol] = 1;
        for (int r = 0; r < rank; ++r)
            if (rows[r][freeCol / 64] & (std::uint64_t{1} << (freeCol % 64))) v.bits[pivotCol[r]] = 1;
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Cocycle> nonzeroClasses(const std::vector<Cocycle>& basis) {
    std::vector<Cocycle> out;
    if (basis.empty()) return out;
    const std::size_t n = basis.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        Cocycle c{std::vector<std::uint8_t>(basis.front().bits.size(), 0)};
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) c = c + basis[i];
        out.push_back(std::move(c));
    }
    return out;
}

const char* toString(TetType t) {
    switch (t) {
        case TetType::Dq: return "Dq";
        case TetType::Dt: return "Dt";
        case TetType::D0: return "D0";
    }
    return "?";
}

std::vector<TetColouring> classifyTetrahedra(const Skeleton& sk, const Cocycle& c) {
    std::vector<TetColouring> out(sk.tetCount());
    for (int t = 0; t < sk.tetCount(); ++t) {
        std::array<int, 6> odd{};
        int oddTotal = 0;
        for (int e = 0; e < 6; ++e) {
            odd[e] = c.bits.at(sk.edgeOf(t, e));
            oddTotal += odd[e];
        }
        TetColouring& tc = out[t];
        if (oddTotal == 0) {
            tc = {TetType::D0, -1};
            continue;
        }
        if (oddTotal == 4) {
            for (int k = 0; k < 3; ++k)
                if (!odd[k] && !odd[5 - k]) tc = {TetType::Dq, k};
            if (tc.type == TetType::Dq) continue;
        }
        if (oddTotal == 3) {
            for (int v = 0; v < 4; ++v) {
                bool all = true;
                for (int w = 0; w < 4; ++w)
                    if (w != v && !odd[edgeNumber(v, w)]) all = false;
                if (all) tc = {TetType::Dt, v};
            }
            if (tc.type == TetType::Dt) continue;
        }
        throw DomainError("classify: tetrahedron " + std::to_string(t) + " has a parity pattern outside Dq/Dt/D0");
    }
    return out;
}

int ParityCensus::evenOfDegree(int d) const {
    auto it = evenDegreeHistogram.find(d);
    return it == evenDegreeHistogram.end() ? 0 : it->second;
}

ParityCensus parityCensus(const Skeleton& sk, const Cocycle& c) {
    ParityCensus pc;
    for (int e = 0; e < sk.edgeCount(); ++e) {
        if (c.odd(e)) {
            ++pc.oCount;
        } else {
            ++pc.eCount;
            ++pc.evenDegreeHistogram[sk.degree(e)];
            pc.eTilde += sk.degree(e);
        }
    }
    for (const auto& tc : classifyTetrahedra(sk, c)) {
        switch (tc.type) {
            case TetType::Dq: ++pc.nq; break;
            case TetType::Dt: ++pc.nt; break;
            case TetType::D0: ++pc.n0; break;
        }
    }
    if (pc.eTilde != 2 * pc.nq + 3 * pc.nt + 6 * pc.n0)
        throw std::logic_error("parity census: even pre-image count disagrees with tetrahedron types");

    pc.evenSubcomplex.vertices = sk.vertexCount();
    pc.evenSubcomplex.edges = pc.eCount;
    for (const auto& fc : sk.faces()) {
        const auto s = fc.slots.front();
        const auto v = facetVertices(s.facet);
        const bool allEven = c.even(sk.edgeOf(s.tet, edgeNumber(v[0], v[1]))) &&
                             c.even(sk.edgeOf(s.tet, edgeNumber(v[0], v[2]))) &&
                             c.even(sk.edgeOf(s.tet, edgeNumber(v[1], v[2])));
        if (allEven) ++pc.evenSubcomplex.faces;
    }
    pc.evenSubcomplex.tets = pc.n0;
    return pc;
}

}  // namespace z2norm
