#include "z2norm/homology.hpp"

#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "z2norm/skeleton.hpp"

namespace z2norm {

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

namespace {

std::int64_t checked(__int128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw DomainError("smith normal form: 64-bit overflow");
    return static_cast<std::int64_t>(v);
}

// row[dst] += k * row[src]
void addRow(IntMatrix& m, int dst, int src, std::int64_t k) {
    for (int c = 0; c < m.cols(); ++c) m(dst, c) = checked(static_cast<__int128>(m(dst, c)) + static_cast<__int128>(k) * m(src, c));
}

void addCol(IntMatrix& m, int dst, int src, std::int64_t k) {
    for (int r = 0; r < m.rows(); ++r) m(r, dst) = checked(static_cast<__int128>(m(r, dst)) + static_cast<__int128>(k) * m(r, src));
}

void swapRows(IntMatrix& m, int a, int b) {
    if (a == b) return;
    for (int c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swapCols(IntMatrix& m, int a, int b) {
    if (a == b) return;
    for (int r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

void negateRow(IntMatrix& m, int r) {
    for (int c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

// floor-free quotient toward zero is fine: remainder magnitude strictly decreases.
std::int64_t quot(std::int64_t a, std::int64_t b) { return a / b; }

}  // namespace

SmithForm smithNormalForm(IntMatrix a, bool trackLeft) {
    SmithForm out;
    const int rows = a.rows();
    const int cols = a.cols();
    IntMatrix u;
    if (trackLeft) {
        u = IntMatrix(rows, rows);
        for (int i = 0; i < rows; ++i) u(i, i) = 1;
    }

    int k = 0;
    while (k < rows && k < cols) {
        // pivot: smallest nonzero magnitude in the lower-right block
        int pr = -1;
        int pc = -1;
        std::int64_t best = 0;
        for (int r = k; r < rows; ++r)
            for (int c = k; c < cols; ++c)
                if (a(r, c) != 0 && (pr < 0 || std::llabs(a(r, c)) < best)) {
                    pr = r;
                    pc = c;
                    best = std::llabs(a(r, c));
                }
        if (pr < 0) break;
        swapRows(a, k, pr);
        if (trackLeft) swapRows(u, k, pr);
        swapCols(a, k, pc);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int r = k + 1; r < rows; ++r) {
                if (a(r, k) == 0) continue;
                const std::int64_t q = quot(a(r, k), a(k, k));
                addRow(a, r, k, -q);
                if (trackLeft) addRow(u, r, k, -q);
                if (a(r, k) != 0) {
                    swapRows(a, k, r);
                    if (trackLeft) swapRows(u, k, r);
                    clean = false;
                }
            }
            for (int c = k + 1; c < cols; ++c) {
                if (a(k, c) == 0) continue;
                const std::int64_t q = quot(a(k, c), a(k, k));
                addCol(a, c, k, -q);
                if (a(k, c) != 0) {
                    swapCols(a, k, c);
                    clean = false;
                }
            }
            if (!clean) continue;
            // divisibility of the remaining block
            for (int r = k + 1; r < rows && clean; ++r)
                for (int c = k + 1; c < cols; ++c)
                    if (a(r, c) % a(k, k) != 0) {
                        addRow(a, k, r, 1);
                        if (trackLeft) addRow(u, k, r, 1);
                        clean = false;
                        break;
                    }
        }
        if (a(k, k) < 0) {
            negateRow(a, k);
            if (trackLeft) negateRow(u, k);
        }
        out.diagonal.push_back(a(k, k));
        ++k;
    }
    if (trackLeft) out.left = std::move(u);
    return out;
}

int rankMod2(const IntMatrix& a) {
    const int rows = a.rows();
    const int cols = a.cols();
    const int words = (cols + 63) / 64;
    std::vector<std::vector<std::uint64_t>> m(rows, std::vector<std::uint64_t>(words, 0));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (a(r, c) % 2 != 0) m[r][c / 64] |= std::uint64_t{1} << (c % 64);
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c / 64] & bit) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        for (int r = 0; r < rows; ++r)
            if (r != rank && (m[r][c / 64] & bit))
                for (int w = 0; w < words; ++w) m[r][w] ^= m[rank][w];
        ++rank;
    }
    return rank;
}

std::int64_t HomologyProfile::torsionOrder() const {
    std::int64_t o = 1;
    for (auto f : invariantFactors) o *= f;
    return o;
}

BoundaryMaps boundaryMaps(const Triangulation& tri) {
    const Skeleton sk(tri);
    BoundaryMaps bm{IntMatrix(sk.vertexCount(), sk.edgeCount()), IntMatrix(sk.edgeCount(), sk.faceCount())};
    for (int e = 0; e < sk.edgeCount(); ++e) {
        const auto& ec = sk.edge(e);
        const EdgeSlot s = ec.slots.front();
        int tail = kEdgeVertices[s.edge][0];
        int head = kEdgeVertices[s.edge][1];
        if (ec.orientation.front() < 0) std::swap(tail, head);
        bm.d1(sk.vertexOf(s.tet, head), e) += 1;
        bm.d1(sk.vertexOf(s.tet, tail), e) -= 1;
    }
    for (int f = 0; f < sk.faceCount(); ++f) {
        const FacetSlot s = sk.faces()[f].slots.front();
        const auto v = facetVertices(s.facet);
        // boundary of [v0 v1 v2] = [v1 v2] - [v0 v2] + [v0 v1]
        const std::array<std::array<int, 3>, 3> terms{{{v[1], v[2], 1}, {v[0], v[2], -1}, {v[0], v[1], 1}}};
        for (const auto& term : terms) {
            const int slotEdge = edgeNumber(term[0], term[1]);
            const int cls = sk.edgeOf(s.tet, slotEdge);
            bm.d2(cls, f) += term[2] * sk.edgeOrientation(s.tet, slotEdge);
        }
    }
    return bm;
}

HomologyProfile firstHomologyAny(const Triangulation& tri) {
    const BoundaryMaps bm = boundaryMaps(tri);
    const int edges = bm.d2.rows();
    const SmithForm s1 = smithNormalForm(bm.d1);
    const SmithForm s2 = smithNormalForm(bm.d2);
    HomologyProfile h;
    for (auto d : s2.diagonal)
        if (d > 1) h.invariantFactors.push_back(d);
    h.betti = edges - s1.rank() - s2.rank();
    h.z2Rank = edges - rankMod2(bm.d1) - rankMod2(bm.d2);

    int evenFactors = 0;
    for (auto d : h.invariantFactors)
        if (d % 2 == 0) ++evenFactors;
    if (h.z2Rank != h.betti + evenFactors)
        throw std::logic_error("homology: GF(2) rank disagrees with integral invariant factors");
    return h;
}

HomologyProfile firstHomology(const Triangulation& tri) {
    if (!tri.isClosed()) throw DomainError("first_homology: triangulation is not closed");
    return firstHomologyAny(tri);
}

std::vector<std::int64_t> edgeClassesInInfiniteCyclicH1(const Triangulation& tri) {
    const BoundaryMaps bm = boundaryMaps(tri);
    if (bm.d1.rows() != 1) throw DomainError("edge classes in H1: expected a one-vertex triangulation");
    const SmithForm s = smithNormalForm(bm.d2, true);
    const int edges = bm.d2.rows();
    for (auto d : s.diagonal)
        if (d != 1) throw DomainError("edge classes in H1: H1 has torsion");
    if (edges - s.rank() != 1) throw DomainError("edge classes in H1: H1 is not infinite cyclic");
    // Row `rank` of U projects Z^E onto the free summand.
    std::vector<std::int64_t> out(edges);
    for (int e = 0; e < edges; ++e) out[e] = s.left(s.rank(), e);
    return out;
}

}  // namespace z2norm
