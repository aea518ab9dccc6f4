#include "z2norm/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

namespace z2norm::oracle {

using boost::multiprecision::cpp_int;

std::int64_t H1::order() const {
    if (betti > 0) return 0;
    std::int64_t o = 1;
    for (auto t : torsion) o *= t;
    return o;
}

namespace {

// Union-find carrying the parity of each element relative to its root.
struct ParityDsu {
    std::vector<int> parent;
    std::vector<int> parity;

    explicit ParityDsu(int n) : parent(n), parity(n, 0) { std::iota(parent.begin(), parent.end(), 0); }

    std::pair<int, int> find(int x) {
        int p = 0;
        int r = x;
        while (parent[r] != r) {
            p ^= parity[r];
            r = parent[r];
        }
        return {r, p};
    }
    void unite(int a, int b, int rel) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) return;
        parent[ra] = rb;
        parity[ra] = pa ^ pb ^ rel;
    }
};

int pairIndex(int a, int b) {
    static const int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    return table[a][b];
}

using Matrix = std::vector<std::vector<cpp_int>>;

cpp_int absval(const cpp_int& x) { return x < 0 ? cpp_int(-x) : x; }

// Diagonal entries of an integer matrix after unimodular row and column operations.
std::vector<cpp_int> diagonalise(Matrix m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<cpp_int> diag;
    std::size_t top = 0;
    while (top < rows && top < cols) {
        // Smallest nonzero entry of the remaining block.
        std::size_t pr = rows, pc = cols;
        for (std::size_t r = top; r < rows; ++r)
            for (std::size_t c = top; c < cols; ++c)
                if (m[r][c] != 0 && (pr == rows || absval(m[r][c]) < absval(m[pr][pc]))) {
                    pr = r;
                    pc = c;
                }
        if (pr == rows) break;
        std::swap(m[top], m[pr]);
        for (auto& row : m) std::swap(row[top], row[pc]);
        bool clean = true;
        for (std::size_t r = top + 1; r < rows; ++r) {
            const cpp_int q = m[r][top] / m[top][top];
            if (q != 0)
                for (std::size_t c = top; c < cols; ++c) m[r][c] -= q * m[top][c];
            if (m[r][top] != 0) clean = false;
        }
        for (std::size_t c = top + 1; c < cols; ++c) {
            const cpp_int q = m[top][c] / m[top][top];
            if (q != 0)
                for (std::size_t r = top; r < rows; ++r) m[r][c] -= q * m[r][top];
            if (m[top][c] != 0) clean = false;
        }
        if (!clean) continue;  // a smaller remainder now exists; pick it as the next pivot
        diag.push_back(absval(m[top][top]));
        ++top;
    }
    // Impose the divisibility chain.
    for (std::size_t i = 0; i < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            const cpp_int g = boost::multiprecision::gcd(diag[i], diag[j]);
            const cpp_int l = diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    return diag;
}

}  // namespace

H1 firstHomology(const Triangulation& tri) {
    const int n = tri.size();
    ParityDsu edges(6 * n);
    ParityDsu verts(4 * n);
    for (int t = 0; t < n; ++t)
        for (int f = 0; f < 4; ++f) {
            const auto& g = tri.adjacent(t, f);
            if (!g) continue;
            for (int a = 0; a < 4; ++a) {
                if (a == f) continue;
                verts.unite(4 * t + a, 4 * g->tet + g->perm[a], 0);
                for (int b = a + 1; b < 4; ++b) {
                    if (b == f) continue;
                    const int ia = g->perm[a], ib = g->perm[b];
                    edges.unite(6 * t + pairIndex(a, b), 6 * g->tet + pairIndex(ia, ib), ia > ib ? 1 : 0);
                }
            }
        }
    std::map<int, int> edgeId, vertId;
    for (int i = 0; i < 6 * n; ++i) edgeId.emplace(edges.find(i).first, static_cast<int>(edgeId.size()));
    for (int i = 0; i < 4 * n; ++i) vertId.emplace(verts.find(i).first, static_cast<int>(vertId.size()));
    const std::size_t E = edgeId.size(), V = vertId.size();

    // Oriented edge a->b of tetrahedron t as (class, sign).
    auto edge = [&](int t, int a, int b) {
        auto [root, par] = edges.find(6 * t + pairIndex(a, b));
        int sign = par ? -1 : 1;
        if (a > b) sign = -sign;
        return std::pair(edgeId.at(root), sign);
    };

    Matrix d2;  // one row per face, one column per edge
    for (int t = 0; t < n; ++t)
        for (int f = 0; f < 4; ++f) {
            const auto& g = tri.adjacent(t, f);
            if (g && (g->tet < t || (g->tet == t && g->perm[f] < f))) continue;  // counted from the other side
            std::vector<int> v;
            for (int x = 0; x < 4; ++x)
                if (x != f) v.push_back(x);
            std::vector<cpp_int> row(E, 0);
            for (auto [a, b] : {std::pair(v[0], v[1]), std::pair(v[1], v[2]), std::pair(v[2], v[0])}) {
                auto [e, s] = edge(t, a, b);
                row[e] += s;
            }
            d2.push_back(std::move(row));
        }

    Matrix d1(E, std::vector<cpp_int>(V, 0));
    for (int t = 0; t < n; ++t)
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) {
                auto [e, s] = edge(t, a, b);
                // Tail and head of the class direction.
                const int tail = s > 0 ? a : b, head = s > 0 ? b : a;
                const int vt = vertId.at(verts.find(4 * t + tail).first), vh = vertId.at(verts.find(4 * t + head).first);
                d1[e].assign(V, 0);
                d1[e][vh] += 1;
                d1[e][vt] -= 1;
            }

    const auto r2 = diagonalise(d2);
    const auto r1 = diagonalise(d1);
    H1 h;
    h.betti = static_cast<int>(E) - static_cast<int>(r1.size()) - static_cast<int>(r2.size());
    for (const auto& d : r2)
        if (d > 1) h.torsion.push_back(static_cast<std::int64_t>(d));
    return h;
}

}  // namespace z2norm::oracle
