#include "z2norm/families.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "z2norm/layered.hpp"
#include "z2norm/skeleton.hpp"

namespace z2norm {

namespace {

// Prism vertex labels: B0 B1 B2 = 0 1 2, T0 T1 T2 = 3 4 5.
constexpr std::array<std::array<int, 4>, 3> kPrism{{{0, 1, 2, 5}, {0, 1, 4, 5}, {0, 3, 4, 5}}};

enum Role { Vertical = 0, Horizontal = 1, Diagonal = 2 };

struct Annulus {
    FacetSlot x;
    FacetSlot y;
    bool reversed;
};

constexpr std::array<Annulus, 3> kAnnuli{{{{1, 3}, {2, 3}, false}, {{0, 0}, {1, 0}, false}, {{0, 1}, {2, 2}, true}}};

int roleOf(int tet, int u, int v) {
    const int a = kPrism[tet][u];
    const int b = kPrism[tet][v];
    if (a % 3 == b % 3) return Vertical;
    if ((a < 3) == (b < 3)) return Horizontal;
    return Diagonal;
}

std::array<int, 2> otherTwo(int facet, int v) {
    std::array<int, 2> out{};
    int i = 0;
    for (int w : facetVertices(facet))
        if (w != v) out[i++] = w;
    return out;
}

// Vertex of the annulus triangle opposite its edge of the given role.
int vertexOppositeRole(const FacetSlot& s, int role) {
    for (int v : facetVertices(s.facet)) {
        const auto e = otherTwo(s.facet, v);
        if (roleOf(s.tet, e[0], e[1]) == role) return v;
    }
    throw std::logic_error("annulus triangle lacks a role");
}

Triangulation pinchedPrism() {
    Triangulation t(3);
    for (int a = 0; a < 3; ++a) {
        for (int b = a + 1; b < 3; ++b) {
            for (int fa = 0; fa < 4; ++fa) {
                for (int fb = 0; fb < 4; ++fb) {
                    std::set<int> la, lb;
                    for (int v = 0; v < 4; ++v) {
                        if (v != fa) la.insert(kPrism[a][v]);
                        if (v != fb) lb.insert(kPrism[b][v]);
                    }
                    if (la != lb) continue;
                    std::array<int, 4> img{};
                    img[fa] = fb;
                    for (int v = 0; v < 4; ++v)
                        for (int w = 0; w < 4; ++w)
                            if (v != fa && kPrism[b][w] == kPrism[a][v]) img[v] = w;
                    t.join(a, fa, b, Perm4::fromImages(img));
                }
            }
        }
    }
    // Top T0 T1 T2 (facet 0 of the last tetrahedron) onto bottom B0 B1 B2 (facet 3 of the first).
    t.join(2, 0, 0, Perm4(3, 0, 1, 2));
    return t;
}

// roleOfWeight[i] is the annulus role receiving the weight |a|, |b|, |a+b| respectively.
std::array<int, 3> rolesFor(const Annulus& ann) {
    return ann.reversed ? std::array<int, 3>{Vertical, Diagonal, Horizontal}
                        : std::array<int, 3>{Vertical, Horizontal, Diagonal};
}

void foldAnnulus(Triangulation& t, const Annulus& ann, int fixedRole) {
    // The fixed role maps to itself; the other two trade places.
    std::array<int, 3> target{};
    for (int r = 0; r < 3; ++r) target[r] = r == fixedRole ? r : 3 - r - fixedRole;
    std::array<int, 4> img{};
    img[ann.x.facet] = ann.y.facet;
    for (int r = 0; r < 3; ++r) img[vertexOppositeRole(ann.x, r)] = vertexOppositeRole(ann.y, target[r]);
    const Perm4 p = Perm4::fromImages(img);
    if (!p.isBijective()) throw DomainError("augmented solid torus: fold does not match the annulus");
    t.join(ann.x.tet, ann.x.facet, ann.y.tet, p);
}

void attachTorus(Triangulation& t, const Annulus& ann, const LayeredSolidTorus& lst, const std::array<int, 3>& weightRole,
                 const std::array<std::int64_t, 3>& weights, bool swapFaces) {
    const int offset = t.size();
    t.insertCopy(lst.tri);
    const Skeleton sk(lst.tri);
    const BoundaryTorus bt = boundaryTorus(lst.tri, sk);
    FacetSlot faceA = bt.faceA;
    FacetSlot faceB = bt.faceB;
    if (swapFaces) std::swap(faceA, faceB);

    // Role of each LST boundary edge class; equal weights ({1,1,2} never reaches here) are resolved in order.
    std::array<int, 3> roleOfClass{};
    std::array<bool, 3> used{};
    for (int i = 0; i < 3; ++i) {
        const std::int64_t w = lst.meta.edgeWeights[lst.meta.boundaryEdges[i]];
        for (int j = 0; j < 3; ++j) {
            if (!used[j] && weights[j] == w) {
                used[j] = true;
                roleOfClass[i] = weightRole[j];
                break;
            }
        }
    }
    for (auto [face, tri] : {std::pair{faceA, ann.x}, std::pair{faceB, ann.y}}) {
        std::array<int, 4> img{};
        img[face.facet] = tri.facet;
        for (int v : facetVertices(face.facet)) {
            const auto e = otherTwo(face.facet, v);
            const int cls = sk.edgeOf(face.tet, edgeNumber(e[0], e[1]));
            int idx = 0;
            while (lst.meta.boundaryEdges[idx] != cls) ++idx;
            img[v] = vertexOppositeRole(tri, roleOfClass[idx]);
        }
        t.join(face.tet + offset, face.facet, tri.tet, Perm4::fromImages(img));
    }
}

bool acceptable(const Triangulation& t) {
    const Skeleton sk(t);
    return t.isClosed() && sk.isValid() && sk.vertexCount() == 1 && isOrientable(t);
}

}  // namespace

Triangulation augmentedSolidTorus(const std::array<SlopePair, 3>& slopes) {
    Triangulation t = pinchedPrism();
    for (int i = 0; i < 3; ++i) {
        const SlopePair s = slopes[i];
        const std::array<std::int64_t, 3> w{std::llabs(s.a), std::llabs(s.b), std::llabs(s.a + s.b)};
        if (w[0] == 0 || w[1] == 0 || w[2] == 0)
            throw DomainError("augmented solid torus: slope (" + std::to_string(s.a) + "," + std::to_string(s.b) +
                              ") is not realisable by a layered solid torus");
        const auto roles = rolesFor(kAnnuli[i]);
        auto sorted = w;
        std::sort(sorted.begin(), sorted.end());
        if (sorted == std::array<std::int64_t, 3>{1, 1, 2}) {
            const int two = static_cast<int>(std::find(w.begin(), w.end(), 2) - w.begin());
            foldAnnulus(t, kAnnuli[i], roles[two]);
            continue;
        }
        const LayeredSolidTorus lst = layeredSolidTorus(sorted[0], sorted[1]);
        Triangulation attempt = t;
        attachTorus(attempt, kAnnuli[i], lst, roles, w, false);
        t = std::move(attempt);
    }
    if (!acceptable(t)) throw DomainError("augmented solid torus: gluing produced an invalid or non-orientable complex");
    return t;
}

Triangulation layeredLoop(int n, bool twisted) {
    if (n < 3) throw DomainError("layered loop: need at least 3 tetrahedra");
    Triangulation t(n);
    for (int i = 0; i + 1 < n; ++i) {
        t.join(i, 0, i + 1, Perm4(1, 0, 2, 3));
        t.join(i, 3, i + 1, Perm4(0, 1, 3, 2));
    }
    if (twisted) {
        t.join(n - 1, 0, 0, Perm4(2, 3, 1, 0));
        t.join(n - 1, 3, 0, Perm4(3, 2, 0, 1));
    } else {
        t.join(n - 1, 0, 0, Perm4(1, 0, 2, 3));
        t.join(n - 1, 3, 0, Perm4(0, 1, 3, 2));
    }
    return t;
}

const char* toString(SeifertFamily f) {
    switch (f) {
        case SeifertFamily::M: return "M";
        case SeifertFamily::MPrime: return "M'";
        case SeifertFamily::P: return "P";
        case SeifertFamily::Q: return "Q";
    }
    return "?";
}

bool parseSeifertFamily(const std::string& s, SeifertFamily& out) {
    if (s == "M") out = SeifertFamily::M;
    else if (s == "M'" || s == "Mprime" || s == "Mp") out = SeifertFamily::MPrime;
    else if (s == "P") out = SeifertFamily::P;
    else if (s == "Q") out = SeifertFamily::Q;
    else return false;
    return true;
}

HomologyProfile seifertHomology(const std::vector<std::pair<std::int64_t, std::int64_t>>& fibres) {
    const int r = static_cast<int>(fibres.size());
    IntMatrix rel(r + 1, r + 1);  // columns x_1..x_r, h
    for (int i = 0; i < r; ++i) {
        rel(i, i) = fibres[i].first;
        rel(i, r) = fibres[i].second;
        rel(r, i) = 1;
    }
    const SmithForm snf = smithNormalForm(rel);
    HomologyProfile hp;
    for (auto d : snf.diagonal)
        if (d > 1) hp.invariantFactors.push_back(d);
    hp.betti = (r + 1) - snf.rank();
    hp.z2Rank = (r + 1) - rankMod2(rel);
    return hp;
}

std::pair<Triangulation, SeifertParams> seifertFamily(SeifertFamily family, int k, int m, int n) {
    SeifertParams sp;
    sp.family = family;
    sp.k = k;
    using I = std::int64_t;
    switch (family) {
        case SeifertFamily::M:
        case SeifertFamily::MPrime:
            if (k < 1 || m < 1 || n < 1) throw DomainError("seifert family: k, m, n must be positive");
            sp.m = m;
            sp.n = n;
            if (family == SeifertFamily::M) {
                sp.fibres = {{1, 1}, {2 * I{k} + 1, 1}, {2 * I{m} + 1, 1}, {2 * I{n} + 1, 1}};
                sp.augmented = {{2 * I{k} + 1, -2 * I{k} - 2}, {2 * I{m} + 1, -2 * I{m} - 2}, {2 * I{n} + 1, -1}};
            } else {
                sp.fibres = {{1, -1}, {2 * I{k} + 2, 1}, {2 * I{m} + 2, 1}, {2 * I{n} + 2, 1}};
                sp.augmented = {{2 * I{k} + 2, -1}, {2 * I{m} + 2, -1}, {2 * I{n} + 2, -1}};
            }
            break;
        case SeifertFamily::P:
            if (k < 1) throw DomainError("seifert family P: k must be positive");
            sp.fibres = {{1, -1}, {2, 1}, {2, 1}, {6 * I{k} + 4, 6 * I{k} + 1}};
            sp.augmented = {{2, -1}, {2, -1}, {6 * I{k} + 4, -6 * I{k} - 1}};
            break;
        case SeifertFamily::Q:
            if (k < 4 || k % 2 != 0) throw DomainError("seifert family Q: k must be even and at least 4");
            sp.fibres = {{2, 1}, {2, 1}, {I{k}, 1 - I{k}}};
            break;
    }
    sp.predicted = seifertHomology(sp.fibres);
    Triangulation tri = sp.augmented.empty()
                            ? layeredLoop(k, true)
                            : augmentedSolidTorus({sp.augmented[0], sp.augmented[1], sp.augmented[2]});
    return {std::move(tri), std::move(sp)};
}

}  // namespace z2norm
