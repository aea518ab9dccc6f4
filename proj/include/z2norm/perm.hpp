#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace z2norm {

/// A permutation of the four vertices of a tetrahedron.
///
/// Stored as the image tuple, so `Perm4{1,2,3,0}` sends 0 to 1, 1 to 2 and so on.
class Perm4 {
public:
    constexpr Perm4() : image_{0, 1, 2, 3} {}
    constexpr Perm4(int a, int b, int c, int d)
        : image_{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                 static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(d)} {}

    /// Builds from an image tuple without validation; use isBijective() on untrusted input.
    static constexpr Perm4 fromImages(const std::array<int, 4>& img) {
        return Perm4(img[0], img[1], img[2], img[3]);
    }

    constexpr int operator[](int i) const { return image_[i]; }

    constexpr Perm4 inverse() const {
        Perm4 out;
        for (int i = 0; i < 4; ++i) out.image_[image_[i]] = static_cast<std::uint8_t>(i);
        return out;
    }

    /// Composition: (p * q)[i] == p[q[i]].
    constexpr Perm4 operator*(const Perm4& q) const {
        Perm4 out;
        for (int i = 0; i < 4; ++i) out.image_[i] = image_[q.image_[i]];
        return out;
    }

    /// +1 for even permutations, -1 for odd.
    constexpr int sign() const {
        int inversions = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (image_[i] > image_[j]) ++inversions;
        return (inversions % 2 == 0) ? 1 : -1;
    }

    constexpr bool isIdentity() const { return *this == Perm4(); }

    constexpr bool isBijective() const {
        unsigned seen = 0;
        for (auto v : image_) {
            if (v > 3) return false;
            seen |= 1u << v;
        }
        return seen == 0xF;
    }

    /// Index in [0, 24) in lexicographic order of image tuples.
    int index() const;
    static Perm4 fromIndex(int idx);

    /// Images written as four digits, e.g. "1230".
    std::string str() const;
    /// Parses four digits; returns false if the text is not a bijection of 0..3.
    static bool parse(std::string_view text, Perm4& out);

    constexpr auto operator<=>(const Perm4&) const = default;

private:
    std::array<std::uint8_t, 4> image_;
};

/// Transposition swapping a and b.
constexpr Perm4 transposition(int a, int b) {
    std::array<int, 4> img{0, 1, 2, 3};
    img[a] = b;
    img[b] = a;
    return Perm4::fromImages(img);
}

/// Edge numbering: 0:01 1:02 2:03 3:12 4:13 5:23. Edge i is opposite edge 5 - i.
inline constexpr std::array<std::array<int, 2>, 6> kEdgeVertices{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

constexpr int edgeNumber(int a, int b) {
    if (a > b) {
        int t = a;
        a = b;
        b = t;
    }
    for (int i = 0; i < 6; ++i)
        if (kEdgeVertices[i][0] == a && kEdgeVertices[i][1] == b) return i;
    return -1;
}

constexpr int oppositeEdge(int e) { return 5 - e; }

/// Vertices of facet f (the facet opposite vertex f), in increasing order.
constexpr std::array<int, 3> facetVertices(int f) {
    std::array<int, 3> out{};
    int k = 0;
    for (int v = 0; v < 4; ++v)
        if (v != f) out[k++] = v;
    return out;
}

}  // namespace z2norm
