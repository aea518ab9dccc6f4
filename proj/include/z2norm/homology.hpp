#pragma once

#include <cstdint>
#include <vector>

#include "z2norm/triangulation.hpp"

namespace z2norm {

/// Dense integer matrix, row-major. Sized for boundary maps of small triangulations.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::int64_t& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    std::int64_t operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    IntMatrix transposed() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::int64_t> data_;
};

struct SmithForm {
    /// Nonzero diagonal entries d_0 | d_1 | ..., all positive.
    std::vector<std::int64_t> diagonal;
    /// Unimodular U with U * A * V diagonal (only filled when requested).
    IntMatrix left;
    int rank() const { return static_cast<int>(diagonal.size()); }
};

/// Smith normal form over the integers. Throws DomainError on 64-bit overflow.
SmithForm smithNormalForm(IntMatrix a, bool trackLeft = false);

/// Rank over GF(2).
int rankMod2(const IntMatrix& a);

struct HomologyProfile {
    /// Torsion invariant factors of H1 (entries > 1), ascending in divisibility order.
    std::vector<std::int64_t> invariantFactors;
    int betti = 0;
    /// dim H1(M; Z2), computed over GF(2) directly.
    int z2Rank = 0;

    /// Order of the torsion subgroup.
    std::int64_t torsionOrder() const;
    /// |H1| when finite, 0 when H1 is infinite.
    std::int64_t order() const { return betti == 0 ? torsionOrder() : 0; }

    bool operator==(const HomologyProfile&) const = default;
};

/// Cellular boundary maps of the quotient cell structure.
/// d1 is vertices x edges, d2 is edges x faces, with classes numbered as in Skeleton.
struct BoundaryMaps {
    IntMatrix d1;
    IntMatrix d2;
};

BoundaryMaps boundaryMaps(const Triangulation& tri);

/// H1 of a closed triangulation; z2Rank is cross-checked against the invariant factors.
HomologyProfile firstHomology(const Triangulation& tri);

/// H1 of any valid triangulation (boundary allowed).
HomologyProfile firstHomologyAny(const Triangulation& tri);

/// For a one-vertex triangulation with H1 = Z (e.g. a solid torus), the image of each edge class in H1,
/// defined up to a global sign.
std::vector<std::int64_t> edgeClassesInInfiniteCyclicH1(const Triangulation& tri);

}  // namespace z2norm
