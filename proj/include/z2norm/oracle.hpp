#pragma once

#include <cstdint>
#include <vector>

#include "z2norm/triangulation.hpp"

namespace z2norm::oracle {

struct H1 {
    std::vector<std::int64_t> torsion;  // invariant factors > 1, each dividing the next
    int betti = 0;

    std::int64_t order() const;  // 0 when infinite
};

/// First homology straight from the gluing table: its own edge/face identification and an arbitrary precision
/// diagonalisation. Shares no code with Skeleton or smithNormalForm, so the two can check each other.
H1 firstHomology(const Triangulation& tri);

}  // namespace z2norm::oracle
