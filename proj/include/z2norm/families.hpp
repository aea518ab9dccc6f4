#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "z2norm/homology.hpp"
#include "z2norm/triangulation.hpp"

namespace z2norm {

/// Slope attached to one boundary annulus of the pinched prism.
/// The solid torus glued there has boundary weights {|a|, |b|, |a+b|}; a {1,1,2} triple folds the annulus instead.
struct SlopePair {
    std::int64_t a = 0;
    std::int64_t b = 0;
    auto operator<=>(const SlopePair&) const = default;
};

/// Three-tetrahedron pinched prism with a layered solid torus (or an annulus fold) on each boundary annulus.
///
/// Layout: the prism tetrahedra are (B0 B1 B2 T2), (B0 B1 T1 T2), (B0 T0 T1 T2) with the top triangle
/// glued straight onto the bottom. Annulus i spans verticals Bi Ti and Bj Tj. On annuli 0 and 1 the weights
/// |a|, |b|, |a+b| land on the vertical, horizontal and diagonal edge; on annulus 2, whose diagonal runs the
/// other way, the horizontal and diagonal roles trade places.
Triangulation augmentedSolidTorus(const std::array<SlopePair, 3>& slopes);

/// Chain of n tetrahedra closed up into a loop. The twisted closure has one vertex.
Triangulation layeredLoop(int n, bool twisted);

enum class SeifertFamily { M, MPrime, P, Q };

const char* toString(SeifertFamily f);
/// Accepts "M", "M'", "Mprime", "P", "Q".
bool parseSeifertFamily(const std::string& s, SeifertFamily& out);

/// Unnormalised Seifert invariants over the 2-sphere.
struct SeifertParams {
    SeifertFamily family = SeifertFamily::M;
    int k = 0;
    int m = 0;
    int n = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> fibres;
    /// Slopes handed to augmentedSolidTorus; empty for layered loops.
    std::vector<SlopePair> augmented;
    HomologyProfile predicted;
};

/// H1 of S^2((a1,b1),...,(ar,br)) from the abelianised presentation a_i x_i + b_i h = 0, sum x_i = 0.
HomologyProfile seifertHomology(const std::vector<std::pair<std::int64_t, std::int64_t>>& fibres);

/// Builds a family member. Q uses only k (even); P uses only k.
std::pair<Triangulation, SeifertParams> seifertFamily(SeifertFamily family, int k, int m = 0, int n = 0);

}  // namespace z2norm
