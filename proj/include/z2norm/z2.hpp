#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "z2norm/skeleton.hpp"
#include "z2norm/triangulation.hpp"

namespace z2norm {

/// A GF(2) value per edge class. Represents a class in H^1(M; Z2) on one-vertex triangulations.
struct Cocycle {
    std::vector<std::uint8_t> bits;

    bool odd(int edge) const { return bits.at(edge) != 0; }
    bool even(int edge) const { return bits.at(edge) == 0; }
    bool isZero() const;
    int oddCount() const;
    std::string str() const;  // e.g. "0110"

    Cocycle operator+(const Cocycle& o) const;
    auto operator<=>(const Cocycle&) const = default;
};

/// True when every face has an even number of odd edges (counted with multiplicity).
bool isCocycle(const Triangulation& tri, const Skeleton& sk, const Cocycle& c);

/// GF(2) basis of the face-relation kernel, in reduced echelon order.
/// Requires a closed one-vertex triangulation.
std::vector<Cocycle> cocycleBasis(const Triangulation& tri);

/// All 2^r - 1 nonzero combinations of a basis, in binary counting order of the coefficients.
std::vector<Cocycle> nonzeroClasses(const std::vector<Cocycle>& basis);

enum class TetType { Dq, Dt, D0 };

const char* toString(TetType t);

struct TetColouring {
    TetType type = TetType::D0;
    /// Dq: the even opposite pair k, i.e. edges k and 5-k. Dt: the vertex whose three edges are odd. D0: -1.
    int index = -1;
};

/// Classifies every tetrahedron; throws DomainError when a parity pattern lies outside the
/// three types, which only happens for vectors that are not cocycles.
std::vector<TetColouring> classifyTetrahedra(const Skeleton& sk, const Cocycle& c);

struct ParityCensus {
    int eCount = 0;  // even edges
    int oCount = 0;  // odd edges
    std::map<int, int> evenDegreeHistogram;  // degree -> number of even edges
    int eTilde = 0;  // sum of degrees of even edges
    int nq = 0;
    int nt = 0;
    int n0 = 0;

    struct Subcomplex {
        int vertices = 0;
        int edges = 0;
        int faces = 0;
        int tets = 0;
        int euler() const { return vertices - edges + faces - tets; }
    } evenSubcomplex;

    int evenOfDegree(int d) const;
    bool balanced() const { return eCount == oCount; }
};

/// Census of a colouring; asserts eTilde = 2 nq + 3 nt + 6 n0.
ParityCensus parityCensus(const Skeleton& sk, const Cocycle& c);

}  // namespace z2norm
