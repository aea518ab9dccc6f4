#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "z2norm/perm.hpp"

namespace z2norm {

/// Raised when an operation's domain precondition fails (bad parameters, wrong kind of input).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Facet f of the owning tetrahedron is glued to facet perm[f] of `tet`;
/// vertex i of the owner is identified with vertex perm[i] of `tet`.
struct Gluing {
    int tet = -1;
    Perm4 perm;

    bool operator==(const Gluing&) const = default;
};

/// A pseudo-simplicial triangulation given by facet pairings.
///
/// Facet i of a tetrahedron is the facet opposite vertex i. Gluings are kept
/// involutive: join() writes both directions.
class Triangulation {
public:
    Triangulation() = default;
    explicit Triangulation(int tetCount) : adj_(static_cast<std::size_t>(tetCount)) {}

    int size() const { return static_cast<int>(adj_.size()); }
    bool empty() const { return adj_.empty(); }

    /// Appends an isolated tetrahedron and returns its index.
    int addTetrahedron();

    const std::optional<Gluing>& adjacent(int tet, int facet) const { return adj_.at(tet).at(facet); }
    bool isGlued(int tet, int facet) const { return adjacent(tet, facet).has_value(); }

    /// Glues facet `facet` of `tet` to facet perm[facet] of `other`. Both facets must be free.
    void join(int tet, int facet, int other, Perm4 perm);
    /// Frees facet `facet` of `tet` and its partner.
    void unjoin(int tet, int facet);

    /// Writes one side only. Used by the parser, which checks involutivity afterwards.
    void setGluingOneSided(int tet, int facet, std::optional<Gluing> g) { adj_.at(tet).at(facet) = g; }

    bool isClosed() const;
    int boundaryFacetCount() const;

    /// Returns an empty string if the gluing data is valid, otherwise a description of the first problem.
    std::string validationError() const;
    bool isValid() const { return validationError().empty(); }

    /// Subcomplex on the listed tetrahedra, renumbered in list order; gluings leaving the set are dropped.
    Triangulation subcomplex(const std::vector<int>& tets) const;

    /// Relabels tetrahedra (tet i becomes newIndex[i]) and vertices (vertex v of old tet i becomes vertexMap[i][v]).
    Triangulation relabelled(const std::vector<int>& newIndex, const std::vector<Perm4>& vertexMap) const;

    /// Disjoint union, with `other`'s tetrahedra appended.
    void insertCopy(const Triangulation& other);

    bool operator==(const Triangulation&) const = default;

private:
    std::vector<std::array<std::optional<Gluing>, 4>> adj_;
};

}  // namespace z2norm
