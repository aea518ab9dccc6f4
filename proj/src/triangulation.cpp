#include "z2norm/triangulation.hpp"

#include <sstream>

namespace z2norm {

int Triangulation::addTetrahedron() {
    adj_.emplace_back();
    return size() - 1;
}

void Triangulation::join(int tet, int facet, int other, Perm4 perm) {
    if (tet < 0 || tet >= size() || other < 0 || other >= size())
        throw DomainError("join: tetrahedron index out of range");
    const int otherFacet = perm[facet];
    if (adj_[tet][facet] || adj_[other][otherFacet])
        throw DomainError("join: facet already glued");
    if (tet == other && facet == otherFacet)
        throw DomainError("join: facet glued to itself");
    adj_[tet][facet] = Gluing{other, perm};
    adj_[other][otherFacet] = Gluing{tet, perm.inverse()};
}

void Triangulation::unjoin(int tet, int facet) {
    auto& g = adj_.at(tet).at(facet);
    if (!g) return;
    adj_[g->tet][g->perm[facet]].reset();
    g.reset();
}

bool Triangulation::isClosed() const { return boundaryFacetCount() == 0; }

int Triangulation::boundaryFacetCount() const {
    int n = 0;
    for (const auto& t : adj_)
        for (const auto& g : t)
            if (!g) ++n;
    return n;
}

std::string Triangulation::validationError() const {
    for (int t = 0; t < size(); ++t) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = adj_[t][f];
            if (!g) continue;
            std::ostringstream msg;
            if (!g->perm.isBijective()) {
                msg << "tet " << t << " facet " << f << ": malformed permutation";
                return msg.str();
            }
            if (g->tet < 0 || g->tet >= size()) {
                msg << "tet " << t << " facet " << f << ": dangling tetrahedron index " << g->tet;
                return msg.str();
            }
            const int back = g->perm[f];
            if (g->tet == t && back == f) {
                msg << "tet " << t << " facet " << f << ": facet glued to itself";
                return msg.str();
            }
            const auto& r = adj_[g->tet][back];
            if (!r || r->tet != t || r->perm != g->perm.inverse()) {
                msg << "tet " << t << " facet " << f << ": non-involutive gluing";
                return msg.str();
            }
        }
    }
    return {};
}

Triangulation Triangulation::subcomplex(const std::vector<int>& tets) const {
    std::vector<int> pos(static_cast<std::size_t>(size()), -1);
    for (std::size_t i = 0; i < tets.size(); ++i) pos[tets[i]] = static_cast<int>(i);
    Triangulation out(static_cast<int>(tets.size()));
    for (std::size_t i = 0; i < tets.size(); ++i) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = adj_[tets[i]][f];
            if (g && pos[g->tet] >= 0) out.adj_[i][f] = Gluing{pos[g->tet], g->perm};
        }
    }
    return out;
}

Triangulation Triangulation::relabelled(const std::vector<int>& newIndex, const std::vector<Perm4>& vertexMap) const {
    Triangulation out(size());
    for (int t = 0; t < size(); ++t) {
        const Perm4 vt = vertexMap[t];
        for (int f = 0; f < 4; ++f) {
            const auto& g = adj_[t][f];
            if (!g) continue;
            // new vertex v of new tet -> old vertex -> across gluing -> new labels of target
            const Perm4 p = vertexMap[g->tet] * g->perm * vt.inverse();
            out.adj_[newIndex[t]][vt[f]] = Gluing{newIndex[g->tet], p};
        }
    }
    return out;
}

void Triangulation::insertCopy(const Triangulation& other) {
    const int offset = size();
    for (const auto& t : other.adj_) {
        std::array<std::optional<Gluing>, 4> row;
        for (int f = 0; f < 4; ++f)
            if (t[f]) row[f] = Gluing{t[f]->tet + offset, t[f]->perm};
        adj_.push_back(row);
    }
}

}  // namespace z2norm
