#include "report.hpp"

#include "z2norm/surface.hpp"

namespace z2norm::cli {

namespace {

Json types(const std::vector<TetType>& v) {
    Json j = Json::array();
    for (auto t : v) j.push_back(toString(t));
    return j;
}

Json discName(int disc) {
    if (disc < 0) return nullptr;
    if (disc < 4) return "triangle " + std::to_string(disc);
    if (disc < 7) return "quad " + std::to_string(disc - 4);
    return "octagon " + std::to_string(disc - 7);
}

}  // namespace

Json toJson(const HomologyProfile& h) {
    return {{"invariant_factors", h.invariantFactors}, {"betti", h.betti}, {"z2_rank", h.z2Rank}, {"order", h.order()}};
}

Json toJson(const ParityCensus& c) {
    Json hist = Json::object();
    for (auto [d, n] : c.evenDegreeHistogram) hist[std::to_string(d)] = n;
    return {{"even_edges", c.eCount}, {"odd_edges", c.oCount}, {"even_degree_histogram", hist},
            {"n_q", c.nq},            {"n_t", c.nt},           {"n_0", c.n0},
            {"balanced", c.balanced()}};
}

Json toJson(const BoundReport& r) {
    return {{"census", toJson(r.census)},
            {"chi", r.chi},
            {"g", r.g},
            {"k_phi", r.kPhi},
            {"identity_lhs", r.identityLhs},
            {"identity_rhs", r.identityRhs},
            {"eq1_lhs", r.eq1Lhs},
            {"eq1_rhs", r.eq1Rhs},
            {"eq1_slack", r.eq1Lhs - r.eq1Rhs},
            {"balanced", r.balanced}};
}

Json toJson(const LstEmbedding& l) {
    Json boundary = Json::array();
    for (int c : l.boundary) boundary.push_back(l.ambientEdge[c]);
    Json interior = Json::array();
    for (int c : l.interior) interior.push_back(l.ambientEdge[c]);
    Json weights = Json::array();
    for (std::size_t c = 0; c < l.weights.size(); ++c)
        weights.push_back({{"edge", l.ambientEdge[c]}, {"weight", l.weights[c]}, {"local_degree", l.localDegree[c]}});
    Json j{{"tetrahedra", l.tets},
           {"p", l.p},
           {"q", l.q},
           {"boundary_edges", boundary},
           {"univalent_edge", l.univalent >= 0 ? Json(l.ambientEdge[l.univalent]) : Json(nullptr)},
           {"base_edge", l.base ? Json(l.ambientEdge[*l.base]) : Json(nullptr)},
           {"interior_edges", interior},
           {"weights", weights}};
    j["type"] = l.type ? Json(toString(*l.type)) : Json(nullptr);
    return j;
}

Json toJson(const TorusFinding& f) {
    Json j = toJson(f.lst);
    j["role"] = toString(f.role);
    j["even_boundary_edge"] = f.evenBoundaryEdge >= 0 ? Json(f.evenBoundaryEdge) : Json(nullptr);
    return j;
}

Json toJson(const LintReport& r) {
    Json edges = Json::array();
    for (const auto& e : r.edges) edges.push_back({{"edge", e.edge}, {"degree", e.degree}, {"status", toString(e.status)}});
    Json hist = Json::object();
    for (auto [d, n] : r.degreeHistogram) hist[std::to_string(d)] = n;
    return {{"low_degree_edges", edges},
            {"degree_histogram", hist},
            {"weighted_degree_sum", r.weightedDegreeSum},
            {"degree_identity", r.degreeIdentity()},
            {"edge_count_identity", r.edgeCountIdentity()}};
}

Json toJson(const TwistedSquare& s) { return {{"tet", s.tet}, {"quad", s.quad}, {"kind", toString(s.kind)}}; }

Json toJson(const Certificate& c) {
    Json classes = Json::array();
    for (const auto& k : c.classes)
        classes.push_back({{"cocycle", k.phi.str()}, {"chi", k.chi}, {"norm_bound", k.normBound}, {"balanced", k.balanced}});
    Json squares = Json::array();
    for (const auto& s : c.squares) squares.push_back(toJson(s));
    return {{"tet_count", c.tets},
            {"z2_rank", c.z2Rank},
            {"classes", classes},
            {"twisted_squares", squares},
            {"bound_form", c.boundForm},
            {"family", c.family.empty() ? Json(nullptr) : Json(c.family)},
            {"family_certified", c.familyCertified}};
}

Json toJson(const CompressionPattern& p) {
    Json curve = Json::array();
    for (const auto& d : p.curve) curve.push_back({{"tet", d.tet}, {"disc", discName(d.disc)}});
    return {{"kind", p.kind}, {"edge", p.edge}, {"curve", curve}};
}

Json toJson(const FlipRecord& f) {
    return {{"edge", f.edge},
            {"axis", f.axis},
            {"types_before", types(f.before)},
            {"types_after", types(f.after)},
            {"supportive_before", f.supportiveBefore},
            {"supportive_after", f.supportiveAfter}};
}

Json toJson(const LGraphNode& n) {
    return {{"p", n.p}, {"q", n.q}, {"depth", n.depth}, {"even_edges", n.eBar}, {"odd_edges", n.oBar},
            {"deficiency", n.deficiency}};
}

Json toJson(const LensFamilyItem& item) {
    return {{"node", toJson(item.node)},
            {"fold_edge_weight", item.fold.foldEdgeWeight},
            {"lens", {item.fold.lensA, item.fold.lensB}},
            {"pattern", toString(item.pattern)},
            {"census", toJson(item.census)}};
}

Json analyzeReport(const Triangulation& tri, const std::string& input, const std::string& family) {
    const Skeleton sk(tri);
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["input"] = {{"source", input}, {"family", family.empty() ? Json(nullptr) : Json(family)}};
    j["tet_count"] = tri.size();
    j["skeleton"] = {{"vertices", sk.vertexCount()},
                     {"edges", sk.edgeCount()},
                     {"faces", sk.faceCount()},
                     {"tetrahedra", tri.size()},
                     {"closed", tri.isClosed()},
                     {"orientable", isOrientable(tri)},
                     {"valid", sk.isValid()}};
    const bool closedOneVertex = tri.isClosed() && sk.vertexCount() == 1;
    j["homology"] = toJson(tri.isClosed() ? firstHomology(tri) : firstHomologyAny(tri));

    Json classes = Json::array();
    if (closedOneVertex) {
        for (const auto& phi : nonzeroClasses(cocycleBasis(tri))) {
            const BoundReport r = fundamentalReport(tri, phi);
            const SurfaceShape shape = surfaceClassify(tri, canonicalSurface(tri, phi).coord);
            Json tori = Json::array();
            for (const auto& f : torusRoles(tri, phi)) tori.push_back(toJson(f));
            Json patterns = Json::array();
            for (const auto& p : compressionPatternScan(tri, phi)) patterns.push_back(toJson(p));
            classes.push_back({{"cocycle", phi.str()},
                               {"bound_report", toJson(r)},
                               {"surface", {{"chi", shape.chi}, {"orientable", shape.orientable},
                                            {"connected", shape.connected}, {"discs", shape.discs}}},
                               {"tori", tori},
                               {"compression_patterns", patterns}});
        }
    }
    j["z2_rank"] = closedOneVertex ? Json(static_cast<int>(cocycleBasis(tri).size())) : Json(nullptr);
    j["classes"] = classes;

    Json lsts = Json::array();
    const auto found = findMaximalLsts(tri);
    for (const auto& l : found) lsts.push_back(toJson(l));
    j["lsts"] = {{"maximal", lsts}, {"intersection_matrix", lstIntersectionMatrix(found)}};
    Json squares = Json::array();
    for (const auto& s : twistedSquareScan(tri)) squares.push_back(toJson(s));
    j["twisted_squares"] = squares;
    j["lint"] = closedOneVertex ? toJson(lowDegreeLint(tri)) : Json(nullptr);
    j["certificate"] = closedOneVertex ? toJson(complexityCertificate(tri, family)) : Json(nullptr);
    return j;
}

}  // namespace z2norm::cli
