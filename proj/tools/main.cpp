#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "report.hpp"
#include "z2norm/acceptance.hpp"
#include "z2norm/families.hpp"
#include "z2norm/layered.hpp"
#include "z2norm/surface.hpp"
#include "z2norm/tri_io.hpp"

using namespace z2norm;
using cli::Json;

namespace {

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

// Writes the triangulation to `out`, or to stdout when `out` is empty.
void emit(const Triangulation& tri, const std::string& out, const std::string& what) {
    if (out.empty()) {
        std::cout << serializeTriangulation(tri);
        return;
    }
    writeTriangulationFile(out, tri);
    print({{"schema_version", cli::kSchemaVersion},
           {"constructed", what},
           {"out", out},
           {"tet_count", tri.size()},
           {"homology", cli::toJson(tri.isClosed() ? firstHomology(tri) : firstHomologyAny(tri))}});
}

std::vector<Cocycle> selectClasses(const Triangulation& tri, int index) {
    const auto all = nonzeroClasses(cocycleBasis(tri));
    if (index < 0) return all;
    if (index >= static_cast<int>(all.size()))
        throw DomainError("class index " + std::to_string(index) + " out of range (" + std::to_string(all.size()) +
                          " nonzero classes)");
    return {all[index]};
}

Cocycle singleClass(const Triangulation& tri, int index) {
    const auto all = nonzeroClasses(cocycleBasis(tri));
    if (all.empty()) throw DomainError("no nonzero Z2 class");
    if (index < 0) index = 0;
    if (index >= static_cast<int>(all.size())) throw DomainError("class index " + std::to_string(index) + " out of range");
    return all[index];
}

// Boundary edge of a layered solid torus named p, q, pq or by its weight.
int pickFoldEdge(const Triangulation& lst, const std::string& which) {
    const Skeleton sk(lst);
    const auto weights = meridianWeightsFromHomology(lst);
    auto edges = boundaryTorus(lst, sk).edges;
    std::sort(edges.begin(), edges.end(), [&](int a, int b) { return weights[a] < weights[b]; });
    if (which == "p") return edges[0];
    if (which == "q") return edges[1];
    if (which == "pq") return edges[2];
    for (int e : edges)
        if (std::to_string(weights[e]) == which) return e;
    throw DomainError("fold: no boundary edge \"" + which + "\" (use p, q, pq or a weight)");
}

std::array<SlopePair, 3> parseSlopes(const std::string& text) {
    std::array<SlopePair, 3> out{};
    std::istringstream in(text);
    std::string part;
    int i = 0;
    while (std::getline(in, part, ';')) {
        if (i == 3) throw DomainError("augmented: expected three slopes a,b;a,b;a,b");
        const auto comma = part.find(',');
        if (comma == std::string::npos) throw DomainError("augmented: slope \"" + part + "\" is not a,b");
        try {
            out[i] = {std::stoll(part.substr(0, comma)), std::stoll(part.substr(comma + 1))};
        } catch (const std::exception&) {
            throw DomainError("augmented: slope \"" + part + "\" is not a,b");
        }
        ++i;
    }
    if (i != 3) throw DomainError("augmented: expected three slopes a,b;a,b;a,b");
    return out;
}

MoveKind parseMoveKind(const std::string& s) {
    if (s == "move23" || s == "23") return MoveKind::Move23;
    if (s == "move32" || s == "32") return MoveKind::Move32;
    if (s == "move44" || s == "44") return MoveKind::Move44;
    throw DomainError("unknown move kind \"" + s + "\"");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Z2 edge colourings, canonical surfaces and complexity bounds for 3-manifold triangulations"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::string out, input, family, edgeName = "q", slopes, tag, moveKind = "move23";
    std::int64_t p = 1, q = 2;
    int k = 1, m = 0, n = 0, loopSize = 4, depth = 6, classIndex = -1, kPhi = 0, target = 0, axis = 0;
    bool twisted = false, json = false, kPhiFromScan = false;
    std::vector<std::string> only, inputs;
    std::vector<int> bEdges;

    auto* construct = app.add_subcommand("construct", "Build a triangulation");
    construct->require_subcommand(1);
    auto* cLst = construct->add_subcommand("lst", "Layered solid torus T(p,q,p+q)");
    cLst->add_option("--p", p, "First meridian weight")->required();
    cLst->add_option("--q", q, "Second meridian weight")->required();
    cLst->add_option("--out", out, "Output .tri file (stdout when omitted)");
    auto* cFold = construct->add_subcommand("fold", "Fold a layered solid torus into a lens space");
    cFold->add_option("input,--input", input, "Layered solid torus .tri file");
    cFold->add_option("--p", p, "First meridian weight (when no input file)");
    cFold->add_option("--q", q, "Second meridian weight (when no input file)");
    cFold->add_option("--edge", edgeName, "Fold edge: p, q, pq or a weight")->capture_default_str();
    cFold->add_option("--out", out, "Output .tri file");
    auto* cFamily = construct->add_subcommand("family", "Seifert fibred family member (M, M', P, Q)");
    cFamily->add_option("--tag", tag, "M, M', P or Q")->required();
    cFamily->add_option("--k", k, "k")->required();
    cFamily->add_option("--m", m, "m (M and M' only)");
    cFamily->add_option("--n", n, "n (M and M' only)");
    cFamily->add_option("--out", out, "Output .tri file");
    auto* cLoop = construct->add_subcommand("loop", "Layered loop");
    cLoop->add_option("--n", loopSize, "Number of tetrahedra")->required();
    cLoop->add_flag("--twisted", twisted, "Twisted closure (one vertex)");
    cLoop->add_option("--out", out, "Output .tri file");
    auto* cAug = construct->add_subcommand("augmented", "Augmented solid torus");
    cAug->add_option("--slopes", slopes, "Three slopes \"a,b;a,b;a,b\"")->required();
    cAug->add_option("--out", out, "Output .tri file");

    auto* analyze = app.add_subcommand("analyze", "Full report for a triangulation");
    analyze->add_option("file", input, "Input .tri file")->required();
    analyze->add_option("--family", family, "Known family tag for the certificate");
    analyze->add_flag("--json", json, "JSON output");

    auto* colourings = app.add_subcommand("colourings", "Nonzero Z2 classes and tetrahedron types");
    colourings->add_option("file", input, "Input .tri file")->required();

    auto* surface = app.add_subcommand("surface", "Canonical surface of each class, or its b-modification");
    surface->add_option("file", input, "Input .tri file")->required();
    surface->add_option("--class", classIndex, "Class index (all when omitted)");
    surface->add_option("--b", bEdges, "Even edges raised to weight two")->delimiter(',');

    auto* bounds = app.add_subcommand("bounds", "Fundamental identity and inequality report");
    bounds->add_option("file", input, "Input .tri file")->required();
    bounds->add_option("--class", classIndex, "Class index (all when omitted)");
    bounds->add_option("--k-phi", kPhi, "Number of compression discs")->check(CLI::NonNegativeNumber);
    bounds->add_flag("--k-phi-from-scan", kPhiFromScan, "Take k_phi from the compression pattern scan");

    auto* moves = app.add_subcommand("moves", "Apply a Pachner move");
    moves->add_option("file", input, "Input .tri file")->required();
    moves->add_option("--kind", moveKind, "move23, move32 or move44")->required();
    moves->add_option("--target", target, "Face (move23) or edge (move32, move44) index")->required();
    moves->add_option("--axis", axis, "move44 diagonal: 0 or 1");
    moves->add_option("--out", out, "Output .tri file");

    auto* promoteCmd = app.add_subcommand("promote", "Flip away supportive tori");
    promoteCmd->add_option("file", input, "Input .tri file")->required();
    promoteCmd->add_option("--class", classIndex, "Class index (default 0)");
    promoteCmd->add_option("--out", out, "Output .tri file");

    auto* findLst = app.add_subcommand("find-lst", "Maximal layered solid tori");
    findLst->add_option("file", input, "Input .tri file")->required();
    findLst->add_option("--class", classIndex, "Tag tori with this class");

    auto* squares = app.add_subcommand("twisted-squares", "Tetrahedra with two pairs of opposite edges identified");
    squares->add_option("file", input, "Input .tri file")->required();

    auto* lgraphCmd = app.add_subcommand("lgraph", "L-graph nodes with deficiency");
    lgraphCmd->add_option("--depth", depth, "Depth limit")->capture_default_str();

    auto* enumLens = app.add_subcommand("enumerate-lens", "Balanced and new minimal lens families");
    enumLens->add_option("--depth", depth, "Depth limit")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Run the acceptance checks");
    verify->add_option("--only", only, "Run only the named checks");
    verify->add_option("--input", inputs, "Also validate these .tri files");
    verify->add_flag("--json", json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cLst->parsed()) {
            emit(layeredSolidTorus(p, q).tri, out, "lst");
        } else if (cFold->parsed()) {
            const Triangulation lst = input.empty() ? layeredSolidTorus(p, q).tri : readTriangulationFile(input);
            emit(foldAlongEdge(lst, pickFoldEdge(lst, edgeName)), out, "fold");
        } else if (cFamily->parsed()) {
            SeifertFamily f;
            if (!parseSeifertFamily(tag, f)) throw DomainError("unknown family tag \"" + tag + "\"");
            emit(seifertFamily(f, k, m, n).first, out, std::string("family ") + toString(f));
        } else if (cLoop->parsed()) {
            emit(layeredLoop(loopSize, twisted), out, twisted ? "twisted loop" : "loop");
        } else if (cAug->parsed()) {
            emit(augmentedSolidTorus(parseSlopes(slopes)), out, "augmented");
        } else if (analyze->parsed()) {
            const Json r = cli::analyzeReport(readTriangulationFile(input), input, family);
            if (json) {
                print(r);
            } else {
                std::cout << "tetrahedra " << r["tet_count"] << ", edges " << r["skeleton"]["edges"] << ", vertices "
                          << r["skeleton"]["vertices"] << "\n";
                std::cout << "H1 invariant factors " << r["homology"]["invariant_factors"].dump() << ", betti "
                          << r["homology"]["betti"] << ", Z2 rank " << r["homology"]["z2_rank"] << "\n";
                for (const auto& c : r["classes"])
                    std::cout << "class " << c["cocycle"].get<std::string>() << ": chi " << c["bound_report"]["chi"]
                              << (c["bound_report"]["balanced"].get<bool>() ? ", balanced" : "") << "\n";
                std::cout << "maximal layered solid tori " << r["lsts"]["maximal"].size() << ", twisted squares "
                          << r["twisted_squares"].size() << "\n";
                if (!r["certificate"].is_null())
                    std::cout << "bound form " << r["certificate"]["bound_form"].get<std::string>() << "\n";
            }
        } else if (colourings->parsed()) {
            const Triangulation tri = readTriangulationFile(input);
            const Skeleton sk(tri);
            Json classes = Json::array();
            for (const auto& phi : nonzeroClasses(cocycleBasis(tri))) {
                Json tets = Json::array();
                for (const auto& c : classifyTetrahedra(sk, phi))
                    tets.push_back({{"type", toString(c.type)}, {"index", c.index}});
                classes.push_back({{"cocycle", phi.str()}, {"tetrahedra", tets}, {"census", cli::toJson(parityCensus(sk, phi))}});
            }
            print({{"schema_version", cli::kSchemaVersion}, {"classes", classes}});
        } else if (surface->parsed()) {
            const Triangulation tri = readTriangulationFile(input);
            Json list = Json::array();
            for (const auto& phi : selectClasses(tri, classIndex)) {
                Json entry{{"cocycle", phi.str()}};
                NormalCoordinate coord;
                if (bEdges.empty()) {
                    coord = canonicalSurface(tri, phi).coord;
                } else {
                    const BModification mod = bModification(tri, phi, bEdges);
                    coord = mod.coord;
                    entry["b"] = bEdges;
                    entry["octagons"] = mod.octagons;
                }
                const SurfaceShape s = surfaceClassify(tri, coord);
                entry["chi"] = s.chi;
                entry["orientable"] = s.orientable;
                entry["connected"] = s.connected;
                entry["discs"] = s.discs;
                entry["coordinates"] = coord.dump();
                list.push_back(entry);
            }
            print({{"schema_version", cli::kSchemaVersion}, {"surfaces", list}});
        } else if (bounds->parsed()) {
            const Triangulation tri = readTriangulationFile(input);
            Json list = Json::array();
            for (const auto& phi : selectClasses(tri, classIndex)) {
                const int kp = kPhiFromScan ? static_cast<int>(compressionPatternScan(tri, phi).size()) : kPhi;
                Json entry = cli::toJson(fundamentalReport(tri, phi, kp));
                entry["cocycle"] = phi.str();
                list.push_back(entry);
            }
            print({{"schema_version", cli::kSchemaVersion}, {"reports", list}});
        } else if (moves->parsed()) {
            const Triangulation tri = readTriangulationFile(input);
            const MoveResult r = applyMove(tri, {parseMoveKind(moveKind), target, axis});
            if (out.empty()) {
                std::cout << serializeTriangulation(r.tri);
            } else {
                writeTriangulationFile(out, r.tri);
                print({{"schema_version", cli::kSchemaVersion},
                       {"move", toString(parseMoveKind(moveKind))},
                       {"tet_count_before", tri.size()},
                       {"tet_count_after", r.tri.size()},
                       {"new_edge", r.newEdge >= 0 ? Json(r.newEdge) : Json(nullptr)},
                       {"out", out}});
            }
        } else if (promoteCmd->parsed()) {
            const Triangulation tri = readTriangulationFile(input);
            const PromoteResult r = promote(tri, singleClass(tri, classIndex));
            if (!out.empty()) writeTriangulationFile(out, r.tri);
            Json log = Json::array();
            for (const auto& f : r.log) log.push_back(cli::toJson(f));
            print({{"schema_version", cli::kSchemaVersion},
                   {"flips", log},
                   {"unresolved", r.unresolved},
                   {"supportive_remaining", supportiveCount(r.tri, r.phi)},
                   {"tet_count", r.tri.size()},
                   {"out", out.empty() ? Json(nullptr) : Json(out)}});
        } else if (findLst->parsed()) {
            const Triangulation tri = readTriangulationFile(input);
            Json tori = Json::array();
            std::vector<LstEmbedding> found;
            if (classIndex >= 0) {
                for (const auto& f : torusRoles(tri, singleClass(tri, classIndex))) {
                    tori.push_back(cli::toJson(f));
                    found.push_back(f.lst);
                }
            } else {
                found = findMaximalLsts(tri);
                for (const auto& l : found) tori.push_back(cli::toJson(l));
            }
            print({{"schema_version", cli::kSchemaVersion},
                   {"maximal", tori},
                   {"intersection_matrix", lstIntersectionMatrix(found)}});
        } else if (squares->parsed()) {
            Json list = Json::array();
            for (const auto& s : twistedSquareScan(readTriangulationFile(input))) list.push_back(cli::toJson(s));
            print({{"schema_version", cli::kSchemaVersion}, {"twisted_squares", list}});
        } else if (lgraphCmd->parsed()) {
            Json list = Json::array();
            for (const auto& node : lgraph(depth)) list.push_back(cli::toJson(node));
            print({{"schema_version", cli::kSchemaVersion}, {"nodes", list}});
        } else if (enumLens->parsed()) {
            Json list = Json::array();
            for (const auto& item : enumerateMinimalLensFamilies(depth)) list.push_back(cli::toJson(item));
            print({{"schema_version", cli::kSchemaVersion}, {"lens_spaces", list}});
        } else if (verify->parsed()) {
            bool ok = true;
            Json inputResults = Json::array();
            for (const auto& path : inputs) {
                std::string error;
                try {
                    const Triangulation tri = readTriangulationFile(path);
                    error = tri.validationError();
                } catch (const std::exception& e) {
                    error = e.what();
                }
                ok = ok && error.empty();
                inputResults.push_back({{"file", path}, {"passed", error.empty()}, {"error", error}});
                if (!json) std::cout << (error.empty() ? "PASS" : "FAIL") << " input " << path << (error.empty() ? "" : ": " + error) << "\n";
            }
            const auto results = runAcceptance({only.begin(), only.end()});
            Json checks = Json::array();
            for (const auto& r : results) {
                ok = ok && r.passed;
                checks.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"failures", r.failures}});
                if (!json) {
                    std::cout << (r.passed ? "PASS" : "FAIL") << " " << std::setw(2) << r.id << " " << r.name << ": " << r.detail << "\n";
                    for (const auto& f : r.failures) std::cout << "    " << f << "\n";
                }
            }
            if (json) print({{"schema_version", cli::kSchemaVersion}, {"passed", ok}, {"inputs", inputResults}, {"checks", checks}});
            return ok ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << (input.empty() ? "" : input + ": ") << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
