#include "z2norm/tri_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace z2norm {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

bool parseInt(std::string_view s, int& out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

Triangulation parseTriangulation(std::string_view text) {
    std::vector<std::pair<int, std::string_view>> lines;
    int lineNo = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        ++lineNo;
        std::string_view line = text.substr(pos, nl - pos);
        if (auto c = line.find('%'); c != std::string_view::npos) line = line.substr(0, c);
        line = trim(line);
        if (!line.empty()) lines.emplace_back(lineNo, line);
        pos = nl + 1;
    }
    if (lines.empty()) throw ParseError(lineNo, "empty input");

    auto header = split(lines[0].second);
    int count = 0;
    if (header.size() != 2 || header[0] != "tri" || !parseInt(header[1], count) || count < 0)
        throw ParseError(lines[0].first, "expected header \"tri <tet_count>\"");

    Triangulation tri(count);
    std::vector<int> tetLine(count, 0);
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const int ln = lines[li].first;
        auto tok = split(lines[li].second);
        if (tok.size() != 6 || tok[0] != "tet" || tok[1].empty() || tok[1].back() != ':')
            throw ParseError(ln, "expected \"tet <i>: g0 g1 g2 g3\"");
        int idx = 0;
        if (!parseInt(tok[1].substr(0, tok[1].size() - 1), idx)) throw ParseError(ln, "bad tetrahedron index");
        if (idx < 0 || idx >= count) throw ParseError(ln, "tetrahedron index " + std::to_string(idx) + " out of range");
        if (tetLine[idx]) throw ParseError(ln, "duplicate tetrahedron " + std::to_string(idx));
        tetLine[idx] = ln;
        for (int f = 0; f < 4; ++f) {
            std::string_view g = tok[2 + f];
            if (g == "-") continue;
            const auto colon = g.find(':');
            int target = 0;
            if (colon == std::string_view::npos || !parseInt(g.substr(0, colon), target))
                throw ParseError(ln, "bad gluing \"" + std::string(g) + "\"");
            if (target < 0 || target >= count)
                throw ParseError(ln, "dangling tetrahedron index " + std::to_string(target));
            Perm4 p;
            if (!Perm4::parse(g.substr(colon + 1), p))
                throw ParseError(ln, "malformed permutation \"" + std::string(g.substr(colon + 1)) + "\"");
            tri.setGluingOneSided(idx, f, Gluing{target, p});
        }
    }
    for (int t = 0; t < count; ++t)
        if (!tetLine[t]) throw ParseError(lines.back().first, "missing tetrahedron " + std::to_string(t));

    for (int t = 0; t < count; ++t) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = tri.adjacent(t, f);
            if (!g) continue;
            const int back = g->perm[f];
            if (g->tet == t && back == f) throw ParseError(tetLine[t], "facet glued to itself");
            const auto& r = tri.adjacent(g->tet, back);
            if (!r || r->tet != t || r->perm != g->perm.inverse())
                throw ParseError(tetLine[t], "non-involutive gluing at tet " + std::to_string(t) + " facet " + std::to_string(f));
        }
    }
    return tri;
}

std::string serializeTriangulation(const Triangulation& tri) {
    std::ostringstream out;
    out << "tri " << tri.size() << '\n';
    for (int t = 0; t < tri.size(); ++t) {
        out << "tet " << t << ':';
        for (int f = 0; f < 4; ++f) {
            const auto& g = tri.adjacent(t, f);
            if (g)
                out << ' ' << g->tet << ':' << g->perm.str();
            else
                out << " -";
        }
        out << '\n';
    }
    return out.str();
}

Triangulation readTriangulationFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parseTriangulation(buf.str());
}

void writeTriangulationFile(const std::string& path, const Triangulation& tri) {
    std::ofstream out(path);
    if (!out) throw DomainError("cannot write " + path);
    out << serializeTriangulation(tri);
}

}  // namespace z2norm
