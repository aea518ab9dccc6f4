#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "z2norm/triangulation.hpp"

namespace z2norm {

/// Raised by parseTriangulation(); carries the 1-based line number of the offending input line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Reads the .tri text format:
///
///     % comment
///     tri <tet_count>
///     tet <i>: g0 g1 g2 g3
///
/// where gj is "-" (unglued) or "<t>:<abcd>", abcd being the images of vertices 0123.
Triangulation parseTriangulation(std::string_view text);

/// Canonical emission: tetrahedra ascending, facets in order, no comments.
std::string serializeTriangulation(const Triangulation& tri);

Triangulation readTriangulationFile(const std::string& path);
void writeTriangulationFile(const std::string& path, const Triangulation& tri);

}  // namespace z2norm
