#pragma once

#include <string>

#include <json.hpp>

#include "z2norm/analyze.hpp"
#include "z2norm/homology.hpp"
#include "z2norm/lgraph.hpp"

namespace z2norm::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json toJson(const HomologyProfile& h);
Json toJson(const ParityCensus& c);
Json toJson(const BoundReport& r);
Json toJson(const LstEmbedding& l);
Json toJson(const TorusFinding& f);
Json toJson(const LintReport& r);
Json toJson(const TwistedSquare& s);
Json toJson(const Certificate& c);
Json toJson(const CompressionPattern& p);
Json toJson(const FlipRecord& f);
Json toJson(const LGraphNode& n);
Json toJson(const LensFamilyItem& item);

/// The full analysis: skeleton, homology, per-class census and bounds, tori, squares, lint, certificate.
Json analyzeReport(const Triangulation& tri, const std::string& input, const std::string& family);

}  // namespace z2norm::cli
