#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jaco/core.hpp"
#include "jaco/infer.hpp"
#include "jaco/invariants.hpp"
#include "jaco/sequences.hpp"
#include "jaco/verify.hpp"

namespace jaco {

enum class GraphFormat { edges, dot, json_doc, csv_degrees };
std::optional<GraphFormat> parse_format(std::string_view name);

// edges: one "i j" line per arc, ascending by (i, j), no header.
// dot: digraph with vertex names v1..vn and tail -> head arc lines.
// json_doc: schema-versioned document carrying the compact representation.
// csv_degrees: header plus one row of degrees per vertex.
std::string write_graph(const JacoGraph& g, GraphFormat format);

// Parses a json_doc document, validating full self-consistency (including
// an optional "arcs" list, which must match the implied arc set).
JacoGraph parse_json_doc(const std::string& text);

std::vector<Arc> parse_edge_list(const std::string& text);

std::string write_analysis_json(const JacoGraph& g, const JaconianReport& r);
std::string write_sequence_json(const SequenceTable& t);
std::string write_inference_json(const InferenceResult& r);
std::string write_report_json(const std::vector<ClaimResult>& results,
                              const GridSpec& grid);
std::string report_table(const std::vector<ClaimResult>& results);

}  // namespace jaco
