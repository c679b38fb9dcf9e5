#include "doctest.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>

#include "jaco/core.hpp"
#include "jaco/infer.hpp"
#include "jaco/io.hpp"

using jaco::GraphFormat;
using jaco::JacoGraph;

namespace {

std::int64_t line_count(const std::string& s) {
    return std::count(s.begin(), s.end(), '\n');
}

}  // namespace

TEST_CASE("format names") {
    CHECK(jaco::parse_format("edges") == GraphFormat::edges);
    CHECK(jaco::parse_format("dot") == GraphFormat::dot);
    CHECK(jaco::parse_format("json-doc") == GraphFormat::json_doc);
    CHECK(jaco::parse_format("csv-degrees") == GraphFormat::csv_degrees);
    CHECK_FALSE(jaco::parse_format("png").has_value());
}

TEST_CASE("edge list output") {
    const JacoGraph g = jaco::construct({2, 1, false}, 11);
    const std::string edges = jaco::write_graph(g, GraphFormat::edges);
    CHECK(line_count(edges) == 39);
    CHECK(edges.substr(0, 4) == "1 2\n");
    CHECK(edges.find("1 4\n") != std::string::npos);
    CHECK(edges.find("1 5\n") == std::string::npos);
    CHECK(edges.back() == '\n');

    CHECK(line_count(jaco::write_graph(jaco::construct({0, 3, true}, 15),
                                       GraphFormat::edges)) == 21);
    CHECK(jaco::write_graph(jaco::construct({1, 0, false}, 1), GraphFormat::edges)
              .empty());
}

TEST_CASE("edge list round trip agrees with has_arc") {
    for (std::int64_t m : {1, 3}) {
        for (std::int64_t c : {0, 2}) {
            const JacoGraph g = jaco::construct({m, c, false}, 40);
            const auto arcs =
                jaco::parse_edge_list(jaco::write_graph(g, GraphFormat::edges));
            CHECK(arcs == jaco::arcs_of(g));
            std::int64_t count = 0;
            for (std::int64_t i = 1; i <= g.n; ++i)
                for (std::int64_t j = i + 1; j <= g.n; ++j)
                    count += jaco::has_arc(g, i, j) ? 1 : 0;
            CHECK(count == static_cast<std::int64_t>(arcs.size()));
        }
    }
}

TEST_CASE("dot output") {
    const JacoGraph g = jaco::construct({1, 0, false}, 3);
    const std::string dot = jaco::write_graph(g, GraphFormat::dot);
    CHECK(dot.find("digraph J {") == 0);
    CHECK(dot.find("  v1;\n") != std::string::npos);
    CHECK(dot.find("  v1 -> v2;\n") != std::string::npos);
    CHECK(dot.find("  v2 -> v3;\n") != std::string::npos);
    CHECK(dot.find("v1 -> v3") == std::string::npos);
    // every arc line corresponds to has_arc
    std::istringstream in(dot);
    std::string line;
    while (std::getline(in, line)) {
        const auto arrow = line.find(" -> ");
        if (arrow == std::string::npos) continue;
        const std::int64_t i = std::stoll(line.substr(line.find('v') + 1));
        const std::int64_t j = std::stoll(line.substr(line.find('v', arrow) + 1));
        CHECK(jaco::has_arc(g, i, j));
    }
}

TEST_CASE("json document round trip is byte identical") {
    for (std::int64_t m : {0, 2}) {
        const JacoGraph g = jaco::construct({m, 3, m == 0}, 25);
        const std::string doc = jaco::write_graph(g, GraphFormat::json_doc);
        const JacoGraph back = jaco::parse_json_doc(doc);
        CHECK(back == g);
        CHECK(jaco::write_graph(back, GraphFormat::json_doc) == doc);
    }
}

TEST_CASE("json document validation") {
    const JacoGraph g = jaco::construct({2, 1, false}, 5);
    std::string doc = jaco::write_graph(g, GraphFormat::json_doc);
    CHECK_THROWS((void)jaco::parse_json_doc("{}"));
    std::string bad = doc;
    bad.replace(bad.find("\"schema_version\": 1"), 19, "\"schema_version\": 9");
    CHECK_THROWS_AS((void)jaco::parse_json_doc(bad), std::invalid_argument);
    // corrupt one reach entry
    const JacoGraph broken = [&] {
        JacoGraph b = g;
        b.reach[3] += 1;
        return b;
    }();
    CHECK_THROWS_AS((void)jaco::parse_json_doc(jaco::write_graph(broken, GraphFormat::json_doc)),
                    std::invalid_argument);
}

TEST_CASE("csv degrees") {
    const JacoGraph g = jaco::construct({2, 1, false}, 11);
    const std::string csv = jaco::write_graph(g, GraphFormat::csv_degrees);
    CHECK(line_count(csv) == 12);
    CHECK(csv.find("vertex,in_degree,out_degree,underlying_degree\n") == 0);
    CHECK(csv.find("4,3,6,9\n") != std::string::npos);
    CHECK(csv.find("11,6,0,6\n") != std::string::npos);
}

TEST_CASE("edge list parsing rejects garbage") {
    CHECK(jaco::parse_edge_list("").empty());
    CHECK(jaco::parse_edge_list("1 2\n\n2 3\n").size() == 2);
    CHECK_THROWS_AS((void)jaco::parse_edge_list("1\n"), std::invalid_argument);
    CHECK_THROWS_AS((void)jaco::parse_edge_list("1 2 3\n"), std::invalid_argument);
    CHECK_THROWS_AS((void)jaco::parse_edge_list("a b\n"), std::invalid_argument);
}

TEST_CASE("edge list feeds inference") {
    const JacoGraph g = jaco::construct({2, 1, false}, 11);
    const auto arcs = jaco::parse_edge_list(jaco::write_graph(g, GraphFormat::edges));
    const jaco::InferenceResult r = jaco::infer(arcs, 11);
    REQUIRE(r.status == jaco::InferenceResult::Status::unique);
    CHECK(r.f.m == 2);
    CHECK(r.f.c == 1);
}

TEST_CASE("analysis and sequence documents carry the headline fields") {
    const JacoGraph g = jaco::construct({2, 1, false}, 11);
    const std::string a = jaco::write_analysis_json(g, jaco::analyze(g));
    CHECK(a.find("\"delta\": 9") != std::string::npos);
    CHECK(a.find("\"prime_jaconian\": 4") != std::string::npos);
    CHECK(a.find("\"edge_count\": 39") != std::string::npos);

    const std::string s = jaco::write_sequence_json(
        jaco::ell_sequence({1, 0, false}, 8, jaco::SequenceVariant::corrected));
    CHECK(s.find("\"variant\": \"corrected\"") != std::string::npos);
    CHECK(s.find("0,\n    1,\n    1,\n    2,\n    3,\n    3,\n    4,\n    4,\n    5")
          != std::string::npos);
}
