#include "jaco/io.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace jaco {

namespace {

using nlohmann::json;

json function_json(const LinearFunction& f) {
    return json{{"m", f.m}, {"c", f.c}, {"relaxed", f.relaxed}};
}

LinearFunction function_from_json(const json& j) {
    LinearFunction f;
    f.m = j.at("m").get<std::int64_t>();
    f.c = j.at("c").get<std::int64_t>();
    f.relaxed = j.at("relaxed").get<bool>();
    if (!f.valid()) throw std::invalid_argument("document carries an invalid function");
    return f;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::optional<GraphFormat> parse_format(std::string_view name) {
    if (name == "edges") return GraphFormat::edges;
    if (name == "dot") return GraphFormat::dot;
    if (name == "json-doc") return GraphFormat::json_doc;
    if (name == "csv-degrees") return GraphFormat::csv_degrees;
    return std::nullopt;
}

std::string write_graph(const JacoGraph& g, GraphFormat format) {
    std::ostringstream out;
    switch (format) {
        case GraphFormat::edges:
            for (std::int64_t i = 1; i <= g.n; ++i) {
                const std::int64_t hi = std::min(g.reach[i], g.n);
                for (std::int64_t j = i + 1; j <= hi; ++j)
                    out << i << ' ' << j << '\n';
            }
            return out.str();
        case GraphFormat::dot: {
            out << "digraph J {\n";
            for (std::int64_t i = 1; i <= g.n; ++i) out << "  v" << i << ";\n";
            for (std::int64_t i = 1; i <= g.n; ++i) {
                const std::int64_t hi = std::min(g.reach[i], g.n);
                for (std::int64_t j = i + 1; j <= hi; ++j)
                    out << "  v" << i << " -> v" << j << ";\n";
            }
            out << "}\n";
            return out.str();
        }
        case GraphFormat::json_doc: {
            json j;
            j["schema_version"] = 1;
            j["n"] = g.n;
            j["f"] = function_json(g.f);
            j["in_degree"] = std::vector<std::int64_t>(g.in_degree.begin() + 1,
                                                       g.in_degree.end());
            j["reach"] = std::vector<std::int64_t>(g.reach.begin() + 1, g.reach.end());
            return dump(j);
        }
        case GraphFormat::csv_degrees:
            out << "vertex,in_degree,out_degree,underlying_degree\n";
            for (std::int64_t i = 1; i <= g.n; ++i) {
                const VertexDegrees d = degrees(g, i);
                out << i << ',' << d.in << ',' << d.out << ',' << d.underlying << '\n';
            }
            return out.str();
    }
    throw std::invalid_argument("unknown graph format");
}

JacoGraph parse_json_doc(const std::string& text) {
    const json j = json::parse(text);
    if (j.at("schema_version").get<int>() != 1)
        throw std::invalid_argument("unsupported schema_version");
    JacoGraph g;
    g.n = j.at("n").get<std::int64_t>();
    if (g.n < 1) throw std::invalid_argument("document needs n >= 1");
    g.f = function_from_json(j.at("f"));
    const auto in = j.at("in_degree").get<std::vector<std::int64_t>>();
    const auto re = j.at("reach").get<std::vector<std::int64_t>>();
    if (static_cast<std::int64_t>(in.size()) != g.n ||
        static_cast<std::int64_t>(re.size()) != g.n)
        throw std::invalid_argument("array lengths do not match n");
    g.in_degree.assign(1, 0);
    g.in_degree.insert(g.in_degree.end(), in.begin(), in.end());
    g.reach.assign(1, 0);
    g.reach.insert(g.reach.end(), re.begin(), re.end());
    // Self-consistency: reach derives from the in-degree, reach never
    // decreases, and each in-degree counts exactly the suffix of lower
    // vertices whose reach covers it.
    std::int64_t tail = 1;
    for (std::int64_t v = 1; v <= g.n; ++v) {
        if (g.reach[v] != g.f(v) + v - g.in_degree[v])
            throw std::invalid_argument("reach[" + std::to_string(v) +
                                        "] is inconsistent with the in-degree");
        if (v > 1 && g.reach[v] < g.reach[v - 1])
            throw std::invalid_argument("reach decreases at vertex " + std::to_string(v));
        while (tail < v && g.reach[tail] < v) ++tail;
        if (g.in_degree[v] != v - tail)
            throw std::invalid_argument("in_degree[" + std::to_string(v) +
                                        "] does not count the covering suffix");
    }
    if (j.contains("arcs")) {
        const auto arcs = j.at("arcs").get<std::vector<std::pair<std::int64_t, std::int64_t>>>();
        if (static_cast<std::int64_t>(arcs.size()) != edge_count(g))
            throw std::invalid_argument("arc list length does not match the edge count");
        for (const auto& [a, bnd] : arcs)
            if (a < 1 || bnd <= a || bnd > g.n || g.reach[a] < bnd)
                throw std::invalid_argument("arc list contains a non-arc");
    }
    return g;
}

std::vector<Arc> parse_edge_list(const std::string& text) {
    std::vector<Arc> arcs;
    std::istringstream in(text);
    std::string line;
    std::int64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        std::int64_t a = 0, b = 0;
        std::string rest;
        if (!(ls >> a >> b) || (ls >> rest))
            throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                        " is not \"i j\"");
        arcs.emplace_back(a, b);
    }
    return arcs;
}

std::string write_analysis_json(const JacoGraph& g, const JaconianReport& r) {
    json j;
    j["schema_version"] = 1;
    j["n"] = g.n;
    j["f"] = function_json(g.f);
    j["delta"] = r.delta;
    j["jaconian_set"] = r.jaconian_set;
    j["prime_jaconian"] = r.prime_jaconian;
    j["hope_vertices"] = r.hope_empty()
                             ? json::array()
                             : json::array({r.hope_first, r.hope_last});
    j["hope_is_complete"] = r.hope_is_complete;
    j["edge_count"] = r.edge_count;
    return dump(j);
}

std::string write_sequence_json(const SequenceTable& t) {
    json j;
    j["schema_version"] = 1;
    j["f"] = function_json(t.f);
    j["variant"] = to_string(t.variant);
    j["n_max"] = static_cast<std::int64_t>(t.values.size()) - 1;
    j["values"] = t.values;  // index 0 upward
    return dump(j);
}

std::string write_inference_json(const InferenceResult& r) {
    json j;
    j["schema_version"] = 1;
    j["status"] = to_string(r.status);
    j["validated"] = r.validated;
    switch (r.status) {
        case InferenceResult::Status::unique:
            j["m"] = r.f.m;
            j["c"] = r.f.c;
            j["relaxed"] = r.f.relaxed;
            break;
        case InferenceResult::Status::ambiguous: {
            json cands = json::array();
            for (const LinearFunction& f : r.candidates)
                cands.push_back(json::array({f.m, f.c}));
            j["candidates"] = cands;
            j["constraint"] = r.constraint;
            break;
        }
        case InferenceResult::Status::not_a_jaco_graph:
            j["diagnostic"] = r.diagnostic;
            break;
    }
    return dump(j);
}

std::string write_report_json(const std::vector<ClaimResult>& results,
                              const GridSpec& grid) {
    json j;
    j["schema_version"] = 1;
    j["grid"] = json{{"m", json::array({grid.m_lo, grid.m_hi})},
                     {"c", json::array({grid.c_lo, grid.c_hi})},
                     {"n_max", grid.n_max},
                     {"seq_n_max", grid.seq_n_max},
                     {"witness_cap", grid.witness_cap}};
    json rs = json::array();
    for (const ClaimResult& r : results) {
        json e;
        e["id"] = r.id;
        e["status"] = to_string(r.status);
        e["grid"] = r.grid_summary;
        e["points_checked"] = r.points_checked;
        e["failures"] = r.failures;
        e["note"] = r.note;
        json ws = json::array();
        for (const Witness& w : r.witnesses)
            ws.push_back(json{{"m", w.m},
                              {"c", w.c},
                              {"n", w.n},
                              {"expected", w.expected},
                              {"actual", w.actual}});
        e["witnesses"] = ws;
        rs.push_back(e);
    }
    j["results"] = rs;
    return dump(j);
}

std::string report_table(const std::vector<ClaimResult>& results) {
    std::ostringstream out;
    out << std::left << std::setw(24) << "claim" << std::setw(18) << "status"
        << std::right << std::setw(10) << "points" << std::setw(10) << "failures"
        << "  note\n";
    out << std::string(70, '-') << '\n';
    std::int64_t verified = 0, counter = 0, na = 0;
    for (const ClaimResult& r : results) {
        switch (r.status) {
            case ClaimStatus::verified_on_grid: ++verified; break;
            case ClaimStatus::counterexample: ++counter; break;
            case ClaimStatus::not_applicable: ++na; break;
        }
        out << std::left << std::setw(24) << r.id << std::setw(18)
            << to_string(r.status) << std::right << std::setw(10) << r.points_checked
            << std::setw(10) << r.failures;
        if (!r.note.empty()) out << "  " << r.note;
        if (!r.witnesses.empty()) {
            const Witness& w = r.witnesses.front();
            out << "  [first: m=" << w.m << " c=" << w.c << " n=" << w.n
                << " expected " << w.expected << ", got " << w.actual << "]";
        }
        out << '\n';
    }
    out << results.size() << " claims: " << verified << " verified-on-grid, "
        << counter << " counterexample, " << na << " not-applicable\n";
    return out.str();
}

}  // namespace jaco
