// Command-line front end: generate | analyze | sequence | verify | infer.
// Exit codes: 0 success, 1 computation error, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "jaco/core.hpp"
#include "jaco/infer.hpp"
#include "jaco/invariants.hpp"
#include "jaco/io.hpp"
#include "jaco/sequences.hpp"
#include "jaco/verify.hpp"

namespace {

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + out_path);
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            const std::int64_t v = std::stoll(s);
            return {v, v};
        }
        const std::int64_t lo = std::stoll(s.substr(0, dots));
        const std::int64_t hi = std::stoll(s.substr(dots + 2));
        if (lo > hi) throw std::invalid_argument("empty range");
        return {lo, hi};
    } catch (const std::exception&) {
        throw std::runtime_error("bad range '" + s + "'; expected N or LO..HI");
    }
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear Jaco graph toolkit"};
    app.require_subcommand(1);

    std::int64_t m = 1, c = 0, n = 1, n_max = 1;
    bool relaxed = false;
    std::string format = "edges", variant = "corrected", out_path;
    std::string claims = "all", grid_m = "1..5", grid_c = "0..5", input_path;
    std::int64_t grid_n = 500;
    std::int64_t infer_n = 0;

    CLI::App* generate = app.add_subcommand("generate", "construct J_n(mx+c) and write it");
    generate->add_option("--m", m, "slope")->required();
    generate->add_option("--c", c, "intercept");
    generate->add_option("--n", n, "vertex count")->required();
    generate->add_flag("--relaxed", relaxed, "permit m = 0");
    generate->add_option("--format", format, "edges | dot | json-doc | csv-degrees");
    generate->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* analyze_cmd = app.add_subcommand("analyze", "Jaconian report for J_n(mx+c)");
    analyze_cmd->add_option("--m", m, "slope")->required();
    analyze_cmd->add_option("--c", c, "intercept");
    analyze_cmd->add_option("--n", n, "vertex count")->required();
    analyze_cmd->add_flag("--relaxed", relaxed, "permit m = 0");
    analyze_cmd->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* sequence = app.add_subcommand("sequence", "minimal-tail sequence table");
    sequence->add_option("--m", m, "slope")->required();
    sequence->add_option("--c", c, "intercept");
    sequence->add_option("--n-max", n_max, "last index")->required();
    sequence->add_option("--variant", variant, "corrected | printed");
    sequence->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the claim catalogue");
    verify_cmd->add_option("--claims", claims, "comma-separated ids, or 'all'");
    verify_cmd->add_option("--grid-m", grid_m, "slope range LO..HI");
    verify_cmd->add_option("--grid-c", grid_c, "intercept range LO..HI");
    verify_cmd->add_option("--grid-n", grid_n, "largest graph size");
    verify_cmd->add_option("--out", out_path, "report file (JSON)");

    CLI::App* infer_cmd = app.add_subcommand("infer", "recover f(x) from an edge list");
    infer_cmd->add_option("input", input_path, "edge-list file")->required();
    infer_cmd->add_option("--n", infer_n, "vertex count (default: largest endpoint)");
    infer_cmd->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (generate->parsed()) {
            const auto fmt = jaco::parse_format(format);
            if (!fmt) throw std::runtime_error("unknown format: " + format);
            const jaco::JacoGraph g = jaco::construct({m, c, relaxed}, n);
            emit(jaco::write_graph(g, *fmt), out_path);
        } else if (analyze_cmd->parsed()) {
            const jaco::JacoGraph g = jaco::construct({m, c, relaxed}, n);
            emit(jaco::write_analysis_json(g, jaco::analyze(g)), out_path);
        } else if (sequence->parsed()) {
            jaco::SequenceVariant v;
            if (variant == "corrected") v = jaco::SequenceVariant::corrected;
            else if (variant == "printed") v = jaco::SequenceVariant::printed;
            else throw std::runtime_error("unknown variant: " + variant);
            emit(jaco::write_sequence_json(jaco::ell_sequence({m, c, false}, n_max, v)),
                 out_path);
        } else if (verify_cmd->parsed()) {
            jaco::GridSpec grid;
            std::tie(grid.m_lo, grid.m_hi) = parse_range(grid_m);
            std::tie(grid.c_lo, grid.c_hi) = parse_range(grid_c);
            grid.n_max = grid_n;
            std::vector<jaco::ClaimResult> results;
            if (claims == "all") {
                results = jaco::verify_all(grid);
            } else {
                std::istringstream ss(claims);
                std::string id;
                while (std::getline(ss, id, ','))
                    if (!id.empty()) results.push_back(jaco::check(id, grid));
            }
            std::cout << jaco::report_table(results);
            if (!out_path.empty())
                emit(jaco::write_report_json(results, grid), out_path);
        } else if (infer_cmd->parsed()) {
            const auto arcs = jaco::parse_edge_list(slurp(input_path));
            std::int64_t count = infer_n;
            if (count == 0)
                for (const auto& [a, b] : arcs) count = std::max(count, b);
            const jaco::InferenceResult r = jaco::infer(arcs, count);
            emit(jaco::write_inference_json(r), out_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
