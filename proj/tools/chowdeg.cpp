#include "chowdeg/eval.hpp"
#include "chowdeg/generators.hpp"
#include "chowdeg/identities.hpp"
#include "chowdeg/reduction.hpp"
#include "chowdeg/serialize.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace chowdeg;

int env_oracle_cap() {
    if (const char* raw = std::getenv("CHOWDEG_ORACLE_CAP")) {
        try {
            return std::stoi(raw);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring malformed CHOWDEG_ORACLE_CAP='" << raw << "'\n";
        }
    }
    return kDefaultOracleCap;
}

std::string trimmed(const std::string& line) {
    size_t a = line.find_first_not_of(" \t\r\n");
    if (a == std::string::npos)
        return "";
    size_t b = line.find_last_not_of(" \t\r\n");
    return line.substr(a, b - a + 1);
}

/// Collects the monomial lines to evaluate: positional arguments are files
/// when they exist on disk and literal monomials otherwise; with no
/// positionals, stdin is read.  Comment lines and blank lines are dropped.
std::vector<std::string> gather_inputs(const std::vector<std::string>& args) {
    std::vector<std::string> lines;
    auto take_stream = [&](std::istream& in) {
        std::string line;
        while (std::getline(in, line)) {
            std::string t = trimmed(line);
            if (!t.empty() && t[0] != '#')
                lines.push_back(t);
        }
    };
    if (args.empty()) {
        take_stream(std::cin);
        return lines;
    }
    for (const std::string& arg : args) {
        if (std::filesystem::exists(arg)) {
            std::ifstream in(arg);
            if (!in) {
                throw std::runtime_error("cannot open input file: " + arg);
            }
            take_stream(in);
        } else {
            std::string t = trimmed(arg);
            if (!t.empty() && t[0] != '#')
                lines.push_back(t);
        }
    }
    return lines;
}

struct EvalOptions {
    bool oracle = false;
    bool json = false;
    bool filter_balanced = false;
    int oracle_cap = kDefaultOracleCap;
    std::string dot_dir;
};

int run_eval(const std::vector<std::string>& inputs, const EvalOptions& opt) {
    bool any_parse_error = false;
    bool any_disagreement = false;
    bool any_cap_exceeded = false;

    std::vector<std::string> lines;
    try {
        lines = gather_inputs(inputs);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }

    for (size_t idx = 0; idx < lines.size(); ++idx) {
        const std::string& text = lines[idx];
        EvalReport report;
        Monomial parsed = Monomial(LabelSet::first_n(3));
        try {
            parsed = Monomial::parse(text);
            report = evaluate_monomial(parsed);
        } catch (const Error& ex) {
            std::cerr << "error: line " << idx + 1 << ": " << ex.what() << "\n";
            any_parse_error = true;
            continue;
        }

        if (opt.oracle) {
            try {
                Int reference = opt.filter_balanced
                                    ? tree_oracle_value(parsed, opt.oracle_cap, true)
                                    : oracle_value(parsed, opt.oracle_cap);
                report.oracle = reference;
                if (reference != report.value) {
                    std::cerr << "oracle disagreement on line " << idx + 1 << ": value "
                              << report.value << " vs oracle " << reference << "\n";
                    any_disagreement = true;
                }
            } catch (const CapExceeded& ex) {
                std::cerr << "oracle skipped on line " << idx + 1 << ": " << ex.what()
                          << "\n";
                any_cap_exceeded = true;
            }
        }

        if (!opt.dot_dir.empty() && report.proper &&
            report.classification != Classification::ZeroByQuadratic) {
            std::filesystem::create_directories(opt.dot_dir);
            LoadedTree tree = monomial_to_tree(parsed);
            std::ofstream tf(std::filesystem::path(opt.dot_dir) /
                             ("tree_" + std::to_string(idx) + ".dot"));
            tf << to_dot(tree);
            std::ofstream ff(std::filesystem::path(opt.dot_dir) /
                             ("forest_" + std::to_string(idx) + ".dot"));
            ff << to_dot(redundancy_forest(tree));
        }

        std::cout << (opt.json ? report_to_json(report) : report_to_line(report)) << "\n";
    }

    if (any_disagreement)
        return 2;
    if (any_cap_exceeded)
        return 3;
    if (any_parse_error)
        return 1;
    return 0;
}

int run_identities(const std::string& variant, int rmax, int mmax, bool json) {
    struct Row {
        int variant;
        int r;
        std::vector<int> m;
        std::string status;
        Int lhs;
        Int rhs;
    };
    std::vector<Row> rows;
    bool any_failure = false;

    std::vector<int> variants;
    if (variant == "all")
        variants = {1, 2, 3};
    else
        variants = {std::stoi(variant)};

    for (int v : variants) {
        for (int r = 1; r <= rmax; ++r) {
            std::vector<int> m(static_cast<size_t>(r), 1);
            while (true) {
                Row row;
                row.variant = v;
                row.r = r;
                row.m = m;
                if (r < v) {
                    row.status = "skip";
                } else {
                    IdentityCheck check = check_identity(v, IdentityInstance(r, m));
                    row.lhs = check.lhs;
                    row.rhs = check.rhs;
                    row.status = check.ok ? "pass" : "fail";
                    if (!check.ok)
                        any_failure = true;
                }
                rows.push_back(row);
                // Next multi-index over {1..mmax}^r.
                int pos = r - 1;
                while (pos >= 0 && m[static_cast<size_t>(pos)] == mmax) {
                    m[static_cast<size_t>(pos)] = 1;
                    --pos;
                }
                if (pos < 0)
                    break;
                ++m[static_cast<size_t>(pos)];
            }
        }
    }

    if (json) {
        nlohmann::json out = nlohmann::json::array();
        for (const Row& row : rows) {
            nlohmann::json j;
            j["variant"] = row.variant;
            j["r"] = row.r;
            j["m"] = row.m;
            j["status"] = row.status;
            if (row.status != "skip") {
                j["lhs"] = row.lhs.str();
                j["rhs"] = row.rhs.str();
            }
            out.push_back(j);
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "variant,r,m,status,lhs,rhs\n";
        for (const Row& row : rows) {
            std::ostringstream ms;
            for (size_t i = 0; i < row.m.size(); ++i)
                ms << (i ? " " : "") << row.m[i];
            std::cout << row.variant << "," << row.r << "," << ms.str() << ","
                      << row.status << ",";
            if (row.status == "skip")
                std::cout << ",";
            else
                std::cout << row.lhs << "," << row.rhs;
            std::cout << "\n";
        }
    }
    return any_failure ? 1 : 0;
}

int run_bench(const std::string& shape, const std::vector<int>& sizes, unsigned seed) {
    std::cout << "shape,n,parse_us,screen_us,tree_us,forest_us,total_us,value\n";
    std::mt19937 rng(seed);
    for (int n : sizes) {
        std::string text;
        if (shape == "clever-caterpillar") {
            text = tree_to_monomial(clever_caterpillar(n)).render();
        } else if (shape == "sun-like") {
            std::vector<int> weights(static_cast<size_t>(n), 2);
            text = tree_to_monomial(sun_like_tree(weights)).render();
        } else if (shape == "random-tree") {
            text = tree_to_monomial(random_proper_tree(n, rng)).render();
        } else {
            std::cerr << "error: unknown shape '" << shape << "'\n";
            return 1;
        }
        EvalReport report = evaluate_monomial_text(text, true);
        std::cout << shape << "," << n << "," << report.parse_us << "," << report.screen_us
                  << "," << report.tree_us << "," << report.forest_us << ","
                  << report.total_us << "," << report.value << "\n";
    }
    return 0;
}

int run_export(const std::string& input, const std::string& dot_dir, bool json) {
    Monomial m = Monomial(LabelSet::first_n(3));
    try {
        m = Monomial::parse(input);
    } catch (const Error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    LoadedTree tree = monomial_to_tree(m);
    if (!dot_dir.empty()) {
        std::filesystem::create_directories(dot_dir);
        std::ofstream tf(std::filesystem::path(dot_dir) / "tree.dot");
        tf << to_dot(tree);
        std::ofstream ff(std::filesystem::path(dot_dir) / "forest.dot");
        ff << to_dot(redundancy_forest(tree));
        return 0;
    }
    if (json)
        std::cout << to_json_string(tree) << "\n";
    else
        std::cout << to_dot(tree);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"intersection degrees of boundary divisor monomials"};
    app.require_subcommand(1);

    EvalOptions eval_opt;
    eval_opt.oracle_cap = env_oracle_cap();
    std::vector<std::string> eval_inputs;
    CLI::App* eval = app.add_subcommand("eval", "evaluate monomials from arguments, "
                                                "files or stdin");
    eval->add_option("inputs", eval_inputs,
                     "monomial strings or files with one monomial per line");
    eval->add_flag("--oracle", eval_opt.oracle,
                   "cross-check with the linear-reduction oracle");
    eval->add_option("--oracle-cap", eval_opt.oracle_cap,
                     "ground-set cap for the oracle (env CHOWDEG_ORACLE_CAP)");
    eval->add_flag("--json", eval_opt.json, "one JSON object per line");
    eval->add_option("--dot", eval_opt.dot_dir, "write tree/forest DOT files here");
    eval->add_flag("--filter-balanced", eval_opt.filter_balanced,
                   "with --oracle, reduce on the tree side and drop unbalanced "
                   "surviving trees");

    std::string id_variant = "all";
    int id_rmax = 4;
    int id_mmax = 3;
    bool id_json = false;
    CLI::App* identities = app.add_subcommand("identities",
                                              "sweep the multinomial identities");
    identities->add_option("--variant", id_variant, "1, 2, 3 or all")
        ->check(CLI::IsMember({"1", "2", "3", "all"}));
    identities->add_option("--rmax", id_rmax, "largest number of parts");
    identities->add_option("--mmax", id_mmax, "largest part size");
    identities->add_flag("--json", id_json, "JSON instead of CSV");

    std::string bench_shape = "clever-caterpillar";
    std::vector<int> bench_sizes{100, 200, 400};
    unsigned bench_seed = 20260822;
    CLI::App* bench = app.add_subcommand("bench", "time the pipeline stages");
    bench->add_option("--shape", bench_shape, "clever-caterpillar, sun-like or random-tree")
        ->check(CLI::IsMember({"clever-caterpillar", "sun-like", "random-tree"}));
    bench->add_option("--n", bench_sizes, "sizes to run (labels, or leaves for sun-like)");
    bench->add_option("--seed", bench_seed, "random-tree seed");

    std::string export_input;
    std::string export_dot;
    bool export_json = false;
    CLI::App* export_tree = app.add_subcommand("export-tree",
                                               "print or write the tree of a monomial");
    export_tree->add_option("monomial", export_input, "monomial string")->required();
    export_tree->add_option("--dot", export_dot, "write tree.dot and forest.dot here");
    export_tree->add_flag("--json", export_json, "JSON instead of DOT on stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval->parsed())
            return run_eval(eval_inputs, eval_opt);
        if (identities->parsed())
            return run_identities(id_variant, id_rmax, id_mmax, id_json);
        if (bench->parsed())
            return run_bench(bench_shape, bench_sizes, bench_seed);
        if (export_tree->parsed())
            return run_export(export_input, export_dot, export_json);
    } catch (const Error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
