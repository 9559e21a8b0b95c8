#include "liecohom/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

std::vector<int> int_list(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cohomology of Lie algebras with complex, symplectic and D-complex structures"};
    app.set_help_flag("-h,--help", "Show help");

    std::vector<std::string> words;
    std::vector<std::string> params;
    std::string stages, values;
    lc::cli::Options opt;

    app.add_option("command", words,
                   "validate | betti | hodge | bottchern | aeppli | varouchas | frolicher | deldelbar | harmonic | "
                   "lizhang | symplectic | dcomplex | massey | tables | sweep | catalog run | catalog list")
        ->required();
    app.add_option("--catalog", opt.catalog, "Catalog entry (or family, for sweep)");
    app.add_option("--input", opt.input, "Input file");
    app.add_option("--param", params, "NAME=VALUE, repeatable");
    app.add_option("--format", opt.format, "md or json")->check(CLI::IsMember({"md", "json"}));
    app.add_flag("--with-reps", opt.with_reps, "Include canonical representatives");
    app.add_option("--field", opt.field, "auto, q or qi")->check(CLI::IsMember({"auto", "q", "qi", "r", "c"}));
    app.add_option("--S", opt.S, "Bidegree set for lizhang, e.g. \"(2,0),(0,2)\"");
    app.add_option("--degree", opt.degree, "Degree for lizhang / stage selection");
    app.add_option("--structure", opt.structure, "Named complex structure of a catalog entry (J, J', J0, ...)");
    app.add_option("--stages", stages, "Comma separated stages");
    app.add_option("--triple", opt.triple, "Massey triple as \"a;b;c\"");
    app.add_option("--param-name", opt.param_name, "Sweep parameter (\"class\" for iwasawa_def)");
    app.add_option("--values", values, "Comma separated sweep values");
    app.add_option("--of", opt.sweep_of, "Command evaluated at each sweep point");
    app.add_option("--samples", opt.samples, "Random D-complex structures per algebra in catalog run");
    app.add_option("--seed", opt.seed, "Random seed");
    app.add_flag("--sequential", opt.sequential, "Disable concurrent evaluation");
    app.add_flag("-v,--verbose", opt.verbose, "List every check in catalog run");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return lc::cli::kParse;
    }

    try {
        for (const auto& p : params) opt.params.insert(lc::cli::parse_param(p));
        if (!stages.empty()) opt.stages = int_list(stages);
        for (std::string cur; const char c : values + ",") {
            if (c == ',') {
                if (!cur.empty()) opt.values.push_back(cur);
                cur.clear();
            } else if (c != ' ') {
                cur += c;
            }
        }
    } catch (const lc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return lc::cli::kParse;
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return lc::cli::kParse;
    }

    std::string command;
    for (const auto& w : words) command += (command.empty() ? "" : " ") + w;
    auto out = lc::cli::run(command, opt);
    std::cout << out.output;
    if (!out.error.empty()) std::cerr << out.error << "\n";
    return out.exit_code;
}
