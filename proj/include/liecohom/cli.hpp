#pragma once

#include "liecohom/catalog.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace lc::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

enum ExitCode : int { kOk = 0, kParse = 1, kValidation = 2, kUnknown = 3, kMismatch = 4 };

// Plain-text problem description. Blocks:
//   name: NAME
//   param: NAME = VALUE            (repeatable, default values)
//   algebra: (0,0,12)              or a "complex N" header followed by "d fK = ..." lines
//   J:                             followed by 2n rows of the frame matrix
//   symplectic: 12+34
//   dcomplex: (++--)               or followed by "plus: v; v" and "minus: v; v" lines
//   metric_frame:                  followed by rows writing an orthonormal coframe in terms of e^j
struct InputDocument {
    std::string name;
    Params params;
    std::string algebra_text;
    Presentation presentation = Presentation::Real;
    std::optional<std::vector<std::vector<std::string>>> J;
    std::optional<std::string> symplectic;
    std::optional<std::string> dcomplex_signs;
    std::optional<std::vector<std::vector<std::string>>> dcomplex_plus, dcomplex_minus;
    std::optional<std::vector<std::vector<std::string>>> metric_frame;
};

// Throws ParseError naming the line and token.
InputDocument parse_input(std::string_view text);

// Everything a command may need, resolved and validated.
struct Problem {
    std::string name;
    LieAlgebra g;       // as presented
    LieAlgebra real_g;  // real model
    std::vector<NamedComplex> complex;
    std::optional<Form> omega;
    std::optional<DComplexStructure> dcomplex;
    Params params;
    bool completely_solvable_pinned = false;
};

Problem build_problem(const InputDocument& doc, const Params& overrides = {});
Problem problem_from_catalog(const std::string& name, const Params& params = {});

struct Options {
    std::string catalog;
    std::string input;  // file path
    std::string input_text;  // used when no path is given
    Params params;
    std::string format = "md";
    bool with_reps = false;
    std::string field = "auto";
    std::string S;
    int degree = -1;
    std::string structure;
    std::vector<int> stages;
    std::string triple;
    std::string param_name;
    std::vector<std::string> values;
    std::string sweep_of;
    int samples = 200;
    unsigned seed = 20240607;
    bool sequential = false;
    bool verbose = false;
};

struct Outcome {
    int exit_code = kOk;
    std::string output;
    std::string error;
    Json document;
};

// "NAME=VALUE" with a Gaussian rational value.
std::pair<std::string, Scalar> parse_param(const std::string& text);

const std::vector<std::string>& command_names();

// Runs one command; never throws. `command` is one word, or "catalog run" / "catalog list".
Outcome run(const std::string& command, const Options& opt);

// Result document of a single command on a resolved problem; throws on invalid input.
Json execute(const std::string& command, const Problem& p, const Options& opt);

std::string render_markdown(const Json& doc);
std::string render(const Json& doc, const std::string& format);

}  // namespace lc::cli
