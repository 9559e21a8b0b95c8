#pragma once

#include "liecohom/dcx.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace lc {

struct NamedComplex {
    std::string name;  // "J", "J'", ...
    ComplexStructure cs;
};

// A worked example: the algebra plus whatever structures come with it. The
// coframe of `g` is the one declared orthonormal for metric questions.
struct CatalogEntry {
    std::string name;
    std::string description;
    LieAlgebra g;                       // real model, or the coframe algebra for native complex entries
    LieAlgebra real_g;                  // real model in every case
    std::vector<NamedComplex> complex;  // first one is the default
    std::optional<Form> omega;          // closed nondegenerate 2-form on the real model
    std::optional<DComplexStructure> dcomplex;
    std::vector<std::pair<std::string, Form>> forms;  // other distinguished forms
    std::vector<std::string> parameters;              // accepted parameter names

    const ComplexStructure* structure(const std::string& name = "") const;
};

struct UnknownEntry : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Throws UnknownEntry for unknown names and ValidationError for bad parameters.
CatalogEntry catalog(const std::string& name, const Params& params = {});
std::vector<std::string> catalog_names();

// Representative deformation parameters for the labels i, ii.a, ii.b, iii.a, iii.b.
std::array<Scalar, 5> iwasawa_representative(const std::string& label);
const std::vector<std::string>& iwasawa_labels();

}  // namespace lc
