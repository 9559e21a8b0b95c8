#pragma once

#include "liecohom/catalog.hpp"

#include <string>
#include <vector>

namespace lc {

struct Check {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct Criterion {
    int id = 0;
    std::string title;
    std::string tolerance = "exact";
    std::vector<Check> checks;
    bool passed() const;
    int failures() const;
};

struct RegressionOptions {
    int dcx_samples = 200;
    unsigned seed = 20240607;
    bool parallel = true;
};

constexpr int kCriterionCount = 10;

Criterion run_criterion(int id, const RegressionOptions& opt = {});
// Criteria 1..10, in order; independent criteria may run concurrently.
std::vector<Criterion> run_regression(const RegressionOptions& opt = {});
// "criterion 3 PASS ..." followed by the failing checks, if any.
std::string format_criterion(const Criterion& c, bool verbose = false);

// Column order of the bidegree charts: degrees 1..2n-1, p decreasing within a degree.
std::vector<Bidegree> chart_columns(int n);
std::vector<int> chart_row(const CohomologyTable& t, int n);

// Every integrable complex structure reachable from the catalog with default
// parameters, plus the tori of complex dimension 1..3 and the five deformation classes.
std::vector<std::pair<std::string, ComplexStructure>> integrable_catalog_structures();

}  // namespace lc
