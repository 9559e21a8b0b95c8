#pragma once

#include "liecohom/exterior.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lc {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
    explicit ParseError(const std::string& msg) : std::runtime_error(msg), position(0) {}
    std::size_t position;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Presentation { Real, ComplexCoframe };

using Params = std::map<std::string, Scalar>;

struct StructureFlags {
    bool nilpotent = false;
    int nilpotency_step = 0;  // 0 when not nilpotent
    bool solvable = false;
    bool completely_solvable = false;
    bool completely_solvable_pinned = false;  // value fixed by catalog data
    bool unimodular = false;
    bool unimodular_koszul = false;  // d vanishes on degree dim-1
};

// Lie algebra given by the differentials de^k of a coframe.
// Real presentation: basis e^1..e^m over Q.
// Complex-coframe presentation: basis (phi^1..phi^n, conj phi^1..conj phi^n) over Q(i).
class LieAlgebra {
public:
    LieAlgebra() = default;
    LieAlgebra(std::string name, std::vector<Form> de, Presentation p = Presentation::Real);

    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }
    int dim() const { return static_cast<int>(de_.size()); }
    Presentation presentation() const { return pres_; }
    bool is_complex_coframe() const { return pres_ == Presentation::ComplexCoframe; }
    int complex_rank() const { return dim() / 2; }
    Field field() const;
    const std::vector<Form>& de() const { return de_; }
    const Form& de(int k) const { return de_.at(k - 1); }  // 1-based
    Params params;
    std::optional<bool> pinned_completely_solvable;

    // Throws ValidationError unless d^2 = 0 on degree 1.
    void validate() const;
    GradedOperator differential() const;
    Form d(const Form& a) const;

    // Frame bracket [e_i, e_j] (1-based) as coordinates on e_1..e_m.
    SVec bracket(int i, int j) const;
    SVec bracket(const SVec& x, const SVec& y) const;  // 0-based coordinates
    Matrix ad(const SVec& x) const;  // column j = [x, e_j]

    std::string salamon() const;  // canonical text, real presentation
    std::string coframe_text() const;  // canonical text, complex presentation

private:
    std::string name_;
    std::vector<Form> de_;
    Presentation pres_ = Presentation::Real;
};

LieAlgebra parse_salamon(std::string_view text, const Params& params = {}, std::string name = "");
// Signed sum of monomials on dim generators: "e16 + 1/2*25 - 34", "1.2.10".
Form parse_form(std::string_view text, int dim, const Params& params = {});
LieAlgebra parse_complex_coframe(std::string_view text, const Params& params = {}, std::string name = "");

// Real model of a complex-coframe algebra with phi^j = e^j + i e^{j+n}.
LieAlgebra real_model(const LieAlgebra& cx);
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b, std::string name = "");

StructureFlags structure_flags(const LieAlgebra& g);

// Sturm-based check that a rational polynomial (coefficients low to high) has only real roots.
bool all_roots_real(const std::vector<mpq_class>& poly);
std::vector<mpq_class> char_poly(const Matrix& a);  // monic, low to high

}  // namespace lc
