#pragma once

#include "liecohom/cohom.hpp"

#include <optional>
#include <string_view>

namespace lc {

// Linear D-complex structure K (K^2 = id, eigenspaces of equal dimension) on a real algebra.
struct DComplexStructure {
    LieAlgebra g;
    int n = 0;  // half the dimension
    Matrix K;   // frame matrix: column j is K e_j
    std::vector<SVec> plus_basis, minus_basis;  // 0-based frame coordinates
    // Adapted coframe: f^1..f^n vanish on g-, f^{n+1}..f^{2n} vanish on g+.
    std::vector<Form> coframe;
    GradedOperator action;  // induced action on forms, alpha -> alpha(K., ..., K.)
    bool integrable = false;
    bool abelian = false;
    bool commuting = false;  // [g+, g-] = 0
    // Nilpotency steps of the eigen-subalgebras; -1 when infinite or undefined.
    int s_plus = -1, s_minus = -1;

    // Forms of degree k on which K acts as sign (+1 or -1).
    Subspace eigen(int k, int sign) const;
    // Span of f^I ∧ f^J with |I| = p indices from g+* and |J| = q from g-*.
    Subspace bigraded(int p, int q) const;
};

// Throws ValidationError on dimension mismatch or non-complementary bases.
DComplexStructure from_splitting(const LieAlgebra& g, const std::vector<SVec>& plus_basis,
                                 const std::vector<SVec>& minus_basis);
// Axis-aligned structure from a sign string such as "(-++--+)".
DComplexStructure from_signs(const LieAlgebra& g, std::string_view signs);
DComplexStructure from_K_matrix(const LieAlgebra& g, const Matrix& K);
std::vector<int> parse_signs(std::string_view signs);

// Nilpotency step of the span of vectors under the bracket of g; -1 if infinite.
int lower_central_step(const LieAlgebra& g, const std::vector<SVec>& span);

struct DcxStage {
    int k = 0;
    int b = 0;
    int h_plus = 0, h_minus = 0;
    bool pure = true, full = true;
    Subspace plus_classes, minus_classes;  // class coordinates inside H^k
    // Non-pure: one nonzero class written with an invariant and an anti-invariant representative.
    std::optional<Form> pure_witness_plus, pure_witness_minus;
    std::optional<Form> full_witness;  // closed form whose class lies outside H+ + H-
};

struct DcxReport {
    std::vector<DcxStage> stages;
    // Invariant cohomology computes the manifold cohomology (completely solvable case).
    bool invariant_cohomology_exact = false;
    const DcxStage& at(int k) const;
};

DcxReport dcx_report(const DComplexStructure& k, const std::vector<int>& stages);
std::pair<int, int> dcx_plus_minus(const DComplexStructure& k);

// dω = 0, ω^n ≠ 0 and Kω = -ω.
bool dkahler_check(const DComplexStructure& k, const Form& omega);

struct DKahlerSearch {
    bool exists = false;      // some closed anti-invariant 2-form is nondegenerate
    std::optional<Form> witness;
    int closed_anti_invariant_dim = 0;
    // Every class in H^{2-} has vanishing n-th power in H^{2n}; with invariant Poincaré duality
    // this rules out a K-compatible symplectic form.
    bool cohomological_obstruction = false;
};
DKahlerSearch dkahler_search(const DComplexStructure& k, unsigned seed = 7);

struct LemmaCheck {
    std::string name;
    bool hypothesis = false;
    bool conclusion = false;
    bool holds() const { return !hypothesis || conclusion; }
};
// Each lemma evaluated as an implication on this instance.
std::vector<LemmaCheck> structural_lemmas(const DComplexStructure& k);

// Random integrable structures on a 4-dimensional algebra: each eigenspace is
// span(v, w) with v random and w drawn from ad(v)^{-1}(R v), so it is a subalgebra
// by construction; complementarity and integrability are rechecked.
std::vector<DComplexStructure> random_integrable_structures(const LieAlgebra& g, int count, unsigned seed);

}  // namespace lc
