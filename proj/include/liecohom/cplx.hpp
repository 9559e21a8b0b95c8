#pragma once

#include "liecohom/lie.hpp"

#include <array>
#include <utility>

namespace lc {

// Bidegree of a monomial in the basis (phi^1..phi^n, conj phi^1..conj phi^n).
std::pair<int, int> bidegree(Mask m, int n);
// Positions inside the degree p+q basis of 2n generators carrying bidegree (p,q).
std::vector<int> bidegree_indices(int n, int p, int q);
// Index involution phi^j <-> conj phi^j (0-based).
std::vector<int> conjugation_pairing(int n);

// A linear (almost-)complex structure on a real Lie algebra of dimension 2n.
// psi = (phi, conj phi) is the complex coframe; phi^a = sum_b P_ab e^b.
struct ComplexStructure {
    std::string name;
    int n = 0;
    LieAlgebra real;  // real model, basis e over Q
    LieAlgebra cx;    // same algebra on the psi basis over Q(i)
    std::vector<Form> psi_in_e;  // 2n complex 1-forms on the e basis
    std::vector<Form> e_in_psi;  // 2n 1-forms on the psi basis
    Matrix J;  // frame matrix: column j is J e_j
    bool nijenhuis_zero = false;
    bool no_02_part = false;
    bool integrable() const { return nijenhuis_zero && no_02_part; }

    // Degree-k change of basis: columns are psi-monomials written on e-monomials.
    Matrix psi_to_e(int k) const;
    Matrix e_to_psi(int k) const;
    Form to_e(const Form& psi_form) const;
    Form to_psi(const Form& e_form) const;
};

ComplexStructure from_phi(const LieAlgebra& real, const std::vector<Form>& phi, std::string name = "");
ComplexStructure from_J_matrix(const LieAlgebra& real, const Matrix& J, std::string name = "");
// phi^k = e^a + i e^b for each pair (a,b), 1-based.
ComplexStructure from_pairs(const LieAlgebra& real, const std::vector<std::pair<int, int>>& pairs, std::string name = "");
// Native complex-coframe presentation; real model via phi^j = e^j + i e^{j+n}.
ComplexStructure from_coframe(const LieAlgebra& cx, std::string name = "");

Matrix J_from_pairs(int dim, const std::vector<std::pair<int, int>>& pairs);

// Frame-side Nijenhuis tensor N(e_i,e_j) for i<j; empty when J is integrable.
std::vector<std::pair<std::pair<int, int>, SVec>> nijenhuis(const LieAlgebra& g, const Matrix& J);

// Four bidegree components of d on the psi basis.
struct DifferentialSplit {
    GradedOperator A, del, delbar, Abar, d;
    int n = 0;
};

DifferentialSplit split_differential(const ComplexStructure& c);
// Restrict a shift-1 operator to the block (p,q) -> (p+dp, q+dq).
Matrix bidegree_block(const GradedOperator& op, int n, int p, int q, int dp, int dq);
// Each of the seven bidegree identities encoded by d^2 = 0; true when all vanish.
std::array<bool, 7> d_squared_identities(const DifferentialSplit& s);

// Deformation template: d phi^3 = s12 phi^12 + s11b phi^{1 1b} + s12b phi^{1 2b} + s21b phi^{2 1b} + s22b phi^{2 2b}.
struct IwasawaDeformation {
    LieAlgebra cx;
    ComplexStructure cs;
    std::string label;  // i, ii.a, ii.b, iii.a, iii.b
    int block_rank = 0;
    int s_rank = 0;
};

// sigma = (s12, s11b, s12b, s21b, s22b)
IwasawaDeformation iwasawa_family(const std::array<Scalar, 5>& sigma);
std::string iwasawa_class_label(const std::array<Scalar, 5>& sigma, int* block_rank = nullptr, int* s_rank = nullptr);

}  // namespace lc
