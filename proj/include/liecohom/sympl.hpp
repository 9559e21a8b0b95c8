#pragma once

#include "liecohom/cohom.hpp"

#include <map>
#include <string>

namespace lc {

struct SymplecticStructure {
    LieAlgebra g;
    Form omega;
    Form poisson;  // bivector in the frame basis, inverse to omega
    Form volume;   // omega^n / n!
    int n = 0;
    GradedOperator d, L, Lambda, H, dLambda;
    std::vector<Matrix> star;  // star[k]: degree k -> degree 2n-k
};

// Throws ValidationError when omega is not a closed nondegenerate real 2-form.
SymplecticStructure build_symplectic(const LieAlgebra& g, const Form& omega);
Form sympl_star(const SymplecticStructure& s, const Form& a);
// Induced pairing (omega^{-1})^k on k-forms: determinant of the bivector pairing.
Scalar bivector_pairing(const SymplecticStructure& s, Mask a, Mask b);

struct NamedCheck {
    std::string name;
    bool ok = false;
};
// sl(2) relations, commutation with d and dLambda, star^2 = id, primitive-space
// characterizations, and the form-level Lefschetz isomorphisms.
std::vector<NamedCheck> symplectic_identities(const SymplecticStructure& s);

// Lefschetz decomposition a = sum_r (1/r!) L^r B_r with primitive B_r.
struct PrimitivePiece {
    int r = 0;
    Form B;
};
std::vector<PrimitivePiece> primitive_decompose(const SymplecticStructure& s, const Form& a);
// Coefficient a_{r,l,(n,k)} of the decomposition formula.
Scalar lefschetz_coefficient(int r, int l, int n, int k);
Subspace primitive_forms(const SymplecticStructure& s, int k);

struct SymplecticTables {
    std::vector<int> betti;
    std::vector<int> h_dlambda, h_d_plus_dlambda, h_ddlambda, ph_d_plus_dlambda, ph_ddlambda;
    std::vector<int> ker_D_d_plus_dlambda, ker_D_ddlambda;  // oracle with lambda = 1
    bool oracle_agrees = true;
    bool oracle_kernel_characterization = true;
    std::vector<bool> hlc;         // index k: [omega]^k : H^{n-k} -> H^{n+k} bijective
    std::vector<bool> ddl_degree;  // im d ∩ ker dLambda = im d dLambda per degree
    bool hlc_all = true;
    bool ddlambda_lemma = true;
    bool betti_match = true;  // dim H_{d+dLambda}^k = b_k for all k
    bool unimodular = false;
    bool equivalence_holds() const { return hlc_all == ddlambda_lemma && ddlambda_lemma == betti_match; }
    bool tseng_yau_decomposition = true;  // H_{d+dL}^k = sum_r PH^{k-2r}
    bool dlambda_duality = true;          // dim H_{dL}^k = b_{2n-k}
};

SymplecticTables tseng_yau_tables(const SymplecticStructure& s);
std::vector<bool> hlc_check(const SymplecticStructure& s);
bool ddlambda_lemma(const SymplecticStructure& s);

struct OmegaSubgroups {
    int n = 0;
    std::map<std::pair<int, int>, int> dims;       // (r,s) -> dim H^{(r,s)}
    std::map<std::pair<int, int>, Subspace> spaces;  // class coordinates in H^{2r+s}
    std::map<int, DegreeCohomology> cohomology;
    std::map<int, bool> direct, full;
    // H^{(r,s)} = L^r H^{(0,s)} when 2r+s <= n
    bool lifting_property = true;
    // H^{(k,0)} ∩ H^{(0,2k)} = 0 for k <= n/2
    bool low_intersections = true;
    bool contains(int r, int s, const Form& closed_form) const;
    // Class lies in the sum of the listed subgroups (all of the same total degree).
    bool in_sum(const std::vector<std::pair<int, int>>& blocks, const Form& closed_form) const;
};

OmegaSubgroups omega_subgroups(const SymplecticStructure& s);

}  // namespace lc
