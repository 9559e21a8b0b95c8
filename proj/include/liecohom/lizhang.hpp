#pragma once

#include "liecohom/cohom.hpp"

#include <optional>
#include <set>

namespace lc {

enum class CoeffField { Real, Complex };
using BidegreeSet = std::set<Bidegree>;

// Parse "(2,0),(0,2)" style lists.
BidegreeSet parse_bidegree_set(std::string_view text);
std::string bidegree_set_str(const BidegreeSet& s);

// Real field: e basis of the real model over Q. Complex field: psi basis over Q(i).
DegreeCohomology degree_cohomology(const ComplexStructure& c, int k, CoeffField field);

struct TypeSubgroup {
    BidegreeSet S;
    int k = 0;
    CoeffField field = CoeffField::Real;
    Subspace pure_closed;  // closed forms of type S (real ones for the real field)
    Subspace lifted;       // pure_closed + exact
    Subspace space;        // image inside H^k, quotient-basis coordinates
    int dim = 0;
};

TypeSubgroup type_subgroup(const ComplexStructure& c, const BidegreeSet& S, int k, CoeffField field);
TypeSubgroup type_subgroup(const ComplexStructure& c, const DegreeCohomology& h, const BidegreeSet& S, CoeffField field);
// Class of a closed form (real model for the real field, psi basis otherwise) lies in the subgroup.
bool class_in_subgroup(const TypeSubgroup& t, const DegreeCohomology& h, const Form& closed_form);
bool class_is_zero(const DegreeCohomology& h, const Form& closed_form);

// Subgroups H^{(p,q),(q,p)} for p+q = k, p <= q, p,q <= n.
std::vector<BidegreeSet> stage_blocks(int n, int k);

struct PureFullStage {
    int k = 0;
    int h = 0;
    std::vector<std::pair<BidegreeSet, int>> blocks;
    bool pure = true;
    bool full = true;
    // Non-pure: the same nonzero class written as a type-S form and as a sum over the other blocks.
    std::optional<Form> pure_witness, pure_witness_other;
    BidegreeSet pure_witness_block;
    std::optional<Form> full_witness;  // closed form whose class lies outside the sum
};

struct PureFullReport {
    std::vector<PureFullStage> stages;
    const PureFullStage& at(int k) const;
};

PureFullReport pure_full_report(const ComplexStructure& c, const std::vector<int>& stages);

// (dim H^+, dim H^-) in degree 2 over the reals.
std::pair<int, int> plus_minus(const ComplexStructure& c);

// g(u,v) = (omega(u,Jv) - omega(Ju,v))/2 on the frame; J as frame matrix.
Matrix taming_metric(const Form& omega, const Matrix& J);
bool positive_definite(const Matrix& sym);  // leading principal minors
bool is_taming(const Form& omega, const Matrix& J);
bool is_compatible(const Form& omega, const Matrix& J);
bool is_almost_kahler(const LieAlgebra& g, const Form& omega, const Matrix& J);

// Full at stage k implies the degree 2n-k sum is direct (checked, reported per k).
struct ImplicationCheck {
    int k = 0;
    bool full_k = false;
    bool pure_dual = false;
    bool holds() const { return !full_k || pure_dual; }
};
std::vector<ImplicationCheck> full_implies_dual_pure(const ComplexStructure& c);

}  // namespace lc
