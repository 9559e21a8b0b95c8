#pragma once

#include "liecohom/cplx.hpp"

#include <map>
#include <optional>

namespace lc {

enum class CohomKind { DeRham, Dolbeault, DolbeaultConj, BottChern, Aeppli };
const char* kind_name(CohomKind k);

using Bidegree = std::pair<int, int>;

struct CohomologyTable {
    CohomKind kind = CohomKind::DeRham;
    int n = 0;  // complex rank for bigraded kinds, real dimension for de Rham
    std::map<int, int> by_degree;
    std::map<Bidegree, int> by_bidegree;
    std::map<int, std::vector<Form>> reps_degree;
    std::map<Bidegree, std::vector<Form>> reps_bidegree;
    int at(int k) const;
    int at(int p, int q) const;
};

// Basis of v/w made of canonical coset representatives.
std::vector<SVec> quotient_basis(const Subspace& v, const Subspace& w);

// De Rham: kernel and image of d in a degree slice.
Subspace closed_forms(const GradedOperator& d, int k);
Subspace exact_forms(const GradedOperator& d, int k);
CohomologyTable derham(const LieAlgebra& g, bool with_reps = false);

// One degree of the cohomology of a graded differential, with class coordinates.
struct DegreeCohomology {
    int k = 0;
    int ambient_dim = 0;  // number of generators of the exterior algebra
    Subspace closed, exact;
    Subspace quotient;  // span of canonical coset representatives
    int dim() const { return closed.dim() - exact.dim(); }
    // Coordinates of a closed vector in the quotient basis; throws if not closed.
    std::vector<Scalar> class_coords(const SVec& v) const;
    SVec class_vec(const SVec& v) const { return sv_from_dense(class_coords(v)); }
    Form representative(const SVec& class_coordinates) const;
};
DegreeCohomology degree_cohomology(const GradedOperator& d, int k);
// Image of a subspace of closed vectors inside the quotient coordinates.
Subspace classes_of(const DegreeCohomology& h, const Subspace& closed_part);
// Some vector of span(gens) (closed vectors) whose class has coordinates y.
std::optional<SVec> lift_class(const DegreeCohomology& h, const std::vector<SVec>& gens, const SVec& y);
std::vector<int> betti_numbers(const LieAlgebra& g);

// Bigraded pieces of the double complex in local (p,q)-slice coordinates.
class Bicomplex {
public:
    explicit Bicomplex(const ComplexStructure& c);
    const ComplexStructure& structure() const { return c_; }
    const DifferentialSplit& split() const { return s_; }
    int n() const { return c_.n; }
    int slice_dim(int p, int q) const;
    Form to_form(int p, int q, const SVec& local) const;
    SVec to_local(int p, int q, const Form& f) const;  // f must be of pure bidegree

    Subspace ker_del(int p, int q) const;
    Subspace ker_delbar(int p, int q) const;
    Subspace ker_ddbar(int p, int q) const;
    Subspace im_del(int p, int q) const;     // del(slice p-1,q)
    Subspace im_delbar(int p, int q) const;  // delbar(slice p,q-1)
    Subspace im_ddbar(int p, int q) const;   // del delbar(slice p-1,q-1)
    Subspace im_d(int p, int q) const;       // (im d) ∩ slice (p,q)

    const GradedOperator& ddbar() const { return ddbar_; }

private:
    ComplexStructure c_;
    DifferentialSplit s_;
    GradedOperator ddbar_;
};

CohomologyTable dolbeault(const Bicomplex& b, bool with_reps = false);
CohomologyTable conj_dolbeault(const Bicomplex& b, bool with_reps = false);
CohomologyTable bott_chern(const Bicomplex& b, bool with_reps = false);
CohomologyTable aeppli(const Bicomplex& b, bool with_reps = false);
// Complex dimensions of de Rham cohomology of the complexified complex.
std::vector<int> complex_betti(const Bicomplex& b);

struct VarouchasTable {
    int n = 0;
    std::map<Bidegree, int> a, b, c, d, e, f;
    bool sequence1_exact = true;
    bool sequence2_exact = true;
    std::vector<std::string> failures;
    int total(const std::map<Bidegree, int>& t, int k) const;
};
VarouchasTable varouchas(const Bicomplex& b);
// Symmetry, duality and shift relations; returns the failing relations.
std::vector<std::string> varouchas_relations(const VarouchasTable& v, const CohomologyTable& bc, const CohomologyTable& a,
                                             const CohomologyTable& dol);

struct FrolicherReport {
    struct Degree {
        int k, h_dbar, b, h_bc_plus_a;
        int slack_frolicher() const { return h_dbar - b; }
        int slack_bc() const { return h_bc_plus_a - 2 * b; }
    };
    std::vector<Degree> degrees;
    std::map<Bidegree, int> bidegree_slack;  // h_BC + h_A - h_dbar - h_del
    bool all_nonnegative() const;
};
FrolicherReport frolicher_report(const Bicomplex& b);

struct DelDelbarReport {
    bool dimension_test = true;
    bool direct_test = true;
    bool e1_degeneration = true;
    int first_failure = -1;  // first degree where h_BC + h_A != 2 b
    int first_failure_lhs = 0, first_failure_rhs = 0;
    bool agree() const { return dimension_test == direct_test; }
};
DelDelbarReport deldelbar_lemma(const Bicomplex& b);

struct MasseyResult {
    bool vanishes = false;
    Form representative;
    int degree = 0;
};
// Triple product <[a],[b],[c]> modulo indeterminacy; throws ValidationError if undefined.
MasseyResult massey_triple(const LieAlgebra& g, const Form& a, const Form& b, const Form& c);
bool massey_defined(const LieAlgebra& g, const Form& a, const Form& b, const Form& c);

}  // namespace lc
