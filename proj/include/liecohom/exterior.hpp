#pragma once

#include "liecohom/linalg.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lc {

// A monomial e^{i1...ik} is a bitmask; bit i-1 stands for index i.
using Mask = std::uint32_t;

int popcount(Mask m);
long binom(int n, int k);
std::vector<int> mask_indices(Mask m);  // 1-based, increasing
Mask mask_of(const std::vector<int>& idx);  // 1-based; throws on repeats

// Degree first, then lexicographic on the increasing index lists.
struct MonoLess {
    bool operator()(Mask a, Mask b) const;
};

// Sign of e^A ∧ e^B reordered to e^{A∪B}; 0 when A and B overlap.
int wedge_sign(Mask a, Mask b);

// Ordered monomial basis of each degree slice, cached per ambient dimension.
class BasisTable {
public:
    explicit BasisTable(int n);
    int n() const { return n_; }
    int size(int k) const;
    Mask mask(int k, int idx) const { return by_deg_[k][idx]; }
    const std::vector<Mask>& masks(int k) const { return by_deg_[k]; }
    int index(Mask m) const { return index_[m]; }

private:
    int n_;
    std::vector<std::vector<Mask>> by_deg_;
    std::vector<int> index_;
};

const BasisTable& basis_table(int n);

class Form {
public:
    Form() = default;
    explicit Form(int n) : n_(n) {}
    static Form unit(int n);
    static Form mono(int n, Mask m, const Scalar& c = Scalar(1));
    static Form basis1(int n, int i, const Scalar& c = Scalar(1));  // c e^i, 1-based
    static Form from_svec(int n, int k, const SVec& v);

    int ambient() const { return n_; }
    const std::map<Mask, Scalar, MonoLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_real() const;
    // Degree if homogeneous, -1 for zero or mixed forms.
    int degree() const;
    Scalar coeff(Mask m) const;
    void add(Mask m, const Scalar& c);
    Form component(int k) const;
    SVec to_svec(int k) const;  // degree-k part in the basis of basis_table(n)

    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    Form operator-() const;
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(const Scalar& s, const Form& a);
    friend bool operator==(const Form& a, const Form& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }
    friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

    // labels[i] names index i+1; default prints e1, e12, e1.2.10 style monomials.
    std::string str(const std::vector<std::string>& labels = {}) const;

private:
    int n_ = 0;
    std::map<Mask, Scalar, MonoLess> terms_;
};

Form wedge(const Form& a, const Form& b);
Form power(const Form& a, int k);

// iota_{e_i} with sign (-1)^{#indices below i}.
Form interior_vector(int i, const Form& a);
// Contraction by a bivector given as a degree-2 Form in the frame basis;
// iota_{x∧y} = iota_y ∘ iota_x.
Form interior(const Form& bivector, const Form& a);

// Swap indices by the involution perm (0-based), conjugate coefficients, fix order.
Form conjugate_form(const Form& a, const std::vector<int>& perm);

// Replace e^i by images[i-1] (1-forms in a possibly different ambient dimension).
Form substitute(const Form& a, const std::vector<Form>& images, int target_dim);
// Degree-k block of the substitution as a matrix: columns are images of monomials.
Matrix substitution_matrix(const std::vector<Form>& images, int source_dim, int target_dim, int k);

// Linear operator on the exterior algebra shifting degree uniformly.
struct GradedOperator {
    int n = 0;
    int shift = 0;
    std::vector<Matrix> blocks;  // blocks[k]: degree k -> degree k+shift

    GradedOperator() = default;
    GradedOperator(int n_, int shift_);  // zero operator
    static GradedOperator identity(int n);
    static GradedOperator degree_scaled(int n, const std::vector<Scalar>& per_degree);

    const Matrix& block(int k) const { return blocks.at(k); }
    bool target_ok(int k) const { return k + shift >= 0 && k + shift <= n; }
    Form apply(const Form& a) const;
    GradedOperator adjoint() const;
    bool is_zero() const;
    bool is_real() const;

    friend bool operator==(const GradedOperator& a, const GradedOperator& b);
    friend bool operator!=(const GradedOperator& a, const GradedOperator& b) { return !(a == b); }
};

GradedOperator operator*(const GradedOperator& a, const GradedOperator& b);  // composition a∘b
GradedOperator operator+(const GradedOperator& a, const GradedOperator& b);
GradedOperator operator-(const GradedOperator& a, const GradedOperator& b);
GradedOperator operator*(const Scalar& s, const GradedOperator& a);
// [a,b] = ab - (-1)^{|a||b|} ba
GradedOperator graded_commutator(const GradedOperator& a, const GradedOperator& b);

// Operator from a rule on monomials.
template <class F>
GradedOperator operator_from_rule(int n, int shift, F&& rule) {
    GradedOperator op(n, shift);
    const auto& t = basis_table(n);
    for (int k = 0; k <= n; ++k) {
        if (!op.target_ok(k)) continue;
        Matrix& m = op.blocks[k];
        for (int c = 0; c < t.size(k); ++c) {
            Form img = rule(t.mask(k, c));
            for (const auto& [mm, v] : img.terms()) m.set(t.index(mm), c, v);
        }
    }
    return op;
}

GradedOperator wedge_operator(const Form& w);  // L_w : a -> w ∧ a, w homogeneous

// Rational structure of a conjugation-stable subspace of a degree-k slice: the
// vectors fixed by conjugate_form, as a Q-space of the same dimension.
struct Realification {
    int generators = 0;
    int k = 0;
    std::vector<SVec> basis;  // fixed vectors in slice coordinates
    int dim() const { return static_cast<int>(basis.size()); }
    SVec embed(const std::vector<Scalar>& real_coords) const;
    // Rational coordinates of a fixed vector; throws if v is not in the real span.
    std::vector<Scalar> coords(const SVec& v) const;
};

SVec conjugate_slice(const SVec& v, int generators, int k, const std::vector<int>& perm);
// Throws std::invalid_argument when the subspace is not conjugation-stable.
Realification realify(const Subspace& v, int generators, int k, const std::vector<int>& perm);

}  // namespace lc
