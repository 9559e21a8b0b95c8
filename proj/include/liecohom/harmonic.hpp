#pragma once

#include "liecohom/cohom.hpp"

#include <map>
#include <optional>

namespace lc {

// The stored monomial basis is declared orthonormal; the pairing is
// Hermitian, <x|y> = sum x_i conj(y_i).
struct InnerProduct {
    static Scalar dot(const SVec& x, const SVec& y);
    static Scalar norm2(const SVec& x) { return dot(x, x); }
};

// Conjugate transpose of every block.
GradedOperator adjoint(const GradedOperator& op);

enum class LaplacianKind { DeRham, Dolbeault, BottChern, Aeppli };
const char* laplacian_name(LaplacianKind k);

// dd* + d*d on the algebra's own coframe.
GradedOperator derham_laplacian(const LieAlgebra& g);
// Complex kinds act on the psi basis of the structure.
GradedOperator laplacian(LaplacianKind kind, const Bicomplex& b);

struct HarmonicReport {
    LaplacianKind kind = LaplacianKind::DeRham;
    std::map<int, int> by_degree;
    std::map<Bidegree, int> by_bidegree;
    bool self_adjoint = true;
    bool positive_semidefinite = true;
    bool preserves_bidegree = true;
    // BC: ker = ker del ∩ ker delbar ∩ ker delbar* del*; A: ker = ker del delbar ∩ ker del* ∩ ker delbar*.
    bool kernel_characterization = true;
    std::map<Bidegree, std::vector<Form>> harmonic_bidegree;
    std::map<int, std::vector<Form>> harmonic_degree;
};

HarmonicReport harmonic_derham(const LieAlgebra& g, bool with_forms = false);
HarmonicReport harmonic(LaplacianKind kind, const Bicomplex& b, bool with_forms = false);

// Kernel of the degree-k block of op, restricted to the columns of bidegree (p,q).
Subspace bidegree_kernel(const GradedOperator& op, int n, int p, int q);

// x^T M x >= 0 on every basis vector and on `samples` seeded random rational vectors.
bool psd_probe(const Matrix& m, int samples, unsigned seed);

struct LefschetzTypeReport {
    bool holds = true;
    int harmonic_2 = 0;
    std::vector<Form> failing;           // harmonic 2-forms whose image is not harmonic
    std::optional<Form> witness;         // first failing form
    std::optional<Form> witness_image;   // omega^{n-2} ∧ witness
    std::optional<Form> exact_primitive; // x with dx = witness_image, when exact
};

// Harmonic with respect to the metric that makes the algebra's coframe orthonormal.
LefschetzTypeReport lefschetz_type_check(const LieAlgebra& g, const Form& omega);

}  // namespace lc
