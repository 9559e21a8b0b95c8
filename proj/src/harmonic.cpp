#include "liecohom/harmonic.hpp"

#include <random>

namespace lc {

Scalar InnerProduct::dot(const SVec& x, const SVec& y) { return sv_dot(x, sv_conj(y)); }

GradedOperator adjoint(const GradedOperator& op) { return op.adjoint(); }

const char* laplacian_name(LaplacianKind k) {
    switch (k) {
        case LaplacianKind::DeRham: return "deRham";
        case LaplacianKind::Dolbeault: return "Dolbeault";
        case LaplacianKind::BottChern: return "BottChern";
        case LaplacianKind::Aeppli: return "Aeppli";
    }
    return "?";
}

GradedOperator derham_laplacian(const LieAlgebra& g) {
    GradedOperator d = g.differential();
    GradedOperator ds = d.adjoint();
    return d * ds + ds * d;
}

GradedOperator laplacian(LaplacianKind kind, const Bicomplex& b) {
    const auto& s = b.split();
    const GradedOperator &D = s.del, &Db = s.delbar;
    GradedOperator Ds = D.adjoint(), Dbs = Db.adjoint();
    switch (kind) {
        case LaplacianKind::DeRham: {
            GradedOperator ds = s.d.adjoint();
            return s.d * ds + ds * s.d;
        }
        case LaplacianKind::Dolbeault: return Db * Dbs + Dbs * Db;
        case LaplacianKind::BottChern: {
            GradedOperator P = D * Db, Ps = P.adjoint();
            GradedOperator Q = Dbs * D, Qs = Q.adjoint();
            return P * Ps + Ps * P + Q * Qs + Qs * Q + Dbs * Db + Ds * D;
        }
        case LaplacianKind::Aeppli: {
            GradedOperator P = D * Db, Ps = P.adjoint();
            GradedOperator Q = Db * Ds, Qs = Q.adjoint();
            return D * Ds + Db * Dbs + Ps * P + P * Ps + Qs * Q + Q * Qs;
        }
    }
    throw std::logic_error("unknown Laplacian kind");
}

Subspace bidegree_kernel(const GradedOperator& op, int n, int p, int q) {
    auto cols = bidegree_indices(n, p, q);
    int k = p + q;
    const Matrix& m = op.block(k);
    std::vector<int> rows(m.rows);
    for (int i = 0; i < m.rows; ++i) rows[i] = i;
    return kernel(m.submatrix(rows, cols));
}

bool psd_probe(const Matrix& m, int samples, unsigned seed) {
    for (int i = 0; i < m.rows; ++i) {
        Scalar v = m.at(i, i);
        if (!v.is_real() || v.re() < 0) return false;
    }
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    for (int s = 0; s < samples; ++s) {
        SVec x;
        for (int j = 0; j < m.cols; ++j) {
            Scalar a = Scalar::frac(num(rng), den(rng)) + Scalar::i() * Scalar::frac(num(rng), den(rng));
            if (!a.is_zero()) x.emplace_back(j, a);
        }
        Scalar v = InnerProduct::dot(m.apply(x), x);
        if (!v.is_real() || v.re() < 0) return false;
    }
    return true;
}

namespace {

void check_operator(HarmonicReport& r, const GradedOperator& lap) {
    for (int k = 0; k <= lap.n; ++k) {
        const Matrix& m = lap.block(k);
        if (m != m.adjoint()) r.self_adjoint = false;
        if (!psd_probe(m, 3, 1000u + static_cast<unsigned>(k))) r.positive_semidefinite = false;
    }
}

}  // namespace

HarmonicReport harmonic_derham(const LieAlgebra& g, bool with_forms) {
    HarmonicReport r;
    r.kind = LaplacianKind::DeRham;
    GradedOperator lap = derham_laplacian(g);
    check_operator(r, lap);
    for (int k = 0; k <= g.dim(); ++k) {
        Subspace h = kernel(lap.block(k));
        r.by_degree[k] = h.dim();
        if (with_forms)
            for (const auto& v : h.basis()) r.harmonic_degree[k].push_back(Form::from_svec(g.dim(), k, v));
    }
    return r;
}

HarmonicReport harmonic(LaplacianKind kind, const Bicomplex& b, bool with_forms) {
    if (kind == LaplacianKind::DeRham) {
        HarmonicReport r = harmonic_derham(b.structure().cx, with_forms);
        return r;
    }
    if (!b.structure().integrable()) throw ValidationError("complex structure is not integrable");
    HarmonicReport r;
    r.kind = kind;
    int n = b.n();
    GradedOperator lap = laplacian(kind, b);
    check_operator(r, lap);
    const auto& s = b.split();
    GradedOperator P = s.del * s.delbar;
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) {
            auto idx = bidegree_indices(n, p, q);
            const Matrix& m = lap.block(p + q);
            std::vector<int> all(m.rows);
            for (int i = 0; i < m.rows; ++i) all[i] = i;
            Matrix col = m.submatrix(all, idx);
            Matrix sq = m.submatrix(idx, idx);
            if (col.nnz() != sq.nnz()) r.preserves_bidegree = false;
            Subspace h = kernel(sq);
            r.by_bidegree[{p, q}] = h.dim();
            r.by_degree[p + q] += h.dim();
            if (with_forms)
                for (const auto& v : h.basis()) r.harmonic_bidegree[{p, q}].push_back(b.to_form(p, q, v));
            if (kind == LaplacianKind::Dolbeault) continue;
            Subspace other;
            if (kind == LaplacianKind::BottChern) {
                other = intersect(intersect(bidegree_kernel(s.del, n, p, q), bidegree_kernel(s.delbar, n, p, q)),
                                  bidegree_kernel(P.adjoint(), n, p, q));
            } else {
                other = intersect(intersect(bidegree_kernel(P, n, p, q), bidegree_kernel(s.del.adjoint(), n, p, q)),
                                  bidegree_kernel(s.delbar.adjoint(), n, p, q));
            }
            if (other != h) r.kernel_characterization = false;
        }
    return r;
}

LefschetzTypeReport lefschetz_type_check(const LieAlgebra& g, const Form& omega) {
    if (g.is_complex_coframe()) throw ValidationError("Lefschetz-type check needs a real presentation");
    int m = g.dim();
    if (m % 2 || m < 4) throw ValidationError("Lefschetz-type check needs even dimension at least 4");
    int n = m / 2;
    if (omega.degree() != 2 || !omega.is_real()) throw ValidationError("omega must be a real 2-form");
    if (!g.d(omega).is_zero()) throw ValidationError("omega is not closed");
    if (power(omega, n).is_zero()) throw ValidationError("omega is degenerate");
    GradedOperator lap = derham_laplacian(g);
    Subspace h2 = kernel(lap.block(2));
    Subspace htop = kernel(lap.block(m - 2));
    Form wpow = power(omega, n - 2);
    LefschetzTypeReport r;
    r.harmonic_2 = h2.dim();
    GradedOperator d = g.differential();
    for (const auto& v : h2.basis()) {
        Form a = Form::from_svec(m, 2, v);
        Form img = wedge(wpow, a);
        if (htop.contains(img.to_svec(m - 2))) continue;
        r.holds = false;
        r.failing.push_back(a);
        if (!r.witness) {
            r.witness = a;
            r.witness_image = img;
            if (auto x = solve(d.block(m - 3), img.to_svec(m - 2))) r.exact_primitive = Form::from_svec(m, m - 3, *x);
        }
    }
    return r;
}

}  // namespace lc
