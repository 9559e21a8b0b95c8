#include "liecohom/sympl.hpp"

#include "liecohom/harmonic.hpp"

namespace lc {

namespace {

// Sign relating the bivector pairing on 1-forms to the coefficients of the Poisson bivector.
constexpr int kPairingSign = 1;

Scalar factorial(int k) {
    mpq_class f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return Scalar(f);
}

Scalar pi_entry(const Form& poisson, int i, int j) {
    if (i == j) return Scalar();
    if (i < j) return poisson.coeff(mask_of({i, j}));
    return -poisson.coeff(mask_of({j, i}));
}

// Laplace expansion along rows; cols holds the remaining column indices.
Scalar det_pairing(const Form& poisson, const std::vector<int>& rows, size_t r, std::vector<int>& cols) {
    if (r == rows.size()) return Scalar(1);
    Scalar total;
    for (size_t c = 0; c < cols.size(); ++c) {
        Scalar e = pi_entry(poisson, rows[r], cols[c]);
        if (e.is_zero()) continue;
        int col = cols[c];
        cols.erase(cols.begin() + static_cast<long>(c));
        Scalar minor = det_pairing(poisson, rows, r + 1, cols);
        cols.insert(cols.begin() + static_cast<long>(c), col);
        if (minor.is_zero()) continue;
        Scalar term = e * minor;
        if (c % 2) total -= term;
        else total += term;
    }
    return total;
}

Matrix omega_matrix(const Form& omega, int m) {
    Matrix W(m, m);
    for (const auto& [mk, v] : omega.terms()) {
        auto ix = mask_indices(mk);
        W.set(ix[0] - 1, ix[1] - 1, v);
        W.set(ix[1] - 1, ix[0] - 1, -v);
    }
    return W;
}

GradedOperator power_op(const GradedOperator& a, int k) {
    GradedOperator out = GradedOperator::identity(a.n);
    for (int i = 0; i < k; ++i) out = a * out;
    return out;
}

Subspace kernel_on(const GradedOperator& op, int k) { return kernel(op.block(k)); }

Subspace image_into(const GradedOperator& op, int k) {
    // image of op landing in degree k
    int src = k - op.shift;
    if (src < 0 || src > op.n) return Subspace(static_cast<int>(binom(op.n, k)));
    return image(op.block(src));
}

}  // namespace

Scalar bivector_pairing(const SymplecticStructure& s, Mask a, Mask b) {
    if (popcount(a) != popcount(b)) return Scalar();
    auto rows = mask_indices(a), cols = mask_indices(b);
    Scalar v = det_pairing(s.poisson, rows, 0, cols);
    if (kPairingSign < 0 && rows.size() % 2) v = -v;
    return v;
}

SymplecticStructure build_symplectic(const LieAlgebra& g, const Form& omega) {
    if (g.is_complex_coframe()) throw ValidationError("symplectic structures need a real presentation");
    int m = g.dim();
    if (m % 2) throw ValidationError("odd-dimensional algebra cannot be symplectic");
    if (omega.ambient() != m || omega.degree() != 2 || !omega.is_real()) throw ValidationError("omega must be a real 2-form");
    if (!g.d(omega).is_zero()) throw ValidationError("omega is not closed: d omega = " + g.d(omega).str());
    SymplecticStructure s;
    s.g = g;
    s.omega = omega;
    s.n = m / 2;
    Form top = power(omega, s.n);
    if (top.is_zero()) throw ValidationError("omega is degenerate");
    s.volume = Scalar(1) / factorial(s.n) * top;
    auto Winv = inverse(omega_matrix(omega, m));
    if (!Winv) throw std::logic_error("nondegenerate omega with singular matrix");
    s.poisson = Form(m);
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b) s.poisson.add(mask_of({a, b}), Winv->at(b - 1, a - 1));
    s.d = g.differential();
    s.L = wedge_operator(omega);
    s.Lambda = operator_from_rule(m, -2, [&](Mask mk) { return -interior(s.poisson, Form::mono(m, mk)); });
    std::vector<Scalar> h;
    for (int k = 0; k <= m; ++k) h.push_back(Scalar(s.n - k));
    s.H = GradedOperator::degree_scaled(m, h);
    if (graded_commutator(s.L, s.Lambda) != s.H) throw std::logic_error("[L, Lambda] != H");

    const auto& t = basis_table(m);
    Scalar c = s.volume.coeff((Mask(1) << m) - 1);
    Mask full = (Mask(1) << m) - 1;
    for (int k = 0; k <= m; ++k) {
        Matrix st(t.size(m - k), t.size(k));
        for (int j = 0; j < t.size(k); ++j) {
            Mask J = t.mask(k, j);
            for (int i = 0; i < t.size(k); ++i) {
                Mask I = t.mask(k, i);
                Scalar gij = bivector_pairing(s, I, J);
                if (gij.is_zero()) continue;
                Mask comp = full & ~I;
                Scalar x = c * gij * Scalar(wedge_sign(I, comp));
                st.set(t.index(comp), j, x);
            }
        }
        s.star.push_back(std::move(st));
    }
    s.dLambda = GradedOperator(m, -1);
    for (int k = 1; k <= m; ++k) {
        Matrix blk = s.star[m - k + 1] * (s.d.block(m - k) * s.star[k]);
        s.dLambda.blocks[k] = (k % 2 ? Scalar(1) : Scalar(-1)) * blk;
    }
    return s;
}

Form sympl_star(const SymplecticStructure& s, const Form& a) {
    int k = a.degree();
    if (a.is_zero()) return Form(2 * s.n);
    if (k < 0) throw ValidationError("star needs a homogeneous form");
    return Form::from_svec(2 * s.n, 2 * s.n - k, s.star[k].apply(a.to_svec(k)));
}

Subspace primitive_forms(const SymplecticStructure& s, int k) { return kernel_on(s.Lambda, k); }

std::vector<NamedCheck> symplectic_identities(const SymplecticStructure& s) {
    int m = 2 * s.n;
    std::vector<NamedCheck> out;
    auto add = [&](std::string name, bool ok) { out.push_back({std::move(name), ok}); };
    const auto &L = s.L, &Lam = s.Lambda, &H = s.H, &d = s.d, &dL = s.dLambda;
    add("[L,H] = 2L", graded_commutator(L, H) == Scalar(2) * L);
    add("[Lambda,H] = -2Lambda", graded_commutator(Lam, H) == Scalar(-2) * Lam);
    add("[L,Lambda] = H", graded_commutator(L, Lam) == H);
    add("[d,L] = 0", graded_commutator(d, L).is_zero());
    add("[dLambda,L] = -d", graded_commutator(dL, L) == Scalar(-1) * d);
    add("[d,Lambda] = dLambda", graded_commutator(d, Lam) == dL);
    GradedOperator ddl = d * dL;
    add("[d dLambda,L] = 0", graded_commutator(ddl, L).is_zero());
    add("[d dLambda,Lambda] = 0", graded_commutator(ddl, Lam).is_zero());
    add("[d dLambda,H] = 0", graded_commutator(ddl, H).is_zero());
    add("d dLambda + dLambda d = 0", (d * dL + dL * d).is_zero());
    add("dLambda^2 = 0", (dL * dL).is_zero());
    bool star2 = true, lam_star = true;
    for (int k = 0; k <= m; ++k) {
        if (s.star[m - k] * s.star[k] != Matrix::identity(static_cast<int>(binom(m, k)))) star2 = false;
        if (k >= 2) {
            Matrix rhs = Scalar(-1) * (s.star[m - k + 2] * (L.block(m - k) * s.star[k]));
            if (Lam.block(k) != rhs) lam_star = false;
        }
    }
    add("star^2 = id", star2);
    add("Lambda = -star L star", lam_star);
    bool prim = true;
    for (int k = 0; k <= m; ++k) {
        Subspace kl = kernel_on(Lam, k);
        if (k <= s.n) {
            if (kl != kernel_on(power_op(L, s.n - k + 1), k)) prim = false;
        } else if (kl.dim() != 0) {
            prim = false;
        }
    }
    add("P = ker Lambda = ker L^{n-k+1}", prim);
    bool iso = true;
    for (int k = 0; k <= s.n; ++k) {
        Matrix b = power_op(L, k).block(s.n - k);
        if (b.rows != b.cols || rank_echelon(b) != b.rows) iso = false;
    }
    add("L^k iso on forms", iso);
    return out;
}

Scalar lefschetz_coefficient(int r, int l, int n, int k) {
    mpq_class base = n - k + 2 * r + 1;
    mpq_class v = base * base;
    for (int i = 0; i <= r; ++i) v /= (base - i);
    for (int j = 0; j <= l; ++j) v /= (base + j);
    if (l % 2) v = -v;
    return Scalar(v);
}

std::vector<PrimitivePiece> primitive_decompose(const SymplecticStructure& s, const Form& a) {
    int m = 2 * s.n;
    std::vector<PrimitivePiece> out;
    if (a.is_zero()) return out;
    int k = a.degree();
    if (k < 0) throw ValidationError("Lefschetz decomposition needs a homogeneous form");
    // The decomposition formula is written with the contraction by the Poisson bivector.
    GradedOperator contract = Scalar(-1) * s.Lambda;
    Form recon(m);
    for (int r = std::max(k - s.n, 0); 2 * r <= k; ++r) {
        Form B(m);
        for (int l = 0; r + l <= k / 2; ++l) {
            Form x = a;
            for (int i = 0; i < r + l; ++i) x = contract.apply(x);
            for (int i = 0; i < l; ++i) x = s.L.apply(x);
            B += lefschetz_coefficient(r, l, s.n, k) / factorial(l) * x;
        }
        Form lr = B;
        for (int i = 0; i < r; ++i) lr = s.L.apply(lr);
        recon += Scalar(1) / factorial(r) * lr;
        if (!B.is_zero()) out.push_back({r, B});
    }
    if (recon != a) throw std::logic_error("Lefschetz decomposition does not reconstruct the input");
    for (const auto& p : out)
        if (!s.Lambda.apply(p.B).is_zero()) throw std::logic_error("Lefschetz component is not primitive");
    return out;
}

std::vector<bool> hlc_check(const SymplecticStructure& s) {
    std::vector<bool> out(s.n + 1, true);
    for (int k = 1; k <= s.n; ++k) {
        DegreeCohomology lo = degree_cohomology(s.d, s.n - k), hi = degree_cohomology(s.d, s.n + k);
        if (lo.dim() != hi.dim()) {
            out[k] = false;
            continue;
        }
        GradedOperator Lk = power_op(s.L, k);
        Matrix mat(hi.dim(), lo.dim());
        for (int j = 0; j < lo.dim(); ++j) {
            SVec img = Lk.block(s.n - k).apply(lo.quotient.basis()[j]);
            auto c = hi.class_coords(img);
            for (int i = 0; i < hi.dim(); ++i)
                if (!c[i].is_zero()) mat.r[i].emplace_back(j, c[i]);
        }
        out[k] = rank_echelon(mat) == lo.dim();
    }
    return out;
}

bool ddlambda_lemma(const SymplecticStructure& s) {
    GradedOperator ddl = s.d * s.dLambda;
    for (int k = 0; k <= 2 * s.n; ++k) {
        Subspace lhs = intersect(image_into(s.d, k), kernel_on(s.dLambda, k));
        if (lhs != image(ddl.block(k))) return false;
    }
    return true;
}

SymplecticTables tseng_yau_tables(const SymplecticStructure& s) {
    int m = 2 * s.n;
    SymplecticTables t;
    t.unimodular = structure_flags(s.g).unimodular;
    GradedOperator ddl = s.d * s.dLambda;
    GradedOperator ds = s.d.adjoint(), dls = s.dLambda.adjoint(), P = ddl, Ps = ddl.adjoint();
    GradedOperator Q1 = ds * s.dLambda, Q2 = s.d * dls;
    GradedOperator D1 = P * Ps + Ps * P + Q1 * Q1.adjoint() + Q1.adjoint() * Q1 + ds * s.d + dls * s.dLambda;
    GradedOperator D2 = P * Ps + Ps * P + Q2 * Q2.adjoint() + Q2.adjoint() * Q2 + s.d * ds + s.dLambda * dls;
    for (int k = 0; k <= m; ++k) {
        t.betti.push_back(degree_cohomology(s.d, k).dim());
        Subspace kd = kernel_on(s.d, k), kdl = kernel_on(s.dLambda, k), kddl = kernel_on(ddl, k);
        Subspace imd = image_into(s.d, k), imdl = image_into(s.dLambda, k), imddl = image(ddl.block(k));
        Subspace closed_both = intersect(kd, kdl);
        Subspace dsum = sum(imd, imdl);
        t.h_dlambda.push_back(quotient_dim(kdl, imdl));
        t.h_d_plus_dlambda.push_back(quotient_dim(closed_both, imddl));
        t.h_ddlambda.push_back(quotient_dim(kddl, dsum));
        Subspace prim = primitive_forms(s, k);
        t.ph_d_plus_dlambda.push_back(quotient_dim(intersect(closed_both, prim), intersect(imddl, prim)));
        t.ph_ddlambda.push_back(quotient_dim(intersect(kddl, prim), intersect(dsum, prim)));
        Subspace h1 = kernel(D1.block(k)), h2 = kernel(D2.block(k));
        t.ker_D_d_plus_dlambda.push_back(h1.dim());
        t.ker_D_ddlambda.push_back(h2.dim());
        if (h1.dim() != t.h_d_plus_dlambda.back() || h2.dim() != t.h_ddlambda.back()) t.oracle_agrees = false;
        if (h1 != intersect(closed_both, kernel_on(Ps, k))) t.oracle_kernel_characterization = false;
        if (h2 != intersect(intersect(kddl, kernel_on(ds, k)), kernel_on(dls, k))) t.oracle_kernel_characterization = false;
        t.ddl_degree.push_back(intersect(imd, kdl) == imddl);
    }
    for (int k = 0; k <= m; ++k) {
        if (t.h_d_plus_dlambda[k] != t.betti[k]) t.betti_match = false;
        if (t.h_dlambda[k] != t.betti[m - k]) t.dlambda_duality = false;
        if (!t.ddl_degree[k]) t.ddlambda_lemma = false;
        int sum_ph = 0;
        for (int r = std::max(k - s.n, 0); 2 * r <= k; ++r) sum_ph += t.ph_d_plus_dlambda[k - 2 * r];
        if (sum_ph != t.h_d_plus_dlambda[k]) t.tseng_yau_decomposition = false;
    }
    t.hlc = hlc_check(s);
    for (bool b : t.hlc) t.hlc_all = t.hlc_all && b;
    return t;
}

bool OmegaSubgroups::contains(int r, int s, const Form& f) const {
    int k = 2 * r + s;
    const auto& h = cohomology.at(k);
    return spaces.at({r, s}).contains(h.class_vec(f.to_svec(k)));
}

bool OmegaSubgroups::in_sum(const std::vector<std::pair<int, int>>& blocks, const Form& f) const {
    if (blocks.empty()) return false;
    int k = 2 * blocks.front().first + blocks.front().second;
    const auto& h = cohomology.at(k);
    Subspace total(h.dim());
    for (const auto& rs : blocks) {
        if (2 * rs.first + rs.second != k) throw ValidationError("subgroups of different degrees");
        total = sum(total, spaces.at(rs));
    }
    return total.contains(h.class_vec(f.to_svec(k)));
}

OmegaSubgroups omega_subgroups(const SymplecticStructure& s) {
    int m = 2 * s.n;
    OmegaSubgroups o;
    o.n = s.n;
    std::map<std::pair<int, int>, Subspace> closed_part;
    for (int k = 0; k <= m; ++k) o.cohomology.emplace(k, degree_cohomology(s.d, k));
    for (int k = 0; k <= m; ++k) {
        const auto& h = o.cohomology.at(k);
        Subspace total(h.dim());
        int sumdims = 0;
        for (int r = 0; 2 * r <= k; ++r) {
            int sd = k - 2 * r;
            if (sd > s.n) continue;
            Subspace prim = primitive_forms(s, sd);
            Subspace lifted = image(power_op(s.L, r).block(sd), prim);
            Subspace cl = intersect(lifted, h.closed);
            Subspace sp = classes_of(h, cl);
            closed_part[{r, sd}] = cl;
            o.spaces[{r, sd}] = sp;
            o.dims[{r, sd}] = sp.dim();
            total = sum(total, sp);
            sumdims += sp.dim();
        }
        o.direct[k] = total.dim() == sumdims;
        o.full[k] = total.dim() == h.dim();
    }
    for (const auto& [rs, sp] : o.spaces) {
        auto [r, sd] = rs;
        if (r == 0 || 2 * r + sd > s.n) continue;
        const auto& h = o.cohomology.at(2 * r + sd);
        GradedOperator Lr = power_op(s.L, r);
        std::vector<SVec> imgs;
        for (const auto& v : closed_part.at({0, sd}).basis()) imgs.push_back(h.class_vec(Lr.block(sd).apply(v)));
        if (Subspace::span(h.dim(), imgs) != sp) o.lifting_property = false;
    }
    for (int k = 1; 2 * k <= s.n; ++k) {
        if (!o.spaces.count({k, 0}) || !o.spaces.count({0, 2 * k})) continue;
        if (intersect(o.spaces.at({k, 0}), o.spaces.at({0, 2 * k})).dim() != 0) o.low_intersections = false;
    }
    return o;
}

}  // namespace lc
