#include "liecohom/cplx.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace lc {

std::pair<int, int> bidegree(Mask m, int n) {
    Mask low = (Mask(1) << n) - 1;
    return {popcount(m & low), popcount(m >> n)};
}

std::vector<int> bidegree_indices(int n, int p, int q) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, std::vector<int>> cache;
    if (p < 0 || q < 0 || p > n || q > n) return {};
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(n, p, q);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const auto& t = basis_table(2 * n);
    std::vector<int> out;
    for (int i = 0; i < t.size(p + q); ++i)
        if (bidegree(t.mask(p + q, i), n) == std::make_pair(p, q)) out.push_back(i);
    cache.emplace(key, out);
    return out;
}

std::vector<int> conjugation_pairing(int n) {
    std::vector<int> perm(2 * n);
    for (int j = 0; j < n; ++j) {
        perm[j] = j + n;
        perm[j + n] = j;
    }
    return perm;
}

Matrix ComplexStructure::psi_to_e(int k) const { return substitution_matrix(psi_in_e, 2 * n, 2 * n, k); }
Matrix ComplexStructure::e_to_psi(int k) const { return substitution_matrix(e_in_psi, 2 * n, 2 * n, k); }
Form ComplexStructure::to_e(const Form& a) const { return substitute(a, psi_in_e, 2 * n); }
Form ComplexStructure::to_psi(const Form& a) const { return substitute(a, e_in_psi, 2 * n); }

Matrix J_from_pairs(int dim, const std::vector<std::pair<int, int>>& pairs) {
    Matrix J(dim, dim);
    std::vector<bool> used(dim + 1, false);
    for (auto [a, b] : pairs) {
        if (a < 1 || b < 1 || a > dim || b > dim || a == b || used[a] || used[b])
            throw ValidationError("J pairs must partition the basis indices");
        used[a] = used[b] = true;
        J.set(b - 1, a - 1, Scalar(1));   // J e_a = e_b
        J.set(a - 1, b - 1, Scalar(-1));  // J e_b = -e_a
    }
    if (static_cast<int>(pairs.size()) * 2 != dim) throw ValidationError("J pairs must cover every index");
    return J;
}

std::vector<std::pair<std::pair<int, int>, SVec>> nijenhuis(const LieAlgebra& g, const Matrix& J) {
    std::vector<std::pair<std::pair<int, int>, SVec>> out;
    int m = g.dim();
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            SVec x{Entry(i, Scalar(1))}, y{Entry(j, Scalar(1))};
            SVec Jx = J.apply(x), Jy = J.apply(y);
            SVec N = g.bracket(x, y);
            N = sv_add(N, J.apply(g.bracket(Jx, y)));
            N = sv_add(N, J.apply(g.bracket(x, Jy)));
            N = sv_axpy(N, Scalar(-1), g.bracket(Jx, Jy));
            if (!N.empty()) out.push_back({{i + 1, j + 1}, N});
        }
    return out;
}

ComplexStructure from_phi(const LieAlgebra& real, const std::vector<Form>& phi, std::string name) {
    if (real.is_complex_coframe()) throw ValidationError("complex structure needs a real presentation");
    int m = real.dim();
    if (m % 2) throw ValidationError("odd-dimensional algebra cannot carry a complex structure");
    int n = m / 2;
    if (static_cast<int>(phi.size()) != n) throw ValidationError("expected " + std::to_string(n) + " (1,0)-forms");
    ComplexStructure c;
    c.name = name.empty() ? real.name() : name;
    c.n = n;
    c.real = real;
    for (const auto& f : phi) {
        if (f.ambient() != m || (!f.is_zero() && f.degree() != 1)) throw ValidationError("(1,0)-forms must be 1-forms");
        c.psi_in_e.push_back(f);
    }
    for (const auto& f : phi) {
        Form g(m);
        for (const auto& [mk, v] : f.terms()) g.add(mk, v.conj());
        c.psi_in_e.push_back(g);
    }
    Matrix P(m, m);
    for (int a = 0; a < m; ++a) P.r[a] = c.psi_in_e[a].to_svec(1);
    auto Pinv = inverse(P);
    if (!Pinv) throw ValidationError("(1,0)-forms and their conjugates are not a coframe");
    for (int b = 0; b < m; ++b) {
        Form f(m);
        for (const auto& [a, v] : Pinv->r[b]) f.add(Mask(1) << a, v);
        c.e_in_psi.push_back(f);
    }
    std::vector<Form> de;
    for (int a = 0; a < m; ++a) {
        Form f(m);
        for (const auto& [b, v] : P.r[a]) f += v * real.de(b + 1);
        de.push_back(c.to_psi(f));
    }
    c.cx = LieAlgebra(c.name, std::move(de), Presentation::ComplexCoframe);
    c.cx.params = real.params;
    c.cx.validate();
    Matrix D(m, m);
    for (int a = 0; a < m; ++a) D.set(a, a, a < n ? Scalar::i() : -Scalar::i());
    c.J = (*Pinv) * D * P;
    if (!c.J.is_real()) throw ValidationError("(1,0)-forms do not define a real J");
    c.nijenhuis_zero = nijenhuis(real, c.J).empty();
    c.no_02_part = true;
    Mask low = (Mask(1) << n) - 1;
    for (int j = 1; j <= n; ++j)
        for (const auto& kv : c.cx.de(j).terms())
            if (!(kv.first & low)) c.no_02_part = false;
    return c;
}

ComplexStructure from_J_matrix(const LieAlgebra& real, const Matrix& J, std::string name) {
    int m = real.dim();
    if (m % 2) throw ValidationError("odd-dimensional algebra cannot carry a complex structure");
    if (J.rows != m || J.cols != m) throw ValidationError("J has the wrong size");
    if (!J.is_real()) throw ValidationError("J must be a real matrix");
    if (J * J != Scalar(-1) * Matrix::identity(m)) throw ValidationError("J^2 != -I");
    Matrix A = J.transpose() - Scalar::i() * Matrix::identity(m);
    Subspace ker = kernel(A);
    if (ker.dim() != m / 2) throw ValidationError("J has an unbalanced +i eigenspace");
    std::vector<Form> phi;
    for (const auto& v : ker.basis()) phi.push_back(Form::from_svec(m, 1, v));
    ComplexStructure c = from_phi(real, phi, name);
    if (c.J != J) throw std::logic_error("J reconstruction mismatch");
    return c;
}

ComplexStructure from_pairs(const LieAlgebra& real, const std::vector<std::pair<int, int>>& pairs, std::string name) {
    int m = real.dim();
    J_from_pairs(m, pairs);  // validates the partition
    std::vector<Form> phi;
    for (auto [a, b] : pairs) phi.push_back(Form::basis1(m, a) + Form::basis1(m, b, Scalar::i()));
    return from_phi(real, phi, name);
}

ComplexStructure from_coframe(const LieAlgebra& cx, std::string name) {
    if (!cx.is_complex_coframe()) throw ValidationError("expected a complex-coframe presentation");
    LieAlgebra real = real_model(cx);
    int n = cx.complex_rank();
    std::vector<Form> phi;
    for (int j = 1; j <= n; ++j) phi.push_back(Form::basis1(2 * n, j) + Form::basis1(2 * n, j + n, Scalar::i()));
    ComplexStructure c = from_phi(real, phi, name.empty() ? cx.name() : name);
    for (int j = 1; j <= 2 * n; ++j)
        if (c.cx.de(j) != cx.de(j)) throw std::logic_error("complex model does not reproduce the coframe");
    c.cx.params = cx.params;
    c.real.params = cx.params;
    return c;
}

DifferentialSplit split_differential(const ComplexStructure& c) {
    int n = c.n, m = 2 * n;
    DifferentialSplit s;
    s.n = n;
    s.d = c.cx.differential();
    s.A = s.del = s.delbar = s.Abar = GradedOperator(m, 1);
    const auto& t = basis_table(m);
    for (int k = 0; k < m; ++k) {
        const Matrix& b = s.d.block(k);
        for (int r = 0; r < b.rows; ++r)
            for (const auto& [col, v] : b.r[r]) {
                auto [p1, q1] = bidegree(t.mask(k + 1, r), n);
                auto [p0, q0] = bidegree(t.mask(k, col), n);
                int dp = p1 - p0, dq = q1 - q0;
                GradedOperator* target = nullptr;
                if (dp == 2 && dq == -1) target = &s.A;
                else if (dp == 1 && dq == 0) target = &s.del;
                else if (dp == 0 && dq == 1) target = &s.delbar;
                else if (dp == -1 && dq == 2) target = &s.Abar;
                else throw std::logic_error("d has a component of impossible bidegree");
                target->blocks[k].r[r].emplace_back(col, v);
            }
    }
    if (s.A + s.del + s.delbar + s.Abar != s.d) throw std::logic_error("bidegree split does not reassemble d");
    return s;
}

Matrix bidegree_block(const GradedOperator& op, int n, int p, int q, int dp, int dq) {
    std::vector<int> cols = bidegree_indices(n, p, q);
    std::vector<int> rows = bidegree_indices(n, p + dp, q + dq);
    int k = p + q;
    if (k < 0 || k > 2 * n || !op.target_ok(k) || (dp + dq) != op.shift) return Matrix(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    return op.block(k).submatrix(rows, cols);
}

std::array<bool, 7> d_squared_identities(const DifferentialSplit& s) {
    const auto &A = s.A, &D = s.del, &Db = s.delbar, &Ab = s.Abar;
    return {
        (A * A).is_zero(),
        (A * D + D * A).is_zero(),
        (D * D + A * Db + Db * A).is_zero(),
        (D * Db + Db * D + A * Ab + Ab * A).is_zero(),
        (Db * Db + D * Ab + Ab * D).is_zero(),
        (Db * Ab + Ab * Db).is_zero(),
        (Ab * Ab).is_zero(),
    };
}

std::string iwasawa_class_label(const std::array<Scalar, 5>& s, int* block_rank, int* s_rank) {
    const Scalar &s11 = s[1], &s12 = s[2], &s21 = s[3], &s22 = s[4];
    bool all_zero = s11.is_zero() && s12.is_zero() && s21.is_zero() && s22.is_zero();
    if (all_zero && s[0].is_zero()) throw ValidationError("degenerate deformation: every sigma vanishes");
    Matrix B = Matrix::from_dense({{-s21, s11}, {-s22, s12}});
    Matrix S = Matrix::from_dense({{s11.conj(), s22.conj(), s12.conj(), s21.conj()}, {s11, s22, s21, s12}});
    int rb = rank(B), rs = rank(S);
    if (block_rank) *block_rank = rb;
    if (s_rank) *s_rank = rs;
    if (all_zero) return "i";
    return std::string(rb == 1 ? "ii" : "iii") + (rs == 1 ? ".a" : ".b");
}

IwasawaDeformation iwasawa_family(const std::array<Scalar, 5>& sigma) {
    IwasawaDeformation out;
    out.label = iwasawa_class_label(sigma, &out.block_rank, &out.s_rank);
    const int m = 6;
    // basis: f1 f2 f3 F1 F2 F3 -> indices 1..6
    Form d3(m);
    d3.add(mask_of({1, 2}), sigma[0]);
    d3.add(mask_of({1, 4}), sigma[1]);
    d3.add(mask_of({1, 5}), sigma[2]);
    d3.add(mask_of({2, 4}), sigma[3]);
    d3.add(mask_of({2, 5}), sigma[4]);
    std::vector<Form> de(m, Form(m));
    de[2] = d3;
    de[5] = conjugate_form(d3, conjugation_pairing(3));
    out.cx = LieAlgebra("iwasawa_def", std::move(de), Presentation::ComplexCoframe);
    out.cx.validate();
    out.cs = from_coframe(out.cx, "iwasawa_def(" + out.label + ")");
    return out;
}

}  // namespace lc
