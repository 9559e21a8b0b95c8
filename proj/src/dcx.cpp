#include "liecohom/dcx.hpp"

#include <random>

namespace lc {

namespace {

Subspace span_of(int m, const std::vector<SVec>& v) { return Subspace::span(m, v); }

bool closed_under_bracket(const LieAlgebra& g, const std::vector<SVec>& b) {
    Subspace s = span_of(g.dim(), b);
    for (size_t i = 0; i < b.size(); ++i)
        for (size_t j = i + 1; j < b.size(); ++j)
            if (!s.contains(g.bracket(b[i], b[j]))) return false;
    return true;
}

bool brackets_vanish(const LieAlgebra& g, const std::vector<SVec>& a, const std::vector<SVec>& b) {
    for (const auto& x : a)
        for (const auto& y : b)
            if (!g.bracket(x, y).empty()) return false;
    return true;
}

}  // namespace

int lower_central_step(const LieAlgebra& g, const std::vector<SVec>& span) {
    int m = g.dim();
    Subspace a = span_of(m, span);
    Subspace cur = a;
    for (int step = 0;; ++step) {
        if (cur.dim() == 0) return step;
        std::vector<SVec> next;
        for (const auto& x : cur.basis())
            for (const auto& y : a.basis()) next.push_back(g.bracket(x, y));
        Subspace nxt = span_of(m, next);
        if (nxt == cur) return -1;
        cur = nxt;
        if (step > m + 1) return -1;
    }
}

Subspace DComplexStructure::eigen(int k, int sign) const {
    const Matrix& a = action.block(k);
    return kernel(a - Scalar(sign) * Matrix::identity(a.rows));
}

Subspace DComplexStructure::bigraded(int p, int q) const {
    int m = 2 * n;
    Matrix sub = substitution_matrix(coframe, m, m, p + q);
    auto cols = sub.columns();
    const auto& t = basis_table(m);
    std::vector<SVec> gens;
    for (int c = 0; c < t.size(p + q); ++c) {
        Mask mk = t.mask(p + q, c);
        Mask low = mk & ((Mask(1) << n) - 1);
        if (popcount(low) == p) gens.push_back(cols[c]);
    }
    return Subspace::span(static_cast<int>(binom(m, p + q)), gens);
}

DComplexStructure from_splitting(const LieAlgebra& g, const std::vector<SVec>& plus_basis,
                                 const std::vector<SVec>& minus_basis) {
    if (g.is_complex_coframe()) throw ValidationError("D-complex structures need a real presentation");
    int m = g.dim();
    if (m % 2) throw ValidationError("D-complex structures need even dimension");
    int n = m / 2;
    if (static_cast<int>(plus_basis.size()) != n || static_cast<int>(minus_basis.size()) != n)
        throw ValidationError("each eigenspace needs exactly " + std::to_string(n) + " vectors");
    for (const auto& v : plus_basis)
        for (const auto& [i, x] : v)
            if (i < 0 || i >= m || !x.is_real()) throw ValidationError("eigenvector coordinates must be real and in range");
    for (const auto& v : minus_basis)
        for (const auto& [i, x] : v)
            if (i < 0 || i >= m || !x.is_real()) throw ValidationError("eigenvector coordinates must be real and in range");
    Matrix B(m, m);
    for (int j = 0; j < m; ++j) {
        const SVec& col = j < n ? plus_basis[j] : minus_basis[j - n];
        for (const auto& [i, x] : col) B.set(i, j, x);
    }
    auto Binv = inverse(B);
    if (!Binv) throw ValidationError("eigenspaces are not complementary");

    DComplexStructure k;
    k.g = g;
    k.n = n;
    k.plus_basis = plus_basis;
    k.minus_basis = minus_basis;
    Matrix D(m, m);
    for (int i = 0; i < m; ++i) D.set(i, i, Scalar(i < n ? 1 : -1));
    k.K = B * D * *Binv;
    // rows of B^{-1} are the adapted coframe
    for (int i = 0; i < m; ++i) {
        Form f(m);
        for (const auto& [j, x] : Binv->r[i]) f.add(Mask(1) << j, x);
        k.coframe.push_back(f);
    }
    std::vector<Form> images;
    for (int i = 0; i < m; ++i) {
        Form f(m);
        for (const auto& [j, x] : k.K.r[i]) f.add(Mask(1) << j, x);
        images.push_back(f);
    }
    k.action = GradedOperator(m, 0);
    for (int d = 0; d <= m; ++d) k.action.blocks[d] = substitution_matrix(images, m, m, d);

    k.integrable = closed_under_bracket(g, plus_basis) && closed_under_bracket(g, minus_basis);
    k.abelian = brackets_vanish(g, plus_basis, plus_basis) && brackets_vanish(g, minus_basis, minus_basis);
    k.commuting = brackets_vanish(g, plus_basis, minus_basis);
    if (k.integrable) {
        k.s_plus = lower_central_step(g, plus_basis);
        k.s_minus = lower_central_step(g, minus_basis);
    }
    return k;
}

std::vector<int> parse_signs(std::string_view s) {
    std::vector<int> out;
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '+') {
            out.push_back(1);
        } else if (c == '-') {
            out.push_back(-1);
        } else if (static_cast<unsigned char>(c) == 0xE2 && i + 2 < s.size() &&
                   static_cast<unsigned char>(s[i + 1]) == 0x88 && static_cast<unsigned char>(s[i + 2]) == 0x92) {
            out.push_back(-1);  // U+2212 minus sign
            i += 2;
        } else if (c == ' ' || c == '(' || c == ')' || c == ',') {
            continue;
        } else {
            throw ParseError(std::string("unexpected character '") + c + "' in sign string", i);
        }
    }
    return out;
}

DComplexStructure from_signs(const LieAlgebra& g, std::string_view signs) {
    auto sg = parse_signs(signs);
    if (static_cast<int>(sg.size()) != g.dim())
        throw ValidationError("sign string has " + std::to_string(sg.size()) + " entries for an algebra of dimension " +
                              std::to_string(g.dim()));
    std::vector<SVec> plus, minus;
    for (int i = 0; i < g.dim(); ++i) (sg[i] > 0 ? plus : minus).push_back(SVec{{i, Scalar(1)}});
    return from_splitting(g, plus, minus);
}

DComplexStructure from_K_matrix(const LieAlgebra& g, const Matrix& K) {
    int m = g.dim();
    if (K.rows != m || K.cols != m) throw ValidationError("K has the wrong size");
    if (!K.is_real()) throw ValidationError("K must be real");
    if (K * K != Matrix::identity(m)) throw ValidationError("K^2 is not the identity");
    Matrix I = Matrix::identity(m);
    Subspace p = kernel(K - I), q = kernel(K + I);
    if (p.dim() != q.dim()) throw ValidationError("eigenspaces of K have different dimensions");
    return from_splitting(g, p.basis(), q.basis());
}

const DcxStage& DcxReport::at(int k) const {
    for (const auto& s : stages)
        if (s.k == k) return s;
    throw std::out_of_range("stage not computed: " + std::to_string(k));
}

DcxReport dcx_report(const DComplexStructure& K, const std::vector<int>& ks) {
    DcxReport rep;
    rep.invariant_cohomology_exact = structure_flags(K.g).completely_solvable;
    GradedOperator d = K.g.differential();
    int m = K.g.dim();
    for (int k : ks) {
        if (k < 0 || k > m) throw ValidationError("stage out of range");
        DegreeCohomology h = degree_cohomology(d, k);
        DcxStage st;
        st.k = k;
        st.b = h.dim();
        Subspace zp = intersect(K.eigen(k, 1), h.closed);
        Subspace zm = intersect(K.eigen(k, -1), h.closed);
        st.plus_classes = classes_of(h, zp);
        st.minus_classes = classes_of(h, zm);
        st.h_plus = st.plus_classes.dim();
        st.h_minus = st.minus_classes.dim();
        Subspace both = intersect(st.plus_classes, st.minus_classes);
        Subspace total = sum(st.plus_classes, st.minus_classes);
        st.pure = both.dim() == 0;
        st.full = total.dim() == h.dim();
        if (!st.pure) {
            const SVec& y = both.basis().front();
            auto a = lift_class(h, zp.basis(), y);
            auto b = lift_class(h, zm.basis(), y);
            if (!a || !b) throw std::logic_error("D-complex witness lift failed");
            st.pure_witness_plus = Form::from_svec(m, k, *a);
            st.pure_witness_minus = Form::from_svec(m, k, *b);
        }
        if (!st.full) {
            auto out = quotient_basis(Subspace::full(h.dim()), total);
            st.full_witness = h.representative(out.front());
        }
        rep.stages.push_back(std::move(st));
    }
    return rep;
}

std::pair<int, int> dcx_plus_minus(const DComplexStructure& k) {
    auto r = dcx_report(k, {2});
    return {r.stages[0].h_plus, r.stages[0].h_minus};
}

bool dkahler_check(const DComplexStructure& K, const Form& omega) {
    int m = K.g.dim();
    if (omega.ambient() != m || omega.degree() != 2 || !omega.is_real()) return false;
    if (!K.g.d(omega).is_zero()) return false;
    if (power(omega, K.n).is_zero()) return false;
    return K.action.apply(omega) == -omega;
}

namespace {

// All multisets of size r from {0..d-1}, as nondecreasing index lists.
void multisets(int d, int r, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == r) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < d; ++i) {
        cur.push_back(i);
        multisets(d, r, i, cur, out);
        cur.pop_back();
    }
}

Form wedge_all(const std::vector<Form>& fs, const std::vector<int>& idx, int m) {
    Form acc = Form::unit(m);
    for (int i : idx) {
        acc = wedge(acc, fs[i]);
        if (acc.is_zero()) break;
    }
    return acc;
}

}  // namespace

DKahlerSearch dkahler_search(const DComplexStructure& K, unsigned seed) {
    DKahlerSearch r;
    int m = K.g.dim(), n = K.n;
    GradedOperator d = K.g.differential();
    DegreeCohomology h2 = degree_cohomology(d, 2);
    Subspace z = intersect(K.eigen(2, -1), h2.closed);
    r.closed_anti_invariant_dim = z.dim();
    std::vector<Form> zb;
    for (const auto& v : z.basis()) zb.push_back(Form::from_svec(m, 2, v));

    // n-th power is a polynomial on z; it vanishes identically iff every
    // product of n basis elements (with repetition) vanishes.
    std::vector<std::vector<int>> ms;
    std::vector<int> cur;
    multisets(z.dim(), n, 0, cur, ms);
    bool nonzero_poly = false;
    for (const auto& mi : ms)
        if (!wedge_all(zb, mi, m).is_zero()) {
            nonzero_poly = true;
            break;
        }
    if (nonzero_poly) {
        std::mt19937 rng(seed);
        int range = 4 * n + 4;
        std::uniform_int_distribution<int> dist(-range, range);
        for (int attempt = 0; attempt < 2000 && !r.witness; ++attempt) {
            Form w(m);
            for (const auto& f : zb) w += Scalar(dist(rng)) * f;
            if (!w.is_zero() && !power(w, n).is_zero()) r.witness = w;
        }
        r.exists = r.witness.has_value();
        if (!r.exists) throw std::logic_error("nondegenerate anti-invariant form not found by sampling");
    }

    DegreeCohomology htop = degree_cohomology(d, m);
    Subspace zm_classes = classes_of(h2, z);
    std::vector<Form> cls;
    for (const auto& y : zm_classes.basis()) {
        auto v = lift_class(h2, z.basis(), y);
        cls.push_back(Form::from_svec(m, 2, *v));
    }
    std::vector<std::vector<int>> cms;
    multisets(static_cast<int>(cls.size()), n, 0, cur, cms);
    r.cohomological_obstruction = true;
    for (const auto& mi : cms) {
        Form p = wedge_all(cls, mi, m);
        if (p.is_zero()) continue;
        if (!htop.exact.contains(p.to_svec(m))) {
            r.cohomological_obstruction = false;
            break;
        }
    }
    return r;
}

std::vector<LemmaCheck> structural_lemmas(const DComplexStructure& K) {
    std::vector<LemmaCheck> out;
    const LieAlgebra& g = K.g;
    int m = g.dim(), n = K.n;
    StructureFlags fl = structure_flags(g);
    GradedOperator d = g.differential();

    out.push_back({"unimodular_kills_top_minus_one", fl.unimodular, m == 0 || d.block(m - 1).is_zero()});

    {
        bool concl = true;
        for (auto [p, q] : {std::pair{n, 0}, std::pair{0, n}}) {
            Subspace s = K.bigraded(p, q);
            for (const auto& v : s.basis())
                if (!d.block(n).apply(v).empty()) concl = false;
        }
        out.push_back({"abelian_unimodular_extremal_closed", fl.unimodular && K.abelian, concl});
    }

    {
        bool hyp = fl.nilpotent && K.integrable && n >= 2;
        bool concl = K.s_plus >= 1 && K.s_plus <= n - 1 && K.s_minus >= 1 && K.s_minus <= n - 1;
        out.push_back({"nilpotent_step_bounds", hyp, concl});
    }

    DcxReport r2 = dcx_report(K, {2});
    out.push_back({"abelian_pure_stage2", K.abelian, r2.at(2).pure});
    out.push_back({"four_dim_nilpotent_pure_full", fl.nilpotent && K.integrable && m == 4,
                   r2.at(2).pure && r2.at(2).full});

    {
        bool hyp = K.integrable && K.commuting;
        bool concl = true;
        if (hyp) {
            std::vector<int> all;
            for (int k = 0; k <= m; ++k) all.push_back(k);
            for (const auto& s : dcx_report(K, all).stages) concl = concl && s.pure && s.full;
        }
        out.push_back({"commuting_pure_full_all_stages", hyp, concl});
    }
    return out;
}

std::vector<DComplexStructure> random_integrable_structures(const LieAlgebra& g, int count, unsigned seed) {
    int m = g.dim();
    if (m != 4) throw ValidationError("random sampling is implemented for dimension 4");
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
    auto rnd = [&] { return Scalar::frac(num(rng), den(rng)); };
    auto random_vec = [&](int dim) {
        SVec v;
        for (int i = 0; i < dim; ++i) {
            Scalar x = rnd();
            if (!x.is_zero()) v.emplace_back(i, x);
        }
        return v;
    };
    auto random_plane = [&]() -> std::optional<std::vector<SVec>> {
        SVec v = random_vec(m);
        if (v.empty()) return std::nullopt;
        Subspace line = Subspace::span(m, {v});
        Subspace pre = preimage(g.ad(v), line);
        if (pre.dim() < 2) return std::nullopt;
        SVec w;
        for (const auto& b : pre.basis()) w = sv_axpy(w, rnd(), b);
        if (Subspace::span(m, {v, w}).dim() != 2) return std::nullopt;
        return std::vector<SVec>{v, w};
    };
    std::vector<DComplexStructure> out;
    int guard = 0;
    while (static_cast<int>(out.size()) < count) {
        if (++guard > 200 * count + 1000) throw std::runtime_error("random sampling did not produce enough structures");
        auto p = random_plane();
        auto q = random_plane();
        if (!p || !q) continue;
        std::vector<SVec> all = *p;
        all.insert(all.end(), q->begin(), q->end());
        if (Subspace::span(m, all).dim() != m) continue;
        DComplexStructure k = from_splitting(g, *p, *q);
        if (!k.integrable) continue;
        out.push_back(std::move(k));
    }
    return out;
}

}  // namespace lc
