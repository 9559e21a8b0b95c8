#include "liecohom/cohom.hpp"

#include <algorithm>

namespace lc {

const char* kind_name(CohomKind k) {
    switch (k) {
        case CohomKind::DeRham: return "deRham";
        case CohomKind::Dolbeault: return "Dolbeault";
        case CohomKind::DolbeaultConj: return "DolbeaultConj";
        case CohomKind::BottChern: return "BottChern";
        case CohomKind::Aeppli: return "Aeppli";
    }
    return "?";
}

int CohomologyTable::at(int k) const {
    auto it = by_degree.find(k);
    return it == by_degree.end() ? 0 : it->second;
}

int CohomologyTable::at(int p, int q) const {
    auto it = by_bidegree.find({p, q});
    return it == by_bidegree.end() ? 0 : it->second;
}

std::vector<SVec> quotient_basis(const Subspace& v, const Subspace& w) {
    if (!v.contains(w)) throw std::logic_error("quotient_basis: subspace not contained");
    std::vector<SVec> reduced;
    for (const auto& b : v.basis()) reduced.push_back(w.reduce(b));
    return Subspace::span(v.ambient(), reduced).basis();
}

namespace {

Subspace kernel_stack(const std::vector<const Matrix*>& ms, int cols) {
    std::vector<SVec> rows;
    for (const Matrix* m : ms) rows.insert(rows.end(), m->r.begin(), m->r.end());
    return Subspace::span(cols, rows).annihilator();
}

void require_integrable(const Bicomplex& b) {
    if (!b.structure().integrable()) throw ValidationError("complex structure is not integrable");
}

}  // namespace

Subspace closed_forms(const GradedOperator& d, int k) { return kernel(d.block(k)); }

Subspace exact_forms(const GradedOperator& d, int k) {
    if (k == 0) return Subspace(static_cast<int>(binom(d.n, 0)));
    return image(d.block(k - 1));
}

CohomologyTable derham(const LieAlgebra& g, bool with_reps) {
    CohomologyTable t;
    t.kind = CohomKind::DeRham;
    t.n = g.dim();
    GradedOperator d = g.differential();
    for (int k = 0; k <= g.dim(); ++k) {
        Subspace z = closed_forms(d, k), b = exact_forms(d, k);
        t.by_degree[k] = quotient_dim(z, b);
        if (with_reps)
            for (const auto& v : quotient_basis(z, b)) t.reps_degree[k].push_back(Form::from_svec(g.dim(), k, v));
    }
    return t;
}

std::vector<Scalar> DegreeCohomology::class_coords(const SVec& v) const {
    if (!closed.contains(v)) throw ValidationError("form is not closed");
    return quotient.coords(exact.reduce(v));
}

Form DegreeCohomology::representative(const SVec& c) const {
    SVec v;
    for (const auto& [i, x] : c) v = sv_axpy(v, x, quotient.basis().at(i));
    return Form::from_svec(ambient_dim, k, v);
}

DegreeCohomology degree_cohomology(const GradedOperator& d, int k) {
    if (k < 0 || k > d.n) throw ValidationError("degree out of range");
    DegreeCohomology h;
    h.k = k;
    h.ambient_dim = d.n;
    h.closed = closed_forms(d, k);
    h.exact = exact_forms(d, k);
    h.quotient = Subspace::span(h.closed.ambient(), quotient_basis(h.closed, h.exact));
    return h;
}

Subspace classes_of(const DegreeCohomology& h, const Subspace& part) {
    std::vector<SVec> cls;
    for (const auto& v : part.basis()) cls.push_back(h.class_vec(v));
    return Subspace::span(h.dim(), cls);
}

std::optional<SVec> lift_class(const DegreeCohomology& h, const std::vector<SVec>& gens, const SVec& y) {
    if (gens.empty()) return y.empty() ? std::optional<SVec>(SVec{}) : std::nullopt;
    Matrix m(h.dim(), static_cast<int>(gens.size()));
    for (int j = 0; j < static_cast<int>(gens.size()); ++j) {
        auto c = h.class_coords(gens[j]);
        for (int i = 0; i < h.dim(); ++i)
            if (!c[i].is_zero()) m.r[i].emplace_back(j, c[i]);
    }
    auto sol = solve(m, y);
    if (!sol) return std::nullopt;
    SVec v;
    for (const auto& [j, x] : *sol) v = sv_axpy(v, x, gens[j]);
    return v;
}

std::vector<int> betti_numbers(const LieAlgebra& g) {
    GradedOperator d = g.differential();
    std::vector<int> b;
    for (int k = 0; k <= g.dim(); ++k) {
        int ker = d.block(k).cols - rank_echelon(d.block(k));
        int im = k ? rank_echelon(d.block(k - 1)) : 0;
        b.push_back(ker - im);
    }
    return b;
}

// ---------- Bicomplex ----------

Bicomplex::Bicomplex(const ComplexStructure& c) : c_(c), s_(split_differential(c)) { ddbar_ = s_.del * s_.delbar; }

int Bicomplex::slice_dim(int p, int q) const { return static_cast<int>(bidegree_indices(c_.n, p, q).size()); }

Form Bicomplex::to_form(int p, int q, const SVec& local) const {
    const auto& idx = bidegree_indices(c_.n, p, q);
    const auto& t = basis_table(2 * c_.n);
    Form f(2 * c_.n);
    for (const auto& [i, v] : local) f.add(t.mask(p + q, idx.at(i)), v);
    return f;
}

SVec Bicomplex::to_local(int p, int q, const Form& f) const {
    const auto& t = basis_table(2 * c_.n);
    auto idx = bidegree_indices(c_.n, p, q);
    SVec out;
    for (const auto& [m, v] : f.terms()) {
        if (bidegree(m, c_.n) != Bidegree(p, q)) throw std::invalid_argument("form is not of the requested bidegree");
        int g = t.index(m);
        auto it = std::lower_bound(idx.begin(), idx.end(), g);
        out.emplace_back(static_cast<int>(it - idx.begin()), v);
    }
    std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    return out;
}

Subspace Bicomplex::ker_del(int p, int q) const { return kernel(bidegree_block(s_.del, c_.n, p, q, 1, 0)); }
Subspace Bicomplex::ker_delbar(int p, int q) const { return kernel(bidegree_block(s_.delbar, c_.n, p, q, 0, 1)); }
Subspace Bicomplex::ker_ddbar(int p, int q) const { return kernel(bidegree_block(ddbar_, c_.n, p, q, 1, 1)); }

Subspace Bicomplex::im_del(int p, int q) const {
    if (p < 1) return Subspace(slice_dim(p, q));
    return image(bidegree_block(s_.del, c_.n, p - 1, q, 1, 0));
}

Subspace Bicomplex::im_delbar(int p, int q) const {
    if (q < 1) return Subspace(slice_dim(p, q));
    return image(bidegree_block(s_.delbar, c_.n, p, q - 1, 0, 1));
}

Subspace Bicomplex::im_ddbar(int p, int q) const {
    if (p < 1 || q < 1) return Subspace(slice_dim(p, q));
    return image(bidegree_block(ddbar_, c_.n, p - 1, q - 1, 1, 1));
}

Subspace Bicomplex::im_d(int p, int q) const {
    int k = p + q;
    int local = slice_dim(p, q);
    if (k == 0) return Subspace(local);
    Subspace img = image(s_.d.block(k - 1));
    auto idx = bidegree_indices(c_.n, p, q);
    Subspace cut = intersect(img, Subspace::coordinate(img.ambient(), idx));
    std::vector<SVec> vs;
    for (const auto& v : cut.basis()) {
        SVec l;
        for (const auto& [g, x] : v) {
            auto it = std::lower_bound(idx.begin(), idx.end(), g);
            l.emplace_back(static_cast<int>(it - idx.begin()), x);
        }
        vs.push_back(l);
    }
    return Subspace::span(local, vs);
}

namespace {

template <class KerFn, class ImFn>
CohomologyTable bigraded(const Bicomplex& b, CohomKind kind, bool with_reps, KerFn ker, ImFn im) {
    require_integrable(b);
    CohomologyTable t;
    t.kind = kind;
    t.n = b.n();
    for (int p = 0; p <= b.n(); ++p)
        for (int q = 0; q <= b.n(); ++q) {
            Subspace z = ker(p, q), w = im(p, q);
            int h = quotient_dim(z, w);
            t.by_bidegree[{p, q}] = h;
            t.by_degree[p + q] += h;
            if (with_reps)
                for (const auto& v : quotient_basis(z, w)) t.reps_bidegree[{p, q}].push_back(b.to_form(p, q, v));
        }
    return t;
}

}  // namespace

CohomologyTable dolbeault(const Bicomplex& b, bool with_reps) {
    return bigraded(
        b, CohomKind::Dolbeault, with_reps, [&](int p, int q) { return b.ker_delbar(p, q); },
        [&](int p, int q) { return b.im_delbar(p, q); });
}

CohomologyTable conj_dolbeault(const Bicomplex& b, bool with_reps) {
    return bigraded(
        b, CohomKind::DolbeaultConj, with_reps, [&](int p, int q) { return b.ker_del(p, q); },
        [&](int p, int q) { return b.im_del(p, q); });
}

CohomologyTable bott_chern(const Bicomplex& b, bool with_reps) {
    int n = b.n();
    return bigraded(
        b, CohomKind::BottChern, with_reps,
        [&](int p, int q) {
            Matrix m1 = bidegree_block(b.split().del, n, p, q, 1, 0);
            Matrix m2 = bidegree_block(b.split().delbar, n, p, q, 0, 1);
            return kernel_stack({&m1, &m2}, b.slice_dim(p, q));
        },
        [&](int p, int q) { return b.im_ddbar(p, q); });
}

CohomologyTable aeppli(const Bicomplex& b, bool with_reps) {
    return bigraded(
        b, CohomKind::Aeppli, with_reps, [&](int p, int q) { return b.ker_ddbar(p, q); },
        [&](int p, int q) { return sum(b.im_del(p, q), b.im_delbar(p, q)); });
}

std::vector<int> complex_betti(const Bicomplex& b) {
    const GradedOperator& d = b.split().d;
    std::vector<int> out;
    for (int k = 0; k <= d.n; ++k) {
        int ker = d.block(k).cols - rank_echelon(d.block(k));
        int im = k ? rank_echelon(d.block(k - 1)) : 0;
        out.push_back(ker - im);
    }
    return out;
}

// ---------- Varouchas ----------

int VarouchasTable::total(const std::map<Bidegree, int>& t, int k) const {
    int s = 0;
    for (const auto& [pq, v] : t)
        if (pq.first + pq.second == k) s += v;
    return s;
}

VarouchasTable varouchas(const Bicomplex& bc) {
    require_integrable(bc);
    VarouchasTable v;
    v.n = bc.n();
    for (int p = 0; p <= v.n; ++p)
        for (int q = 0; q <= v.n; ++q) {
            Subspace imd = bc.im_del(p, q), imdb = bc.im_delbar(p, q), idd = bc.im_ddbar(p, q);
            Subspace kd = bc.ker_del(p, q), kdb = bc.ker_delbar(p, q), kdd = bc.ker_ddbar(p, q);
            Subspace kdb_imd = intersect(kdb, imd), kd_kdb = intersect(kd, kdb);
            Subspace imd_imdb = sum(imd, imdb);
            Bidegree pq{p, q};
            int a = quotient_dim(intersect(imdb, imd), idd);
            int b = quotient_dim(kdb_imd, idd);
            int c = quotient_dim(kdd, sum(kdb, imd));
            int d = quotient_dim(intersect(imdb, kd), idd);
            int e = quotient_dim(kdd, sum(kd, imdb));
            int f = quotient_dim(kdd, sum(kdb, kd));
            v.a[pq] = a, v.b[pq] = b, v.c[pq] = c, v.d[pq] = d, v.e[pq] = e, v.f[pq] = f;
            int h_dbar = quotient_dim(kdb, imdb);
            int h_a = quotient_dim(kdd, imd_imdb);
            int h_bc = quotient_dim(kd_kdb, idd);
            int r1 = sum(kdb_imd, imdb).dim() - imdb.dim();
            int r2 = sum(kdb, imd).dim() - imd_imdb.dim();
            int r3 = sum(kd_kdb, imdb).dim() - imdb.dim();
            int r4 = sum(kdb, kd).dim() - sum(kd, imdb).dim();
            std::string at = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
            if (b - r1 != a || h_dbar - r2 != r1 || h_a - r2 != c) {
                v.sequence1_exact = false;
                v.failures.push_back("sequence A->B->Hdbar->HA->C not exact at " + at);
            }
            if (h_bc - r3 != d || h_dbar - r4 != r3 || e - r4 != f) {
                v.sequence2_exact = false;
                v.failures.push_back("sequence D->HBC->Hdbar->E->F not exact at " + at);
            }
        }
    return v;
}

std::vector<std::string> varouchas_relations(const VarouchasTable& v, const CohomologyTable& bc, const CohomologyTable& ae,
                                             const CohomologyTable& dol) {
    std::vector<std::string> bad;
    int n = v.n;
    auto get = [](const std::map<Bidegree, int>& t, int p, int q) {
        auto it = t.find({p, q});
        return it == t.end() ? 0 : it->second;
    };
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) {
            std::string at = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
            if (get(v.a, p, q) != get(v.a, q, p)) bad.push_back("a symmetric at " + at);
            if (get(v.f, p, q) != get(v.f, q, p)) bad.push_back("f symmetric at " + at);
            if (get(v.d, p, q) != get(v.b, q, p)) bad.push_back("d = b transposed at " + at);
            if (get(v.e, p, q) != get(v.c, q, p)) bad.push_back("e = c transposed at " + at);
            if (get(v.c, p, q) != get(v.d, p, q + 1)) bad.push_back("c = d shifted at " + at);
            if (get(v.e, p, q) != get(v.b, p + 1, q)) bad.push_back("e = b shifted at " + at);
            if (get(v.a, p, q) != get(v.f, n - q, n - p)) bad.push_back("a and f duality at " + at);
        }
    for (int k = 0; k <= 2 * n; ++k)
        if (bc.at(k) + ae.at(k) != 2 * dol.at(k) + v.total(v.a, k) + v.total(v.f, k))
            bad.push_back("h_BC + h_A = 2 h_dbar + a + f fails in degree " + std::to_string(k));
    return bad;
}

// ---------- Frolicher-type inequalities ----------

bool FrolicherReport::all_nonnegative() const {
    for (const auto& d : degrees)
        if (d.slack_frolicher() < 0 || d.slack_bc() < 0) return false;
    for (const auto& kv : bidegree_slack)
        if (kv.second < 0) return false;
    return true;
}

FrolicherReport frolicher_report(const Bicomplex& b) {
    CohomologyTable dol = dolbeault(b), del = conj_dolbeault(b), bc = bott_chern(b), ae = aeppli(b);
    std::vector<int> betti = complex_betti(b);
    FrolicherReport r;
    for (int k = 0; k <= 2 * b.n(); ++k) r.degrees.push_back({k, dol.at(k), betti[k], bc.at(k) + ae.at(k)});
    for (int p = 0; p <= b.n(); ++p)
        for (int q = 0; q <= b.n(); ++q)
            r.bidegree_slack[{p, q}] = bc.at(p, q) + ae.at(p, q) - dol.at(p, q) - del.at(p, q);
    return r;
}

DelDelbarReport deldelbar_lemma(const Bicomplex& b) {
    CohomologyTable dol = dolbeault(b), bc = bott_chern(b), ae = aeppli(b);
    std::vector<int> betti = complex_betti(b);
    DelDelbarReport r;
    for (int k = 0; k <= 2 * b.n(); ++k) {
        if (bc.at(k) + ae.at(k) != 2 * betti[k] && r.dimension_test) {
            r.dimension_test = false;
            r.first_failure = k;
            r.first_failure_lhs = bc.at(k) + ae.at(k);
            r.first_failure_rhs = 2 * betti[k];
        }
        if (dol.at(k) != betti[k]) r.e1_degeneration = false;
    }
    int n = b.n();
    for (int p = 0; p <= n && r.direct_test; ++p)
        for (int q = 0; q <= n && r.direct_test; ++q) {
            Matrix m1 = bidegree_block(b.split().del, n, p, q, 1, 0);
            Matrix m2 = bidegree_block(b.split().delbar, n, p, q, 0, 1);
            Subspace lhs = intersect(kernel_stack({&m1, &m2}, b.slice_dim(p, q)), b.im_d(p, q));
            if (lhs != b.im_ddbar(p, q)) r.direct_test = false;
        }
    return r;
}

// ---------- Massey triple products ----------

bool massey_defined(const LieAlgebra& g, const Form& a, const Form& b, const Form& c) {
    int da = a.degree(), db = b.degree(), dc = c.degree();
    if (da < 1 || db < 1 || dc < 1) return false;
    if (!g.d(a).is_zero() || !g.d(b).is_zero() || !g.d(c).is_zero()) return false;
    GradedOperator d = g.differential();
    Form ab = wedge(a, b), bc = wedge(b, c);
    return exact_forms(d, da + db).contains(ab.to_svec(da + db)) && exact_forms(d, db + dc).contains(bc.to_svec(db + dc));
}

MasseyResult massey_triple(const LieAlgebra& g, const Form& a, const Form& b, const Form& c) {
    int da = a.degree(), db = b.degree(), dc = c.degree();
    if (da < 1 || db < 1 || dc < 1) throw ValidationError("Massey product needs homogeneous forms of positive degree");
    if (!g.d(a).is_zero() || !g.d(b).is_zero() || !g.d(c).is_zero()) throw ValidationError("Massey product needs closed forms");
    GradedOperator d = g.differential();
    int m = g.dim();
    auto sgn = [](int k) { return k % 2 ? Scalar(-1) : Scalar(1); };
    Form rhs_x = sgn(da) * wedge(a, b);
    Form rhs_y = sgn(db) * wedge(b, c);
    auto x = solve(d.block(da + db - 1), rhs_x.to_svec(da + db));
    auto y = solve(d.block(db + dc - 1), rhs_y.to_svec(db + dc));
    if (!x || !y) throw ValidationError("Massey product undefined: a^b or b^c is not exact");
    Form X = Form::from_svec(m, da + db - 1, *x);
    Form Y = Form::from_svec(m, db + dc - 1, *y);
    MasseyResult res;
    res.degree = da + db + dc - 1;
    res.representative = sgn(da) * wedge(a, Y) + sgn(da + db - 1) * wedge(X, c);
    if (!g.d(res.representative).is_zero()) throw std::logic_error("Massey representative is not closed");
    std::vector<SVec> ind = exact_forms(d, res.degree).basis();
    Subspace zbc = closed_forms(d, db + dc - 1), zab = closed_forms(d, da + db - 1);
    for (const auto& z : zbc.basis())
        ind.push_back(wedge(a, Form::from_svec(m, db + dc - 1, z)).to_svec(res.degree));
    for (const auto& z : zab.basis())
        ind.push_back(wedge(Form::from_svec(m, da + db - 1, z), c).to_svec(res.degree));
    Subspace indet = Subspace::span(static_cast<int>(binom(m, res.degree)), ind);
    res.vanishes = indet.contains(res.representative.to_svec(res.degree));
    return res;
}

}  // namespace lc
