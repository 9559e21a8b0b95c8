#include "liecohom/exterior.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace lc {

int popcount(Mask m) { return std::popcount(m); }

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<int> mask_indices(Mask m) {
    std::vector<int> out;
    for (int i = 0; m; ++i, m >>= 1)
        if (m & 1u) out.push_back(i + 1);
    return out;
}

Mask mask_of(const std::vector<int>& idx) {
    Mask m = 0;
    for (int i : idx) {
        if (i < 1 || i > 32) throw std::out_of_range("index out of range");
        Mask b = Mask(1) << (i - 1);
        if (m & b) throw std::invalid_argument("repeated index");
        m |= b;
    }
    return m;
}

bool MonoLess::operator()(Mask a, Mask b) const {
    int da = std::popcount(a), db = std::popcount(b);
    if (da != db) return da < db;
    Mask x = a ^ b;
    if (!x) return false;
    return (a & (x & (~x + 1))) != 0;
}

int wedge_sign(Mask a, Mask b) {
    if (a & b) return 0;
    int swaps = 0;
    for (Mask bb = b; bb; bb &= bb - 1) {
        Mask low = bb & (~bb + 1);
        // indices of a strictly above this bit of b
        swaps += std::popcount(a & ~((low << 1) - 1));
    }
    return swaps % 2 ? -1 : 1;
}

BasisTable::BasisTable(int n) : n_(n), by_deg_(n + 1), index_(std::size_t(1) << n, -1) {
    if (n < 0 || n > 20) throw std::out_of_range("unsupported ambient dimension");
    for (Mask m = 0; m < (Mask(1) << n); ++m) by_deg_[std::popcount(m)].push_back(m);
    for (auto& v : by_deg_) {
        std::sort(v.begin(), v.end(), MonoLess());
        for (int i = 0; i < static_cast<int>(v.size()); ++i) index_[v[i]] = i;
    }
}

int BasisTable::size(int k) const {
    if (k < 0 || k > n_) return 0;
    return static_cast<int>(by_deg_[k].size());
}

const BasisTable& basis_table(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<BasisTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& p = cache[n];
    if (!p) p = std::make_unique<BasisTable>(n);
    return *p;
}

// ---------- Form ----------

Form Form::unit(int n) { return mono(n, 0); }

Form Form::mono(int n, Mask m, const Scalar& c) {
    if (n < 32 && (m >> n)) throw std::out_of_range("monomial exceeds ambient dimension");
    Form f(n);
    f.add(m, c);
    return f;
}

Form Form::basis1(int n, int i, const Scalar& c) {
    if (i < 1 || i > n) throw std::out_of_range("basis index out of range");
    return mono(n, Mask(1) << (i - 1), c);
}

Form Form::from_svec(int n, int k, const SVec& v) {
    const auto& t = basis_table(n);
    Form f(n);
    for (const auto& [idx, c] : v) f.add(t.mask(k, idx), c);
    return f;
}

bool Form::is_real() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.is_real(); });
}

int Form::degree() const {
    if (terms_.empty()) return -1;
    int d = std::popcount(terms_.begin()->first);
    for (const auto& kv : terms_)
        if (std::popcount(kv.first) != d) return -1;
    return d;
}

Scalar Form::coeff(Mask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
}

void Form::add(Mask m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Form Form::component(int k) const {
    Form f(n_);
    for (const auto& [m, c] : terms_)
        if (std::popcount(m) == k) f.terms_.emplace(m, c);
    return f;
}

SVec Form::to_svec(int k) const {
    const auto& t = basis_table(n_);
    SVec v;
    for (const auto& [m, c] : terms_)
        if (std::popcount(m) == k) v.emplace_back(t.index(m), c);
    std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    return v;
}

Form& Form::operator+=(const Form& o) {
    if (o.n_ != n_) throw std::invalid_argument("ambient mismatch");
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

Form& Form::operator-=(const Form& o) {
    if (o.n_ != n_) throw std::invalid_argument("ambient mismatch");
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

Form Form::operator-() const {
    Form f(n_);
    for (const auto& [m, c] : terms_) f.terms_.emplace(m, -c);
    return f;
}

Form operator*(const Scalar& s, const Form& a) {
    Form f(a.n_);
    if (s.is_zero()) return f;
    for (const auto& [m, c] : a.terms_) f.terms_.emplace(m, s * c);
    return f;
}

std::string Form::str(const std::vector<std::string>& labels) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        std::string mono;
        auto idx = mask_indices(m);
        if (!labels.empty()) {
            for (int i : idx) mono += labels.at(i - 1);
        } else if (!idx.empty()) {
            mono = "e";
            for (size_t k = 0; k < idx.size(); ++k) {
                if (n_ > 9 && k) mono += ".";
                mono += std::to_string(idx[k]);
            }
        }
        std::string cs = c.str();
        bool compound = !c.is_real() && sgn(c.re()) != 0;
        if (compound) cs = "(" + cs + ")";
        bool neg = !compound && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (out.empty()) out = neg ? "-" : "";
        else out += neg ? " - " : " + ";
        if (mono.empty()) out += cs;
        else if (cs == "1") out += mono;
        else out += cs + "*" + mono;
    }
    return out;
}

Form wedge(const Form& a, const Form& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient mismatch in wedge");
    Form f(a.ambient());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            int s = wedge_sign(ma, mb);
            if (s) f.add(ma | mb, s > 0 ? ca * cb : -(ca * cb));
        }
    return f;
}

Form power(const Form& a, int k) {
    Form r = Form::unit(a.ambient());
    for (int i = 0; i < k; ++i) r = wedge(r, a);
    return r;
}

Form interior_vector(int i, const Form& a) {
    Form f(a.ambient());
    Mask b = Mask(1) << (i - 1);
    for (const auto& [m, c] : a.terms()) {
        if (!(m & b)) continue;
        int below = std::popcount(m & (b - 1));
        f.add(m & ~b, below % 2 ? -c : c);
    }
    return f;
}

Form interior(const Form& bivector, const Form& a) {
    if (bivector.ambient() != a.ambient()) throw std::invalid_argument("ambient mismatch in interior");
    Form f(a.ambient());
    for (const auto& [m, c] : bivector.terms()) {
        if (std::popcount(m) != 2) throw std::invalid_argument("interior: bivector must have degree 2");
        auto idx = mask_indices(m);
        f += c * interior_vector(idx[1], interior_vector(idx[0], a));
    }
    return f;
}

Form conjugate_form(const Form& a, const std::vector<int>& perm) {
    int n = a.ambient();
    if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("pairing size mismatch");
    for (int i = 0; i < n; ++i)
        if (perm[i] < 0 || perm[i] >= n || perm[perm[i]] != i) throw std::invalid_argument("pairing is not an involution");
    Form f(n);
    for (const auto& [m, c] : a.terms()) {
        std::vector<int> img;
        for (int i : mask_indices(m)) img.push_back(perm[i - 1]);
        int inv = 0;
        for (size_t x = 0; x < img.size(); ++x)
            for (size_t y = x + 1; y < img.size(); ++y)
                if (img[x] > img[y]) ++inv;
        Mask mm = 0;
        for (int j : img) mm |= Mask(1) << j;
        f.add(mm, inv % 2 ? -c.conj() : c.conj());
    }
    return f;
}

Form substitute(const Form& a, const std::vector<Form>& images, int target_dim) {
    if (static_cast<int>(images.size()) != a.ambient()) throw std::invalid_argument("substitute: wrong number of images");
    Form f(target_dim);
    for (const auto& [m, c] : a.terms()) {
        Form t = Form::unit(target_dim);
        for (int i : mask_indices(m)) {
            t = wedge(t, images[i - 1]);
            if (t.is_zero()) break;
        }
        f += c * t;
    }
    return f;
}

Matrix substitution_matrix(const std::vector<Form>& images, int source_dim, int target_dim, int k) {
    const auto& ts = basis_table(source_dim);
    Matrix m(static_cast<int>(binom(target_dim, k)), ts.size(k));
    for (int c = 0; c < ts.size(k); ++c) {
        Form img = substitute(Form::mono(source_dim, ts.mask(k, c)), images, target_dim);
        for (const auto& [idx, v] : img.to_svec(k)) m.r[idx].emplace_back(c, v);
    }
    return m;
}

// ---------- GradedOperator ----------

GradedOperator::GradedOperator(int n_, int shift_) : n(n_), shift(shift_) {
    for (int k = 0; k <= n; ++k) blocks.emplace_back(static_cast<int>(binom(n, k + shift)), static_cast<int>(binom(n, k)));
}

GradedOperator GradedOperator::identity(int n) {
    GradedOperator op(n, 0);
    for (int k = 0; k <= n; ++k) op.blocks[k] = Matrix::identity(static_cast<int>(binom(n, k)));
    return op;
}

GradedOperator GradedOperator::degree_scaled(int n, const std::vector<Scalar>& per_degree) {
    GradedOperator op(n, 0);
    for (int k = 0; k <= n; ++k) op.blocks[k] = per_degree.at(k) * Matrix::identity(static_cast<int>(binom(n, k)));
    return op;
}

Form GradedOperator::apply(const Form& a) const {
    if (a.ambient() != n) throw std::invalid_argument("ambient mismatch in operator application");
    Form out(n);
    for (int k = 0; k <= n; ++k) {
        if (!target_ok(k)) continue;
        SVec v = a.to_svec(k);
        if (v.empty()) continue;
        out += Form::from_svec(n, k + shift, blocks[k].apply(v));
    }
    return out;
}

GradedOperator GradedOperator::adjoint() const {
    GradedOperator op(n, -shift);
    for (int j = 0; j <= n; ++j)
        if (op.target_ok(j)) op.blocks[j] = blocks[j - shift].adjoint();
    return op;
}

bool GradedOperator::is_zero() const {
    return std::all_of(blocks.begin(), blocks.end(), [](const Matrix& m) { return m.is_zero(); });
}

bool GradedOperator::is_real() const {
    return std::all_of(blocks.begin(), blocks.end(), [](const Matrix& m) { return m.is_real(); });
}

bool operator==(const GradedOperator& a, const GradedOperator& b) {
    if (a.n != b.n) return false;
    if (a.shift != b.shift) return a.is_zero() && b.is_zero();
    return a.blocks == b.blocks;
}

GradedOperator operator*(const GradedOperator& a, const GradedOperator& b) {
    if (a.n != b.n) throw std::invalid_argument("ambient mismatch in composition");
    GradedOperator op(a.n, a.shift + b.shift);
    for (int k = 0; k <= a.n; ++k) {
        if (!op.target_ok(k) || !b.target_ok(k)) continue;
        op.blocks[k] = a.blocks[k + b.shift] * b.blocks[k];
    }
    return op;
}

GradedOperator operator+(const GradedOperator& a, const GradedOperator& b) {
    if (a.n != b.n || a.shift != b.shift) throw std::invalid_argument("operator sum mismatch");
    GradedOperator op(a.n, a.shift);
    for (int k = 0; k <= a.n; ++k) op.blocks[k] = a.blocks[k] + b.blocks[k];
    return op;
}

GradedOperator operator-(const GradedOperator& a, const GradedOperator& b) {
    if (a.n != b.n || a.shift != b.shift) throw std::invalid_argument("operator difference mismatch");
    GradedOperator op(a.n, a.shift);
    for (int k = 0; k <= a.n; ++k) op.blocks[k] = a.blocks[k] - b.blocks[k];
    return op;
}

GradedOperator operator*(const Scalar& s, const GradedOperator& a) {
    GradedOperator op(a.n, a.shift);
    for (int k = 0; k <= a.n; ++k) op.blocks[k] = s * a.blocks[k];
    return op;
}

GradedOperator graded_commutator(const GradedOperator& a, const GradedOperator& b) {
    bool odd = (a.shift % 2 != 0) && (b.shift % 2 != 0);
    return odd ? a * b + b * a : a * b - b * a;
}

GradedOperator wedge_operator(const Form& w) {
    int k = w.degree();
    if (k < 0) {
        if (w.is_zero()) return GradedOperator(w.ambient(), 0);
        throw std::invalid_argument("wedge_operator needs a homogeneous form");
    }
    return operator_from_rule(w.ambient(), k, [&](Mask m) { return wedge(w, Form::mono(w.ambient(), m)); });
}

}  // namespace lc

namespace lc {

SVec conjugate_slice(const SVec& v, int generators, int k, const std::vector<int>& perm) {
    return conjugate_form(Form::from_svec(generators, k, v), perm).to_svec(k);
}

Realification realify(const Subspace& v, int generators, int k, const std::vector<int>& perm) {
    Realification r;
    r.generators = generators;
    r.k = k;
    std::vector<SVec> conj_basis;
    for (const auto& b : v.basis()) conj_basis.push_back(conjugate_slice(b, generators, k, perm));
    if (Subspace::span(v.ambient(), conj_basis) != v) throw std::invalid_argument("realify: subspace is not conjugation-stable");
    Echelon ech(v.ambient());
    for (size_t j = 0; j < v.basis().size() && ech.dim() < v.dim(); ++j) {
        const SVec& b = v.basis()[j];
        const SVec& cb = conj_basis[j];
        SVec re = sv_add(b, cb);
        SVec im = sv_scale(sv_axpy(b, Scalar(-1), cb), Scalar::i());
        for (const SVec* c : {&re, &im})
            if (!c->empty() && ech.insert(*c)) r.basis.push_back(*c);
    }
    return r;
}

SVec Realification::embed(const std::vector<Scalar>& real_coords) const {
    if (real_coords.size() != basis.size()) throw std::invalid_argument("realify: wrong number of coordinates");
    SVec out;
    for (size_t j = 0; j < basis.size(); ++j) {
        if (!real_coords[j].is_real()) throw std::invalid_argument("realify: coordinates must be rational");
        out = sv_axpy(out, real_coords[j], basis[j]);
    }
    return out;
}

std::vector<Scalar> Realification::coords(const SVec& v) const {
    Matrix m(static_cast<int>(binom(generators, k)), dim());
    for (int j = 0; j < dim(); ++j)
        for (const auto& [i, c] : basis[j]) m.set(i, j, c);
    auto x = solve(m, v);
    if (!x) throw std::invalid_argument("realify: vector outside the subspace");
    auto d = sv_to_dense(*x, dim());
    for (const auto& c : d)
        if (!c.is_real()) throw std::invalid_argument("realify: vector is not fixed by conjugation");
    return d;
}

}  // namespace lc
