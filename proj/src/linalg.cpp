#include "liecohom/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace lc {

// ---------- sparse vectors ----------

Scalar sv_get(const SVec& v, int idx) {
    auto it = std::lower_bound(v.begin(), v.end(), idx, [](const Entry& e, int k) { return e.first < k; });
    if (it != v.end() && it->first == idx) return it->second;
    return Scalar();
}

SVec sv_axpy(const SVec& y, const Scalar& a, const SVec& x) {
    if (a.is_zero() || x.empty()) return y;
    SVec out;
    out.reserve(y.size() + x.size());
    size_t i = 0, j = 0;
    while (i < y.size() || j < x.size()) {
        if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
            out.push_back(y[i++]);
        } else if (i == y.size() || x[j].first < y[i].first) {
            out.emplace_back(x[j].first, a * x[j].second);
            ++j;
        } else {
            Scalar s = y[i].second + a * x[j].second;
            if (!s.is_zero()) out.emplace_back(y[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    return out;
}

SVec sv_add(const SVec& a, const SVec& b) { return sv_axpy(a, Scalar(1), b); }

SVec sv_scale(const SVec& v, const Scalar& a) {
    if (a.is_zero()) return {};
    SVec out;
    out.reserve(v.size());
    for (const auto& [k, x] : v) out.emplace_back(k, x * a);
    return out;
}

SVec sv_conj(const SVec& v) {
    SVec out;
    out.reserve(v.size());
    for (const auto& [k, x] : v) out.emplace_back(k, x.conj());
    return out;
}

Scalar sv_dot(const SVec& a, const SVec& b) {
    Scalar s;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) ++i;
        else if (b[j].first < a[i].first) ++j;
        else s += a[i++].second * b[j++].second;
    }
    return s;
}

SVec sv_from_dense(const std::vector<Scalar>& d) {
    SVec out;
    for (int k = 0; k < static_cast<int>(d.size()); ++k)
        if (!d[k].is_zero()) out.emplace_back(k, d[k]);
    return out;
}

std::vector<Scalar> sv_to_dense(const SVec& v, int n) {
    std::vector<Scalar> d(n);
    for (const auto& [k, x] : v) d.at(k) = x;
    return d;
}

bool sv_is_real(const SVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Entry& e) { return e.second.is_real(); });
}

// ---------- matrices ----------

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.r[i].emplace_back(i, Scalar(1));
    return m;
}

Matrix Matrix::from_dense(const std::vector<std::vector<Scalar>>& d) {
    int rows = static_cast<int>(d.size());
    int cols = rows ? static_cast<int>(d[0].size()) : 0;
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(d[i].size()) != cols) throw std::invalid_argument("ragged matrix");
        m.r[i] = sv_from_dense(d[i]);
    }
    return m;
}

void Matrix::set(int i, int j, const Scalar& v) {
    auto& row = r.at(i);
    auto it = std::lower_bound(row.begin(), row.end(), j, [](const Entry& e, int k) { return e.first < k; });
    if (it != row.end() && it->first == j) {
        if (v.is_zero()) row.erase(it);
        else it->second = v;
    } else if (!v.is_zero()) {
        row.insert(it, Entry(j, v));
    }
}

bool Matrix::is_zero() const {
    return std::all_of(r.begin(), r.end(), [](const SVec& v) { return v.empty(); });
}

bool Matrix::is_real() const {
    return std::all_of(r.begin(), r.end(), [](const SVec& v) { return sv_is_real(v); });
}

size_t Matrix::nnz() const {
    size_t n = 0;
    for (const auto& v : r) n += v.size();
    return n;
}

SVec Matrix::apply(const SVec& x) const {
    if (x.empty()) return {};
    SVec out;
    for (int i = 0; i < rows; ++i) {
        Scalar s = sv_dot(r[i], x);
        if (!s.is_zero()) out.emplace_back(i, std::move(s));
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (const auto& [j, x] : r[i]) t.r[j].emplace_back(i, x);
    return t;
}

Matrix Matrix::conj() const {
    Matrix c(rows, cols);
    for (int i = 0; i < rows; ++i) c.r[i] = sv_conj(r[i]);
    return c;
}

Matrix Matrix::adjoint() const {
    Matrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (const auto& [j, x] : r[i]) t.r[j].emplace_back(i, x.conj());
    return t;
}

Matrix Matrix::submatrix(const std::vector<int>& rows_idx, const std::vector<int>& cols_idx) const {
    std::vector<int> pos(cols, -1);
    for (int k = 0; k < static_cast<int>(cols_idx.size()); ++k) pos.at(cols_idx[k]) = k;
    Matrix s(static_cast<int>(rows_idx.size()), static_cast<int>(cols_idx.size()));
    for (int a = 0; a < s.rows; ++a) {
        for (const auto& [j, x] : r.at(rows_idx[a]))
            if (pos[j] >= 0) s.r[a].emplace_back(pos[j], x);
        std::sort(s.r[a].begin(), s.r[a].end(), [](const Entry& u, const Entry& v) { return u.first < v.first; });
    }
    return s;
}

std::vector<SVec> Matrix::columns() const { return transpose().r; }

std::vector<std::vector<Scalar>> Matrix::dense() const {
    std::vector<std::vector<Scalar>> d(rows, std::vector<Scalar>(cols));
    for (int i = 0; i < rows; ++i)
        for (const auto& [j, x] : r[i]) d[i][j] = x;
    return d;
}

bool operator==(const Matrix& a, const Matrix& b) { return a.rows == b.rows && a.cols == b.cols && a.r == b.r; }

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix product shape mismatch");
    Matrix c(a.rows, b.cols);
    std::vector<Scalar> acc(b.cols);
    std::vector<char> touched(b.cols, 0);
    std::vector<int> list;
    for (int i = 0; i < a.rows; ++i) {
        list.clear();
        for (const auto& [k, x] : a.r[i]) {
            for (const auto& [j, y] : b.r[k]) {
                if (!touched[j]) {
                    touched[j] = 1;
                    list.push_back(j);
                    acc[j] = x * y;
                } else {
                    acc[j] += x * y;
                }
            }
        }
        std::sort(list.begin(), list.end());
        for (int j : list) {
            if (!acc[j].is_zero()) c.r[i].emplace_back(j, acc[j]);
            touched[j] = 0;
        }
    }
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("matrix sum shape mismatch");
    Matrix c(a.rows, a.cols);
    for (int i = 0; i < a.rows; ++i) c.r[i] = sv_add(a.r[i], b.r[i]);
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("matrix difference shape mismatch");
    Matrix c(a.rows, a.cols);
    for (int i = 0; i < a.rows; ++i) c.r[i] = sv_axpy(a.r[i], Scalar(-1), b.r[i]);
    return c;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
    Matrix c(a.rows, a.cols);
    for (int i = 0; i < a.rows; ++i) c.r[i] = sv_scale(a.r[i], s);
    return c;
}

// ---------- echelon engine ----------

SVec Echelon::reduce(const SVec& v) const {
    SVec w = v;
    for (const auto& [c, x] : v) {
        if (c < static_cast<int>(pivot_of_.size()) && pivot_of_[c] >= 0) w = sv_axpy(w, -x, rows_[pivot_of_[c]]);
    }
    return w;
}

bool Echelon::insert(const SVec& v) {
    SVec w = reduce(v);
    if (w.empty()) return false;
    int q = w.front().first;
    Scalar inv = Scalar(1) / w.front().second;
    w = sv_scale(w, inv);
    for (auto& row : rows_) {
        Scalar x = sv_get(row, q);
        if (!x.is_zero()) row = sv_axpy(row, -x, w);
    }
    if (static_cast<int>(pivot_of_.size()) <= q) pivot_of_.resize(n_ > q ? n_ : q + 1, -1);
    pivot_of_[q] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(w));
    piv_.push_back(q);
    return true;
}

std::vector<int> Echelon::pivots() const {
    std::vector<int> p = piv_;
    std::sort(p.begin(), p.end());
    return p;
}

std::vector<SVec> Echelon::basis() const {
    std::vector<SVec> out;
    for (int p : pivots()) out.push_back(rows_[pivot_of_[p]]);
    return out;
}

// ---------- subspaces ----------

Subspace Subspace::span(int ambient, const std::vector<SVec>& vecs) {
    Echelon e(ambient);
    for (const auto& v : vecs) {
        if (!v.empty() && v.back().first >= ambient) throw std::out_of_range("vector exceeds ambient dimension");
        e.insert(v);
    }
    Subspace s(ambient);
    s.basis_ = e.basis();
    s.pivots_ = e.pivots();
    return s;
}

Subspace Subspace::full(int ambient) {
    Subspace s(ambient);
    for (int k = 0; k < ambient; ++k) {
        s.basis_.push_back({Entry(k, Scalar(1))});
        s.pivots_.push_back(k);
    }
    return s;
}

Subspace Subspace::coordinate(int ambient, const std::vector<int>& idx) {
    std::vector<SVec> vecs;
    for (int k : idx) vecs.push_back({Entry(k, Scalar(1))});
    return span(ambient, vecs);
}

SVec Subspace::reduce(const SVec& x) const {
    SVec w = x;
    for (const auto& [c, v] : x) {
        auto it = std::lower_bound(pivots_.begin(), pivots_.end(), c);
        if (it != pivots_.end() && *it == c) w = sv_axpy(w, -v, basis_[it - pivots_.begin()]);
    }
    return w;
}

bool Subspace::contains(const SVec& x) const { return reduce(x).empty(); }

bool Subspace::contains(const Subspace& w) const {
    if (w.n_ != n_) throw std::invalid_argument("ambient mismatch");
    return std::all_of(w.basis_.begin(), w.basis_.end(), [&](const SVec& b) { return contains(b); });
}

std::vector<Scalar> Subspace::coords(const SVec& x) const {
    std::vector<Scalar> c(basis_.size());
    for (size_t k = 0; k < basis_.size(); ++k) c[k] = sv_get(x, pivots_[k]);
    return c;
}

Subspace Subspace::annihilator() const {
    std::vector<char> is_piv(n_, 0);
    for (int p : pivots_) is_piv[p] = 1;
    Subspace a(n_);
    for (int f = 0; f < n_; ++f) {
        if (is_piv[f]) continue;
        SVec y;
        for (size_t k = 0; k < basis_.size(); ++k) {
            Scalar x = sv_get(basis_[k], f);
            if (!x.is_zero()) y.emplace_back(pivots_[k], -x);
        }
        y.emplace_back(f, Scalar(1));
        std::sort(y.begin(), y.end(), [](const Entry& u, const Entry& v) { return u.first < v.first; });
        a.basis_.push_back(std::move(y));
    }
    // Canonicalize: these rows are independent but not necessarily reduced.
    return span(n_, a.basis_);
}

Subspace Subspace::conj() const {
    std::vector<SVec> v;
    for (const auto& b : basis_) v.push_back(sv_conj(b));
    return span(n_, v);
}

bool Subspace::is_real() const {
    return std::all_of(basis_.begin(), basis_.end(), [](const SVec& b) { return sv_is_real(b); });
}

bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient mismatch in sum");
    std::vector<SVec> v = a.basis();
    v.insert(v.end(), b.basis().begin(), b.basis().end());
    return Subspace::span(a.ambient(), v);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient mismatch in intersect");
    std::vector<SVec> rows = a.annihilator().basis();
    Subspace ann_b = b.annihilator();
    const auto& rb = ann_b.basis();
    rows.insert(rows.end(), rb.begin(), rb.end());
    return Subspace::span(a.ambient(), rows).annihilator();
}

int quotient_dim(const Subspace& v, const Subspace& w) {
    if (!v.contains(w)) throw std::invalid_argument("quotient_dim: subspace not contained");
    return v.dim() - w.dim();
}

Subspace kernel(const Matrix& m) { return Subspace::span(m.cols, m.r).annihilator(); }

Subspace image(const Matrix& m) { return Subspace::span(m.rows, m.columns()); }

Subspace image(const Matrix& m, const Subspace& src) {
    std::vector<SVec> v;
    for (const auto& b : src.basis()) v.push_back(m.apply(b));
    return Subspace::span(m.rows, v);
}

Subspace preimage(const Matrix& m, const Subspace& w) {
    if (w.ambient() != m.rows) throw std::invalid_argument("ambient mismatch in preimage");
    std::vector<SVec> rows;
    Subspace ann = w.annihilator();
    for (const auto& a : ann.basis()) {
        SVec acc;
        for (const auto& [i, x] : a) acc = sv_axpy(acc, x, m.r[i]);
        rows.push_back(std::move(acc));
    }
    return Subspace::span(m.cols, rows).annihilator();
}

// ---------- dense fraction-free routines ----------

namespace {

// Bareiss elimination in place; returns rank and records the sign of row swaps.
int bareiss(std::vector<std::vector<Scalar>>& a, int& swaps, Scalar& last_pivot) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    Scalar prev(1);
    int r = 0;
    swaps = 0;
    last_pivot = Scalar(1);
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            ++swaps;
        }
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = Scalar();
        }
        prev = a[r][c];
        last_pivot = prev;
        ++r;
    }
    return r;
}

}  // namespace

int rank(const Matrix& m) {
    auto a = m.dense();
    int swaps;
    Scalar last;
    return bareiss(a, swaps, last);
}

int rank_echelon(const Matrix& m) { return Subspace::span(m.cols, m.r).dim(); }

Scalar determinant(const Matrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
    if (m.rows == 0) return Scalar(1);
    auto a = m.dense();
    int swaps;
    Scalar last;
    int r = bareiss(a, swaps, last);
    if (r < m.rows) return Scalar();
    return swaps % 2 ? -last : last;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("inverse of non-square matrix");
    int n = m.rows;
    Echelon e(2 * n);
    for (int i = 0; i < n; ++i) {
        SVec row = m.r[i];
        row.emplace_back(n + i, Scalar(1));
        e.insert(row);
    }
    auto piv = e.pivots();
    if (static_cast<int>(piv.size()) != n || (n > 0 && piv.back() != n - 1)) return std::nullopt;
    Matrix inv(n, n);
    auto basis = e.basis();
    for (int i = 0; i < n; ++i)
        for (const auto& [j, x] : basis[i])
            if (j >= n) inv.r[i].emplace_back(j - n, x);
    return inv;
}

std::optional<SVec> solve(const Matrix& m, const SVec& y) {
    int n = m.cols;
    Echelon e(n + 1);
    for (int i = 0; i < m.rows; ++i) {
        SVec row = m.r[i];
        Scalar yi = sv_get(y, i);
        if (!yi.is_zero()) row.emplace_back(n, yi);
        e.insert(row);
    }
    SVec x;
    auto basis = e.basis();
    auto piv = e.pivots();
    for (size_t k = 0; k < piv.size(); ++k) {
        if (piv[k] == n) return std::nullopt;
        Scalar v = sv_get(basis[k], n);
        if (!v.is_zero()) x.emplace_back(piv[k], v);
    }
    return x;
}

}  // namespace lc
