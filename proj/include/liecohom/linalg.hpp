#pragma once

#include "liecohom/scalar.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace lc {

// Sparse vector: strictly increasing indices, no stored zeros.
using Entry = std::pair<int, Scalar>;
using SVec = std::vector<Entry>;

Scalar sv_get(const SVec& v, int idx);
SVec sv_add(const SVec& a, const SVec& b);
SVec sv_axpy(const SVec& y, const Scalar& a, const SVec& x);  // y + a x
SVec sv_scale(const SVec& v, const Scalar& a);
SVec sv_conj(const SVec& v);
Scalar sv_dot(const SVec& a, const SVec& b);  // bilinear, no conjugation
SVec sv_from_dense(const std::vector<Scalar>& d);
std::vector<Scalar> sv_to_dense(const SVec& v, int n);
bool sv_is_real(const SVec& v);

// Sparse row-major matrix acting on column vectors.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<SVec> r;

    Matrix() = default;
    Matrix(int m, int n) : rows(m), cols(n), r(m) {}
    static Matrix identity(int n);
    static Matrix from_dense(const std::vector<std::vector<Scalar>>& d);

    Scalar at(int i, int j) const { return sv_get(r[i], j); }
    void set(int i, int j, const Scalar& v);
    bool is_zero() const;
    bool is_real() const;
    size_t nnz() const;

    SVec apply(const SVec& x) const;
    Matrix transpose() const;
    Matrix adjoint() const;  // conjugate transpose
    Matrix conj() const;
    Matrix submatrix(const std::vector<int>& rows_idx, const std::vector<int>& cols_idx) const;
    std::vector<SVec> columns() const;
    std::vector<std::vector<Scalar>> dense() const;

    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& s, const Matrix& a);

// Reduced row-echelon basis accumulated one vector at a time.
class Echelon {
public:
    explicit Echelon(int ambient) : n_(ambient) {}
    // Returns true when v enlarged the span.
    bool insert(const SVec& v);
    SVec reduce(const SVec& v) const;
    int dim() const { return static_cast<int>(rows_.size()); }
    int ambient() const { return n_; }
    std::vector<SVec> basis() const;  // sorted by pivot
    std::vector<int> pivots() const;

private:
    int n_;
    std::vector<SVec> rows_;    // unsorted; each normalized at its pivot
    std::vector<int> pivot_of_;  // column -> row index or -1 (lazy sized)
    std::vector<int> piv_;
};

// Linear subspace of Q^n or Q(i)^n stored in canonical reduced echelon form.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(int ambient) : n_(ambient) {}
    static Subspace span(int ambient, const std::vector<SVec>& vecs);
    static Subspace full(int ambient);
    static Subspace coordinate(int ambient, const std::vector<int>& idx);

    int ambient() const { return n_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<SVec>& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(const SVec& x) const;
    bool contains(const Subspace& w) const;
    SVec reduce(const SVec& x) const;  // canonical coset representative
    // Coordinates of x in the echelon basis; x must lie in the span.
    std::vector<Scalar> coords(const SVec& x) const;
    Subspace annihilator() const;  // {y : y . b = 0 for all b}
    Subspace conj() const;
    bool is_real() const;

    friend bool operator==(const Subspace& a, const Subspace& b);
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    int n_ = 0;
    std::vector<SVec> basis_;
    std::vector<int> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
int quotient_dim(const Subspace& v, const Subspace& w);  // throws unless w is inside v
Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);
Subspace image(const Matrix& m, const Subspace& src);
Subspace preimage(const Matrix& m, const Subspace& w);

// Rank via fraction-free (Bareiss) elimination on a dense copy.
int rank(const Matrix& m);
// Rank via the sparse echelon engine; used as an independent check.
int rank_echelon(const Matrix& m);
Scalar determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
// Some x with m x = y (free variables set to zero), if one exists.
std::optional<SVec> solve(const Matrix& m, const SVec& y);

}  // namespace lc
