#include "liecohom/linalg.hpp"

#include <doctest.h>

#include <random>

using namespace lc;

namespace {

Matrix random_matrix(std::mt19937& rng, int m, int n, int density_pct = 60) {
    std::uniform_int_distribution<int> coin(0, 99), val(-5, 5), den(1, 4);
    Matrix a(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (coin(rng) < density_pct) a.set(i, j, Scalar::frac(val(rng), den(rng)));
    return a;
}

Subspace random_subspace(std::mt19937& rng, int ambient, int gens) {
    std::vector<SVec> v;
    auto m = random_matrix(rng, gens, ambient, 40);
    for (const auto& row : m.r) v.push_back(row);
    return Subspace::span(ambient, v);
}

}  // namespace

TEST_CASE("scalar conjugation and arithmetic") {
    auto s = Scalar::parse("1/2+3/4i");
    CHECK(s.conj() == Scalar::parse("1/2-3/4i"));
    CHECK(Scalar(5).conj() == Scalar(5));
    auto t = Scalar::parse("2/3-i");
    CHECK(conj(conj(t)) == t);
    CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
    CHECK((Scalar::frac(1, 3) / Scalar::parse("1+i")) == Scalar(mpq_class(1, 6), mpq_class(-1, 6)));
    CHECK(Scalar::parse(s.str()) == s);
    CHECK(Scalar::parse("-i") == -Scalar::i());
    CHECK(Scalar::parse("(1/2-2i)") == Scalar(mpq_class(1, 2), mpq_class(-2)));
    CHECK_THROWS(Scalar::parse("1/0"));
}

TEST_CASE("rank examples") {
    CHECK(rank(Matrix::identity(2)) == 2);
    auto S = Matrix::from_dense({{1, 0, 0, 0}, {1, 0, 0, 0}});
    CHECK(rank(S) == 1);
    CHECK(rank(Matrix(3, 5)) == 0);
    CHECK(rank_echelon(S) == 1);
}

TEST_CASE("kernel examples and rank-nullity") {
    CHECK(kernel(Matrix::identity(4)).dim() == 0);
    CHECK(kernel(Matrix(4, 4)) == Subspace::full(4));
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_matrix(rng, 6, 9);
        int r = rank(a);
        CHECK(r == rank_echelon(a));
        auto ker = kernel(a);
        CHECK(ker.dim() + r == 9);
        for (const auto& v : ker.basis()) CHECK(a.apply(v).empty());
        CHECK(image(a).dim() == r);
    }
}

TEST_CASE("Grassmann identity on random subspaces") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 8 + trial % 13;
        auto a = random_subspace(rng, n, 1 + trial % 7);
        auto b = random_subspace(rng, n, 2 + trial % 5);
        CHECK(sum(a, b).dim() + intersect(a, b).dim() == a.dim() + b.dim());
        CHECK(intersect(a, a) == a);
        CHECK(quotient_dim(a, Subspace(n)) == a.dim());
        CHECK(quotient_dim(sum(a, b), a) == sum(a, b).dim() - a.dim());
    }
}

TEST_CASE("subspace canonical form") {
    std::vector<SVec> g = {sv_from_dense({1, 2, 3}), sv_from_dense({2, 4, 7})};
    auto a = Subspace::span(3, g);
    auto b = Subspace::span(3, a.basis());
    CHECK(a == b);
    auto c = Subspace::span(3, {sv_from_dense({0, 0, 1}), sv_from_dense({1, 2, 0})});
    CHECK(a == c);
    CHECK(a.contains(sv_from_dense({3, 6, 10})));
    CHECK_FALSE(a.contains(sv_from_dense({0, 1, 0})));
    CHECK_THROWS(quotient_dim(Subspace::coordinate(3, {0}), Subspace::coordinate(3, {1})));
}

TEST_CASE("preimage, solve and inverse") {
    auto m = Matrix::from_dense({{1, 1, 0}, {0, 1, 1}});
    auto w = Subspace::coordinate(2, {0});
    auto pre = preimage(m, w);
    CHECK(pre.dim() == 2);
    for (const auto& v : pre.basis()) CHECK(w.contains(m.apply(v)));
    auto x = solve(m, sv_from_dense({2, 3}));
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == sv_from_dense({2, 3}));
    auto a = Matrix::from_dense({{2, 1}, {1, 1}});
    auto inv = inverse(a);
    REQUIRE(inv.has_value());
    CHECK(a * *inv == Matrix::identity(2));
    CHECK(determinant(a) == Scalar(1));
    CHECK_FALSE(inverse(Matrix::from_dense({{1, 2}, {2, 4}})).has_value());
}

TEST_CASE("exact arithmetic through a long elimination chain") {
    // Hilbert-type matrices stay nonsingular only if no rounding happens.
    const int n = 12;
    std::vector<std::vector<Scalar>> h(n, std::vector<Scalar>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h[i][j] = Scalar::frac(1, i + j + 1);
    auto hm = Matrix::from_dense(h);
    CHECK(rank(hm) == n);
    auto inv = inverse(hm);
    REQUIRE(inv.has_value());
    CHECK(hm * *inv == Matrix::identity(n));
    Scalar acc(1);
    for (int k = 1; k <= 50; ++k) acc = acc * Scalar::frac(k + 1, k) - Scalar::frac(1, k * (k + 1));
    Scalar back = acc;
    for (int k = 50; k >= 1; --k) back = (back + Scalar::frac(1, k * (k + 1))) / Scalar::frac(k + 1, k);
    CHECK(back == Scalar(1));
}

TEST_CASE("gaussian subspaces and conjugation") {
    auto v = Subspace::span(2, {SVec{{0, Scalar(1)}, {1, Scalar::i()}}});
    CHECK_FALSE(v.is_real());
    CHECK(intersect(v, v.conj()).dim() == 0);
    CHECK(sum(v, v.conj()) == Subspace::full(2));
    CHECK(v.annihilator().dim() == 1);
}
