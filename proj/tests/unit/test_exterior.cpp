#include "liecohom/cplx.hpp"

#include <doctest.h>

#include <random>

using namespace lc;

namespace {

Form f(const char* text, int dim) { return parse_form(text, dim); }

Form random_form(std::mt19937& rng, int n, int k) {
    std::uniform_int_distribution<int> val(-3, 3), coin(0, 2);
    Form a(n);
    for (Mask m : basis_table(n).masks(k))
        if (coin(rng) == 0) a.add(m, Scalar(val(rng)));
    return a;
}

}  // namespace

TEST_CASE("wedge examples") {
    auto e1 = Form::basis1(4, 1), e2 = Form::basis1(4, 2), e3 = Form::basis1(4, 3), e4 = Form::basis1(4, 4);
    CHECK(wedge(e1, e2) == f("12", 4));
    CHECK(wedge(e2, e1) == -f("12", 4));
    CHECK(wedge(e1, e1).is_zero());
    CHECK(wedge(e1 + e2, e3 + e4) == f("13+14+23+24", 4));
    CHECK(wedge_sign(mask_of({2}), mask_of({1})) == -1);
    CHECK(wedge_sign(mask_of({1, 2}), mask_of({2})) == 0);
}

TEST_CASE("wedge graded commutativity and associativity") {
    std::mt19937 rng(3);
    for (int n = 2; n <= 8; ++n)
        for (int trial = 0; trial < 6; ++trial) {
            int p = trial % 3 + 1, q = (trial + 1) % 3 + 1;
            auto a = random_form(rng, n, std::min(p, n)), b = random_form(rng, n, std::min(q, n));
            int sign = (a.degree() * b.degree()) % 2 ? -1 : 1;
            if (a.is_zero() || b.is_zero()) continue;
            CHECK(wedge(a, b) == Scalar(sign) * wedge(b, a));
            auto c = random_form(rng, n, 1);
            CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
        }
}

TEST_CASE("interior product by a bivector") {
    auto xi = f("12", 3);
    CHECK(interior(xi, f("12", 3)) == Form::unit(3));
    CHECK(interior(xi, f("13", 3)).is_zero());
    // iota_{e1∧e2} = iota_{e2} ∘ iota_{e1}: e123 -> e23 -> e3
    CHECK(interior(xi, f("123", 3)) == Form::basis1(3, 3));
    CHECK(interior(xi, Form::basis1(3, 1)).is_zero());
    CHECK(interior_vector(2, f("123", 3)) == -f("13", 3));
    std::mt19937 rng(9);
    auto a = random_form(rng, 5, 3), b = random_form(rng, 5, 3);
    auto x = f("12+1/2*34", 5), y = f("25-45", 5);
    CHECK(interior(x + y, a + b) == interior(x, a) + interior(x, b) + interior(y, a) + interior(y, b));
}

TEST_CASE("conjugate_form") {
    auto perm = conjugation_pairing(2);  // (phi1, phi2, conj phi1, conj phi2)
    auto a = Form::basis1(4, 1, Scalar::i());
    CHECK(conjugate_form(a, perm) == Form::basis1(4, 3, -Scalar::i()));
    auto b = f("14", 4);  // phi^1 ∧ conj phi^2
    CHECK(conjugate_form(b, perm) == -f("23", 4));
    std::mt19937 rng(1);
    for (int trial = 0; trial < 10; ++trial) {
        auto x = random_form(rng, 4, 2) + Scalar::i() * random_form(rng, 4, 1);
        auto y = random_form(rng, 4, 2);
        CHECK(conjugate_form(conjugate_form(x, perm), perm) == x);
        CHECK(conjugate_form(wedge(x, y), perm) == wedge(conjugate_form(x, perm), conjugate_form(y, perm)));
    }
    CHECK_THROWS(conjugate_form(b, {1, 2, 3, 0}));
}

TEST_CASE("realify") {
    auto perm = conjugation_pairing(2);
    int k = 2;
    const auto& bt = basis_table(4);
    auto idx = [&](std::initializer_list<int> i) { return bt.index(mask_of(i)); };
    auto one = Subspace::coordinate(6, {idx({1, 3})});  // phi^{1 1b}
    auto r = realify(one, 4, k, perm);
    REQUIRE(r.dim() == 1);
    CHECK(Subspace::span(6, r.basis) == Subspace::span(6, {SVec{{idx({1, 3}), Scalar::i()}}}));
    auto two = Subspace::coordinate(6, {idx({1, 2}), idx({3, 4})});
    auto r2 = realify(two, 4, k, perm);
    CHECK(r2.dim() == 2);
    for (const auto& v : r2.basis) CHECK(conjugate_slice(v, 4, k, perm) == v);
    auto v = r2.embed({Scalar(2), Scalar(-3)});
    auto c = r2.coords(v);
    CHECK(c[0] == Scalar(2));
    CHECK(c[1] == Scalar(-3));
    CHECK_THROWS(realify(Subspace::coordinate(6, {idx({1, 2})}), 4, k, perm));
}

TEST_CASE("realified differential commutes with the embedding on the Iwasawa complex") {
    auto g = parse_complex_coframe("complex 3\nd f3 = -f1f2");
    auto perm = conjugation_pairing(3);
    auto d = g.differential();
    for (int k = 1; k <= 4; ++k) {
        auto src = realify(Subspace::full(static_cast<int>(binom(6, k))), 6, k, perm);
        CHECK(src.dim() == binom(6, k));
        auto dst = realify(Subspace::full(static_cast<int>(binom(6, k + 1))), 6, k + 1, perm);
        for (const auto& v : src.basis) {
            auto dv = d.block(k).apply(v);
            CHECK(conjugate_slice(dv, 6, k + 1, perm) == dv);
            CHECK_NOTHROW(dst.coords(dv));
        }
    }
}

TEST_CASE("graded operators") {
    auto g = parse_salamon("(0,0,12)");
    auto d = g.differential();
    CHECK((d * d).is_zero());
    auto L = wedge_operator(Form::basis1(3, 1));
    // [d, e^1 ∧ .] = d(e^1) ∧ . = 0 for a closed 1-form
    CHECK(graded_commutator(d, L).is_zero());
    CHECK(d.adjoint().adjoint() == d);
}
