#include "liecohom/catalog.hpp"
#include "liecohom/cohom.hpp"

#include <doctest.h>

using namespace lc;

namespace {

Form f(const char* text, int dim) { return parse_form(text, dim); }

}  // namespace

TEST_CASE("parse_salamon") {
    auto g = parse_salamon("(0^4, 12, 13)");
    REQUIRE(g.dim() == 6);
    CHECK(g.de(5) == f("12", 6));
    CHECK(g.de(6) == f("13", 6));
    CHECK(g.de(1).is_zero());

    auto sk = parse_salamon("(0,-12,34,0,15,46)");
    CHECK(sk.de(2) == -f("12", 6));
    auto flags = structure_flags(sk);
    CHECK(flags.solvable);
    CHECK(flags.completely_solvable);

    CHECK_NOTHROW(parse_salamon("(0^3, 12, 14-23, 15+34)"));
    CHECK_THROWS_WITH_AS(parse_salamon("(0^3, 12, 14-23, 15-34)"), doctest::Contains("not a Lie algebra"), ValidationError);
    CHECK_THROWS_WITH_AS(parse_salamon("(0^3, 12, 13, 2x)"), doctest::Contains("position"), ParseError);
    CHECK_THROWS_AS(parse_salamon("(0^3, 12, 13, 27)"), ParseError);
    CHECK_THROWS_AS(parse_salamon("(0, 0, a*12)"), ParseError);
    auto p = parse_salamon("(0, 0, a*12)", {{"a", Scalar::frac(1, 2)}});
    CHECK(p.de(3) == Scalar::frac(1, 2) * f("12", 3));
    auto big = parse_salamon("(0^9, 1.2, 1.10)");
    CHECK(big.de(11) == f("1.10", 11));
}

TEST_CASE("salamon parse, print, parse is the identity") {
    for (const auto& name : catalog_names()) {
        auto e = catalog(name);
        if (e.g.is_complex_coframe()) {
            auto again = parse_complex_coframe(e.g.coframe_text());
            CHECK(again.de() == e.g.de());
            CHECK(parse_complex_coframe(again.coframe_text()).coframe_text() == again.coframe_text());
        } else {
            auto again = parse_salamon(e.g.salamon());
            CHECK_MESSAGE(again.de() == e.g.de(), name);
            CHECK(again.salamon() == e.g.salamon());
        }
    }
}

TEST_CASE("parse_complex_coframe") {
    auto iw = parse_complex_coframe("complex 3\nd f3 = -f1f2");
    REQUIRE(iw.dim() == 6);
    CHECK(iw.field() == Field::QI);
    CHECK(iw.de(3) == -f("12", 6));
    CHECK(iw.de(6) == -f("45", 6));
    auto eb = parse_complex_coframe("complex 5\nd f5 = -f1f2 - f3f4");
    CHECK_NOTHROW(eb.validate());
    CHECK(eb.de(10) == -f("67", 10) - f("89", 10));
    auto g = parse_complex_coframe("complex 2\nd f2 = (1/2+i)*f1F1");
    CHECK(g.de(2) == Scalar::parse("1/2+i") * f("13", 4));
    // conj(c phi^1 ∧ conj phi^1) = conj(c) conj phi^1 ∧ phi^1
    CHECK(g.de(4) == -Scalar::parse("1/2-i") * f("13", 4));
    CHECK_THROWS_AS(parse_complex_coframe("complex 2\nd f2 = f1f7"), ParseError);
    CHECK_THROWS_AS(parse_complex_coframe("complex 2\nd F2 = f1F1"), ParseError);
    CHECK_THROWS_AS(parse_complex_coframe("complex 3\nd f3 = f1f2\nd f1 = f2F3"), ValidationError);
}

TEST_CASE("Chevalley-Eilenberg differential") {
    auto ab = parse_salamon("(0^6)");
    CHECK(ab.differential().is_zero());
    auto h7 = parse_salamon("(0^3, 23, 13, 12)");
    auto e45 = f("45", 6);
    CHECK(h7.d(e45) == f("235-134", 6));
    CHECK(h7.d(h7.d(e45)).is_zero());
    auto iw = parse_complex_coframe("complex 3\nd f3 = -f1f2");
    CHECK(iw.d(f("36", 6)) == f("345-126", 6));
    CHECK(iw.d(iw.d(f("36", 6))).is_zero());
}

TEST_CASE("structure flags") {
    auto n = structure_flags(parse_salamon("(0^4, 12, 13)"));
    CHECK(n.nilpotent);
    CHECK(n.nilpotency_step == 2);
    CHECK(n.unimodular);
    auto s = parse_salamon("(0^3, 13+34)");
    auto sf = structure_flags(s);
    CHECK_FALSE(sf.unimodular);
    CHECK_FALSE(sf.unimodular_koszul);
    CHECK(s.d(f("124", 4)) == f("1234", 4));
    auto a = structure_flags(parse_salamon("(0^4)"));
    CHECK(a.nilpotent);
    CHECK(a.nilpotency_step == 1);
    CHECK(a.unimodular);
    auto su2 = structure_flags(parse_salamon("(23, -13, 12)"));
    CHECK_FALSE(su2.solvable);
    CHECK(su2.unimodular);
    auto iw = structure_flags(catalog("iwasawa").real_g);
    CHECK(iw.nilpotency_step == 2);
}

TEST_CASE("real-rootedness via Sturm sequences") {
    CHECK(all_roots_real({mpq_class(-1), mpq_class(0), mpq_class(1)}));    // x^2 - 1
    CHECK_FALSE(all_roots_real({mpq_class(1), mpq_class(0), mpq_class(1)}));  // x^2 + 1
    CHECK(all_roots_real({mpq_class(0), mpq_class(0), mpq_class(1)}));     // x^2
    auto rot = Matrix::from_dense({{0, -1}, {1, 0}});
    CHECK_FALSE(all_roots_real(char_poly(rot)));
}

TEST_CASE("catalog invariants") {
    for (const auto& name : catalog_names()) {
        auto e = catalog(name);
        CAPTURE(name);
        auto d = e.real_g.differential();
        CHECK((d * d).is_zero());
        auto fl = structure_flags(e.real_g);
        CHECK(fl.unimodular == fl.unimodular_koszul);
        if (fl.nilpotent) CHECK(fl.unimodular);
        if (fl.nilpotent) CHECK(fl.completely_solvable);
        if (fl.completely_solvable) CHECK(fl.solvable);
    }
    CHECK_THROWS_AS(catalog("nope"), UnknownEntry);
    CHECK_THROWS_AS(catalog("h7", {{"alpha", Scalar(1)}}), ValidationError);
}

TEST_CASE("catalog examples") {
    auto t = catalog("torus", {{"n", Scalar(3)}});
    auto b = betti_numbers(t.g);
    CHECK(b == std::vector<int>{1, 6, 15, 20, 15, 6, 1});

    auto n6 = catalog("n6c", {{"c", Scalar(1)}});
    auto h = derham(n6.g, true);
    CHECK(h.at(2) == 3);
    std::vector<SVec> reps;
    for (const auto& r : h.reps_degree.at(2)) reps.push_back(r.to_svec(2));
    auto expected = Subspace::span(15, {f("12", 6).to_svec(2), f("36", 6).to_svec(2), f("45", 6).to_svec(2)});
    auto closed = closed_forms(n6.g.differential(), 2), exact = exact_forms(n6.g.differential(), 2);
    CHECK(sum(Subspace::span(15, reps), exact) == sum(expected, exact));
    CHECK(closed.contains(expected));

    auto nk = catalog("nakamura_cs");
    CHECK(nk.g.de(3) == f("13", 6));
    CHECK(nk.g.de(4) == -f("14", 6));
    CHECK(nk.g.de(5) == f("15", 6));
    CHECK(nk.g.de(6) == -f("16", 6));
    CHECK(structure_flags(nk.g).completely_solvable);
}
