#include "liecohom/catalog.hpp"

#include <doctest.h>

using namespace lc;

namespace {

Form f(const char* text, int dim) { return parse_form(text, dim); }

DComplexStructure dcx(const std::string& name, const Params& p = {}) { return *catalog(name, p).dcomplex; }

Params t_param(long num, long den) { return {{"t", Scalar::frac(num, den)}}; }

}  // namespace

TEST_CASE("integrability and Abelian structures") {
    auto k1 = dcx("dcx_1");
    CHECK(k1.integrable);
    CHECK(k1.abelian);
    auto k2 = dcx("dcx_2");
    CHECK(k2.integrable);
    CHECK_FALSE(k2.abelian);
    CHECK(k2.g.bracket(2, 4) == SVec{{5, Scalar(-1)}});
    auto k4 = dcx("dcx_4d");
    CHECK_FALSE(k4.integrable);
    CHECK(k4.K * k4.K == Matrix::identity(4));
}

TEST_CASE("eigenspaces split every degree") {
    for (const auto& name : catalog_names()) {
        auto e = catalog(name);
        if (!e.dcomplex) continue;
        CAPTURE(name);
        const auto& k = *e.dcomplex;
        for (int l = 0; l <= 2 * k.n; ++l) {
            auto p = k.eigen(l, 1), m = k.eigen(l, -1);
            CHECK(intersect(p, m).dim() == 0);
            CHECK(sum(p, m) == Subspace::full(static_cast<int>(binom(2 * k.n, l))));
        }
    }
    CHECK_THROWS_AS(from_signs(parse_salamon("(0^4)"), "(+++-)"), ValidationError);
    CHECK_THROWS_AS(from_signs(parse_salamon("(0^4)"), "(++-)"), ValidationError);
}

TEST_CASE("dcx_1 cohomology") {
    auto k = dcx("dcx_1");
    auto r = dcx_report(k, {2});
    const auto& st = r.at(2);
    CHECK(st.b == 9);
    CHECK(st.h_plus == 4);
    CHECK(st.h_minus == 4);
    CHECK(st.pure);
    CHECK_FALSE(st.full);
    auto h = degree_cohomology(k.g.differential(), 2);
    for (const char* t : {"14", "15", "23", "36"}) CHECK(st.plus_classes.contains(h.class_vec(f(t, 6).to_svec(2))));
    auto outside = h.class_vec(f("26+35", 6).to_svec(2));
    CHECK_FALSE(sum(st.plus_classes, st.minus_classes).contains(outside));
    CHECK(dkahler_check(k, f("16+25+34", 6)));
}

TEST_CASE("dcx_2 is not pure") {
    auto k = dcx("dcx_2");
    auto st = dcx_report(k, {2}).at(2);
    CHECK_FALSE(st.pure);
    REQUIRE(st.pure_witness_plus.has_value());
    REQUIRE(st.pure_witness_minus.has_value());
    auto h = degree_cohomology(k.g.differential(), 2);
    auto diff = h.class_vec((*st.pure_witness_plus - *st.pure_witness_minus).to_svec(2));
    CHECK(diff.empty());
    // [e13] = -[e14]
    CHECK(h.class_vec((f("13", 6) + f("14", 6)).to_svec(2)).empty());
    CHECK_FALSE(h.class_vec(f("13", 6).to_svec(2)).empty());
}

TEST_CASE("dcx_solv family") {
    auto k0 = dcx("dcx_solv", t_param(0, 1));
    auto s0 = dcx_report(k0, {2}).at(2);
    CHECK(s0.h_plus == 0);
    CHECK(s0.h_minus == 2);
    CHECK(s0.pure);
    CHECK(s0.full);
    CHECK(dkahler_check(k0, f("12+34", 4)));

    auto kh = dcx("dcx_solv", t_param(1, 2));
    auto sh = dcx_report(kh, {2}).at(2);
    CHECK(sh.h_plus == 1);
    CHECK(sh.h_minus == 1);
    CHECK_FALSE(sh.pure);
    CHECK_FALSE(sh.full);
    auto h = degree_cohomology(kh.g.differential(), 2);
    auto c34 = h.class_vec(f("34", 4).to_svec(2));
    CHECK_FALSE(c34.empty());
    CHECK(sh.plus_classes.contains(c34));
    CHECK(sh.minus_classes.contains(c34));
    CHECK(wedge(f("34", 4), f("34", 4)).is_zero());
    auto search = dkahler_search(kh);
    CHECK_FALSE(search.exists);
    CHECK(search.cohomological_obstruction);
    CHECK(dcx_plus_minus(dcx("dcx_solv", t_param(1, 1))) == std::pair<int, int>{1, 1});
}

TEST_CASE("torus D-Kähler") {
    auto k = dcx("torus", {{"n", Scalar(2)}});
    CHECK(dkahler_check(k, f("12+34", 4)));
    CHECK_FALSE(dkahler_check(k, f("13+24", 4)));
}

TEST_CASE("structural lemmas") {
    for (const auto& name : catalog_names()) {
        auto e = catalog(name);
        if (!e.dcomplex) continue;
        CAPTURE(name);
        for (const auto& l : structural_lemmas(*e.dcomplex)) {
            CAPTURE(l.name);
            CHECK(l.holds());
        }
    }
    auto k = dcx("dcx_4s");
    auto st = dcx_report(k, {2}).at(2);
    CHECK(st.full);
    CHECK_FALSE(st.pure);
    auto h = degree_cohomology(k.g.differential(), 2);
    CHECK(h.class_vec((f("34", 4) + f("13", 4)).to_svec(2)).empty());
    CHECK_FALSE(h.class_vec(f("34", 4).to_svec(2)).empty());
}

TEST_CASE("random integrable structures") {
    for (const char* s : {"(0,0,12,13)", "(0,0,0,12)", "(0^3, 13+34)"}) {
        auto g = parse_salamon(s);
        auto ks = random_integrable_structures(g, 15, 4);
        CHECK(!ks.empty());
        for (const auto& k : ks) {
            CHECK(k.integrable);
            CHECK(k.K * k.K == Matrix::identity(4));
            for (const auto& l : structural_lemmas(k)) CHECK(l.holds());
        }
    }
}

TEST_CASE("eigen-subalgebra nilpotency") {
    auto k = dcx("h3xh3");
    CHECK(k.s_plus == 2);
    CHECK(k.s_minus == 2);
    CHECK(lower_central_step(k.g, {sv_from_dense({1, 0, 0, 0, 0, 0})}) == 1);
}
