#include "liecohom/catalog.hpp"
#include "liecohom/regression.hpp"

#include <doctest.h>

using namespace lc;

namespace {

Form f(const char* text, int dim) { return parse_form(text, dim); }

Bicomplex iwasawa_bicomplex() { return Bicomplex(catalog("iwasawa").complex[0].cs); }

Bicomplex class_bicomplex(const std::string& label) { return Bicomplex(iwasawa_family(iwasawa_representative(label)).cs); }

Bicomplex torus_bicomplex(int n) { return Bicomplex(catalog("torus", {{"n", Scalar(n)}}).complex[0].cs); }

}  // namespace

TEST_CASE("Betti numbers") {
    CHECK(betti_numbers(catalog("iwasawa").real_g) == std::vector<int>{1, 4, 8, 10, 8, 4, 1});
    CHECK(betti_numbers(catalog("iwasawa").g) == std::vector<int>{1, 4, 8, 10, 8, 4, 1});
    CHECK(betti_numbers(catalog("h7").g)[2] == 8);
    for (int n = 1; n <= 3; ++n) {
        auto b = betti_numbers(catalog("torus", {{"n", Scalar(n)}}).g);
        for (int k = 0; k <= 2 * n; ++k) CHECK(b[k] == binom(2 * n, k));
    }
}

TEST_CASE("de Rham representatives are closed and independent") {
    auto g = catalog("h7").g;
    auto t = derham(g, true);
    auto d = g.differential();
    for (const auto& [k, reps] : t.reps_degree) {
        std::vector<SVec> v;
        for (const auto& r : reps) {
            CHECK(g.d(r).is_zero());
            v.push_back(r.to_svec(k));
        }
        CHECK(sum(Subspace::span(static_cast<int>(binom(6, k)), v), exact_forms(d, k)).dim() ==
              static_cast<int>(reps.size()) + exact_forms(d, k).dim());
    }
}

TEST_CASE("Iwasawa Dolbeault, Bott-Chern and Aeppli tables") {
    auto b = iwasawa_bicomplex();
    auto dol = dolbeault(b);
    std::map<Bidegree, int> expected = {{{1, 0}, 3}, {{0, 1}, 2}, {{2, 0}, 3}, {{1, 1}, 6}, {{0, 2}, 2},
                                        {{3, 0}, 1}, {{2, 1}, 6}, {{1, 2}, 6}, {{0, 3}, 1}, {{3, 1}, 2},
                                        {{2, 2}, 6}, {{1, 3}, 3}, {{3, 2}, 2}, {{2, 3}, 3}};
    for (const auto& [pq, v] : expected) CHECK(dol.at(pq.first, pq.second) == v);
    CHECK(chart_row(bott_chern(b), 3) == std::vector<int>{2, 2, 3, 4, 3, 1, 6, 6, 1, 2, 8, 2, 3, 3});
    CHECK(chart_row(aeppli(b), 3) == std::vector<int>{3, 3, 2, 8, 2, 1, 6, 6, 1, 3, 4, 3, 2, 2});
    CHECK(chart_row(conj_dolbeault(b), 3) == std::vector<int>{2, 3, 2, 6, 3, 1, 6, 6, 1, 3, 6, 2, 3, 2});
}

TEST_CASE("deformation class tables") {
    auto iii = dolbeault(class_bicomplex("iii.a"));
    CHECK(iii.at(1) == 4);
    CHECK(iii.at(2) == 8);
    CHECK(iii.at(3) == 10);
    CHECK(iii.at(4) == 8);
    CHECK(iii.at(5) == 4);

    auto iia = class_bicomplex("ii.a");
    auto bc = bott_chern(iia);
    CHECK(bc.at(2) == 8);
    CHECK(aeppli(iia).at(2) == 11);
    CHECK(bc.at(4) == 11);
    CHECK(bc.at(2, 2) == 7);
    CHECK(bott_chern(class_bicomplex("ii.b")).at(2, 2) == 6);
    CHECK(bott_chern(class_bicomplex("iii.a")).at(2, 2) == 7);
}

TEST_CASE("torus tables are binomial") {
    for (int n = 1; n <= 3; ++n) {
        auto b = torus_bicomplex(n);
        auto dol = dolbeault(b), bc = bott_chern(b), a = aeppli(b);
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q) {
                long v = binom(n, p) * binom(n, q);
                CHECK(dol.at(p, q) == v);
                CHECK(bc.at(p, q) == v);
                CHECK(a.at(p, q) == v);
            }
    }
}

TEST_CASE("duality and symmetry on integrable catalog structures") {
    for (const auto& [name, cs] : integrable_catalog_structures()) {
        CAPTURE(name);
        Bicomplex b(cs);
        int n = cs.n;
        auto dol = dolbeault(b), cdol = conj_dolbeault(b), bc = bott_chern(b), a = aeppli(b);
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q) {
                CHECK(bc.at(p, q) == bc.at(q, p));
                CHECK(bc.at(p, q) == a.at(n - q, n - p));
                CHECK(dol.at(p, q) == cdol.at(q, p));
            }
        auto betti = complex_betti(b);
        for (int k = 0; k <= 2 * n; ++k) CHECK(betti[k] == betti[2 * n - k]);
    }
}

TEST_CASE("Varouchas sequences") {
    auto t = varouchas(torus_bicomplex(3));
    for (const auto* m : {&t.a, &t.b, &t.c, &t.d, &t.e, &t.f})
        for (const auto& [pq, v] : *m) CHECK(v == 0);

    auto b = iwasawa_bicomplex();
    auto v = varouchas(b);
    CHECK(v.sequence1_exact);
    CHECK(v.sequence2_exact);
    CHECK(v.total(v.a, 1) == 0);
    CHECK(v.total(v.f, 1) == 0);
    auto bc = bott_chern(b), a = aeppli(b), dol = dolbeault(b);
    CHECK(bc.at(1) + a.at(1) == 2 * dol.at(1) + v.total(v.a, 1) + v.total(v.f, 1));
    CHECK(bc.at(1) + a.at(1) == 10);
    for (int k = 0; k <= 6; ++k) CHECK(bc.at(k) + a.at(k) == 2 * dol.at(k) + v.total(v.a, k) + v.total(v.f, k));
    CHECK(varouchas_relations(v, bc, a, dol).empty());

    auto cls = class_bicomplex("i");
    auto vi = varouchas(cls);
    CHECK(vi.total(vi.a, 1) + vi.total(vi.f, 1) == 0);
}

TEST_CASE("Frolicher inequalities") {
    auto r = frolicher_report(iwasawa_bicomplex());
    CHECK(r.all_nonnegative());
    CHECK(r.degrees[1].h_bc_plus_a == 10);
    CHECK(2 * r.degrees[1].b == 8);
    CHECK(r.degrees[1].slack_bc() == 2);
    CHECK(r.degrees[2].h_bc_plus_a == 22);
    CHECK(2 * r.degrees[2].b == 16);
    auto t = frolicher_report(torus_bicomplex(2));
    for (const auto& d : t.degrees) {
        CHECK(d.slack_frolicher() == 0);
        CHECK(d.slack_bc() == 0);
    }
    for (const auto& [pq, s] : t.bidegree_slack) CHECK(s == 0);
}

TEST_CASE("del-delbar lemma") {
    auto t = deldelbar_lemma(torus_bicomplex(2));
    CHECK(t.dimension_test);
    CHECK(t.direct_test);
    auto iw = deldelbar_lemma(iwasawa_bicomplex());
    CHECK_FALSE(iw.dimension_test);
    CHECK_FALSE(iw.direct_test);
    CHECK(iw.first_failure == 1);
    CHECK(iw.first_failure_lhs == 10);
    CHECK(iw.first_failure_rhs == 8);
    auto iii = deldelbar_lemma(class_bicomplex("iii.b"));
    CHECK(iii.e1_degeneration);
    CHECK_FALSE(iii.dimension_test);
    CHECK(iii.agree());
}

TEST_CASE("Massey triple products") {
    auto t = catalog("torus", {{"n", Scalar(2)}}).g;
    CHECK_FALSE(massey_defined(t, f("1", 4), f("2", 4), f("3", 4)));
    CHECK_THROWS_AS(massey_triple(t, f("1", 4), f("2", 4), f("3", 4)), ValidationError);
    CHECK(massey_triple(t, f("1", 4), f("1", 4), f("1", 4)).vanishes);
    CHECK(massey_triple(t, f("12", 4), f("1", 4), f("1", 4)).vanishes);

    // Heisenberg: <[e1],[e1],[e2]> = [e13], with zero indeterminacy.
    auto heis = parse_salamon("(0,0,12)");
    auto hm = massey_triple(heis, f("1", 3), f("1", 3), f("2", 3));
    CHECK_FALSE(hm.vanishes);
    CHECK(hm.degree == 2);

    auto h7 = catalog("h7", {{"alpha", Scalar(2)}}).g;
    auto e1 = f("1", 6), e2 = f("2", 6), e3 = f("3", 6);
    REQUIRE(massey_defined(h7, e1, e3, e2));
    auto r = massey_triple(h7, e1, e3, e2);
    CHECK_FALSE(r.vanishes);
    CHECK(r.degree == 2);
    CHECK(h7.d(r.representative).is_zero());
}
