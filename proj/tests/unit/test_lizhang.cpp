#include "liecohom/catalog.hpp"
#include "liecohom/lizhang.hpp"

#include <doctest.h>

using namespace lc;

namespace {

Form f(const char* text, int dim) { return parse_form(text, dim); }

const BidegreeSet kPlus = {{1, 1}};
const BidegreeSet kMinus = {{2, 0}, {0, 2}};

}  // namespace

TEST_CASE("bidegree set parsing") {
    auto s = parse_bidegree_set("(2,0),(0,2)");
    CHECK(s == kMinus);
    CHECK(parse_bidegree_set(bidegree_set_str(s)) == s);
    CHECK_THROWS(parse_bidegree_set("(2,0"));
}

TEST_CASE("Iwasawa type subgroups") {
    auto cs = catalog("iwasawa").complex[0].cs;
    auto h = degree_cohomology(cs, 2, CoeffField::Real);
    auto plus = type_subgroup(cs, h, kPlus, CoeffField::Real);
    auto minus = type_subgroup(cs, h, kMinus, CoeffField::Real);
    CHECK(plus.dim == 4);
    CHECK(minus.dim == 4);
    CHECK(sum(plus.space, minus.space).dim() == 8);
    CHECK(intersect(plus.space, minus.space).dim() == 0);
    CHECK(h.dim() == 8);
    // i phi^{1 1b} is a real closed (1,1)-form.
    auto real11 = cs.to_e(Scalar::i() * f("14", 6));
    CHECK(real11.is_real());
    CHECK(class_in_subgroup(plus, h, real11));
    CHECK_THROWS(type_subgroup(cs, kPlus, 3, CoeffField::Real));
}

TEST_CASE("complex coefficients agree with the realified computation") {
    for (const auto& name : {"iwasawa", "h16", "h2", "h7", "n6c"}) {
        CAPTURE(name);
        auto cs = catalog(name).complex[0].cs;
        auto re = type_subgroup(cs, kPlus, 2, CoeffField::Real);
        auto cx = type_subgroup(cs, kPlus, 2, CoeffField::Complex);
        CHECK(re.dim == cx.dim);
    }
}

TEST_CASE("torus is pure and full at every stage") {
    auto cs = catalog("torus", {{"n", Scalar(3)}}).complex[0].cs;
    auto r = pure_full_report(cs, {1, 2, 3, 4, 5});
    for (const auto& st : r.stages) {
        CHECK(st.pure);
        CHECK(st.full);
    }
}

TEST_CASE("pure and full examples") {
    auto h16 = catalog("h16").complex[0].cs;
    auto r = pure_full_report(h16, {2});
    CHECK(r.at(2).full);
    CHECK_FALSE(r.at(2).pure);
    REQUIRE(r.at(2).pure_witness.has_value());
    REQUIRE(r.at(2).pure_witness_other.has_value());
    auto h = degree_cohomology(h16, 2, CoeffField::Real);
    CHECK_FALSE(class_is_zero(h, *r.at(2).pure_witness));
    CHECK(class_is_zero(h, *r.at(2).pure_witness - *r.at(2).pure_witness_other));

    auto h2 = pure_full_report(catalog("h2").complex[0].cs, {2});
    CHECK(h2.at(2).pure);
    CHECK_FALSE(h2.at(2).full);
    REQUIRE(h2.at(2).full_witness.has_value());

    for (const auto& label : {"ii.a", "ii.b", "iii.a", "iii.b"}) {
        auto def = iwasawa_family(iwasawa_representative(label));
        auto rep = pure_full_report(def.cs, {2});
        CHECK_FALSE(rep.at(2).pure);
        // phi^12 is of type (2,0), cohomologous to a (1,1)-form through d phi^3, and not exact.
        auto hc = degree_cohomology(def.cs, 2, CoeffField::Complex);
        auto phi12 = f("12", 6);
        auto other = phi12 + def.cx.d(Form::basis1(6, 3));
        for (const auto& [m, c] : other.terms()) CHECK(bidegree(m, 3) == std::pair<int, int>{1, 1});
        CHECK_FALSE(class_is_zero(hc, phi12));
    }
    auto i = pure_full_report(iwasawa_family(iwasawa_representative("i")).cs, {2});
    CHECK(i.at(2).pure);
    CHECK(i.at(2).full);
}

TEST_CASE("plus and minus dimensions") {
    CHECK(plus_minus(catalog("h7", {{"alpha", Scalar(2)}}).complex[0].cs) == std::pair<int, int>{5, 3});
    CHECK(plus_minus(catalog("n6c", {{"c", Scalar(1)}}).complex[0].cs) == std::pair<int, int>{2, 1});
}

TEST_CASE("Iwasawa almost-Kähler structure") {
    auto ak = catalog("iwasawa_ak");
    const auto& cs = ak.complex[0].cs;
    CHECK_FALSE(cs.integrable());
    CHECK(is_almost_kahler(ak.g, *ak.omega, cs.J));
    auto [hp, hm] = plus_minus(cs);
    CHECK(hp >= 4);
    CHECK(hm >= 3);
    auto r = pure_full_report(cs, {2, 4});
    CHECK(r.at(2).pure);
    CHECK_FALSE(r.at(4).pure);
    auto h4 = degree_cohomology(cs, 4, CoeffField::Real);
    auto e3456 = f("3456", 6);
    CHECK_FALSE(class_is_zero(h4, e3456));
    auto mixed = type_subgroup(cs, h4, {{3, 1}, {1, 3}}, CoeffField::Real);
    auto middle = type_subgroup(cs, h4, {{2, 2}}, CoeffField::Real);
    CHECK(class_in_subgroup(mixed, h4, e3456));
    CHECK(class_in_subgroup(middle, h4, e3456));
    CHECK(class_is_zero(h4, f("1234", 6)));
}

TEST_CASE("taming and compatibility") {
    auto J0 = J_from_pairs(4, {{1, 3}, {2, 4}});
    CHECK(is_compatible(f("13+24", 4), J0));
    CHECK(is_taming(f("13+24", 4), J0));
    CHECK_FALSE(is_taming(-f("13+24", 4), J0));
    CHECK_FALSE(is_taming(f("12", 6), J_from_pairs(6, {{1, 2}, {3, 4}, {5, 6}})));
    auto g = taming_metric(f("13+24", 4), J0);
    CHECK(g == Matrix::identity(4));
    CHECK(positive_definite(Matrix::identity(3)));
    CHECK_FALSE(positive_definite(Matrix::from_dense({{1, 2}, {2, 1}})));
}

TEST_CASE("structural properties on the catalog") {
    for (const auto& name : catalog_names()) {
        auto e = catalog(name);
        for (const auto& nc : e.complex) {
            if (nc.cs.n != 3 && nc.cs.n != 2) continue;
            CAPTURE(name);
            CAPTURE(nc.name);
            for (const auto& c : full_implies_dual_pure(nc.cs)) CHECK(c.holds());
            if (e.omega && is_almost_kahler(e.real_g, *e.omega, nc.cs.J)) CHECK(pure_full_report(nc.cs, {2}).at(2).pure);
            auto h = degree_cohomology(nc.cs, 2, CoeffField::Real);
            auto plus = type_subgroup(nc.cs, h, kPlus, CoeffField::Real);
            auto minus = type_subgroup(nc.cs, h, kMinus, CoeffField::Real);
            auto both = type_subgroup(nc.cs, h, {{1, 1}, {2, 0}, {0, 2}}, CoeffField::Real);
            // The separate subgroups span the union subgroup only when J is full.
            CHECK(both.space.contains(sum(plus.space, minus.space)));
            bool full = sum(plus.space, minus.space).dim() == h.dim();
            if (full) CHECK(sum(plus.space, minus.space) == both.space);
            CHECK(both.dim == h.dim());
        }
    }
}
