#include "liecohom/catalog.hpp"
#include "liecohom/regression.hpp"

#include <doctest.h>

#include <algorithm>

using namespace lc;

namespace {

Form f(const char* text, int dim) { return parse_form(text, dim); }

}  // namespace

TEST_CASE("bigrading of a complex torus") {
    CHECK(bidegree_indices(3, 1, 1).size() == 9);
    CHECK(bidegree_indices(3, 2, 0).size() == 3);
    for (int k = 0; k <= 6; ++k) {
        size_t total = 0;
        for (int p = 0; p <= k; ++p) total += bidegree_indices(3, p, k - p).size();
        CHECK(total == static_cast<size_t>(binom(6, k)));
    }
    auto t = catalog("torus", {{"n", Scalar(3)}});
    const auto& cs = t.complex[0].cs;
    CHECK(cs.integrable());
    CHECK(cs.J * cs.J == Scalar(-1) * Matrix::identity(6));
}

TEST_CASE("J frame matrix from pairs") {
    auto J = J_from_pairs(4, {{1, 2}, {3, 4}});
    CHECK(J == Matrix::from_dense({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}));
    auto g = parse_salamon("(0^4)");
    CHECK_THROWS_AS(from_J_matrix(g, Matrix::identity(4)), ValidationError);
    CHECK_THROWS_AS(from_J_matrix(parse_salamon("(0^3)"), Matrix::identity(3)), ValidationError);
}

TEST_CASE("Nijenhuis tensor and integrability") {
    auto kt = catalog("kt");
    auto N = nijenhuis(kt.g, kt.complex[0].cs.J);
    bool found = std::any_of(N.begin(), N.end(), [](const auto& e) { return e.first == std::pair<int, int>{1, 3}; });
    CHECK(found);
    CHECK_FALSE(kt.complex[0].cs.integrable());

    auto s3 = catalog("s3t3");
    const auto& cs = s3.complex[0].cs;
    CHECK_FALSE(cs.integrable());
    auto split = split_differential(cs);
    CHECK_FALSE(split.Abar.block(1).is_zero());
    CHECK(split.A + split.del + split.delbar + split.Abar == split.d);

    // Nijenhuis and the (0,2) part of d agree on every catalog structure.
    for (const auto& name : catalog_names()) {
        auto e = catalog(name);
        for (const auto& nc : e.complex) {
            CAPTURE(name);
            CAPTURE(nc.name);
            auto s = split_differential(nc.cs);
            CHECK(nc.cs.nijenhuis_zero == (s.A.is_zero() && s.Abar.is_zero()));
            CHECK(nijenhuis(nc.cs.real, nc.cs.J).empty() == nc.cs.nijenhuis_zero);
            auto ids = d_squared_identities(s);
            CHECK(std::all_of(ids.begin(), ids.end(), [](bool b) { return b; }));
        }
    }
}

TEST_CASE("conjugation swaps bidegrees") {
    const int n = 3;
    auto perm = conjugation_pairing(n);
    const auto& bt = basis_table(2 * n);
    for (int k = 0; k <= 2 * n; ++k)
        for (int p = 0; p <= k; ++p) {
            for (int idx : bidegree_indices(n, p, k - p)) {
                auto img = conjugate_form(Form::mono(2 * n, bt.mask(k, idx)), perm);
                REQUIRE(img.terms().size() == 1);
                CHECK(bidegree(img.terms().begin()->first, n) == std::pair<int, int>{k - p, p});
            }
        }
}

TEST_CASE("Iwasawa differential splitting") {
    auto iw = catalog("iwasawa");
    auto s = split_differential(iw.complex[0].cs);
    auto phi3 = Form::basis1(6, 3);
    CHECK(s.del.apply(phi3) == -f("12", 6));
    CHECK(s.delbar.apply(phi3).is_zero());
    CHECK(s.A.is_zero());
    CHECK(s.Abar.is_zero());
}

TEST_CASE("deformation template splitting") {
    std::array<Scalar, 5> sigma = {Scalar(-1), Scalar(1), Scalar(2), Scalar(3), Scalar::i()};
    auto def = iwasawa_family(sigma);
    auto s = split_differential(def.cs);
    auto phi3 = Form::basis1(6, 3);
    CHECK(s.del.apply(phi3) == -f("12", 6));
    // sigma_{11b} phi^{1 1b} + sigma_{12b} phi^{1 2b} + sigma_{21b} phi^{2 1b} + sigma_{22b} phi^{2 2b}
    CHECK(s.delbar.apply(phi3) == f("14+2*15+3*24", 6) + Scalar::i() * f("25", 6));
    CHECK(def.cs.integrable());
}

TEST_CASE("Iwasawa deformation classes") {
    struct Case {
        std::array<Scalar, 5> s;
        const char* label;
        int block, srank;
    };
    Scalar h = Scalar::frac(1, 2), ih = Scalar::frac(1, 2) * Scalar::i();
    std::vector<Case> cases = {
        {{Scalar(-1), 0, 0, 0, 0}, "i", 0, 0},
        {{Scalar(-1), Scalar(1), 0, 0, 0}, "ii.a", 1, 1},
        {{Scalar(-1), h, 0, 0, 0}, "ii.a", 1, 1},
        {{Scalar(-1), h, ih, 0, 0}, "ii.b", 1, 2},
        {{Scalar(-1), h, 0, 0, h}, "iii.a", 2, 1},
        {{Scalar(-1), h, 0, 0, ih}, "iii.b", 2, 2},
    };
    for (const auto& c : cases) {
        int b = -1, r = -1;
        CHECK(iwasawa_class_label(c.s, &b, &r) == c.label);
        CHECK(b == c.block);
        CHECK(r == c.srank);
        auto scaled = c.s;
        Scalar lambda = Scalar::parse("2-3i");
        for (int i = 1; i < 5; ++i) scaled[i] = scaled[i] * lambda;
        CHECK(iwasawa_class_label(scaled) == c.label);
    }
    for (const auto& label : iwasawa_labels()) CHECK(iwasawa_class_label(iwasawa_representative(label)) == label);
    CHECK_THROWS(iwasawa_family({Scalar(0), 0, 0, 0, 0}));
}

TEST_CASE("chart columns") {
    auto cols = chart_columns(3);
    REQUIRE(cols.size() == 2 + 3 + 4 + 3 + 2);
    CHECK(cols.front() == Bidegree{1, 0});
    CHECK(cols[2] == Bidegree{2, 0});
    CHECK(cols.back() == Bidegree{2, 3});
}
