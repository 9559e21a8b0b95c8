#include "liecohom/catalog.hpp"
#include "liecohom/harmonic.hpp"

#include <doctest.h>

#include <random>

using namespace lc;

namespace {

Form f(const char* text, int dim) { return parse_form(text, dim); }

SVec random_gaussian(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> val(-4, 4);
    std::vector<Scalar> d(n);
    for (auto& x : d) x = Scalar(mpq_class(val(rng)), mpq_class(val(rng)));
    return sv_from_dense(d);
}

}  // namespace

TEST_CASE("adjoints") {
    Bicomplex b(catalog("iwasawa").complex[0].cs);
    const auto& op = b.split().delbar;
    CHECK(adjoint(adjoint(op)) == op);
    CHECK(adjoint(GradedOperator(6, 1)).is_zero());
    std::mt19937 rng(17);
    auto adj = adjoint(op);
    for (int k = 0; k < 6; ++k) {
        int src = static_cast<int>(binom(6, k)), dst = static_cast<int>(binom(6, k + 1));
        for (int trial = 0; trial < 3; ++trial) {
            auto x = random_gaussian(rng, src), y = random_gaussian(rng, dst);
            CHECK(InnerProduct::dot(op.block(k).apply(x), y) == InnerProduct::dot(x, adj.block(k + 1).apply(y)));
        }
    }
}

TEST_CASE("harmonic dimensions") {
    for (int n = 1; n <= 3; ++n) {
        auto t = catalog("torus", {{"n", Scalar(n)}});
        auto r = harmonic_derham(t.g);
        for (int k = 0; k <= 2 * n; ++k) CHECK(r.by_degree.at(k) == binom(2 * n, k));
    }
    Bicomplex b(catalog("iwasawa").complex[0].cs);
    auto bc = harmonic(LaplacianKind::BottChern, b);
    CHECK(bc.by_bidegree.at({2, 2}) == 8);
    CHECK(bc.self_adjoint);
    CHECK(bc.positive_semidefinite);
    CHECK(bc.kernel_characterization);
    auto dol = harmonic(LaplacianKind::Dolbeault, b);
    auto table = dolbeault(b);
    for (const auto& [pq, v] : table.by_bidegree) CHECK(dol.by_bidegree.at(pq) == v);
    auto a = harmonic(LaplacianKind::Aeppli, b);
    CHECK(a.kernel_characterization);
    auto at = aeppli(b);
    for (const auto& [pq, v] : at.by_bidegree) CHECK(a.by_bidegree.at(pq) == v);
}

TEST_CASE("harmonic forms are harmonic") {
    auto g = catalog("h7").g;
    auto r = harmonic_derham(g, true);
    auto lap = derham_laplacian(g);
    for (const auto& [k, forms] : r.harmonic_degree) {
        CHECK(static_cast<int>(forms.size()) == r.by_degree.at(k));
        for (const auto& h : forms) CHECK(lap.apply(h).is_zero());
    }
    CHECK(psd_probe(lap.block(2), 10, 3));
}

TEST_CASE("Lefschetz-type property") {
    auto h7 = catalog("h7", {{"alpha", Scalar(2)}});
    CHECK(lefschetz_type_check(h7.g, *h7.omega).holds);
    auto nk = catalog("nakamura_J'");
    CHECK(lefschetz_type_check(nk.g, *nk.omega).holds);

    auto ak = catalog("iwasawa_ak");
    auto r = lefschetz_type_check(ak.g, *ak.omega);
    CHECK_FALSE(r.holds);
    REQUIRE(r.witness.has_value());
    REQUIRE(r.witness_image.has_value());
    REQUIRE(r.exact_primitive.has_value());
    CHECK(*r.witness_image == wedge(*ak.omega, *r.witness));
    CHECK(ak.g.d(*r.exact_primitive) == *r.witness_image);
    // omega ∧ e12 = e1234, exact although e12 is harmonic.
    CHECK(wedge(*ak.omega, f("12", 6)) == f("1234", 6));
    CHECK(ak.g.d(f("135", 6)) == f("1234", 6));
}
