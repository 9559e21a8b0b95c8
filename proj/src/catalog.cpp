#include "liecohom/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace lc {

const ComplexStructure* CatalogEntry::structure(const std::string& which) const {
    if (complex.empty()) return nullptr;
    if (which.empty()) return &complex.front().cs;
    for (const auto& c : complex)
        if (c.name == which) return &c.cs;
    return nullptr;
}

namespace {

using Builder = std::function<CatalogEntry(const Params&)>;

Scalar param(const Params& p, const std::string& name, const Scalar& fallback) {
    auto it = p.find(name);
    return it == p.end() ? fallback : it->second;
}

long int_param(const Params& p, const std::string& name, long fallback) {
    Scalar v = param(p, name, Scalar(fallback));
    if (!v.is_real() || v.re().get_den() != 1) throw ValidationError("parameter " + name + " must be an integer");
    return v.re().get_num().get_si();
}

Scalar real_param(const Params& p, const std::string& name, const Scalar& fallback) {
    Scalar v = param(p, name, fallback);
    if (!v.is_real()) throw ValidationError("parameter " + name + " must be real");
    return v;
}

SVec vec(const std::vector<Scalar>& c) { return sv_from_dense(c); }

CatalogEntry real_entry(const std::string& name, const std::string& salamon, const std::string& description) {
    CatalogEntry e;
    e.name = name;
    e.description = description;
    e.g = parse_salamon(salamon, {}, name);
    e.real_g = e.g;
    return e;
}

void add_pairs(CatalogEntry& e, const std::string& label, const std::vector<std::pair<int, int>>& pairs) {
    e.complex.push_back({label, from_pairs(e.g, pairs, e.name + " " + label)});
}

void set_omega(CatalogEntry& e, const std::string& text) { e.omega = parse_form(text, e.g.dim()); }

std::vector<std::pair<int, int>> standard_pairs(int n) {
    std::vector<std::pair<int, int>> out;
    for (int j = 1; j <= n; ++j) out.push_back({2 * j - 1, 2 * j});
    return out;
}

CatalogEntry coframe_entry(const std::string& name, const std::string& text, const std::string& description) {
    CatalogEntry e;
    e.name = name;
    e.description = description;
    e.g = parse_complex_coframe(text, {}, name);
    auto cs = from_coframe(e.g, name);
    e.real_g = cs.real;
    e.complex.push_back({"J", std::move(cs)});
    return e;
}

CatalogEntry torus(const Params& p) {
    long n = int_param(p, "n", 3);
    if (n < 1 || n > 5) throw ValidationError("torus needs 1 <= n <= 5");
    std::string text = "(0^" + std::to_string(2 * n) + ")";
    CatalogEntry e = real_entry("torus", text, "abelian algebra of dimension 2n");
    add_pairs(e, "J", standard_pairs(static_cast<int>(n)));
    Form w(2 * n);
    std::string signs = "(";
    for (int j = 1; j <= n; ++j) {
        w.add(mask_of({2 * j - 1, 2 * j}), Scalar(1));
        signs += "+-";
    }
    e.omega = w;
    e.dcomplex = from_signs(e.g, signs + ")");
    e.parameters = {"n"};
    return e;
}

CatalogEntry iwasawa(const Params&) {
    auto e = coframe_entry("iwasawa", "complex 3\nd f3 = -f1f2", "Iwasawa manifold, holomorphically parallelizable");
    return e;
}

CatalogEntry iwasawa_def(const Params& p) {
    auto rep = iwasawa_representative("i");
    std::array<Scalar, 5> s;
    const char* names[5] = {"s12", "s11b", "s12b", "s21b", "s22b"};
    for (int i = 0; i < 5; ++i) s[i] = param(p, names[i], rep[i]);
    if (s[0].is_zero()) throw ValidationError("s12 must be nonzero");
    auto def = iwasawa_family(s);
    CatalogEntry e;
    e.name = "iwasawa_def";
    e.description = "small deformation of the Iwasawa manifold, class " + def.label;
    e.g = def.cx;
    e.g.set_name("iwasawa_def");
    e.real_g = def.cs.real;
    e.complex.push_back({"J", def.cs});
    e.parameters = {"s12", "s11b", "s12b", "s21b", "s22b"};
    return e;
}

CatalogEntry iwasawa_ak(const Params&) {
    auto e = real_entry("iwasawa_ak", "(0^4, 13-24, 14+23)", "Iwasawa manifold with an almost-Kähler non-full structure");
    add_pairs(e, "J", {{1, 6}, {2, 5}, {3, 4}});
    set_omega(e, "16+25+34");
    return e;
}

CatalogEntry h7(const Params& p) {
    Scalar a = real_param(p, "alpha", Scalar(2));
    if (sgn(a.re() - 1) <= 0) throw ValidationError("alpha must exceed 1");
    const int m = 6;
    std::vector<Form> de(m, Form(m));
    de[3].add(mask_of({2, 3}), Scalar(1) / (a * (a - Scalar(1))));
    de[4].add(mask_of({1, 3}), Scalar(1) / (a - Scalar(1)));
    de[5].add(mask_of({1, 2}), Scalar(1) / a);
    CatalogEntry e;
    e.name = "h7";
    e.description = "(0^3,23,13,12) in the orthonormal coframe of the almost-Kähler family";
    e.g = LieAlgebra("h7", std::move(de));
    e.g.validate();
    e.real_g = e.g;
    add_pairs(e, "J", {{1, 4}, {2, 5}, {3, 6}});
    set_omega(e, "14+25+36");
    e.parameters = {"alpha"};
    return e;
}

CatalogEntry h16(const Params&) {
    auto e = real_entry("h16", "(0^3, 12, 14, 24)", "full, non-pure complex structure");
    add_pairs(e, "J", standard_pairs(3));
    return e;
}

CatalogEntry h2(const Params&) {
    auto e = real_entry("h2", "(0^4, 12, 34)", "pure, non-full complex structure");
    add_pairs(e, "J", standard_pairs(3));
    return e;
}

CatalogEntry h_0413(const Params&) {
    auto e = real_entry("h_0413", "(0^4, 12, 13)", "non-pure non-full J' and a semi-Kähler J");
    add_pairs(e, "J'", standard_pairs(3));
    add_pairs(e, "J", {{1, 5}, {2, 3}, {4, 6}});
    e.forms.push_back({"semi_kahler", parse_form("15+23+46", 6)});
    return e;
}

CatalogEntry etabeta5(const Params&) {
    return coframe_entry("etabeta5", "complex 5\nd f5 = -f1f2 - f3f4", "holomorphically parallelizable nilmanifold of complex dimension 5");
}

CatalogEntry n6c(const Params& p) {
    Scalar c = real_param(p, "c", Scalar(1));
    if (c.is_zero()) throw ValidationError("c must be nonzero");
    const int m = 6;
    std::vector<Form> de(m, Form(m));
    de[0].add(mask_of({1, 3}), c);
    de[1].add(mask_of({2, 3}), -c);
    de[3].add(mask_of({4, 6}), c);
    de[4].add(mask_of({5, 6}), -c);
    CatalogEntry e;
    e.name = "n6c";
    e.description = "product of two Sol(3) algebras";
    e.g = LieAlgebra("n6c", std::move(de));
    e.g.validate();
    e.g.pinned_completely_solvable = true;
    e.real_g = e.g;
    // Frame matrices, column j = J e_j.
    Matrix J(m, m), J0(m, m);
    for (int b = 0; b < 3; ++b) {
        J.set(2 * b + 1, 2 * b, Scalar(1));
        J.set(2 * b, 2 * b + 1, Scalar(-1));
    }
    J0.set(1, 0, Scalar(1));
    J0.set(0, 1, Scalar(-1));
    J0.set(5, 2, Scalar(1));
    J0.set(4, 3, Scalar(1));
    J0.set(3, 4, Scalar(-1));
    J0.set(2, 5, Scalar(-1));
    e.complex.push_back({"J", from_J_matrix(e.g, J, "n6c J")});
    e.complex.push_back({"J0", from_J_matrix(e.g, J0, "n6c J0")});
    set_omega(e, "12+36+45");
    e.parameters = {"c"};
    return e;
}

CatalogEntry nakamura(const std::string& name, bool prime) {
    auto e = real_entry(name, "(0, 0, 13, -14, 15, -16)", "completely-solvable Nakamura manifold");
    e.g.pinned_completely_solvable = true;
    e.real_g = e.g;
    if (prime) {
        add_pairs(e, "J'", standard_pairs(3));
        add_pairs(e, "J", {{1, 2}, {3, 5}, {4, 6}});
    } else {
        add_pairs(e, "J", {{1, 2}, {3, 5}, {4, 6}});
        add_pairs(e, "J'", standard_pairs(3));
    }
    set_omega(e, "12+34+56");
    return e;
}

CatalogEntry sympl_n1(const Params&) {
    auto e = real_entry("sympl_n1", "(0^3, 12, 14-23, 15+34)", "nilmanifold with a non-Lefschetz symplectic form");
    set_omega(e, "16+35+24");
    return e;
}

CatalogEntry g34_g35(const Params&) {
    auto e = real_entry("g34_g35", "(-13, 23, 0, -56, 46, 0)", "solvable algebra with a Hard Lefschetz symplectic form");
    set_omega(e, "12+36+45");
    return e;
}

CatalogEntry solv_h3(const Params&) {
    auto e = real_entry("solv_h3", "(-23, 0, 0, -46, 56, 0)", "solvable algebra with a strict degree-3 inclusion");
    set_omega(e, "12+36+45");
    return e;
}

CatalogEntry dcx_1(const Params&) {
    auto e = real_entry("dcx_1", "(0^4, 12, 13)", "Abelian D-complex structure, pure and non-full");
    e.dcomplex = from_signs(e.g, "(-++--+)");
    set_omega(e, "16+25+34");
    return e;
}

CatalogEntry dcx_2(const Params&) {
    auto e = real_entry("dcx_2", "(0^3, 12, 13+14, 24)", "non-Abelian D-complex structure, non-pure");
    e.dcomplex = from_signs(e.g, "(+-+-+-)");
    return e;
}

CatalogEntry dcx_4d(const Params&) {
    auto e = real_entry("dcx_4d", "(0, 0, 12, 0)", "non-integrable linear D-complex structure");
    e.dcomplex = from_splitting(e.g, {vec({1, 0, 0, 0}), vec({0, -1, 0, 1})}, {vec({0, 1, 0, 0}), vec({0, 0, 1, 0})});
    return e;
}

CatalogEntry dcx_4s(const Params&) {
    auto e = real_entry("dcx_4s", "(0^3, 13+34)", "non-unimodular algebra, full non-pure D-complex structure");
    e.dcomplex = from_signs(e.g, "(++--)");
    return e;
}

CatalogEntry dcx_solv(const Params& p) {
    Scalar t = real_param(p, "t", Scalar(0));
    auto e = real_entry("dcx_solv", "(0^2, 23, -24)", "curve of D-complex structures on a solvable algebra");
    e.dcomplex = from_splitting(e.g, {vec({0, 1, 0, 0}), vec({0, 0, 1, 0})}, {vec({1, 0, 0, 0}), vec({0, t, 0, 1})});
    if (t.is_zero()) set_omega(e, "12+34");
    e.parameters = {"t"};
    return e;
}

CatalogEntry dcx_6a(const Params& p) {
    Scalar t = real_param(p, "t", Scalar(0)), u = Scalar(1) - t;
    auto e = real_entry("dcx_6a", "(0^3, 12, 13, 24)", "curve of D-complex structures with jumping dimensions");
    e.dcomplex = from_splitting(e.g, {vec({1, 0, 0, 0, 0, 0}), vec({0, 0, u, t, 0, 0}), vec({0, 0, 0, 0, 1, 0})},
                                {vec({0, 1, 0, 0, 0, 0}), vec({0, 0, t, -u, 0, 0}), vec({0, 0, 0, 0, 0, 1})});
    e.parameters = {"t"};
    return e;
}

CatalogEntry dcx_6b(const Params& p) {
    Scalar t = real_param(p, "t", Scalar(0)), u = Scalar(1) - t;
    auto e = real_entry("dcx_6b", "(0^3, 12, 13, 24)", "curve of Abelian D-complex structures");
    e.dcomplex = from_splitting(e.g, {vec({1, 0, 0, 0, 0, 0}), vec({0, 0, 0, 1, 0, 0}), vec({0, 0, 0, 0, u, t})},
                                {vec({0, 1, 0, 0, 0, 0}), vec({0, 0, 1, 0, 0, 0}), vec({0, 0, 0, 0, t, -u})});
    e.parameters = {"t"};
    return e;
}

CatalogEntry kt(const Params&) {
    auto e = real_entry("kt", "(0^2, 14, 12)", "4-dimensional nilpotent algebra");
    add_pairs(e, "J", {{1, 2}, {3, 4}});
    add_pairs(e, "J'", {{1, 3}, {2, 4}});
    return e;
}

CatalogEntry s3t3(const Params&) {
    auto e = real_entry("s3t3", "(23, -13, 12, 0^3)", "su(2) plus abelian, non-integrable J");
    add_pairs(e, "J", {{1, 4}, {2, 5}, {3, 6}});
    return e;
}

CatalogEntry nil4(const Params&) {
    return real_entry("nil4", "(0, 0, 12, 13)", "filiform 4-dimensional nilpotent algebra");
}

CatalogEntry h3xh3(const Params&) {
    auto h3 = parse_salamon("(0, 0, 12)");
    CatalogEntry e;
    e.name = "h3xh3";
    e.description = "product of two Heisenberg algebras, factors as eigenspaces";
    e.g = direct_sum(h3, h3, "h3xh3");
    e.real_g = e.g;
    e.dcomplex = from_signs(e.g, "(+++---)");
    return e;
}

const std::map<std::string, Builder>& builders() {
    static const std::map<std::string, Builder> table = {
        {"torus", torus},
        {"iwasawa", iwasawa},
        {"iwasawa_def", iwasawa_def},
        {"iwasawa_ak", iwasawa_ak},
        {"h7", h7},
        {"h16", h16},
        {"h2", h2},
        {"h_0413", h_0413},
        {"etabeta5", etabeta5},
        {"n6c", n6c},
        {"nakamura_cs", [](const Params&) { return nakamura("nakamura_cs", false); }},
        {"nakamura_J'", [](const Params&) { return nakamura("nakamura_J'", true); }},
        {"sympl_n1", sympl_n1},
        {"g34_g35", g34_g35},
        {"solv_h3", solv_h3},
        {"dcx_1", dcx_1},
        {"dcx_2", dcx_2},
        {"dcx_4d", dcx_4d},
        {"dcx_4s", dcx_4s},
        {"dcx_solv", dcx_solv},
        {"dcx_6a", dcx_6a},
        {"dcx_6b", dcx_6b},
        {"kt", kt},
        {"s3t3", s3t3},
        {"nil4", nil4},
        {"h3xh3", h3xh3},
    };
    return table;
}

}  // namespace

CatalogEntry catalog(const std::string& name, const Params& params) {
    const auto& t = builders();
    auto it = t.find(name);
    if (it == t.end()) throw UnknownEntry("unknown catalog entry: " + name);
    CatalogEntry e = it->second(params);
    for (const auto& [k, v] : params) {
        (void)v;
        if (std::find(e.parameters.begin(), e.parameters.end(), k) == e.parameters.end())
            throw ValidationError("entry " + name + " has no parameter " + k);
    }
    e.g.params = params;
    return e;
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> out;
    for (const auto& [k, v] : builders()) out.push_back(k);
    return out;
}

const std::vector<std::string>& iwasawa_labels() {
    static const std::vector<std::string> labels = {"i", "ii.a", "ii.b", "iii.a", "iii.b"};
    return labels;
}

std::array<Scalar, 5> iwasawa_representative(const std::string& label) {
    Scalar h = Scalar::frac(1, 2), ih = Scalar::i() * h;
    if (label == "i") return {Scalar(-1), 0, 0, 0, 0};
    if (label == "ii.a") return {Scalar(-1), h, 0, 0, 0};
    if (label == "ii.b") return {Scalar(-1), h, ih, 0, 0};
    if (label == "iii.a") return {Scalar(-1), h, 0, 0, h};
    if (label == "iii.b") return {Scalar(-1), h, 0, 0, ih};
    throw UnknownEntry("unknown deformation class: " + label);
}

}  // namespace lc
