#include "liecohom/cli.hpp"

#include "liecohom/harmonic.hpp"
#include "liecohom/lizhang.hpp"
#include "liecohom/regression.hpp"
#include "liecohom/sympl.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <regex>
#include <sstream>

namespace lc::cli {

namespace {

std::string trim(std::string_view s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(trim(cur));
    return out;
}

std::vector<std::string> tokens(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    for (std::string t; is >> t;) out.push_back(t);
    return out;
}

Scalar scalar_token(const std::string& tok, const std::string& where) {
    try {
        return Scalar::parse(tok);
    } catch (const std::exception&) {
        throw ParseError(where + ": cannot read scalar '" + tok + "'");
    }
}

std::vector<std::vector<Scalar>> scalar_rows(const std::vector<std::vector<std::string>>& rows, const std::string& where) {
    std::vector<std::vector<Scalar>> out;
    for (const auto& r : rows) {
        out.emplace_back();
        for (const auto& t : r) out.back().push_back(scalar_token(t, where));
    }
    return out;
}

Matrix square_matrix(const std::vector<std::vector<std::string>>& rows, int m, const std::string& where) {
    auto d = scalar_rows(rows, where);
    if (static_cast<int>(d.size()) != m) throw ValidationError(where + " has " + std::to_string(d.size()) + " rows, expected " + std::to_string(m));
    for (size_t i = 0; i < d.size(); ++i)
        if (static_cast<int>(d[i].size()) != m)
            throw ValidationError(where + " row " + std::to_string(i + 1) + " has " + std::to_string(d[i].size()) +
                                  " entries, expected " + std::to_string(m));
    return Matrix::from_dense(d);
}

std::vector<SVec> vectors(const std::vector<std::string>& rows, int m, const std::string& where) {
    std::vector<SVec> out;
    for (const auto& r : rows) {
        auto t = tokens(r);
        if (static_cast<int>(t.size()) != m)
            throw ValidationError(where + ": vector '" + r + "' has " + std::to_string(t.size()) + " entries, expected " + std::to_string(m));
        std::vector<Scalar> d;
        for (const auto& x : t) d.push_back(scalar_token(x, where));
        out.push_back(sv_from_dense(d));
    }
    return out;
}

// ---------- JSON helpers ----------

std::string bkey(int p, int q) { return std::to_string(p) + "," + std::to_string(q); }

std::vector<std::string> psi_labels(int n) {
    std::vector<std::string> out;
    for (int j = 1; j <= n; ++j) out.push_back("f" + std::to_string(j));
    for (int j = 1; j <= n; ++j) out.push_back("F" + std::to_string(j));
    return out;
}

std::string form_str(const Form& f, bool psi) { return psi ? f.str(psi_labels(f.ambient() / 2)) : f.str(); }

Json forms_json(const std::vector<Form>& fs, bool psi) {
    Json a = Json::array();
    for (const auto& f : fs) a.push_back(form_str(f, psi));
    return a;
}

Json table_json(const CohomologyTable& t, bool reps) {
    Json j;
    j["kind"] = kind_name(t.kind);
    j["n"] = t.n;
    Json bid = Json::object();
    for (int k = 0; k <= 2 * t.n; ++k)
        for (int p = std::min(k, t.n); p >= std::max(0, k - t.n); --p) bid[bkey(p, k - p)] = t.at(p, k - p);
    j["by_bidegree"] = bid;
    std::vector<int> tot;
    for (int k = 0; k <= 2 * t.n; ++k) tot.push_back(t.at(k));
    j["totals"] = tot;
    if (reps) {
        Json r = Json::object();
        for (const auto& [pq, fs] : t.reps_bidegree) r[bkey(pq.first, pq.second)] = forms_json(fs, true);
        j["representatives"] = r;
    }
    return j;
}

Json bidegree_map(const std::map<Bidegree, int>& m) {
    Json j = Json::object();
    for (const auto& [pq, v] : m) j[bkey(pq.first, pq.second)] = v;
    return j;
}

Json params_json(const Params& p) {
    Json j = Json::object();
    for (const auto& [k, v] : p) j[k] = v.str();
    return j;
}

Json algebra_json(const Problem& p) {
    Json a;
    a["name"] = p.name;
    a["dimension"] = p.real_g.dim();
    a["presentation"] = p.g.is_complex_coframe() ? "complex_coframe" : "real";
    a["field"] = p.g.is_complex_coframe() ? "Q(i)" : "Q";
    a["structure_equations"] = p.g.is_complex_coframe() ? p.g.coframe_text() : p.g.salamon();
    if (p.g.is_complex_coframe()) a["real_model"] = p.real_g.salamon();
    a["parameters"] = params_json(p.params);
    auto fl = structure_flags(p.real_g);
    Json f;
    f["nilpotent"] = fl.nilpotent;
    f["nilpotency_step"] = fl.nilpotency_step;
    f["solvable"] = fl.solvable;
    f["completely_solvable"] = fl.completely_solvable;
    f["completely_solvable_pinned"] = fl.completely_solvable_pinned || p.completely_solvable_pinned;
    f["unimodular"] = fl.unimodular;
    a["flags"] = f;
    return a;
}

Json header(const std::string& command, const Problem& p) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["algebra"] = algebra_json(p);
    return j;
}

// ---------- problem resolution ----------

const NamedComplex& pick_structure(const Problem& p, const Options& opt) {
    if (p.complex.empty()) throw ValidationError("no complex structure is defined for " + p.name);
    if (opt.structure.empty()) return p.complex.front();
    for (const auto& c : p.complex)
        if (c.name == opt.structure) return c;
    throw ValidationError("no complex structure named '" + opt.structure + "' on " + p.name);
}

const ComplexStructure& integrable_structure(const Problem& p, const Options& opt) {
    const auto& nc = pick_structure(p, opt);
    if (!nc.cs.integrable()) throw ValidationError("complex structure " + nc.name + " is not integrable");
    return nc.cs;
}

const Form& need_omega(const Problem& p) {
    if (!p.omega) throw ValidationError("no symplectic form is defined for " + p.name);
    return *p.omega;
}

const DComplexStructure& need_dcomplex(const Problem& p) {
    if (!p.dcomplex) throw ValidationError("no D-complex structure is defined for " + p.name);
    return *p.dcomplex;
}

// Field used for de Rham data: the presented coefficients, or the real model when "q" is forced.
const LieAlgebra& derham_algebra(const Problem& p, const Options& opt) {
    if (opt.field == "q" || opt.field == "r") return p.real_g;
    return p.g;
}

CoeffField coeff_field(const Options& opt) {
    if (opt.field == "qi" || opt.field == "c") return CoeffField::Complex;
    return CoeffField::Real;
}

void check_field(const std::string& f) {
    static const std::vector<std::string> ok = {"auto", "q", "qi", "r", "c"};
    if (std::find(ok.begin(), ok.end(), f) == ok.end()) throw ParseError("unknown field '" + f + "' (use auto, q or qi)");
}

std::vector<int> default_stages(int m, const Options& opt) {
    if (!opt.stages.empty()) return opt.stages;
    if (opt.degree >= 0) return {opt.degree};
    std::vector<int> s;
    for (int k = 1; k < m; ++k) s.push_back(k);
    return s;
}

// ---------- commands ----------

Json cmd_validate(const Problem& p) {
    Json j = header("validate", p);
    j["d_squared_zero"] = true;
    Json structures = Json::array();
    for (const auto& nc : p.complex) {
        Json s;
        s["type"] = "complex";
        s["name"] = nc.name;
        s["integrable"] = nc.cs.integrable();
        s["nijenhuis_zero"] = nc.cs.nijenhuis_zero;
        s["no_02_part"] = nc.cs.no_02_part;
        auto ids = d_squared_identities(split_differential(nc.cs));
        s["d_squared_identities"] = std::vector<bool>(ids.begin(), ids.end());
        if (p.omega) {
            s["omega_taming"] = is_taming(*p.omega, nc.cs.J);
            s["omega_compatible"] = is_compatible(*p.omega, nc.cs.J);
        }
        structures.push_back(s);
    }
    if (p.omega) {
        Json s;
        s["type"] = "symplectic";
        s["omega"] = p.omega->str();
        s["closed"] = true;
        s["nondegenerate"] = true;
        structures.push_back(s);
    }
    if (p.dcomplex) {
        const auto& K = *p.dcomplex;
        Json s;
        s["type"] = "dcomplex";
        s["integrable"] = K.integrable;
        s["abelian"] = K.abelian;
        s["commuting"] = K.commuting;
        s["s_plus"] = K.s_plus;
        s["s_minus"] = K.s_minus;
        structures.push_back(s);
    }
    j["structures"] = structures;
    return j;
}

Json cmd_betti(const Problem& p, const Options& opt) {
    const auto& g = derham_algebra(p, opt);
    Json j = header("betti", p);
    auto t = derham(g, opt.with_reps);
    std::vector<int> b;
    for (int k = 0; k <= g.dim(); ++k) b.push_back(t.at(k));
    j["field"] = g.is_complex_coframe() ? "Q(i)" : "Q";
    j["betti"] = b;
    if (opt.with_reps) {
        Json r = Json::object();
        for (const auto& [k, fs] : t.reps_degree) r[std::to_string(k)] = forms_json(fs, g.is_complex_coframe());
        j["representatives"] = r;
    }
    return j;
}

Json cmd_table(const std::string& command, const Problem& p, const Options& opt) {
    const auto& nc = pick_structure(p, opt);
    Bicomplex b(integrable_structure(p, opt));
    Json j = header(command, p);
    j["structure"] = nc.name;
    if (command == "hodge") j["table"] = table_json(dolbeault(b, opt.with_reps), opt.with_reps);
    else if (command == "bottchern") j["table"] = table_json(bott_chern(b, opt.with_reps), opt.with_reps);
    else j["table"] = table_json(aeppli(b, opt.with_reps), opt.with_reps);
    return j;
}

Json cmd_tables(const Problem& p, const Options& opt) {
    const auto& nc = pick_structure(p, opt);
    Bicomplex b(integrable_structure(p, opt));
    Json j = header("tables", p);
    j["structure"] = nc.name;
    j["betti"] = complex_betti(b);
    j["dolbeault"] = table_json(dolbeault(b, opt.with_reps), opt.with_reps);
    j["bott_chern"] = table_json(bott_chern(b, opt.with_reps), opt.with_reps);
    j["aeppli"] = table_json(aeppli(b, opt.with_reps), opt.with_reps);
    return j;
}

Json cmd_varouchas(const Problem& p, const Options& opt) {
    Bicomplex b(integrable_structure(p, opt));
    auto v = varouchas(b);
    Json j = header("varouchas", p);
    j["structure"] = pick_structure(p, opt).name;
    Json t;
    t["a"] = bidegree_map(v.a);
    t["b"] = bidegree_map(v.b);
    t["c"] = bidegree_map(v.c);
    t["d"] = bidegree_map(v.d);
    t["e"] = bidegree_map(v.e);
    t["f"] = bidegree_map(v.f);
    j["spaces"] = t;
    j["sequence1_exact"] = v.sequence1_exact;
    j["sequence2_exact"] = v.sequence2_exact;
    auto bad = varouchas_relations(v, bott_chern(b), aeppli(b), dolbeault(b));
    j["relations_hold"] = bad.empty();
    j["failing_relations"] = bad;
    return j;
}

Json cmd_frolicher(const Problem& p, const Options& opt) {
    Bicomplex b(integrable_structure(p, opt));
    auto f = frolicher_report(b);
    Json j = header("frolicher", p);
    j["structure"] = pick_structure(p, opt).name;
    Json ds = Json::array();
    for (const auto& d : f.degrees) {
        Json x;
        x["k"] = d.k;
        x["b"] = d.b;
        x["h_dbar"] = d.h_dbar;
        x["h_bc_plus_a"] = d.h_bc_plus_a;
        x["slack_frolicher"] = d.slack_frolicher();
        x["slack_bc"] = d.slack_bc();
        ds.push_back(x);
    }
    j["degrees"] = ds;
    j["bidegree_slack"] = bidegree_map(f.bidegree_slack);
    j["all_nonnegative"] = f.all_nonnegative();
    return j;
}

Json cmd_deldelbar(const Problem& p, const Options& opt) {
    Bicomplex b(integrable_structure(p, opt));
    auto r = deldelbar_lemma(b);
    Json j = header("deldelbar", p);
    j["structure"] = pick_structure(p, opt).name;
    j["lemma"] = r.dimension_test && r.direct_test;
    j["dimension_test"] = r.dimension_test;
    j["direct_test"] = r.direct_test;
    j["tests_agree"] = r.agree();
    j["e1_degeneration"] = r.e1_degeneration;
    if (r.first_failure >= 0) {
        Json f;
        f["k"] = r.first_failure;
        f["h_bc_plus_a"] = r.first_failure_lhs;
        f["two_b"] = r.first_failure_rhs;
        j["first_failure"] = f;
    } else {
        j["first_failure"] = nullptr;
    }
    return j;
}

Json cmd_harmonic(const Problem& p, const Options& opt) {
    Json j = header("harmonic", p);
    const auto& g = derham_algebra(p, opt);
    auto h = harmonic_derham(g, opt.with_reps);
    std::vector<int> hd;
    for (int k = 0; k <= g.dim(); ++k) hd.push_back(h.by_degree[k]);
    Json dr;
    dr["harmonic"] = hd;
    dr["betti"] = betti_numbers(g);
    dr["agree"] = hd == betti_numbers(g);
    dr["self_adjoint"] = h.self_adjoint;
    dr["positive_semidefinite"] = h.positive_semidefinite;
    if (opt.with_reps) {
        Json r = Json::object();
        for (const auto& [k, fs] : h.harmonic_degree) r[std::to_string(k)] = forms_json(fs, g.is_complex_coframe());
        dr["forms"] = r;
    }
    j["deRham"] = dr;
    if (!p.complex.empty() && pick_structure(p, opt).cs.integrable()) {
        Bicomplex b(pick_structure(p, opt).cs);
        j["structure"] = pick_structure(p, opt).name;
        const std::pair<LaplacianKind, CohomologyTable> kinds[] = {{LaplacianKind::Dolbeault, dolbeault(b)},
                                                                   {LaplacianKind::BottChern, bott_chern(b)},
                                                                   {LaplacianKind::Aeppli, aeppli(b)}};
        Json ks = Json::object();
        for (const auto& [kind, table] : kinds) {
            auto hk = harmonic(kind, b, opt.with_reps);
            bool agree = true;
            for (int pp = 0; pp <= b.n(); ++pp)
                for (int q = 0; q <= b.n(); ++q)
                    if (hk.by_bidegree[{pp, q}] != table.at(pp, q)) agree = false;
            Json x;
            x["harmonic"] = bidegree_map(hk.by_bidegree);
            x["agree"] = agree;
            x["self_adjoint"] = hk.self_adjoint;
            x["positive_semidefinite"] = hk.positive_semidefinite;
            x["preserves_bidegree"] = hk.preserves_bidegree;
            x["kernel_characterization"] = hk.kernel_characterization;
            if (opt.with_reps) {
                Json r = Json::object();
                for (const auto& [pq, fs] : hk.harmonic_bidegree) r[bkey(pq.first, pq.second)] = forms_json(fs, true);
                x["forms"] = r;
            }
            ks[laplacian_name(kind)] = x;
        }
        j["bigraded"] = ks;
    }
    return j;
}

Json type_subgroup_json(const ComplexStructure& cs, const BidegreeSet& S, int k, CoeffField field) {
    auto h = degree_cohomology(cs, k, field);
    auto t = type_subgroup(cs, h, S, field);
    Json x;
    x["S"] = bidegree_set_str(S);
    x["degree"] = k;
    x["field"] = field == CoeffField::Real ? "real" : "complex";
    x["dimension"] = t.dim;
    x["h"] = h.dim();
    return x;
}

Json cmd_lizhang(const Problem& p, const Options& opt) {
    const auto& nc = pick_structure(p, opt);
    const auto& cs = nc.cs;
    Json j = header("lizhang", p);
    j["structure"] = nc.name;
    j["integrable"] = cs.integrable();
    if (!opt.S.empty()) {
        if (opt.degree < 0) throw ValidationError("--S needs --degree");
        BidegreeSet S;
        try {
            S = parse_bidegree_set(opt.S);
        } catch (const ValidationError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(std::string("--S: ") + e.what());
        }
        j["subgroup"] = type_subgroup_json(cs, S, opt.degree, coeff_field(opt));
        return j;
    }
    auto r = pure_full_report(cs, default_stages(2 * cs.n, opt));
    Json st = Json::array();
    for (const auto& s : r.stages) {
        Json x;
        x["k"] = s.k;
        x["h"] = s.h;
        Json bl = Json::array();
        for (const auto& [S, d] : s.blocks) bl.push_back(Json{{"S", bidegree_set_str(S)}, {"dimension", d}});
        x["blocks"] = bl;
        x["pure"] = s.pure;
        x["full"] = s.full;
        if (s.pure_witness) {
            x["pure_witness"] = s.pure_witness->str();
            x["pure_witness_block"] = bidegree_set_str(s.pure_witness_block);
            if (s.pure_witness_other) x["pure_witness_other"] = s.pure_witness_other->str();
        }
        if (s.full_witness) x["full_witness"] = s.full_witness->str();
        st.push_back(x);
    }
    j["stages"] = st;
    auto pm = plus_minus(cs);
    j["h_plus"] = pm.first;
    j["h_minus"] = pm.second;
    if (p.omega) {
        j["omega_taming"] = is_taming(*p.omega, cs.J);
        j["omega_compatible"] = is_compatible(*p.omega, cs.J);
        j["almost_kahler"] = is_almost_kahler(p.real_g, *p.omega, cs.J);
    }
    Json imp = Json::array();
    for (const auto& ic : full_implies_dual_pure(cs))
        imp.push_back(Json{{"k", ic.k}, {"full_k", ic.full_k}, {"dual_direct", ic.pure_dual}, {"holds", ic.holds()}});
    j["full_implies_dual_direct"] = imp;
    j["implication_asserted"] = structure_flags(p.real_g).unimodular;
    return j;
}

Json cmd_symplectic(const Problem& p, const Options& opt) {
    auto s = build_symplectic(p.real_g, need_omega(p));
    Json j = header("symplectic", p);
    j["omega"] = p.omega->str();
    Json ids = Json::object();
    for (const auto& c : symplectic_identities(s)) ids[c.name] = c.ok;
    j["identities"] = ids;
    auto t = tseng_yau_tables(s);
    Json tj;
    tj["betti"] = t.betti;
    tj["dLambda"] = t.h_dlambda;
    tj["d_plus_dLambda"] = t.h_d_plus_dlambda;
    tj["ddLambda"] = t.h_ddlambda;
    tj["primitive_d_plus_dLambda"] = t.ph_d_plus_dlambda;
    tj["primitive_ddLambda"] = t.ph_ddlambda;
    tj["operator_kernels_agree"] = t.oracle_agrees && t.oracle_kernel_characterization;
    j["cohomology"] = tj;
    j["hlc"] = t.hlc;
    j["hlc_all"] = t.hlc_all;
    j["ddLambda_lemma"] = t.ddlambda_lemma;
    j["betti_match"] = t.betti_match;
    j["unimodular"] = t.unimodular;
    j["equivalence_holds"] = t.equivalence_holds();
    j["tseng_yau_decomposition"] = t.tseng_yau_decomposition;
    j["dLambda_duality"] = t.dlambda_duality;
    auto o = omega_subgroups(s);
    Json sub = Json::object();
    for (const auto& [rs, d] : o.dims) sub[bkey(rs.first, rs.second)] = d;
    j["subgroups"] = sub;
    Json dir = Json::object(), full = Json::object();
    for (const auto& [k, v] : o.direct) dir[std::to_string(k)] = v;
    for (const auto& [k, v] : o.full) full[std::to_string(k)] = v;
    j["direct"] = dir;
    j["full"] = full;
    j["lifting_property"] = o.lifting_property;
    j["low_intersections"] = o.low_intersections;
    if (p.real_g.dim() >= 4) {
        auto lt = lefschetz_type_check(p.real_g, *p.omega);
        Json l;
        l["holds"] = lt.holds;
        l["harmonic_2"] = lt.harmonic_2;
        if (lt.witness) {
            l["witness"] = lt.witness->str();
            l["witness_image"] = lt.witness_image->str();
            l["exact_primitive"] = lt.exact_primitive ? Json(lt.exact_primitive->str()) : Json(nullptr);
        }
        j["lefschetz_type"] = l;
    }
    (void)opt;
    return j;
}

Json cmd_dcomplex(const Problem& p, const Options& opt) {
    const auto& K = need_dcomplex(p);
    Json j = header("dcomplex", p);
    j["integrable"] = K.integrable;
    j["abelian"] = K.abelian;
    j["commuting"] = K.commuting;
    j["s_plus"] = K.s_plus;
    j["s_minus"] = K.s_minus;
    auto r = dcx_report(K, default_stages(K.g.dim(), opt));
    Json st = Json::array();
    for (const auto& s : r.stages) {
        Json x;
        x["k"] = s.k;
        x["b"] = s.b;
        x["h_plus"] = s.h_plus;
        x["h_minus"] = s.h_minus;
        x["pure"] = s.pure;
        x["full"] = s.full;
        if (s.pure_witness_plus) {
            x["pure_witness_plus"] = s.pure_witness_plus->str();
            x["pure_witness_minus"] = s.pure_witness_minus->str();
        }
        if (s.full_witness) x["full_witness"] = s.full_witness->str();
        st.push_back(x);
    }
    j["stages"] = st;
    j["invariant_cohomology_exact"] = r.invariant_cohomology_exact;
    Json lem = Json::array();
    for (const auto& l : structural_lemmas(K))
        lem.push_back(Json{{"name", l.name}, {"hypothesis", l.hypothesis}, {"conclusion", l.conclusion}, {"holds", l.holds()}});
    j["lemmas"] = lem;
    if (p.omega) j["omega_dkahler"] = dkahler_check(K, *p.omega);
    auto ds = dkahler_search(K, opt.seed);
    Json d;
    d["exists"] = ds.exists;
    d["witness"] = ds.witness ? Json(ds.witness->str()) : Json(nullptr);
    d["closed_anti_invariant_dim"] = ds.closed_anti_invariant_dim;
    d["cohomological_obstruction"] = ds.cohomological_obstruction;
    j["dkahler"] = d;
    return j;
}

Json cmd_massey(const Problem& p, const Options& opt) {
    const auto& g = derham_algebra(p, opt);
    bool psi = g.is_complex_coframe();
    auto read = [&](const std::string& text) {
        if (!psi) return parse_form(text, g.dim(), p.params);
        // Coframe algebras take 1-forms in the f/F notation: fK is phi^K, FK its conjugate.
        int n = g.dim() / 2;
        std::string t = std::regex_replace(text, std::regex("f(\\d+)"), "e$1");
        std::smatch mt;
        std::string out;
        std::regex big("F(\\d+)");
        auto it = t.cbegin();
        while (std::regex_search(it, t.cend(), mt, big)) {
            out += std::string(it, mt[0].first) + "e" + std::to_string(std::stoi(mt[1]) + n);
            it = mt[0].second;
        }
        out += std::string(it, t.cend());
        return parse_form(out, g.dim(), p.params);
    };
    Json j = header("massey", p);
    j["field"] = psi ? "Q(i)" : "Q";
    if (!opt.triple.empty()) {
        auto parts = split(opt.triple, ';');
        if (parts.size() != 3) throw ParseError("--triple needs three forms separated by ';'");
        Form a = read(parts[0]), b = read(parts[1]), c = read(parts[2]);
        if (!massey_defined(g, a, b, c)) throw ValidationError("the triple product is not defined for these classes");
        auto r = massey_triple(g, a, b, c);
        j["triple"] = std::vector<std::string>{form_str(a, psi), form_str(b, psi), form_str(c, psi)};
        j["defined"] = true;
        j["vanishes"] = r.vanishes;
        j["representative"] = form_str(r.representative, psi);
        j["degree"] = r.degree;
        return j;
    }
    auto h = degree_cohomology(g.differential(), 1);
    std::vector<Form> basis;
    for (const auto& v : h.quotient.basis()) basis.push_back(Form::from_svec(g.dim(), 1, v));
    int defined = 0;
    Json nonzero = Json::array();
    for (const auto& a : basis)
        for (const auto& b : basis)
            for (const auto& c : basis) {
                if (!massey_defined(g, a, b, c)) continue;
                ++defined;
                auto r = massey_triple(g, a, b, c);
                if (!r.vanishes)
                    nonzero.push_back(Json{{"triple", {form_str(a, psi), form_str(b, psi), form_str(c, psi)}},
                                           {"representative", form_str(r.representative, psi)}});
            }
    j["degree1_basis"] = forms_json(basis, psi);
    j["defined_triples"] = defined;
    j["nonzero_triples"] = nonzero;
    return j;
}

// ---------- markdown ----------

std::string cell(const Json& v) {
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    return v.dump();
}

std::string md_table(const std::vector<std::string>& head, const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream os;
    os << "|";
    for (const auto& h : head) os << " " << h << " |";
    os << "\n|";
    for (size_t i = 0; i < head.size(); ++i) os << " --- |";
    os << "\n";
    for (const auto& r : rows) {
        os << "|";
        for (const auto& c : r) os << " " << c << " |";
        os << "\n";
    }
    return os.str();
}

std::string kv_lines(const Json& j, const std::vector<std::string>& keys) {
    std::ostringstream os;
    for (const auto& k : keys)
        if (j.contains(k)) os << k << ": " << cell(j[k]) << "\n";
    return os.str();
}

// Chart columns: degrees 1..2n-1, p decreasing.
std::vector<std::string> chart_head(const std::string& title, int n) {
    std::vector<std::string> h{title};
    for (auto [p, q] : chart_columns(n)) h.push_back("h^{" + bkey(p, q) + "}");
    return h;
}

std::vector<std::string> chart_cells(const std::string& label, const Json& table) {
    int n = table["n"].get<int>();
    std::vector<std::string> r{label};
    for (auto [p, q] : chart_columns(n)) r.push_back(std::to_string(table["by_bidegree"][bkey(p, q)].get<int>()));
    return r;
}

std::vector<std::string> betti_head(int m) {
    std::vector<std::string> h{"H_dR"};
    for (int k = 1; k < m; ++k) h.push_back("b" + std::to_string(k));
    return h;
}

std::vector<std::string> betti_cells(const std::string& label, const Json& b) {
    std::vector<std::string> r{label};
    for (size_t k = 1; k + 1 < b.size(); ++k) r.push_back(std::to_string(b[k].get<int>()));
    return r;
}

const char* const kChartTitles[3][2] = {{"dolbeault", "H_dbar"}, {"bott_chern", "H_BC"}, {"aeppli", "H_A"}};

// The four charts with one row per (label, document).
std::string charts(const std::vector<std::pair<std::string, const Json*>>& rows) {
    if (rows.empty()) return "";
    int n = (*rows.front().second)["dolbeault"]["n"].get<int>();
    std::ostringstream os;
    std::vector<std::vector<std::string>> br;
    for (const auto& [l, d] : rows) br.push_back(betti_cells(l, (*d)["betti"]));
    os << md_table(betti_head(2 * n), br);
    for (const auto& [key, title] : kChartTitles) {
        std::vector<std::vector<std::string>> tr;
        for (const auto& [l, d] : rows) tr.push_back(chart_cells(l, (*d)[key]));
        os << "\n" << md_table(chart_head(title, n), tr);
    }
    return os.str();
}

std::string label_of(const Json& doc) {
    std::string l = doc["algebra"]["name"].get<std::string>();
    if (doc.contains("structure") && doc["structure"] != "J") l += " " + doc["structure"].get<std::string>();
    return l;
}

std::string reps_md(const Json& reps) {
    std::ostringstream os;
    for (auto it = reps.begin(); it != reps.end(); ++it) {
        os << "- " << it.key() << ":";
        for (const auto& f : it.value()) os << " [" << f.get<std::string>() << "]";
        os << "\n";
    }
    return os.str();
}

std::string render_body(const Json& j) {
    const std::string cmd = j["command"].get<std::string>();
    std::ostringstream os;
    if (cmd == "tables") return charts({{label_of(j), &j}});
    if (cmd == "validate") {
        const auto& a = j["algebra"];
        os << "algebra: " << a["name"].get<std::string>() << "\n";
        os << "dimension: " << a["dimension"] << "\n";
        os << "presentation: " << a["presentation"].get<std::string>() << "\n";
        os << "structure equations: " << a["structure_equations"].get<std::string>() << "\n";
        for (auto it = a["flags"].begin(); it != a["flags"].end(); ++it) os << it.key() << ": " << cell(it.value()) << "\n";
        os << "d^2 = 0: true\n";
        for (const auto& s : j["structures"]) {
            os << "\n" << s["type"].get<std::string>() << (s.contains("name") ? " " + s["name"].get<std::string>() : "") << "\n";
            for (auto it = s.begin(); it != s.end(); ++it)
                if (it.key() != "type" && it.key() != "name") os << "  " << it.key() << ": " << cell(it.value()) << "\n";
        }
        return os.str();
    }
    if (cmd == "betti") {
        const auto& b = j["betti"];
        std::vector<std::string> head{"H_dR"}, row{j["algebra"]["name"].get<std::string>()};
        for (size_t k = 0; k < b.size(); ++k) {
            head.push_back("b" + std::to_string(k));
            row.push_back(std::to_string(b[k].get<int>()));
        }
        os << md_table(head, {row});
        if (j.contains("representatives")) os << "\n" << reps_md(j["representatives"]);
        return os.str();
    }
    if (cmd == "hodge" || cmd == "bottchern" || cmd == "aeppli") {
        const char* title = cmd == "hodge" ? "H_dbar" : cmd == "bottchern" ? "H_BC" : "H_A";
        const auto& t = j["table"];
        os << md_table(chart_head(title, t["n"].get<int>()), {chart_cells(label_of(j), t)});
        std::vector<std::string> head{"total"}, row{title};
        for (size_t k = 0; k < t["totals"].size(); ++k) {
            head.push_back("h^" + std::to_string(k));
            row.push_back(std::to_string(t["totals"][k].get<int>()));
        }
        os << "\n" << md_table(head, {row});
        if (t.contains("representatives")) os << "\n" << reps_md(t["representatives"]);
        return os.str();
    }
    if (cmd == "varouchas") {
        const auto& sp = j["spaces"];
        std::vector<std::string> head{"space"};
        for (auto it = sp["a"].begin(); it != sp["a"].end(); ++it) head.push_back("(" + it.key() + ")");
        std::vector<std::vector<std::string>> rows;
        for (auto it = sp.begin(); it != sp.end(); ++it) {
            std::vector<std::string> r{it.key()};
            for (auto jt = it.value().begin(); jt != it.value().end(); ++jt) r.push_back(std::to_string(jt.value().get<int>()));
            rows.push_back(r);
        }
        os << md_table(head, rows) << "\n" << kv_lines(j, {"sequence1_exact", "sequence2_exact", "relations_hold"});
        for (const auto& f : j["failing_relations"]) os << "failing: " << f.get<std::string>() << "\n";
        return os.str();
    }
    if (cmd == "frolicher") {
        std::vector<std::vector<std::string>> rows;
        for (const auto& d : j["degrees"])
            rows.push_back({cell(d["k"]), cell(d["b"]), cell(d["h_dbar"]), cell(d["h_bc_plus_a"]), cell(d["slack_frolicher"]),
                            cell(d["slack_bc"])});
        os << md_table({"k", "b_k", "h_dbar", "h_BC + h_A", "h_dbar - b", "h_BC + h_A - 2b"}, rows) << "\n"
           << kv_lines(j, {"all_nonnegative"});
        return os.str();
    }
    if (cmd == "deldelbar") {
        os << kv_lines(j, {"lemma", "dimension_test", "direct_test", "e1_degeneration"});
        if (!j["first_failure"].is_null()) {
            const auto& f = j["first_failure"];
            os << "first failure: k=" << f["k"] << ", h_BC + h_A = " << f["h_bc_plus_a"] << " vs 2b = " << f["two_b"] << "\n";
        }
        return os.str();
    }
    if (cmd == "harmonic") {
        const auto& dr = j["deRham"];
        std::vector<std::string> head{"deRham"}, hr{"harmonic"}, br{"betti"};
        for (size_t k = 0; k < dr["harmonic"].size(); ++k) {
            head.push_back(std::to_string(k));
            hr.push_back(cell(dr["harmonic"][k]));
            br.push_back(cell(dr["betti"][k]));
        }
        os << md_table(head, {hr, br}) << "\nagree: " << cell(dr["agree"]) << "\n";
        if (j.contains("bigraded")) {
            std::vector<std::vector<std::string>> rows;
            for (auto it = j["bigraded"].begin(); it != j["bigraded"].end(); ++it) {
                const auto& x = it.value();
                rows.push_back({it.key(), cell(x["agree"]), cell(x["self_adjoint"]), cell(x["positive_semidefinite"]),
                                cell(x["kernel_characterization"])});
            }
            os << "\n" << md_table({"Laplacian", "kernel = cohomology", "self-adjoint", "semidefinite", "kernel characterization"}, rows);
        }
        return os.str();
    }
    if (cmd == "lizhang") {
        if (j.contains("subgroup")) {
            const auto& s = j["subgroup"];
            os << "H^{" << s["S"].get<std::string>() << "} in degree " << s["degree"] << " (" << s["field"].get<std::string>()
               << "): " << s["dimension"] << " of " << s["h"] << "\n";
            return os.str();
        }
        std::vector<std::vector<std::string>> rows;
        for (const auto& s : j["stages"]) {
            std::string blocks;
            for (const auto& b : s["blocks"]) blocks += (blocks.empty() ? "" : " ") + b["S"].get<std::string>() + ":" + cell(b["dimension"]);
            std::string wit = s.contains("pure_witness") ? s["pure_witness"].get<std::string>() : "";
            if (s.contains("full_witness")) wit += (wit.empty() ? "" : "; ") + std::string("outside: ") + s["full_witness"].get<std::string>();
            rows.push_back({cell(s["k"]), cell(s["h"]), blocks, cell(s["pure"]), cell(s["full"]), wit});
        }
        os << md_table({"k", "b_k", "blocks", "pure", "full", "witness"}, rows) << "\n"
           << kv_lines(j, {"h_plus", "h_minus", "almost_kahler", "omega_compatible", "omega_taming"});
        return os.str();
    }
    if (cmd == "symplectic") {
        os << "omega: " << j["omega"].get<std::string>() << "\n\n";
        std::vector<std::vector<std::string>> ids;
        for (auto it = j["identities"].begin(); it != j["identities"].end(); ++it) ids.push_back({it.key(), cell(it.value())});
        os << md_table({"identity", "holds"}, ids) << "\n";
        const auto& c = j["cohomology"];
        std::vector<std::string> head{"cohomology"};
        for (size_t k = 0; k < c["betti"].size(); ++k) head.push_back(std::to_string(k));
        std::vector<std::vector<std::string>> rows;
        for (const char* key : {"betti", "dLambda", "d_plus_dLambda", "ddLambda"}) {
            std::vector<std::string> r{key};
            for (const auto& v : c[key]) r.push_back(cell(v));
            rows.push_back(r);
        }
        os << md_table(head, rows) << "\n";
        std::vector<std::vector<std::string>> sub;
        for (auto it = j["subgroups"].begin(); it != j["subgroups"].end(); ++it) sub.push_back({"(" + it.key() + ")", cell(it.value())});
        os << md_table({"H^(r,s)", "dimension"}, sub) << "\n";
        os << kv_lines(j, {"hlc_all", "ddLambda_lemma", "betti_match", "unimodular", "equivalence_holds", "lifting_property",
                           "low_intersections"});
        if (j.contains("lefschetz_type")) {
            const auto& l = j["lefschetz_type"];
            os << "lefschetz_type: " << cell(l["holds"]);
            if (l.contains("witness")) os << " (witness " << cell(l["witness"]) << " -> " << cell(l["witness_image"]) << ")";
            os << "\n";
        }
        return os.str();
    }
    if (cmd == "dcomplex") {
        os << kv_lines(j, {"integrable", "abelian", "commuting", "s_plus", "s_minus"}) << "\n";
        std::vector<std::vector<std::string>> rows;
        for (const auto& s : j["stages"])
            rows.push_back({cell(s["k"]), cell(s["b"]), cell(s["h_plus"]), cell(s["h_minus"]), cell(s["pure"]), cell(s["full"])});
        os << md_table({"k", "b_k", "h^{k+}", "h^{k-}", "pure", "full"}, rows) << "\n";
        std::vector<std::vector<std::string>> lem;
        for (const auto& l : j["lemmas"]) lem.push_back({cell(l["name"]), cell(l["hypothesis"]), cell(l["conclusion"]), cell(l["holds"])});
        os << md_table({"lemma", "hypothesis", "conclusion", "holds"}, lem) << "\n";
        os << "D-Kähler form exists: " << cell(j["dkahler"]["exists"]);
        if (!j["dkahler"]["witness"].is_null()) os << " (" << cell(j["dkahler"]["witness"]) << ")";
        os << "\ncohomological obstruction: " << cell(j["dkahler"]["cohomological_obstruction"]) << "\n";
        return os.str();
    }
    if (cmd == "massey") {
        if (j.contains("triple")) {
            os << "<" << j["triple"][0].get<std::string>() << ", " << j["triple"][1].get<std::string>() << ", "
               << j["triple"][2].get<std::string>() << ">\n";
            os << kv_lines(j, {"vanishes", "representative"});
            return os.str();
        }
        os << "defined triples of basis classes: " << j["defined_triples"] << "\n";
        os << "nonzero: " << j["nonzero_triples"].size() << "\n";
        for (const auto& t : j["nonzero_triples"])
            os << "- <" << t["triple"][0].get<std::string>() << ", " << t["triple"][1].get<std::string>() << ", "
               << t["triple"][2].get<std::string>() << "> = [" << t["representative"].get<std::string>() << "]\n";
        return os.str();
    }
    if (cmd == "sweep") {
        const auto& pts = j["points"];
        std::string of = j["of"].get<std::string>();
        std::string pn = j["parameter"].get<std::string>();
        std::vector<std::string> errors;
        if (of == "tables") {
            std::vector<std::pair<std::string, const Json*>> rows;
            for (const auto& pt : pts) {
                if (pt.contains("error")) errors.push_back(pn + "=" + pt["value"].get<std::string>() + ": " + pt["error"].get<std::string>());
                else rows.push_back({pn + "=" + pt["value"].get<std::string>(), &pt["result"]});
            }
            os << charts(rows);
        } else if (of == "dcomplex") {
            std::vector<std::vector<std::string>> rows;
            for (const auto& pt : pts) {
                if (pt.contains("error")) {
                    errors.push_back(pn + "=" + pt["value"].get<std::string>() + ": " + pt["error"].get<std::string>());
                    continue;
                }
                const auto& r = pt["result"];
                const Json* s2 = nullptr;
                for (const auto& s : r["stages"])
                    if (s["k"] == 2) s2 = &s;
                if (!s2) s2 = &r["stages"][0];
                rows.push_back({pt["value"].get<std::string>(), cell((*s2)["h_plus"]), cell((*s2)["h_minus"]), cell((*s2)["pure"]),
                                cell((*s2)["full"]), cell(r["dkahler"]["exists"])});
            }
            os << md_table({pn, "h^{2+}", "h^{2-}", "pure", "full", "D-Kähler"}, rows);
        } else {
            for (const auto& pt : pts) {
                os << "### " << pn << " = " << pt["value"].get<std::string>() << "\n\n";
                if (pt.contains("error")) os << "error: " << pt["error"].get<std::string>() << "\n\n";
                else os << render_body(pt["result"]) << "\n";
            }
        }
        for (const auto& e : errors) os << "\nerror at " << e << "\n";
        return os.str();
    }
    if (cmd == "catalog") {
        if (j.contains("entries")) {
            std::vector<std::vector<std::string>> rows;
            for (const auto& e : j["entries"]) rows.push_back({cell(e["name"]), cell(e["parameters"]), cell(e["description"])});
            return md_table({"name", "parameters", "description"}, rows);
        }
        for (const auto& c : j["criteria"]) os << c["summary"].get<std::string>();
        return os.str();
    }
    return j.dump(2) + "\n";
}

// ---------- sweep and catalog ----------

Params point_params(const std::string& family, const Options& opt, const std::string& value) {
    Params p = opt.params;
    if (opt.param_name == "class") {
        if (family != "iwasawa_def") throw ValidationError("the class parameter only applies to iwasawa_def");
        auto sigma = iwasawa_representative(value);
        const char* names[5] = {"s12", "s11b", "s12b", "s21b", "s22b"};
        for (int i = 0; i < 5; ++i) p[names[i]] = sigma[i];
        return p;
    }
    p[opt.param_name] = scalar_token(value, "--values");
    return p;
}

Json run_sweep(const Options& opt) {
    if (opt.catalog.empty()) throw ValidationError("sweep needs --catalog FAMILY");
    if (opt.param_name.empty()) throw ValidationError("sweep needs --param-name");
    if (opt.values.empty()) throw ValidationError("sweep needs --values");
    auto base = catalog(opt.catalog, opt.params);
    if (opt.param_name != "class" &&
        std::find(base.parameters.begin(), base.parameters.end(), opt.param_name) == base.parameters.end())
        throw ValidationError(opt.catalog + " has no parameter named '" + opt.param_name + "'");
    std::string of = opt.sweep_of;
    if (of.empty()) of = base.dcomplex ? "dcomplex" : "tables";
    if (of == "sweep" || of == "catalog") throw ValidationError("cannot sweep the " + of + " command");
    auto point = [&](const std::string& value) -> Json {
        Json pt;
        pt["value"] = value;
        try {
            auto prob = problem_from_catalog(opt.catalog, point_params(opt.catalog, opt, value));
            pt["result"] = execute(of, prob, opt);
        } catch (const std::exception& e) {
            pt["error"] = e.what();
        }
        return pt;
    };
    std::vector<std::future<Json>> jobs;
    for (const auto& v : opt.values)
        jobs.push_back(std::async(opt.sequential ? std::launch::deferred : std::launch::async, point, v));
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "sweep";
    j["family"] = opt.catalog;
    j["parameter"] = opt.param_name;
    j["of"] = of;
    Json pts = Json::array();
    for (auto& f : jobs) pts.push_back(f.get());
    j["points"] = pts;
    return j;
}

Json run_catalog(const std::string& sub, const Options& opt) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "catalog";
    j["subcommand"] = sub;
    if (sub == "list") {
        Json es = Json::array();
        for (const auto& n : catalog_names()) {
            auto e = catalog(n);
            std::string ps;
            for (const auto& p : e.parameters) ps += (ps.empty() ? "" : ",") + p;
            es.push_back(Json{{"name", n}, {"parameters", ps}, {"description", e.description}});
        }
        j["entries"] = es;
        return j;
    }
    RegressionOptions ro;
    ro.dcx_samples = opt.samples;
    ro.seed = opt.seed;
    ro.parallel = !opt.sequential;
    auto res = run_regression(ro);
    Json cs = Json::array();
    bool all = true;
    for (const auto& c : res) {
        all = all && c.passed();
        Json x;
        x["id"] = c.id;
        x["title"] = c.title;
        x["tolerance"] = c.tolerance;
        x["passed"] = c.passed();
        Json checks = Json::array();
        for (const auto& ch : c.checks) checks.push_back(Json{{"name", ch.name}, {"ok", ch.ok}, {"detail", ch.detail}});
        x["checks"] = checks;
        x["summary"] = format_criterion(c, opt.verbose);
        cs.push_back(x);
    }
    j["criteria"] = cs;
    j["all_passed"] = all;
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Problem resolve(const Options& opt) {
    if (!opt.catalog.empty() && (!opt.input.empty() || !opt.input_text.empty()))
        throw ParseError("give either --catalog or --input, not both");
    if (!opt.catalog.empty()) return problem_from_catalog(opt.catalog, opt.params);
    if (!opt.input.empty()) return build_problem(parse_input(read_file(opt.input)), opt.params);
    if (!opt.input_text.empty()) return build_problem(parse_input(opt.input_text), opt.params);
    throw ParseError("no algebra given: use --catalog NAME or --input FILE");
}

}  // namespace

// ---------- input documents ----------

InputDocument parse_input(std::string_view text) {
    InputDocument doc;
    std::istringstream is{std::string(text)};
    std::string raw;
    int lineno = 0;
    enum class Block { None, Coframe, J, DComplex, Frame } block = Block::None;
    bool have_algebra = false;
    auto where = [&] { return "line " + std::to_string(lineno); };
    auto set_algebra = [&](std::string t, Presentation pres) {
        if (have_algebra) throw ParseError(where() + ": a second algebra block (exactly one is allowed)");
        have_algebra = true;
        doc.algebra_text = std::move(t);
        doc.presentation = pres;
    };
    while (std::getline(is, raw)) {
        ++lineno;
        std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        auto colon = line.find(':');
        std::string key = colon == std::string::npos ? "" : trim(line.substr(0, colon));
        std::string val = colon == std::string::npos ? "" : trim(line.substr(colon + 1));
        static const std::vector<std::string> keys = {"name", "param", "algebra", "J", "symplectic", "dcomplex", "metric_frame"};
        bool is_key = std::find(keys.begin(), keys.end(), key) != keys.end();
        if (!is_key && block == Block::DComplex && (key == "plus" || key == "minus")) {
            auto vs = split(val, ';');
            auto& dst = key == "plus" ? doc.dcomplex_plus : doc.dcomplex_minus;
            if (dst) throw ParseError(where() + ": repeated '" + key + ":'");
            dst.emplace();
            for (auto& v : vs) dst->push_back(tokens(v));
            continue;
        }
        if (!is_key) {
            if (starts_with(line, "complex")) {
                set_algebra(line, Presentation::ComplexCoframe);
                block = Block::Coframe;
                continue;
            }
            switch (block) {
                case Block::Coframe:
                    if (!starts_with(line, "d")) throw ParseError(where() + ": expected 'd fK = ...', got '" + line + "'");
                    doc.algebra_text += "\n" + line;
                    continue;
                case Block::J: doc.J->push_back(tokens(line)); continue;
                case Block::Frame: doc.metric_frame->push_back(tokens(line)); continue;
                default: throw ParseError(where() + ": unrecognized line '" + line + "'");
            }
        }
        block = Block::None;
        if (key == "name") {
            doc.name = val;
        } else if (key == "param") {
            auto eq = val.find('=');
            if (eq == std::string::npos) throw ParseError(where() + ": expected 'param: NAME = VALUE'");
            std::string nm = trim(val.substr(0, eq));
            if (nm.empty()) throw ParseError(where() + ": empty parameter name");
            doc.params[nm] = scalar_token(trim(val.substr(eq + 1)), where());
        } else if (key == "algebra") {
            if (starts_with(val, "complex")) {
                set_algebra(val, Presentation::ComplexCoframe);
                block = Block::Coframe;
            } else {
                set_algebra(val, Presentation::Real);
            }
        } else if (key == "J") {
            if (doc.J) throw ParseError(where() + ": repeated J block");
            doc.J.emplace();
            if (!val.empty()) doc.J->push_back(tokens(val));
            block = Block::J;
        } else if (key == "symplectic") {
            doc.symplectic = val;
        } else if (key == "dcomplex") {
            if (!val.empty()) doc.dcomplex_signs = val;
            else block = Block::DComplex;
        } else if (key == "metric_frame") {
            doc.metric_frame.emplace();
            if (!val.empty()) doc.metric_frame->push_back(tokens(val));
            block = Block::Frame;
        }
    }
    if (!have_algebra) throw ParseError("no algebra block (need 'algebra: (...)' or a 'complex N' header)");
    if (doc.dcomplex_plus.has_value() != doc.dcomplex_minus.has_value())
        throw ParseError("dcomplex block needs both 'plus:' and 'minus:' lines");
    return doc;
}

Problem build_problem(const InputDocument& doc, const Params& overrides) {
    Params params = doc.params;
    for (const auto& [k, v] : overrides) params[k] = v;
    Problem p;
    p.name = doc.name.empty() ? "input" : doc.name;
    p.params = params;
    if (doc.presentation == Presentation::ComplexCoframe) {
        if (doc.J || doc.symplectic || doc.dcomplex_signs || doc.dcomplex_plus || doc.metric_frame)
            throw ValidationError("structure blocks need a real presentation; the complex coframe already fixes J");
        p.g = parse_complex_coframe(doc.algebra_text, params, p.name);
        p.g.validate();
        auto cs = from_coframe(p.g, p.name);
        p.real_g = cs.real;
        p.complex.push_back({"J", std::move(cs)});
        return p;
    }
    LieAlgebra g = parse_salamon(doc.algebra_text, params, p.name);
    g.validate();
    int m = g.dim();
    // Rewrite everything in the declared orthonormal coframe f = M e.
    std::optional<Matrix> M, Minv;
    std::vector<Form> images;
    if (doc.metric_frame) {
        M = square_matrix(*doc.metric_frame, m, "metric_frame");
        if (!M->is_real()) throw ValidationError("metric_frame must be real");
        Minv = inverse(*M);
        if (!Minv) throw ValidationError("metric_frame rows are linearly dependent");
        for (int j = 0; j < m; ++j) {
            Form f(m);
            for (int k = 0; k < m; ++k) f += Form::basis1(m, k + 1, Minv->at(j, k));
            images.push_back(f);
        }
        std::vector<Form> de;
        for (int i = 0; i < m; ++i) {
            Form x(m);
            for (int j = 0; j < m; ++j) x += M->at(i, j) * g.de(j + 1);
            de.push_back(substitute(x, images, m));
        }
        g = LieAlgebra(p.name, de);
        g.params = params;
        g.validate();
    }
    auto frame_matrix = [&](const Matrix& A) { return M ? (*M) * A * (*Minv) : A; };
    p.g = g;
    p.real_g = g;
    if (doc.J) p.complex.push_back({"J", from_J_matrix(g, frame_matrix(square_matrix(*doc.J, m, "J")), p.name)});
    if (doc.symplectic) {
        Form w = parse_form(*doc.symplectic, m, params);
        if (M) w = substitute(w, images, m);
        if (w.degree() != 2 || !w.is_real()) throw ValidationError("symplectic form must be a real 2-form");
        if (!g.d(w).is_zero()) throw ValidationError("symplectic form is not closed: d omega = " + g.d(w).str());
        if (m % 2 || power(w, m / 2).is_zero()) throw ValidationError("symplectic form is degenerate");
        p.omega = w;
    }
    if (doc.dcomplex_signs) {
        auto sg = parse_signs(*doc.dcomplex_signs);
        if (static_cast<int>(sg.size()) != m)
            throw ValidationError("dcomplex sign string has " + std::to_string(sg.size()) + " entries, expected " + std::to_string(m));
        Matrix K(m, m);
        for (int i = 0; i < m; ++i) K.set(i, i, Scalar(sg[i]));
        p.dcomplex = from_K_matrix(g, frame_matrix(K));
    } else if (doc.dcomplex_plus) {
        std::vector<std::string> pr, mr;
        for (const auto& v : *doc.dcomplex_plus) {
            std::string s;
            for (const auto& t : v) s += t + " ";
            pr.push_back(s);
        }
        for (const auto& v : *doc.dcomplex_minus) {
            std::string s;
            for (const auto& t : v) s += t + " ";
            mr.push_back(s);
        }
        auto plus = vectors(pr, m, "dcomplex plus"), minus = vectors(mr, m, "dcomplex minus");
        if (M) {
            for (auto& v : plus) v = M->apply(v);
            for (auto& v : minus) v = M->apply(v);
        }
        p.dcomplex = from_splitting(g, plus, minus);
    }
    return p;
}

Problem problem_from_catalog(const std::string& name, const Params& params) {
    auto e = catalog(name, params);
    Problem p;
    p.name = e.name;
    p.g = e.g;
    p.real_g = e.real_g;
    p.complex = e.complex;
    p.omega = e.omega;
    p.dcomplex = e.dcomplex;
    p.params = params;
    p.completely_solvable_pinned = e.g.pinned_completely_solvable.has_value();
    return p;
}

std::pair<std::string, Scalar> parse_param(const std::string& text) {
    auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("--param expects NAME=VALUE, got '" + text + "'");
    return {trim(text.substr(0, eq)), scalar_token(trim(text.substr(eq + 1)), "--param " + text)};
}

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = {"validate", "betti",   "hodge",    "bottchern", "aeppli",
                                                   "varouchas", "frolicher", "deldelbar", "harmonic", "lizhang",
                                                   "symplectic", "dcomplex", "massey", "tables", "sweep", "catalog"};
    return names;
}

Json execute(const std::string& command, const Problem& p, const Options& opt) {
    check_field(opt.field);
    if (command == "validate") return cmd_validate(p);
    if (command == "betti") return cmd_betti(p, opt);
    if (command == "hodge" || command == "bottchern" || command == "aeppli") return cmd_table(command, p, opt);
    if (command == "tables") return cmd_tables(p, opt);
    if (command == "varouchas") return cmd_varouchas(p, opt);
    if (command == "frolicher") return cmd_frolicher(p, opt);
    if (command == "deldelbar") return cmd_deldelbar(p, opt);
    if (command == "harmonic") return cmd_harmonic(p, opt);
    if (command == "lizhang") return cmd_lizhang(p, opt);
    if (command == "symplectic") return cmd_symplectic(p, opt);
    if (command == "dcomplex") return cmd_dcomplex(p, opt);
    if (command == "massey") return cmd_massey(p, opt);
    throw UnknownEntry("unknown command '" + command + "'");
}

std::string render_markdown(const Json& doc) { return render_body(doc); }

std::string render(const Json& doc, const std::string& format) {
    if (format == "json") return doc.dump(2) + "\n";
    return render_markdown(doc);
}

Outcome run(const std::string& command, const Options& opt) {
    Outcome out;
    try {
        if (opt.format != "md" && opt.format != "json") throw ParseError("unknown format '" + opt.format + "' (use md or json)");
        check_field(opt.field);
        auto words = split(command, ' ');
        words.erase(std::remove(words.begin(), words.end(), std::string()), words.end());
        if (words.empty()) throw UnknownEntry("no command given");
        const std::string& head = words.front();
        if (std::find(command_names().begin(), command_names().end(), head) == command_names().end())
            throw UnknownEntry("unknown command '" + head + "'");
        if (head != "catalog" && words.size() > 1) throw UnknownEntry("unexpected word '" + words[1] + "' after " + head);
        if (head == "catalog") {
            std::string sub = words.size() > 1 ? words[1] : "";
            if (sub != "run" && sub != "list") throw UnknownEntry("unknown catalog subcommand '" + sub + "' (use run or list)");
            out.document = run_catalog(sub, opt);
            if (sub == "run" && !out.document["all_passed"].get<bool>()) out.exit_code = kMismatch;
        } else if (head == "sweep") {
            out.document = run_sweep(opt);
            for (const auto& pt : out.document["points"])
                if (pt.contains("error")) out.exit_code = kValidation;
        } else {
            out.document = execute(head, resolve(opt), opt);
        }
        out.output = render(out.document, opt.format);
    } catch (const ParseError& e) {
        out.exit_code = kParse;
        out.error = std::string("parse error: ") + e.what();
    } catch (const ValidationError& e) {
        out.exit_code = kValidation;
        out.error = std::string("validation error: ") + e.what();
    } catch (const UnknownEntry& e) {
        out.exit_code = kUnknown;
        out.error = std::string("unknown: ") + e.what();
    } catch (const std::exception& e) {
        out.exit_code = kValidation;
        out.error = std::string("error: ") + e.what();
    }
    return out;
}

}  // namespace lc::cli
