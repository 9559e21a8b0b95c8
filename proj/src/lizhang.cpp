#include "liecohom/lizhang.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lc {

BidegreeSet parse_bidegree_set(std::string_view text) {
    BidegreeSet out;
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
    };
    auto number = [&]() {
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) throw ParseError("expected a digit in bidegree list", i);
        return std::stoi(std::string(text.substr(start, i - start)));
    };
    skip();
    while (i < text.size()) {
        if (text[i] != '(') throw ParseError("expected '(' in bidegree list", i);
        ++i;
        int p = number();
        while (i < text.size() && text[i] == ' ') ++i;
        if (i >= text.size() || text[i] != ',') throw ParseError("expected ',' in bidegree", i);
        ++i;
        while (i < text.size() && text[i] == ' ') ++i;
        int q = number();
        while (i < text.size() && text[i] == ' ') ++i;
        if (i >= text.size() || text[i] != ')') throw ParseError("expected ')' in bidegree", i);
        ++i;
        out.insert({p, q});
        skip();
    }
    if (out.empty()) throw ParseError("empty bidegree list", 0);
    return out;
}

std::string bidegree_set_str(const BidegreeSet& s) {
    std::ostringstream os;
    bool first = true;
    for (auto [p, q] : s) {
        if (!first) os << ",";
        os << "(" << p << "," << q << ")";
        first = false;
    }
    return os.str();
}

namespace {

const LieAlgebra& model(const ComplexStructure& c, CoeffField f) { return f == CoeffField::Real ? c.real : c.cx; }

}  // namespace

DegreeCohomology degree_cohomology(const ComplexStructure& c, int k, CoeffField field) {
    return degree_cohomology(model(c, field).differential(), k);
}

TypeSubgroup type_subgroup(const ComplexStructure& c, const DegreeCohomology& h, const BidegreeSet& S, CoeffField field) {
    int n = c.n, k = h.k;
    for (auto [p, q] : S) {
        if (p + q != k || p < 0 || q < 0) throw ValidationError("bidegree (" + std::to_string(p) + "," + std::to_string(q) +
                                                                ") does not have total degree " + std::to_string(k));
        if (field == CoeffField::Real && !S.count({q, p}))
            throw ValidationError("real coefficients need a conjugation-closed bidegree set");
    }
    int dimk = static_cast<int>(binom(2 * n, k));
    std::vector<int> idx;
    for (auto [p, q] : S) {
        auto v = bidegree_indices(n, p, q);
        idx.insert(idx.end(), v.begin(), v.end());
    }
    std::sort(idx.begin(), idx.end());
    Subspace W;
    if (field == CoeffField::Complex) {
        W = Subspace::coordinate(dimk, idx);
    } else {
        auto cols = c.psi_to_e(k).columns();
        std::vector<SVec> gens;
        for (int i : idx) {
            SVec re, im;
            for (const auto& [j, x] : cols[i]) {
                if (sgn(x.re()) != 0) re.emplace_back(j, Scalar(x.re()));
                if (sgn(x.im()) != 0) im.emplace_back(j, Scalar(x.im()));
            }
            gens.push_back(re);
            gens.push_back(im);
        }
        W = Subspace::span(dimk, gens);
    }
    TypeSubgroup t;
    t.S = S;
    t.k = k;
    t.field = field;
    t.pure_closed = intersect(W, h.closed);
    t.lifted = sum(t.pure_closed, h.exact);
    t.space = classes_of(h, t.pure_closed);
    t.dim = t.space.dim();
    return t;
}

TypeSubgroup type_subgroup(const ComplexStructure& c, const BidegreeSet& S, int k, CoeffField field) {
    return type_subgroup(c, degree_cohomology(c, k, field), S, field);
}

bool class_in_subgroup(const TypeSubgroup& t, const DegreeCohomology& h, const Form& f) {
    return t.space.contains(h.class_vec(f.to_svec(h.k)));
}

bool class_is_zero(const DegreeCohomology& h, const Form& f) {
    SVec v = f.to_svec(h.k);
    if (!h.closed.contains(v)) throw ValidationError("form is not closed");
    return h.exact.contains(v);
}

std::vector<BidegreeSet> stage_blocks(int n, int k) {
    std::vector<BidegreeSet> out;
    for (int p = std::max(0, k - n); 2 * p <= k; ++p) {
        int q = k - p;
        if (q > n) continue;
        out.push_back({{p, q}, {q, p}});
    }
    return out;
}

const PureFullStage& PureFullReport::at(int k) const {
    for (const auto& s : stages)
        if (s.k == k) return s;
    throw std::out_of_range("stage not computed: " + std::to_string(k));
}

PureFullReport pure_full_report(const ComplexStructure& c, const std::vector<int>& ks) {
    PureFullReport rep;
    int m = 2 * c.n;
    for (int k : ks) {
        DegreeCohomology h = degree_cohomology(c, k, CoeffField::Real);
        PureFullStage st;
        st.k = k;
        st.h = h.dim();
        std::vector<TypeSubgroup> subs;
        for (const auto& S : stage_blocks(c.n, k)) {
            subs.push_back(type_subgroup(c, h, S, CoeffField::Real));
            st.blocks.push_back({S, subs.back().dim});
        }
        Subspace total(h.dim());
        int sumdims = 0;
        for (const auto& t : subs) {
            total = sum(total, t.space);
            sumdims += t.dim;
        }
        st.pure = total.dim() == sumdims;
        st.full = total.dim() == h.dim();
        if (!st.pure) {
            for (size_t i = 0; i < subs.size() && !st.pure_witness; ++i) {
                Subspace others(h.dim());
                std::vector<SVec> gens;
                for (size_t j = 0; j < subs.size(); ++j) {
                    if (j == i) continue;
                    others = sum(others, subs[j].space);
                    const auto& b = subs[j].pure_closed.basis();
                    gens.insert(gens.end(), b.begin(), b.end());
                }
                Subspace both = intersect(subs[i].space, others);
                if (both.dim() == 0) continue;
                const SVec& y = both.basis().front();
                auto z1 = lift_class(h, subs[i].pure_closed.basis(), y);
                auto z2 = lift_class(h, gens, y);
                if (!z1 || !z2) throw std::logic_error("pure witness lift failed");
                st.pure_witness = Form::from_svec(m, k, *z1);
                st.pure_witness_other = Form::from_svec(m, k, *z2);
                st.pure_witness_block = subs[i].S;
            }
        }
        if (!st.full) {
            Subspace everything = Subspace::full(h.dim());
            auto out = quotient_basis(everything, total);
            st.full_witness = h.representative(out.front());
        }
        rep.stages.push_back(std::move(st));
    }
    return rep;
}

std::pair<int, int> plus_minus(const ComplexStructure& c) {
    DegreeCohomology h = degree_cohomology(c, 2, CoeffField::Real);
    int plus = type_subgroup(c, h, {{1, 1}}, CoeffField::Real).dim;
    int minus = type_subgroup(c, h, {{2, 0}, {0, 2}}, CoeffField::Real).dim;
    return {plus, minus};
}

namespace {

Matrix omega_matrix(const Form& omega, int m) {
    if (omega.ambient() != m) throw ValidationError("omega lives on the wrong dimension");
    if (!omega.is_zero() && omega.degree() != 2) throw ValidationError("omega must be a 2-form");
    Matrix W(m, m);
    for (const auto& [mk, v] : omega.terms()) {
        auto ix = mask_indices(mk);
        W.set(ix[0] - 1, ix[1] - 1, v);
        W.set(ix[1] - 1, ix[0] - 1, -v);
    }
    return W;
}

}  // namespace

Matrix taming_metric(const Form& omega, const Matrix& J) {
    Matrix W = omega_matrix(omega, J.rows);
    return Scalar::frac(1, 2) * (W * J - J.transpose() * W);
}

bool positive_definite(const Matrix& s) {
    for (int k = 1; k <= s.rows; ++k) {
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        Scalar det = determinant(s.submatrix(idx, idx));
        if (!det.is_real() || sgn(det.re()) <= 0) return false;
    }
    return true;
}

bool is_taming(const Form& omega, const Matrix& J) {
    if (!omega.is_real()) return false;
    return positive_definite(taming_metric(omega, J));
}

bool is_compatible(const Form& omega, const Matrix& J) {
    if (!is_taming(omega, J)) return false;
    Matrix W = omega_matrix(omega, J.rows);
    return J.transpose() * W * J == W;
}

bool is_almost_kahler(const LieAlgebra& g, const Form& omega, const Matrix& J) {
    return g.d(omega).is_zero() && is_compatible(omega, J);
}

std::vector<ImplicationCheck> full_implies_dual_pure(const ComplexStructure& c) {
    int m = 2 * c.n;
    std::vector<int> ks;
    for (int k = 1; k < m; ++k) ks.push_back(k);
    PureFullReport r = pure_full_report(c, ks);
    std::vector<ImplicationCheck> out;
    for (int k = 1; k < m; ++k) out.push_back({k, r.at(k).full, r.at(m - k).pure});
    return out;
}

}  // namespace lc
