#include "liecohom/lie.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lc {

namespace {

// Unicode minus and superscript digits appear in hand-copied structure equations.
std::string normalize(std::string_view in) {
    static const std::pair<const char*, const char*> subs[] = {
        {"\xE2\x88\x92", "-"},  {"\xE2\x81\xB0", "^0"}, {"\xC2\xB9", "^1"},     {"\xC2\xB2", "^2"},
        {"\xC2\xB3", "^3"},     {"\xE2\x81\xB4", "^4"}, {"\xE2\x81\xB5", "^5"}, {"\xE2\x81\xB6", "^6"},
        {"\xE2\x81\xB7", "^7"}, {"\xE2\x81\xB8", "^8"}, {"\xE2\x81\xB9", "^9"},
    };
    std::string s(in);
    for (const auto& [from, to] : subs) {
        std::string f(from);
        for (size_t p = s.find(f); p != std::string::npos; p = s.find(f, p)) s.replace(p, f.size(), to);
    }
    return s;
}

struct Piece {
    std::string text;
    size_t pos;
};

std::string strip(const std::string& s, size_t& offset) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    offset += a;
    return s.substr(a, b - a);
}

std::string remove_spaces(const std::string& s) {
    std::string o;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) o += c;
    return o;
}

// Split at top-level occurrences of sep (outside parentheses).
std::vector<Piece> split_top(const std::string& s, size_t base, char sep) {
    std::vector<Piece> out;
    int depth = 0;
    size_t start = 0;
    for (size_t k = 0; k <= s.size(); ++k) {
        if (k == s.size() || (s[k] == sep && depth == 0)) {
            out.push_back({s.substr(start, k - start), base + start});
            start = k + 1;
        } else if (s[k] == '(') {
            ++depth;
        } else if (s[k] == ')') {
            --depth;
        }
    }
    return out;
}

// Split a signed sum into (sign, term) pieces at top-level + and -.
std::vector<std::pair<int, Piece>> split_terms(const std::string& s, size_t base) {
    std::vector<std::pair<int, Piece>> out;
    int depth = 0;
    int sign = 1;
    size_t start = 0;
    for (size_t k = 0; k <= s.size(); ++k) {
        char c = k < s.size() ? s[k] : '\0';
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (k < s.size() && !(depth == 0 && (c == '+' || c == '-'))) continue;
        size_t off = base + start;
        std::string t = strip(s.substr(start, k - start), off);
        if (t.empty()) {
            bool leading_sign = out.empty() && k < s.size() && start == 0;
            if (!leading_sign) throw ParseError("missing term", base + k);
        } else {
            out.push_back({sign, {t, off}});
        }
        sign = (c == '-') ? -1 : 1;
        start = k + 1;
    }
    return out;
}

bool is_ident(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

Scalar parse_coeff(const std::string& raw, size_t pos, const Params& params) {
    std::string c = remove_spaces(raw);
    if (is_ident(c) && c != "i") {
        auto it = params.find(c);
        if (it == params.end()) throw ParseError("unbound parameter '" + c + "'", pos);
        return it->second;
    }
    try {
        return Scalar::parse(c);
    } catch (const std::exception&) {
        throw ParseError("bad coefficient '" + c + "'", pos);
    }
}

int parse_int(const std::string& s, size_t pos) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("expected integer, got '" + s + "'", pos);
    if (s.size() > 6) throw ParseError("integer too large", pos);
    return std::stoi(s);
}

std::pair<int, int> parse_pair(const std::string& raw, size_t pos) {
    std::string s = remove_spaces(raw);
    auto dot = s.find('.');
    int i, j;
    if (dot != std::string::npos) {
        i = parse_int(s.substr(0, dot), pos);
        j = parse_int(s.substr(dot + 1), pos + dot + 1);
    } else {
        if (s.size() != 2 || !std::isdigit(static_cast<unsigned char>(s[0])) || !std::isdigit(static_cast<unsigned char>(s[1])))
            throw ParseError("expected index pair, got '" + s + "'", pos);
        i = s[0] - '0';
        j = s[1] - '0';
    }
    if (i < 1 || j < 1) throw ParseError("indices are 1-based", pos);
    if (i >= j) throw ParseError("index pair must be increasing: '" + s + "'", pos);
    return {i, j};
}

// Monomial index list: "136", "1.2.10", optionally written e136, e^{136}.
std::vector<int> parse_monomial(const std::string& raw, size_t pos) {
    std::string s = remove_spaces(raw);
    if (!s.empty() && s[0] == 'e') s = s.substr(1);
    if (!s.empty() && s[0] == '^') s = s.substr(1);
    if (s.size() >= 2 && s.front() == '{' && s.back() == '}') s = s.substr(1, s.size() - 2);
    if (s.empty()) throw ParseError("empty monomial", pos);
    std::vector<int> idx;
    if (s.find('.') != std::string::npos) {
        size_t start = 0;
        for (size_t k = 0; k <= s.size(); ++k)
            if (k == s.size() || s[k] == '.') {
                idx.push_back(parse_int(s.substr(start, k - start), pos + start));
                start = k + 1;
            }
    } else {
        for (size_t k = 0; k < s.size(); ++k) {
            if (!std::isdigit(static_cast<unsigned char>(s[k]))) throw ParseError("bad monomial '" + raw + "'", pos);
            idx.push_back(s[k] - '0');
        }
    }
    for (int i : idx)
        if (i < 1) throw ParseError("indices are 1-based", pos);
    return idx;
}

}  // namespace

Form parse_form(std::string_view text, int dim, const Params& params) {
    std::string s = normalize(text);
    size_t off = 0;
    std::string t = strip(s, off);
    Form f(dim);
    if (t.empty()) throw ParseError("empty form", off);
    if (remove_spaces(t) == "0") return f;
    for (const auto& [sign, term] : split_terms(t, off)) {
        auto star = term.text.find('*');
        Scalar c(1);
        std::string mono = term.text;
        size_t mpos = term.pos;
        if (star != std::string::npos) {
            c = parse_coeff(term.text.substr(0, star), term.pos, params);
            mono = term.text.substr(star + 1);
            mpos = term.pos + star + 1;
        }
        auto idx = parse_monomial(mono, mpos);
        for (int i : idx)
            if (i > dim) throw ParseError("index " + std::to_string(i) + " out of range for dimension " + std::to_string(dim), mpos);
        // sort with sign
        int sg = sign;
        for (size_t a = 0; a < idx.size(); ++a)
            for (size_t b = a + 1; b < idx.size(); ++b) {
                if (idx[a] == idx[b]) throw ParseError("repeated index in monomial", mpos);
                if (idx[a] > idx[b]) sg = -sg;
            }
        f.add(mask_of(idx), sg > 0 ? c : -c);
    }
    return f;
}

// ---------- LieAlgebra ----------

LieAlgebra::LieAlgebra(std::string name, std::vector<Form> de, Presentation p)
    : name_(std::move(name)), de_(std::move(de)), pres_(p) {
    for (const auto& f : de_) {
        if (f.ambient() != dim()) throw ValidationError("structure form has wrong ambient dimension");
        if (!f.is_zero() && f.degree() != 2) throw ValidationError("structure forms must be 2-forms");
    }
    if (p == Presentation::ComplexCoframe && dim() % 2) throw ValidationError("complex coframe needs an even number of generators");
    if (p == Presentation::Real)
        for (const auto& f : de_)
            if (!f.is_real()) throw ValidationError("real presentation with non-real structure constants");
}

Field LieAlgebra::field() const { return pres_ == Presentation::Real ? Field::Q : Field::QI; }

void LieAlgebra::validate() const {
    for (int k = 1; k <= dim(); ++k) {
        Form dd = d(de(k));
        if (!dd.is_zero()) throw ValidationError("not a Lie algebra: d^2 e^" + std::to_string(k) + " = " + dd.str() + " != 0");
    }
}

Form LieAlgebra::d(const Form& a) const {
    Form out(dim());
    for (const auto& [m, c] : a.terms()) {
        auto idx = mask_indices(m);
        for (size_t p = 0; p < idx.size(); ++p) {
            Mask bit = Mask(1) << (idx[p] - 1);
            Mask before = m & (bit - 1);
            Mask after = m & ~(bit | (bit - 1));
            for (const auto& [m2, c2] : de_[idx[p] - 1].terms()) {
                if (m2 & (before | after)) continue;
                int s = wedge_sign(before, m2) * wedge_sign(before | m2, after) * (p % 2 ? -1 : 1);
                out.add(before | m2 | after, s > 0 ? c * c2 : -(c * c2));
            }
        }
    }
    return out;
}

GradedOperator LieAlgebra::differential() const {
    return operator_from_rule(dim(), 1, [&](Mask m) { return d(Form::mono(dim(), m)); });
}

SVec LieAlgebra::bracket(int i, int j) const {
    if (i == j) return {};
    int a = std::min(i, j), b = std::max(i, j);
    Mask m = (Mask(1) << (a - 1)) | (Mask(1) << (b - 1));
    SVec out;
    for (int k = 1; k <= dim(); ++k) {
        Scalar c = de(k).coeff(m);
        if (!c.is_zero()) out.emplace_back(k - 1, i < j ? -c : c);
    }
    return out;
}

SVec LieAlgebra::bracket(const SVec& x, const SVec& y) const {
    SVec out;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y)
            if (i != j) out = sv_axpy(out, a * b, bracket(i + 1, j + 1));
    return out;
}

Matrix LieAlgebra::ad(const SVec& x) const {
    Matrix m(dim(), dim());
    for (int j = 0; j < dim(); ++j) {
        SVec col = bracket(x, SVec{Entry(j, Scalar(1))});
        for (const auto& [i, v] : col) m.set(i, j, v);
    }
    return m;
}

namespace {

std::string pair_text(int n, Mask m) {
    auto idx = mask_indices(m);
    if (n <= 9) return std::to_string(idx[0]) + std::to_string(idx[1]);
    return std::to_string(idx[0]) + "." + std::to_string(idx[1]);
}

std::string coeff_prefix(const Scalar& c, bool first, std::string& out) {
    // Returns the coefficient text (without sign) and appends the sign to out.
    bool compound = !c.is_real() && sgn(c.re()) != 0;
    std::string cs = c.str();
    bool neg = !compound && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (first) out += neg ? "-" : "";
    else out += neg ? "-" : "+";
    if (compound) cs = "(" + cs + ")";
    return cs == "1" ? "" : cs + "*";
}

}  // namespace

std::string LieAlgebra::salamon() const {
    std::vector<std::string> entries;
    for (const auto& f : de_) {
        if (f.is_zero()) {
            entries.push_back("0");
            continue;
        }
        std::string e;
        bool first = true;
        for (const auto& [m, c] : f.terms()) {
            std::string cp = coeff_prefix(c, first, e);
            e += cp + pair_text(dim(), m);
            first = false;
        }
        entries.push_back(e);
    }
    std::string out = "(";
    for (size_t k = 0; k < entries.size();) {
        size_t run = 1;
        while (entries[k] == "0" && k + run < entries.size() && entries[k + run] == "0") ++run;
        if (k) out += ",";
        if (entries[k] == "0" && run > 1) {
            out += "0^" + std::to_string(run);
            k += run;
        } else {
            out += entries[k];
            ++k;
        }
    }
    return out + ")";
}

std::string LieAlgebra::coframe_text() const {
    int n = complex_rank();
    std::ostringstream os;
    os << "complex " << n;
    for (int j = 1; j <= n; ++j) {
        os << "\nd f" << j << " = ";
        const Form& f = de(j);
        if (f.is_zero()) {
            os << "0";
            continue;
        }
        std::string e;
        bool first = true;
        for (const auto& [m, c] : f.terms()) {
            std::string cp = coeff_prefix(c, first, e);
            std::string units;
            for (int i : mask_indices(m)) units += (i <= n ? "f" + std::to_string(i) : "F" + std::to_string(i - n));
            e += cp + units;
            first = false;
        }
        os << e;
    }
    return os.str();
}

// ---------- parsers ----------

LieAlgebra parse_salamon(std::string_view text, const Params& params, std::string name) {
    std::string s = normalize(text);
    size_t off = 0;
    std::string t = strip(s, off);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')') throw ParseError("structure equations must be enclosed in parentheses", off);
    std::string body = t.substr(1, t.size() - 2);
    struct Raw {
        int sign;
        Scalar coeff;
        int i, j;
        size_t pos;
    };
    std::vector<std::vector<Raw>> entries;
    for (const auto& piece : split_top(body, off + 1, ',')) {
        size_t p = piece.pos;
        std::string e = strip(piece.text, p);
        if (e.empty()) throw ParseError("empty entry", p);
        std::string compact = remove_spaces(e);
        if (compact == "0") {
            entries.emplace_back();
            continue;
        }
        if (compact.rfind("0^", 0) == 0) {
            int rep = parse_int(compact.substr(2), p + 2);
            if (rep < 1) throw ParseError("zero repeat must be positive", p);
            for (int r = 0; r < rep; ++r) entries.emplace_back();
            continue;
        }
        std::vector<Raw> terms;
        for (const auto& [sign, term] : split_terms(e, p)) {
            auto star = term.text.find('*');
            Scalar c(1);
            std::string pair = term.text;
            size_t ppos = term.pos;
            if (star != std::string::npos) {
                c = parse_coeff(term.text.substr(0, star), term.pos, params);
                pair = term.text.substr(star + 1);
                ppos = term.pos + star + 1;
            }
            auto [i, j] = parse_pair(pair, ppos);
            terms.push_back({sign, c, i, j, ppos});
        }
        entries.push_back(std::move(terms));
    }
    int m = static_cast<int>(entries.size());
    if (m > 20) throw ParseError("dimension above 20 is not supported", off);
    std::vector<Form> de;
    for (const auto& terms : entries) {
        Form f(m);
        for (const auto& r : terms) {
            if (r.j > m) throw ParseError("index " + std::to_string(r.j) + " out of range for dimension " + std::to_string(m), r.pos);
            if (!r.coeff.is_real()) throw ParseError("complex coefficient in a real structure equation", r.pos);
            f.add(mask_of({r.i, r.j}), r.sign > 0 ? r.coeff : -r.coeff);
        }
        de.push_back(std::move(f));
    }
    LieAlgebra g(std::move(name), std::move(de), Presentation::Real);
    g.params = params;
    g.validate();
    return g;
}

LieAlgebra parse_complex_coframe(std::string_view text, const Params& params, std::string name) {
    std::string s = normalize(text);
    for (char& c : s)
        if (c == ';') c = '\n';
    std::vector<Piece> lines;
    {
        size_t start = 0;
        for (size_t k = 0; k <= s.size(); ++k)
            if (k == s.size() || s[k] == '\n') {
                size_t p = start;
                std::string l = strip(s.substr(start, k - start), p);
                if (!l.empty() && l[0] != '#') lines.push_back({l, p});
                start = k + 1;
            }
    }
    if (lines.empty()) throw ParseError("empty complex coframe", 0);
    std::string head = remove_spaces(lines[0].text);
    if (head.rfind("complex", 0) != 0) throw ParseError("expected 'complex N' header", lines[0].pos);
    int n = parse_int(head.substr(7), lines[0].pos + 7);
    if (n < 1 || n > 10) throw ParseError("complex rank must be between 1 and 10", lines[0].pos);
    std::vector<Form> de(2 * n, Form(2 * n));
    std::vector<bool> seen(n, false);
    for (size_t li = 1; li < lines.size(); ++li) {
        const auto& L = lines[li];
        auto eq = L.text.find('=');
        if (eq == std::string::npos) throw ParseError("expected 'd fJ = ...'", L.pos);
        std::string lhs = remove_spaces(L.text.substr(0, eq));
        if (lhs.empty() || lhs[0] != 'd') throw ParseError("expected 'd' on the left-hand side", L.pos);
        lhs = lhs.substr(1);
        if (!lhs.empty() && lhs[0] == 'F') throw ParseError("only d f^j lines are accepted; conjugates are derived", L.pos);
        if (!lhs.empty() && lhs[0] == 'f') lhs = lhs.substr(1);
        int j = parse_int(lhs, L.pos + 1);
        if (j < 1 || j > n) throw ParseError("generator index out of range", L.pos);
        if (seen[j - 1]) throw ParseError("generator defined twice", L.pos);
        seen[j - 1] = true;
        size_t rp = L.pos + eq + 1;
        std::string rhs = strip(L.text.substr(eq + 1), rp);
        if (remove_spaces(rhs) == "0") continue;
        Form f(2 * n);
        for (const auto& [sign, term] : split_terms(rhs, rp)) {
            std::string t = remove_spaces(term.text);
            // coefficient ends at the last '*' before the units
            auto star = t.rfind('*');
            Scalar c(1);
            std::string units = t;
            if (star != std::string::npos) {
                c = parse_coeff(t.substr(0, star), term.pos, params);
                units = t.substr(star + 1);
            }
            std::vector<int> idx;
            size_t k = 0;
            while (k < units.size()) {
                char u = units[k];
                if (u != 'f' && u != 'F') throw ParseError("expected f or F unit in '" + units + "'", term.pos);
                size_t e = k + 1;
                while (e < units.size() && std::isdigit(static_cast<unsigned char>(units[e]))) ++e;
                int v = parse_int(units.substr(k + 1, e - k - 1), term.pos + k);
                if (v < 1 || v > n) throw ParseError("unit index out of range", term.pos + k);
                idx.push_back(u == 'f' ? v : v + n);
                k = e;
            }
            if (idx.size() != 2) throw ParseError("each term must be a product of two units", term.pos);
            if (idx[0] == idx[1]) continue;
            int sg = idx[0] < idx[1] ? 1 : -1;
            Mask mk = mask_of({idx[0], idx[1]});
            f.add(mk, (sign * sg) > 0 ? c : -c);
        }
        de[j - 1] = f;
    }
    std::vector<int> perm(2 * n);
    for (int j = 0; j < n; ++j) {
        perm[j] = j + n;
        perm[j + n] = j;
    }
    for (int j = 0; j < n; ++j) de[j + n] = conjugate_form(de[j], perm);
    LieAlgebra g(std::move(name), std::move(de), Presentation::ComplexCoframe);
    g.params = params;
    g.validate();
    return g;
}

LieAlgebra real_model(const LieAlgebra& cx) {
    if (!cx.is_complex_coframe()) return cx;
    int n = cx.complex_rank();
    int m = 2 * n;
    std::vector<Form> img;
    for (int j = 1; j <= n; ++j) img.push_back(Form::basis1(m, j) + Form::basis1(m, j + n, Scalar::i()));
    for (int j = 1; j <= n; ++j) img.push_back(Form::basis1(m, j) - Form::basis1(m, j + n, Scalar::i()));
    std::vector<Form> de(m, Form(m));
    for (int j = 1; j <= n; ++j) {
        Form D = substitute(cx.de(j), img, m);
        Form re(m), im(m);
        for (const auto& [mk, c] : D.terms()) {
            re.add(mk, Scalar(c.re()));
            im.add(mk, Scalar(c.im()));
        }
        de[j - 1] = re;
        de[j + n - 1] = im;
    }
    LieAlgebra g(cx.name(), std::move(de), Presentation::Real);
    g.params = cx.params;
    g.pinned_completely_solvable = cx.pinned_completely_solvable;
    g.validate();
    return g;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b, std::string name) {
    if (a.is_complex_coframe() || b.is_complex_coframe()) throw ValidationError("direct sum needs real presentations");
    int m = a.dim() + b.dim();
    std::vector<Form> ia, ib;
    for (int i = 1; i <= a.dim(); ++i) ia.push_back(Form::basis1(m, i));
    for (int i = 1; i <= b.dim(); ++i) ib.push_back(Form::basis1(m, a.dim() + i));
    std::vector<Form> de;
    for (const auto& f : a.de()) de.push_back(substitute(f, ia, m));
    for (const auto& f : b.de()) de.push_back(substitute(f, ib, m));
    LieAlgebra g(name.empty() ? a.name() + "+" + b.name() : name, std::move(de));
    g.validate();
    return g;
}

// ---------- polynomials and flags ----------

namespace {

using Poly = std::vector<mpq_class>;  // low to high

void trim(Poly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Poly rem(Poly a, const Poly& b) {
    trim(a);
    int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        mpq_class f = a.back() / b.back();
        int shift = static_cast<int>(a.size()) - 1 - db;
        for (int k = 0; k <= db; ++k) a[k + shift] -= f * b[k];
        a.pop_back();
        trim(a);
    }
    return a;
}

Poly divide(Poly a, const Poly& b) {
    trim(a);
    int db = static_cast<int>(b.size()) - 1;
    int da = static_cast<int>(a.size()) - 1;
    if (da < db) return {};
    Poly q(da - db + 1);
    for (int s = da - db; s >= 0; --s) {
        mpq_class f = a[s + db] / b.back();
        q[s] = f;
        for (int k = 0; k <= db; ++k) a[k + s] -= f * b[k];
    }
    return q;
}

Poly deriv(const Poly& p) {
    Poly d;
    for (size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
    trim(d);
    return d;
}

Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

int sign_changes(const std::vector<int>& s) {
    int c = 0, last = 0;
    for (int v : s) {
        if (v == 0) continue;
        if (last && v != last) ++c;
        last = v;
    }
    return c;
}

}  // namespace

bool all_roots_real(const std::vector<mpq_class>& poly) {
    Poly p = poly;
    trim(p);
    if (p.size() <= 1) return true;
    Poly q = divide(p, gcd(p, deriv(p)));
    trim(q);
    int deg = static_cast<int>(q.size()) - 1;
    if (deg <= 1) return true;
    std::vector<Poly> seq{q, deriv(q)};
    while (true) {
        Poly r = rem(seq[seq.size() - 2], seq.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        seq.push_back(r);
    }
    std::vector<int> at_pos, at_neg;
    for (const auto& s : seq) {
        int lead = sgn(s.back());
        int d = static_cast<int>(s.size()) - 1;
        at_pos.push_back(lead);
        at_neg.push_back(d % 2 ? -lead : lead);
    }
    return sign_changes(at_neg) - sign_changes(at_pos) == deg;
}

std::vector<mpq_class> char_poly(const Matrix& a) {
    if (a.rows != a.cols) throw std::invalid_argument("char_poly of non-square matrix");
    int n = a.rows;
    std::vector<std::vector<mpq_class>> A(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i)
        for (const auto& [j, v] : a.r[i]) {
            if (!v.is_real()) throw std::invalid_argument("char_poly needs a rational matrix");
            A[i][j] = v.re();
        }
    // Faddeev-LeVerrier
    Poly c(n + 1);
    c[n] = 1;
    std::vector<std::vector<mpq_class>> M(n, std::vector<mpq_class>(n));
    for (int k = 1; k <= n; ++k) {
        std::vector<std::vector<mpq_class>> AM(n, std::vector<mpq_class>(n));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                if (sgn(A[i][l]) == 0) continue;
                for (int j = 0; j < n; ++j) AM[i][j] += A[i][l] * M[l][j];
            }
        for (int i = 0; i < n; ++i) AM[i][i] += c[n - k + 1];
        M = AM;
        mpq_class tr = 0;
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) tr += A[i][l] * M[l][i];
        c[n - k] = -tr / k;
    }
    return c;
}

StructureFlags structure_flags(const LieAlgebra& g0) {
    LieAlgebra g = real_model(g0);
    int m = g.dim();
    StructureFlags f;
    auto bracket_span = [&](const Subspace& a, const Subspace& b) {
        std::vector<SVec> v;
        for (const auto& x : a.basis())
            for (const auto& y : b.basis()) v.push_back(g.bracket(x, y));
        return Subspace::span(m, v);
    };
    Subspace full = Subspace::full(m);
    // lower central series
    Subspace cur = full;
    int step = 0;
    while (cur.dim() > 0) {
        Subspace next = bracket_span(full, cur);
        ++step;
        if (next == cur) {
            step = 0;
            break;
        }
        cur = next;
    }
    f.nilpotent = m == 0 || cur.dim() == 0;
    f.nilpotency_step = f.nilpotent ? step : 0;
    // derived series
    cur = full;
    while (cur.dim() > 0) {
        Subspace next = bracket_span(cur, cur);
        if (next == cur) break;
        cur = next;
    }
    f.solvable = cur.dim() == 0;
    // unimodularity by traces and by Koszul
    f.unimodular = true;
    for (int i = 0; i < m; ++i) {
        Matrix a = g.ad(SVec{Entry(i, Scalar(1))});
        Scalar tr;
        for (int j = 0; j < m; ++j) tr += a.at(j, j);
        if (!tr.is_zero()) f.unimodular = false;
    }
    f.unimodular_koszul = m == 0 || g.differential().block(m - 1).is_zero();
    if (g.pinned_completely_solvable) {
        f.completely_solvable = *g.pinned_completely_solvable;
        f.completely_solvable_pinned = true;
    } else if (f.nilpotent) {
        f.completely_solvable = true;
    } else if (!f.solvable) {
        f.completely_solvable = false;
    } else {
        bool ok = true;
        for (int i = 0; i < m && ok; ++i)
            for (int j = i; j < m && ok; ++j) {
                SVec x{Entry(i, Scalar(1))};
                if (j != i) x.emplace_back(j, Scalar(1));
                ok = all_roots_real(char_poly(g.ad(x)));
            }
        f.completely_solvable = ok;
    }
    return f;
}

}  // namespace lc
