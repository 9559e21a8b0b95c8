#include "liecohom/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace lc {

Scalar& Scalar::operator*=(const Scalar& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    if (sgn(o.im_) == 0) {
        re_ /= o.re_;
        if (sgn(im_) != 0) im_ /= o.re_;
        return *this;
    }
    mpq_class n = o.re_ * o.re_ + o.im_ * o.im_;
    Scalar inv(o.re_ / n, -o.im_ / n);
    return *this *= inv;
}

Scalar conj(const Scalar& s) { return s.conj(); }

namespace {

std::string rat_str(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_str();
}

mpq_class parse_rat(std::string_view t) {
    if (t.empty()) throw std::invalid_argument("empty rational");
    std::string s(t);
    if (s[0] == '+') s = s.substr(1);
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace

std::string Scalar::str() const {
    if (sgn(im_) == 0) return rat_str(re_);
    std::string out;
    if (sgn(re_) != 0) out = rat_str(re_);
    if (sgn(im_) > 0 && !out.empty()) out += "+";
    if (im_ == -1) out += "-";
    else if (im_ != 1) out += rat_str(im_);
    out += "i";
    return out;
}

Scalar Scalar::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    if (s.empty()) throw std::invalid_argument("empty scalar");
    if (s.back() != 'i') return Scalar(parse_rat(s));
    // Split real and imaginary parts at the last sign not at position 0.
    std::string body = s.substr(0, s.size() - 1);
    size_t cut = std::string::npos;
    for (size_t k = body.size(); k-- > 1;)
        if (body[k] == '+' || body[k] == '-') {
            cut = k;
            break;
        }
    std::string re_part = cut == std::string::npos ? "" : body.substr(0, cut);
    std::string im_part = cut == std::string::npos ? body : body.substr(cut);
    if (!im_part.empty() && im_part[0] == '+') im_part = im_part.substr(1);
    mpq_class im;
    if (im_part.empty()) im = 1;
    else if (im_part == "-") im = -1;
    else im = parse_rat(im_part);
    mpq_class re = re_part.empty() ? mpq_class(0) : parse_rat(re_part);
    return Scalar(re, im);
}

}  // namespace lc
