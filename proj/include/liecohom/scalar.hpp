#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lc {

enum class Field { Q, QI };

// An element a + b i of Q(i); the real field is the sublocus b = 0.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : re_(v) {}
    Scalar(const mpq_class& re) : re_(re) { re_.canonicalize(); }
    Scalar(const mpq_class& re, const mpq_class& im) : re_(re), im_(im) {
        re_.canonicalize();
        im_.canonicalize();
    }
    static Scalar frac(long num, long den) { return Scalar(mpq_class(num, den)); }
    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }
    Scalar operator-() const { return Scalar(-re_, -im_); }

    Scalar& operator+=(const Scalar& o) {
        re_ += o.re_;
        if (sgn(o.im_) != 0) im_ += o.im_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re_ -= o.re_;
        if (sgn(o.im_) != 0) im_ -= o.im_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // "a/b" or "a/b+c/di"; integers print without denominator.
    std::string str() const;
    // Accepts the output of str() plus "i", "-i", "3i", "(1/2-2i)".
    static Scalar parse(std::string_view text);

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

Scalar conj(const Scalar& s);

}  // namespace lc
