#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <sstream>
#include <stdexcept>
#include <string>

namespace eqindex {

using Rational = mpq_class;

/// Gaussian rational a + b*i with exact rational components.
class GRational {
public:
    GRational() : re_(0), im_(0) {}
    GRational(long v) : re_(v), im_(0) {}
    GRational(const Rational& re) : re_(re), im_(0) {}
    GRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
    GRational(long num, long den) : re_(num, den), im_(0) { re_.canonicalize(); }

    static GRational i() { return GRational(Rational(0), Rational(1)); }

    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GRational conj() const { return GRational(re_, -im_); }

    /// Squared modulus; a positive rational unless zero.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GRational operator-() const { return GRational(-re_, -im_); }

    GRational& operator+=(const GRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GRational& operator-=(const GRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GRational& operator*=(const GRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GRational& operator/=(const GRational& o) {
        if (o.is_zero()) throw std::domain_error("GRational: division by zero");
        Rational n = o.norm();
        Rational r = (re_ * o.re_ + im_ * o.im_) / n;
        Rational i = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    friend GRational operator+(GRational a, const GRational& b) { return a += b; }
    friend GRational operator-(GRational a, const GRational& b) { return a -= b; }
    friend GRational operator*(GRational a, const GRational& b) { return a *= b; }
    friend GRational operator/(GRational a, const GRational& b) { return a /= b; }

    friend bool operator==(const GRational& a, const GRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GRational& a, const GRational& b) { return !(a == b); }

    // Total order for use as a map key; not an algebraic order.
    friend bool operator<(const GRational& a, const GRational& b) {
        int c = cmp(a.re_, b.re_);
        if (c != 0) return c < 0;
        return cmp(a.im_, b.im_) < 0;
    }

    std::string str() const {
        std::ostringstream os;
        if (im_ == 0) {
            os << re_;
        } else if (re_ == 0) {
            os << im_ << "i";
        } else {
            os << re_ << (im_ > 0 ? "+" : "") << im_ << "i";
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const GRational& v);

private:
    Rational re_, im_;
};

inline std::ostream& operator<<(std::ostream& os, const GRational& v) { return os << v.str(); }

/// Renders a rational as "p" or "p/q".
inline std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

}  // namespace eqindex
