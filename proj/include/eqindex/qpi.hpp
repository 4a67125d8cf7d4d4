#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "eqindex/rational.hpp"

namespace eqindex {

/// Exact scalar of the form sum_k c_k * pi^k with Gaussian-rational c_k
/// and integer exponents k (possibly negative).  Zero coefficients are
/// never stored, so equality is map equality.
class QPiScalar {
public:
    QPiScalar() = default;
    QPiScalar(long v) { set_term(0, GRational(v)); }
    QPiScalar(const Rational& v) { set_term(0, GRational(v)); }
    QPiScalar(const GRational& v) { set_term(0, v); }

    /// c * pi^k.
    static QPiScalar pi_power(int k, const GRational& c = GRational(1)) {
        QPiScalar s;
        s.set_term(k, c);
        return s;
    }

    static QPiScalar i() { return QPiScalar(GRational::i()); }

    bool is_zero() const { return terms_.empty(); }

    /// True when the value is a plain real rational (only the pi^0 term,
    /// no imaginary part).
    bool is_reportable() const {
        if (terms_.empty()) return true;
        return terms_.size() == 1 && terms_.begin()->first == 0 &&
               terms_.begin()->second.is_real();
    }

    /// The value as a rational; throws unless is_reportable().
    Rational to_rational() const {
        if (terms_.empty()) return Rational(0);
        if (!is_reportable())
            throw std::domain_error("QPiScalar: value is not a plain rational: " + str());
        return terms_.begin()->second.real();
    }

    const std::map<int, GRational>& terms() const { return terms_; }

    QPiScalar operator-() const {
        QPiScalar r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }

    QPiScalar& operator+=(const QPiScalar& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    QPiScalar& operator-=(const QPiScalar& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    QPiScalar& operator*=(const QPiScalar& o) {
        QPiScalar r;
        for (const auto& [k1, c1] : terms_)
            for (const auto& [k2, c2] : o.terms_) r.add_term(k1 + k2, c1 * c2);
        terms_ = std::move(r.terms_);
        return *this;
    }

    friend QPiScalar operator+(QPiScalar a, const QPiScalar& b) { return a += b; }
    friend QPiScalar operator-(QPiScalar a, const QPiScalar& b) { return a -= b; }
    friend QPiScalar operator*(QPiScalar a, const QPiScalar& b) { return a *= b; }

    /// Division by a nonzero Gaussian rational (scalars only; pi is not
    /// invertible here, use pi_power with a negative exponent instead).
    QPiScalar& operator/=(const GRational& c) {
        if (c.is_zero()) throw std::domain_error("QPiScalar: division by zero");
        for (auto& [k, v] : terms_) v /= c;
        return *this;
    }
    friend QPiScalar operator/(QPiScalar a, const GRational& c) { return a /= c; }

    friend bool operator==(const QPiScalar& a, const QPiScalar& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const QPiScalar& a, const QPiScalar& b) { return !(a == b); }
    friend bool operator<(const QPiScalar& a, const QPiScalar& b) {
        return a.terms_ < b.terms_;
    }

    /// Canonical rendering, e.g. "-1/8", "4*pi", "pi^2/2", "8*pi^2/3".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            std::string t = term_str(k, c);
            if (!first) {
                if (!t.empty() && t[0] == '-') {
                    os << " - " << t.substr(1);
                } else {
                    os << " + " << t;
                }
            } else {
                os << t;
            }
            first = false;
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const QPiScalar& v) {
        return os << v.str();
    }

private:
    void set_term(int k, const GRational& c) {
        if (!c.is_zero()) terms_[k] = c;
    }
    void add_term(int k, const GRational& c) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(k, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    static std::string term_str(int k, const GRational& c) {
        std::ostringstream os;
        if (k == 0 || !c.is_real()) {
            os << c.str();
            if (k != 0) os << "*";
        } else {
            // Real coefficient and a pi power: fold the denominator after
            // the pi factor, "pi^2/2" style.
            Rational r = c.real();
            mpz_class num = r.get_num(), den = r.get_den();
            if (num == -1) {
                os << "-";
            } else if (num != 1) {
                os << num << "*";
            }
            os << "pi";
            if (k != 1) os << "^" << k;
            if (den != 1) os << "/" << den;
            return os.str();
        }
        if (k != 0) {
            os << "pi";
            if (k != 1) os << "^" << k;
        }
        return os.str();
    }

    std::map<int, GRational> terms_;
};

}  // namespace eqindex
