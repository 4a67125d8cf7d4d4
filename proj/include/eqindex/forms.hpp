#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "eqindex/qpi.hpp"

namespace eqindex {

/// Element of the exterior algebra on R^n with QPiScalar coefficients.
/// Monomials are keyed by bitmasks over {e_1,...,e_n}; only sorted index
/// tuples are stored, so anticommutativity is canonical by construction.
class FormPoly {
public:
    using Mask = std::uint32_t;

    explicit FormPoly(int n = 0) : n_(n) {
        if (n < 0 || n > 16) throw std::invalid_argument("FormPoly: bad dimension");
    }

    static FormPoly scalar(int n, const QPiScalar& c) {
        FormPoly f(n);
        f.add_term(0, c);
        return f;
    }

    /// The basis covector e_i (1-based).
    static FormPoly basis(int n, int i) {
        FormPoly f(n);
        if (i < 1 || i > n) throw std::invalid_argument("FormPoly: basis index out of range");
        f.add_term(Mask(1) << (i - 1), QPiScalar(1));
        return f;
    }

    /// Monomial e_{i1} ^ ... ^ e_{ik} for a strictly increasing index list.
    static FormPoly monomial(int n, std::initializer_list<int> idx,
                             const QPiScalar& c = QPiScalar(1)) {
        FormPoly f(n);
        Mask m = 0;
        int prev = 0;
        for (int i : idx) {
            if (i <= prev || i > n)
                throw std::invalid_argument("FormPoly: monomial indices must be increasing");
            m |= Mask(1) << (i - 1);
            prev = i;
        }
        f.add_term(m, c);
        return f;
    }

    int dimension() const { return n_; }
    bool is_zero() const { return comps_.empty(); }
    const std::map<Mask, QPiScalar>& components() const { return comps_; }

    static int degree_of(Mask m) { return std::popcount(m); }

    /// True when every stored monomial has even degree.
    bool is_even() const {
        for (const auto& [m, c] : comps_)
            if (degree_of(m) % 2 != 0) return false;
        return true;
    }

    /// Minimum degree over stored monomials; n+1 when zero.
    int min_degree() const {
        int d = n_ + 1;
        for (const auto& [m, c] : comps_) d = std::min(d, degree_of(m));
        return d;
    }

    QPiScalar coefficient(Mask m) const {
        auto it = comps_.find(m);
        return it == comps_.end() ? QPiScalar() : it->second;
    }

    /// Coefficient of the volume monomial e_1 ^ ... ^ e_n.
    QPiScalar top_coefficient() const {
        return coefficient((Mask(1) << n_) - 1);
    }

    /// Homogeneous part of the given even degree (0 <= degree <= n).
    FormPoly component(int degree) const {
        if (degree < 0 || degree > n_ || degree % 2 != 0)
            throw std::invalid_argument("FormPoly::component: degree must be even and in [0,n]");
        FormPoly r(n_);
        for (const auto& [m, c] : comps_)
            if (degree_of(m) == degree) r.comps_.emplace(m, c);
        return r;
    }

    FormPoly operator-() const {
        FormPoly r(n_);
        for (const auto& [m, c] : comps_) r.comps_.emplace(m, -c);
        return r;
    }

    FormPoly& operator+=(const FormPoly& o) {
        check_dim(o);
        for (const auto& [m, c] : o.comps_) add_term(m, c);
        return *this;
    }
    FormPoly& operator-=(const FormPoly& o) {
        check_dim(o);
        for (const auto& [m, c] : o.comps_) add_term(m, -c);
        return *this;
    }
    FormPoly& operator*=(const QPiScalar& s) {
        if (s.is_zero()) {
            comps_.clear();
            return *this;
        }
        for (auto& [m, c] : comps_) c *= s;
        return *this;
    }

    friend FormPoly operator+(FormPoly a, const FormPoly& b) { return a += b; }
    friend FormPoly operator-(FormPoly a, const FormPoly& b) { return a -= b; }
    friend FormPoly operator*(FormPoly a, const QPiScalar& s) { return a *= s; }
    friend FormPoly operator*(const QPiScalar& s, FormPoly a) { return a *= s; }

    friend bool operator==(const FormPoly& a, const FormPoly& b) {
        return a.n_ == b.n_ && a.comps_ == b.comps_;
    }
    friend bool operator!=(const FormPoly& a, const FormPoly& b) { return !(a == b); }

    /// Graded-commutative exact product.  Overlapping index tuples vanish.
    friend FormPoly wedge(const FormPoly& a, const FormPoly& b) {
        a.check_dim(b);
        FormPoly r(a.n_);
        for (const auto& [ma, ca] : a.comps_) {
            for (const auto& [mb, cb] : b.comps_) {
                if (ma & mb) continue;
                int sgn = merge_sign(ma, mb);
                QPiScalar c = ca * cb;
                if (sgn < 0) c = -c;
                r.add_term(ma | mb, c);
            }
        }
        return r;
    }

    std::string str() const {
        if (comps_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : comps_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c.str() << ")";
            for (int i = 0; i < n_; ++i)
                if (m & (Mask(1) << i)) os << "^e" << (i + 1);
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const FormPoly& f) {
        return os << f.str();
    }

private:
    void check_dim(const FormPoly& o) const {
        if (n_ != o.n_) throw std::invalid_argument("FormPoly: ambient dimension mismatch");
    }

    void add_term(Mask m, const QPiScalar& c) {
        if (c.is_zero()) return;
        auto it = comps_.find(m);
        if (it == comps_.end()) {
            comps_.emplace(m, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) comps_.erase(it);
    }

    // Sign of sorting the concatenation (a, b) of two disjoint sorted
    // tuples: (-1)^{inversions}, counted bitwise.
    static int merge_sign(Mask a, Mask b) {
        int inversions = 0;
        while (b) {
            Mask lowest = b & (~b + 1);
            inversions += std::popcount(a & ~(lowest - 1) & ~lowest);
            b &= b - 1;
        }
        return (inversions % 2 == 0) ? 1 : -1;
    }

    int n_;
    std::map<Mask, QPiScalar> comps_;
};

}  // namespace eqindex
