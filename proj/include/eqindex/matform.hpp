#pragma once

#include <stdexcept>
#include <vector>

#include "eqindex/forms.hpp"

namespace eqindex {

/// Square matrix of even-degree forms.  Even degree makes the entries
/// commute, so products, traces, determinants and truncated exponentials
/// are unambiguous.
class MatForm {
public:
    MatForm(int size, int n)
        : size_(size), n_(n), entries_(size_t(size) * size, FormPoly(n)) {
        if (size <= 0) throw std::invalid_argument("MatForm: size must be positive");
    }

    static MatForm identity(int size, int n) {
        MatForm m(size, n);
        for (int i = 0; i < size; ++i) m.at(i, i) = FormPoly::scalar(n, QPiScalar(1));
        return m;
    }

    int size() const { return size_; }
    int dimension() const { return n_; }

    FormPoly& at(int i, int j) { return entries_[size_t(i) * size_ + j]; }
    const FormPoly& at(int i, int j) const { return entries_[size_t(i) * size_ + j]; }

    void set(int i, int j, FormPoly f) {
        if (!f.is_even())
            throw std::invalid_argument("MatForm: entries must have even exterior degree");
        at(i, j) = std::move(f);
    }

    bool is_even() const {
        for (const auto& e : entries_)
            if (!e.is_even()) return false;
        return true;
    }

    MatForm operator-() const {
        MatForm r(size_, n_);
        for (size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = -entries_[k];
        return r;
    }

    MatForm& operator+=(const MatForm& o) {
        check_shape(o);
        for (size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
        return *this;
    }
    MatForm& operator-=(const MatForm& o) {
        check_shape(o);
        for (size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
        return *this;
    }
    MatForm& operator*=(const QPiScalar& s) {
        for (auto& e : entries_) e *= s;
        return *this;
    }

    friend MatForm operator+(MatForm a, const MatForm& b) { return a += b; }
    friend MatForm operator-(MatForm a, const MatForm& b) { return a -= b; }
    friend MatForm operator*(MatForm a, const QPiScalar& s) { return a *= s; }
    friend MatForm operator*(const QPiScalar& s, MatForm a) { return a *= s; }

    friend bool operator==(const MatForm& a, const MatForm& b) {
        return a.size_ == b.size_ && a.n_ == b.n_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const MatForm& a, const MatForm& b) { return !(a == b); }

private:
    void check_shape(const MatForm& o) const {
        if (size_ != o.size_ || n_ != o.n_)
            throw std::invalid_argument("MatForm: size mismatch");
    }

    int size_;
    int n_;
    std::vector<FormPoly> entries_;
};

/// Entrywise wedge-product matrix multiplication.
MatForm mat_mul(const MatForm& a, const MatForm& b);

/// Sum of diagonal entries.
FormPoly mat_trace(const MatForm& a);

/// Trace of the j-th power, computed without materializing high powers.
FormPoly mat_trace_power(const MatForm& a, int j);

/// Truncated exponential sum_{j>=0} A^j / j!.  Terminates because entries
/// of degree >= 2 are nilpotent; requires no degree-0 entries.
MatForm mat_exp_truncated(const MatForm& a);

/// Coefficients of det(I + tA) in t, length size+1, via power traces and
/// Newton's identities over the commutative even subalgebra.
std::vector<FormPoly> char_poly_even(const MatForm& a);

}  // namespace eqindex
