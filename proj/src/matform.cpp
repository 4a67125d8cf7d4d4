#include "eqindex/matform.hpp"

namespace eqindex {

MatForm mat_mul(const MatForm& a, const MatForm& b) {
    if (a.size() != b.size() || a.dimension() != b.dimension())
        throw std::invalid_argument("mat_mul: size mismatch");
    const int d = a.size();
    MatForm r(d, a.dimension());
    for (int i = 0; i < d; ++i) {
        for (int k = 0; k < d; ++k) {
            const FormPoly& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < d; ++j) {
                const FormPoly& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                r.at(i, j) += wedge(aik, bkj);
            }
        }
    }
    return r;
}

FormPoly mat_trace(const MatForm& a) {
    FormPoly t(a.dimension());
    for (int i = 0; i < a.size(); ++i) t += a.at(i, i);
    return t;
}

FormPoly mat_trace_power(const MatForm& a, int j) {
    if (j < 0) throw std::invalid_argument("mat_trace_power: negative power");
    const int d = a.size();
    if (j == 0) return FormPoly::scalar(a.dimension(), QPiScalar(long(d)));
    if (j == 1) return mat_trace(a);
    if (j == 2) {
        FormPoly t(a.dimension());
        for (int i = 0; i < d; ++i)
            for (int k = 0; k < d; ++k) {
                if (a.at(i, k).is_zero() || a.at(k, i).is_zero()) continue;
                t += wedge(a.at(i, k), a.at(k, i));
            }
        return t;
    }
    MatForm p = a;
    for (int s = 2; s < j; ++s) p = mat_mul(p, a);
    FormPoly t(a.dimension());
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            if (p.at(i, k).is_zero() || a.at(k, i).is_zero()) continue;
            t += wedge(p.at(i, k), a.at(k, i));
        }
    return t;
}

MatForm mat_exp_truncated(const MatForm& a) {
    const int d = a.size();
    const int n = a.dimension();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const FormPoly& e = a.at(i, j);
            if (!e.is_zero() && e.min_degree() < 2)
                throw std::invalid_argument(
                    "mat_exp_truncated: degree-0 entries present, series would not terminate");
        }
    MatForm result = MatForm::identity(d, n);
    MatForm power = MatForm::identity(d, n);
    Rational factorial(1);
    const int jmax = n / 2;
    for (int j = 1; j <= jmax; ++j) {
        power = mat_mul(power, a);
        factorial *= j;
        MatForm term = power;
        term *= QPiScalar(Rational(1) / factorial);
        result += term;
    }
    return result;
}

std::vector<FormPoly> char_poly_even(const MatForm& a) {
    if (!a.is_even())
        throw std::invalid_argument("char_poly_even: entries must be even-degree");
    const int d = a.size();
    const int n = a.dimension();

    // Power traces p_k = tr(A^k), then Newton's identities give the
    // elementary symmetric coefficients e_k of det(I + tA).
    std::vector<FormPoly> ptr;
    ptr.reserve(size_t(d) + 1);
    ptr.emplace_back(FormPoly::scalar(n, QPiScalar(long(d))));
    MatForm power = a;
    for (int k = 1; k <= d; ++k) {
        if (k > 1) power = mat_mul(power, a);
        ptr.push_back(mat_trace(power));
    }

    std::vector<FormPoly> e;
    e.reserve(size_t(d) + 1);
    e.emplace_back(FormPoly::scalar(n, QPiScalar(1)));
    for (int k = 1; k <= d; ++k) {
        FormPoly acc(n);
        int sign = 1;
        for (int i = 1; i <= k; ++i) {
            FormPoly term = wedge(e[size_t(k - i)], ptr[size_t(i)]);
            if (sign < 0) term = -term;
            acc += term;
            sign = -sign;
        }
        acc *= QPiScalar(Rational(1, k));
        e.push_back(std::move(acc));
    }
    return e;
}

}  // namespace eqindex
