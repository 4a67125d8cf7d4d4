#include "eqindex/curvature.hpp"

#include <stdexcept>

namespace eqindex {

namespace {

void validate(int n, const std::vector<FormPoly>& entries) {
    if (n < 2 || n > 8 || n % 2 != 0)
        throw std::invalid_argument("CurvatureData: dimension must be even, 2..8");
    if (entries.size() != size_t(n) * size_t(n))
        throw std::invalid_argument("CurvatureData: wrong entry count");
    for (const auto& e : entries) {
        if (e.dimension() != n)
            throw std::invalid_argument("CurvatureData: entry ambient dimension mismatch");
        for (const auto& [m, c] : e.components())
            if (FormPoly::degree_of(m) != 2)
                throw std::invalid_argument("CurvatureData: entries must be homogeneous 2-forms");
    }
}

}  // namespace

CurvatureData::CurvatureData(int n, std::vector<FormPoly> entries)
    : n_(n), entries_(std::move(entries)) {
    validate(n_, entries_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (entry(i, j) != -entry(j, i))
                throw std::invalid_argument("CurvatureData: R_ij = -R_ji violated");
    // First Bianchi identity R_{a[bcd]} = 0 on all stored components.
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c)
                for (int d = 0; d < n_; ++d) {
                    QPiScalar s = component(a, b, c, d);
                    s += component(a, c, d, b);
                    s += component(a, d, b, c);
                    if (!s.is_zero())
                        throw std::invalid_argument(
                            "CurvatureData: first Bianchi identity violated");
                }
}

CurvatureData CurvatureData::from_table(int n, const std::vector<Component>& comps) {
    std::vector<FormPoly> entries(size_t(n) * size_t(n), FormPoly(n));
    for (const auto& c : comps) {
        if (c.k < 1 || c.l < 1 || c.i < 1 || c.j < 1 || c.k > n || c.l > n || c.i > n ||
            c.j > n || c.k >= c.l || c.i >= c.j)
            throw std::invalid_argument(
                "CurvatureData: components need 1 <= k < l <= n, 1 <= i < j <= n");
        FormPoly term = FormPoly::monomial(n, {c.k, c.l}, QPiScalar(Rational(c.value)));
        entries[size_t(c.i - 1) * size_t(n) + size_t(c.j - 1)] += term;
        entries[size_t(c.j - 1) * size_t(n) + size_t(c.i - 1)] -= term;
    }
    return CurvatureData(n, std::move(entries));
}

CurvatureData CurvatureData::flat(int n) {
    return CurvatureData(n, std::vector<FormPoly>(size_t(n) * size_t(n), FormPoly(n)));
}

const FormPoly& CurvatureData::entry(int i, int j) const {
    return entries_[size_t(i) * size_t(n_) + size_t(j)];
}

QPiScalar CurvatureData::component(int k, int l, int i, int j) const {
    if (k == l || i == j) return QPiScalar();
    int sign = 1;
    if (k > l) {
        std::swap(k, l);
        sign = -sign;
    }
    FormPoly::Mask m = (FormPoly::Mask(1) << k) | (FormPoly::Mask(1) << l);
    QPiScalar c = entry(i, j).coefficient(m);
    return sign > 0 ? c : -c;
}

CurvatureData CurvatureData::rotate_frame(const std::vector<std::vector<Rational>>& q) const {
    const int n = n_;
    if (int(q.size()) != n)
        throw std::invalid_argument("rotate_frame: matrix must be n x n");
    for (const auto& row : q)
        if (int(row.size()) != n)
            throw std::invalid_argument("rotate_frame: matrix must be n x n");
    // Orthogonality check.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational dot(0);
            for (int k = 0; k < n; ++k) dot += q[size_t(k)][size_t(i)] * q[size_t(k)][size_t(j)];
            if (dot != Rational(i == j ? 1 : 0))
                throw std::invalid_argument("rotate_frame: matrix is not orthogonal");
        }

    // T'(k,l,i,j) = sum T(a,b,c,d) q_ak q_bl q_ci q_dj.
    std::vector<FormPoly> entries(size_t(n) * size_t(n), FormPoly(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            FormPoly f(n);
            for (int k = 0; k < n; ++k)
                for (int l = k + 1; l < n; ++l) {
                    QPiScalar coeff;
                    for (int a = 0; a < n; ++a)
                        for (int b = 0; b < n; ++b) {
                            if (q[size_t(a)][size_t(k)] == 0 || q[size_t(b)][size_t(l)] == 0)
                                continue;
                            for (int c = 0; c < n; ++c)
                                for (int d = 0; d < n; ++d) {
                                    if (q[size_t(c)][size_t(i)] == 0 ||
                                        q[size_t(d)][size_t(j)] == 0)
                                        continue;
                                    QPiScalar t = component(a, b, c, d);
                                    if (t.is_zero()) continue;
                                    t *= QPiScalar(Rational(q[size_t(a)][size_t(k)] *
                                                            q[size_t(b)][size_t(l)] *
                                                            q[size_t(c)][size_t(i)] *
                                                            q[size_t(d)][size_t(j)]));
                                    coeff += t;
                                }
                        }
                    if (!coeff.is_zero())
                        f += FormPoly::monomial(n, {k + 1, l + 1}, coeff);
                }
            entries[size_t(i) * size_t(n) + size_t(j)] = f;
            entries[size_t(j) * size_t(n) + size_t(i)] = -f;
        }
    return CurvatureData(n, std::move(entries));
}

namespace {

MatForm curvature_over_2pi(const CurvatureData& r) {
    const int n = r.dimension();
    MatForm a(n, n);
    const QPiScalar inv2pi = QPiScalar::pi_power(-1, GRational(1, 2));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.set(i, j, r.entry(i, j) * inv2pi);
    return a;
}

// Universal genus given the coefficient table on monomials in p_k.
// Each table entry is (multiset of p indices, coefficient).
FormPoly evaluate_genus(const CurvatureData& r,
                        const std::vector<std::pair<std::vector<int>, Rational>>& table) {
    const int n = r.dimension();
    auto p = pontryagin_forms(r);
    FormPoly result(n);
    for (const auto& [mono, coeff] : table) {
        int degree = 0;
        for (int k : mono) degree += 4 * k;
        if (degree > n) continue;
        FormPoly term = FormPoly::scalar(n, QPiScalar(Rational(coeff)));
        bool vanished = false;
        for (int k : mono) {
            if (size_t(k) > p.size()) {
                vanished = true;  // p_k beyond top degree is zero
                break;
            }
            term = wedge(term, p[size_t(k - 1)]);
        }
        if (!vanished) result += term;
    }
    return result;
}

}  // namespace

std::vector<FormPoly> pontryagin_forms(const CurvatureData& r) {
    const int n = r.dimension();
    auto coeffs = char_poly_even(curvature_over_2pi(r));
    for (size_t k = 1; k < coeffs.size(); k += 2)
        if (!coeffs[k].is_zero())
            throw std::logic_error("pontryagin_forms: odd characteristic coefficient nonzero");
    std::vector<FormPoly> p;
    for (int k = 1; 4 * k <= n; ++k) {
        if (size_t(2 * k) < coeffs.size())
            p.push_back(coeffs[size_t(2 * k)]);
        else
            p.emplace_back(n);
    }
    return p;
}

FormPoly ahat_form(const CurvatureData& r) {
    static const std::vector<std::pair<std::vector<int>, Rational>> table = {
        {{}, Rational(1)},
        {{1}, Rational(-1, 24)},
        {{1, 1}, Rational(7, 5760)},
        {{2}, Rational(-4, 5760)},
    };
    return evaluate_genus(r, table);
}

FormPoly l_genus(const CurvatureData& r) {
    static const std::vector<std::pair<std::vector<int>, Rational>> table = {
        {{}, Rational(1)},
        {{1}, Rational(1, 3)},
        {{1, 1}, Rational(-1, 45)},
        {{2}, Rational(7, 45)},
    };
    return evaluate_genus(r, table);
}

FormPoly euler_form(const CurvatureData& r) {
    const int n = r.dimension();
    MatForm a = curvature_over_2pi(r);
    if (n == 2) return a.at(0, 1);
    if (n == 4) {
        FormPoly pf = wedge(a.at(0, 1), a.at(2, 3));
        pf -= wedge(a.at(0, 2), a.at(1, 3));
        pf += wedge(a.at(0, 3), a.at(1, 2));
        return pf;
    }
    throw std::invalid_argument("euler_form: Pfaffian table covers n in {2, 4}");
}

MatForm omega_form(const CurvatureData& r, const CliffordModel& cliff) {
    const int n = r.dimension();
    if (cliff.n != n) throw std::invalid_argument("omega_form: dimension mismatch");
    const int N = cliff.N;
    MatForm omega(N, N);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (r.entry(i, j).is_zero()) continue;
            GMatrix cc = cliff.generators[size_t(i)] * cliff.generators[size_t(j)];
            for (int a = 0; a < N; ++a)
                for (int b = 0; b < N; ++b) {
                    const GRational& c = cc.at(a, b);
                    if (c.is_zero()) continue;
                    omega.at(a, b) += r.entry(i, j) * QPiScalar(c / GRational(2));
                }
        }
    return omega;
}

MatForm omega_twisted(const Irrep& rep, const CurvatureData& r, const CliffordModel& cliff) {
    if (rep.N != cliff.N) throw std::invalid_argument("omega_twisted: N mismatch");
    MatForm omega = omega_form(r, cliff);
    const int n = r.dimension();
    const int N = cliff.N;
    const long d = rep.dim;

    // Collect the su(N)-valued coefficients per 2-form monomial, push each
    // through the representation, and recombine with the i/(2 pi) exponent
    // normalization on the form side.
    std::map<FormPoly::Mask, GMatrix> coeffs;
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            for (const auto& [mask, c] : omega.at(a, b).components()) {
                auto [it, inserted] = coeffs.try_emplace(mask, GMatrix(N, N));
                const auto& terms = c.terms();
                if (terms.size() != 1 || terms.begin()->first != 0)
                    throw std::logic_error("omega_twisted: expected plain Gaussian coefficients");
                it->second.at(a, b) = terms.begin()->second;
            }

    const QPiScalar scale =
        QPiScalar::pi_power(-1, GRational::i() * GRational(kRelChernOrientation, 2));
    MatForm out(int(d), n);
    for (const auto& [mask, mat] : coeffs) {
        GMatrix img = rep.act(mat);
        FormPoly::Mask m = mask;
        int i1 = std::countr_zero(m);
        m &= m - 1;
        int i2 = std::countr_zero(m);
        for (long p = 0; p < d; ++p)
            for (long q = 0; q < d; ++q) {
                const GRational& c = img.at(int(p), int(q));
                if (c.is_zero()) continue;
                out.at(int(p), int(q)) +=
                    FormPoly::monomial(n, {i1 + 1, i2 + 1}, QPiScalar(c) * scale);
            }
    }
    return out;
}

FormPoly rel_chern(const Irrep& rep, const CurvatureData& r, const CliffordModel& cliff) {
    MatForm tw = omega_twisted(rep, r, cliff);
    const int n = r.dimension();
    FormPoly ch(n);
    Rational factorial(1);
    for (int j = 0; j <= n / 2; ++j) {
        if (j > 0) factorial *= j;
        FormPoly term = mat_trace_power(tw, j);
        term *= QPiScalar(Rational(1) / factorial);
        ch += term;
    }
    return ch;
}

}  // namespace eqindex
