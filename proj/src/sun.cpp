#include "eqindex/sun.hpp"

#include <stdexcept>

namespace eqindex {

std::vector<GMatrix> su_basis(int N) {
    std::vector<GMatrix> basis;
    for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b) {
            GMatrix m(N, N);
            m.at(a, b) = GRational(1);
            m.at(b, a) = GRational(-1);
            basis.push_back(std::move(m));
        }
    for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b) {
            GMatrix m(N, N);
            m.at(a, b) = GRational::i();
            m.at(b, a) = GRational::i();
            basis.push_back(std::move(m));
        }
    for (int a = 0; a + 1 < N; ++a) {
        GMatrix m(N, N);
        m.at(a, a) = GRational::i();
        m.at(a + 1, a + 1) = -GRational::i();
        basis.push_back(std::move(m));
    }
    return basis;
}

std::vector<std::vector<Rational>> su_gram(int N) {
    auto basis = su_basis(N);
    size_t dim = basis.size();
    std::vector<std::vector<Rational>> g(dim, std::vector<Rational>(dim, Rational(0)));
    for (size_t a = 0; a < dim; ++a)
        for (size_t b = a; b < dim; ++b) {
            GRational t = GMatrix::trace_product(basis[a], basis[b]);
            if (!t.is_real()) throw std::logic_error("su_gram: non-real trace form");
            g[a][b] = 2 * t.real();
            g[b][a] = g[a][b];
        }
    return g;
}

std::vector<std::vector<Rational>> su_gram_inverse(int N) {
    auto g = su_gram(N);
    size_t dim = g.size();
    // Gauss-Jordan over the rationals.
    std::vector<std::vector<Rational>> inv(dim, std::vector<Rational>(dim, Rational(0)));
    for (size_t i = 0; i < dim; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < dim; ++col) {
        size_t piv = col;
        while (piv < dim && g[piv][col] == 0) ++piv;
        if (piv == dim) throw std::logic_error("su_gram_inverse: singular Gram matrix");
        std::swap(g[piv], g[col]);
        std::swap(inv[piv], inv[col]);
        Rational p = g[col][col];
        for (size_t j = 0; j < dim; ++j) {
            g[col][j] /= p;
            inv[col][j] /= p;
        }
        for (size_t r = 0; r < dim; ++r) {
            if (r == col || g[r][col] == 0) continue;
            Rational f = g[r][col];
            for (size_t j = 0; j < dim; ++j) {
                g[r][j] -= f * g[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

std::vector<Rational> su_decompose(int N, const GMatrix& x) {
    if (x.rows() != N || x.cols() != N)
        throw std::invalid_argument("su_decompose: wrong shape");
    if (!x.is_skew_hermitian())
        throw std::invalid_argument("su_decompose: element is not skew-hermitian");
    if (!x.trace().is_zero())
        throw std::invalid_argument("su_decompose: element is not traceless");

    std::vector<Rational> coords;
    // Off-diagonal: x_ab = alpha + i*beta picks alpha on E_ab - E_ba and
    // beta on i(E_ab + E_ba).
    for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b) coords.push_back(x.at(a, b).real());
    for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b) coords.push_back(x.at(a, b).imag());
    // Diagonal i*t_a with sum t_a = 0: prefix sums give the coefficients on
    // i(E_aa - E_{a+1,a+1}).
    Rational prefix(0);
    for (int a = 0; a + 1 < N; ++a) {
        if (x.at(a, a).real() != 0)
            throw std::invalid_argument("su_decompose: diagonal must be imaginary");
        prefix += x.at(a, a).imag();
        coords.push_back(prefix);
    }
    return coords;
}

}  // namespace eqindex
