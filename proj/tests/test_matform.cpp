#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eqindex/matform.hpp"

using namespace eqindex;

namespace {

std::mt19937_64 rng(424242);

QPiScalar random_rational_scalar() {
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 4);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return QPiScalar(q);
}

// Random matrix of even-degree forms (degrees 0 and 2).
MatForm random_even(int size, int n) {
    MatForm m(size, n);
    std::uniform_int_distribution<int> k(1, n);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) {
            FormPoly f = FormPoly::scalar(n, random_rational_scalar());
            int a = k(rng), b = k(rng);
            if (a != b)
                f += FormPoly::monomial(n, {std::min(a, b), std::max(a, b)},
                                        random_rational_scalar());
            m.set(i, j, f);
        }
    return m;
}

// Random nilpotent matrix (entries of degree exactly 2).
MatForm random_nilpotent(int size, int n) {
    MatForm m(size, n);
    std::uniform_int_distribution<int> k(1, n);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) {
            FormPoly f(n);
            int a = k(rng), b = k(rng);
            if (a != b)
                f += FormPoly::monomial(n, {std::min(a, b), std::max(a, b)},
                                        random_rational_scalar());
            m.set(i, j, f);
        }
    return m;
}

}  // namespace

TEST_CASE("trace of identity") {
    MatForm id = MatForm::identity(3, 4);
    CHECK(mat_trace(id) == FormPoly::scalar(4, QPiScalar(3)));
}

TEST_CASE("trace cyclicity on random even samples") {
    for (int i = 0; i < 50; ++i) {
        MatForm a = random_even(3, 4), b = random_even(3, 4);
        CHECK(mat_trace(mat_mul(a, b)) == mat_trace(mat_mul(b, a)));
    }
}

TEST_CASE("trace power shortcut agrees with products") {
    for (int i = 0; i < 20; ++i) {
        MatForm a = random_even(3, 6);
        CHECK(mat_trace_power(a, 2) == mat_trace(mat_mul(a, a)));
        CHECK(mat_trace_power(a, 3) == mat_trace(mat_mul(mat_mul(a, a), a)));
    }
}

TEST_CASE("exponential of zero") {
    MatForm zero(3, 4);
    CHECK(mat_exp_truncated(zero) == MatForm::identity(3, 4));
}

TEST_CASE("scalar exponential truncation") {
    const int n = 4;
    MatForm a(1, n);
    FormPoly omega = FormPoly::monomial(n, {1, 2});
    a.set(0, 0, omega);
    MatForm e = mat_exp_truncated(a);
    FormPoly expect = FormPoly::scalar(n, QPiScalar(1)) + omega +
                      wedge(omega, omega) * QPiScalar(Rational(1, 2));
    CHECK(e.at(0, 0) == expect);
}

TEST_CASE("exponential rejects degree-0 entries") {
    MatForm a(2, 4);
    a.set(0, 0, FormPoly::scalar(4, QPiScalar(1)));
    CHECK_THROWS_AS(mat_exp_truncated(a), std::invalid_argument);
}

TEST_CASE("exp(A) exp(-A) = I on random nilpotent samples") {
    for (int i = 0; i < 25; ++i) {
        MatForm a = random_nilpotent(3, 6);
        CHECK(mat_mul(mat_exp_truncated(a), mat_exp_truncated(-a)) ==
              MatForm::identity(3, 6));
    }
}

TEST_CASE("exp(A+B) = exp(A) exp(B) for commuting nilpotent samples") {
    // Polynomials in one matrix commute.
    for (int i = 0; i < 15; ++i) {
        MatForm a = random_nilpotent(3, 6);
        MatForm b = mat_mul(a, a) * QPiScalar(Rational(2, 3));
        REQUIRE(mat_mul(a, b) == mat_mul(b, a));
        CHECK(mat_exp_truncated(a + b) ==
              mat_mul(mat_exp_truncated(a), mat_exp_truncated(b)));
    }
}

TEST_CASE("char poly of zero") {
    MatForm zero(3, 4);
    auto e = char_poly_even(zero);
    REQUIRE(e.size() == 4);
    CHECK(e[0] == FormPoly::scalar(4, QPiScalar(1)));
    for (size_t k = 1; k < e.size(); ++k) CHECK(e[k].is_zero());
}

TEST_CASE("char poly of 2x2 antisymmetric numeric matrix") {
    // det(I + tA) = 1 + t^2 a^2 for A = [[0, a], [-a, 0]].
    MatForm a(2, 4);
    QPiScalar v(Rational(3, 7));
    a.set(0, 1, FormPoly::scalar(4, v));
    a.set(1, 0, FormPoly::scalar(4, -v));
    auto e = char_poly_even(a);
    CHECK(e[0] == FormPoly::scalar(4, QPiScalar(1)));
    CHECK(e[1].is_zero());
    CHECK(e[2] == FormPoly::scalar(4, v * v));
}

TEST_CASE("t^1 coefficient is the trace") {
    for (int i = 0; i < 30; ++i) {
        MatForm a = random_even(3, 4);
        auto e = char_poly_even(a);
        CHECK(e[1] == mat_trace(a));
    }
}

TEST_CASE("char poly invariant under numeric conjugation") {
    // P A P^{-1} with a fixed rational invertible P.
    const int n = 4;
    MatForm p(3, n), pinv(3, n);
    // P = [[1,1,0],[0,1,2],[0,0,1]], P^{-1} = [[1,-1,2],[0,1,-2],[0,0,1]].
    auto sc = [n](long v) { return FormPoly::scalar(n, QPiScalar(v)); };
    p.set(0, 0, sc(1)); p.set(0, 1, sc(1)); p.set(1, 1, sc(1));
    p.set(1, 2, sc(2)); p.set(2, 2, sc(1));
    pinv.set(0, 0, sc(1)); pinv.set(0, 1, sc(-1)); pinv.set(0, 2, sc(2));
    pinv.set(1, 1, sc(1)); pinv.set(1, 2, sc(-2)); pinv.set(2, 2, sc(1));
    REQUIRE(mat_mul(p, pinv) == MatForm::identity(3, n));
    for (int i = 0; i < 15; ++i) {
        MatForm a = random_even(3, n);
        MatForm conj = mat_mul(mat_mul(p, a), pinv);
        CHECK(char_poly_even(conj) == char_poly_even(a));
    }
}

TEST_CASE("size mismatch rejected") {
    MatForm a(2, 4), b(3, 4);
    CHECK_THROWS_AS(mat_mul(a, b), std::invalid_argument);
}

TEST_CASE("odd-degree entries rejected") {
    MatForm a(2, 4);
    CHECK_THROWS_AS(a.set(0, 0, FormPoly::basis(4, 1)), std::invalid_argument);
}
