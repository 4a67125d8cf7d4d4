#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eqindex/forms.hpp"

using namespace eqindex;

namespace {

std::mt19937_64 rng(12345);

GRational random_grational() {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 5);
    Rational re(num(rng), den(rng)), im(num(rng), den(rng));
    re.canonicalize();
    im.canonicalize();
    return GRational(re, im);
}

QPiScalar random_qpi() {
    std::uniform_int_distribution<int> nterms(0, 3);
    std::uniform_int_distribution<int> power(-2, 2);
    QPiScalar s;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) s += QPiScalar::pi_power(power(rng), random_grational());
    return s;
}

FormPoly random_form(int n) {
    std::uniform_int_distribution<int> nterms(0, 4);
    std::uniform_int_distribution<FormPoly::Mask> mask(0, (FormPoly::Mask(1) << n) - 1);
    FormPoly f(n);
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        FormPoly term(n);
        FormPoly::Mask m = mask(rng);
        FormPoly mono = FormPoly::scalar(n, QPiScalar(random_grational()));
        for (int b = 0; b < n; ++b)
            if (m & (FormPoly::Mask(1) << b)) mono = wedge(mono, FormPoly::basis(n, b + 1));
        f += mono;
    }
    return f;
}

FormPoly random_homogeneous(int n, int degree) {
    FormPoly f(n);
    for (int tries = 0; tries < 3; ++tries) {
        std::vector<int> idx;
        std::uniform_int_distribution<int> pick(1, n);
        while (int(idx.size()) < degree) {
            int v = pick(rng);
            bool dup = false;
            for (int u : idx) dup = dup || (u == v);
            if (!dup) idx.push_back(v);
        }
        std::sort(idx.begin(), idx.end());
        FormPoly mono = FormPoly::scalar(n, QPiScalar(random_grational()));
        for (int v : idx) mono = wedge(mono, FormPoly::basis(n, v));
        f += mono;
    }
    return f;
}

}  // namespace

TEST_CASE("qpi reportability") {
    QPiScalar zero;
    CHECK(zero.is_reportable());
    CHECK(zero.to_rational() == 0);

    QPiScalar plain(Rational(-1, 8));
    CHECK(plain.is_reportable());
    CHECK(plain.to_rational() == Rational(-1, 8));

    QPiScalar withpi = QPiScalar::pi_power(2, GRational(1, 2));
    CHECK(!withpi.is_reportable());
    CHECK_THROWS_AS(withpi.to_rational(), std::domain_error);

    QPiScalar imag = QPiScalar(GRational(Rational(0), Rational(1)));
    CHECK(!imag.is_reportable());

    // pi-powers cancel exactly.
    QPiScalar prod = withpi * QPiScalar::pi_power(-2, GRational(2));
    CHECK(prod.is_reportable());
    CHECK(prod.to_rational() == 1);
}

TEST_CASE("qpi string forms") {
    CHECK(QPiScalar(Rational(-1, 8)).str() == "-1/8");
    CHECK(QPiScalar::pi_power(1, GRational(4)).str() == "4*pi");
    CHECK(QPiScalar::pi_power(2, GRational(1, 2)).str() == "pi^2/2");
    CHECK(QPiScalar::pi_power(2, GRational(8, 3)).str() == "8*pi^2/3");
    CHECK(QPiScalar().str() == "0");
}

TEST_CASE("qpi ring laws on random samples") {
    for (int i = 0; i < 1000; ++i) {
        QPiScalar a = random_qpi(), b = random_qpi(), c = random_qpi();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a - a == QPiScalar());
    }
}

TEST_CASE("wedge examples") {
    const int n = 4;
    FormPoly e1 = FormPoly::basis(n, 1), e2 = FormPoly::basis(n, 2);
    FormPoly e3 = FormPoly::basis(n, 3), e4 = FormPoly::basis(n, 4);

    // Disjoint indices concatenate.
    CHECK(wedge(wedge(e1, e2), wedge(e3, e4)) == FormPoly::monomial(n, {1, 2, 3, 4}));
    // Nilpotency.
    CHECK(wedge(e1, e1).is_zero());
    // Sign canonicalization.
    CHECK(wedge(wedge(e2, e1), e3) == -FormPoly::monomial(n, {1, 2, 3}));
}

TEST_CASE("graded commutativity") {
    const int n = 6;
    for (int i = 0; i < 300; ++i) {
        std::uniform_int_distribution<int> deg(0, 3);
        int da = deg(rng), db = deg(rng);
        FormPoly a = random_homogeneous(n, da);
        FormPoly b = random_homogeneous(n, db);
        FormPoly ab = wedge(a, b), ba = wedge(b, a);
        if ((da * db) % 2 == 0) {
            CHECK(ab == ba);
        } else {
            CHECK(ab == -ba);
        }
    }
}

TEST_CASE("form ring laws on random samples") {
    const int n = 5;
    for (int i = 0; i < 1000; ++i) {
        FormPoly a = random_form(n), b = random_form(n), c = random_form(n);
        CHECK((a + b) + c == a + (b + c));
        CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
        CHECK(wedge(a, b + c) == wedge(a, b) + wedge(a, c));
    }
}

TEST_CASE("component extraction and top coefficient") {
    const int n = 4;
    FormPoly one = FormPoly::scalar(n, QPiScalar(1));
    FormPoly f = one + FormPoly::monomial(n, {1, 2});
    CHECK(f.component(0) == one);
    CHECK(f.component(2) == FormPoly::monomial(n, {1, 2}));
    CHECK(f.component(4).is_zero());
    CHECK_THROWS_AS(f.component(3), std::invalid_argument);
    CHECK_THROWS_AS(f.component(6), std::invalid_argument);

    FormPoly top = FormPoly::monomial(n, {1, 2, 3, 4}, QPiScalar(5));
    CHECK(top.top_coefficient() == QPiScalar(5));
    CHECK(f.top_coefficient() == QPiScalar());
}

TEST_CASE("dimension mismatch rejected") {
    CHECK_THROWS_AS(wedge(FormPoly::basis(4, 1), FormPoly::basis(6, 1)),
                    std::invalid_argument);
}

TEST_CASE("determinism: identical inputs give identical outputs") {
    std::mt19937_64 r1(777), r2(777);
    auto gen = [](std::mt19937_64& r) {
        std::uniform_int_distribution<long> num(-9, 9);
        QPiScalar s;
        for (int i = 0; i < 4; ++i)
            s += QPiScalar::pi_power(int(num(r) % 3), GRational(num(r), 1));
        return s;
    };
    for (int i = 0; i < 100; ++i) {
        QPiScalar a1 = gen(r1), a2 = gen(r2);
        CHECK(a1 == a2);
        CHECK(a1.str() == a2.str());
    }
}
