#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "eqindex/irrep.hpp"
#include "eqindex/sun.hpp"

using namespace eqindex;

namespace {

// Independent dimension oracle: hook-content formula
// dim = prod_cells (N + col - row) / hook(cell).
long hook_content_dim(const Partition& p, int N) {
    Rational d(1);
    for (int r = 0; r < p.rows(); ++r)
        for (int c = 0; c < p.parts[size_t(r)]; ++c) {
            int arm = p.parts[size_t(r)] - c - 1;
            int leg = 0;
            for (int r2 = r + 1; r2 < p.rows(); ++r2)
                if (p.parts[size_t(r2)] > c) ++leg;
            Rational cell(N + c - r, arm + leg + 1);
            cell.canonicalize();
            d *= cell;
        }
    REQUIRE(d.get_den() == 1);
    return d.get_num().get_si();
}

// Independent Casimir oracle <mu, mu + 2 rho> / 2 in epsilon coordinates.
Rational casimir_oracle(const Partition& p, int N) {
    Rational avg(p.boxes(), N);
    avg.canonicalize();
    Rational total(0);
    for (int i = 0; i < N; ++i) {
        Rational mu = Rational(i < p.rows() ? p.parts[size_t(i)] : 0) - avg;
        Rational rho(N - 1 - 2 * i, 2);
        rho.canonicalize();
        total += mu * mu + 2 * mu * rho;
    }
    return total / 2;
}

// Commutant of the lie images, as the kernel dimension of
// M |-> ([M, P_a])_a over the Gaussian rationals.
size_t commutant_dimension(const Irrep& rep) {
    const int d = int(rep.dim);
    RowSpan span(size_t(d) * size_t(d));
    for (const auto& P : rep.lie_images) {
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                // Row of coefficients of [M, P]_ij in the unknowns M_kl.
                std::vector<GRational> row(size_t(d) * size_t(d));
                for (int l = 0; l < d; ++l) row[size_t(i) * size_t(d) + size_t(l)] += P.at(l, j);
                for (int k = 0; k < d; ++k) row[size_t(k) * size_t(d) + size_t(j)] -= P.at(i, k);
                span.insert(std::move(row));
            }
        if (span.rank() == size_t(d) * size_t(d) - 1) break;  // kernel already minimal
    }
    return size_t(d) * size_t(d) - span.rank();
}

}  // namespace

TEST_CASE("partition parsing and reduction") {
    CHECK(parse_partition("3,2") == Partition({3, 2}));
    CHECK(parse_partition("1") == Partition({1}));
    CHECK_THROWS_AS(parse_partition("2,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("x"), std::invalid_argument);

    // (1,1,1,1) reduces to the empty partition for N = 4.
    CHECK(reduce_partition(Partition({1, 1, 1, 1}), 4).empty());
    // (2,1,1,1) strips one full column down to (1).
    CHECK(reduce_partition(Partition({2, 1, 1, 1}), 4) == Partition({1}));
    CHECK(is_reduced(Partition({3, 2}), 4));
    CHECK(!is_reduced(Partition({2, 1, 1, 1}), 4));
}

TEST_CASE("central character is the box count mod N") {
    CHECK(central_character(Partition({1}), 4) == 1);
    CHECK(central_character(reduce_partition(Partition({1, 1, 1, 1}), 4), 4) == 0);
    CHECK(central_character(reduce_partition(Partition({2, 1, 1, 1}), 4), 4) == 1);
    CHECK(central_character(Partition({3, 2}), 4) == 1);
    CHECK(central_character(Partition({3}), 2) == 1);
}

TEST_CASE("weyl dimension against the hook-content oracle") {
    CHECK(weyl_dim(Partition({1}), 4) == 4);
    CHECK(weyl_dim(Partition({2}), 2) == 3);
    CHECK(hook_content_dim(Partition({5}), 4) == 56);
    CHECK(weyl_dim(Partition({5}), 4) == 56);
    // Frozen from the oracle (hook-content and the Weyl product formula
    // agree on 60).
    CHECK(hook_content_dim(Partition({3, 2}), 4) == 60);
    CHECK(weyl_dim(Partition({3, 2}), 4) == 60);

    std::vector<Partition> shapes = {Partition({1}),    Partition({2}),
                                     Partition({1, 1}), Partition({3, 1}),
                                     Partition({2, 2, 1}), Partition({4, 1}),
                                     Partition({3, 1, 1})};
    for (const auto& p : shapes) {
        CHECK(weyl_dim(p, 4) == hook_content_dim(p, 4));
        // Counting semistandard tableaux is a second independent route.
        CHECK(weyl_dim(p, 4) == long(ssyt_contents(p, 4).size()));
    }
}

TEST_CASE("enumerate the natural central class") {
    auto su4 = enumerate_nat_class(4, 1);
    REQUIRE(su4.size() == 1);
    CHECK(su4[0] == Partition({1}));

    auto su2 = enumerate_nat_class(2, 5);
    REQUIRE(su2.size() == 3);
    CHECK(su2[0] == Partition({1}));
    CHECK(su2[1] == Partition({3}));
    CHECK(su2[2] == Partition({5}));

    auto su4b = enumerate_nat_class(4, 5);
    REQUIRE(su4b.size() == 6);
    CHECK(su4b[0] == Partition({1}));
    CHECK(su4b[1] == Partition({5}));
    CHECK(su4b[2] == Partition({4, 1}));
    CHECK(su4b[3] == Partition({3, 2}));
    CHECK(su4b[4] == Partition({3, 1, 1}));
    CHECK(su4b[5] == Partition({2, 2, 1}));
}

TEST_CASE("su(N) basis and gram form") {
    for (int N : {2, 4}) {
        auto basis = su_basis(N);
        CHECK(basis.size() == size_t(N) * size_t(N) - 1);
        for (const auto& x : basis) {
            CHECK(x.is_skew_hermitian());
            CHECK(x.trace().is_zero());
        }
        // decompose inverts recombination.
        std::mt19937_64 rng(5);
        std::uniform_int_distribution<long> coeff(-3, 3);
        for (int t = 0; t < 10; ++t) {
            std::vector<Rational> coords;
            GMatrix x(N, N);
            for (const auto& b : basis) {
                Rational c(coeff(rng));
                coords.push_back(c);
                x += GRational(c) * b;
            }
            CHECK(su_decompose(N, x) == coords);
        }
    }
}

TEST_CASE("natural representation is the defining one") {
    const Irrep& rep = get_irrep(Partition({1}), 4);
    CHECK(rep.dim == 4);
    CHECK(rep.central_char == 1);
    auto basis = su_basis(4);
    REQUIRE(rep.lie_images.size() == basis.size());
    for (size_t a = 0; a < basis.size(); ++a) CHECK(rep.lie_images[a] == basis[a]);
}

TEST_CASE("spin one of SU(2): dimension 3, Casimir 2") {
    const Irrep& rep = get_irrep(Partition({2}), 2);
    CHECK(rep.dim == 3);
    // Normalization anchor: Casimir(natural of SU(2)) = 3/4.
    CHECK(casimir_oracle(Partition({1}), 2) == Rational(3, 4));
    CHECK(get_irrep(Partition({1}), 2).casimir == Rational(3, 4));
    CHECK(casimir_oracle(Partition({2}), 2) == 2);
    CHECK(rep.casimir == 2);
}

TEST_CASE("casimir eigenvalues match the oracle across shapes") {
    std::vector<std::pair<Partition, int>> cases = {
        {Partition({1}), 2},  {Partition({3}), 2},    {Partition({1}), 4},
        {Partition({2}), 4},  {Partition({1, 1}), 4}, {Partition({2, 1}), 4},
        {Partition({5}), 4},  {Partition({3, 2}), 4},
    };
    for (const auto& [p, N] : cases) CHECK(casimir_eigenvalue(p, N) == casimir_oracle(p, N));
}

TEST_CASE("built irreps carry scalar Casimir and correct dimensions") {
    // build_irrep verifies bracket fidelity, skewness, tracelessness and
    // the Casimir internally; re-derive the headline numbers here.
    std::vector<std::pair<Partition, int>> cases = {
        {Partition({3}), 2}, {Partition({1, 1}), 4}, {Partition({2}), 4},
        {Partition({2, 1}), 4}};
    for (const auto& [p, N] : cases) {
        const Irrep& rep = get_irrep(p, N);
        CHECK(rep.dim == weyl_dim(p, N));
        CHECK(rep.casimir == casimir_oracle(p, N));
        CHECK(rep.central_char == central_character(p, N));
    }
}

TEST_CASE("commutant of the lie images is scalars") {
    std::vector<std::pair<Partition, int>> cases = {
        {Partition({1}), 2},    {Partition({2}), 2}, {Partition({3}), 2},
        {Partition({1}), 4},    {Partition({2}), 4}, {Partition({1, 1}), 4},
        {Partition({2, 1}), 4},
    };
    for (const auto& [p, N] : cases) {
        const Irrep& rep = get_irrep(p, N);
        CHECK(commutant_dimension(rep) == 1);
    }
}

TEST_CASE("images are skew-adjoint for the invariant gram form") {
    std::vector<std::pair<Partition, int>> cases = {
        {Partition({2}), 2}, {Partition({3}), 2}, {Partition({2}), 4},
        {Partition({2, 1}), 4}};
    for (const auto& [p, N] : cases) {
        const Irrep& rep = get_irrep(p, N);
        CHECK(rep.gram == rep.gram.conj_transpose());
        for (int i = 0; i < int(rep.dim); ++i) {
            CHECK(rep.gram.at(i, i).is_real());
            CHECK(rep.gram.at(i, i).real() > 0);
        }
        for (const auto& m : rep.lie_images)
            CHECK(rep.gram * m == -(m.conj_transpose() * rep.gram));
    }
    // The natural module sits in an orthonormal basis, so its images are
    // literally skew-hermitian.
    for (const auto& m : get_irrep(Partition({1}), 4).lie_images)
        CHECK(m.is_skew_hermitian());
}

TEST_CASE("trivial representation") {
    const Irrep& rep = get_irrep(Partition(), 4);
    CHECK(rep.dim == 1);
    CHECK(rep.casimir == 0);
}

TEST_CASE("cutoff and reduction preconditions") {
    CHECK_THROWS_AS(build_irrep(Partition({7}), 2, 6), std::invalid_argument);
    CHECK_THROWS_AS(build_irrep(Partition({1, 1, 1, 1}), 4, 6), std::invalid_argument);
    CHECK_THROWS_AS(build_irrep(Partition({1}), 3, 6), std::invalid_argument);
}

TEST_CASE("character at the identity is one") {
    std::vector<GRational> id2 = {GRational(1), GRational(1)};
    std::vector<GRational> id4 = {GRational(1), GRational(1), GRational(1), GRational(1)};
    CHECK(character_at_torus(Partition({1}), id2) == GRational(1));
    CHECK(character_at_torus(Partition({2}), id2) == GRational(1));
    CHECK(character_at_torus(Partition({3, 2}), id4) == GRational(1));
}

TEST_CASE("character at central elements is the central root") {
    // omega = i for SU(4): chi(omega I) = omega^{boxes}.
    GRational i = GRational::i();
    std::vector<GRational> central = {i, i, i, i};
    CHECK(character_at_torus(Partition({1}), central) == i);
    CHECK(character_at_torus(Partition({2, 2, 1}), central) == i);  // 5 boxes
    CHECK(character_at_torus(Partition({1, 1}), central) == i * i);
    std::vector<GRational> minus = {GRational(-1), GRational(-1)};
    CHECK(character_at_torus(Partition({3}), minus) == GRational(-1));
}

TEST_CASE("spin one character: Schur polynomial ratio") {
    for (const GRational& q :
         {GRational(1), GRational(-1), GRational::i(), -GRational::i()}) {
        std::vector<GRational> t = {q, q.conj()};
        GRational expect = (q * q + GRational(1) + q.conj() * q.conj()) / GRational(3);
        CHECK(character_at_torus(Partition({2}), t) == expect);
    }
}

TEST_CASE("characters agree with the tableau monomial sum") {
    // Jacobi-Trudi evaluation against the semistandard expansion.
    std::vector<GRational> phases = {GRational::i(), -GRational::i(), GRational(-1),
                                     GRational(-1)};
    for (const Partition& p :
         {Partition({2}), Partition({2, 1}), Partition({3, 2}), Partition({2, 2, 1})}) {
        GRational sum;
        for (const auto& content : ssyt_contents(p, 4)) {
            GRational mono(1);
            for (size_t a = 0; a < 4; ++a)
                for (int e = 0; e < content[a]; ++e) mono *= phases[a];
            sum += mono;
        }
        CHECK(character_at_torus(p, phases) == sum / GRational(weyl_dim(p, 4)));
    }
}

TEST_CASE("non-unimodular torus input rejected") {
    std::vector<GRational> bad = {GRational(2), GRational(1, 2)};
    CHECK_THROWS_AS(character_at_torus(Partition({1}), bad), std::invalid_argument);
    std::vector<GRational> nonunit = {GRational::i(), GRational::i()};
    CHECK_THROWS_AS(character_at_torus(Partition({1}), nonunit), std::invalid_argument);
}

TEST_CASE("act decomposes arbitrary su elements") {
    const Irrep& rep = get_irrep(Partition({2}), 2);
    auto basis = su_basis(2);
    GMatrix x = GRational(2) * basis[0] - GRational(1, 3) * basis[2];
    GMatrix expect =
        GRational(2) * rep.lie_images[0] - GRational(1, 3) * rep.lie_images[2];
    CHECK(rep.act(x) == expect);
    GMatrix not_su(2, 2);
    not_su.at(0, 0) = GRational(1);
    CHECK_THROWS_AS(rep.act(not_su), std::invalid_argument);
}
