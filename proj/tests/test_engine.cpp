#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eqindex/engine.hpp"

using namespace eqindex;

namespace {

const ModelManifold& model(const std::string& name) { return find_model(name); }

}  // namespace

TEST_CASE("fractional index of the catalog models") {
    CHECK(fractional_index(model("cp2")) == Rational(-1, 8));
    CHECK(fractional_index(model("s4")) == 0);
    CHECK(fractional_index(model("t4")) == 0);
    CHECK(fractional_index(model("s2xs2")) == 0);
    CHECK(fractional_index(model("s2")) == 0);
}

TEST_CASE("index character examples") {
    std::string diag;
    CHECK(index_character(model("cp2"), Partition({1})) == 1);
    CHECK(index_character(model("s2"), Partition({1})) == 0);
    CHECK(index_character(model("t4"), Partition({1})) == 0);
    CHECK(index_character(model("s4"), Partition({1})) == 0);
    CHECK(index_character(model("s2xs2"), Partition({1})) == 0);

    // Wrong central character returns zero with a diagnostic.
    CHECK(index_character(model("cp2"), Partition({2}), 6, &diag) == 0);
    CHECK(!diag.empty());
}

TEST_CASE("spectral integrals of cp2 for the natural representation") {
    auto data = spectral_integrals(model("cp2"), Partition({1}));
    REQUIRE(data.size() == 3);  // j = 0, 1, 2
    CHECK(data[0] == Rational(-1, 8));  // the A-hat integral
    CHECK(data[1] == 0);                // no degree-2 A-hat component
    CHECK(data[2] == Rational(3, 8));
    // d_pi * sum = 4 * (1/4) = 1 = signature.
    Rational total = (data[0] + data[1] + data[2]) * 4;
    CHECK(total == 1);
}

TEST_CASE("signature recovery on the 4-dimensional catalog") {
    CHECK(signature_check(model("cp2")) == 1);
    CHECK(signature_check(model("s4")) == 0);
    CHECK(signature_check(model("t4")) == 0);
    CHECK(signature_check(model("s2xs2")) == 0);
    CHECK_THROWS_AS(signature_check(model("s2")), std::invalid_argument);
}

TEST_CASE("weight index ratio: tableau route equals the casimir route") {
    for (const Partition& p : enumerate_nat_class(4, 5)) {
        Rational via_weights = weight_index_ratio(p, 4);
        Rational via_casimir = Rational(weyl_dim(p, 4)) * casimir_eigenvalue(p, 4) /
                               (Rational(4) * casimir_eigenvalue(Partition({1}), 4));
        CHECK(via_weights == via_casimir);
    }
    CHECK(weight_index_ratio(Partition({1}), 4) == 1);
    CHECK(weight_index_ratio(Partition({5}), 4) == 126);
    CHECK(weight_index_ratio(Partition({2, 2, 1}), 4) == 13);
}

TEST_CASE("audit of the 2-sphere up to nine boxes") {
    IndexReport r = integrality_audit(model("s2"), 9);
    CHECK(r.N == 2);
    REQUIRE(r.rows.size() == 5);  // (1), (3), (5), (7), (9)
    for (const auto& row : r.rows) {
        CHECK(row.total == 0);
        CHECK(row.integral_total);
        CHECK(row.weight_oracle_ok);
    }
    CHECK(r.fractional == 0);
    CHECK(r.passed());
    CHECK(r.as_printed_matches_theorem);  // all values vanish, no discrepancy
}

TEST_CASE("audit of the flat torus") {
    IndexReport r = integrality_audit(model("t4"), 1);
    REQUIRE(r.rows.size() == 1);
    CHECK(r.rows[0].total == 0);
    CHECK(r.passed());
}

TEST_CASE("audit of cp2 at cutoff one") {
    IndexReport r = integrality_audit(model("cp2"), 1);
    REQUIRE(r.rows.size() == 1);
    CHECK(r.rows[0].partition == Partition({1}));
    CHECK(r.rows[0].dim == 4);
    CHECK(r.rows[0].total == 1);
    CHECK(r.rows[0].integral_total);
    CHECK(r.rows[0].weight_oracle_ok);
    CHECK(r.fractional == Rational(-1, 8));
    CHECK(r.passed());
    // The as-printed corollary cannot reproduce a nonzero character
    // pairing; the audit records the mismatch without failing.
    CHECK(!r.as_printed_matches_theorem);
}

TEST_CASE("enlarging max boxes never changes previous rows") {
    IndexReport r1 = integrality_audit(model("s2"), 5);
    IndexReport r2 = integrality_audit(model("s2"), 9);
    REQUIRE(r1.rows.size() <= r2.rows.size());
    for (size_t i = 0; i < r1.rows.size(); ++i) {
        CHECK(r1.rows[i].partition == r2.rows[i].partition);
        CHECK(r1.rows[i].total == r2.rows[i].total);
        CHECK(r1.rows[i].integrals == r2.rows[i].integrals);
    }

    IndexReport c1 = integrality_audit(model("cp2"), 1);
    IndexReport c5 = integrality_audit(model("cp2"), 5);
    CHECK(c1.rows[0].partition == c5.rows[0].partition);
    CHECK(c1.rows[0].total == c5.rows[0].total);
    CHECK(c1.rows[0].integrals == c5.rows[0].integrals);
}

TEST_CASE("parallel audit matches the serial one") {
    IndexReport serial = integrality_audit(model("s2"), 7, false);
    IndexReport parallel = integrality_audit(model("s2"), 7, true);
    REQUIRE(serial.rows.size() == parallel.rows.size());
    for (size_t i = 0; i < serial.rows.size(); ++i) {
        CHECK(serial.rows[i].partition == parallel.rows[i].partition);
        CHECK(serial.rows[i].total == parallel.rows[i].total);
    }
}

TEST_CASE("distribution pairing is consistent with the engine") {
    const auto& cp2 = model("cp2");
    IndexDistribution dist = index_distribution(cp2, 1);
    CHECK(dist.pair_with_character(Partition({1})) ==
          index_character(cp2, Partition({1})));
    CHECK(dist.pair_with_character(Partition({2})) == 0);
    CHECK(dist.pair_with_bump(TestFunction::unit_bump_at_identity(4)) ==
          fractional_index(cp2));
}

TEST_CASE("index is invariant under frame rotation end to end") {
    std::vector<std::vector<Rational>> q(4, std::vector<Rational>(4, Rational(0)));
    q[0][0] = Rational(3, 5);
    q[0][1] = Rational(4, 5);
    q[1][0] = Rational(-4, 5);
    q[1][1] = Rational(3, 5);
    q[2][2] = Rational(5, 13);
    q[2][3] = Rational(12, 13);
    q[3][2] = Rational(-12, 13);
    q[3][3] = Rational(5, 13);

    ModelManifold rotated = model("cp2");
    rotated.curvature = rotated.curvature.rotate_frame(q);
    CHECK(fractional_index(rotated) == Rational(-1, 8));
    CHECK(index_character(rotated, Partition({1})) == 1);
    CHECK(signature_check(rotated) == 1);
}

TEST_CASE("odd-dimensional models rejected") {
    // Only even dimensions carry the construction; the curvature type
    // already rejects odd n, so exercise the engine check via n = 2 vs 4
    // partition mismatches instead.
    const auto& s2 = model("s2");
    CHECK_THROWS_AS(spectral_integrals(s2, Partition({1, 1, 1})),
                    std::invalid_argument);
}
