#include "eqindex/engine.hpp"

#include <future>
#include <mutex>
#include <stdexcept>

namespace eqindex {

namespace {

const CliffordModel& cached_clifford(int n) {
    static std::mutex mu;
    static std::map<int, CliffordModel> cache;
    std::unique_lock lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    lock.unlock();
    CliffordModel model = build_clifford(n);
    lock.lock();
    return cache.emplace(n, std::move(model)).first->second;
}

int model_group_rank(const ModelManifold& m) {
    if (m.n % 2 != 0)
        throw std::invalid_argument("index engine: model dimension must be even");
    return 1 << (m.n / 2);
}

}  // namespace

Rational weight_index_ratio(const Partition& p, int N) {
    // sum over weights of (mu_1 - mu_2)^2, normalized by the same sum for
    // the natural representation (which is 2).
    Rational num(0);
    for (const auto& content : ssyt_contents(p, N)) {
        long diff = content[0] - content[1];
        num += diff * diff;
    }
    return num / 2;
}

std::vector<Rational> spectral_integrals(const ModelManifold& m, const Partition& p,
                                         int max_boxes) {
    const int n = m.n;
    const int N = model_group_rank(m);
    if (!is_reduced(p, N))
        throw std::invalid_argument("spectral_integrals: partition not reduced");

    const CliffordModel& cliff = cached_clifford(n);
    const Irrep& rep = get_irrep(p, N, max_boxes);
    MatForm tw = omega_twisted(rep, m.curvature, cliff);
    FormPoly ahat = ahat_form(m.curvature);

    std::vector<Rational> out;
    Rational factorial(1);
    for (int j = 0; j <= n / 2; ++j) {
        if (j > 0) factorial *= j;
        FormPoly trace_j = mat_trace_power(tw, j);
        QPiScalar value = integrate(wedge(ahat.component(n - 2 * j), trace_j), m);
        Rational ij = value.to_rational() / (factorial * rep.dim);
        out.push_back(ij);
    }
    return out;
}

Rational index_character(const ModelManifold& m, const Partition& p, int max_boxes,
                         std::string* diagnostic) {
    const int N = model_group_rank(m);
    if (central_character(p, N) != 1 % N) {
        if (diagnostic)
            *diagnostic = "central character of " + p.str() + " is " +
                          std::to_string(central_character(p, N)) + " (mod " +
                          std::to_string(N) + "), not 1: the isotypic component is trivial";
        return Rational(0);
    }
    auto data = spectral_integrals(m, p, max_boxes);
    Rational total(0);
    for (const auto& v : data) total += v;
    total *= weyl_dim(p, N);

    // Same quantity through the characteristic-form route; the groupings
    // must agree exactly.
    const CliffordModel& cliff = cached_clifford(m.n);
    const Irrep& rep = get_irrep(p, N, max_boxes);
    QPiScalar direct =
        integrate(wedge(ahat_form(m.curvature), rel_chern(rep, m.curvature, cliff)), m);
    if (direct.to_rational() != total)
        throw std::logic_error("index_character: spectral and form routes disagree");
    return total;
}

Rational fractional_index(const ModelManifold& m) {
    if (m.n % 2 != 0)
        throw std::invalid_argument("fractional_index: model dimension must be even");
    return integrate(ahat_form(m.curvature), m).to_rational();
}

IndexDistribution index_distribution(const ModelManifold& m, int max_boxes,
                                     bool corollary_as_printed) {
    return IndexDistribution(m, max_boxes, corollary_as_printed);
}

Rational signature_check(const ModelManifold& m, int max_boxes) {
    if (m.n != 4) throw std::invalid_argument("signature_check: model must be 4-dimensional");
    Rational idx = index_character(m, Partition({1}), max_boxes);
    Rational via_l = integrate(l_genus(m.curvature), m).to_rational();
    if (idx != via_l)
        throw std::logic_error("signature_check: index and L-polynomial integral disagree");
    if (m.signature && idx != Rational(*m.signature))
        throw std::logic_error("signature_check: catalog signature metadata disagrees");
    return idx;
}

namespace {

IndexRow audit_row(const ModelManifold& m, const Partition& p, int max_boxes) {
    const int N = model_group_rank(m);
    IndexRow row;
    row.partition = p;
    row.dim = weyl_dim(p, N);
    try {
        row.integrals = spectral_integrals(m, p, max_boxes);
        Rational total(0);
        for (const auto& v : row.integrals) total += v;
        row.total = total * row.dim;
        row.integral_total = (row.total.get_den() == 1);

        // Weight-space oracle for the degree-2 trace: the invariant
        // bilinear form is unique up to scale, so the twisted curvature
        // trace must match the natural one scaled by the weight index.
        const CliffordModel& cliff = cached_clifford(m.n);
        const Irrep& rep = get_irrep(p, N, max_boxes);
        const Irrep& nat = get_irrep(Partition({1}), N, max_boxes);
        MatForm tw = omega_twisted(rep, m.curvature, cliff);
        MatForm tw_nat = omega_twisted(nat, m.curvature, cliff);
        FormPoly lhs = mat_trace_power(tw, 2);
        FormPoly rhs = mat_trace_power(tw_nat, 2);
        rhs *= QPiScalar(Rational(weight_index_ratio(p, N)));
        row.weight_oracle_ok = (lhs == rhs);
    } catch (const std::exception& e) {
        row.reportable_ok = false;
        row.note = e.what();
    }
    return row;
}

}  // namespace

Rational corollary_as_printed_character(const ModelManifold& m, const Partition& p,
                                        int max_boxes) {
    const int N = model_group_rank(m);
    GRational central_sum;
    for (int r = 0; r < N; ++r) central_sum += central_root(N, -r * p.boxes());
    if (central_sum.is_zero()) return Rational(0);
    auto data = spectral_integrals(m, p, max_boxes);
    Rational per_dim(0);
    for (const auto& v : data) per_dim += v;
    return central_sum.real() * per_dim;
}

IndexReport integrality_audit(const ModelManifold& m, int max_boxes, bool parallel) {
    const int N = model_group_rank(m);
    IndexReport report;
    report.model = m.name;
    report.n = m.n;
    report.N = N;
    report.max_boxes = max_boxes;
    report.fractional = fractional_index(m);

    auto partitions = enumerate_nat_class(N, max_boxes);
    report.rows.resize(partitions.size());
    if (parallel) {
        std::vector<std::future<IndexRow>> futures;
        futures.reserve(partitions.size());
        for (const auto& p : partitions)
            futures.push_back(std::async(std::launch::async,
                                         [&m, p, max_boxes] { return audit_row(m, p, max_boxes); }));
        for (size_t i = 0; i < futures.size(); ++i) report.rows[i] = futures[i].get();
    } else {
        for (size_t i = 0; i < partitions.size(); ++i)
            report.rows[i] = audit_row(m, partitions[i], max_boxes);
    }

    IndexDistribution dist = index_distribution(m, max_boxes);
    IndexDistribution printed = index_distribution(m, max_boxes, true);
    for (size_t i = 0; i < partitions.size(); ++i) {
        const IndexRow& row = report.rows[i];
        report.all_integral = report.all_integral && row.integral_total;
        report.weight_oracle_all_ok = report.weight_oracle_all_ok && row.weight_oracle_ok;
        report.reportable_all_ok = report.reportable_all_ok && row.reportable_ok;
        if (!row.reportable_ok) continue;
        std::string diag;
        Rational direct = index_character(m, partitions[i], max_boxes, &diag);
        if (dist.pair_with_character(partitions[i]) != direct)
            report.theorem_distribution_consistent = false;
        // The corollary as printed drops the (1/N) chi_nat(g) central
        // weights, so its character pairing carries sum_g omega^{-boxes}(g)
        // instead, which vanishes on the natural class.
        if (corollary_as_printed_character(m, partitions[i], max_boxes) != direct)
            report.as_printed_matches_theorem = false;
    }

    Rational bump = dist.pair_with_bump(TestFunction::unit_bump_at_identity(N));
    Rational bump_printed = printed.pair_with_bump(TestFunction::unit_bump_at_identity(N));
    report.bump_matches_fractional =
        (bump == report.fractional) && (bump_printed == report.fractional);
    return report;
}

}  // namespace eqindex
