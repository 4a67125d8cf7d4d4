#include "eqindex/distributions.hpp"

#include <stdexcept>

#include "eqindex/engine.hpp"
#include "eqindex/sun.hpp"

namespace eqindex {

EnvElement EnvElement::word(const std::vector<int>& w, const GRational& c) {
    EnvElement e{{{c, w}}};
    e.validate();
    return e;
}

EnvElement EnvElement::casimir(int N) {
    auto ginv = su_gram_inverse(N);
    EnvElement e;
    for (size_t a = 0; a < ginv.size(); ++a)
        for (size_t b = 0; b < ginv.size(); ++b) {
            if (ginv[a][b] == 0) continue;
            e.terms.push_back({GRational(ginv[a][b]), {int(a), int(b)}});
        }
    return e;
}

void EnvElement::validate() const {
    for (const auto& [c, w] : terms)
        if (int(w.size()) > kMaxWordLength)
            throw std::invalid_argument("EnvElement: word length bound exceeded");
}

GRational central_root(int N, int exponent) {
    int e = ((exponent % N) + N) % N;
    switch (N) {
        case 1:
            return GRational(1);
        case 2:
            return e == 0 ? GRational(1) : GRational(-1);
        case 4:
            switch (e) {
                case 0: return GRational(1);
                case 1: return GRational::i();
                case 2: return GRational(-1);
                default: return -GRational::i();
            }
        default:
            throw std::invalid_argument("central_root: exact roots of unity need N in {1,2,4}");
    }
}

TestFunction TestFunction::character(int N, const Partition& p, int translate) {
    TestFunction f;
    f.kind = Kind::CharacterSum;
    f.N = N;
    f.characters.N = N;
    f.characters.coefficients[p] = GRational(1);
    f.translate = translate;
    return f;
}

TestFunction TestFunction::character_sum(const ClassFunction& cf, int translate) {
    TestFunction f;
    f.kind = Kind::CharacterSum;
    f.N = cf.N;
    f.characters = cf;
    f.translate = translate;
    return f;
}

TestFunction TestFunction::unit_bump_at_identity(int N) {
    TestFunction f;
    f.kind = Kind::CentralBump;
    f.N = N;
    f.bump_values[0] = GRational(1);
    f.flat = true;
    return f;
}

TestFunction TestFunction::bump(int N, std::map<int, GRational> values, bool flat) {
    TestFunction f;
    f.kind = Kind::CentralBump;
    f.N = N;
    f.bump_values = std::move(values);
    f.flat = flat;
    return f;
}

namespace {

// Trace of sigma over the antipode of a word: (-1)^k times the reversed
// product.  The conditional expectation is invisible here because
// Tr(pi(T(a))) = Tr(pi(a)) in every irreducible pi.
GRational trace_antipode(const Irrep& rep, const std::vector<int>& w) {
    std::vector<int> rev(w.rbegin(), w.rend());
    GRational t = rep.trace_word(rev);
    return (w.size() % 2 == 0) ? t : -t;
}

}  // namespace

GRational env_pair(const EnvElement& a, const TestFunction& phi, int max_boxes) {
    if (phi.kind != TestFunction::Kind::CharacterSum)
        throw std::invalid_argument(
            "env_pair: derivatives of bumps are out of scope; bumps pair only through "
            "index distributions");
    a.validate();
    GRational out;
    for (const auto& [p, coeff] : phi.characters.coefficients) {
        const Irrep& rep = get_irrep(p, phi.N, max_boxes);
        GRational factor =
            coeff * central_root(phi.N, -phi.translate * p.boxes()) / GRational(rep.dim);
        for (const auto& [c, w] : a.terms) out += c * factor * trace_antipode(rep, w);
    }
    return out;
}

std::pair<GRational, GRational> lemma_both_sides(const EnvElement& a, const TestFunction& phi,
                                                 int N, int max_boxes) {
    if (phi.kind != TestFunction::Kind::CharacterSum)
        throw std::invalid_argument("lemma_both_sides: phi must be a character sum");
    if (phi.N != N) throw std::invalid_argument("lemma_both_sides: N mismatch");
    a.validate();
    for (const auto& [p, coeff] : phi.characters.coefficients)
        if (p.boxes() > max_boxes)
            throw std::invalid_argument(
                "lemma_both_sides: phi support exceeds the built irrep cutoff");

    // Left side: sum over the natural class of Tr(pi(a)) Tr(conj(pi)(phi)).
    GRational lhs;
    for (const Partition& p : enumerate_nat_class(N, max_boxes)) {
        auto it = phi.characters.coefficients.find(p);
        if (it == phi.characters.coefficients.end()) continue;
        const Irrep& rep = get_irrep(p, N, max_boxes);
        GRational tr_a;
        for (const auto& [c, w] : a.terms) tr_a += c * rep.trace_word(w);
        // Tr(conj(pi)(lambda_g chi^p)) = omega_p(g)^{-1} / d_p.
        GRational tr_phi =
            it->second * central_root(N, -phi.translate * p.boxes()) / GRational(rep.dim);
        lhs += tr_a * tr_phi;
    }

    // Right side: (1/N) sum_g chi_nat(g) <T(a), lambda_g phi>.
    GRational rhs;
    for (int r = 0; r < N; ++r) {
        GRational inner;
        for (const auto& [p, coeff] : phi.characters.coefficients) {
            const Irrep& rep = get_irrep(p, N, max_boxes);
            GRational factor = coeff *
                               central_root(N, -(phi.translate + r) * p.boxes()) /
                               GRational(rep.dim);
            for (const auto& [c, w] : a.terms) inner += c * factor * trace_antipode(rep, w);
        }
        rhs += central_root(N, r) * inner;
    }
    rhs /= GRational(long(N));
    return {lhs, rhs};
}

IndexDistribution::IndexDistribution(ModelManifold model, int max_boxes,
                                     bool corollary_as_printed)
    : model_(std::move(model)),
      N_(1 << (model_.n / 2)),
      max_boxes_(max_boxes),
      as_printed_(corollary_as_printed) {
    if (model_.n % 2 != 0)
        throw std::invalid_argument("IndexDistribution: model dimension must be even");
}

const std::vector<Rational>& IndexDistribution::spectral_data(const Partition& p) const {
    std::unique_lock lock(mu_);
    auto it = cache_.find(p);
    if (it != cache_.end()) return it->second;
    lock.unlock();
    std::vector<Rational> data = spectral_integrals(model_, p, max_boxes_);
    lock.lock();
    return cache_.emplace(p, std::move(data)).first->second;
}

Rational IndexDistribution::pair_with_character(const Partition& p) const {
    if (central_character(p, N_) != 1 % N_) return Rational(0);
    const auto& data = spectral_data(p);
    Rational total(0);
    for (const auto& v : data) total += v;
    return total * weyl_dim(p, N_);
}

Rational IndexDistribution::pair_with_bump(const TestFunction& bump) const {
    if (bump.kind != TestFunction::Kind::CentralBump)
        throw std::invalid_argument("pair_with_bump: test function is not a central bump");
    if (bump.N != N_) throw std::invalid_argument("pair_with_bump: N mismatch");
    if (!bump.flat)
        throw std::invalid_argument("pair_with_bump: only flat bumps are in scope");

    Rational ahat_integral = fractional_index(model_);
    GRational total;
    if (!as_printed_) {
        // Unit central weights: sum_g w(g) phi(g) * int Ahat.
        for (const auto& [r, value] : bump.bump_values) total += value;
    } else {
        // Corollary as printed: sum over g in Z of <T(Omega^j), lambda_g phi>;
        // flatness kills j > 0 and the j = 0 term reads phi(g^{-1}).
        for (int r = 0; r < N_; ++r) {
            auto it = bump.bump_values.find(((-r % N_) + N_) % N_);
            if (it != bump.bump_values.end()) total += it->second;
        }
    }
    if (!total.is_real())
        throw std::domain_error("pair_with_bump: bump values must pair to a real rational");
    return total.real() * ahat_integral;
}

}  // namespace eqindex
