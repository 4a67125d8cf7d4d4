#include "eqindex/clifford.hpp"

#include <stdexcept>

namespace eqindex {

namespace {

GMatrix kron(const GMatrix& a, const GMatrix& b) {
    GMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const GRational& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    r.at(i * b.rows() + k, j * b.cols() + l) = aij * b.at(k, l);
        }
    return r;
}

GMatrix pauli_x() {
    GMatrix m(2, 2);
    m.at(0, 1) = GRational(1);
    m.at(1, 0) = GRational(1);
    return m;
}

GMatrix pauli_y() {
    GMatrix m(2, 2);
    m.at(0, 1) = -GRational::i();
    m.at(1, 0) = GRational::i();
    return m;
}

GMatrix pauli_z() {
    GMatrix m(2, 2);
    m.at(0, 0) = GRational(1);
    m.at(1, 1) = -GRational(1);
    return m;
}

// gamma_{2k-1} = sz^{(k-1)} x sx x 1...,  gamma_{2k} = sz^{(k-1)} x sy x 1...
GMatrix gamma_factor(int index, int half) {
    int k = index / 2;  // zero-based pair
    GMatrix m = GMatrix::identity(1);
    for (int f = 0; f < half; ++f) {
        if (f < k) {
            m = kron(m, pauli_z());
        } else if (f == k) {
            m = kron(m, (index % 2 == 0) ? pauli_x() : pauli_y());
        } else {
            m = kron(m, GMatrix::identity(2));
        }
    }
    return m;
}

void verify_model(const CliffordModel& model) {
    const int n = model.n;
    const int N = model.N;
    const GMatrix id = GMatrix::identity(N);
    for (int i = 0; i < n; ++i) {
        if (!model.generators[size_t(i)].is_skew_hermitian())
            throw std::logic_error("build_clifford: generator is not skew-hermitian");
        for (int j = 0; j < n; ++j) {
            GMatrix anti = model.generators[size_t(i)] * model.generators[size_t(j)] +
                           model.generators[size_t(j)] * model.generators[size_t(i)];
            GMatrix expect = (i == j) ? (GRational(-2) * id) : GMatrix(N, N);
            if (anti != expect)
                throw std::logic_error("build_clifford: Clifford relations violated");
        }
    }
    if (model.chirality * model.chirality != id)
        throw std::logic_error("build_clifford: chirality does not square to identity");
    for (int i = 0; i < n; ++i) {
        GMatrix anti = model.chirality * model.generators[size_t(i)] +
                       model.generators[size_t(i)] * model.chirality;
        if (!anti.is_zero())
            throw std::logic_error("build_clifford: chirality does not anticommute");
    }

    // Products over all generator subsets must span the full matrix algebra.
    RowSpan span(size_t(N) * N);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        GMatrix p = GMatrix::identity(N);
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) p = p * model.generators[size_t(i)];
        std::vector<GRational> flat;
        flat.reserve(size_t(N) * N);
        for (int r = 0; r < N; ++r)
            for (int c = 0; c < N; ++c) flat.push_back(p.at(r, c));
        span.insert(std::move(flat));
    }
    if (span.rank() != size_t(N) * N)
        throw std::logic_error("build_clifford: generators do not span M_N");
}

}  // namespace

GMatrix CliffordModel::clifford_vector(const std::vector<Rational>& v) const {
    if (int(v.size()) != n) throw std::invalid_argument("clifford_vector: wrong length");
    GMatrix r(N, N);
    for (int i = 0; i < n; ++i) {
        if (v[size_t(i)] == 0) continue;
        r += GRational(v[size_t(i)]) * generators[size_t(i)];
    }
    return r;
}

CliffordModel build_clifford(int n) {
    if (n % 2 != 0) throw std::invalid_argument("build_clifford: n must be even");
    if (n < 2 || n > 8) throw std::invalid_argument("build_clifford: supported range is 2..8");

    CliffordModel model;
    model.n = n;
    model.N = 1 << (n / 2);

    const GRational I = GRational::i();
    for (int idx = 0; idx < n; ++idx)
        model.generators.push_back(I * gamma_factor(idx, n / 2));

    GMatrix top = GMatrix::identity(model.N);
    for (int i = 0; i < n; ++i) top = top * model.generators[size_t(i)];
    // (c_1...c_n)^2 = (-1)^{n(n+1)/2}; the scalar below makes an involution.
    model.chirality = (n % 4 == 0) ? top : I * top;

    verify_model(model);
    return model;
}

GMatrix spin_embed(const CliffordModel& model, const GMatrix& a) {
    const int n = model.n;
    if (a.rows() != n || a.cols() != n)
        throw std::invalid_argument("spin_embed: matrix must be n x n");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!a.at(i, j).is_real())
                throw std::invalid_argument("spin_embed: matrix must be real rational");
            if (a.at(i, j) != -a.at(j, i))
                throw std::invalid_argument("spin_embed: matrix must be antisymmetric");
        }
    // (1/4) sum_ij A_ij c_j c_i.  This product order is what the derivation
    // identity [spin_embed(A), c(v)] = c(Av) forces for row-major A; it also
    // makes the map a Lie algebra homomorphism.
    GMatrix r(model.N, model.N);
    const GRational quarter(1, 4);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (a.at(i, j).is_zero()) continue;
            r += (quarter * a.at(i, j)) *
                 (model.generators[size_t(j)] * model.generators[size_t(i)]);
        }
    return r;
}

bool adjoint_action_check(const CliffordModel& model, const GMatrix& a,
                          const std::vector<Rational>& v) {
    GMatrix lhs = GMatrix::commutator(spin_embed(model, a), model.clifford_vector(v));
    std::vector<Rational> av(size_t(model.n), Rational(0));
    for (int i = 0; i < model.n; ++i)
        for (int j = 0; j < model.n; ++j) av[size_t(i)] += a.at(i, j).real() * v[size_t(j)];
    return lhs == model.clifford_vector(av);
}

}  // namespace eqindex
