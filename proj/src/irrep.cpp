#include "eqindex/irrep.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "eqindex/sun.hpp"

namespace eqindex {

namespace {

// Cells of the shape numbered in row-reading order; positions per row and
// per column of the chosen standard tableau.
struct TableauLayout {
    std::vector<std::vector<int>> row_positions;
    std::vector<std::vector<int>> col_positions;
    int boxes = 0;
};

TableauLayout layout_of(const Partition& p) {
    TableauLayout t;
    int next = 0;
    int ncols = p.empty() ? 0 : p.parts[0];
    t.col_positions.resize(size_t(ncols));
    for (int r = 0; r < p.rows(); ++r) {
        std::vector<int> row;
        for (int c = 0; c < p.parts[size_t(r)]; ++c) {
            row.push_back(next);
            t.col_positions[size_t(c)].push_back(next);
            ++next;
        }
        t.row_positions.push_back(std::move(row));
    }
    t.boxes = next;
    return t;
}

size_t pack_word(const std::vector<int>& w, int N) {
    size_t idx = 0;
    for (int letter : w) idx = idx * size_t(N) + size_t(letter);
    return idx;
}

void unpack_word(size_t idx, int N, int k, std::vector<int>& w) {
    w.assign(size_t(k), 0);
    for (int pos = k - 1; pos >= 0; --pos) {
        w[size_t(pos)] = int(idx % size_t(N));
        idx /= size_t(N);
    }
}

// All distinct rearrangements of the letters of w within each row (the row
// symmetrizer up to a positive stabilizer factor), then the signed column
// group, applied to the elementary tensor e_w.  Integer coefficients.
std::map<size_t, long long> young_apply(const TableauLayout& t, const std::vector<int>& w,
                                        int N) {
    // Per-row distinct arrangements.
    std::vector<std::vector<std::vector<int>>> row_arrangements;
    for (const auto& pos : t.row_positions) {
        std::vector<int> letters;
        for (int p : pos) letters.push_back(w[size_t(p)]);
        std::sort(letters.begin(), letters.end());
        std::vector<std::vector<int>> arrs;
        do {
            arrs.push_back(letters);
        } while (std::next_permutation(letters.begin(), letters.end()));
        row_arrangements.push_back(std::move(arrs));
    }

    // Column group as full-position maps with signs.
    std::vector<std::pair<std::vector<int>, int>> col_group;
    col_group.push_back({std::vector<int>(size_t(t.boxes)), 1});
    std::iota(col_group[0].first.begin(), col_group[0].first.end(), 0);
    for (const auto& col : t.col_positions) {
        if (col.size() < 2) continue;
        std::vector<int> order(col.size());
        std::iota(order.begin(), order.end(), 0);
        std::vector<std::pair<std::vector<int>, int>> next;
        do {
            // Sign of this arrangement of the column.
            int inv = 0;
            for (size_t i = 0; i < order.size(); ++i)
                for (size_t j = i + 1; j < order.size(); ++j)
                    if (order[i] > order[j]) ++inv;
            int sgn = (inv % 2 == 0) ? 1 : -1;
            for (const auto& [base, bsgn] : col_group) {
                std::vector<int> m = base;
                for (size_t i = 0; i < col.size(); ++i)
                    m[size_t(col[i])] = base[size_t(col[size_t(order[i])])];
                next.push_back({std::move(m), bsgn * sgn});
            }
        } while (std::next_permutation(order.begin(), order.end()));
        col_group = std::move(next);
    }

    std::map<size_t, long long> out;
    std::vector<int> wr(size_t(t.boxes));
    std::vector<int> wc(size_t(t.boxes));
    // Cartesian product of row arrangements.
    std::vector<size_t> pick(row_arrangements.size(), 0);
    while (true) {
        for (size_t r = 0; r < row_arrangements.size(); ++r) {
            const auto& pos = t.row_positions[r];
            const auto& arr = row_arrangements[r][pick[r]];
            for (size_t i = 0; i < pos.size(); ++i) wr[size_t(pos[i])] = arr[i];
        }
        for (const auto& [perm, sgn] : col_group) {
            for (int j = 0; j < t.boxes; ++j) wc[size_t(perm[size_t(j)])] = wr[size_t(j)];
            out[pack_word(wc, N)] += sgn;
        }
        // Advance the mixed-radix picker.
        size_t r = 0;
        while (r < pick.size()) {
            if (++pick[r] < row_arrangements[r].size()) break;
            pick[r] = 0;
            ++r;
        }
        if (r == pick.size()) break;
    }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

// Leibniz action of an N x N matrix on a dense tensor vector.
std::vector<GRational> leibniz_apply(const GMatrix& x, const std::vector<GRational>& v,
                                     int N, int k) {
    std::vector<GRational> out(v.size());
    std::vector<int> w;
    size_t stride = 1;
    std::vector<size_t> strides(static_cast<size_t>(k));
    for (int pos = k - 1; pos >= 0; --pos) {
        strides[size_t(pos)] = stride;
        stride *= size_t(N);
    }
    for (size_t idx = 0; idx < v.size(); ++idx) {
        if (v[idx].is_zero()) continue;
        unpack_word(idx, N, k, w);
        for (int pos = 0; pos < k; ++pos) {
            int letter = w[size_t(pos)];
            for (int r = 0; r < N; ++r) {
                const GRational& c = x.at(r, letter);
                if (c.is_zero()) continue;
                size_t nidx =
                    idx - size_t(letter) * strides[size_t(pos)] + size_t(r) * strides[size_t(pos)];
                out[nidx] += c * v[idx];
            }
        }
    }
    return out;
}

void verify_irrep(Irrep& rep, const std::vector<GMatrix>& basis) {
    const size_t nb = basis.size();
    const int N = rep.N;
    const long d = rep.dim;

    for (const auto& m : rep.lie_images) {
        if (!m.trace().is_zero()) throw std::logic_error("build_irrep: image not traceless");
        // Skew-adjointness for the invariant form: G M = -M^dagger G.
        if (rep.gram * m != -(m.conj_transpose() * rep.gram))
            throw std::logic_error("build_irrep: image not skew-adjoint for the gram form");
    }

    // Bracket fidelity on all basis pairs.
    for (size_t a = 0; a < nb; ++a)
        for (size_t b = a + 1; b < nb; ++b) {
            GMatrix lhs = GMatrix::commutator(rep.lie_images[a], rep.lie_images[b]);
            std::vector<Rational> f = su_decompose(N, GMatrix::commutator(basis[a], basis[b]));
            GMatrix rhs(static_cast<int>(d), static_cast<int>(d));
            for (size_t c = 0; c < nb; ++c) {
                if (f[c] == 0) continue;
                rhs += GRational(f[c]) * rep.lie_images[c];
            }
            if (lhs != rhs) throw std::logic_error("build_irrep: bracket fidelity violated");
        }

    // Quadratic Casimir is the expected scalar.
    auto ginv = su_gram_inverse(N);
    GMatrix cas(static_cast<int>(d), static_cast<int>(d));
    for (size_t a = 0; a < nb; ++a) {
        GMatrix dual(static_cast<int>(d), static_cast<int>(d));
        for (size_t b = 0; b < nb; ++b) {
            if (ginv[a][b] == 0) continue;
            dual += GRational(ginv[a][b]) * rep.lie_images[b];
        }
        cas += rep.lie_images[a] * dual;
    }
    Rational expected = casimir_eigenvalue(rep.partition, N);
    GMatrix scalar = GRational(expected) * GMatrix::identity(int(d));
    if (cas != scalar) throw std::logic_error("build_irrep: Casimir is not the expected scalar");
    rep.casimir = expected;
}

}  // namespace

Rational casimir_eigenvalue(const Partition& p, int N) {
    std::vector<Rational> mu(size_t(N), Rational(0));
    for (int i = 0; i < p.rows(); ++i) mu[size_t(i)] = p.parts[size_t(i)];
    Rational avg(p.boxes(), N);
    avg.canonicalize();
    Rational val(0);
    for (int i = 0; i < N; ++i) {
        Rational m = mu[size_t(i)] - avg;
        Rational rho(N - 1 - 2 * i, 2);
        rho.canonicalize();
        val += m * m + 2 * m * rho;
    }
    return val / 2;
}

GMatrix Irrep::act(const GMatrix& x) const {
    std::vector<Rational> coords = su_decompose(N, x);
    GMatrix out(static_cast<int>(dim), static_cast<int>(dim));
    for (size_t a = 0; a < coords.size(); ++a) {
        if (coords[a] == 0) continue;
        out += GRational(coords[a]) * lie_images[a];
    }
    return out;
}

GRational Irrep::trace_word(const std::vector<int>& word) const {
    if (word.empty()) return GRational(long(dim));
    for (int idx : word)
        if (idx < 0 || size_t(idx) >= lie_images.size())
            throw std::invalid_argument("trace_word: basis index out of range");
    if (word.size() == 1) return lie_images[size_t(word[0])].trace();
    if (word.size() == 2)
        return GMatrix::trace_product(lie_images[size_t(word[0])],
                                      lie_images[size_t(word[1])]);
    GMatrix prod = lie_images[size_t(word[0])];
    for (size_t i = 1; i + 1 < word.size(); ++i) prod = prod * lie_images[size_t(word[i])];
    return GMatrix::trace_product(prod, lie_images[size_t(word.back())]);
}

Irrep build_irrep(const Partition& p, int N, int max_boxes) {
    if (N != 2 && N != 4) throw std::invalid_argument("build_irrep: N must be 2 or 4");
    if (!is_reduced(p, N)) throw std::invalid_argument("build_irrep: partition not reduced");
    if (p.boxes() > max_boxes)
        throw std::invalid_argument("build_irrep: box count exceeds cutoff");

    Irrep rep;
    rep.partition = p;
    rep.N = N;
    rep.central_char = central_character(p, N);

    auto basis = su_basis(N);

    const int k = p.boxes();
    if (k == 0) {
        rep.dim = 1;
        rep.lie_images.assign(basis.size(), GMatrix(1, 1));
        rep.gram = GMatrix::identity(1);
        rep.casimir = 0;
        return rep;
    }

    const long target = weyl_dim(p, N);
    size_t tensor_dim = 1;
    for (int i = 0; i < k; ++i) tensor_dim *= size_t(N);

    TableauLayout layout = layout_of(p);
    RowSpan span(tensor_dim);
    std::vector<int> w;
    for (size_t idx = 0; idx < tensor_dim && long(span.rank()) < target; ++idx) {
        unpack_word(idx, N, k, w);
        auto terms = young_apply(layout, w, N);
        if (terms.empty()) continue;
        std::vector<GRational> vec(tensor_dim);
        for (const auto& [i, c] : terms) vec[i] = GRational(long(c));
        span.insert(std::move(vec));
    }
    if (long(span.rank()) != target)
        throw std::logic_error("build_irrep: symmetrizer image has unexpected dimension");
    rep.dim = target;

    const auto& b = span.rows();
    const auto& piv = span.pivots();

    rep.gram = GMatrix(static_cast<int>(target), static_cast<int>(target));
    for (long i = 0; i < target; ++i)
        for (long j = 0; j < target; ++j) {
            GRational dot;
            for (size_t c = 0; c < tensor_dim; ++c) {
                if (b[size_t(i)][c].is_zero() || b[size_t(j)][c].is_zero()) continue;
                dot += b[size_t(i)][c].conj() * b[size_t(j)][c];
            }
            rep.gram.at(int(i), int(j)) = dot;
        }

    for (const auto& x : basis) {
        GMatrix m(static_cast<int>(target), static_cast<int>(target));
        for (long j = 0; j < target; ++j) {
            std::vector<GRational> y = leibniz_apply(x, b[size_t(j)], N, k);
            for (long i = 0; i < target; ++i) m.at(int(i), int(j)) = y[piv[size_t(i)]];
        }
        rep.lie_images.push_back(std::move(m));
    }

    verify_irrep(rep, basis);
    return rep;
}

const Irrep& get_irrep(const Partition& p, int N, int max_boxes) {
    static std::mutex mu;
    static std::map<std::pair<int, Partition>, Irrep> cache;
    std::unique_lock lock(mu);
    auto key = std::make_pair(N, p);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    lock.unlock();
    Irrep rep = build_irrep(p, N, max_boxes);
    lock.lock();
    return cache.emplace(key, std::move(rep)).first->second;
}

namespace {

// Complete homogeneous symmetric polynomials h_0..h_max at the given points.
std::vector<GRational> homogeneous_sums(const std::vector<GRational>& xs, int hmax) {
    std::vector<GRational> h(size_t(hmax) + 1);
    h[0] = GRational(1);
    for (const GRational& x : xs) {
        // Multiply the running series by 1/(1 - x t) up to degree hmax.
        for (int j = 1; j <= hmax; ++j) h[size_t(j)] += x * h[size_t(j - 1)];
    }
    return h;
}

GRational det_small(std::vector<std::vector<GRational>> m) {
    size_t n = m.size();
    if (n == 0) return GRational(1);
    if (n == 1) return m[0][0];
    GRational det;
    int sgn = 1;
    for (size_t c = 0; c < n; ++c) {
        std::vector<std::vector<GRational>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<GRational> row;
            for (size_t j = 0; j < n; ++j)
                if (j != c) row.push_back(m[i][j]);
            minor.push_back(std::move(row));
        }
        GRational term = m[0][c] * det_small(std::move(minor));
        det += (sgn > 0) ? term : -term;
        sgn = -sgn;
    }
    return det;
}

}  // namespace

GRational character_at_torus(const Partition& p, const std::vector<GRational>& phases) {
    const int N = int(phases.size());
    if (N < 2) throw std::invalid_argument("character_at_torus: need at least 2 phases");
    if (!is_reduced(p, N))
        throw std::invalid_argument("character_at_torus: partition not reduced");
    GRational prod(1);
    for (const auto& q : phases) {
        if (q.norm() != 1 || !(q.real() == 0 || q.imag() == 0))
            throw std::invalid_argument(
                "character_at_torus: phases must be unit Gaussian rationals (1, -1, i, -i)");
        prod *= q;
    }
    if (prod != GRational(1))
        throw std::invalid_argument("character_at_torus: phases must multiply to 1");

    if (p.empty()) return GRational(1);

    // Jacobi-Trudi: s_lambda = det(h_{lambda_i - i + j}).
    const int rows = p.rows();
    auto h = homogeneous_sums(phases, p.parts[0] + rows);
    std::vector<std::vector<GRational>> m(static_cast<size_t>(rows), std::vector<GRational>(static_cast<size_t>(rows)));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < rows; ++j) {
            int deg = p.parts[size_t(i)] - (i + 1) + (j + 1);
            m[size_t(i)][size_t(j)] =
                (deg < 0) ? GRational(0) : h[size_t(deg)];
        }
    GRational s = det_small(std::move(m));
    return s / GRational(weyl_dim(p, N));
}

}  // namespace eqindex
