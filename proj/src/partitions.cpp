#include "eqindex/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace eqindex {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

int Partition::boxes() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ",";
        os << parts[i];
    }
    os << ")";
    return os.str();
}

std::string Partition::csv() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ",";
        os << parts[i];
    }
    return os.str();
}

bool operator<(const Partition& a, const Partition& b) {
    int ba = a.boxes(), bb = b.boxes();
    if (ba != bb) return ba < bb;
    return std::lexicographical_compare(b.parts.begin(), b.parts.end(),
                                        a.parts.begin(), a.parts.end());
}

Partition parse_partition(const std::string& csv) {
    std::vector<int> parts;
    std::istringstream is(csv);
    std::string piece;
    while (std::getline(is, piece, ',')) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(piece, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("parse_partition: bad part '" + piece + "'");
        }
        if (pos != piece.size())
            throw std::invalid_argument("parse_partition: bad part '" + piece + "'");
        parts.push_back(v);
    }
    if (parts.empty()) throw std::invalid_argument("parse_partition: empty partition");
    return Partition(parts);
}

bool is_reduced(const Partition& p, int N) { return p.rows() <= N - 1; }

Partition reduce_partition(const Partition& p, int N) {
    if (p.rows() > N)
        throw std::invalid_argument("reduce_partition: more than N rows for SU(N)");
    if (p.rows() < N) return p;
    int strip = p.parts.back();
    std::vector<int> out;
    for (int v : p.parts)
        if (v - strip > 0) out.push_back(v - strip);
    return Partition(out);
}

int central_character(const Partition& p, int N) {
    int r = p.boxes() % N;
    return r < 0 ? r + N : r;
}

long weyl_dim(const Partition& p, int N) {
    if (!is_reduced(p, N)) throw std::invalid_argument("weyl_dim: partition not reduced");
    std::vector<long> lam(size_t(N), 0);
    for (int i = 0; i < p.rows(); ++i) lam[size_t(i)] = p.parts[size_t(i)];
    Rational d(1);
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            Rational f(lam[size_t(i)] - lam[size_t(j)] + j - i, j - i);
            f.canonicalize();
            d *= f;
        }
    if (d.get_den() != 1)
        throw std::logic_error("weyl_dim: non-integer result");
    return d.get_num().get_si();
}

namespace {

void gen_partitions(int remaining, int max_part, int max_rows, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (max_rows == 0) return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        cur.push_back(part);
        gen_partitions(remaining - part, part, max_rows - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_nat_class(int N, int max_boxes) {
    if (max_boxes < 1) throw std::invalid_argument("enumerate_nat_class: max_boxes >= 1");
    std::vector<Partition> out;
    for (int b = 1; b <= max_boxes; ++b) {
        if (b % N != 1 % N) continue;
        std::vector<int> cur;
        gen_partitions(b, b, N - 1, cur, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void gen_ssyt(const Partition& p, int N, std::vector<std::vector<int>>& tableau,
              int row, int col, std::vector<int>& content,
              std::vector<std::vector<int>>& out) {
    if (row == p.rows()) {
        out.push_back(content);
        return;
    }
    int next_row = row, next_col = col + 1;
    if (next_col == p.parts[size_t(row)]) {
        next_row = row + 1;
        next_col = 0;
    }
    int lo = 1;
    if (col > 0) lo = std::max(lo, tableau[size_t(row)][size_t(col - 1)]);
    if (row > 0) lo = std::max(lo, tableau[size_t(row - 1)][size_t(col)] + 1);
    for (int v = lo; v <= N; ++v) {
        tableau[size_t(row)][size_t(col)] = v;
        content[size_t(v - 1)] += 1;
        gen_ssyt(p, N, tableau, next_row, next_col, content, out);
        content[size_t(v - 1)] -= 1;
    }
}

}  // namespace

std::vector<std::vector<int>> ssyt_contents(const Partition& p, int N) {
    std::vector<std::vector<int>> out;
    if (p.rows() > N) return out;
    if (p.empty()) {
        out.emplace_back(size_t(N), 0);
        return out;
    }
    std::vector<std::vector<int>> tableau;
    for (int r = 0; r < p.rows(); ++r)
        tableau.emplace_back(size_t(p.parts[size_t(r)]), 0);
    std::vector<int> content(size_t(N), 0);
    gen_ssyt(p, N, tableau, 0, 0, content, out);
    return out;
}

}  // namespace eqindex
