#pragma once

#include <string>
#include <vector>

#include "eqindex/rational.hpp"

namespace eqindex {

/// Integer partition labelling an irreducible SU(N) representation.
/// Reduced form for SU(N) means at most N-1 rows (no height-N column).
struct Partition {
    std::vector<int> parts;  // weakly decreasing, positive

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int boxes() const;
    int rows() const { return int(parts.size()); }
    bool empty() const { return parts.empty(); }

    std::string str() const;  // "(3,2)" style
    std::string csv() const;  // "3,2" style

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts == b.parts;
    }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    // Order used everywhere rows are listed: box count first, then
    // lexicographically descending parts.
    friend bool operator<(const Partition& a, const Partition& b);
};

Partition parse_partition(const std::string& csv);

bool is_reduced(const Partition& p, int N);

/// Strips height-N columns; throws when the partition has more than N rows.
Partition reduce_partition(const Partition& p, int N);

/// Residue boxes(p) mod N; the center acts by omega^{central_character}.
int central_character(const Partition& p, int N);

/// Weyl dimension formula for the SU(N) irrep with highest weight p.
long weyl_dim(const Partition& p, int N);

/// All reduced partitions with boxes == 1 (mod N) and boxes <= max_boxes,
/// in the canonical order.
std::vector<Partition> enumerate_nat_class(int N, int max_boxes);

/// Content vectors of all semistandard Young tableaux of the given shape
/// with entries in {1..N}.  Their count is weyl_dim, their multiset is the
/// weight system of the irrep.
std::vector<std::vector<int>> ssyt_contents(const Partition& p, int N);

}  // namespace eqindex
