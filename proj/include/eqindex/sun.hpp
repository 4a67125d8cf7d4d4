#pragma once

#include <vector>

#include "eqindex/gmatrix.hpp"

namespace eqindex {

/// Fixed basis of su(N), in this order:
///   E_ab - E_ba            for a < b (lex on (a,b)),
///   i (E_ab + E_ba)        for a < b (lex on (a,b)),
///   i (E_aa - E_{a+1,a+1}) for a = 1..N-1.
/// All downstream traces are basis-independent; fixing one basis keeps
/// golden outputs bit-stable.
std::vector<GMatrix> su_basis(int N);

/// Gram matrix of the invariant form B(X,Y) = 2 tr(XY) on the fixed basis.
/// This normalization gives Casimir(natural of SU(2)) = 3/4.
std::vector<std::vector<Rational>> su_gram(int N);

/// Inverse Gram matrix; the quadratic Casimir is
/// sum_{a,b} gram_inv[a][b] X_a X_b.
std::vector<std::vector<Rational>> su_gram_inverse(int N);

/// Coordinates of an su(N) element (traceless skew-hermitian, Gaussian
/// rational) in the fixed basis; exact, throws if the input is not in su(N).
std::vector<Rational> su_decompose(int N, const GMatrix& x);

}  // namespace eqindex
