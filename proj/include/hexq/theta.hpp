#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hexq/parity.hpp"
#include "hexq/quadratic.hpp"
#include "hexq/series.hpp"

namespace hexq {

/// Two independently computed sides of an identity.
struct SeriesPair {
    TruncatedSeries lhs;
    TruncatedSeries rhs;
};

/// A monomial substitution x -> sign * q^exp.
struct Monomial {
    int sign = 1;
    std::size_t exp = 1;
};

// sum over k in Z and all families of sign(k) q^e(k), truncated at `order`.
TruncatedSeries bilateral_sum(std::span<const QuadraticExponentFamily> families,
                              std::size_t order);

// k(3k-1)/2 with sign (-1)^k; sums to (q;q)_inf.
QuadraticExponentFamily pentagonal_family();
// n(15n+3s-5)/2 and (3n-s/2)(5n-3+s/2)/2, both with sign (-1)^(n((s-1)n-1)/2); s in {2,4}.
std::vector<QuadraticExponentFamily> eq41_families(int s);
// n(5n-s)/2 with sign (-1)^(n(n+s)/2); s in {1,3}.
std::vector<QuadraticExponentFamily> eq42_families(int s);

// (base; Q^step)_inf where Q is the substituted q. A negative sign on Q splits
// the product into even- and odd-index factors.
std::vector<QPochhammerSpec> substituted_pochhammer(Monomial base, Monomial q, std::size_t step = 1);

// Jacobi triple product sum_n (-z)^n q^(n(n-1)/2) = (z, q/z, q; q)_inf under
// z -> z.sign q^z.exp, q -> q.sign q^q.exp. lhs is the sum side.
SeriesPair jtp_sides(Monomial z, Monomial q, std::size_t order);
// Quintuple product sum_n z^(3n) q^(n(3n-1)/2) (1 - z q^n)
//   = (q, z, q/z; q)_inf (q z^2, q/z^2; q^2)_inf, same conventions.
SeriesPair quintuple_sides(Monomial z, Monomial q, std::size_t order);

// 1 + 2 sum_{n>=1} (-1)^n q^(n^2) against (q;q)_inf / (-q;q)_inf.
SeriesPair gauss_theta_sides(std::size_t order);

// 1 + 2 sum_{j=1}^k (-1)^j q^(step*j^2)
TruncatedSeries partial_gauss_sum(std::size_t k, std::size_t order, std::size_t step = 2);

// Truncated Gauss identity with q -> q^step (step = 2 is the form used for the
// mod 2 argument, step = 1 the original):
//   lhs = (-1)^k ( (-Q;Q)_inf/(Q;Q)_inf * partial_gauss_sum(k) - 1 )
//   rhs = 2 (-Q;Q)_k/(Q;Q)_k sum_{j>=0} Q^((k+1)(k+j+1)) (-Q^(k+j+2);Q)_inf
//         / ((1 - Q^(k+j+1)) (Q^(k+j+2);Q)_inf)
TruncatedSeries truncated_gauss_lhs(std::size_t k, std::size_t order, std::size_t step = 2);
TruncatedSeries truncated_gauss_rhs(std::size_t k, std::size_t order, std::size_t step = 2);

// Rogers-Ramanujan: sum form (lhs) and product form (rhs).
SeriesPair rr_G(std::size_t order);
SeriesPair rr_H(std::size_t order);

// sum_{n>=0} (-q;q)_n q^(n(3n+s-1)/2) / (q;q)_{2n+1}, s in {2,4}
TruncatedSeries regime3_sum(int s, std::size_t order);
// sum_{n>=0} q^(n(n+1)) / (q;q)_{2n+(s-1)/2}, s in {1,3}
TruncatedSeries regime4_sum(int s, std::size_t order);

// The same sums computed directly over GF(2).
ParitySeries regime3_sum_parity(int s, std::size_t order);
ParitySeries regime4_sum_parity(int s, std::size_t order);

// G(q^2)/(q;q^2)_inf for s = 2, H(q^2)/(q;q^2)_inf for s = 4.
TruncatedSeries regime3_product(int s, std::size_t order);
// (q^s, q^(10-s), q^10; q^10)_inf (q^(10-2s), q^(10+2s); q^20)_inf / (q;q)_inf
TruncatedSeries regime4_product(int s, std::size_t order);

SeriesPair eq41_sides(int s, std::size_t order);

enum class Eq42Reading {
    FirstFactorQs,  // (q^s, q^(10-s), q^10; q^10)_inf
    LiteralQ2,      // (q^2, q^(10-s), q^10; q^10)_inf taken literally
};

SeriesPair eq42_sides(int s, std::size_t order, Eq42Reading reading = Eq42Reading::FirstFactorQs);

}  // namespace hexq
