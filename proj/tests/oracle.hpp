#pragma once

// Small independent reference implementations used by the tests. They work on
// plain int64 polynomials and never call into the library's series code.

#include <cstdint>
#include <random>
#include <vector>

#include "hexq/series.hpp"

namespace oracle {

using Poly = std::vector<std::int64_t>;

inline Poly mul(const Poly& a, const Poly& b, std::size_t order) {
    Poly out(order + 1, 0);
    for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
        for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// prod_{i<count} (1 + sign q^(offset + i*step)), truncated.
inline Poly finite_product(int sign, std::size_t offset, std::size_t step, std::size_t count,
                           std::size_t order) {
    Poly acc(order + 1, 0);
    acc[0] = 1;
    for (std::size_t i = 0; i < count; ++i) {
        Poly factor(order + 1, 0);
        factor[0] = 1;
        const std::size_t e = offset + i * step;
        if (e <= order) {
            factor[e] += sign;
        }
        acc = mul(acc, factor, order);
    }
    return acc;
}

inline hexq::TruncatedSeries to_series(const Poly& p) {
    std::vector<hexq::Integer> c(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        c[i] = static_cast<long>(p[i]);
    }
    return hexq::TruncatedSeries(std::move(c));
}

inline Poly random_poly(std::mt19937_64& rng, std::size_t order, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> dist(lo, hi);
    Poly p(order + 1);
    for (auto& c : p) {
        c = dist(rng);
    }
    return p;
}

}  // namespace oracle
