#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "hexq/parity.hpp"
#include "hexq/quadratic.hpp"
#include "hexq/report.hpp"
#include "hexq/series.hpp"

namespace hexq {

// floor(sqrt(v)), exact.
std::uint64_t isqrt(std::uint64_t v);
bool is_square(std::uint64_t v);
bool is_square(const Integer& v);

/// The condition "multiplier * n + offset is a perfect square".
struct SquareProgression {
    std::uint64_t multiplier = 1;
    std::uint64_t offset = 0;

    std::uint64_t value(std::uint64_t n) const { return multiplier * n + offset; }
    bool contains(std::uint64_t n) const { return is_square(value(n)); }

    // (120, (3s-5)^2) for s in {2,4}; (40, s^2) for s in {1,3}.
    static SquareProgression theorem1(int s);
    // (20, (s-1)^2) for s in {2,4}; (15, (s+1)^2/4) for s in {1,3}.
    static SquareProgression corollary2_index(int s);

    friend bool operator==(const SquareProgression&, const SquareProgression&) = default;
};

TruncatedSeries indicator_series(const SquareProgression& p, std::size_t order);
ParitySeries indicator_parity(const SquareProgression& p, std::size_t order);

// All k <= n_max with p.contains(k), ascending.
std::vector<std::uint64_t> index_set(const SquareProgression& p, std::size_t n_max);

// {e(k) : k in Z, 0 <= e(k) <= bound}, ascending.
std::vector<std::int64_t> exponent_values(const QuadraticExponentFamily& family,
                                          std::int64_t bound);

// How many (family, k) pairs land on each exponent value <= bound.
std::map<std::int64_t, int> exponent_multiplicity(std::span<const QuadraticExponentFamily> families,
                                                  std::int64_t bound);

/// Checks that the exponents of `families` up to `bound` are exactly the
/// index set of `p`, each hit by exactly one (family, k) pair.
///
/// A violation (n, hits, indicator) is recorded wherever the hit count differs
/// from the indicator value; this also catches collisions on members.
CheckReport verify_set_equivalence(std::span<const QuadraticExponentFamily> families,
                                   const SquareProgression& p, std::int64_t bound,
                                   std::string check_id = "set-equivalence", Params params = {});

}  // namespace hexq
