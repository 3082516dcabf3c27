#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hexq/quadratic.hpp"
#include "hexq/series.hpp"

namespace hexq {

class OracleBoundExceeded : public std::runtime_error {
public:
    explicit OracleBoundExceeded(std::size_t n);
};

class TableTooSmall : public std::runtime_error {
public:
    TableTooSmall(std::size_t n, std::size_t n_max);
};

enum class Regime { III, IV };

/// Which part sizes a restricted partition may use.
///
/// Regime III (s in {2,4}): odd parts, or parts = 0, s, 10-s (mod 10).
/// Regime IV (s in {1,3}): parts != 0, s, 10-s (mod 10) and != +-(10-2s) (mod 20).
class PartResidueRule {
public:
    static PartResidueRule regime_iii(int s);
    static PartResidueRule regime_iv(int s);

    Regime regime() const noexcept { return regime_; }
    int s() const noexcept { return s_; }
    bool allows(std::size_t part) const;
    std::string name() const;

    friend bool operator==(const PartResidueRule&, const PartResidueRule&) = default;

private:
    PartResidueRule(Regime regime, int s) : regime_(regime), s_(s) {}

    Regime regime_;
    int s_;
};

// All four (regime, s) instances, regime III first.
std::vector<PartResidueRule> all_rules();

class PartitionTable {
public:
    explicit PartitionTable(std::vector<Integer> values);

    std::size_t n_max() const noexcept { return values_.size() - 1; }
    // Throws TableTooSmall past n_max.
    const Integer& at(std::size_t n) const;
    const Integer& operator[](std::size_t n) const noexcept { return values_[n]; }
    std::span<const Integer> values() const noexcept { return values_; }

    TruncatedSeries as_series() const { return TruncatedSeries(values_); }

private:
    std::vector<Integer> values_;
};

// p(0..n_max) by Euler's pentagonal-number recurrence.
PartitionTable p_table(std::size_t n_max);

inline constexpr std::size_t kBruteForceLimit = 60;

// Exhaustive enumeration of nonincreasing part sequences; n <= 60.
Integer p_bruteforce(std::size_t n);
// As above, restricted to parts accepted by `allowed`.
Integer count_bruteforce(std::size_t n, const std::function<bool(std::size_t)>& allowed);
// The partitions themselves, each nonincreasing, in reverse lexicographic order.
std::vector<std::vector<std::size_t>> list_partitions(std::size_t n);

// Unbounded-knapsack count of partitions into allowed parts.
PartitionTable count_restricted(const PartResidueRule& rule, std::size_t n_max);

// Infinite-product generating function of the restricted count.
TruncatedSeries r_gf(const PartResidueRule& rule, std::size_t order);

// R_s(n) = sum_k (-1)^k p(n - k(5k+1-s)), s in {2,4}.
Integer r_s_decomposed(int s, std::size_t n, const PartitionTable& p);
// R*_s(n) = sum_k p(n - (15k^2-(5-3s)k)) - p(n - (15k^2+(5+3s)k+s)), s in {1,3}.
Integer r_star_decomposed(int s, std::size_t n, const PartitionTable& p);

// The theta families behind the two decompositions above.
QuadraticExponentFamily r_s_decomposition_family(int s);
std::vector<QuadraticExponentFamily> r_star_decomposition_families(int s);

void require_regime_iii(int s);
void require_regime_iv(int s);

}  // namespace hexq
