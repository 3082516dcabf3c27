#include "hexq/partitions.hpp"

#include <sstream>
#include <utility>

namespace hexq {

OracleBoundExceeded::OracleBoundExceeded(std::size_t n)
    : std::runtime_error("brute-force enumeration is limited to n <= " +
                         std::to_string(kBruteForceLimit) + ", got " + std::to_string(n)) {}

TableTooSmall::TableTooSmall(std::size_t n, std::size_t n_max)
    : std::runtime_error("table covers n <= " + std::to_string(n_max) + ", need " +
                         std::to_string(n)) {}

void require_regime_iii(int s) {
    if (s != 2 && s != 4) {
        throw std::invalid_argument("s must be 2 or 4, got " + std::to_string(s));
    }
}

void require_regime_iv(int s) {
    if (s != 1 && s != 3) {
        throw std::invalid_argument("s must be 1 or 3, got " + std::to_string(s));
    }
}

PartResidueRule PartResidueRule::regime_iii(int s) {
    require_regime_iii(s);
    return {Regime::III, s};
}

PartResidueRule PartResidueRule::regime_iv(int s) {
    require_regime_iv(s);
    return {Regime::IV, s};
}

bool PartResidueRule::allows(std::size_t part) const {
    if (part == 0) {
        return false;
    }
    const auto s = static_cast<std::size_t>(s_);
    const std::size_t r10 = part % 10;
    const bool decade = r10 == 0 || r10 == s || r10 == 10 - s;
    if (regime_ == Regime::III) {
        // Parts divisible by 10 have no factor in the generating function.
        return part % 2 == 1 || r10 == s || r10 == 10 - s;
    }
    const std::size_t r20 = part % 20;
    return !decade && r20 != 10 - 2 * s && r20 != 10 + 2 * s;
}

std::string PartResidueRule::name() const {
    return (regime_ == Regime::III ? "R_" : "Rstar_") + std::to_string(s_);
}

std::vector<PartResidueRule> all_rules() {
    return {PartResidueRule::regime_iii(2), PartResidueRule::regime_iii(4),
            PartResidueRule::regime_iv(1), PartResidueRule::regime_iv(3)};
}

PartitionTable::PartitionTable(std::vector<Integer> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw std::invalid_argument("partition table needs at least n = 0");
    }
}

const Integer& PartitionTable::at(std::size_t n) const {
    if (n > n_max()) {
        throw TableTooSmall(n, n_max());
    }
    return values_[n];
}

PartitionTable p_table(std::size_t n_max) {
    std::vector<Integer> p(n_max + 1);
    p[0] = 1;
    for (std::size_t n = 1; n <= n_max; ++n) {
        Integer acc = 0;
        for (std::size_t k = 1;; ++k) {
            const std::size_t g1 = k * (3 * k - 1) / 2;
            if (g1 > n) {
                break;
            }
            const std::size_t g2 = g1 + k;  // k(3k+1)/2
            Integer term = p[n - g1];
            if (g2 <= n) {
                term += p[n - g2];
            }
            if (k % 2 == 1) {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p[n] = std::move(acc);
    }
    return PartitionTable(std::move(p));
}

namespace {

// Counts nonincreasing sequences summing to `remaining` with parts <= max_part.
std::size_t enumerate(std::size_t remaining, std::size_t max_part,
                      const std::function<bool(std::size_t)>& allowed) {
    if (remaining == 0) {
        return 1;
    }
    std::size_t count = 0;
    for (std::size_t part = std::min(max_part, remaining); part >= 1; --part) {
        if (allowed(part)) {
            count += enumerate(remaining - part, part, allowed);
        }
    }
    return count;
}

void collect(std::size_t remaining, std::size_t max_part, std::vector<std::size_t>& prefix,
             std::vector<std::vector<std::size_t>>& out) {
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (std::size_t part = std::min(max_part, remaining); part >= 1; --part) {
        prefix.push_back(part);
        collect(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

Integer count_bruteforce(std::size_t n, const std::function<bool(std::size_t)>& allowed) {
    if (n > kBruteForceLimit) {
        throw OracleBoundExceeded(n);
    }
    return Integer(static_cast<unsigned long>(enumerate(n, n, allowed)));
}

Integer p_bruteforce(std::size_t n) {
    return count_bruteforce(n, [](std::size_t) { return true; });
}

std::vector<std::vector<std::size_t>> list_partitions(std::size_t n) {
    if (n > kBruteForceLimit) {
        throw OracleBoundExceeded(n);
    }
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> prefix;
    collect(n, n, prefix, out);
    return out;
}

PartitionTable count_restricted(const PartResidueRule& rule, std::size_t n_max) {
    std::vector<Integer> t(n_max + 1);
    t[0] = 1;
    for (std::size_t part = 1; part <= n_max; ++part) {
        if (!rule.allows(part)) {
            continue;
        }
        for (std::size_t n = part; n <= n_max; ++n) {
            t[n] += t[n - part];
        }
    }
    return PartitionTable(std::move(t));
}

TruncatedSeries r_gf(const PartResidueRule& rule, std::size_t order) {
    const auto s = static_cast<std::size_t>(rule.s());
    if (rule.regime() == Regime::III) {
        // 1 / ((q;q^2)_inf (q^s, q^{10-s}; q^10)_inf)
        const std::vector<QPochhammerSpec> den{
            QPochhammerSpec::infinite(1, 1, 2),
            QPochhammerSpec::infinite(1, s, 10),
            QPochhammerSpec::infinite(1, 10 - s, 10),
        };
        return reciprocal_product_of(den, order);
    }
    // (q^s, q^{10-s}, q^10; q^10)_inf (q^{10-2s}, q^{10+2s}; q^20)_inf / (q;q)_inf
    const std::vector<QPochhammerSpec> num{
        QPochhammerSpec::infinite(1, s, 10),
        QPochhammerSpec::infinite(1, 10 - s, 10),
        QPochhammerSpec::infinite(1, 10, 10),
        QPochhammerSpec::infinite(1, 10 - 2 * s, 20),
        QPochhammerSpec::infinite(1, 10 + 2 * s, 20),
    };
    const std::vector<QPochhammerSpec> den{QPochhammerSpec::infinite(1, 1, 1)};
    return pochhammer_quotient(num, den, order);
}

QuadraticExponentFamily r_s_decomposition_family(int s) {
    require_regime_iii(s);
    // k(5k+1-s)
    return {5, 1 - s, 0, 1, SignRule::alternating()};
}

std::vector<QuadraticExponentFamily> r_star_decomposition_families(int s) {
    require_regime_iv(s);
    return {
        {15, -(5 - 3 * s), 0, 1, SignRule::constant()},
        {15, 5 + 3 * s, s, 1, SignRule::constant(-1)},
    };
}

namespace {

Integer decomposed(std::span<const QuadraticExponentFamily> families, std::size_t n,
                   const PartitionTable& p) {
    if (n > p.n_max()) {
        throw TableTooSmall(n, p.n_max());
    }
    Integer acc = 0;
    for (const auto& family : families) {
        family.for_each_up_to(static_cast<std::int64_t>(n), [&](std::int64_t k, std::int64_t e) {
            const Integer& term = p[n - static_cast<std::size_t>(e)];
            if (family.sign(k) > 0) {
                acc += term;
            } else {
                acc -= term;
            }
        });
    }
    return acc;
}

}  // namespace

Integer r_s_decomposed(int s, std::size_t n, const PartitionTable& p) {
    const QuadraticExponentFamily family = r_s_decomposition_family(s);
    return decomposed(std::span(&family, 1), n, p);
}

Integer r_star_decomposed(int s, std::size_t n, const PartitionTable& p) {
    return decomposed(r_star_decomposition_families(s), n, p);
}

}  // namespace hexq
