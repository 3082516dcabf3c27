#include "hexq/squares.hpp"

#include <algorithm>
#include <stdexcept>

#include "hexq/partitions.hpp"

namespace hexq {

std::uint64_t isqrt(std::uint64_t v) {
    if (v < 2) {
        return v;
    }
    // Newton iteration from above decreases monotonically to floor(sqrt(v)).
    std::uint64_t x = v;
    std::uint64_t y = x / 2 + (x & 1U);  // ceil(v/2) without overflow
    while (y < x) {
        x = y;
        y = (x + v / x) / 2;
    }
    __extension__ using Wide = unsigned __int128;
    const auto wide = static_cast<Wide>(x);
    if (wide * wide > v || (wide + 1) * (wide + 1) <= v) {
        throw std::logic_error("integer square root failed to converge");
    }
    return x;
}

bool is_square(std::uint64_t v) {
    const std::uint64_t r = isqrt(v);
    return r * r == v;
}

bool is_square(const Integer& v) {
    if (sgn(v) < 0) {
        return false;
    }
    Integer r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r * r == v;
}

SquareProgression SquareProgression::theorem1(int s) {
    if (s == 2 || s == 4) {
        const auto c = static_cast<std::uint64_t>((3 * s - 5) * (3 * s - 5));
        return {120, c};
    }
    require_regime_iv(s);
    return {40, static_cast<std::uint64_t>(s * s)};
}

SquareProgression SquareProgression::corollary2_index(int s) {
    if (s == 2 || s == 4) {
        return {20, static_cast<std::uint64_t>((s - 1) * (s - 1))};
    }
    require_regime_iv(s);
    return {15, static_cast<std::uint64_t>((s + 1) * (s + 1) / 4)};
}

TruncatedSeries indicator_series(const SquareProgression& p, std::size_t order) {
    std::vector<Integer> coeffs(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        if (p.contains(n)) {
            coeffs[n] = 1;
        }
    }
    return TruncatedSeries(std::move(coeffs));
}

ParitySeries indicator_parity(const SquareProgression& p, std::size_t order) {
    std::vector<bool> bits(order + 1);
    // Walk the squares themselves instead of testing every n.
    const std::uint64_t top = p.value(order);
    for (std::uint64_t r = isqrt(p.offset); r * r <= top; ++r) {
        const std::uint64_t sq = r * r;
        if (sq >= p.offset && (sq - p.offset) % p.multiplier == 0) {
            bits[(sq - p.offset) / p.multiplier] = true;
        }
    }
    return ParitySeries::from_bits(bits);
}

std::vector<std::uint64_t> index_set(const SquareProgression& p, std::size_t n_max) {
    std::vector<char> member(n_max + 1, 0);
    const auto count = static_cast<std::ptrdiff_t>(n_max + 1);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
        member[static_cast<std::size_t>(k)] = p.contains(static_cast<std::uint64_t>(k)) ? 1 : 0;
    }
    std::vector<std::uint64_t> out;
    for (std::size_t k = 0; k <= n_max; ++k) {
        if (member[k] != 0) {
            out.push_back(k);
        }
    }
    return out;
}

std::vector<std::int64_t> exponent_values(const QuadraticExponentFamily& family,
                                          std::int64_t bound) {
    std::vector<std::int64_t> out;
    family.for_each_up_to(bound, [&](std::int64_t, std::int64_t e) { out.push_back(e); });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::map<std::int64_t, int> exponent_multiplicity(std::span<const QuadraticExponentFamily> families,
                                                  std::int64_t bound) {
    std::map<std::int64_t, int> hits;
    for (const auto& family : families) {
        family.for_each_up_to(bound, [&](std::int64_t, std::int64_t e) { ++hits[e]; });
    }
    return hits;
}

CheckReport verify_set_equivalence(std::span<const QuadraticExponentFamily> families,
                                   const SquareProgression& p, std::int64_t bound,
                                   std::string check_id, Params params) {
    params["bound"] = bound;
    params["multiplier"] = static_cast<std::int64_t>(p.multiplier);
    params["offset"] = static_cast<std::int64_t>(p.offset);
    ReportBuilder report(std::move(check_id), std::move(params), false);

    const auto hits = exponent_multiplicity(families, bound);
    const auto members = index_set(p, static_cast<std::size_t>(bound));

    int max_hits = 0;
    auto member_it = members.begin();
    auto hit_it = hits.begin();
    // Merge the two ascending sequences.
    while (member_it != members.end() || hit_it != hits.end()) {
        const bool take_member =
            member_it != members.end() &&
            (hit_it == hits.end() || static_cast<std::int64_t>(*member_it) <= hit_it->first);
        const bool take_hit =
            hit_it != hits.end() &&
            (member_it == members.end() || hit_it->first <= static_cast<std::int64_t>(*member_it));
        const std::int64_t n = take_hit ? hit_it->first : static_cast<std::int64_t>(*member_it);
        const int count = take_hit ? hit_it->second : 0;
        const int indicator = take_member ? 1 : 0;
        max_hits = std::max(max_hits, count);
        if (count != indicator) {
            report.add_violation(n, count, indicator);
        }
        if (take_member) {
            ++member_it;
        }
        if (take_hit) {
            ++hit_it;
        }
    }
    report.set_param("members", static_cast<std::int64_t>(members.size()));
    report.set_param("max_multiplicity", static_cast<std::int64_t>(max_hits));
    return std::move(report).finish();
}

}  // namespace hexq
