#include "hexq/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <stdexcept>

#include "hexq/parity.hpp"
#include "hexq/squares.hpp"

namespace hexq {

namespace {

Params part_params(int part, int s, std::size_t order) {
    return {{"part", std::int64_t{part}}, {"s", std::int64_t{s}},
            {"N", static_cast<std::int64_t>(order)}};
}

Params part_params(int part, int s, std::size_t k, std::size_t order) {
    Params p = part_params(part, s, order);
    p["k"] = static_cast<std::int64_t>(k);
    return p;
}

Integer bit_value(bool b) { return b ? 1 : 0; }

std::vector<bool> parity_bits(const PartitionTable& p) {
    std::vector<bool> bits(p.n_max() + 1);
    for (std::size_t n = 0; n <= p.n_max(); ++n) {
        bits[n] = mpz_odd_p(p[n].get_mpz_t()) != 0;
    }
    return bits;
}

// Records n where parity of sum_{k in index} p(n-k) disagrees with target(n).
void scan_parity_iff(ReportBuilder& report, const std::vector<bool>& p_odd,
                     const std::vector<std::uint64_t>& index, const SquareProgression& target,
                     std::size_t order, bool stop_at_first) {
    for (std::size_t n = 0; n <= order; ++n) {
        bool odd = false;
        for (std::uint64_t k : index) {
            if (k > n) {
                break;
            }
            odd ^= p_odd[n - k];
        }
        const bool square = target.contains(n);
        if (odd != square) {
            report.add_violation(static_cast<std::int64_t>(n), bit_value(odd), bit_value(square));
            if (stop_at_first) {
                return;
            }
        }
    }
}

PartResidueRule rule_for(int part, int s) {
    return part == 1 ? PartResidueRule::regime_iii(s) : PartResidueRule::regime_iv(s);
}

std::vector<QuadraticExponentFamily> rho_families(int part, int s) {
    return part == 1 ? eq41_families(s) : eq42_families(s);
}

}  // namespace

void require_part_s(int part, int s) {
    if (part == 1 && (s == 2 || s == 4)) {
        return;
    }
    if (part == 2 && (s == 1 || s == 3)) {
        return;
    }
    throw std::invalid_argument("incompatible part " + std::to_string(part) + " and s " +
                                std::to_string(s));
}

int part_for_s(int s) {
    if (s == 2 || s == 4) {
        return 1;
    }
    if (s == 1 || s == 3) {
        return 2;
    }
    throw std::invalid_argument("s must be one of 1, 2, 3, 4; got " + std::to_string(s));
}

CheckReport check_theorem1(int part, int s, std::size_t order, bool use_parity_fastpath) {
    require_part_s(part, s);
    Params params = part_params(part, s, order);
    params["variant"] = std::string(use_parity_fastpath ? "parity" : "bigint");
    ReportBuilder report("theorem1", std::move(params), false);

    const SquareProgression target = SquareProgression::theorem1(s);
    ParitySeries lhs(order);
    ParitySeries rhs(order);
    if (use_parity_fastpath) {
        lhs = part == 1 ? regime3_sum_parity(s, order) : regime4_sum_parity(s, order);
        rhs = indicator_parity(target, order);
    } else {
        lhs = reduce_mod2(regime_sum(part, s, order));
        rhs = reduce_mod2(indicator_series(target, order));
    }
    if (lhs != rhs) {
        for (std::size_t n = 0; n <= order; ++n) {
            if (lhs.bit(n) != rhs.bit(n)) {
                report.add_violation(static_cast<std::int64_t>(n), bit_value(lhs.bit(n)),
                                     bit_value(rhs.bit(n)));
            }
        }
    }
    return std::move(report).finish();
}

CheckReport check_corollary2(int part, int s, std::size_t order) {
    require_part_s(part, s);
    ReportBuilder report("corollary2", part_params(part, s, order), false);
    const auto p_odd = parity_bits(p_table(order));
    const auto index = index_set(SquareProgression::corollary2_index(s), order);
    scan_parity_iff(report, p_odd, index, SquareProgression::theorem1(s), order, false);
    return std::move(report).finish();
}

CheckReport check_s_pair(std::uint64_t a, std::uint64_t b, std::size_t order,
                         CheckOptions options) {
    if (a == 0 || b == 0) {
        throw std::invalid_argument("S-pair entries must be positive");
    }
    ReportBuilder report("s-pair",
                         {{"a", static_cast<std::int64_t>(a)},
                          {"b", static_cast<std::int64_t>(b)},
                          {"N", static_cast<std::int64_t>(order)}},
                         true);
    const auto p_odd = parity_bits(p_table(order));
    const auto index = index_set({a, 1}, order);
    scan_parity_iff(report, p_odd, index, {b, 1}, order, options.stop_at_first);
    return std::move(report).finish();
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> s_pairs() {
    return {{6, 8}, {8, 12}, {12, 24}, {15, 40}, {16, 48}, {20, 120}, {21, 168}};
}

SeriesPair id1_sides(int s, std::size_t k, std::size_t order) {
    require_part_s(1, s);
    const TruncatedSeries theta = rho_series(1, s, order);
    TruncatedSeries lhs = partial_gauss_sum(k, order) * regime3_sum(s, order) - theta;
    TruncatedSeries rhs = truncated_gauss_rhs(k, order) * theta;
    return {std::move(lhs), k % 2 == 0 ? std::move(rhs) : -rhs};
}

SeriesPair id2_sides(int s, std::size_t k, std::size_t order) {
    require_part_s(2, s);
    const TruncatedSeries theta = rho_series(2, s, order);
    TruncatedSeries lhs = partial_gauss_sum(k, order) * regime4_sum(s, order) - theta;
    TruncatedSeries rhs = truncated_gauss_rhs(k, order) * theta;
    return {std::move(lhs), k % 2 == 0 ? std::move(rhs) : -rhs};
}

CheckReport check_identity_id1(int s, std::size_t k, std::size_t order) {
    if (k == 0) {
        throw std::invalid_argument("k must be >= 1");
    }
    return check_series_equality("id1", part_params(1, s, k, order), id1_sides(s, k, order));
}

CheckReport check_identity_id2(int s, std::size_t k, std::size_t order) {
    if (k == 0) {
        throw std::invalid_argument("k must be >= 1");
    }
    return check_series_equality("id2", part_params(2, s, k, order), id2_sides(s, k, order));
}

TruncatedSeries regime_sum(int part, int s, std::size_t order) {
    require_part_s(part, s);
    return part == 1 ? regime3_sum(s, order) : regime4_sum(s, order);
}

TruncatedSeries rho_series(int part, int s, std::size_t order) {
    require_part_s(part, s);
    return bilateral_sum(rho_families(part, s), order);
}

int rho_case_formula(int part, int s, std::int64_t n) {
    require_part_s(part, s);
    if (n < 0) {
        return 0;
    }
    const std::int64_t reach = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(n))) + 2;
    for (std::int64_t m = -reach; m <= reach; ++m) {
        if (part == 1) {
            const std::int64_t half_sign = m * ((s - 1) * m - 1) / 2;
            const int sign = half_sign % 2 == 0 ? 1 : -1;
            if (m * (15 * m + 3 * s - 5) == 2 * n) {
                return sign;
            }
            // (3m - s/2)(5m - 3 + s/2)/2 with s even
            const std::int64_t h = s / 2;
            if ((3 * m - h) * (5 * m - 3 + h) == 2 * n) {
                return sign;
            }
        } else {
            if (m * (5 * m - s) == 2 * n) {
                return (m * (m + s) / 2) % 2 == 0 ? 1 : -1;
            }
        }
    }
    return 0;
}

TruncatedSeries conjecture1_difference(int part, int s, std::size_t k, std::size_t order) {
    require_part_s(part, s);
    return partial_gauss_sum(k, order) * regime_sum(part, s, order) - rho_series(part, s, order);
}

CheckReport check_conjecture1(int part, int s, std::size_t k, std::size_t order,
                              CheckOptions options) {
    if (k == 0) {
        throw std::invalid_argument("k must be >= 1");
    }
    ReportBuilder report("conjecture1", part_params(part, s, k, order), true);
    const TruncatedSeries diff = conjecture1_difference(part, s, k, order);
    const int want = k % 2 == 0 ? 1 : -1;
    for (std::size_t n = 0; n <= order; ++n) {
        if (sgn(diff[n]) * want < 0) {
            report.add_violation(static_cast<std::int64_t>(n), diff[n], 0);
            if (options.stop_at_first) {
                break;
            }
        }
    }
    return std::move(report).finish();
}

std::string_view to_string(Conjecture2Reading reading) {
    return reading == Conjecture2Reading::Literal ? "literal" : "alternating";
}

CheckReport check_conjecture2(int part, int s, std::size_t k, std::size_t order,
                              Conjecture2Reading reading, CheckOptions options) {
    require_part_s(part, s);
    if (k == 0) {
        throw std::invalid_argument("k must be >= 1");
    }
    Params params = part_params(part, s, k, order);
    params["variant"] = std::string(to_string(reading));
    ReportBuilder report("conjecture2", std::move(params), true);

    const PartitionTable counts = count_restricted(rule_for(part, s), order);
    const TruncatedSeries rho = rho_series(part, s, order);
    const int outer = k % 2 == 0 ? 1 : -1;

    Integer value;
    for (std::size_t n = 0; n <= order; ++n) {
        Integer inner = 0;
        for (std::size_t j = 1; j <= k && 2 * j * j <= n; ++j) {
            int weight = 1;
            if (reading == Conjecture2Reading::Alternating) {
                weight = j % 2 == 0 ? 1 : -1;
            } else if (part == 1) {
                weight = outer;
            }
            if (weight > 0) {
                inner += counts[n - 2 * j * j];
            } else {
                inner -= counts[n - 2 * j * j];
            }
        }
        value = outer * (counts[n] + 2 * inner - rho[n]);
        if (sgn(value) < 0) {
            report.add_violation(static_cast<std::int64_t>(n), value, 0);
            if (options.stop_at_first) {
                break;
            }
        }
    }
    return std::move(report).finish();
}

CheckReport check_telescoping(int part, int s, std::size_t k, std::size_t order) {
    if (k == 0) {
        throw std::invalid_argument("k must be >= 1");
    }
    const TruncatedSeries step = conjecture1_difference(part, s, k + 1, order) -
                                 conjecture1_difference(part, s, k, order);
    const std::size_t lead = 2 * (k + 1) * (k + 1);
    const Integer coef = (k + 1) % 2 == 0 ? 2 : -2;
    const TruncatedSeries expected =
        TruncatedSeries::monomial(coef, lead, order) * regime_sum(part, s, order);
    return check_series_equality("telescoping", part_params(part, s, k, order), {step, expected});
}

CheckReport cross_validate(const PartResidueRule& rule, std::size_t order) {
    ReportBuilder report("cross-validate",
                         {{"rule", rule.name()},
                          {"s", std::int64_t{rule.s()}},
                          {"N", static_cast<std::int64_t>(order)}},
                         false);
    const PartitionTable dp = count_restricted(rule, order);
    const TruncatedSeries gf = r_gf(rule, order);
    const PartitionTable p = p_table(order);
    for (std::size_t n = 0; n <= order; ++n) {
        const Integer decomposed = rule.regime() == Regime::III ? r_s_decomposed(rule.s(), n, p)
                                                                : r_star_decomposed(rule.s(), n, p);
        if (dp[n] != gf[n]) {
            report.add_violation(static_cast<std::int64_t>(n), dp[n], gf[n]);
        } else if (dp[n] != decomposed) {
            report.add_violation(static_cast<std::int64_t>(n), dp[n], decomposed);
        }
    }
    return std::move(report).finish();
}

CheckReport check_series_equality(std::string check_id, Params params, const SeriesPair& sides) {
    const std::size_t order = std::min(sides.lhs.order(), sides.rhs.order());
    params["N"] = static_cast<std::int64_t>(order);
    ReportBuilder report(std::move(check_id), std::move(params), false);
    for (std::size_t n = 0; n <= order; ++n) {
        if (sides.lhs[n] != sides.rhs[n]) {
            report.add_violation(static_cast<std::int64_t>(n), sides.lhs[n], sides.rhs[n]);
        }
    }
    return std::move(report).finish();
}

std::vector<CheckReport> run_checks(const std::vector<CheckTask>& tasks) {
    std::vector<CheckReport> reports(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    const auto count = static_cast<std::ptrdiff_t>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        try {
            // Time the whole task; series construction happens before the report starts.
            const auto start = std::chrono::steady_clock::now();
            reports[ui] = tasks[ui]();
            reports[ui].elapsed = std::chrono::steady_clock::now() - start;
        } catch (...) {
            errors[ui] = std::current_exception();
        }
    }
    for (const auto& error : errors) {
        if (error) {
            std::rethrow_exception(error);
        }
    }
    std::stable_sort(reports.begin(), reports.end(), report_order);
    return reports;
}

std::vector<CheckTask> rogers_tasks(std::size_t order) {
    std::vector<CheckTask> tasks;
    for (int s : {2, 4}) {
        tasks.push_back([s, order] {
            return check_series_equality("rogers-regime3", {{"s", std::int64_t{s}}},
                                         {regime3_sum(s, order), regime3_product(s, order)});
        });
    }
    for (int s : {1, 3}) {
        tasks.push_back([s, order] {
            return check_series_equality("rogers-regime4", {{"s", std::int64_t{s}}},
                                         {regime4_sum(s, order), regime4_product(s, order)});
        });
    }
    tasks.push_back([order] { return check_series_equality("rogers-ramanujan-G", {}, rr_G(order)); });
    tasks.push_back([order] { return check_series_equality("rogers-ramanujan-H", {}, rr_H(order)); });
    return tasks;
}

namespace {

std::string describe(Monomial m) {
    return std::string(m.sign < 0 ? "-" : "") + "q^" + std::to_string(m.exp);
}

Params substitution_params(Monomial z, Monomial q) {
    return {{"z", describe(z)}, {"q", describe(q)}};
}

}  // namespace

std::vector<CheckTask> jtp_tasks(std::size_t order) {
    std::vector<std::pair<Monomial, Monomial>> subs{
        {{-1, 1}, {-1, 5}},   // z = -q,   q -> -q^5
        {{-1, 3}, {-1, 5}},   // z = -q^3, q -> -q^5
        {{1, 4}, {1, 10}},    // z = q^(6-s), q -> q^10, s = 2
        {{1, 2}, {1, 10}},    // s = 4
    };
    std::vector<CheckTask> tasks;
    for (const auto& [z, q] : subs) {
        tasks.push_back([z, q, order] {
            return check_series_equality("jtp", substitution_params(z, q), jtp_sides(z, q, order));
        });
    }
    return tasks;
}

std::vector<CheckTask> quintuple_tasks(std::size_t order) {
    std::vector<std::pair<Monomial, Monomial>> subs{
        {{1, 2}, {-1, 5}},   // z = q^2, q -> -q^5
        {{-1, 1}, {-1, 5}},  // z = -q,  q -> -q^5
        {{1, 1}, {1, 10}},   // z = q^s, q -> q^10, s = 1
        {{1, 3}, {1, 10}},   // s = 3
    };
    std::vector<CheckTask> tasks;
    for (const auto& [z, q] : subs) {
        tasks.push_back([z, q, order] {
            return check_series_equality("quintuple", substitution_params(z, q),
                                         quintuple_sides(z, q, order));
        });
    }
    return tasks;
}

std::vector<CheckTask> gauss_tasks(std::size_t order) {
    return {[order] { return check_series_equality("gauss", {}, gauss_theta_sides(order)); }};
}

std::vector<CheckTask> truncated_gauss_tasks(std::size_t k_max, std::size_t order) {
    std::vector<CheckTask> tasks;
    for (std::size_t k = 1; k <= k_max; ++k) {
        tasks.push_back([k, order] {
            return check_series_equality(
                "truncated-gauss", {{"k", static_cast<std::int64_t>(k)}},
                {truncated_gauss_lhs(k, order), truncated_gauss_rhs(k, order)});
        });
    }
    return tasks;
}

std::vector<CheckTask> eq41_tasks(std::size_t order) {
    std::vector<CheckTask> tasks;
    for (int s : {2, 4}) {
        tasks.push_back([s, order] {
            return check_series_equality("eq41", {{"s", std::int64_t{s}}}, eq41_sides(s, order));
        });
    }
    return tasks;
}

std::vector<CheckTask> eq42_tasks(std::size_t order, Eq42Reading reading) {
    const std::string id = reading == Eq42Reading::FirstFactorQs ? "eq42" : "eq42-literal";
    std::vector<CheckTask> tasks;
    for (int s : {1, 3}) {
        tasks.push_back([s, order, reading, id] {
            return check_series_equality(id, {{"s", std::int64_t{s}}},
                                         eq42_sides(s, order, reading));
        });
    }
    return tasks;
}

std::vector<CheckTask> set_equivalence_tasks(std::int64_t bound) {
    std::vector<CheckTask> tasks;
    auto add = [&](std::string variant, int s, std::vector<QuadraticExponentFamily> families,
                   SquareProgression progression) {
        tasks.push_back([=] {
            return verify_set_equivalence(families, progression, bound, "set-equivalence",
                                          {{"variant", variant}, {"s", std::int64_t{s}}});
        });
    };
    for (int s : {2, 4}) {
        add("theorem1", s, eq41_families(s), SquareProgression::theorem1(s));
        add("r-decomposition", s, {r_s_decomposition_family(s)},
            SquareProgression::corollary2_index(s));
    }
    for (int s : {1, 3}) {
        add("theorem1", s, eq42_families(s), SquareProgression::theorem1(s));
        add("rstar-decomposition", s, r_star_decomposition_families(s),
            SquareProgression::corollary2_index(s));
    }
    return tasks;
}

}  // namespace hexq
