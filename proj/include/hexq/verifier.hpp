#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "hexq/partitions.hpp"
#include "hexq/report.hpp"
#include "hexq/series.hpp"
#include "hexq/theta.hpp"

namespace hexq {

inline constexpr std::size_t kDefaultProvedOrder = 2000;
inline constexpr std::size_t kDefaultParityOrder = 100000;
inline constexpr std::size_t kDefaultIdentityOrder = 300;
inline constexpr std::size_t kDefaultConjectureOrder = 1000;
inline constexpr std::size_t kDefaultSPairOrder = 500;

struct CheckOptions {
    // Empirical checks collect every violation unless this is set.
    bool stop_at_first = false;
};

// Throws std::invalid_argument unless (part, s) is (1, 2|4) or (2, 1|3).
void require_part_s(int part, int s);
// 1 for s in {2,4}, 2 for s in {1,3}.
int part_for_s(int s);

// Regime sum mod 2 against the indicator of 120n+(3s-5)^2 resp. 40n+s^2 being square.
CheckReport check_theorem1(int part, int s, std::size_t order, bool use_parity_fastpath);

// Pointwise: sum_{k in index set} p(n-k) is odd iff that same progression is square at n.
CheckReport check_corollary2(int part, int s, std::size_t order);

// sum_{ak+1 square} p(n-k) odd iff bn+1 square, for all n <= order.
CheckReport check_s_pair(std::uint64_t a, std::uint64_t b, std::size_t order,
                         CheckOptions options = {});

// The seven (a, b) pairs for which the S-pair statement is asserted.
std::vector<std::pair<std::uint64_t, std::uint64_t>> s_pairs();

// Both sides of the identities obtained by multiplying the truncated Gauss
// identity (at q^2) into the regime-III resp. regime-IV theta identity.
SeriesPair id1_sides(int s, std::size_t k, std::size_t order);
SeriesPair id2_sides(int s, std::size_t k, std::size_t order);
CheckReport check_identity_id1(int s, std::size_t k, std::size_t order);
CheckReport check_identity_id2(int s, std::size_t k, std::size_t order);

// The regime sum for part 1 (s in {2,4}) or part 2 (s in {1,3}).
TruncatedSeries regime_sum(int part, int s, std::size_t order);
// The bilateral theta series subtracted in the conjectures; its coefficients
// are rho_s(n) (part 1) or rho*_s(n) (part 2).
TruncatedSeries rho_series(int part, int s, std::size_t order);
// rho evaluated from its case definition, scanning m directly.
int rho_case_formula(int part, int s, std::int64_t n);

// partial_gauss_sum(k)(q^2) * regime_sum - rho_series.
TruncatedSeries conjecture1_difference(int part, int s, std::size_t k, std::size_t order);
CheckReport check_conjecture1(int part, int s, std::size_t k, std::size_t order,
                              CheckOptions options = {});

enum class Conjecture2Reading {
    // Inner weight (-1)^k for part 1 and +1 for part 2, taken literally.
    Literal,
    // Inner weight (-1)^j for both parts.
    Alternating,
};

std::string_view to_string(Conjecture2Reading reading);

CheckReport check_conjecture2(int part, int s, std::size_t k, std::size_t order,
                              Conjecture2Reading reading, CheckOptions options = {});

// D_{k+1} - D_k = 2 (-1)^(k+1) q^(2(k+1)^2) regime_sum, exactly.
CheckReport check_telescoping(int part, int s, std::size_t k, std::size_t order);

// DP = generating function = decomposition for every n <= order.
CheckReport cross_validate(const PartResidueRule& rule, std::size_t order);

// PASS iff lhs and rhs agree coefficientwise; violations list every mismatch.
CheckReport check_series_equality(std::string check_id, Params params, const SeriesPair& sides);

using CheckTask = std::function<CheckReport()>;

// Runs tasks on the OpenMP pool and returns reports sorted by check_id, params.
std::vector<CheckReport> run_checks(const std::vector<CheckTask>& tasks);

// Task catalogs for the identity families.
std::vector<CheckTask> rogers_tasks(std::size_t order);
std::vector<CheckTask> jtp_tasks(std::size_t order);
std::vector<CheckTask> quintuple_tasks(std::size_t order);
std::vector<CheckTask> gauss_tasks(std::size_t order);
std::vector<CheckTask> truncated_gauss_tasks(std::size_t k_max, std::size_t order);
std::vector<CheckTask> eq41_tasks(std::size_t order);
std::vector<CheckTask> eq42_tasks(std::size_t order, Eq42Reading reading);
std::vector<CheckTask> set_equivalence_tasks(std::int64_t bound);

}  // namespace hexq
