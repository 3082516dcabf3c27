#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hexq/series.hpp"

namespace hexq {

enum class Status { Pass, Fail, EmpiricalPass, EmpiricalCounterexample };

std::string_view to_string(Status status);
Status status_from_string(std::string_view name);

inline bool is_success(Status status) {
    return status == Status::Pass || status == Status::EmpiricalPass;
}

struct Violation {
    std::int64_t n = 0;
    Integer lhs;
    Integer rhs;

    friend bool operator==(const Violation&, const Violation&) = default;
};

using ParamValue = std::variant<std::int64_t, std::string>;
using Params = std::map<std::string, ParamValue>;

/// Outcome of one check. PASS/FAIL are reserved for proved statements,
/// EMPIRICAL_* for conjectures and the S-pair scan.
struct CheckReport {
    std::string check_id;
    Params params;
    Status status = Status::Pass;
    std::vector<Violation> violations;
    std::chrono::duration<double, std::milli> elapsed{0};
};

// Orders reports by check_id, then params.
bool report_order(const CheckReport& a, const CheckReport& b);

/// Times a check and assigns its status from the violation list.
class ReportBuilder {
public:
    ReportBuilder(std::string check_id, Params params, bool empirical);

    void add_violation(std::int64_t n, Integer lhs, Integer rhs);
    std::size_t violation_count() const noexcept { return report_.violations.size(); }
    void set_param(const std::string& key, ParamValue value);

    CheckReport finish() &&;

private:
    CheckReport report_;
    bool empirical_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace hexq
