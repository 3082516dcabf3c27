#include "hexq/report.hpp"

#include <stdexcept>
#include <tuple>
#include <utility>

namespace hexq {

std::string_view to_string(Status status) {
    switch (status) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::EmpiricalPass: return "EMPIRICAL_PASS";
        case Status::EmpiricalCounterexample: return "EMPIRICAL_COUNTEREXAMPLE";
    }
    return "UNKNOWN";
}

Status status_from_string(std::string_view name) {
    for (Status s : {Status::Pass, Status::Fail, Status::EmpiricalPass,
                     Status::EmpiricalCounterexample}) {
        if (to_string(s) == name) {
            return s;
        }
    }
    throw std::invalid_argument("unknown status " + std::string(name));
}

bool report_order(const CheckReport& a, const CheckReport& b) {
    return std::tie(a.check_id, a.params) < std::tie(b.check_id, b.params);
}

ReportBuilder::ReportBuilder(std::string check_id, Params params, bool empirical)
    : empirical_(empirical), start_(std::chrono::steady_clock::now()) {
    report_.check_id = std::move(check_id);
    report_.params = std::move(params);
}

void ReportBuilder::add_violation(std::int64_t n, Integer lhs, Integer rhs) {
    report_.violations.push_back({n, std::move(lhs), std::move(rhs)});
}

void ReportBuilder::set_param(const std::string& key, ParamValue value) {
    report_.params[key] = std::move(value);
}

CheckReport ReportBuilder::finish() && {
    const bool ok = report_.violations.empty();
    if (empirical_) {
        report_.status = ok ? Status::EmpiricalPass : Status::EmpiricalCounterexample;
    } else {
        report_.status = ok ? Status::Pass : Status::Fail;
    }
    report_.elapsed = std::chrono::steady_clock::now() - start_;
    return std::move(report_);
}

}  // namespace hexq
