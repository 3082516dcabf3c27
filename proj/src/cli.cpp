#include "hexq/cli.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "hexq/partitions.hpp"
#include "hexq/squares.hpp"
#include "hexq/theta.hpp"
#include "hexq/verifier.hpp"

namespace hexq::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr std::size_t kDefaultExpandOrder = 20;
constexpr std::int64_t kDefaultSetBound = 1000000;
constexpr std::size_t kTextViolationLimit = 10;

struct Options {
    std::optional<int> s;
    std::optional<int> part;
    std::optional<std::string> k;
    std::optional<std::size_t> order;
    std::string format = "text";
    bool fast_parity = false;
    bool all_violations = false;
    std::string reading = "both";
    std::optional<std::string> pairs;
};

Format parse_format(const std::string& name) {
    if (name == "json") {
        return Format::Json;
    }
    if (name == "csv") {
        return Format::Csv;
    }
    return Format::Text;
}

std::string join(const std::vector<std::string>& args) {
    std::string out;
    for (const auto& a : args) {
        if (!out.empty()) {
            out += ' ';
        }
        out += a;
    }
    return out;
}

std::size_t parse_count(const std::string& text) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(text, &pos);
    } catch (const std::exception&) {
        throw UsageError("not a nonnegative integer: " + text);
    }
    if (pos != text.size() || text.front() == '-') {
        throw UsageError("not a nonnegative integer: " + text);
    }
    return static_cast<std::size_t>(v);
}

// "3" or "1..8"; every k must be >= 1.
std::vector<std::size_t> parse_k_range(const std::string& text) {
    const auto dots = text.find("..");
    std::size_t lo = 0;
    std::size_t hi = 0;
    if (dots == std::string::npos) {
        lo = hi = parse_count(text);
    } else {
        lo = parse_count(text.substr(0, dots));
        hi = parse_count(text.substr(dots + 2));
    }
    if (lo == 0 || hi < lo) {
        throw UsageError("k range must satisfy 1 <= from <= to, got " + text);
    }
    std::vector<std::size_t> ks;
    for (std::size_t k = lo; k <= hi; ++k) {
        ks.push_back(k);
    }
    return ks;
}

std::vector<std::size_t> k_values(const Options& o, std::size_t default_lo, std::size_t default_hi) {
    if (o.k) {
        return parse_k_range(*o.k);
    }
    std::vector<std::size_t> ks;
    for (std::size_t k = default_lo; k <= default_hi; ++k) {
        ks.push_back(k);
    }
    return ks;
}

// The s values selected by --s / --part among `allowed`.
std::vector<int> select_s(const Options& o, const std::vector<int>& allowed) {
    if (o.part && *o.part != 1 && *o.part != 2) {
        throw UsageError("--part must be 1 or 2");
    }
    if (o.s) {
        if (std::find(allowed.begin(), allowed.end(), *o.s) == allowed.end()) {
            throw UsageError("--s " + std::to_string(*o.s) + " is not valid here");
        }
        if (o.part && part_for_s(*o.s) != *o.part) {
            throw UsageError("--s " + std::to_string(*o.s) + " does not belong to --part " +
                             std::to_string(*o.part));
        }
        return {*o.s};
    }
    std::vector<int> out;
    for (int s : allowed) {
        if (!o.part || part_for_s(s) == *o.part) {
            out.push_back(s);
        }
    }
    if (out.empty()) {
        throw UsageError("no valid s for the requested part");
    }
    return out;
}

std::size_t order_or(const Options& o, std::size_t fallback) { return o.order.value_or(fallback); }

std::string param_text(const ParamValue& v) {
    return std::visit(
        [](const auto& x) {
            std::ostringstream os;
            os << x;
            return os.str();
        },
        v);
}

std::string params_text(const Params& params) {
    std::string out;
    for (const auto& [key, value] : params) {
        if (!out.empty()) {
            out += ' ';
        }
        out += key + "=" + param_text(value);
    }
    return out;
}

void write_reports(std::ostream& out, Format format, const std::string& command,
                   const std::vector<CheckReport>& reports, double total_ms, bool all_violations) {
    if (format == Format::Json) {
        out << report_document(command, reports, total_ms).dump(2) << '\n';
        return;
    }
    if (format == Format::Csv) {
        out << "check_id,params,status,violations,first_violation_n,elapsed_ms\n";
        for (const auto& r : reports) {
            out << r.check_id << ',' << params_text(r.params) << ',' << to_string(r.status) << ','
                << r.violations.size() << ','
                << (r.violations.empty() ? std::string() : std::to_string(r.violations.front().n))
                << ',' << std::fixed << std::setprecision(3) << r.elapsed.count() << '\n';
        }
        return;
    }
    std::size_t passed = 0;
    for (const auto& r : reports) {
        passed += is_success(r.status) ? 1 : 0;
        out << std::left << std::setw(18) << r.check_id << ' ' << std::setw(40)
            << params_text(r.params) << ' ' << std::setw(24) << to_string(r.status) << ' '
            << std::fixed << std::setprecision(1) << r.elapsed.count() << " ms\n";
        const std::size_t shown =
            all_violations ? r.violations.size() : std::min(r.violations.size(), kTextViolationLimit);
        for (std::size_t i = 0; i < shown; ++i) {
            const auto& v = r.violations[i];
            out << "    n=" << v.n << " lhs=" << v.lhs << " rhs=" << v.rhs << '\n';
        }
        if (shown < r.violations.size()) {
            out << "    ... " << r.violations.size() - shown
                << " more (use --all-violations or --format json)\n";
        }
    }
    out << passed << "/" << reports.size() << " checks passed in " << std::fixed
        << std::setprecision(1) << total_ms << " ms\n";
}

void write_table(std::ostream& out, Format format, const std::string& command,
                 const CoefficientTable& table, double total_ms) {
    if (format == Format::Json) {
        out << table_document(command, table, total_ms).dump(2) << '\n';
        return;
    }
    if (format == Format::Csv) {
        out << "n,coefficient\n";
        for (std::size_t n = 0; n <= table.series.order(); ++n) {
            out << n << ',' << table.series[n] << '\n';
        }
        return;
    }
    for (std::size_t n = 0; n <= table.series.order(); ++n) {
        out << std::setw(6) << n << "  " << table.series[n] << '\n';
    }
}

CoefficientTable expand(const std::string& target, const Options& o) {
    const std::size_t order = order_or(o, kDefaultExpandOrder);
    auto one_s = [&](const std::vector<int>& allowed) {
        if (!o.s) {
            throw UsageError("target " + target + " needs --s");
        }
        return select_s(o, allowed).front();
    };
    CoefficientTable table{target, {{"N", static_cast<std::int64_t>(order)}},
                           TruncatedSeries::zero(order)};
    if (target == "p") {
        table.series = p_table(order).as_series();
        return table;
    }
    if (target == "G") {
        table.series = rr_G(order).lhs;
        return table;
    }
    if (target == "H") {
        table.series = rr_H(order).lhs;
        return table;
    }
    int s = 0;
    if (target == "R" || target == "regime3" || target == "eq41") {
        s = one_s({2, 4});
    } else {
        s = one_s(target == "indicator" ? std::vector<int>{1, 2, 3, 4} : std::vector<int>{1, 3});
    }
    table.params["s"] = std::int64_t{s};
    if (target == "R") {
        table.series = count_restricted(PartResidueRule::regime_iii(s), order).as_series();
    } else if (target == "Rstar") {
        table.series = count_restricted(PartResidueRule::regime_iv(s), order).as_series();
    } else if (target == "regime3") {
        table.series = regime3_sum(s, order);
    } else if (target == "regime4") {
        table.series = regime4_sum(s, order);
    } else if (target == "eq41") {
        table.series = eq41_sides(s, order).lhs;
    } else if (target == "eq42") {
        table.series = eq42_sides(s, order).lhs;
    } else {
        table.series = indicator_series(SquareProgression::theorem1(s), order);
    }
    return table;
}

std::vector<CheckTask> verify_tasks(const std::string& check, const Options& o) {
    std::vector<CheckTask> tasks;
    const bool all = check == "all";
    auto wants = [&](const char* name) { return all || check == name; };
    auto deny_s = [&] {
        if (!all && (o.s || o.part)) {
            throw UsageError(check + " does not take --s or --part");
        }
    };

    if (wants("theorem1")) {
        const std::size_t order =
            order_or(o, o.fast_parity ? kDefaultParityOrder : kDefaultProvedOrder);
        for (int s : select_s(o, {1, 2, 3, 4})) {
            tasks.push_back([s, order, fast = o.fast_parity] {
                return check_theorem1(part_for_s(s), s, order, fast);
            });
        }
    }
    if (wants("corollary2")) {
        const std::size_t order = order_or(o, kDefaultProvedOrder);
        for (int s : select_s(o, {1, 2, 3, 4})) {
            tasks.push_back([s, order] { return check_corollary2(part_for_s(s), s, order); });
        }
    }
    if (wants("id1") || wants("id2")) {
        const std::size_t order = order_or(o, kDefaultIdentityOrder);
        const auto ks = k_values(o, 1, 5);
        if (wants("id1") && (all || !o.part || *o.part == 1)) {
            for (int s : select_s(o, all ? std::vector<int>{1, 2, 3, 4} : std::vector<int>{2, 4})) {
                if (part_for_s(s) != 1) {
                    continue;
                }
                for (std::size_t k : ks) {
                    tasks.push_back([s, k, order] { return check_identity_id1(s, k, order); });
                }
            }
        }
        if (wants("id2") && (all || !o.part || *o.part == 2)) {
            for (int s : select_s(o, all ? std::vector<int>{1, 2, 3, 4} : std::vector<int>{1, 3})) {
                if (part_for_s(s) != 2) {
                    continue;
                }
                for (std::size_t k : ks) {
                    tasks.push_back([s, k, order] { return check_identity_id2(s, k, order); });
                }
            }
        }
    }
    if (wants("telescoping")) {
        const std::size_t order = order_or(o, 500);
        for (int s : select_s(o, {1, 2, 3, 4})) {
            for (std::size_t k : k_values(o, 1, 8)) {
                tasks.push_back(
                    [s, k, order] { return check_telescoping(part_for_s(s), s, k, order); });
            }
        }
    }
    if (wants("cross-validate")) {
        const std::size_t order = order_or(o, kDefaultProvedOrder);
        for (int s : select_s(o, {1, 2, 3, 4})) {
            const PartResidueRule rule = part_for_s(s) == 1 ? PartResidueRule::regime_iii(s)
                                                            : PartResidueRule::regime_iv(s);
            tasks.push_back([rule, order] { return cross_validate(rule, order); });
        }
    }
    auto append = [&](std::vector<CheckTask> more) {
        tasks.insert(tasks.end(), more.begin(), more.end());
    };
    if (wants("rogers")) {
        deny_s();
        append(rogers_tasks(order_or(o, kDefaultProvedOrder)));
    }
    if (wants("gauss")) {
        deny_s();
        append(gauss_tasks(order_or(o, kDefaultIdentityOrder)));
    }
    if (wants("truncated-gauss")) {
        deny_s();
        const std::size_t order = order_or(o, kDefaultIdentityOrder);
        for (std::size_t k : k_values(o, 1, 10)) {
            tasks.push_back([k, order] {
                return check_series_equality(
                    "truncated-gauss", {{"k", static_cast<std::int64_t>(k)}},
                    {truncated_gauss_lhs(k, order), truncated_gauss_rhs(k, order)});
            });
        }
    }
    if (wants("jtp")) {
        deny_s();
        append(jtp_tasks(order_or(o, kDefaultIdentityOrder)));
    }
    if (wants("quintuple")) {
        deny_s();
        append(quintuple_tasks(order_or(o, kDefaultIdentityOrder)));
    }
    if (wants("eq41")) {
        deny_s();
        append(eq41_tasks(order_or(o, kDefaultIdentityOrder)));
    }
    if (wants("eq42")) {
        deny_s();
        append(eq42_tasks(order_or(o, kDefaultIdentityOrder), Eq42Reading::FirstFactorQs));
    }
    if (check == "eq42-literal") {
        deny_s();
        append(eq42_tasks(order_or(o, kDefaultIdentityOrder), Eq42Reading::LiteralQ2));
    }
    if (wants("set-equivalence")) {
        deny_s();
        const auto bound = o.order ? static_cast<std::int64_t>(*o.order) : kDefaultSetBound;
        append(set_equivalence_tasks(bound));
    }
    return tasks;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> parse_pairs(const std::string& text) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
            throw UsageError("pairs are written a:b, got " + item);
        }
        const auto a = parse_count(item.substr(0, colon));
        const auto b = parse_count(item.substr(colon + 1));
        if (a == 0 || b == 0) {
            throw UsageError("pair entries must be positive: " + item);
        }
        out.emplace_back(a, b);
    }
    if (out.empty()) {
        throw UsageError("--pairs is empty");
    }
    return out;
}

std::vector<CheckTask> conjecture_tasks(const std::string& which, const Options& o) {
    std::vector<CheckTask> tasks;
    const CheckOptions check_options{};
    if (which == "s-pairs") {
        if (o.s || o.part || o.k) {
            throw UsageError("s-pairs takes only --order and --pairs");
        }
        const std::size_t order = order_or(o, kDefaultSPairOrder);
        for (const auto& [a, b] : o.pairs ? parse_pairs(*o.pairs) : s_pairs()) {
            tasks.push_back([a, b, order, check_options] {
                return check_s_pair(a, b, order, check_options);
            });
        }
        return tasks;
    }
    if (o.pairs) {
        throw UsageError("--pairs only applies to s-pairs");
    }
    const std::size_t order = order_or(o, kDefaultConjectureOrder);
    const auto ks = k_values(o, 1, 8);
    const auto ss = select_s(o, {1, 2, 3, 4});
    std::vector<Conjecture2Reading> readings;
    if (o.reading == "literal" || o.reading == "both") {
        readings.push_back(Conjecture2Reading::Literal);
    }
    if (o.reading == "alternating" || o.reading == "both") {
        readings.push_back(Conjecture2Reading::Alternating);
    }
    for (int s : ss) {
        for (std::size_t k : ks) {
            const int part = part_for_s(s);
            if (which == "1") {
                tasks.push_back([=] { return check_conjecture1(part, s, k, order, check_options); });
            } else {
                for (auto reading : readings) {
                    tasks.push_back(
                        [=] { return check_conjecture2(part, s, k, order, reading, check_options); });
                }
            }
        }
    }
    return tasks;
}

}  // namespace

nlohmann::json to_json(const CheckReport& report) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [key, value] : report.params) {
        std::visit([&](const auto& v) { params[key] = v; }, value);
    }
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& v : report.violations) {
        violations.push_back({{"n", v.n}, {"lhs", v.lhs.get_str()}, {"rhs", v.rhs.get_str()}});
    }
    return {
        {"check_id", report.check_id},
        {"params", params},
        {"status", std::string(to_string(report.status))},
        {"violations", violations},
        {"elapsed_ms", report.elapsed.count()},
    };
}

nlohmann::json to_json(const CoefficientTable& table) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [key, value] : table.params) {
        std::visit([&](const auto& v) { params[key] = v; }, value);
    }
    nlohmann::json coefficients = nlohmann::json::array();
    for (std::size_t n = 0; n <= table.series.order(); ++n) {
        coefficients.push_back({{"n", n}, {"coefficient", table.series[n].get_str()}});
    }
    return {{"target", table.target}, {"params", params}, {"coefficients", coefficients}};
}

nlohmann::json report_document(const std::string& command, const std::vector<CheckReport>& reports,
                               double total_elapsed_ms) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& r : reports) {
        list.push_back(to_json(r));
    }
    return {
        {"version", std::string(kVersion)},
        {"command", command},
        {"reports", list},
        {"total_elapsed_ms", total_elapsed_ms},
    };
}

nlohmann::json table_document(const std::string& command, const CoefficientTable& table,
                              double total_elapsed_ms) {
    return {
        {"version", std::string(kVersion)},
        {"command", command},
        {"table", to_json(table)},
        {"total_elapsed_ms", total_elapsed_ms},
    };
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact q-series engine and parity verifier for the hard-hexagon partition "
                 "functions R_s(n) and R*_s(n)",
                 "hexq"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    Options o;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--order,-N", o.order, "Truncation order (exponents 0..N)");
        sub->add_option("--format", o.format, "Output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
    };
    auto add_s = [&](CLI::App* sub) {
        sub->add_option("--s", o.s, "Family parameter s");
        sub->add_option("--part", o.part, "Theorem part: 1 (s in {2,4}) or 2 (s in {1,3})");
    };

    std::string target;
    CLI::App* expand_cmd = app.add_subcommand("expand", "Print series coefficients");
    expand_cmd
        ->add_option("target", target, "p, R, Rstar, G, H, regime3, regime4, eq41, eq42, indicator")
        ->required()
        ->check(CLI::IsMember(
            {"p", "R", "Rstar", "G", "H", "regime3", "regime4", "eq41", "eq42", "indicator"}));
    add_common(expand_cmd);
    expand_cmd->add_option("--s", o.s, "Family parameter s");

    std::string check;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Run proved identities and theorems");
    verify_cmd->add_option("check", check, "Which check to run")
        ->required()
        ->check(CLI::IsMember({"theorem1", "corollary2", "id1", "id2", "rogers", "gauss",
                               "truncated-gauss", "set-equivalence", "cross-validate", "jtp",
                               "quintuple", "eq41", "eq42", "eq42-literal", "telescoping", "all"}));
    add_common(verify_cmd);
    add_s(verify_cmd);
    verify_cmd->add_option("--k", o.k, "k or k range a..b");
    verify_cmd->add_flag("--fast-parity", o.fast_parity, "Run theorem1 over GF(2) bit blocks");
    verify_cmd->add_flag("--all-violations", o.all_violations, "Print every violation as text");

    std::string which;
    CLI::App* conj_cmd = app.add_subcommand("conjecture", "Empirical scans of open conjectures");
    conj_cmd->add_option("which", which, "1, 2 or s-pairs")
        ->required()
        ->check(CLI::IsMember({"1", "2", "s-pairs"}));
    add_common(conj_cmd);
    add_s(conj_cmd);
    conj_cmd->add_option("--k", o.k, "k or k range a..b (default 1..8)");
    conj_cmd->add_option("--reading", o.reading, "Inner sign of the j-sum in conjecture 2")
        ->check(CLI::IsMember({"literal", "alternating", "both"}));
    conj_cmd->add_option("--pairs", o.pairs, "Comma-separated a:b pairs for s-pairs");
    conj_cmd->add_flag("--all-violations", o.all_violations, "Print every violation as text");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    const std::string command = join(args);
    const Format format = parse_format(o.format);
    const auto start = std::chrono::steady_clock::now();
    auto elapsed_ms = [&] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    };

    try {
        if (expand_cmd->parsed()) {
            const CoefficientTable table = expand(target, o);
            write_table(out, format, command, table, elapsed_ms());
            return kExitPass;
        }
        const auto tasks =
            verify_cmd->parsed() ? verify_tasks(check, o) : conjecture_tasks(which, o);
        const auto reports = run_checks(tasks);
        write_reports(out, format, command, reports, elapsed_ms(), o.all_violations);
        const bool ok = std::all_of(reports.begin(), reports.end(),
                                    [](const CheckReport& r) { return is_success(r.status); });
        return ok ? kExitPass : kExitFail;
    } catch (const UsageError& e) {
        err << "hexq: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "hexq: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace hexq::cli
