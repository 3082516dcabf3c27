#include "hexq/series.hpp"

#include <algorithm>
#include <utility>

#include "hexq/kernels.hpp"

namespace hexq {

OrderExceeded::OrderExceeded(std::size_t n, std::size_t order)
    : SeriesError("coefficient " + std::to_string(n) + " requested from a series of order " +
                  std::to_string(order)) {}

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw SeriesError("a truncated series needs at least one coefficient");
    }
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
    return monomial(1, 0, order);
}

TruncatedSeries TruncatedSeries::monomial(const Integer& coef, std::size_t exp, std::size_t order) {
    TruncatedSeries r(order);
    if (exp <= order) {
        r.coeffs_[exp] = coef;
    }
    return r;
}

const Integer& TruncatedSeries::coefficient(std::size_t n) const {
    if (n > order()) {
        throw OrderExceeded(n, order());
    }
    return coeffs_[n];
}

bool TruncatedSeries::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return sgn(c) == 0; });
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
    const std::size_t n = std::min(order, this->order());
    return TruncatedSeries(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + n + 1));
}

TruncatedSeries TruncatedSeries::shifted(std::size_t exp) const {
    TruncatedSeries r(order());
    for (std::size_t n = exp; n <= order(); ++n) {
        r.coeffs_[n] = coeffs_[n - exp];
    }
    return r;
}

TruncatedSeries TruncatedSeries::scaled(const Integer& factor) const {
    TruncatedSeries r(*this);
    for (auto& c : r.coeffs_) {
        c *= factor;
    }
    return r;
}

TruncatedSeries TruncatedSeries::dilated(std::size_t m) const {
    if (m == 0) {
        throw SeriesError("dilation factor must be positive");
    }
    TruncatedSeries r(order());
    for (std::size_t n = 0; n * m <= order(); ++n) {
        r.coeffs_[n * m] = coeffs_[n];
    }
    return r;
}

TruncatedSeries TruncatedSeries::times_binomial(int sign, std::size_t exp) const {
    TruncatedSeries r(*this);
    r.multiply_binomial(sign, exp);
    return r;
}

TruncatedSeries TruncatedSeries::divided_by_binomial(int sign, std::size_t exp) const {
    TruncatedSeries r(*this);
    r.divide_binomial(sign, exp);
    return r;
}

void TruncatedSeries::multiply_binomial(int sign, std::size_t exp) {
    if (exp == 0) {
        for (auto& c : coeffs_) {
            c *= 1 - sign;
        }
        return;
    }
    for (std::size_t n = order(); n >= exp; --n) {
        if (sign > 0) {
            coeffs_[n] -= coeffs_[n - exp];
        } else {
            coeffs_[n] += coeffs_[n - exp];
        }
    }
}

void TruncatedSeries::divide_binomial(int sign, std::size_t exp) {
    if (exp == 0) {
        throw NonUnitConstantTerm();
    }
    for (std::size_t n = exp; n <= order(); ++n) {
        if (sign > 0) {
            coeffs_[n] += coeffs_[n - exp];
        } else {
            coeffs_[n] -= coeffs_[n - exp];
        }
    }
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order(), b.order()));
    for (std::size_t n = 0; n <= r.order(); ++n) {
        r.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
    }
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order(), b.order()));
    for (std::size_t n = 0; n <= r.order(); ++n) {
        r.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
    }
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a) {
    TruncatedSeries r(a.order());
    for (std::size_t n = 0; n <= r.order(); ++n) {
        r.coeffs_[n] = -a.coeffs_[n];
    }
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order(), b.order()));
    kernels::cauchy_product(a.coeffs_, b.coeffs_, r.coeffs_);
    return r;
}

TruncatedSeries inverse(const TruncatedSeries& a) {
    const Integer& lead = a.coeffs_[0];
    if (lead != 1 && lead != -1) {
        throw NonUnitConstantTerm();
    }
    // Since lead = +-1, lead is its own inverse.
    TruncatedSeries r(a.order());
    r.coeffs_[0] = lead;
    Integer acc;
    for (std::size_t n = 1; n <= a.order(); ++n) {
        acc = 0;
        for (std::size_t i = 1; i <= n; ++i) {
            if (sgn(a.coeffs_[i]) != 0) {
                mpz_addmul(acc.get_mpz_t(), a.coeffs_[i].get_mpz_t(), r.coeffs_[n - i].get_mpz_t());
            }
        }
        r.coeffs_[n] = -lead * acc;
    }
    return r;
}

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& a) {
    bool first = true;
    for (std::size_t n = 0; n <= a.order(); ++n) {
        if (sgn(a[n]) == 0) {
            continue;
        }
        os << (first ? "" : " + ") << a[n];
        if (n > 0) {
            os << "*q^" << n;
        }
        first = false;
    }
    if (first) {
        os << "0";
    }
    return os << " + O(q^" << a.order() + 1 << ")";
}

QPochhammerSpec::QPochhammerSpec(int sign, std::size_t offset, std::size_t step,
                                 std::optional<std::size_t> count)
    : sign_(sign), offset_(offset), step_(step), count_(count) {
    if (sign != 1 && sign != -1) {
        throw SeriesError("Pochhammer sign must be +1 or -1");
    }
    if (step == 0) {
        throw SeriesError("Pochhammer step must be positive");
    }
    if (offset == 0 && sign == 1 && (!count || *count >= 1)) {
        throw DegenerateFactor();
    }
}

// Builds a product of binomial factors in place.
class FactorAccumulator {
public:
    explicit FactorAccumulator(TruncatedSeries start) : acc_(std::move(start)) {}

    void multiply(const QPochhammerSpec& spec) {
        spec.for_each_factor(acc_.order(),
                             [&](std::size_t e) { acc_.multiply_binomial(spec.sign(), e); });
    }
    void divide(const QPochhammerSpec& spec) {
        spec.for_each_factor(acc_.order(),
                             [&](std::size_t e) { acc_.divide_binomial(spec.sign(), e); });
    }
    TruncatedSeries release() && { return std::move(acc_); }

private:
    TruncatedSeries acc_;
};

TruncatedSeries pochhammer(const QPochhammerSpec& spec, std::size_t order) {
    FactorAccumulator acc(TruncatedSeries::one(order));
    acc.multiply(spec);
    return std::move(acc).release();
}

TruncatedSeries product_of(std::span<const QPochhammerSpec> specs, std::size_t order) {
    return pochhammer_quotient(specs, {}, order);
}

TruncatedSeries reciprocal_pochhammer(const QPochhammerSpec& spec, std::size_t order) {
    FactorAccumulator acc(TruncatedSeries::one(order));
    acc.divide(spec);
    return std::move(acc).release();
}

TruncatedSeries TruncatedSeries::times_product(std::span<const QPochhammerSpec> specs) const {
    FactorAccumulator acc(*this);
    for (const auto& spec : specs) {
        acc.multiply(spec);
    }
    return std::move(acc).release();
}

TruncatedSeries TruncatedSeries::divided_by_product(std::span<const QPochhammerSpec> specs) const {
    FactorAccumulator acc(*this);
    for (const auto& spec : specs) {
        acc.divide(spec);
    }
    return std::move(acc).release();
}

TruncatedSeries reciprocal_product_of(std::span<const QPochhammerSpec> specs, std::size_t order) {
    return pochhammer_quotient({}, specs, order);
}

TruncatedSeries pochhammer_quotient(std::span<const QPochhammerSpec> numerator,
                                    std::span<const QPochhammerSpec> denominator,
                                    std::size_t order) {
    FactorAccumulator acc(TruncatedSeries::one(order));
    for (const auto& spec : numerator) {
        acc.multiply(spec);
    }
    for (const auto& spec : denominator) {
        acc.divide(spec);
    }
    return std::move(acc).release();
}

}  // namespace hexq
