#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hexq {

using Integer = mpz_class;

class SeriesError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonUnitConstantTerm : public SeriesError {
public:
    NonUnitConstantTerm() : SeriesError("constant term is not +1 or -1") {}
};

class OrderExceeded : public SeriesError {
public:
    OrderExceeded(std::size_t n, std::size_t order);
};

class DegenerateFactor : public SeriesError {
public:
    DegenerateFactor() : SeriesError("(q^0; q^m)_n with n >= 1 is identically zero") {}
};

class QPochhammerSpec;

/// Formal power series with exact integer coefficients for exponents 0..order.
///
/// Binary operations truncate to the smaller operand order, so long pipelines
/// compose without explicit re-truncation. Values are immutable once built.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order);
    explicit TruncatedSeries(std::vector<Integer> coeffs);

    static TruncatedSeries zero(std::size_t order) { return TruncatedSeries(order); }
    static TruncatedSeries one(std::size_t order);
    static TruncatedSeries monomial(const Integer& coef, std::size_t exp, std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }

    // Unchecked access; n must be <= order().
    const Integer& operator[](std::size_t n) const noexcept { return coeffs_[n]; }

    // Throws OrderExceeded when n > order().
    const Integer& coefficient(std::size_t n) const;

    std::span<const Integer> coefficients() const noexcept { return coeffs_; }

    bool is_zero() const noexcept;

    TruncatedSeries truncated(std::size_t order) const;

    // a(q) * q^exp
    TruncatedSeries shifted(std::size_t exp) const;
    TruncatedSeries scaled(const Integer& factor) const;
    // a(q^m), keeping the same order
    TruncatedSeries dilated(std::size_t m) const;

    // a(q) * (1 - sign*q^exp)
    TruncatedSeries times_binomial(int sign, std::size_t exp) const;
    // a(q) / (1 - sign*q^exp); exp must be >= 1
    TruncatedSeries divided_by_binomial(int sign, std::size_t exp) const;

    // a(q) times / divided by a list of Pochhammer products.
    TruncatedSeries times_product(std::span<const QPochhammerSpec> specs) const;
    TruncatedSeries divided_by_product(std::span<const QPochhammerSpec> specs) const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    friend TruncatedSeries operator+(const TruncatedSeries&, const TruncatedSeries&);
    friend TruncatedSeries operator-(const TruncatedSeries&, const TruncatedSeries&);
    friend TruncatedSeries operator-(const TruncatedSeries&);
    friend TruncatedSeries operator*(const TruncatedSeries&, const TruncatedSeries&);
    friend TruncatedSeries inverse(const TruncatedSeries&);
    friend class FactorAccumulator;

    void multiply_binomial(int sign, std::size_t exp);
    void divide_binomial(int sign, std::size_t exp);

    std::vector<Integer> coeffs_;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

inline TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; }
inline TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) { return a - b; }
inline TruncatedSeries negate(const TruncatedSeries& a) { return -a; }
inline TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

// Multiplicative inverse; requires a[0] = +1 or -1.
TruncatedSeries inverse(const TruncatedSeries& a);

inline const Integer& coefficient(const TruncatedSeries& a, std::size_t n) {
    return a.coefficient(n);
}

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& a);

/// (sign*q^offset; q^step)_count, i.e. prod_{k<count} (1 - sign*q^(offset+k*step)).
/// An empty count means the infinite product.
class QPochhammerSpec {
public:
    static constexpr std::optional<std::size_t> kInfinite = std::nullopt;

    QPochhammerSpec(int sign, std::size_t offset, std::size_t step,
                    std::optional<std::size_t> count = kInfinite);

    static QPochhammerSpec infinite(int sign, std::size_t offset, std::size_t step) {
        return {sign, offset, step, kInfinite};
    }

    int sign() const noexcept { return sign_; }
    std::size_t offset() const noexcept { return offset_; }
    std::size_t step() const noexcept { return step_; }
    std::optional<std::size_t> count() const noexcept { return count_; }
    bool is_infinite() const noexcept { return !count_.has_value(); }

    // Calls f(exp) for every factor exponent <= bound, in increasing order.
    template <class F>
    void for_each_factor(std::size_t bound, F&& f) const {
        std::size_t k = 0;
        for (std::size_t e = offset_; e <= bound && (!count_ || k < *count_); e += step_, ++k) {
            f(e);
        }
    }

private:
    int sign_;
    std::size_t offset_;
    std::size_t step_;
    std::optional<std::size_t> count_;
};

TruncatedSeries pochhammer(const QPochhammerSpec& spec, std::size_t order);
TruncatedSeries product_of(std::span<const QPochhammerSpec> specs, std::size_t order);

// 1 / pochhammer(spec), computed factor by factor without a general inverse.
TruncatedSeries reciprocal_pochhammer(const QPochhammerSpec& spec, std::size_t order);
TruncatedSeries reciprocal_product_of(std::span<const QPochhammerSpec> specs, std::size_t order);

// numerator / denominator, both given as Pochhammer products.
TruncatedSeries pochhammer_quotient(std::span<const QPochhammerSpec> numerator,
                                    std::span<const QPochhammerSpec> denominator,
                                    std::size_t order);

}  // namespace hexq
