#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hexq {

class NegativeExponent : public std::runtime_error {
public:
    NegativeExponent(std::int64_t k, std::int64_t e);
};

enum class SignKind {
    Constant,     // +1
    Alternating,  // (-1)^k
    ParA,         // (-1)^(k(k-1)/2)
    ParB,         // (-1)^(k(k+s)/2)
    ParC,         // (-1)^(k((s-1)k-1)/2)
};

/// A sign function k -> {+1, -1} from a closed catalog, times a fixed +-1 scale.
class SignRule {
public:
    static SignRule constant(int scale = 1) { return {SignKind::Constant, 0, scale}; }
    static SignRule alternating(int scale = 1) { return {SignKind::Alternating, 0, scale}; }
    static SignRule par_a(int scale = 1) { return {SignKind::ParA, 0, scale}; }
    static SignRule par_b(int s, int scale = 1) { return {SignKind::ParB, s, scale}; }
    static SignRule par_c(int s, int scale = 1) { return {SignKind::ParC, s, scale}; }

    SignKind kind() const noexcept { return kind_; }
    int parameter() const noexcept { return s_; }
    int scale() const noexcept { return scale_; }

    int operator()(std::int64_t k) const;

    std::string describe() const;

private:
    SignRule(SignKind kind, int s, int scale);

    SignKind kind_;
    int s_;
    int scale_;
};

/// e(k) = (a*k^2 + b*k + c) / d, integer-valued on all of Z, with a > 0.
///
/// Stored in lowest terms. Construction checks integrality over a full
/// residue period of k, so a mistyped constant is rejected immediately.
class QuadraticExponentFamily {
public:
    QuadraticExponentFamily(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                            SignRule sign);

    std::int64_t exponent(std::int64_t k) const;
    int sign(std::int64_t k) const { return sign_(k); }
    const SignRule& sign_rule() const noexcept { return sign_; }

    std::string describe() const;

    /// Calls f(k, e(k)) for every k in Z with e(k) <= bound.
    ///
    /// Scans outward from k = 0 in both directions and stops once e has passed
    /// its minimum and exceeded the bound. Throws NegativeExponent if any visited
    /// exponent is negative.
    template <class F>
    void for_each_up_to(std::int64_t bound, F&& f) const {
        for (int dir : {1, -1}) {
            for (std::int64_t k = dir > 0 ? 0 : -1;; k += dir) {
                const std::int64_t e = exponent(k);
                if (e > bound) {
                    if (exponent(k + dir) >= e) {
                        break;
                    }
                    continue;
                }
                if (e < 0) {
                    throw NegativeExponent(k, e);
                }
                f(k, e);
            }
        }
    }

private:
    std::int64_t a_, b_, c_, d_;
    SignRule sign_;
};

}  // namespace hexq
