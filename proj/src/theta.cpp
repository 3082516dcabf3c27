#include "hexq/theta.hpp"

#include <cstdint>

#include "hexq/partitions.hpp"

namespace hexq {

namespace {

// -1 when a base of `sign` raised to `power` is negative.
int sign_power(int sign, std::int64_t power) {
    return (sign < 0 && power % 2 != 0) ? -1 : 1;
}

void accumulate(std::vector<Integer>& coeffs, std::int64_t e, int sign) {
    if (sign > 0) {
        ++coeffs[static_cast<std::size_t>(e)];
    } else {
        --coeffs[static_cast<std::size_t>(e)];
    }
}

std::size_t checked_difference(std::size_t a, std::size_t b) {
    if (a < b) {
        throw NegativeExponent(0, static_cast<std::int64_t>(a) - static_cast<std::int64_t>(b));
    }
    return a - b;
}

QPochhammerSpec inf(int sign, std::size_t offset, std::size_t step) {
    return QPochhammerSpec::infinite(sign, offset, step);
}

// Big-integer and GF(2) flavors of the few operations the regime sums need.
struct BigIntOps {
    using Series = TruncatedSeries;
    static Series one(std::size_t order) { return Series::one(order); }
    static Series times_one_plus(const Series& x, std::size_t e) { return x.times_binomial(-1, e); }
    static Series over_one_minus(const Series& x, std::size_t e) {
        return x.divided_by_binomial(1, e);
    }
};

struct ParityOps {
    using Series = ParitySeries;
    static Series one(std::size_t order) { return Series::one(order); }
    static Series times_one_plus(const Series& x, std::size_t e) { return x.times_binomial(e); }
    static Series over_one_minus(const Series& x, std::size_t e) {
        return x.divided_by_binomial(e);
    }
};

// Successive terms differ by (1+q^n) q^(3n+(s-4)/2) / ((1-q^(2n))(1-q^(2n+1))).
template <class Ops>
typename Ops::Series regime3_sum_impl(int s, std::size_t order) {
    require_regime_iii(s);
    const auto us = static_cast<std::size_t>(s);
    auto term = Ops::over_one_minus(Ops::one(order), 1);
    auto sum = term;
    for (std::size_t n = 1; n * (3 * n + us - 1) / 2 <= order; ++n) {
        term = Ops::times_one_plus(term, n);
        term = term.shifted(3 * n + us / 2 - 2);
        term = Ops::over_one_minus(term, 2 * n);
        term = Ops::over_one_minus(term, 2 * n + 1);
        sum = sum + term;
    }
    return sum;
}

// Successive terms differ by q^(2n) / ((1-q^(2n-1+h))(1-q^(2n+h))), h = (s-1)/2.
template <class Ops>
typename Ops::Series regime4_sum_impl(int s, std::size_t order) {
    require_regime_iv(s);
    const std::size_t h = static_cast<std::size_t>(s - 1) / 2;
    auto term = Ops::one(order);
    if (h == 1) {
        term = Ops::over_one_minus(term, 1);
    }
    auto sum = term;
    for (std::size_t n = 1; n * (n + 1) <= order; ++n) {
        term = term.shifted(2 * n);
        term = Ops::over_one_minus(term, 2 * n - 1 + h);
        term = Ops::over_one_minus(term, 2 * n + h);
        sum = sum + term;
    }
    return sum;
}

TruncatedSeries rr_g_product(std::size_t order) {
    const std::vector<QPochhammerSpec> den{inf(1, 1, 5), inf(1, 4, 5)};
    return reciprocal_product_of(den, order);
}

TruncatedSeries rr_h_product(std::size_t order) {
    const std::vector<QPochhammerSpec> den{inf(1, 2, 5), inf(1, 3, 5)};
    return reciprocal_product_of(den, order);
}

}  // namespace

TruncatedSeries bilateral_sum(std::span<const QuadraticExponentFamily> families,
                              std::size_t order) {
    std::vector<Integer> coeffs(order + 1);
    for (const auto& family : families) {
        family.for_each_up_to(static_cast<std::int64_t>(order),
                              [&](std::int64_t k, std::int64_t e) {
                                  accumulate(coeffs, e, family.sign(k));
                              });
    }
    return TruncatedSeries(std::move(coeffs));
}

QuadraticExponentFamily pentagonal_family() {
    return {3, -1, 0, 2, SignRule::alternating()};
}

std::vector<QuadraticExponentFamily> eq41_families(int s) {
    require_regime_iii(s);
    // (3n - s/2)(5n - 3 + s/2)/2 = ((6n - s)(10n - 6 + s))/8
    return {
        {15, 3 * s - 5, 0, 2, SignRule::par_c(s)},
        {60, -(36 + 4 * s), s * (6 - s), 8, SignRule::par_c(s)},
    };
}

std::vector<QuadraticExponentFamily> eq42_families(int s) {
    require_regime_iv(s);
    return {{5, -s, 0, 2, SignRule::par_b(s)}};
}

std::vector<QPochhammerSpec> substituted_pochhammer(Monomial base, Monomial q, std::size_t step) {
    const std::size_t stride = q.exp * step;
    if (sign_power(q.sign, static_cast<std::int64_t>(step)) > 0) {
        return {inf(base.sign, base.exp, stride)};
    }
    // Factors alternate in sign: even k keep the base sign, odd k flip it.
    return {inf(base.sign, base.exp, 2 * stride), inf(-base.sign, base.exp + stride, 2 * stride)};
}

SeriesPair jtp_sides(Monomial z, Monomial q, std::size_t order) {
    const std::size_t a = z.exp;
    const std::size_t m = q.exp;
    const auto ia = static_cast<std::int64_t>(a);
    const auto im = static_cast<std::int64_t>(m);

    // Exponent a*n + m*n(n-1)/2; the sign collects (-z.sign)^n q.sign^(n(n-1)/2).
    std::vector<Integer> coeffs(order + 1);
    const QuadraticExponentFamily window(im, 2 * ia - im, 0, 2, SignRule::constant());
    window.for_each_up_to(static_cast<std::int64_t>(order), [&](std::int64_t n, std::int64_t e) {
        const int sign = sign_power(-z.sign, n) * sign_power(q.sign, n * (n - 1) / 2);
        accumulate(coeffs, e, sign);
    });

    std::vector<QPochhammerSpec> specs;
    for (const Monomial base : {Monomial{z.sign, a}, Monomial{q.sign * z.sign, checked_difference(m, a)},
                                Monomial{q.sign, m}}) {
        for (const auto& spec : substituted_pochhammer(base, q)) {
            specs.push_back(spec);
        }
    }
    return {TruncatedSeries(std::move(coeffs)), product_of(specs, order)};
}

SeriesPair quintuple_sides(Monomial z, Monomial q, std::size_t order) {
    const std::size_t a = z.exp;
    const std::size_t m = q.exp;
    const auto ia = static_cast<std::int64_t>(a);
    const auto im = static_cast<std::int64_t>(m);
    const auto bound = static_cast<std::int64_t>(order);

    std::vector<Integer> coeffs(order + 1);
    // z^(3n) q^(n(3n-1)/2)
    const QuadraticExponentFamily first(3 * im, 6 * ia - im, 0, 2, SignRule::constant());
    first.for_each_up_to(bound, [&](std::int64_t n, std::int64_t e) {
        const int sign = sign_power(z.sign, 3 * n) * sign_power(q.sign, n * (3 * n - 1) / 2);
        accumulate(coeffs, e, sign);
    });
    // -z^(3n+1) q^(n(3n+1)/2)
    const QuadraticExponentFamily second(3 * im, 6 * ia + im, 2 * ia, 2, SignRule::constant());
    second.for_each_up_to(bound, [&](std::int64_t n, std::int64_t e) {
        const int sign = -sign_power(z.sign, 3 * n + 1) * sign_power(q.sign, n * (3 * n + 1) / 2);
        accumulate(coeffs, e, sign);
    });

    std::vector<QPochhammerSpec> specs;
    auto append = [&](Monomial base, std::size_t step) {
        for (const auto& spec : substituted_pochhammer(base, q, step)) {
            specs.push_back(spec);
        }
    };
    append({q.sign, m}, 1);
    append({z.sign, a}, 1);
    append({q.sign * z.sign, checked_difference(m, a)}, 1);
    // z^2 always has sign +1.
    append({q.sign, m + 2 * a}, 2);
    append({q.sign, checked_difference(m, 2 * a)}, 2);
    return {TruncatedSeries(std::move(coeffs)), product_of(specs, order)};
}

SeriesPair gauss_theta_sides(std::size_t order) {
    const QuadraticExponentFamily squares(1, 0, 0, 1, SignRule::alternating());
    const std::vector<QPochhammerSpec> num{inf(1, 1, 1)};
    const std::vector<QPochhammerSpec> den{inf(-1, 1, 1)};
    return {bilateral_sum(std::span(&squares, 1), order), pochhammer_quotient(num, den, order)};
}

TruncatedSeries partial_gauss_sum(std::size_t k, std::size_t order, std::size_t step) {
    std::vector<Integer> coeffs(order + 1);
    coeffs[0] = 1;
    for (std::size_t j = 1; j <= k && step * j * j <= order; ++j) {
        coeffs[step * j * j] += (j % 2 == 0) ? 2 : -2;
    }
    return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries truncated_gauss_lhs(std::size_t k, std::size_t order, std::size_t step) {
    const std::vector<QPochhammerSpec> num{inf(-1, step, step)};
    const std::vector<QPochhammerSpec> den{inf(1, step, step)};
    const TruncatedSeries ratio = pochhammer_quotient(num, den, order);
    TruncatedSeries r = ratio * partial_gauss_sum(k, order, step) - TruncatedSeries::one(order);
    return (k % 2 == 0) ? r : -r;
}

TruncatedSeries truncated_gauss_rhs(std::size_t k, std::size_t order, std::size_t step) {
    if (k == 0) {
        throw std::invalid_argument("truncated Gauss identity needs k >= 1");
    }
    // tail(t) = (-Q^t;Q)_inf / (Q^t;Q)_inf, built from t = order/step + 1 (where it is 1)
    // down to t = k + 2, picking up the j-th term at t = k + j + 2.
    TruncatedSeries sum = TruncatedSeries::zero(order);
    TruncatedSeries tail = TruncatedSeries::one(order);
    for (std::size_t t = order / step + 1; t >= k + 2; --t) {
        if (step * t <= order) {
            tail = tail.times_binomial(-1, step * t).divided_by_binomial(1, step * t);
        }
        const std::size_t j = t - k - 2;
        const std::size_t lead = step * (k + 1) * (k + j + 1);
        if (lead <= order) {
            sum = sum + tail.shifted(lead).divided_by_binomial(1, step * (k + j + 1));
        }
    }
    const std::vector<QPochhammerSpec> num{QPochhammerSpec(-1, step, step, k)};
    const std::vector<QPochhammerSpec> den{QPochhammerSpec(1, step, step, k)};
    return (pochhammer_quotient(num, den, order) * sum).scaled(2);
}

SeriesPair rr_G(std::size_t order) {
    TruncatedSeries term = TruncatedSeries::one(order);
    TruncatedSeries sum = term;
    for (std::size_t n = 1; n * n <= order; ++n) {
        term = term.shifted(2 * n - 1).divided_by_binomial(1, n);
        sum = sum + term;
    }
    return {sum, rr_g_product(order)};
}

SeriesPair rr_H(std::size_t order) {
    TruncatedSeries term = TruncatedSeries::one(order);
    TruncatedSeries sum = term;
    for (std::size_t n = 1; n * n + n <= order; ++n) {
        term = term.shifted(2 * n).divided_by_binomial(1, n);
        sum = sum + term;
    }
    return {sum, rr_h_product(order)};
}

TruncatedSeries regime3_sum(int s, std::size_t order) {
    return regime3_sum_impl<BigIntOps>(s, order);
}

TruncatedSeries regime4_sum(int s, std::size_t order) {
    return regime4_sum_impl<BigIntOps>(s, order);
}

ParitySeries regime3_sum_parity(int s, std::size_t order) {
    return regime3_sum_impl<ParityOps>(s, order);
}

ParitySeries regime4_sum_parity(int s, std::size_t order) {
    return regime4_sum_impl<ParityOps>(s, order);
}

TruncatedSeries regime3_product(int s, std::size_t order) {
    require_regime_iii(s);
    const TruncatedSeries rr = (s == 2 ? rr_g_product(order) : rr_h_product(order)).dilated(2);
    const std::vector<QPochhammerSpec> den{inf(1, 1, 2)};
    return rr.divided_by_product(den);
}

TruncatedSeries regime4_product(int s, std::size_t order) {
    require_regime_iv(s);
    const auto us = static_cast<std::size_t>(s);
    const std::vector<QPochhammerSpec> num{
        inf(1, us, 10), inf(1, 10 - us, 10), inf(1, 10, 10),
        inf(1, 10 - 2 * us, 20), inf(1, 10 + 2 * us, 20),
    };
    const std::vector<QPochhammerSpec> den{inf(1, 1, 1)};
    return pochhammer_quotient(num, den, order);
}

SeriesPair eq41_sides(int s, std::size_t order) {
    const auto families = eq41_families(s);
    const auto us = static_cast<std::size_t>(s);
    const std::vector<QPochhammerSpec> num{inf(1, 2, 2)};
    const std::vector<QPochhammerSpec> den{
        inf(1, 1, 2), inf(1, us, 10), inf(1, 10 - us, 10), inf(-1, 2, 2),
    };
    return {bilateral_sum(families, order), pochhammer_quotient(num, den, order)};
}

SeriesPair eq42_sides(int s, std::size_t order, Eq42Reading reading) {
    const auto families = eq42_families(s);
    const auto us = static_cast<std::size_t>(s);
    const std::size_t first = reading == Eq42Reading::FirstFactorQs ? us : 2;
    const std::vector<QPochhammerSpec> num{
        inf(1, first, 10), inf(1, 10 - us, 10), inf(1, 10, 10),
        inf(1, 10 - 2 * us, 20), inf(1, 10 + 2 * us, 20), inf(1, 2, 2),
    };
    const std::vector<QPochhammerSpec> den{inf(1, 1, 1), inf(-1, 2, 2)};
    return {bilateral_sum(families, order), pochhammer_quotient(num, den, order)};
}

}  // namespace hexq
