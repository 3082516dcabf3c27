#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hexq/kernels.hpp"
#include "hexq/series.hpp"

namespace hexq {

/// Truncated power series over GF(2), packed 64 coefficients per word.
///
/// Bits above `order` are always zero. Every operation runs directly on the
/// words; nothing here goes through big integers.
class ParitySeries {
public:
    using Word = kernels::Word;

    explicit ParitySeries(std::size_t order);

    static ParitySeries zero(std::size_t order) { return ParitySeries(order); }
    static ParitySeries one(std::size_t order);
    static ParitySeries from_bits(const std::vector<bool>& bits);

    std::size_t order() const noexcept { return order_; }
    std::size_t size_bits() const noexcept { return order_ + 1; }
    std::span<const Word> words() const noexcept { return words_; }

    bool bit(std::size_t n) const;
    std::size_t popcount() const noexcept;

    ParitySeries truncated(std::size_t order) const;
    // a(q) * q^exp
    ParitySeries shifted(std::size_t exp) const;
    // a(q) * (1 + q^exp)
    ParitySeries times_binomial(std::size_t exp) const;
    // a(q) / (1 + q^exp) for exp >= 1, via prod_i (1 + q^(exp*2^i)).
    ParitySeries divided_by_binomial(std::size_t exp) const;

    friend bool operator==(const ParitySeries&, const ParitySeries&) = default;

private:
    friend ParitySeries reduce_mod2(const TruncatedSeries&);
    friend ParitySeries parity_add(const ParitySeries&, const ParitySeries&);
    friend ParitySeries parity_mul(const ParitySeries&, const ParitySeries&);

    void set_bit(std::size_t n);

    std::size_t order_;
    std::vector<Word> words_;
};

ParitySeries reduce_mod2(const TruncatedSeries& a);
ParitySeries parity_add(const ParitySeries& a, const ParitySeries& b);
ParitySeries parity_mul(const ParitySeries& a, const ParitySeries& b);

inline ParitySeries operator+(const ParitySeries& a, const ParitySeries& b) {
    return parity_add(a, b);
}
inline ParitySeries operator*(const ParitySeries& a, const ParitySeries& b) {
    return parity_mul(a, b);
}

}  // namespace hexq
