#include "hexq/parity.hpp"

#include <algorithm>
#include <bit>

namespace hexq {

using kernels::kWordBits;
using kernels::words_for_bits;

ParitySeries::ParitySeries(std::size_t order)
    : order_(order), words_(words_for_bits(order + 1), Word{0}) {}

ParitySeries ParitySeries::one(std::size_t order) {
    ParitySeries r(order);
    r.set_bit(0);
    return r;
}

ParitySeries ParitySeries::from_bits(const std::vector<bool>& bits) {
    if (bits.empty()) {
        throw SeriesError("a parity series needs at least one bit");
    }
    ParitySeries r(bits.size() - 1);
    for (std::size_t n = 0; n < bits.size(); ++n) {
        if (bits[n]) {
            r.set_bit(n);
        }
    }
    return r;
}

bool ParitySeries::bit(std::size_t n) const {
    if (n > order_) {
        throw OrderExceeded(n, order_);
    }
    return (words_[n / kWordBits] >> (n % kWordBits)) & 1U;
}

void ParitySeries::set_bit(std::size_t n) {
    words_[n / kWordBits] |= Word{1} << (n % kWordBits);
}

std::size_t ParitySeries::popcount() const noexcept {
    std::size_t total = 0;
    for (Word w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

ParitySeries ParitySeries::truncated(std::size_t order) const {
    ParitySeries r(std::min(order, order_));
    std::copy_n(words_.begin(), r.words_.size(), r.words_.begin());
    const std::size_t used = r.size_bits() % kWordBits;
    if (used != 0) {
        r.words_.back() &= (Word{1} << used) - 1;
    }
    return r;
}

ParitySeries ParitySeries::shifted(std::size_t exp) const {
    ParitySeries r(order_);
    const std::size_t ws = exp / kWordBits;
    const std::size_t bs = exp % kWordBits;
    for (std::size_t w = ws; w < words_.size(); ++w) {
        Word v = words_[w - ws] << bs;
        if (bs != 0 && w > ws) {
            v |= words_[w - ws - 1] >> (kWordBits - bs);
        }
        r.words_[w] = v;
    }
    const std::size_t used = size_bits() % kWordBits;
    if (used != 0) {
        r.words_.back() &= (Word{1} << used) - 1;
    }
    return r;
}

ParitySeries ParitySeries::times_binomial(std::size_t exp) const {
    ParitySeries r(order_);
    if (exp == 0) {
        return r;  // 1 + 1 = 0
    }
    kernels::xor_shifted(words_, exp, size_bits(), r.words_);
    return r;
}

ParitySeries ParitySeries::divided_by_binomial(std::size_t exp) const {
    if (exp == 0) {
        throw NonUnitConstantTerm();
    }
    // 1/(1+x) = (1+x)(1+x^2)(1+x^4)... over GF(2).
    ParitySeries cur(*this);
    ParitySeries next(order_);
    for (std::size_t e = exp; e <= order_; e *= 2) {
        kernels::xor_shifted(cur.words_, e, size_bits(), next.words_);
        std::swap(cur.words_, next.words_);
        if (e > order_ / 2) {
            break;
        }
    }
    return cur;
}

ParitySeries reduce_mod2(const TruncatedSeries& a) {
    ParitySeries r(a.order());
    for (std::size_t n = 0; n <= a.order(); ++n) {
        if (mpz_odd_p(a[n].get_mpz_t())) {
            r.set_bit(n);
        }
    }
    return r;
}

ParitySeries parity_add(const ParitySeries& a, const ParitySeries& b) {
    const ParitySeries& small = a.order() <= b.order() ? a : b;
    const ParitySeries& large = a.order() <= b.order() ? b : a;
    ParitySeries r = large.truncated(small.order());
    for (std::size_t w = 0; w < r.words_.size(); ++w) {
        r.words_[w] ^= small.words_[w];
    }
    return r;
}

ParitySeries parity_mul(const ParitySeries& a, const ParitySeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    ParitySeries r(order);
    kernels::clmul(a.words_, b.words_, order + 1, r.words_);
    return r;
}

}  // namespace hexq
