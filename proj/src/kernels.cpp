#include "hexq/kernels.hpp"

#include <algorithm>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hexq::kernels {

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace {

bool get_bit(std::span<const Word> v, std::size_t n) {
    return (v[n / kWordBits] >> (n % kWordBits)) & 1U;
}

void flip_bit(std::span<Word> v, std::size_t n) {
    v[n / kWordBits] ^= Word{1} << (n % kWordBits);
}

// Word `w` of (x << shift), reading zeros below bit 0.
Word shifted_word(std::span<const Word> x, std::size_t shift, std::size_t w) {
    const std::size_t ws = shift / kWordBits;
    const std::size_t bs = shift % kWordBits;
    if (w < ws) {
        return 0;
    }
    const std::size_t src = w - ws;
    Word v = src < x.size() ? x[src] << bs : 0;
    if (bs != 0 && src >= 1 && src - 1 < x.size()) {
        v |= x[src - 1] >> (kWordBits - bs);
    }
    return v;
}

void mask_tail(std::span<Word> out, std::size_t bits) {
    if (out.empty()) {
        return;
    }
    const std::size_t used = bits % kWordBits;
    if (used != 0) {
        out.back() &= (Word{1} << used) - 1;
    }
}

}  // namespace

void cauchy_product_serial(std::span<const mpz_class> a, std::span<const mpz_class> b,
                           std::span<mpz_class> out) {
    for (std::size_t n = 0; n < out.size(); ++n) {
        out[n] = 0;
        for (std::size_t i = 0; i <= n && i < a.size(); ++i) {
            if (n - i < b.size()) {
                out[n] += a[i] * b[n - i];
            }
        }
    }
}

void cauchy_product(std::span<const mpz_class> a, std::span<const mpz_class> b,
                    std::span<mpz_class> out) {
    // Sparse operands (theta sums, partial Gauss sums) are common.
    std::vector<std::size_t> support;
    const std::size_t limit = std::min(a.size(), out.size());
    for (std::size_t i = 0; i < limit; ++i) {
        if (sgn(a[i]) != 0) {
            support.push_back(i);
        }
    }
    const auto n_out = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t sn = 0; sn < n_out; ++sn) {
        const auto n = static_cast<std::size_t>(sn);
        mpz_ptr acc = out[n].get_mpz_t();
        mpz_set_ui(acc, 0);
        for (std::size_t i : support) {
            if (i > n) {
                break;
            }
            if (n - i < b.size()) {
                mpz_addmul(acc, a[i].get_mpz_t(), b[n - i].get_mpz_t());
            }
        }
    }
}

void xor_shifted_serial(std::span<const Word> x, std::size_t shift, std::size_t bits,
                        std::span<Word> out) {
    std::fill(out.begin(), out.end(), Word{0});
    for (std::size_t n = 0; n < bits; ++n) {
        bool v = get_bit(x, n);
        if (n >= shift) {
            v ^= get_bit(x, n - shift);
        }
        if (v) {
            flip_bit(out, n);
        }
    }
}

void xor_shifted(std::span<const Word> x, std::size_t shift, std::size_t bits,
                 std::span<Word> out) {
    const auto n_words = static_cast<std::ptrdiff_t>(words_for_bits(bits));
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t w = 0; w < n_words; ++w) {
        const auto uw = static_cast<std::size_t>(w);
        out[uw] = x[uw] ^ shifted_word(x, shift, uw);
    }
    mask_tail(out, bits);
}

void clmul_serial(std::span<const Word> a, std::span<const Word> b, std::size_t bits,
                  std::span<Word> out) {
    std::fill(out.begin(), out.end(), Word{0});
    for (std::size_t i = 0; i < bits; ++i) {
        if (!get_bit(a, i)) {
            continue;
        }
        for (std::size_t j = 0; i + j < bits; ++j) {
            if (get_bit(b, j)) {
                flip_bit(out, i + j);
            }
        }
    }
}

void clmul(std::span<const Word> a, std::span<const Word> b, std::size_t bits,
           std::span<Word> out) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < bits; ++i) {
        if (get_bit(a, i)) {
            support.push_back(i);
        }
    }
    // Each thread owns a disjoint range of output words, so the XOR
    // accumulation needs no synchronization.
    const auto n_words = static_cast<std::ptrdiff_t>(words_for_bits(bits));
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t w = 0; w < n_words; ++w) {
        const auto uw = static_cast<std::size_t>(w);
        const std::size_t hi = (uw + 1) * kWordBits;
        Word acc = 0;
        for (std::size_t i : support) {
            if (i >= hi) {
                break;
            }
            acc ^= shifted_word(b, i, uw);
        }
        out[uw] = acc;
    }
    mask_tail(out, bits);
}

}  // namespace hexq::kernels
