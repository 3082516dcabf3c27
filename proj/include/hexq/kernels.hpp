#pragma once

// Inner loops shared by the big-integer and GF(2) series types.
//
// Every kernel comes in two flavors: an OpenMP version used in production and
// a plain serial reference used as the test oracle and benchmark baseline.
// Without OpenMP the pragmas are ignored and the parallel versions run on one
// thread.

#include <cstddef>
#include <cstdint>
#include <span>

#include <gmpxx.h>

namespace hexq::kernels {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline std::size_t words_for_bits(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

int max_threads();

// out[n] = sum_{i+j=n} a[i]*b[j] for n < out.size(); out is overwritten.
void cauchy_product_serial(std::span<const mpz_class> a, std::span<const mpz_class> b,
                           std::span<mpz_class> out);
void cauchy_product(std::span<const mpz_class> a, std::span<const mpz_class> b,
                    std::span<mpz_class> out);

// GF(2) bit vectors packed little-endian into words; bit n lives in
// word n/64 at position n%64. `bits` is the logical length.

// out = x ^ (x << shift), truncated to `bits`. out and x must not alias.
void xor_shifted_serial(std::span<const Word> x, std::size_t shift, std::size_t bits,
                        std::span<Word> out);
void xor_shifted(std::span<const Word> x, std::size_t shift, std::size_t bits,
                 std::span<Word> out);

// Carry-less product truncated to `bits`. out must not alias a or b.
void clmul_serial(std::span<const Word> a, std::span<const Word> b, std::size_t bits,
                  std::span<Word> out);
void clmul(std::span<const Word> a, std::span<const Word> b, std::size_t bits,
           std::span<Word> out);

}  // namespace hexq::kernels
