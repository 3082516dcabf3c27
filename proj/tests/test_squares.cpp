#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "hexq/partitions.hpp"
#include "hexq/squares.hpp"
#include "hexq/theta.hpp"

using namespace hexq;

TEST_CASE("integer square roots") {
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(1) == 1);
    CHECK(isqrt(2) == 1);
    CHECK(isqrt(3) == 1);
    CHECK(isqrt(4) == 2);
    const std::uint64_t top = std::numeric_limits<std::uint64_t>::max();
    CHECK(isqrt(top) == 4294967295ULL);
    std::mt19937_64 rng(1);
    for (int i = 0; i < 10000; ++i) {
        const std::uint64_t v = rng() >> (rng() % 64);
        const auto r = static_cast<unsigned __int128>(isqrt(v));
        CHECK(r * r <= v);
        CHECK((r + 1) * (r + 1) > v);
    }
}

TEST_CASE("square detection") {
    CHECK(is_square(std::uint64_t{121}));
    CHECK_FALSE(is_square(std::uint64_t{241}));
    CHECK(is_square(std::uint64_t{0}));
    CHECK(is_square(Integer("152415787532388367504942236884722755800955129")));
    CHECK_FALSE(is_square(Integer("152415787532388367504942236884722755800955130")));
    CHECK_FALSE(is_square(Integer(-4)));
    for (std::uint64_t r = 4294967290ULL; r < 4294967296ULL; ++r) {
        CHECK(is_square(r * r));
        CHECK_FALSE(is_square(r * r - 1));
    }
}

TEST_CASE("index sets of progressions") {
    const SquareProgression p{20, 1};
    CHECK(index_set(p, 25) == std::vector<std::uint64_t>{0, 4, 6, 18, 22});
    CHECK(SquareProgression::theorem1(2) == SquareProgression{120, 1});
    CHECK(SquareProgression::theorem1(4) == SquareProgression{120, 49});
    CHECK(SquareProgression::theorem1(1) == SquareProgression{40, 1});
    CHECK(SquareProgression::theorem1(3) == SquareProgression{40, 9});
    CHECK(SquareProgression::corollary2_index(2) == SquareProgression{20, 1});
    CHECK(SquareProgression::corollary2_index(4) == SquareProgression{20, 9});
    CHECK(SquareProgression::corollary2_index(1) == SquareProgression{15, 1});
    CHECK(SquareProgression::corollary2_index(3) == SquareProgression{15, 4});
}

TEST_CASE("indicator series and parity agree") {
    for (int s : {1, 2, 3, 4}) {
        const auto p = SquareProgression::theorem1(s);
        CHECK(reduce_mod2(indicator_series(p, 3000)) == indicator_parity(p, 3000));
    }
}

TEST_CASE("exponent sets of the decompositions and theta series are square progressions") {
    const std::int64_t bound = 200000;
    for (int s : {2, 4}) {
        const std::vector<QuadraticExponentFamily> dec{r_s_decomposition_family(s)};
        CHECK(verify_set_equivalence(dec, SquareProgression::corollary2_index(s), bound).status ==
              Status::Pass);
        const auto eq41 = eq41_families(s);
        CHECK(verify_set_equivalence(eq41, SquareProgression::theorem1(s), bound).status ==
              Status::Pass);
    }
    for (int s : {1, 3}) {
        const auto dec = r_star_decomposition_families(s);
        CHECK(verify_set_equivalence(dec, SquareProgression::corollary2_index(s), bound).status ==
              Status::Pass);
        const auto eq42 = eq42_families(s);
        CHECK(verify_set_equivalence(eq42, SquareProgression::theorem1(s), bound).status ==
              Status::Pass);
    }
}

TEST_CASE("a wrong progression is caught") {
    const std::vector<QuadraticExponentFamily> dec{r_s_decomposition_family(2)};
    const auto report = verify_set_equivalence(dec, SquareProgression{20, 9}, 1000);
    CHECK(report.status == Status::Fail);
    CHECK_FALSE(report.violations.empty());
}
