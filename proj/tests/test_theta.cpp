#include <doctest.h>

#include "hexq/quadratic.hpp"
#include "hexq/theta.hpp"
#include "oracle.hpp"

using namespace hexq;

namespace {

void check_equal(const SeriesPair& sides) {
    REQUIRE(sides.lhs.order() == sides.rhs.order());
    for (std::size_t n = 0; n <= sides.lhs.order(); ++n) {
        INFO("n = " << n);
        REQUIRE(sides.lhs[n] == sides.rhs[n]);
    }
}

}  // namespace

TEST_CASE("bilateral sum of k^2") {
    const std::vector<QuadraticExponentFamily> fam{{1, 0, 0, 1, SignRule::constant()}};
    const auto t = bilateral_sum(fam, 5);
    CHECK(t == TruncatedSeries(std::vector<Integer>{1, 2, 0, 0, 2, 0}));
}

TEST_CASE("pentagonal bilateral sum is the euler function") {
    const std::vector<QuadraticExponentFamily> fam{pentagonal_family()};
    const auto euler = oracle::to_series(oracle::finite_product(-1, 1, 1, 300, 300));
    CHECK(bilateral_sum(fam, 300) == euler);
}

TEST_CASE("jacobi triple product specializations") {
    check_equal(jtp_sides({-1, 1}, {-1, 5}, 300));
    check_equal(jtp_sides({-1, 3}, {-1, 5}, 300));
    check_equal(jtp_sides({1, 4}, {1, 10}, 300));
    check_equal(jtp_sides({1, 2}, {1, 10}, 300));
    check_equal(jtp_sides({1, 1}, {1, 3}, 200));
}

TEST_CASE("quintuple product specializations") {
    check_equal(quintuple_sides({1, 2}, {-1, 5}, 300));
    check_equal(quintuple_sides({-1, 1}, {-1, 5}, 300));
    check_equal(quintuple_sides({1, 1}, {1, 10}, 300));
    check_equal(quintuple_sides({1, 3}, {1, 10}, 300));
}

TEST_CASE("substitution into a pochhammer symbol with negative base") {
    // (q^2; -q^5)_inf expanded by brute force.
    const std::size_t order = 120;
    oracle::Poly acc(order + 1, 0);
    acc[0] = 1;
    for (std::size_t i = 0; 2 + 5 * i <= order; ++i) {
        oracle::Poly f(order + 1, 0);
        f[0] = 1;
        f[2 + 5 * i] = (i % 2 == 0) ? -1 : 1;
        acc = oracle::mul(acc, f, order);
    }
    const auto specs = substituted_pochhammer({1, 2}, {-1, 5});
    CHECK(product_of(specs, order) == oracle::to_series(acc));
}

TEST_CASE("gauss theta and its truncated form") {
    check_equal(gauss_theta_sides(300));
    for (std::size_t k = 1; k <= 10; ++k) {
        CAPTURE(k);
        check_equal({truncated_gauss_lhs(k, 300), truncated_gauss_rhs(k, 300)});
        check_equal({truncated_gauss_lhs(k, 120, 1), truncated_gauss_rhs(k, 120, 1)});
    }
}

TEST_CASE("truncated gauss rhs starts at q^(2(k+1)^2)") {
    for (std::size_t k = 1; k <= 4; ++k) {
        const auto rhs = truncated_gauss_rhs(k, 100);
        const std::size_t lead = 2 * (k + 1) * (k + 1);
        for (std::size_t n = 0; n < lead && n <= 100; ++n) {
            CHECK(rhs[n] == 0);
        }
        if (lead <= 100) {
            CHECK(rhs[lead] == 2);
        }
    }
}

TEST_CASE("rogers ramanujan") {
    const auto g = rr_G(2000);
    check_equal(g);
    check_equal(rr_H(2000));
    CHECK(g.lhs[4] == 2);
}

TEST_CASE("regime sums equal their product forms") {
    for (int s : {2, 4}) {
        check_equal({regime3_sum(s, 1000), regime3_product(s, 1000)});
    }
    for (int s : {1, 3}) {
        check_equal({regime4_sum(s, 1000), regime4_product(s, 1000)});
    }
}

TEST_CASE("parity regime sums equal reduced integer sums") {
    for (int s : {2, 4}) {
        CHECK(regime3_sum_parity(s, 1500) == reduce_mod2(regime3_sum(s, 1500)));
    }
    for (int s : {1, 3}) {
        CHECK(regime4_sum_parity(s, 1500) == reduce_mod2(regime4_sum(s, 1500)));
    }
}

TEST_CASE("eq41 and eq42 under the q^s reading") {
    for (int s : {2, 4}) {
        check_equal(eq41_sides(s, 300));
    }
    for (int s : {1, 3}) {
        check_equal(eq42_sides(s, 300));
    }
}

TEST_CASE("eq42 literal q^2 reading does not hold") {
    for (int s : {1, 3}) {
        const auto sides = eq42_sides(s, 300, Eq42Reading::LiteralQ2);
        CHECK(sides.lhs != sides.rhs);
    }
}
