#include "rht/series.hpp"

#include <doctest.h>

#include <random>

using namespace rht;

namespace {

std::vector<long> longs(const PoincareSeries& s)
{
    std::vector<long> out;
    for (const auto& c : s.coefficients())
        out.push_back(c.get_si());
    return out;
}

PoincareSeries random_series(std::mt19937& rng, int cutoff)
{
    std::uniform_int_distribution<int> v(0, 5);
    std::vector<Integer> c;
    for (int i = 0; i <= cutoff; ++i)
        c.emplace_back(v(rng));
    return PoincareSeries(c, cutoff);
}

}  // namespace

TEST_CASE("em_series examples")
{
    CHECK(longs(em_series(3, 1, 5)) == std::vector<long>{1, 0, 0, 1, 0, 0});
    CHECK(longs(em_series(2, 1, 6)) == std::vector<long>{1, 0, 1, 0, 1, 0, 1});
    CHECK(longs(em_series(2, 2, 4)) == std::vector<long>{1, 0, 2, 0, 3});
    CHECK(longs(em_series(3, 2, 7)) == std::vector<long>{1, 0, 0, 2, 0, 0, 1, 0});
    CHECK(longs(em_series(5, 0, 3)) == std::vector<long>{1, 0, 0, 0});
}

TEST_CASE("series_product examples and laws")
{
    auto p = series_product(em_series(5, 1, 15), em_series(7, 1, 15));
    for (int n = 0; n <= 15; ++n)
        CHECK(p[static_cast<std::size_t>(n)] == ((n == 0 || n == 5 || n == 7 || n == 12) ? 1 : 0));

    std::mt19937 rng(1);
    for (int t = 0; t < 50; ++t) {
        auto a = random_series(rng, 12), b = random_series(rng, 12), c = random_series(rng, 9);
        CHECK(series_product(a, PoincareSeries::one(12)) == a);
        CHECK(series_product(a, b) == series_product(b, a));
        CHECK(series_product(series_product(a, b), c) == series_product(a, series_product(b, c)));
        CHECK(series_product(a, c).cutoff() == 9);
    }
}

TEST_CASE("rational series round trip through the denominator")
{
    // 1/(1-t^2)^2: coefficients of partitions into two parts of size 2.
    auto s = rational_series({Integer(1)}, {2, 2}, 10);
    CHECK(longs(s) == std::vector<long>{1, 0, 2, 0, 3, 0, 4, 0, 5, 0, 6});
    CHECK(s == em_series(2, 2, 10));
    auto back = multiply_by_denominator(s, {2, 2});
    CHECK(longs(back) == std::vector<long>{1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("large coefficients stay exact")
{
    auto s = em_series(2, 40, 200);
    // coefficient of t^200 in 1/(1-t^2)^40 is C(139, 39)
    Integer want;
    mpz_bin_uiui(want.get_mpz_t(), 139, 39);
    CHECK(s[200] == want);
    CHECK_FALSE(mpz_fits_slong_p(want.get_mpz_t()));
}
