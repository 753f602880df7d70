#include "rht/error.hpp"
#include "rht/gca.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace rht;

namespace {

// Coefficient of t^n in prod_even 1/(1-t^d) * prod_odd (1+t^d).
std::vector<long> generating_function(const std::vector<Generator>& gens, int top)
{
    std::vector<long> c(static_cast<std::size_t>(top + 1), 0);
    c[0] = 1;
    for (const auto& g : gens) {
        if (g.odd()) {
            for (int n = top; n >= g.degree; --n)
                c[n] += c[n - g.degree];
        } else {
            for (int n = g.degree; n <= top; ++n)
                c[n] += c[n - g.degree];
        }
    }
    return c;
}

Element random_homogeneous(const Context& ctx, int degree, std::mt19937& rng)
{
    std::uniform_int_distribution<int> coef(-3, 3);
    Element e(ctx);
    for (const auto& m : basis_of_degree(*ctx, degree))
        if (int c = coef(rng))
            e.add_term(m, c);
    return e;
}

}  // namespace

TEST_CASE("multiply: odd square, Koszul sign, even commutation")
{
    auto ctx = make_context({{"u", 3}, {"v", 3}, {"a", 2}});
    auto u = Element::generator(ctx, "u"), v = Element::generator(ctx, "v"), a = Element::generator(ctx, "a");
    CHECK((u * u).is_zero());
    CHECK(u * v == -(v * u));
    CHECK(multiply(2 * a, 3 * a) == 6 * power(a, 2));
    CHECK(to_string(multiply(2 * a, 3 * a)) == "6*a^2");
}

TEST_CASE("multiply rejects mixed contexts")
{
    auto c1 = make_context({{"a", 2}});
    auto c2 = make_context({{"a", 2}, {"b", 3}});
    auto c3 = make_context({{"a", 2}});
    CHECK(Element::generator(c1, 0) * Element::generator(c3, 0) == power(Element::generator(c1, 0), 2));
    CHECK_THROWS_AS(multiply(Element::generator(c1, 0), Element::generator(c2, 0)), ContextError);
}

TEST_CASE("Koszul sign matches the permutation sign of odd factors")
{
    // x1 x2 x3 x4 all odd: the product in reversed order differs by the sign
    // of the reversal permutation on four odd letters, (-1)^6 = +1, and on
    // three letters (-1)^3 = -1.
    auto ctx = make_context({{"x1", 1}, {"x2", 3}, {"x3", 5}, {"x4", 7}});
    auto g = [&](int i) { return Element::generator(ctx, static_cast<std::size_t>(i)); };
    CHECK(g(3) * g(2) * g(1) * g(0) == g(0) * g(1) * g(2) * g(3));
    CHECK(g(2) * g(1) * g(0) == -(g(0) * g(1) * g(2)));
    // Inversion count oracle over all orderings of three odd letters.
    std::vector<int> p{0, 1, 2};
    do {
        int inversions = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                inversions += p[i] > p[j];
        Element prod = g(p[0]) * g(p[1]) * g(p[2]);
        CHECK(prod == (inversions % 2 ? -1 : 1) * (g(0) * g(1) * g(2)));
    } while (std::next_permutation(p.begin(), p.end()));
}

TEST_CASE("basis_of_degree examples")
{
    auto e = make_context({{"e2", 2}});
    auto b6 = basis_of_degree(*e, 6);
    REQUIRE(b6.size() == 1);
    CHECK(to_string(*e, b6[0]) == "e2^3");

    auto xe = make_context({{"x3", 3}, {"e2", 2}});
    auto b5 = basis_of_degree(*xe, 5);
    REQUIRE(b5.size() == 1);
    CHECK(b5[0].exponent(0) == 1);
    CHECK(b5[0].exponent(1) == 1);

    auto x = make_context({{"x7", 7}});
    CHECK(basis_of_degree(*x, 14).empty());
    CHECK(basis_of_degree(*x, 0).size() == 1);
    CHECK(basis_of_degree(*x, 0)[0].is_unit());
}

TEST_CASE("basis sizes match the generating function")
{
    std::vector<std::vector<Generator>> sets = {
        {{"a", 2}, {"b", 3}},
        {{"a", 2}, {"b", 2}, {"c", 4}, {"x", 3}, {"y", 5}},
        {{"x", 1}, {"y", 3}, {"z", 5}, {"w", 7}},
        {{"p", 4}, {"e", 6}, {"x", 7}, {"y", 11}, {"u", 2}},
    };
    for (const auto& gens : sets) {
        auto ctx = make_context(gens);
        auto want = generating_function(gens, 30);
        for (int n = 0; n <= 30; ++n) {
            auto basis = basis_of_degree(*ctx, n);
            CHECK(static_cast<long>(basis.size()) == want[static_cast<std::size_t>(n)]);
            CHECK(std::is_sorted(basis.begin(), basis.end()));
            CHECK(std::adjacent_find(basis.begin(), basis.end()) == basis.end());
            for (const auto& m : basis)
                CHECK(m.degree() == n);
        }
    }
}

TEST_CASE("graded commutativity, associativity and distributivity on random elements")
{
    auto ctx = make_context({{"a", 2}, {"x", 3}, {"b", 4}, {"y", 5}, {"z", 1}});
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> deg(0, 9);
    for (int t = 0; t < 150; ++t) {
        int da = deg(rng), db = deg(rng), dc = deg(rng);
        auto a = random_homogeneous(ctx, da, rng), b = random_homogeneous(ctx, db, rng),
             c = random_homogeneous(ctx, dc, rng), c2 = random_homogeneous(ctx, dc, rng);
        CHECK(a * b == ((da * db) % 2 ? -1 : 1) * (b * a));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (c + c2) == a * c + a * c2);
    }
}

TEST_CASE("parse_element")
{
    auto ctx = make_context({{"a", 2}, {"e2", 2}, {"x3", 3}});
    Element e = parse_element("3/2*a^2", ctx);
    CHECK(e.terms().size() == 1);
    CHECK(e == Rational(3, 2) * power(Element::generator(ctx, "a"), 2));
    CHECK(parse_element("e2^2 + 3*a^2", ctx).terms().size() == 2);
    CHECK_THROWS_AS(parse_element("x3^2", ctx), ParseError);
    CHECK_THROWS_AS(parse_element("q^2", ctx), ParseError);
    CHECK_THROWS_AS(parse_element("1/0*a", ctx), ParseError);
    CHECK_THROWS_AS(parse_element("3/*a", ctx), ParseError);
    CHECK(parse_element("  -  a*e2 + e2 * a ", ctx).is_zero());
    CHECK(parse_element("x3*a - a*x3", ctx).is_zero());
    CHECK(parse_element("0", ctx).is_zero());
    // canonical printing round-trips
    Element f = parse_element("x3*e2 - 1/3*a^2 + 2*e2*a", ctx);
    CHECK(parse_element(to_string(f), ctx) == f);
}

TEST_CASE("generator validation")
{
    CHECK_THROWS_AS(make_context({{"a", 0}}), ValidationError);
    CHECK_THROWS_AS(make_context({{"a", 2}, {"a", 3}}), ValidationError);
    CHECK_THROWS(make_context({{"2a", 2}}));
    auto ctx = make_context({{"a", 2}, {"x", 3}});
    CHECK_THROWS_AS((Element::generator(ctx, "a") + Element::generator(ctx, "x")).degree(), DegreeError);
}
