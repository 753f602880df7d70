#include "rht/error.hpp"
#include "rht/immersion.hpp"
#include "rht/report_io.hpp"
#include "rht/samples.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace rht;

namespace {

std::vector<std::pair<long, int>> pairs(const std::vector<EMFactor>& fs)
{
    std::vector<std::pair<long, int>> out;
    for (const auto& f : fs)
        out.emplace_back(f.coefficient_dim, f.degree);
    return out;
}

using P = std::vector<std::pair<long, int>>;

// Free CDGA with zero differential on the given degrees (an EM product).
FreeCdga em_model(const std::vector<EMFactor>& fs)
{
    std::vector<Generator> gens;
    for (const auto& f : fs)
        for (long j = 0; j < f.coefficient_dim; ++j)
            gens.push_back({"g" + std::to_string(gens.size()), f.degree});
    return FreeCdga::from_strings("em", gens, {});
}

}  // namespace

TEST_CASE("connectivity_verdict")
{
    CHECK(connectivity_verdict(2, 3) == Connectivity::Connected);
    CHECK(connectivity_verdict(4, 2) == Connectivity::ComponentsIndexed);
    CHECK(connectivity_verdict(2, 2) == Connectivity::ComponentsIndexed);
    CHECK_THROWS_AS(connectivity_verdict(2, 1), ValidationError);
}

TEST_CASE("S2, k=3")
{
    auto r = immersion_components(named_manifold("S2"), 3, 15);
    CHECK(r.hypotheses_passed);
    CHECK(pairs(r.em_factors) == P{{1, 5}, {1, 7}});
    CHECK_FALSE(r.sphere.has_value());
    REQUIRE(r.series.has_value());
    CHECK(*r.series == series_product(em_series(5, 1, 15), em_series(7, 1, 15)));
    CHECK(r.growth == Growth{Growth::Kind::Finite, 0});
    CHECK(r.connectivity == Connectivity::Connected);
}

TEST_CASE("S2, k=2 has a symbolic sphere factor")
{
    auto r = immersion_components(named_manifold("S2"), 2, 10);
    CHECK(pairs(r.em_factors) == P{{1, 1}, {1, 3}});
    REQUIRE(r.sphere.has_value());
    CHECK(r.sphere->status == SphereStatus::Symbolic);
    CHECK_FALSE(r.sphere->model.has_value());
    CHECK(r.scope == SeriesScope::EmPart);
    CHECK(*r.series == series_product(em_series(1, 1, 10), em_series(3, 1, 10)));
    CHECK(r.growth->kind == Growth::Kind::Symbolic);
    CHECK_THROWS_AS(growth_degree(r), ValidationError);
}

TEST_CASE("S3, k=2: resolved null sphere factor, cross-checked against a tensor-product oracle")
{
    auto M = named_manifold("S3");
    auto r = immersion_components(M, 2, 16);
    REQUIRE(r.sphere.has_value());
    CHECK(r.sphere->status == SphereStatus::ResolvedNull);
    CHECK(pairs(r.em_factors) == P{{1, 4}, {1, 7}});
    FreeCdga oracle = tensor(*r.sphere->model, em_model(r.em_factors));
    auto dense = cohomology(oracle, 16, {RankMethod::Dense, false, 0});
    CHECK(*r.series == PoincareSeries::from_betti(dense));
    CHECK(r.growth == Growth{Growth::Kind::Polynomial, 0});
}

TEST_CASE("hypothesis failure returns an empty description")
{
    auto r = immersion_components(named_manifold("CP2"), 2, 10);
    CHECK_FALSE(r.hypotheses_passed);
    CHECK(r.em_factors.empty());
    CHECK_FALSE(r.series.has_value());
    CHECK_FALSE(r.growth.has_value());
    CHECK_THROWS_AS(growth_degree(r), ValidationError);
}

TEST_CASE("growth_degree examples")
{
    ImmersionReport r;
    r.hypotheses_passed = true;
    r.em_factors = {{1, 5}, {1, 7}};
    CHECK(growth_degree(r) == Growth{Growth::Kind::Finite, 0});
    r.em_factors = {{1, 2}};
    CHECK(growth_degree(r) == Growth{Growth::Kind::Polynomial, 0});
    r.em_factors = {{2, 2}};
    CHECK(growth_degree(r) == Growth{Growth::Kind::Polynomial, 1});
    auto s = description_series(r, 200);
    for (int j = 0; j <= 200; j += 2)
        CHECK(s[static_cast<std::size_t>(j)] == j / 2 + 1);
    CHECK(check_growth(r).passed());
}

TEST_CASE("pole order and rational identification")
{
    CHECK(pole_order({{Integer(1)}, {2, 2}}) == 2);
    CHECK(pole_order({{Integer(1), Integer(0), Integer(-1)}, {2}}) == 0);  // (1-t^2)/(1-t^2)
    FreeCdga s2 = sphere_model(2);
    auto rf = rational_cohomology_series(s2);
    REQUIRE(rf.has_value());
    CHECK(pole_order(*rf) == 0);
    FreeCdga poly = FreeCdga::from_strings("p", {{"a", 2}, {"b", 4}, {"x", 3}}, {});
    auto rp = rational_cohomology_series(poly);
    REQUIRE(rp.has_value());
    CHECK(pole_order(*rp) == 2);
}

TEST_CASE("sweep: series equal the factor convolution in any order, growth checks pass")
{
    std::mt19937 rng(4);
    for (const char* name : {"S2", "S3", "S4", "CP2", "S2xS3"})
        for (int k = 2; k <= 7; ++k) {
            auto r = immersion_components(named_manifold(name), k, 24);
            if (!r.hypotheses_passed)
                continue;
            CHECK(r.connectivity == connectivity_verdict(r.dimension, k));
            std::vector<PoincareSeries> parts;
            for (const auto& f : r.em_factors)
                parts.push_back(em_series(f.degree, f.coefficient_dim, 24));
            if (r.sphere && r.sphere->model)
                parts.push_back(PoincareSeries::from_betti(cohomology(*r.sphere->model, 24)));
            for (int t = 0; t < 4; ++t) {
                std::shuffle(parts.begin(), parts.end(), rng);
                PoincareSeries s = PoincareSeries::one(24);
                for (const auto& p : parts)
                    s = series_product(s, p);
                CHECK(s == *r.series);
            }
            if (r.growth->kind != Growth::Kind::Symbolic) {
                CHECK(description_series(r, 24) == *r.series);
                CAPTURE(name);
                CAPTURE(k);
                CHECK(check_growth(r).passed());
            }
        }
}

TEST_CASE("k odd with zero Pontryagin input: series matches the section-space Kunneth data")
{
    // With the bundle trivial, the EM factors come from the odd fiber generators;
    // the section space splits as a product indexed by the fiber's homotopy.
    for (const char* name : {"S2", "S4", "S2xS3"})
        for (int k : {3, 5, 7}) {
            auto M = named_manifold(name);
            auto v = is_rationally_trivial(M, k, 20);
            REQUIRE(v.certificate.has_value());
            CHECK(v.certificate->passed);
            auto r = immersion_components(M, k, 20);
            FreeCdga fiber = stiefel_model(M.dimension(), k);
            auto b = cohomology(M.model(), 40);
            std::vector<EMFactor> direct;
            for (const auto& g : fiber.generators().generators())
                for (const auto& f : em_mapping_space(b, g.degree))
                    direct.push_back(f);
            FreeCdga oracle = em_model(direct);
            CHECK(*r.series == PoincareSeries::from_betti(cohomology(oracle, 20, {RankMethod::Dense, false, 0})));
        }
}

TEST_CASE("reports round-trip through JSON")
{
    for (const char* name : {"S2", "S3", "CP2", "S2xS3"})
        for (int k = 2; k <= 5; ++k) {
            auto r = immersion_components(named_manifold(name), k, 18);
            std::string text = serialize(r);
            auto back = parse_report(text);
            CHECK(back == r);
            CHECK(serialize(back) == text);
        }
    // Coefficients beyond 64 bits are written as strings and read back.
    ImmersionReport big;
    big.manifold = "X";
    big.hypotheses_passed = true;
    big.em_factors = {{40, 2}};
    big.series = em_series(2, 40, 200);
    auto back = parse_report(serialize(big));
    CHECK(back == big);
    Integer top;
    mpz_bin_uiui(top.get_mpz_t(), 139, 39);
    CHECK(serialize(big).find("\"" + top.get_str() + "\"") != std::string::npos);
}

TEST_CASE("report field order is stable")
{
    auto text = serialize(immersion_components(named_manifold("S2"), 3, 6));
    std::vector<std::string> keys{"\"manifold\"", "\"dimension\"", "\"k\"",      "\"max_degree\"", "\"hypotheses\"",
                                  "\"connectivity\"", "\"factors\"", "\"series\"", "\"growth\""};
    std::size_t pos = 0;
    for (const auto& k : keys) {
        auto at = text.find(k, pos);
        CHECK(at != std::string::npos);
        pos = at;
    }
}
