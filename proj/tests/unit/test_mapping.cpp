#include "rht/error.hpp"
#include "rht/mapping_spaces.hpp"
#include "rht/samples.hpp"

#include <doctest.h>

#include <random>

using namespace rht;

namespace {

BettiTable betti(const FiniteCdga& A, int n) { return cohomology(A, n); }

std::vector<std::pair<long, int>> pairs(const std::vector<EMFactor>& fs)
{
    std::vector<std::pair<long, int>> out;
    for (const auto& f : fs)
        out.emplace_back(f.coefficient_dim, f.degree);
    return out;
}

using P = std::vector<std::pair<long, int>>;

}  // namespace

TEST_CASE("em_mapping_space")
{
    auto pt = FiniteCdga::unit();
    auto S2 = sphere_manifold(2).model();
    CHECK(pairs(em_mapping_space(betti(pt, 7), 7)) == P{{1, 7}});
    CHECK(pairs(em_mapping_space(betti(S2, 3), 3)) == P{{1, 1}, {1, 3}});
    CHECK(pairs(em_mapping_space(betti(S2, 7), 7)) == P{{1, 5}, {1, 7}});
    CHECK_THROWS_AS(em_mapping_space(betti(S2, 3), 7), ValidationError);
    auto T = tensor(S2, S2);
    CHECK(pairs(em_mapping_space(betti(T, 5), 5)) == P{{1, 1}, {2, 3}, {1, 5}});
}

TEST_CASE("em_mapping_space factor count and total rank")
{
    std::mt19937 rng(8);
    for (int t = 0; t < 20; ++t) {
        FiniteCdga A = random_base(rng);
        for (int n = 1; n <= 9; ++n) {
            auto b = betti(A, n);
            auto fs = em_mapping_space(b, n);
            long count = 0, rank = 0, total = 0;
            for (int q = 1; q <= n; ++q) {
                count += b[static_cast<std::size_t>(n - q)] > 0;
                rank += b[static_cast<std::size_t>(n - q)];
            }
            for (const auto& f : fs)
                total += f.coefficient_dim;
            CHECK(static_cast<long>(fs.size()) == count);
            CHECK(total == rank);
        }
    }
}

TEST_CASE("odd_sphere_mapping")
{
    auto S2 = sphere_manifold(2).model(), S3 = sphere_manifold(3).model();
    CHECK(pairs(odd_sphere_mapping(betti(S2, 7), 7)) == P{{1, 5}, {1, 7}});
    CHECK(pairs(odd_sphere_mapping(betti(FiniteCdga::unit(), 3), 3)) == P{{1, 3}});
    CHECK(pairs(odd_sphere_mapping(betti(S3, 3), 3)) == P{{1, 3}});
    CHECK(em_component_rank(betti(S3, 3), 3) == 1);
    CHECK_THROWS_AS(odd_sphere_mapping(betti(S2, 4), 4), ValidationError);
}

TEST_CASE("sphere_map_null_model examples against hand-built models")
{
    // M = point: the sphere model itself.
    for (int k : {2, 4, 6}) {
        FreeCdga pt = sphere_map_null_model(FiniteCdga::unit(), k);
        REQUIRE(pt.generators().size() == 2);
        CHECK(pt.generators()[0].degree == k);
        CHECK(pt.generators()[1].degree == 2 * k - 1);
        CHECK(pt.d(1) == power(Element::generator(pt.context(), 0), 2));
    }
    CohomologyOptions dense{RankMethod::Dense, false, 0};
    FreeCdga s2 = sphere_map_null_model(sphere_manifold(2).model(), 2);
    FreeCdga hand = FreeCdga::from_strings("hand", {{"u2", 2}, {"v1", 1}, {"v3", 3}}, {{"v3", "u2^2"}});
    CHECK(cohomology(s2, 10).dims == cohomology(hand, 10, dense).dims);
    CHECK(cohomology(s2, 10).dims == std::vector<long>{1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0});
    CHECK(s2.d("v1").is_zero());
    CHECK(to_string(s2.d("v3")) == "u2^2");

    FreeCdga s3 = sphere_map_null_model(sphere_manifold(3).model(), 2);
    CHECK(s3.generators().size() == 2);
    CHECK(cohomology(s3, 10).dims == std::vector<long>{1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("sphere_map_null_model: D^2 = 0 on varied inputs")
{
    std::mt19937 rng(21);
    for (int t = 0; t < 15; ++t) {
        FiniteCdga A = random_base(rng, 2);
        for (int k : {2, 4, 6}) {
            FreeCdga model = sphere_map_null_model(A, k);
            CHECK(check_d_squared(model, 1000).empty());
            CHECK(cohomology(model, 0).dims[0] == 1);
        }
    }
    // A non-formal-looking base: CP2 with a contractible pair in degree 1.
    FiniteCdga B = tensor(named_manifold("CP2").model(), contractible_pair(1));
    FreeCdga m = sphere_map_null_model(B, 2);
    FreeCdga m0 = sphere_map_null_model(named_manifold("CP2").model(), 2);
    CHECK(cohomology(m, 12).dims == cohomology(m0, 12).dims);
}

TEST_CASE("sphere_map_null_model errors")
{
    CHECK_THROWS_AS(sphere_map_null_model(sphere_manifold(2).model(), 3), ValidationError);
    auto s1 = FiniteCdga("S1", {{"t", 1}}, {}, {});
    CHECK_THROWS_AS(sphere_map_null_model(s1, 2), ValidationError);
}

TEST_CASE("sigma_normalize")
{
    auto sphere = std::make_shared<const RelativeModel>(as_relative(sphere_model(2)));

    // sigma = 0 is a fixed point.
    auto S3 = std::make_shared<const RelativeModel>(as_relative(sphere_manifold(3).model()));
    CdgaMorphism zero("0", sphere, S3, {S3->unit()}, {TensorElement{}, TensorElement{}});
    auto n0 = sigma_normalize(zero);
    CHECK(n0.c.empty());
    CHECK(n0.a.empty());
    CHECK(n0.normalized.fiber_image(0).is_zero());
    CHECK(n0.normalized.fiber_image(1).is_zero());

    // sigma(x) = 0, sigma(y) = a cocycle: a is recorded and sigma' vanishes.
    CdgaMorphism sy("sy", sphere, S3, {S3->unit()}, {TensorElement{}, S3->from_base(BasisVector{{1, Rational(2)}})});
    auto n1 = sigma_normalize(sy);
    CHECK(n1.a == BasisVector{{1, Rational(2)}});
    CHECK(n1.normalized.chain_map_violations().empty());

    // sigma(x) exact: sigma(x) = d c, a = sigma(y) - c sigma(x) is a cocycle.
    // Base: C(1) (x) C(3) (x) S^2 style algebra with d u = w in degree 2.
    auto A = std::make_shared<const FiniteCdga>(tensor(contractible_pair(1, "u"), contractible_pair(3, "c")));
    auto rel = std::make_shared<const RelativeModel>(as_relative(*A));
    auto idx = [&](const char* n) { return A->names()->index_of(n) + 1; };
    BasisVector sx{{idx("du"), Rational(1)}};
    BasisVector syv{{idx("c"), Rational(1)}};  // d(sigma y) = dc, while sigma(x)^2 = 0: not a chain map
    CdgaMorphism notchain("bad", sphere, rel, {rel->unit()}, {rel->from_base(sx), rel->from_base(syv)});
    CHECK_FALSE(notchain.chain_map_violations().empty());
    CdgaMorphism ok("ok", sphere, rel, {rel->unit()}, {rel->from_base(sx), TensorElement{}});
    REQUIRE(ok.chain_map_violations().empty());
    auto n2 = sigma_normalize(ok);
    CHECK(A->differentiate(n2.c) == sx);
    CHECK(A->differentiate(n2.a).empty());
    CHECK(n2.normalized.fiber_image(0).is_zero());
    CHECK(n2.normalized.chain_map_violations().empty());

    // Identity-like sigma into a model of S^2 carries the fundamental class.
    auto S2 = std::make_shared<const RelativeModel>(as_relative(sphere_manifold(2).model()));
    CdgaMorphism fund("id", sphere, S2, {S2->unit()}, {S2->from_base(BasisVector{{1, Rational(1)}}), TensorElement{}});
    CHECK_THROWS_AS(sigma_normalize(fund), ComponentObstruction);
}
