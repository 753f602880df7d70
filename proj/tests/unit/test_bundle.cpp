#include "rht/bundle_models.hpp"
#include "rht/error.hpp"
#include "rht/samples.hpp"

#include <doctest.h>

#include <random>

using namespace rht;

namespace {

std::vector<std::string> names(const FreeCdga& f)
{
    std::vector<std::string> out;
    for (const auto& g : f.generators().generators())
        out.push_back(g.name + ":" + std::to_string(g.degree));
    return out;
}

std::vector<std::string> names(const Context& c)
{
    std::vector<std::string> out;
    for (const auto& g : c->generators())
        out.push_back(g.name + ":" + std::to_string(g.degree));
    return out;
}

}  // namespace

TEST_CASE("bso_model")
{
    CHECK(names(bso_model(3).algebra) == std::vector<std::string>{"p1:4"});
    CHECK(names(bso_model(2).algebra) == std::vector<std::string>{"e2:2"});
    CHECK(names(bso_model(4).algebra) == std::vector<std::string>{"p1:4", "e4:4"});
    CHECK(names(bso_model(7).algebra) == std::vector<std::string>{"p1:4", "p2:8", "p3:12"});
    CHECK_THROWS_AS(bso_model(1), ValidationError);
    for (int n = 2; n < 9; ++n)
        for (std::size_t i = 0; i < bso_model(n).algebra.generators().size(); ++i)
            CHECK(bso_model(n).algebra.d(i).is_zero());
}

TEST_CASE("stiefel_model: the four parity cases")
{
    CHECK(names(stiefel_model(3, 3)) == std::vector<std::string>{"x2:7", "ebar5:5"});
    CHECK(names(stiefel_model(2, 3)) == std::vector<std::string>{"x2:7"});
    CHECK(names(stiefel_model(3, 2)) == std::vector<std::string>{"x1:3", "x2:7", "e2:2"});
    CHECK(names(stiefel_model(2, 2)) == std::vector<std::string>{"x1:3", "ebar3:3", "e2:2"});
    CHECK(to_string(stiefel_model(3, 2).d("x1")) == "e2^2");
    CHECK(stiefel_model(3, 2).d("x2").is_zero());
    CHECK_THROWS_AS(stiefel_model(2, 1), ValidationError);
    CHECK_THROWS_AS(stiefel_model(0, 3), ValidationError);
}

TEST_CASE("stiefel cohomology against sphere products")
{
    // Dense oracle: V_2(R^4) ~ S^2 x S^3, V_2(R^5) ~ S^7, V_3(R^5) ~ S^2 x S^7,
    // V_1(R^{k+1}) = S^k.
    CohomologyOptions dense{RankMethod::Dense, false, 0};
    CHECK(cohomology(stiefel_model(2, 2), 12, dense).support() == std::vector<int>{0, 2, 3, 5});
    CHECK(cohomology(stiefel_model(2, 3), 12, dense).support() == std::vector<int>{0, 7});
    CHECK(cohomology(stiefel_model(3, 2), 12, dense).support() == std::vector<int>{0, 2, 7, 9});
    for (int k = 2; k <= 7; ++k)
        CHECK(cohomology(stiefel_model(1, k), 16).support() == std::vector<int>{0, k});
    // Total Betti sum is 2^(number of odd generators) minus the pairing for k even.
    for (int m = 1; m <= 7; ++m)
        for (int k = 2; k <= 7; ++k) {
            FreeCdga v = stiefel_model(m, k);
            int top = 0;
            long odd = 0;
            for (const auto& g : v.generators().generators()) {
                top += g.degree;
                odd += g.odd();
            }
            auto b = cohomology(v, top + 1);
            long sum = 0;
            for (long x : b.dims)
                sum += x;
            CHECK(sum == (1L << (odd - (k % 2 == 0 ? 1 : 0))) * (k % 2 == 0 ? 2 : 1));
        }
}

TEST_CASE("framed_bundle_model differentials")
{
    auto cp2 = named_manifold("CP2");
    RelativeModel f = framed_bundle_model(cp2, 2);
    CHECK(names(f.fiber()) == std::vector<std::string>{"x1:3", "x2:7", "ebar5:5", "e2:2"});
    CHECK(f.to_string(f.d(0)) == "3*a2 + e2^2");
    CHECK(f.d(1).is_zero());
    RelativeModel g = framed_bundle_model(cp2, 3);
    CHECK(names(g.fiber()) == std::vector<std::string>{"x2:7", "x3:11"});
    auto s4 = named_manifold("S4");
    CHECK(framed_bundle_model(s4, 5).d(0).is_zero());
}

TEST_CASE("unreduced model and its reduction")
{
    auto cp2 = named_manifold("CP2");
    auto u = unreduced_framed_model(cp2, 2);
    CHECK(names(u.unreduced->fiber()) == std::vector<std::string>{"x1:3", "x2:7", "ebar5:5", "e2:2"});
    auto v = unreduced_framed_model(cp2, 3);
    CHECK(names(v.unreduced->fiber()) == std::vector<std::string>{"x1:3", "x2:7", "x3:11", "b1:4"});
    CHECK(v.unreduced->to_string(v.unreduced->d(0)) == "3*a2 - b1");
    CHECK(v.reduction.chain_map_violations().empty());
    CHECK(is_quasi_iso(v.reduction, 20).quasi_iso);
    auto w = unreduced_framed_model(named_manifold("S2xS3"), 5, 16);
    CHECK(names(w.unreduced->fiber()) ==
          std::vector<std::string>{"x1:3", "x2:7", "x3:11", "x4:15", "ebar9:9", "b1:4", "b2:8"});
    auto z = unreduced_framed_model(named_manifold("S4"), 6);
    CHECK(names(z.unreduced->fiber()) ==
          std::vector<std::string>{"x1:3", "x2:7", "x3:11", "x4:15", "ebar9:9", "e6:6", "b1:4", "b2:8"});
    CHECK(z.unreduced->to_string(z.unreduced->d(2)) == "e6^2");
    CHECK(is_quasi_iso(z.reduction, 20).quasi_iso);
}

TEST_CASE("reduction is a chain map and quasi-iso with random closed Pontryagin inputs")
{
    std::mt19937 rng(99);
    for (int t = 0; t < 8; ++t) {
        auto A = std::make_shared<const FiniteCdga>(random_base(rng, 2));
        int m = std::max(4, A->top_degree());
        std::vector<PontryaginClass> p;
        for (int i = 1; 4 * i <= m; ++i)
            p.push_back({i, random_cocycle(*A, 4 * i, rng)});
        ManifoldModel M("random", m, A, p);
        for (int k = 2; k <= 5; ++k) {
            auto u = unreduced_framed_model(M, k);
            CHECK(check_d_squared(*u.unreduced, 24).empty());
            CHECK(is_quasi_iso(u.reduction, 14).quasi_iso);
        }
    }
}

TEST_CASE("borel_assoc_model")
{
    // S^3 -> S^7 -> S^4: base S^4, one odd generator killing the fundamental class.
    auto S4 = std::make_shared<const RelativeModel>(as_relative(sphere_manifold(4).model()));
    auto bso = bso_model(3).algebra;
    auto src = std::make_shared<const RelativeModel>(as_relative(bso));
    CdgaMorphism phi("phi", src, S4, {S4->unit()}, {S4->from_base(BasisVector{{1, Rational(1)}})});
    RelativeModel hopf = borel_assoc_model(phi, {}, {{"x", 3}}, {Element::generator(bso.context(), "p1")},
                                           {Element()});
    CHECK(cohomology(hopf, 10).support() == std::vector<int>{0, 7});

    // S^2 = SO(3)/SO(2) over a point: D(sp1) = -Bnu*(p1) = -e2^2.
    auto Q = std::make_shared<const RelativeModel>(as_relative(FiniteCdga::unit()));
    CdgaMorphism zero("0", src, Q, {Q->unit()}, {TensorElement{}});
    auto vk = make_context({{"e2", 2}});
    RelativeModel s2 = borel_assoc_model(zero, {{"e2", 2}}, {{"x", 3}}, {Element::generator(bso.context(), "p1")},
                                         {power(Element::generator(vk, "e2"), 2)});
    CHECK(s2.to_string(s2.d(1)) == "-e2^2");
    CHECK(cohomology(s2, 8).dims == std::vector<long>{1, 0, 1, 0, 0, 0, 0, 0, 0});
    CHECK_THROWS_AS(borel_assoc_model(zero, {{"e2", 2}}, {{"x", 5}}, {Element::generator(bso.context(), "p1")},
                                      {power(Element::generator(vk, "e2"), 2)}),
                    DegreeError);
}

TEST_CASE("is_rationally_trivial")
{
    auto cp2 = named_manifold("CP2");
    auto v2 = is_rationally_trivial(cp2, 2);
    CHECK(v2.kind == TrivialityVerdict::Kind::NotEstablished);
    CHECK(v2.obstructions == std::vector<int>{1});
    CHECK_FALSE(v2.certificate.has_value());
    CHECK(is_rationally_trivial(cp2, 3).kind == TrivialityVerdict::Kind::Trivial);
    CHECK(pontryagin_threshold(2) == 1);
    CHECK(pontryagin_threshold(3) == 2);
    CHECK(pontryagin_threshold(4) == 2);

    auto s2 = is_rationally_trivial(named_manifold("S2"), 3);
    REQUIRE(s2.certificate.has_value());
    CHECK(s2.certificate->passed);
    CHECK(s2.certificate->total == s2.certificate->expected);

    // An exact but nonzero p_1 still gives a trivial bundle.
    auto A = std::make_shared<const FiniteCdga>(tensor(sphere_manifold(4).model(), contractible_pair(3)));
    auto dc = A->names()->index_of("dc") + 1;
    ManifoldModel M("S4c", 4, A, {{1, BasisVector{{dc, Rational(2)}}}});
    auto v = is_rationally_trivial(M, 2);
    CHECK(v.kind == TrivialityVerdict::Kind::Trivial);
    REQUIRE(v.certificate.has_value());
    CHECK(v.certificate->passed);

    // A nonzero class below the threshold does not obstruct.
    auto s4p = sphere_manifold(4).with_pontryagin({{1, BasisVector{{1, Rational(5)}}}});
    CHECK(is_rationally_trivial(s4p, 3).kind == TrivialityVerdict::Kind::Trivial);
    CHECK(is_rationally_trivial(s4p, 2).kind == TrivialityVerdict::Kind::NotEstablished);
}
