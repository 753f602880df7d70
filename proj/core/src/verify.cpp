#include "rht/verify.hpp"

#include "rht/error.hpp"
#include "rht/immersion.hpp"
#include "rht/samples.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

namespace rht {

namespace {

using Check = std::function<std::string()>;  // empty string = pass

std::string join(const std::vector<long>& v)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out << (i ? " " : "") << v[i];
    return out.str();
}

std::string expect_betti(const BettiTable& got, const std::vector<long>& want)
{
    std::vector<long> head(got.dims.begin(), got.dims.begin() + static_cast<long>(std::min(got.dims.size(), want.size())));
    if (head == want)
        return {};
    return "betti " + join(head) + ", expected " + join(want);
}

std::vector<std::pair<std::string, Check>> core_checks(unsigned seed)
{
    std::vector<std::pair<std::string, Check>> out;
    out.emplace_back("graded commutativity", [] {
        auto ctx = make_context({{"x", 3}, {"y", 5}, {"a", 2}});
        auto x = Element::generator(ctx, "x"), y = Element::generator(ctx, "y"), a = Element::generator(ctx, "a");
        if (x * y != -(y * x) || a * x != x * a || !(x * x).is_zero())
            return std::string("sign rule violated");
        return std::string();
    });
    out.emplace_back("basis counts", [] {
        // L(a2, b3): dimension in degree n = number of j with 2j = n or 2j + 3 = n.
        auto ctx = make_context({{"a", 2}, {"b", 3}});
        for (int n = 0; n <= 30; ++n) {
            std::size_t want = (n % 2 == 0 ? 1 : 0) + (n >= 3 && (n - 3) % 2 == 0 ? 1 : 0);
            if (basis_of_degree(*ctx, n).size() != want)
                return "degree " + std::to_string(n);
        }
        return std::string();
    });
    out.emplace_back("sparse and dense rank agree", [seed] {
        std::mt19937 rng(seed);
        std::uniform_int_distribution<int> dim(1, 12), val(-3, 3), fill(0, 2);
        for (int t = 0; t < 200; ++t) {
            SparseMatrix m{static_cast<std::size_t>(dim(rng)), {}};
            int cols = dim(rng);
            for (int c = 0; c < cols; ++c) {
                SparseVector v;
                for (std::size_t r = 0; r < m.rows; ++r)
                    if (fill(rng) == 0)
                        if (int q = val(rng))
                            v[r] = q;
                m.columns.push_back(v);
            }
            if (sparse_rank(m) != dense_rank(m))
                return "trial " + std::to_string(t);
        }
        return std::string();
    });
    out.emplace_back("S2 x S2 cohomology", [] {
        auto T = tensor(sphere_manifold(2).model(), sphere_manifold(2).model());
        return expect_betti(cohomology(T, 6), {1, 0, 2, 0, 1, 0, 0});
    });
    out.emplace_back("Kunneth on random bases", [seed] {
        std::mt19937 rng(seed + 7);
        for (int t = 0; t < 10; ++t) {
            FiniteCdga a = random_base(rng, 2), b = random_base(rng, 1);
            int top = a.top_degree() + b.top_degree() + 1;
            auto want = convolve(cohomology(a, top).dims, cohomology(b, top).dims, top);
            if (cohomology(tensor(a, b), top).dims != want)
                return "trial " + std::to_string(t);
        }
        return std::string();
    });
    return out;
}

std::vector<std::pair<std::string, Check>> model_checks()
{
    std::vector<std::pair<std::string, Check>> out;
    out.emplace_back("V_2(R^5) ~ S^7", [] { return expect_betti(cohomology(stiefel_model(2, 3), 8), {1, 0, 0, 0, 0, 0, 0, 1, 0}); });
    out.emplace_back("V_2(R^4) ~ S^2 x S^3", [] { return expect_betti(cohomology(stiefel_model(2, 2), 6), {1, 0, 1, 1, 0, 1, 0}); });
    out.emplace_back("V_1(R^3) = S^2", [] { return expect_betti(cohomology(stiefel_model(1, 2), 4), {1, 0, 1, 0, 0}); });
    out.emplace_back("reduction is a quasi-isomorphism", [] {
        for (const char* name : {"CP2", "S4", "S2xS3"})
            for (int k = 2; k <= 5; ++k) {
                auto u = unreduced_framed_model(named_manifold(name), k);
                if (!is_quasi_iso(u.reduction, 16).quasi_iso)
                    return std::string(name) + ", k=" + std::to_string(k);
            }
        return std::string();
    });
    out.emplace_back("Kunneth certificate", [] {
        for (const char* name : {"S2", "S4", "S2xS3"})
            for (int k = 2; k <= 6; ++k) {
                auto v = is_rationally_trivial(named_manifold(name), k, 16);
                if (v.kind != TrivialityVerdict::Kind::Trivial)
                    return std::string(name) + ", k=" + std::to_string(k);
            }
        return std::string();
    });
    out.emplace_back("CP2 obstruction at k=2 only", [] {
        auto cp2 = named_manifold("CP2");
        if (is_rationally_trivial(cp2, 2).kind != TrivialityVerdict::Kind::NotEstablished)
            return std::string("k=2 should be obstructed by p1");
        if (is_rationally_trivial(cp2, 3).kind != TrivialityVerdict::Kind::Trivial)
            return std::string("k=3 should be trivial");
        return std::string();
    });
    out.emplace_back("Map(S2, S2; 0) model", [] {
        return expect_betti(cohomology(sphere_map_null_model(sphere_manifold(2).model(), 2), 8),
                            {1, 1, 1, 1, 0, 0, 0, 0, 0});
    });
    return out;
}

std::vector<std::pair<std::string, Check>> immersion_checks()
{
    std::vector<std::pair<std::string, Check>> out;
    out.emplace_back("S2, k=3", [] {
        auto r = immersion_components(named_manifold("S2"), 3, 15);
        if (r.em_factors != std::vector<EMFactor>{{1, 5}, {1, 7}})
            return std::string("factors");
        PoincareSeries want = series_product(em_series(5, 1, 15), em_series(7, 1, 15));
        if (r.series != want || r.growth != Growth{Growth::Kind::Finite, 0})
            return std::string("series or growth");
        return std::string();
    });
    out.emplace_back("S2, k=2 is symbolic", [] {
        auto r = immersion_components(named_manifold("S2"), 2, 10);
        if (!r.symbolic() || r.em_factors != std::vector<EMFactor>{{1, 1}, {1, 3}} || r.scope != SeriesScope::EmPart)
            return std::string("unexpected description");
        return std::string();
    });
    out.emplace_back("growth bounds up to degree 200", [] {
        for (const char* name : {"S2", "S3", "S4", "CP2", "S2xS3"})
            for (int k = 2; k <= 7; ++k) {
                auto r = immersion_components(named_manifold(name), k, 20);
                if (!r.hypotheses_passed || !r.growth || r.growth->kind == Growth::Kind::Symbolic)
                    continue;
                if (!check_growth(r).passed())
                    return std::string(name) + ", k=" + std::to_string(k);
            }
        return std::string();
    });
    return out;
}

}  // namespace

std::vector<VerifyResult> run_verify(std::string_view suite, unsigned seed)
{
    std::vector<std::pair<std::string, std::vector<std::pair<std::string, Check>>>> suites;
    const bool all = suite == "all";
    if (all || suite == "core")
        suites.emplace_back("core", core_checks(seed));
    if (all || suite == "models")
        suites.emplace_back("models", model_checks());
    if (all || suite == "immersion")
        suites.emplace_back("immersion", immersion_checks());
    if (suites.empty())
        throw ValidationError("unknown suite '" + std::string(suite) + "' (expected core, models, immersion or all)");

    std::vector<VerifyResult> results;
    for (auto& [name, checks] : suites)
        for (auto& [label, check] : checks) {
            VerifyResult r{name, label, false, {}, 0};
            auto start = std::chrono::steady_clock::now();
            try {
                r.detail = check();
                r.passed = r.detail.empty();
            } catch (const std::exception& e) {
                r.detail = e.what();
            }
            r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            results.push_back(std::move(r));
        }
    return results;
}

}  // namespace rht
