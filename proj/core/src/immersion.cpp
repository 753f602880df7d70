#include "rht/immersion.hpp"

#include "rht/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace rht {

Connectivity connectivity_verdict(int m, int k)
{
    if (k < 2)
        throw ValidationError("codimension k must be at least 2");
    return k >= m + 1 ? Connectivity::Connected : Connectivity::ComponentsIndexed;
}

int pole_order(const RationalForm& r)
{
    std::vector<Integer> p = r.numerator;
    int multiplicity = 0;
    for (;;) {
        Integer at_one = 0;
        for (const auto& c : p)
            at_one += c;
        if (at_one != 0 || p.empty())
            break;
        // p(t) = (1 - t) q(t) with q_i = sum_{j <= i} p_j
        std::vector<Integer> q(p.size() - 1);
        Integer acc = 0;
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            q[i] = (acc += p[i]);
        p = std::move(q);
        ++multiplicity;
    }
    return static_cast<int>(r.denominator.size()) - multiplicity;
}

std::optional<RationalForm> rational_cohomology_series(const FreeCdga& model, int max_cutoff)
{
    std::vector<int> even;
    int top_gen = 1;
    for (const auto& g : model.generators().generators()) {
        if (!g.odd())
            even.push_back(g.degree);
        top_gen = std::max(top_gen, g.degree);
    }
    const int window = std::max(8, 2 * top_gen);
    for (int cutoff = std::max(24, 3 * window); cutoff <= max_cutoff; cutoff *= 2) {
        auto h = PoincareSeries::from_betti(cohomology(model, cutoff));
        auto num = multiply_by_denominator(h, even);
        const auto& c = num.coefficients();
        if (!std::all_of(c.end() - window, c.end(), [](const Integer& x) { return x == 0; }))
            continue;
        std::vector<Integer> numerator(c.begin(), c.end() - window);
        while (numerator.size() > 1 && numerator.back() == 0)
            numerator.pop_back();
        return RationalForm{std::move(numerator), even};
    }
    return std::nullopt;
}

namespace {

std::vector<EMFactor> merge(std::vector<EMFactor> fs)
{
    std::map<int, long> by_degree;
    for (const auto& f : fs)
        by_degree[f.degree] += f.coefficient_dim;
    std::vector<EMFactor> out;
    for (const auto& [q, b] : by_degree)
        out.push_back({b, q});
    return out;
}

PoincareSeries em_part(const std::vector<EMFactor>& fs, int top)
{
    PoincareSeries s = PoincareSeries::one(top);
    for (const auto& f : fs)
        s = series_product(s, em_series(f.degree, f.coefficient_dim, top));
    return s;
}

}  // namespace

ImmersionReport immersion_components(const ManifoldModel& manifold, int k, int max_degree)
{
    if (max_degree < 0)
        throw ValidationError("max degree must be nonnegative");
    const int m = manifold.dimension();
    ImmersionReport r;
    r.manifold = manifold.name();
    r.dimension = m;
    r.k = k;
    r.max_degree = max_degree;
    r.connectivity = connectivity_verdict(m, k);
    FreeCdga fiber = stiefel_model(m, k);

    r.hypotheses.push_back({"simply-connected", "H^1(M; Q) = 0", true});
    const int t = pontryagin_threshold(k);
    std::string failing;
    for (int i = t; 4 * i <= m; ++i)
        if (!is_exact(manifold.model(), manifold.pontryagin(i)))
            failing += (failing.empty() ? "" : ", ") + ("p" + std::to_string(i));
    r.hypotheses.push_back({"pontryagin-vanishing",
                            "[p_i(M)] = 0 for i >= " + std::to_string(t) +
                                (failing.empty() ? "" : " (fails for " + failing + ")"),
                            failing.empty()});
    r.hypotheses_passed = failing.empty();
    if (!r.hypotheses_passed)
        return r;

    int top_gen = 0;
    for (const auto& g : fiber.generators().generators())
        top_gen = std::max(top_gen, g.degree);
    BettiTable betti = cohomology(manifold.model(), std::max(top_gen, k));

    std::optional<std::size_t> paired;
    if (k % 2 == 0) {
        paired = fiber.context()->index_of("x" + std::to_string(k / 2));
        const bool null_ok = betti[static_cast<std::size_t>(k)] == 0 || k >= m + 1;
        r.hypotheses.push_back({"null-component", "H^" + std::to_string(k) + "(M; Q) = 0 or k >= m+1", null_ok});
        SphereFactor sf;
        sf.k = k;
        if (null_ok) {
            sf.status = SphereStatus::ResolvedNull;
            sf.model = sphere_map_null_model(manifold.model(), k);
            sf.rational = rational_cohomology_series(*sf.model, std::max(96, 2 * max_degree));
        }
        r.sphere = std::move(sf);
    }

    std::vector<EMFactor> fs;
    for (std::size_t i = 0; i < fiber.generators().size(); ++i) {
        const auto& g = fiber.generators()[i];
        if (!g.odd() || i == paired)
            continue;
        auto part = em_mapping_space(betti, g.degree);
        fs.insert(fs.end(), part.begin(), part.end());
    }
    r.em_factors = merge(std::move(fs));

    PoincareSeries series = em_part(r.em_factors, max_degree);
    r.scope = SeriesScope::Total;
    if (r.sphere) {
        if (r.sphere->status == SphereStatus::Symbolic)
            r.scope = SeriesScope::EmPart;
        else
            series = series_product(series, PoincareSeries::from_betti(cohomology(*r.sphere->model, max_degree)));
    }
    r.series = std::move(series);
    if (r.symbolic() || (r.sphere && !r.sphere->rational))
        r.growth = Growth{Growth::Kind::Symbolic, 0};
    else
        r.growth = growth_degree(r);
    return r;
}

Growth growth_degree(const ImmersionReport& report)
{
    if (!report.hypotheses_passed)
        throw ValidationError("no description: the Pontryagin hypothesis failed");
    if (report.symbolic() || (report.sphere && !report.sphere->rational))
        throw ValidationError("growth of a symbolic sphere factor is not computed");
    long even = 0;
    for (const auto& f : report.em_factors)
        if (f.degree % 2 == 0)
            even += f.coefficient_dim;
    if (report.sphere)
        even += pole_order(*report.sphere->rational);
    if (even == 0)
        return {Growth::Kind::Finite, 0};
    return {Growth::Kind::Polynomial, static_cast<int>(even - 1)};
}

PoincareSeries description_series(const ImmersionReport& report, int top)
{
    PoincareSeries s = em_part(report.em_factors, top);
    if (report.sphere) {
        if (!report.sphere->rational)
            throw ValidationError("sphere factor series is not identified");
        s = series_product(
            s, rational_series(report.sphere->rational->numerator, report.sphere->rational->denominator, top));
    }
    return s;
}

GrowthCheck check_growth(const ImmersionReport& report, int top)
{
    Growth g = growth_degree(report);
    PoincareSeries s = description_series(report, top);
    GrowthCheck out;
    if (g.kind == Growth::Kind::Finite) {
        // Finite total dimension: everything vanishes past the sum of the factor degrees.
        int bound = 0;
        for (const auto& f : report.em_factors)
            bound += f.degree * static_cast<int>(f.coefficient_dim);
        if (report.sphere)
            bound += static_cast<int>(report.sphere->rational->numerator.size());
        out.bounded = out.unbounded = true;
        for (int j = bound + 1; j <= top; ++j)
            if (s[static_cast<std::size_t>(j)] != 0)
                out.bounded = false;
        return out;
    }
    auto window_max = [&](int from, int to, int power) {
        double best = 0;
        for (int j = from + 1; j <= to; ++j)
            best = std::max(best, s[static_cast<std::size_t>(j)].get_d() / std::pow(j, power));
        return best;
    };
    const int d = g.degree;
    const int mid = top / 2, low = top / 4;
    out.bounded = window_max(mid, top, d) <= 1.25 * window_max(low, mid, d);
    out.unbounded = window_max(mid, top, d - 1) >= 1.5 * window_max(low, mid, d - 1);
    return out;
}

std::string to_string(Connectivity c)
{
    return c == Connectivity::Connected ? "connected" : "components-indexed";
}

std::string to_string(SphereStatus s) { return s == SphereStatus::ResolvedNull ? "resolved-null" : "symbolic"; }

std::string to_string(Growth::Kind g)
{
    switch (g) {
    case Growth::Kind::Finite:
        return "finite";
    case Growth::Kind::Polynomial:
        return "polynomial";
    default:
        return "symbolic";
    }
}

std::string to_string(SeriesScope s) { return s == SeriesScope::Total ? "total" : "em-part"; }

}  // namespace rht
