#include "rht/mapping_spaces.hpp"

#include "rht/error.hpp"

#include <map>

namespace rht {

std::vector<EMFactor> em_mapping_space(const BettiTable& betti, int n)
{
    if (n < 1)
        throw ValidationError("Eilenberg-MacLane degree must be positive");
    if (betti.cutoff < n - 1 || static_cast<int>(betti.dims.size()) < n)
        throw ValidationError("Betti numbers of M are needed up to degree " + std::to_string(n - 1));
    std::vector<EMFactor> out;
    for (int q = 1; q <= n; ++q)
        if (long b = betti.dims[static_cast<std::size_t>(n - q)]; b > 0)
            out.push_back({b, q});
    return out;
}

long em_component_rank(const BettiTable& betti, int n)
{
    if (betti.cutoff < n)
        throw ValidationError("Betti numbers of M are needed up to degree " + std::to_string(n));
    return betti.dims.at(static_cast<std::size_t>(n));
}

std::vector<EMFactor> odd_sphere_mapping(const BettiTable& betti, int k)
{
    if (k % 2 == 0 || k < 3)
        throw ValidationError("odd_sphere_mapping needs an odd k >= 3 (got " + std::to_string(k) + ")");
    return em_mapping_space(betti, k);
}

FreeCdga sphere_model(int k)
{
    if (k < 2 || k % 2 != 0)
        throw ValidationError("sphere model needs an even k >= 2");
    return FreeCdga::from_strings("S^" + std::to_string(k), {{"x", k}, {"y", 2 * k - 1}}, {{"y", "x^2"}});
}

namespace {

// Raw generator r = 2u (x-type) or 2u+1 (y-type) for basis element a_u.
struct Raw {
    int degree = 0;
    std::optional<std::size_t> slot;  // index in the positive-degree context
};

Element substitute(const Element& e, const std::vector<Element>& images, const Context& ctx)
{
    Element out(ctx);
    for (const auto& [m, c] : e.terms()) {
        Element term = Element::scalar(ctx, c);
        for (std::size_t g = 0; g < m.exponents().size() && !term.is_zero(); ++g)
            for (int p = 0; p < m.exponent(g); ++p)
                term = term * images[g];
        out += term;
    }
    return out;
}

}  // namespace

FreeCdga sphere_map_null_model(const FiniteCdga& A, int k)
{
    if (k < 2 || k % 2 != 0)
        throw ValidationError("sphere_map_null_model needs an even k >= 2; odd spheres are Eilenberg-MacLane");
    if (cohomology(A, 1).dims[1] != 0)
        throw ValidationError("model '" + A.label() + "' is not simply connected");

    const std::size_t n = A.dimension();
    std::vector<Raw> raw(2 * n);
    std::map<std::string, int> name_count;
    auto base_name = [&](std::size_t r) { return std::string(r % 2 == 0 ? "u" : "v") + std::to_string(raw[r].degree); };
    for (std::size_t u = 0; u < n; ++u) {
        raw[2 * u].degree = k - A.degree(u);
        raw[2 * u + 1].degree = 2 * k - 1 - A.degree(u);
    }
    for (std::size_t r = 0; r < 2 * n; ++r)
        if (raw[r].degree > 0)
            ++name_count[base_name(r)];
    std::vector<Generator> gens;
    std::vector<std::size_t> raw_of_slot;
    for (std::size_t r = 0; r < 2 * n; ++r) {
        if (raw[r].degree <= 0)
            continue;
        std::string name = base_name(r);
        if (name_count[name] > 1)
            name += "_" + (r / 2 == 0 ? std::string("1") : A.basis(r / 2).name);
        raw[r].slot = gens.size();
        raw_of_slot.push_back(r);
        gens.push_back({name, raw[r].degree});
    }
    auto ctx = make_context(gens);
    auto gen = [&](std::size_t r) {
        return raw[r].slot ? Element::generator(ctx, *raw[r].slot) : Element::zero(ctx);
    };

    // Matrix of d_A (D[u][v] = coefficient of a_u in d a_v) and structure constants.
    auto D = [&](std::size_t u, std::size_t v) {
        auto it = A.d(v).find(u);
        return it == A.d(v).end() ? Rational(0) : it->second;
    };
    auto sgn = [](long e) { return e % 2 == 0 ? Rational(1) : Rational(-1); };

    std::vector<Element> raw_diff(2 * n, Element::zero(ctx));
    for (std::size_t u = 0; u < n; ++u) {
        if (raw[2 * u].degree < 0 && raw[2 * u + 1].degree < 0)
            continue;
        Element dx(ctx), dy(ctx);
        for (std::size_t v = 0; v < n; ++v) {
            Rational q = D(u, v);
            if (q == 0)
                continue;
            dx -= q * gen(2 * v);
            dy -= q * gen(2 * v + 1);
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (!raw[2 * v].slot)
                continue;
            for (std::size_t w = 0; w < n; ++w) {
                if (!raw[2 * w].slot)
                    continue;
                auto it = A.product(v, w).find(u);
                if (it == A.product(v, w).end())
                    continue;
                dy += (sgn(static_cast<long>(raw[2 * v].degree) * A.degree(w)) * it->second) *
                      (gen(2 * v) * gen(2 * w));
            }
        }
        Rational s = sgn(A.degree(u));
        raw_diff[2 * u] = s * dx;
        raw_diff[2 * u + 1] = s * dy;
    }

    // Null component: degree-0 generators vanish, so their differentials
    // (linear in degree-1 generators) become relations.
    std::vector<std::size_t> deg1;
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i].degree == 1)
            deg1.push_back(i);
    std::vector<std::map<std::size_t, Rational>> rows;  // reduced relations, keyed by slot
    std::map<std::size_t, std::size_t> pivot_row;         // pivot slot -> row
    for (std::size_t r = 0; r < 2 * n; ++r) {
        if (raw[r].degree != 0)
            continue;
        std::map<std::size_t, Rational> rel;
        for (const auto& [m, c] : raw_diff[r].terms())
            rel[*m.leading_index()] += c;
        std::erase_if(rel, [](const auto& kv) { return kv.second == 0; });
        for (const auto& [p, ri] : pivot_row) {
            auto it = rel.find(p);
            if (it == rel.end())
                continue;
            Rational f = it->second;
            for (const auto& [j, q] : rows[ri])
                rel[j] -= f * q;
            std::erase_if(rel, [](const auto& kv) { return kv.second == 0; });
        }
        if (rel.empty())
            continue;
        std::size_t p = rel.rbegin()->first;
        Rational inv = 1 / rel[p];
        for (auto& [j, q] : rel)
            q *= inv;
        for (auto& [pp, ri] : pivot_row) {  // keep rows fully reduced
            auto it = rows[ri].find(p);
            if (it == rows[ri].end())
                continue;
            Rational f = it->second;
            for (const auto& [j, q] : rel)
                rows[ri][j] -= f * q;
            std::erase_if(rows[ri], [](const auto& kv) { return kv.second == 0; });
        }
        pivot_row[p] = rows.size();
        rows.push_back(std::move(rel));
    }

    std::vector<Generator> kept;
    std::vector<std::optional<std::size_t>> new_index(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (!pivot_row.count(i)) {
            new_index[i] = kept.size();
            kept.push_back(gens[i]);
        }
    auto out_ctx = make_context(kept);
    std::vector<Element> images(gens.size(), Element::zero(out_ctx));
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (new_index[i]) {
            images[i] = Element::generator(out_ctx, *new_index[i]);
            continue;
        }
        for (const auto& [j, q] : rows[pivot_row.at(i)])
            if (j != i)
                images[i] -= q * Element::generator(out_ctx, *new_index[j]);
    }
    std::vector<Element> diff;
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (new_index[i])
            diff.push_back(substitute(raw_diff[raw_of_slot[i]], images, out_ctx));

    FreeCdga model("Map(" + A.label() + ",S^" + std::to_string(k) + ";0)", out_ctx, std::move(diff),
                   Validation::DegreesOnly);
    for (std::size_t i = 0; i < out_ctx->size(); ++i)
        if (auto dd = model.differentiate(model.d(i)); !dd.is_zero())
            throw ValidationError("mapping-space model violates D^2 = 0 on " + (*out_ctx)[i].name + ": " +
                                  to_string(dd));
    return model;
}

SigmaNormalization sigma_normalize(const CdgaMorphism& sigma)
{
    const RelativeModel& src = sigma.source();
    const RelativeModel& tgt = sigma.target();
    const auto& fib = *src.fiber();
    if (src.base().dimension() != 1 || fib.size() != 2 || fib[0].degree % 2 != 0 ||
        fib[1].degree != 2 * fib[0].degree - 1 || src.d(1) != src.multiply(src.fiber_generator(0), src.fiber_generator(0)) ||
        !src.d(0).is_zero())
        throw ValidationError("sigma must start at the even-sphere model L(x, y) with dy = x^2");
    if (!tgt.fiber()->empty())
        throw ValidationError("sigma must land in a finite CDGA");
    const FiniteCdga& A = tgt.base();
    const int k = fib[0].degree;

    auto to_basis = [](const TensorElement& e) {
        BasisVector v;
        for (const auto& [key, c] : e.terms())
            v[key.base] = c;
        return v;
    };
    BasisVector sx = to_basis(sigma.fiber_image(0));
    BasisVector sy = to_basis(sigma.fiber_image(1));

    BasisVector c;
    if (!sx.empty()) {
        auto below = A.indices_of_degree(k - 1);
        SparseMatrix m{A.dimension(), {}};
        for (auto i : below)
            m.columns.push_back(A.d(i));
        auto sol = solve(m, sx);
        if (!sol)
            throw ComponentObstruction("[sigma(x)] is nonzero in H^" + std::to_string(k) + "(" + A.label() +
                                       "); the map is not in the null component");
        for (const auto& [j, q] : *sol)
            c[below[j]] = q;
    }
    BasisVector a = sy;
    for (const auto& [u, q] : A.multiply(c, sx))
        if ((a[u] -= q) == 0)
            a.erase(u);

    auto source = std::make_shared<const RelativeModel>(src);
    auto target = std::make_shared<const RelativeModel>(tgt);
    CdgaMorphism zero("sigma'", source, target, {target->unit()}, {TensorElement{}, TensorElement{}});
    return {std::move(zero), std::move(c), std::move(a)};
}

}  // namespace rht
