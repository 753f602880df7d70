#include "rht/bundle_models.hpp"

#include "rht/error.hpp"

#include <algorithm>
#include <set>

namespace rht {

namespace {

std::string xname(int i) { return "x" + std::to_string(i); }

// Fiber generator layout of the Stiefel model V_m(R^{m+k}).
struct StiefelShape {
    int s = 0;
    int x_lo = 1, x_hi = 0;  // reduced range of x_i
    bool ebar = false;
    bool euler = false;
};

StiefelShape stiefel_shape(int m, int k)
{
    if (m < 1 || k < 2)
        throw ValidationError("Stiefel model needs m >= 1 and k >= 2 (got m=" + std::to_string(m) +
                              ", k=" + std::to_string(k) + ")");
    StiefelShape sh;
    const int l = m / 2;
    sh.s = k / 2;
    if (k % 2 == 1) {
        sh.x_lo = sh.s + 1;
        sh.x_hi = l + sh.s;
        sh.ebar = m % 2 == 1;
    } else {
        sh.x_lo = sh.s;
        sh.euler = true;
        sh.x_hi = m % 2 == 1 ? l + sh.s : l + sh.s - 1;
        sh.ebar = m % 2 == 0;
    }
    return sh;
}

std::vector<Generator> stiefel_generators(const StiefelShape& sh, int m, int k, int x_from)
{
    std::vector<Generator> gens;
    for (int i = x_from; i <= sh.x_hi; ++i)
        gens.push_back({xname(i), 4 * i - 1});
    if (sh.ebar)
        gens.push_back({"ebar" + std::to_string(m + k - 1), m + k - 1});
    if (sh.euler)
        gens.push_back({"e" + std::to_string(k), k});
    return gens;
}

TensorElement square(const RelativeModel& scratch, std::size_t g)
{
    auto e = scratch.fiber_generator(g);
    return scratch.multiply(e, e);
}

// Zero-differential model with the same generators, used to build elements.
RelativeModel scratch_model(const std::shared_ptr<const FiniteCdga>& base, const Context& fiber)
{
    return RelativeModel("scratch", base, fiber, std::vector<TensorElement>(fiber->size()),
                         Validation::DegreesOnly);
}

TensorElement rekey(const TensorElement& e, std::size_t fiber_size, std::size_t offset = 0)
{
    TensorElement out;
    for (const auto& [key, c] : e.terms()) {
        std::vector<int> exps(fiber_size, 0);
        for (std::size_t i = 0; i < key.fiber.exponents().size(); ++i)
            exps[offset + i] = key.fiber.exponent(i);
        out.add_term(TensorKey{key.base, Monomial(std::move(exps), key.fiber.degree())}, c);
    }
    return out;
}

}  // namespace

BsoModel bso_model(int n)
{
    if (n < 2)
        throw ValidationError("BSO(n) model needs n >= 2 (got " + std::to_string(n) + ")");
    std::vector<Generator> gens;
    const int r = n / 2;
    const int top = n % 2 == 1 ? r : r - 1;
    for (int i = 1; i <= top; ++i)
        gens.push_back({"p" + std::to_string(i), 4 * i});
    if (n % 2 == 0)
        gens.push_back({"e" + std::to_string(n), n});
    auto ctx = make_context(std::move(gens));
    std::vector<Element> diff;
    for (std::size_t i = 0; i < ctx->size(); ++i)
        diff.push_back(Element::zero(ctx));
    return {n, FreeCdga("BSO(" + std::to_string(n) + ")", ctx, std::move(diff))};
}

ManifoldModel::ManifoldModel(std::string name, int dimension, std::shared_ptr<const FiniteCdga> model,
                             std::vector<PontryaginClass> pontryagin)
    : name_(std::move(name)), dim_(dimension), model_(std::move(model)), classes_(std::move(pontryagin))
{
    if (!model_)
        throw ValidationError("manifold '" + name_ + "' has no model");
    if (dim_ < 1)
        throw ValidationError("manifold '" + name_ + "' must have dimension >= 1");
    std::sort(classes_.begin(), classes_.end(),
              [](const PontryaginClass& a, const PontryaginClass& b) { return a.index < b.index; });
    std::set<int> seen;
    for (auto& p : classes_) {
        const std::string tag = "p" + std::to_string(p.index);
        if (p.index < 1 || 4 * p.index > dim_)
            throw ValidationError("manifold '" + name_ + "': " + tag + " is out of range for dimension " +
                                  std::to_string(dim_));
        if (!seen.insert(p.index).second)
            throw ValidationError("manifold '" + name_ + "': " + tag + " given twice");
        for (const auto& [u, c] : p.cocycle)
            if (u >= model_->dimension())
                throw ValidationError("manifold '" + name_ + "': " + tag + " refers to a missing basis element");
        auto deg = model_->degree_of(p.cocycle);
        if (!p.cocycle.empty() && (!deg || *deg != 4 * p.index))
            throw DegreeError("manifold '" + name_ + "': " + tag + " must be homogeneous of degree " +
                              std::to_string(4 * p.index));
        if (!model_->differentiate(p.cocycle).empty())
            throw ValidationError("manifold '" + name_ + "': " + tag + " is not closed");
    }
    if (cohomology(*model_, 1).dims[1] != 0)
        throw ValidationError("manifold '" + name_ + "' is not simply connected (H^1 != 0)");
}

BasisVector ManifoldModel::pontryagin(int i) const
{
    for (const auto& p : classes_)
        if (p.index == i)
            return p.cocycle;
    return {};
}

ManifoldModel ManifoldModel::with_pontryagin(std::vector<PontryaginClass> classes) const
{
    return ManifoldModel(name_, dim_, model_, std::move(classes));
}

bool operator==(const ManifoldModel& a, const ManifoldModel& b)
{
    return a.name_ == b.name_ && a.dim_ == b.dim_ && *a.model_ == *b.model_ && a.classes_ == b.classes_;
}

RelativeModel borel_assoc_model(const CdgaMorphism& phi, const std::vector<Generator>& vk,
                                const std::vector<Generator>& svh, const std::vector<Element>& bmu,
                                const std::vector<Element>& bnu, std::string label)
{
    const RelativeModel& src = phi.source();
    const RelativeModel& tgt = phi.target();
    if (src.base().dimension() != 1 || !tgt.fiber()->empty())
        throw ValidationError("Borel model needs phi: LV_G -> A");
    if (bmu.size() != svh.size() || bnu.size() != svh.size())
        throw ValidationError("Borel model needs one Bmu and one Bnu image per generator of sV_H");
    auto vk_ctx = make_context(vk);
    std::vector<Generator> all = vk;
    all.insert(all.end(), svh.begin(), svh.end());
    auto fiber = make_context(all);
    auto scratch = scratch_model(tgt.base_ptr(), fiber);

    std::vector<TensorElement> diff(vk.size());
    for (std::size_t i = 0; i < svh.size(); ++i) {
        const int want = svh[i].degree + 1;
        if (!bmu[i].is_zero() && (*bmu[i].context() != *src.fiber() || bmu[i].degree() != want))
            throw DegreeError("Bmu*(" + svh[i].name + ") must lie in LV_G in degree " + std::to_string(want));
        if (!bnu[i].is_zero() && (*bnu[i].context() != *vk_ctx || bnu[i].degree() != want))
            throw DegreeError("Bnu*(" + svh[i].name + ") must lie in LV_K in degree " + std::to_string(want));
        TensorElement image = bmu[i].is_zero() ? TensorElement{} : phi.apply(src.from_free(bmu[i]));
        TensorElement dv = rekey(image, fiber->size());
        if (!bnu[i].is_zero()) {
            Element lifted(fiber);
            for (const auto& [m, c] : bnu[i].terms()) {
                std::vector<int> exps(fiber->size(), 0);
                std::copy(m.exponents().begin(), m.exponents().end(), exps.begin());
                lifted.add_term(Monomial(std::move(exps), m.degree()), c);
            }
            dv -= scratch.from_free(lifted);
        }
        diff.push_back(std::move(dv));
    }
    return RelativeModel(std::move(label), tgt.base_ptr(), fiber, std::move(diff));
}

FreeCdga stiefel_model(int m, int k)
{
    auto sh = stiefel_shape(m, k);
    auto ctx = make_context(stiefel_generators(sh, m, k, sh.x_lo));
    std::vector<Element> diff;
    for (std::size_t i = 0; i < ctx->size(); ++i)
        diff.push_back(Element::zero(ctx));
    if (sh.euler) {
        auto e = Element::generator(ctx, "e" + std::to_string(k));
        diff[ctx->index_of(xname(sh.s))] = e * e;
    }
    return FreeCdga("V_" + std::to_string(m) + "(R^" + std::to_string(m + k) + ")", ctx, std::move(diff));
}

RelativeModel framed_bundle_model(const ManifoldModel& manifold, int k)
{
    const int m = manifold.dimension();
    auto sh = stiefel_shape(m, k);
    auto fiber = make_context(stiefel_generators(sh, m, k, sh.x_lo));
    auto scratch = scratch_model(manifold.model_ptr(), fiber);
    std::vector<TensorElement> diff(fiber->size());
    for (int i = sh.x_lo; i <= sh.x_hi; ++i) {
        auto g = fiber->index_of(xname(i));
        diff[g] = scratch.from_base(manifold.pontryagin(i));
        if (sh.euler && i == sh.s)
            diff[g] += square(scratch, fiber->index_of("e" + std::to_string(k)));
    }
    return RelativeModel(manifold.name() + " framed k=" + std::to_string(k), manifold.model_ptr(), fiber,
                         std::move(diff));
}

UnreducedFramedModel unreduced_framed_model(const ManifoldModel& manifold, int k, int verify_cutoff)
{
    const int m = manifold.dimension();
    auto sh = stiefel_shape(m, k);
    auto gens = stiefel_generators(sh, m, k, 1);
    const int nb = k % 2 == 1 ? sh.s : sh.s - 1;
    for (int i = 1; i <= nb; ++i)
        gens.push_back({"b" + std::to_string(i), 4 * i});
    auto fiber = make_context(gens);
    auto scratch = scratch_model(manifold.model_ptr(), fiber);

    std::vector<TensorElement> diff(fiber->size());
    for (int i = 1; i <= sh.x_hi; ++i) {
        auto g = fiber->index_of(xname(i));
        diff[g] = scratch.from_base(manifold.pontryagin(i));
        if (i <= nb)
            diff[g] -= scratch.fiber_generator(fiber->index_of("b" + std::to_string(i)));
        if (sh.euler && i == sh.s)
            diff[g] += square(scratch, fiber->index_of("e" + std::to_string(k)));
    }
    auto unreduced = std::make_shared<const RelativeModel>(
        manifold.name() + " unreduced k=" + std::to_string(k), manifold.model_ptr(), fiber, std::move(diff));
    auto reduced = std::make_shared<const RelativeModel>(framed_bundle_model(manifold, k));

    std::vector<TensorElement> base_images, fiber_images;
    for (std::size_t u = 0; u < manifold.model().dimension(); ++u)
        base_images.push_back(reduced->from_base(BasisVector{{u, Rational(1)}}));
    for (const auto& g : fiber->generators()) {
        if (g.name[0] == 'b')
            fiber_images.push_back(reduced->from_base(manifold.pontryagin(std::stoi(g.name.substr(1)))));
        else if (auto j = reduced->fiber()->find(g.name))
            fiber_images.push_back(reduced->fiber_generator(*j));
        else
            fiber_images.push_back({});
    }
    CdgaMorphism phi("reduction", unreduced, reduced, std::move(base_images), std::move(fiber_images));
    if (auto bad = phi.chain_map_violations(); !bad.empty())
        throw ChainMapError("reduction is not a chain map: " + bad.front());
    if (verify_cutoff >= 0 && !is_quasi_iso(phi, verify_cutoff).quasi_iso)
        throw ValidationError("reduction is not a quasi-isomorphism up to degree " + std::to_string(verify_cutoff));
    return {unreduced, reduced, std::move(phi)};
}

int pontryagin_threshold(int k)
{
    return k % 2 == 1 ? k / 2 + 1 : k / 2;
}

TrivialityVerdict is_rationally_trivial(const ManifoldModel& manifold, int k, int cutoff)
{
    const int m = manifold.dimension();
    stiefel_shape(m, k);
    TrivialityVerdict v;
    for (int i = pontryagin_threshold(k); 4 * i <= m; ++i)
        if (!is_exact(manifold.model(), manifold.pontryagin(i)))
            v.obstructions.push_back(i);
    if (!v.obstructions.empty())
        return v;

    KunnethCertificate cert;
    cert.cutoff = cutoff;
    cert.total = cohomology(framed_bundle_model(manifold, k), cutoff).dims;
    cert.base = cohomology(manifold.model(), cutoff).dims;
    cert.fiber = cohomology(stiefel_model(m, k), cutoff).dims;
    cert.expected = convolve(cert.base, cert.fiber, cutoff);
    cert.passed = cert.total == cert.expected;
    v.kind = cert.passed ? TrivialityVerdict::Kind::Trivial : TrivialityVerdict::Kind::NotEstablished;
    v.certificate = std::move(cert);
    return v;
}

}  // namespace rht
