#include "rht/morphism.hpp"

#include "rht/error.hpp"

namespace rht {

CdgaMorphism::CdgaMorphism(std::string label, std::shared_ptr<const RelativeModel> source,
                           std::shared_ptr<const RelativeModel> target, std::vector<TensorElement> base_images,
                           std::vector<TensorElement> fiber_images)
    : label_(std::move(label)),
      source_(std::move(source)),
      target_(std::move(target)),
      base_images_(std::move(base_images)),
      fiber_images_(std::move(fiber_images))
{
    const auto& A = source_->base();
    if (base_images_.size() != A.dimension() || fiber_images_.size() != source_->fiber()->size())
        throw ValidationError("morphism '" + label_ + "' needs an image for every basis element and generator");
    if (base_images_[0] != target_->unit())
        throw ValidationError("morphism '" + label_ + "' must send 1 to 1");
    for (std::size_t i = 1; i < A.dimension(); ++i) {
        auto deg = target_->degree_of(base_images_[i]);
        if (deg && *deg != A.degree(i))
            throw DegreeError("morphism '" + label_ + "' changes the degree of " + A.basis(i).name);
    }
    for (std::size_t i = 0; i < fiber_images_.size(); ++i) {
        auto deg = target_->degree_of(fiber_images_[i]);
        if (deg && *deg != (*source_->fiber())[i].degree)
            throw DegreeError("morphism '" + label_ + "' changes the degree of " + (*source_->fiber())[i].name);
    }
    for (std::size_t i = 1; i < A.dimension(); ++i)
        for (std::size_t j = i; j < A.dimension(); ++j) {
            TensorElement lhs;
            for (const auto& [u, q] : A.product(i, j))
                lhs += q * base_images_[u];
            if (lhs != target_->multiply(base_images_[i], base_images_[j]))
                throw ValidationError("morphism '" + label_ + "' is not multiplicative on " + A.basis(i).name + "*" +
                                      A.basis(j).name);
        }
}

CdgaMorphism CdgaMorphism::identity(std::shared_ptr<const RelativeModel> model)
{
    std::vector<TensorElement> base, fiber;
    for (std::size_t i = 0; i < model->base().dimension(); ++i)
        base.push_back(model->from_base(BasisVector{{i, Rational(1)}}));
    for (std::size_t i = 0; i < model->fiber()->size(); ++i)
        fiber.push_back(model->fiber_generator(i));
    return CdgaMorphism("id", model, model, std::move(base), std::move(fiber));
}

TensorElement CdgaMorphism::apply(const TensorKey& k) const
{
    TensorElement out = base_images_[k.base];
    for (std::size_t g = 0; g < fiber_images_.size() && !out.is_zero(); ++g)
        for (int e = 0; e < k.fiber.exponent(g); ++e)
            out = target_->multiply(out, fiber_images_[g]);
    return out;
}

TensorElement CdgaMorphism::apply(const TensorElement& e) const
{
    TensorElement out;
    for (const auto& [k, c] : e.terms())
        out += c * apply(k);
    return out;
}

std::vector<std::string> CdgaMorphism::chain_map_violations() const
{
    std::vector<std::string> out;
    const auto& A = source_->base();
    for (std::size_t i = 1; i < A.dimension(); ++i) {
        TensorElement lhs = apply(source_->from_base(A.d(i)));
        TensorElement rhs = target_->differentiate(base_images_[i]);
        if (lhs != rhs)
            out.push_back("f(d " + A.basis(i).name + ") - d f(" + A.basis(i).name + ") = " +
                          target_->to_string(lhs - rhs));
    }
    for (std::size_t i = 0; i < fiber_images_.size(); ++i) {
        TensorElement lhs = apply(source_->d(i));
        TensorElement rhs = target_->differentiate(fiber_images_[i]);
        const auto& name = (*source_->fiber())[i].name;
        if (lhs != rhs)
            out.push_back("f(D " + name + ") - D f(" + name + ") = " + target_->to_string(lhs - rhs));
    }
    return out;
}

}  // namespace rht
