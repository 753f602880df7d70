#include "rht/free_cdga.hpp"

#include "rht/error.hpp"

namespace rht {

FreeCdga::FreeCdga(std::string label, Context generators, std::vector<Element> differential, Validation validation)
    : label_(std::move(label)), ctx_(std::move(generators)), diff_(std::move(differential))
{
    if (!ctx_)
        ctx_ = make_context({});
    if (diff_.size() != ctx_->size())
        throw ValidationError("differential must be given for every generator of '" + label_ + "'");
    for (std::size_t i = 0; i < diff_.size(); ++i) {
        if (!diff_[i].context())
            diff_[i] = Element(ctx_);
        if (!(*diff_[i].context() == *ctx_))
            throw ContextError("differential of '" + (*ctx_)[i].name + "' lives over a different generator set");
        diff_[i] = Element(ctx_, diff_[i].terms());
        auto deg = diff_[i].degree();
        if (deg && *deg != (*ctx_)[i].degree + 1)
            throw DegreeError("d(" + (*ctx_)[i].name + ") = " + to_string(diff_[i]) + " has degree " +
                              std::to_string(*deg) + ", expected " + std::to_string((*ctx_)[i].degree + 1));
    }
    if (validation == Validation::Strict)
        for (std::size_t i = 0; i < diff_.size(); ++i)
            if (auto dd = differentiate(diff_[i]); !dd.is_zero())
                throw ValidationError("d^2(" + (*ctx_)[i].name + ") = " + to_string(dd) + " in '" + label_ + "'");
}

FreeCdga FreeCdga::from_strings(std::string label, std::vector<Generator> generators,
                                const std::vector<std::pair<std::string, std::string>>& differential,
                                Validation validation)
{
    Context ctx = make_context(std::move(generators));
    std::vector<Element> d(ctx->size(), Element(ctx));
    for (const auto& [name, expr] : differential)
        d[ctx->index_of(name)] = parse_element(expr, ctx);
    return FreeCdga(std::move(label), std::move(ctx), std::move(d), validation);
}

Element FreeCdga::differentiate(const Monomial& m) const
{
    auto lead = m.leading_index();
    if (!lead)
        return Element(ctx_);
    // m = g * rest with g the leading factor; no reordering sign.
    const std::size_t g = *lead;
    std::vector<int> e = m.exponents();
    --e[g];
    Monomial rest(std::move(e), m.degree() - (*ctx_)[g].degree);
    Element out = multiply(diff_[g], Element::monomial(ctx_, rest));
    Element tail = differentiate(rest);
    if (!tail.is_zero()) {
        Element gen = Element::generator(ctx_, g, (*ctx_)[g].odd() ? -1 : 1);
        out += multiply(gen, tail);
    }
    return out;
}

Element FreeCdga::differentiate(const Element& e) const
{
    Element out(ctx_);
    for (const auto& [m, c] : e.terms()) {
        Element dm = differentiate(m);
        dm *= c;
        out += dm;
    }
    return out;
}

bool operator==(const FreeCdga& a, const FreeCdga& b)
{
    return a.label_ == b.label_ && *a.ctx_ == *b.ctx_ && a.diff_ == b.diff_;
}

Element extend_derivation(const FreeCdga& cdga, const Element& e) { return cdga.differentiate(e); }

}  // namespace rht
