#pragma once

#include "rht/gca.hpp"

#include <string>
#include <vector>

namespace rht {

enum class Validation { Strict, DegreesOnly };

/// Free graded-commutative algebra with a degree +1 derivation given on
/// generators.
class FreeCdga {
public:
    FreeCdga() = default;
    /// `differential[i]` is d of generator i. Strict validation additionally
    /// requires d(d(g)) = 0 for every generator (Leibniz extension then gives
    /// d^2 = 0 everywhere). Throws ValidationError / DegreeError.
    FreeCdga(std::string label, Context generators, std::vector<Element> differential,
             Validation validation = Validation::Strict);

    /// Builds from (name, degree) pairs and differential expressions keyed by
    /// generator name; unspecified differentials are zero.
    static FreeCdga from_strings(std::string label, std::vector<Generator> generators,
                                 const std::vector<std::pair<std::string, std::string>>& differential,
                                 Validation validation = Validation::Strict);

    const std::string& label() const noexcept { return label_; }
    const Context& context() const noexcept { return ctx_; }
    const GeneratorSet& generators() const noexcept { return *ctx_; }
    const Element& d(std::size_t i) const { return diff_.at(i); }
    const Element& d(std::string_view name) const { return diff_.at(ctx_->index_of(name)); }

    Element differentiate(const Element& e) const;
    Element differentiate(const Monomial& m) const;

    friend bool operator==(const FreeCdga& a, const FreeCdga& b);

private:
    std::string label_;
    Context ctx_;
    std::vector<Element> diff_;
};

/// Leibniz extension D(ab) = D(a)b + (-1)^{|a|} a D(b), extended linearly.
Element extend_derivation(const FreeCdga& cdga, const Element& e);

}  // namespace rht
