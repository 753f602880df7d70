#pragma once

// Relative Sullivan algebras (A, d_A) -> (A (x) LV, D): a finite-dimensional
// base with free fiber generators whose differential takes values in A (x) LV.
// Free CDGAs are the case A = Q; finite CDGAs the case V = 0.

#include "rht/finite_cdga.hpp"
#include "rht/free_cdga.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace rht {

struct TensorKey {
    std::size_t base = 0;  // index into the base basis (0 = unit)
    Monomial fiber;

    friend bool operator==(const TensorKey&, const TensorKey&) = default;
    friend std::strong_ordering operator<=>(const TensorKey& a, const TensorKey& b)
    {
        if (auto c = a.base <=> b.base; c != 0)
            return c;
        return a.fiber <=> b.fiber;
    }
};

/// Element of A (x) LV; terms a_u (x) m with a_u written first.
class TensorElement {
public:
    using Terms = std::map<TensorKey, Rational>;

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    void add_term(const TensorKey& k, const Rational& c);
    Rational coefficient(const TensorKey& k) const;

    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    TensorElement& operator*=(const Rational& c);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(const Rational& c, TensorElement a) { return a *= c; }
    friend bool operator==(const TensorElement&, const TensorElement&) = default;

private:
    Terms terms_;
};

class RelativeModel {
public:
    RelativeModel() = default;
    /// `differential[i]` is D of fiber generator i. Throws ValidationError
    /// on name clashes between base and fiber, wrong degrees, or (Strict)
    /// D(D(v)) != 0.
    RelativeModel(std::string label, std::shared_ptr<const FiniteCdga> base, Context fiber,
                  std::vector<TensorElement> differential, Validation validation = Validation::Strict);

    /// Builds a model whose fiber differentials are expressions over the
    /// joint names (base basis names and fiber generator names).
    static RelativeModel from_strings(std::string label, std::shared_ptr<const FiniteCdga> base,
                                      std::vector<Generator> fiber,
                                      const std::vector<std::pair<std::string, std::string>>& differential,
                                      Validation validation = Validation::Strict);

    const std::string& label() const noexcept { return label_; }
    const FiniteCdga& base() const noexcept { return *base_; }
    const std::shared_ptr<const FiniteCdga>& base_ptr() const noexcept { return base_; }
    const Context& fiber() const noexcept { return fiber_; }
    const TensorElement& d(std::size_t i) const { return diff_.at(i); }
    const std::vector<TensorElement>& differentials() const noexcept { return diff_; }

    int degree(const TensorKey& k) const { return base_->degree(k.base) + k.fiber.degree(); }
    /// Degree of a nonzero homogeneous element; throws DegreeError otherwise.
    std::optional<int> degree_of(const TensorElement& e) const;

    TensorElement unit() const;
    TensorElement from_base(const BasisVector& v) const;
    TensorElement fiber_generator(std::size_t i, const Rational& c = 1) const;
    TensorElement from_free(const Element& e) const;  // e over fiber()

    TensorElement multiply(const TensorElement& a, const TensorElement& b) const;
    TensorElement differentiate(const TensorElement& a) const;
    TensorElement differentiate(const TensorKey& k) const;

    /// Chain basis of degree n: pairs (a_u, m) with |a_u| + |m| = n, ordered
    /// by base index then monomial.
    std::vector<TensorKey> basis_of_degree(int n) const;

    /// Joint naming context: base names first, then fiber generators.
    const Context& joint_names() const noexcept { return joint_; }
    TensorElement parse(std::string_view text) const;
    std::string to_string(const TensorElement& e) const;

    /// The underlying free CDGA when the base is Q.
    FreeCdga to_free() const;

    friend bool operator==(const RelativeModel& a, const RelativeModel& b);

private:
    std::string label_;
    std::shared_ptr<const FiniteCdga> base_;
    Context fiber_;
    std::vector<TensorElement> diff_;
    Context joint_;
};

RelativeModel as_relative(const FreeCdga& free);
RelativeModel as_relative(const FiniteCdga& finite);

struct TensorProduct {
    RelativeModel model;
    /// Generator/basis names of the second factor that were renamed.
    std::map<std::string, std::string> renamed;
};

/// (A (x) LV, D) (x) (B (x) LW, D') = ((A (x) B) (x) L(V + W), D (x) 1 + 1 (x) D').
/// Clashing names of the second factor get a numeric suffix.
TensorProduct tensor(const RelativeModel& a, const RelativeModel& b);

/// Free (x) free, with renaming as above.
FreeCdga tensor(const FreeCdga& a, const FreeCdga& b, std::map<std::string, std::string>* renamed = nullptr);

}  // namespace rht
