#pragma once

// Free graded-commutative algebras over Q: generators, monomials and
// elements with Koszul signs.

#include "rht/rational.hpp"

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace rht {

struct Generator {
    std::string name;
    int degree = 1;

    bool odd() const noexcept { return degree % 2 != 0; }
    friend bool operator==(const Generator&, const Generator&) = default;
};

/// Ordered, immutable list of generators. Declaration order is the canonical
/// factor order inside monomials.
class GeneratorSet {
public:
    GeneratorSet() = default;
    /// Throws ValidationError on degree < 1, duplicate or malformed names.
    explicit GeneratorSet(std::vector<Generator> generators);

    std::size_t size() const noexcept { return gens_.size(); }
    bool empty() const noexcept { return gens_.empty(); }
    const Generator& operator[](std::size_t i) const { return gens_[i]; }
    const std::vector<Generator>& generators() const noexcept { return gens_; }
    std::optional<std::size_t> find(std::string_view name) const;
    std::size_t index_of(std::string_view name) const;  // throws ContextError

    friend bool operator==(const GeneratorSet& a, const GeneratorSet& b) { return a.gens_ == b.gens_; }

private:
    std::vector<Generator> gens_;
    std::unordered_map<std::string, std::size_t> index_;
};

using Context = std::shared_ptr<const GeneratorSet>;

Context make_context(std::vector<Generator> generators);

/// True for names matching [A-Za-z_][A-Za-z0-9_]*.
bool is_identifier(std::string_view name);

/// Exponent vector over a generator set; odd exponents never exceed one.
/// Ordering is graded: total degree first, then the exponent vector compared
/// lexicographically with larger leading exponents first.
class Monomial {
public:
    Monomial() = default;
    Monomial(std::vector<int> exponents, int degree) : exps_(std::move(exponents)), degree_(degree) {}

    static Monomial unit(std::size_t n) { return Monomial(std::vector<int>(n, 0), 0); }
    static Monomial generator(const GeneratorSet& gens, std::size_t i);

    int degree() const noexcept { return degree_; }
    const std::vector<int>& exponents() const noexcept { return exps_; }
    int exponent(std::size_t i) const { return exps_[i]; }
    bool is_unit() const noexcept { return degree_ == 0; }
    /// Index of the first generator with nonzero exponent.
    std::optional<std::size_t> leading_index() const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.degree_ == b.degree_ && a.exps_ == b.exps_; }
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

private:
    std::vector<int> exps_;
    int degree_ = 0;
};

/// Product of two monomials with Koszul sign. Returns the sign (+1/-1) and
/// product, or nullopt when an odd generator would appear twice.
std::optional<std::pair<int, Monomial>> multiply(const GeneratorSet& gens, const Monomial& a, const Monomial& b);

/// Sign (-1)^{#transpositions of odd generators} picked up when the factors of
/// `b` are moved past those of `a` into canonical order.
int koszul_sign(const GeneratorSet& gens, const Monomial& a, const Monomial& b);

std::string to_string(const GeneratorSet& gens, const Monomial& m);

/// All monomials of total degree n in canonical (ascending) order.
std::vector<Monomial> basis_of_degree(const GeneratorSet& gens, int n);

/// Finitely supported Q-linear combination of monomials. Zero coefficients
/// are never stored.
class Element {
public:
    using Terms = std::map<Monomial, Rational>;

    Element() = default;
    explicit Element(Context ctx) : ctx_(std::move(ctx)) {}
    Element(Context ctx, Terms terms);

    static Element zero(Context ctx) { return Element(std::move(ctx)); }
    static Element scalar(Context ctx, const Rational& c);
    static Element generator(Context ctx, std::size_t i, const Rational& c = 1);
    static Element generator(Context ctx, std::string_view name, const Rational& c = 1);
    static Element monomial(Context ctx, Monomial m, const Rational& c = 1);

    const Context& context() const noexcept { return ctx_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_homogeneous() const noexcept;
    /// Degree of a nonzero homogeneous element; nullopt for 0. Throws
    /// DegreeError when inhomogeneous.
    std::optional<int> degree() const;
    Rational coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, const Rational& c);

    Element& operator+=(const Element& other);
    Element& operator-=(const Element& other);
    Element& operator*=(const Rational& c);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator-(Element a) { return a *= Rational(-1); }
    friend Element operator*(const Rational& c, Element a) { return a *= c; }
    friend Element operator*(const Element& a, const Element& b);

    friend bool operator==(const Element& a, const Element& b);

    /// Throws ContextError unless `other` lives over an equal generator set.
    void require_same_context(const Element& other) const;

private:

    Context ctx_;
    Terms terms_;
};

/// Bilinear graded-commutative product. Throws ContextError on mixed contexts.
Element multiply(const Element& a, const Element& b);

/// Integer power, a^0 = 1.
Element power(const Element& a, int exponent);

/// Canonical text in the expression grammar, e.g. "3/2*a^2 - x3*e2".
std::string to_string(const Element& e);

/// Parses the expression grammar
///   element = term (("+"|"-") term)*
///   term    = [sign] [rational "*"] factor ("*" factor)*  |  [sign] rational
///   factor  = name ["^" positive-int]
/// Throws ParseError on unknown names, malformed rationals or odd powers.
Element parse_element(std::string_view text, const Context& ctx);

}  // namespace rht
