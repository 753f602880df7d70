#include "rht/relative_model.hpp"

#include "rht/error.hpp"

#include <set>

namespace rht {

// ---------------------------------------------------------- TensorElement

void TensorElement::add_term(const TensorKey& k, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Rational TensorElement::coefficient(const TensorKey& k) const
{
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
}

TensorElement& TensorElement::operator+=(const TensorElement& o)
{
    for (const auto& [k, c] : o.terms_)
        add_term(k, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o)
{
    for (const auto& [k, c] : o.terms_)
        add_term(k, -c);
    return *this;
}

TensorElement& TensorElement::operator*=(const Rational& c)
{
    if (c == 0)
        terms_.clear();
    for (auto& [k, v] : terms_)
        v *= c;
    return *this;
}

// ---------------------------------------------------------- RelativeModel

namespace {

Context joint_context(const FiniteCdga& base, const GeneratorSet& fiber)
{
    std::vector<Generator> gens = base.names()->generators();
    for (const auto& g : fiber.generators())
        gens.push_back(g);
    try {
        return make_context(std::move(gens));
    } catch (const ValidationError& e) {
        throw ValidationError(std::string("base and fiber names must be disjoint: ") + e.what());
    }
}

}  // namespace

RelativeModel::RelativeModel(std::string label, std::shared_ptr<const FiniteCdga> base, Context fiber,
                             std::vector<TensorElement> differential, Validation validation)
    : label_(std::move(label)), base_(std::move(base)), fiber_(std::move(fiber)), diff_(std::move(differential))
{
    if (!base_)
        base_ = std::make_shared<const FiniteCdga>(FiniteCdga::unit());
    if (!fiber_)
        fiber_ = make_context({});
    joint_ = joint_context(*base_, *fiber_);
    if (diff_.size() != fiber_->size())
        throw ValidationError("differential must be given for every fiber generator of '" + label_ + "'");
    for (std::size_t i = 0; i < diff_.size(); ++i) {
        for (const auto& [k, c] : diff_[i].terms())
            if (k.base >= base_->dimension() || k.fiber.exponents().size() != fiber_->size())
                throw ContextError("D(" + (*fiber_)[i].name + ") refers to unknown basis elements");
        auto deg = degree_of(diff_[i]);
        if (deg && *deg != (*fiber_)[i].degree + 1)
            throw DegreeError("D(" + (*fiber_)[i].name + ") = " + to_string(diff_[i]) + " has degree " +
                              std::to_string(*deg) + ", expected " + std::to_string((*fiber_)[i].degree + 1));
    }
    if (validation == Validation::Strict)
        for (std::size_t i = 0; i < diff_.size(); ++i)
            if (auto dd = differentiate(diff_[i]); !dd.is_zero())
                throw ValidationError("D^2(" + (*fiber_)[i].name + ") = " + to_string(dd) + " in '" + label_ + "'");
}

RelativeModel RelativeModel::from_strings(std::string label, std::shared_ptr<const FiniteCdga> base,
                                          std::vector<Generator> fiber,
                                          const std::vector<std::pair<std::string, std::string>>& differential,
                                          Validation validation)
{
    if (!base)
        base = std::make_shared<const FiniteCdga>(FiniteCdga::unit());
    Context ctx = make_context(std::move(fiber));
    // Parse with a scratch model that has zero differential.
    RelativeModel scratch(label, base, ctx, std::vector<TensorElement>(ctx->size()), Validation::DegreesOnly);
    std::vector<TensorElement> d(ctx->size());
    for (const auto& [name, expr] : differential)
        d[ctx->index_of(name)] = scratch.parse(expr);
    return RelativeModel(std::move(label), std::move(base), std::move(ctx), std::move(d), validation);
}

std::optional<int> RelativeModel::degree_of(const TensorElement& e) const
{
    std::optional<int> deg;
    for (const auto& [k, c] : e.terms()) {
        int d = degree(k);
        if (deg && *deg != d)
            throw DegreeError("element " + to_string(e) + " is not homogeneous");
        deg = d;
    }
    return deg;
}

TensorElement RelativeModel::unit() const
{
    TensorElement e;
    e.add_term({0, Monomial::unit(fiber_->size())}, 1);
    return e;
}

TensorElement RelativeModel::from_base(const BasisVector& v) const
{
    TensorElement e;
    for (const auto& [u, c] : v)
        e.add_term({u, Monomial::unit(fiber_->size())}, c);
    return e;
}

TensorElement RelativeModel::fiber_generator(std::size_t i, const Rational& c) const
{
    TensorElement e;
    e.add_term({0, Monomial::generator(*fiber_, i)}, c);
    return e;
}

TensorElement RelativeModel::from_free(const Element& f) const
{
    TensorElement e;
    for (const auto& [m, c] : f.terms())
        e.add_term({0, m}, c);
    return e;
}

TensorElement RelativeModel::multiply(const TensorElement& a, const TensorElement& b) const
{
    TensorElement out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            auto fm = rht::multiply(*fiber_, ka.fiber, kb.fiber);
            if (!fm)
                continue;
            const BasisVector& ab = base_->product(ka.base, kb.base);
            if (ab.empty())
                continue;
            int sign = fm->first;
            if ((ka.fiber.degree() * base_->degree(kb.base)) % 2 != 0)
                sign = -sign;
            Rational c = ca * cb;
            if (sign < 0)
                c = -c;
            for (const auto& [u, q] : ab)
                out.add_term({u, fm->second}, c * q);
        }
    return out;
}

TensorElement RelativeModel::differentiate(const TensorKey& k) const
{
    TensorElement out;
    // d_A(a) (x) m
    for (const auto& [u, q] : base_->d(k.base))
        out.add_term({u, k.fiber}, q);
    // (-1)^{|a|} a * D(m), with D(m) by Leibniz on the leading factor.
    auto lead = k.fiber.leading_index();
    if (!lead)
        return out;
    const std::size_t g = *lead;
    std::vector<int> e = k.fiber.exponents();
    --e[g];
    Monomial rest(std::move(e), k.fiber.degree() - (*fiber_)[g].degree);
    TensorElement rest_el;
    rest_el.add_term({0, rest}, 1);
    TensorElement dm = multiply(diff_[g], rest_el);
    if (!rest.is_unit()) {
        TensorElement tail = differentiate(TensorKey{0, rest});
        if (!tail.is_zero())
            dm += multiply(fiber_generator(g, (*fiber_)[g].odd() ? -1 : 1), tail);
    }
    if (k.base == 0)
        return out += dm;
    TensorElement a;
    a.add_term({k.base, Monomial::unit(fiber_->size())}, base_->degree(k.base) % 2 ? -1 : 1);
    return out += multiply(a, dm);
}

TensorElement RelativeModel::differentiate(const TensorElement& a) const
{
    TensorElement out;
    for (const auto& [k, c] : a.terms())
        out += c * differentiate(k);
    return out;
}

std::vector<TensorKey> RelativeModel::basis_of_degree(int n) const
{
    std::vector<TensorKey> out;
    for (std::size_t u = 0; u < base_->dimension(); ++u) {
        int rest = n - base_->degree(u);
        if (rest < 0)
            continue;
        for (auto& m : rht::basis_of_degree(*fiber_, rest))
            out.push_back({u, std::move(m)});
    }
    return out;
}

TensorElement RelativeModel::parse(std::string_view text) const
{
    Element e = parse_element(text, joint_);
    const std::size_t nb = base_->names()->size();
    TensorElement out;
    for (const auto& [m, c] : e.terms()) {
        std::vector<int> be(m.exponents().begin(), m.exponents().begin() + static_cast<long>(nb));
        std::vector<int> fe(m.exponents().begin() + static_cast<long>(nb), m.exponents().end());
        int bdeg = 0;
        for (std::size_t i = 0; i < nb; ++i)
            bdeg += be[i] * (*base_->names())[i].degree;
        Element bpart = Element::monomial(base_->names(), Monomial(std::move(be), bdeg));
        Monomial fm(std::move(fe), m.degree() - bdeg);
        for (const auto& [u, q] : base_->evaluate(bpart))
            out.add_term({u, fm}, c * q);
    }
    return out;
}

std::string RelativeModel::to_string(const TensorElement& t) const
{
    const std::size_t nb = base_->names()->size();
    Element e(joint_);
    for (const auto& [k, c] : t.terms()) {
        std::vector<int> ex(nb, 0);
        if (k.base != 0)
            ex[k.base - 1] = 1;
        ex.insert(ex.end(), k.fiber.exponents().begin(), k.fiber.exponents().end());
        e.add_term(Monomial(std::move(ex), degree(k)), c);
    }
    return rht::to_string(e);
}

FreeCdga RelativeModel::to_free() const
{
    if (base_->dimension() != 1)
        throw ValidationError("model '" + label_ + "' has a nontrivial base");
    std::vector<Element> d;
    for (const auto& t : diff_) {
        Element e(fiber_);
        for (const auto& [k, c] : t.terms())
            e.add_term(k.fiber, c);
        d.push_back(std::move(e));
    }
    return FreeCdga(label_, fiber_, std::move(d), Validation::DegreesOnly);
}

bool operator==(const RelativeModel& a, const RelativeModel& b)
{
    return a.label_ == b.label_ && *a.base_ == *b.base_ && *a.fiber_ == *b.fiber_ && a.diff_ == b.diff_;
}

RelativeModel as_relative(const FreeCdga& free)
{
    RelativeModel shell(free.label(), nullptr, free.context(),
                        std::vector<TensorElement>(free.generators().size()), Validation::DegreesOnly);
    std::vector<TensorElement> d;
    for (std::size_t i = 0; i < free.generators().size(); ++i)
        d.push_back(shell.from_free(free.d(i)));
    return RelativeModel(free.label(), nullptr, free.context(), std::move(d), Validation::DegreesOnly);
}

RelativeModel as_relative(const FiniteCdga& finite)
{
    return RelativeModel(finite.label(), std::make_shared<const FiniteCdga>(finite), make_context({}), {});
}

// ------------------------------------------------------------------ tensor

namespace {

std::string fresh_name(const std::string& name, const std::set<std::string>& used)
{
    for (int i = 2;; ++i) {
        std::string candidate = name + "_" + std::to_string(i);
        if (!used.count(candidate))
            return candidate;
    }
}

Monomial pad(const Monomial& m, std::size_t before, std::size_t after)
{
    std::vector<int> e(before, 0);
    e.insert(e.end(), m.exponents().begin(), m.exponents().end());
    e.resize(e.size() + after, 0);
    return Monomial(std::move(e), m.degree());
}

}  // namespace

TensorProduct tensor(const RelativeModel& a, const RelativeModel& b)
{
    TensorProduct result;
    auto base = std::make_shared<const FiniteCdga>(tensor(a.base(), b.base()));
    std::set<std::string> used;
    for (const auto& g : base->names()->generators())
        used.insert(g.name);
    std::vector<Generator> gens;
    for (auto g : a.fiber()->generators()) {
        if (used.count(g.name)) {
            std::string fresh = fresh_name(g.name, used);
            result.renamed["(left)" + g.name] = fresh;
            g.name = fresh;
        }
        used.insert(g.name);
        gens.push_back(g);
    }
    for (auto g : b.fiber()->generators()) {
        if (used.count(g.name)) {
            std::string fresh = fresh_name(g.name, used);
            result.renamed[g.name] = fresh;
            g.name = fresh;
        }
        used.insert(g.name);
        gens.push_back(g);
    }
    const std::size_t nv = a.fiber()->size(), nw = b.fiber()->size(), nb = b.base().dimension();
    std::vector<TensorElement> d;
    for (std::size_t i = 0; i < nv; ++i) {
        TensorElement t;
        for (const auto& [k, c] : a.d(i).terms())
            t.add_term({k.base * nb, pad(k.fiber, 0, nw)}, c);
        d.push_back(std::move(t));
    }
    for (std::size_t i = 0; i < nw; ++i) {
        TensorElement t;
        for (const auto& [k, c] : b.d(i).terms())
            t.add_term({k.base, pad(k.fiber, nv, 0)}, c);
        d.push_back(std::move(t));
    }
    result.model = RelativeModel(a.label() + "(x)" + b.label(), std::move(base), make_context(std::move(gens)),
                                 std::move(d), Validation::DegreesOnly);
    return result;
}

FreeCdga tensor(const FreeCdga& a, const FreeCdga& b, std::map<std::string, std::string>* renamed)
{
    std::set<std::string> used;
    std::vector<Generator> gens = a.generators().generators();
    for (const auto& g : gens)
        used.insert(g.name);
    for (auto g : b.generators().generators()) {
        if (used.count(g.name)) {
            std::string fresh = fresh_name(g.name, used);
            if (renamed)
                (*renamed)[g.name] = fresh;
            g.name = fresh;
        }
        used.insert(g.name);
        gens.push_back(g);
    }
    Context ctx = make_context(std::move(gens));
    const std::size_t na = a.generators().size(), nb = b.generators().size();
    std::vector<Element> d;
    for (std::size_t i = 0; i < na; ++i) {
        Element e(ctx);
        for (const auto& [m, c] : a.d(i).terms())
            e.add_term(pad(m, 0, nb), c);
        d.push_back(std::move(e));
    }
    for (std::size_t i = 0; i < nb; ++i) {
        Element e(ctx);
        for (const auto& [m, c] : b.d(i).terms())
            e.add_term(pad(m, na, 0), c);
        d.push_back(std::move(e));
    }
    return FreeCdga(a.label() + "(x)" + b.label(), std::move(ctx), std::move(d), Validation::DegreesOnly);
}

}  // namespace rht
