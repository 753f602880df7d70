#include "rht/gca.hpp"

#include "rht/error.hpp"

#include <algorithm>
#include <cctype>

namespace rht {

bool is_identifier(std::string_view name)
{
    if (name.empty())
        return false;
    auto head = static_cast<unsigned char>(name.front());
    if (!std::isalpha(head) && head != '_')
        return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        auto u = static_cast<unsigned char>(c);
        return std::isalnum(u) || u == '_';
    });
}

GeneratorSet::GeneratorSet(std::vector<Generator> generators) : gens_(std::move(generators))
{
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        const auto& g = gens_[i];
        if (!is_identifier(g.name))
            throw ValidationError("invalid generator name '" + g.name + "'");
        if (g.degree < 1)
            throw ValidationError("generator '" + g.name + "' has degree " + std::to_string(g.degree) +
                                  "; degrees must be >= 1");
        if (!index_.emplace(g.name, i).second)
            throw ValidationError("duplicate generator name '" + g.name + "'");
    }
}

std::optional<std::size_t> GeneratorSet::find(std::string_view name) const
{
    auto it = index_.find(std::string(name));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::size_t GeneratorSet::index_of(std::string_view name) const
{
    if (auto i = find(name))
        return *i;
    throw ContextError("unknown generator '" + std::string(name) + "'");
}

Context make_context(std::vector<Generator> generators)
{
    return std::make_shared<const GeneratorSet>(std::move(generators));
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::generator(const GeneratorSet& gens, std::size_t i)
{
    std::vector<int> e(gens.size(), 0);
    e.at(i) = 1;
    return Monomial(std::move(e), gens[i].degree);
}

std::optional<std::size_t> Monomial::leading_index() const
{
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] != 0)
            return i;
    return std::nullopt;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b)
{
    if (auto c = a.degree_ <=> b.degree_; c != 0)
        return c;
    // Larger leading exponents sort first.
    for (std::size_t i = 0; i < std::min(a.exps_.size(), b.exps_.size()); ++i) {
        if (auto c = b.exps_[i] <=> a.exps_[i]; c != 0)
            return c;
    }
    return a.exps_.size() <=> b.exps_.size();
}

int koszul_sign(const GeneratorSet& gens, const Monomial& a, const Monomial& b)
{
    int odd_above = 0;  // odd factors of a with index greater than the current one
    int parity = 0;
    for (std::size_t i = gens.size(); i-- > 0;) {
        if (!gens[i].odd())
            continue;
        if (b.exponent(i) != 0)
            parity ^= odd_above & 1;
        if (a.exponent(i) != 0)
            ++odd_above;
    }
    return parity ? -1 : 1;
}

std::optional<std::pair<int, Monomial>> multiply(const GeneratorSet& gens, const Monomial& a, const Monomial& b)
{
    std::vector<int> e(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        e[i] = a.exponent(i) + b.exponent(i);
        if (e[i] > 1 && gens[i].odd())
            return std::nullopt;
    }
    return std::make_pair(koszul_sign(gens, a, b), Monomial(std::move(e), a.degree() + b.degree()));
}

std::string to_string(const GeneratorSet& gens, const Monomial& m)
{
    if (m.is_unit())
        return "1";
    std::string out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        int e = m.exponent(i);
        if (e == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += gens[i].name;
        if (e > 1)
            out += '^' + std::to_string(e);
    }
    return out;
}

namespace {

void enumerate(const GeneratorSet& gens, std::size_t i, int remaining, std::vector<int>& e, int total,
               std::vector<Monomial>& out)
{
    if (remaining == 0) {
        out.emplace_back(e, total);
        return;
    }
    if (i == gens.size())
        return;
    const int d = gens[i].degree;
    const int max_e = gens[i].odd() ? std::min(1, remaining / d) : remaining / d;
    for (int k = max_e; k >= 0; --k) {
        e[i] = k;
        enumerate(gens, i + 1, remaining - k * d, e, total, out);
    }
    e[i] = 0;
}

}  // namespace

std::vector<Monomial> basis_of_degree(const GeneratorSet& gens, int n)
{
    std::vector<Monomial> out;
    if (n < 0)
        return out;
    std::vector<int> e(gens.size(), 0);
    enumerate(gens, 0, n, e, n, out);
    std::sort(out.begin(), out.end());
    return out;
}

// ----------------------------------------------------------------- Element

Element::Element(Context ctx, Terms terms) : ctx_(std::move(ctx))
{
    for (auto& [m, c] : terms)
        if (c != 0)
            terms_.emplace(m, c);
}

Element Element::scalar(Context ctx, const Rational& c)
{
    Element e(ctx);
    e.add_term(Monomial::unit(ctx->size()), c);
    return e;
}

Element Element::generator(Context ctx, std::size_t i, const Rational& c)
{
    Element e(ctx);
    e.add_term(Monomial::generator(*ctx, i), c);
    return e;
}

Element Element::generator(Context ctx, std::string_view name, const Rational& c)
{
    auto i = ctx->index_of(name);
    return generator(std::move(ctx), i, c);
}

Element Element::monomial(Context ctx, Monomial m, const Rational& c)
{
    Element e(std::move(ctx));
    e.add_term(m, c);
    return e;
}

bool Element::is_homogeneous() const noexcept
{
    return terms_.empty() || terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

std::optional<int> Element::degree() const
{
    if (terms_.empty())
        return std::nullopt;
    if (!is_homogeneous())
        throw DegreeError("element " + to_string(*this) + " is not homogeneous");
    return terms_.begin()->first.degree();
}

Rational Element::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Element::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void Element::require_same_context(const Element& other) const
{
    if (ctx_ == other.ctx_)
        return;
    if (!ctx_ || !other.ctx_ || !(*ctx_ == *other.ctx_))
        throw ContextError("elements live over different generator sets");
}

Element& Element::operator+=(const Element& other)
{
    require_same_context(other);
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

Element& Element::operator-=(const Element& other)
{
    require_same_context(other);
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

Element& Element::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_)
        v *= c;
    return *this;
}

Element operator*(const Element& a, const Element& b) { return multiply(a, b); }

bool operator==(const Element& a, const Element& b)
{
    if (a.ctx_ != b.ctx_ && (!a.ctx_ || !b.ctx_ || !(*a.ctx_ == *b.ctx_)))
        return false;
    return a.terms_ == b.terms_;
}

Element multiply(const Element& a, const Element& b)
{
    a.require_same_context(b);
    Element out(a.context());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            if (auto p = multiply(*a.context(), ma, mb))
                out.add_term(p->second, p->first > 0 ? Rational(ca * cb) : Rational(-ca * cb));
    return out;
}

Element power(const Element& a, int exponent)
{
    Element out = Element::scalar(a.context(), 1);
    for (int i = 0; i < exponent; ++i)
        out = multiply(out, a);
    return out;
}

std::string to_string(const Element& e)
{
    if (e.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : e.terms()) {
        Rational mag = abs(c);
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        if (m.is_unit()) {
            out += to_string(mag);
        } else {
            if (mag != 1)
                out += to_string(mag) + "*";
            out += to_string(*e.context(), m);
        }
    }
    return out;
}

// ------------------------------------------------------------------ parser

namespace {

class ExpressionParser {
public:
    ExpressionParser(std::string_view text, const Context& ctx) : text_(text), ctx_(ctx) {}

    Element parse()
    {
        Element result(ctx_);
        skip_ws();
        if (at_end())
            fail("empty expression");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (!first) {
                char c = text_[pos_];
                if (c != '+' && c != '-')
                    fail("expected '+' or '-'");
                sign = c == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            }
            // Optional unary sign on the term itself.
            while (!at_end() && (text_[pos_] == '+' || text_[pos_] == '-')) {
                if (text_[pos_] == '-')
                    sign = -sign;
                ++pos_;
                skip_ws();
            }
            parse_term(result, sign);
            first = false;
            skip_ws();
        }
        return result;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ParseError(msg + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'",
                         static_cast<long>(pos_));
    }

    std::string_view take_while(auto pred)
    {
        std::size_t start = pos_;
        while (!at_end() && pred(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    void parse_term(Element& acc, int sign)
    {
        Rational coeff = sign;
        bool need_factor = true;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            std::size_t start = pos_;
            take_while([](unsigned char c) { return std::isdigit(c); });
            if (!at_end() && text_[pos_] == '/') {
                ++pos_;
                if (take_while([](unsigned char c) { return std::isdigit(c); }).empty())
                    fail("malformed rational");
            }
            try {
                coeff *= parse_rational(text_.substr(start, pos_ - start));
            } catch (const ParseError&) {
                pos_ = start;
                fail("malformed rational");
            }
            skip_ws();
            if (!at_end() && text_[pos_] == '*') {
                ++pos_;
                skip_ws();
            } else {
                need_factor = false;
            }
        }
        Monomial m = Monomial::unit(ctx_->size());
        int msign = 1;
        bool zero = false;
        while (need_factor) {
            std::size_t start = pos_;
            auto name = take_while([](unsigned char c) { return std::isalnum(c) || c == '_'; });
            if (name.empty() || !is_identifier(name)) {
                pos_ = start;
                fail("expected generator name");
            }
            auto idx = ctx_->find(name);
            if (!idx) {
                pos_ = start;
                fail("unknown generator '" + std::string(name) + "'");
            }
            skip_ws();
            int e = 1;
            if (!at_end() && text_[pos_] == '^') {
                ++pos_;
                skip_ws();
                auto digits = take_while([](unsigned char c) { return std::isdigit(c); });
                if (digits.empty())
                    fail("expected exponent");
                e = std::stoi(std::string(digits));
                if (e < 1)
                    fail("exponent must be positive");
                skip_ws();
            }
            if ((*ctx_)[*idx].odd() && e > 1) {
                pos_ = start;
                fail("odd generator '" + std::string(name) + "' raised to power " + std::to_string(e));
            }
            std::vector<int> ex(ctx_->size(), 0);
            ex[*idx] = e;
            Monomial factor(std::move(ex), e * (*ctx_)[*idx].degree);
            if (auto p = multiply(*ctx_, m, factor)) {
                msign *= p->first;
                m = std::move(p->second);
            } else {
                zero = true;  // repeated odd factor, e.g. "x*x"
            }
            if (!at_end() && text_[pos_] == '*') {
                ++pos_;
                skip_ws();
            } else {
                need_factor = false;
            }
        }
        if (!zero)
            acc.add_term(m, msign * coeff);
    }

    std::string_view text_;
    const Context& ctx_;
    std::size_t pos_ = 0;
};

}  // namespace

Element parse_element(std::string_view text, const Context& ctx)
{
    return ExpressionParser(text, ctx).parse();
}

}  // namespace rht
