#include "rht/finite_cdga.hpp"

#include "rht/error.hpp"

#include <set>

namespace rht {

namespace {

void axpy(BasisVector& acc, const Rational& c, const BasisVector& v)
{
    if (c == 0)
        return;
    for (const auto& [i, q] : v) {
        auto [it, fresh] = acc.emplace(i, c * q);
        if (!fresh) {
            it->second += c * q;
            if (it->second == 0)
                acc.erase(it);
        }
    }
}

BasisVector cleaned(BasisVector v)
{
    std::erase_if(v, [](const auto& kv) { return kv.second == 0; });
    return v;
}

}  // namespace

FiniteCdga::FiniteCdga(std::string label, std::vector<BasisElement> basis, std::vector<Product> products,
                       std::vector<std::pair<std::size_t, BasisVector>> differential)
    : label_(std::move(label))
{
    basis_.push_back({"1", 0});
    std::vector<Generator> gens;
    for (auto& b : basis) {
        if (b.degree < 1)
            throw ValidationError("basis element '" + b.name + "' must have positive degree");
        gens.push_back({b.name, b.degree});
        basis_.push_back(std::move(b));
        top_degree_ = std::max(top_degree_, basis_.back().degree);
    }
    names_ = make_context(std::move(gens));  // validates names

    const std::size_t n = basis_.size();
    table_.assign(n, std::vector<BasisVector>(n));
    for (std::size_t i = 0; i < n; ++i) {
        table_[0][i] = BasisVector{{i, Rational(1)}};
        table_[i][0] = BasisVector{{i, Rational(1)}};
    }
    std::vector<std::vector<bool>> given(n, std::vector<bool>(n, false));
    for (auto& p : products) {
        if (p.left == 0 || p.right == 0 || p.left >= n || p.right >= n)
            throw ValidationError("product index out of range in '" + label_ + "'");
        BasisVector v = cleaned(std::move(p.value));
        for (const auto& [k, q] : v) {
            if (k >= n || basis_[k].degree != basis_[p.left].degree + basis_[p.right].degree)
                throw ValidationError("product " + basis_[p.left].name + "*" + basis_[p.right].name +
                                      " has wrong degree in '" + label_ + "'");
        }
        if (given[p.left][p.right] && table_[p.left][p.right] != v)
            throw ValidationError("conflicting products for " + basis_[p.left].name + "*" + basis_[p.right].name);
        table_[p.left][p.right] = v;
        given[p.left][p.right] = true;
        const bool odd = (basis_[p.left].degree * basis_[p.right].degree) % 2 != 0;
        BasisVector swapped = v;
        if (odd)
            for (auto& [k, q] : swapped)
                q = -q;
        if (given[p.right][p.left]) {
            if (table_[p.right][p.left] != swapped)
                throw ValidationError("product table of '" + label_ + "' is not graded-commutative at " +
                                      basis_[p.left].name + "," + basis_[p.right].name);
        } else {
            table_[p.right][p.left] = std::move(swapped);
            given[p.right][p.left] = true;
        }
    }

    diff_.assign(n, {});
    for (auto& [i, v] : differential) {
        if (i == 0 || i >= n)
            throw ValidationError("differential index out of range in '" + label_ + "'");
        diff_[i] = cleaned(std::move(v));
        for (const auto& [k, q] : diff_[i])
            if (k >= n || basis_[k].degree != basis_[i].degree + 1)
                throw ValidationError("d(" + basis_[i].name + ") has wrong degree in '" + label_ + "'");
    }
    validate();
}

FiniteCdga FiniteCdga::unit() { return FiniteCdga("Q", {}, {}, {}); }

void FiniteCdga::validate() const
{
    const std::size_t n = basis_.size();
    for (std::size_t i = 1; i < n; ++i) {
        if (!differentiate(diff_[i]).empty())
            throw ValidationError("d^2 != 0 on '" + basis_[i].name + "' in '" + label_ + "'");
        if (basis_[i].degree % 2 != 0 && !table_[i][i].empty())
            throw ValidationError("odd element '" + basis_[i].name + "' squares to nonzero in '" + label_ + "'");
    }
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j) {
            // Leibniz: d(ij) = d(i) j + (-1)^{|i|} i d(j)
            BasisVector lhs = differentiate(table_[i][j]);
            BasisVector rhs = multiply(diff_[i], BasisVector{{j, Rational(1)}});
            Rational sign = basis_[i].degree % 2 ? -1 : 1;
            axpy(rhs, sign, multiply(BasisVector{{i, Rational(1)}}, diff_[j]));
            if (lhs != rhs)
                throw ValidationError("differential of '" + label_ + "' is not a derivation at " + basis_[i].name +
                                      "*" + basis_[j].name);
            for (std::size_t k = 1; k < n; ++k) {
                if (basis_[i].degree + basis_[j].degree + basis_[k].degree > top_degree_)
                    continue;
                BasisVector ij_k = multiply(table_[i][j], BasisVector{{k, Rational(1)}});
                BasisVector i_jk = multiply(BasisVector{{i, Rational(1)}}, table_[j][k]);
                if (ij_k != i_jk)
                    throw ValidationError("product of '" + label_ + "' is not associative at " + basis_[i].name +
                                          "," + basis_[j].name + "," + basis_[k].name);
            }
        }
}

std::vector<std::size_t> FiniteCdga::indices_of_degree(int n) const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].degree == n)
            out.push_back(i);
    return out;
}

BasisVector FiniteCdga::multiply(const BasisVector& a, const BasisVector& b) const
{
    BasisVector out;
    for (const auto& [i, p] : a)
        for (const auto& [j, q] : b)
            axpy(out, p * q, table_[i][j]);
    return out;
}

BasisVector FiniteCdga::differentiate(const BasisVector& a) const
{
    BasisVector out;
    for (const auto& [i, p] : a)
        axpy(out, p, diff_[i]);
    return out;
}

std::optional<int> FiniteCdga::degree_of(const BasisVector& v) const
{
    std::optional<int> deg;
    for (const auto& [i, q] : v) {
        if (q == 0)
            continue;
        if (deg && *deg != basis_[i].degree)
            throw DegreeError("element " + to_string(v) + " is not homogeneous");
        deg = basis_[i].degree;
    }
    return deg;
}

BasisVector FiniteCdga::evaluate(const Element& e) const
{
    BasisVector out;
    for (const auto& [m, c] : e.terms()) {
        BasisVector acc{{0, Rational(1)}};
        for (std::size_t g = 0; g < names_->size(); ++g)
            for (int k = 0; k < m.exponent(g); ++k)
                acc = multiply(acc, BasisVector{{g + 1, Rational(1)}});
        axpy(out, c, acc);
    }
    return out;
}

BasisVector FiniteCdga::parse(std::string_view text) const { return evaluate(parse_element(text, names_)); }

std::string FiniteCdga::to_string(const BasisVector& v) const
{
    Element e(names_);
    for (const auto& [i, q] : v) {
        if (i == 0)
            e.add_term(Monomial::unit(names_->size()), q);
        else
            e.add_term(Monomial::generator(*names_, i - 1), q);
    }
    return rht::to_string(e);
}

std::vector<FiniteCdga::Product> FiniteCdga::product_list() const
{
    std::vector<Product> out;
    for (std::size_t i = 1; i < basis_.size(); ++i)
        for (std::size_t j = i; j < basis_.size(); ++j)
            if (!table_[i][j].empty())
                out.push_back({i, j, table_[i][j]});
    return out;
}

std::vector<std::pair<std::size_t, BasisVector>> FiniteCdga::differential_list() const
{
    std::vector<std::pair<std::size_t, BasisVector>> out;
    for (std::size_t i = 1; i < basis_.size(); ++i)
        if (!diff_[i].empty())
            out.emplace_back(i, diff_[i]);
    return out;
}

bool operator==(const FiniteCdga& a, const FiniteCdga& b)
{
    return a.label_ == b.label_ && a.basis_ == b.basis_ && a.table_ == b.table_ && a.diff_ == b.diff_;
}

FiniteCdga tensor(const FiniteCdga& a, const FiniteCdga& b)
{
    const std::size_t na = a.dimension(), nb = b.dimension();
    auto index = [nb](std::size_t i, std::size_t j) { return i * nb + j; };
    // Full index i*nb+j; the listed basis skips (0,0).
    std::vector<BasisElement> basis;
    std::set<std::string> used;
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j) {
            if (i == 0 && j == 0)
                continue;
            std::string name = i == 0 ? b.basis(j).name : j == 0 ? a.basis(i).name
                                                                   : a.basis(i).name + "_" + b.basis(j).name;
            while (!used.insert(name).second)
                name += "_";
            basis.push_back({name, a.degree(i) + b.degree(j)});
        }
    auto lift = [&](std::size_t i, std::size_t j) { return index(i, j); };
    auto sign = [](int p) { return p % 2 ? Rational(-1) : Rational(1); };

    std::vector<FiniteCdga::Product> products;
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t i2 = 0; i2 < na; ++i2)
                for (std::size_t j2 = 0; j2 < nb; ++j2) {
                    if ((i == 0 && j == 0) || (i2 == 0 && j2 == 0))
                        continue;
                    if (lift(i, j) > lift(i2, j2))
                        continue;
                    // (a_i b_j)(a_i2 b_j2) = (-1)^{|b_j||a_i2|} a_i a_i2 (x) b_j b_j2
                    const auto& pa = a.product(i, i2);
                    const auto& pb = b.product(j, j2);
                    BasisVector v;
                    Rational s = sign(b.degree(j) * a.degree(i2));
                    for (const auto& [u, p] : pa)
                        for (const auto& [w, q] : pb)
                            v[lift(u, w)] += s * p * q;
                    std::erase_if(v, [](const auto& kv) { return kv.second == 0; });
                    if (!v.empty())
                        products.push_back({lift(i, j), lift(i2, j2), std::move(v)});
                }
    std::vector<std::pair<std::size_t, BasisVector>> diff;
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j) {
            if (i == 0 && j == 0)
                continue;
            BasisVector v;
            for (const auto& [u, p] : a.d(i))
                v[lift(u, j)] += p;
            Rational s = sign(a.degree(i));
            for (const auto& [w, q] : b.d(j))
                v[lift(i, w)] += s * q;
            std::erase_if(v, [](const auto& kv) { return kv.second == 0; });
            if (!v.empty())
                diff.emplace_back(lift(i, j), std::move(v));
        }
    return FiniteCdga(a.label() + "(x)" + b.label(), std::move(basis), std::move(products), std::move(diff));
}

}  // namespace rht
