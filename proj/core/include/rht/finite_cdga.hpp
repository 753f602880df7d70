#pragma once

#include "rht/gca.hpp"
#include "rht/linalg.hpp"

#include <memory>
#include <string>
#include <tuple>
#include <vector>

namespace rht {

struct BasisElement {
    std::string name;
    int degree = 0;
    friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Coordinates over the basis of a FiniteCdga; index 0 is the unit.
using BasisVector = SparseVector;

/// Finite-dimensional CDGA presented by a basis, structure constants and a
/// differential matrix. The unit is implicit: index 0, name "1", degree 0;
/// the listed basis elements get indices 1..n and must have positive degree.
class FiniteCdga {
public:
    struct Product {
        std::size_t left = 0, right = 0;  // indices >= 1
        BasisVector value;
    };

    /// Products not listed are zero; listing only one of (u,v) and (v,u)
    /// is enough, the other follows from graded commutativity. Throws
    /// ValidationError when the data is not a CDGA (degrees, d^2, Leibniz,
    /// commutativity, associativity).
    FiniteCdga(std::string label, std::vector<BasisElement> basis, std::vector<Product> products,
               std::vector<std::pair<std::size_t, BasisVector>> differential);

    /// The ground field Q in degree 0.
    static FiniteCdga unit();

    const std::string& label() const noexcept { return label_; }
    std::size_t dimension() const noexcept { return basis_.size(); }
    const BasisElement& basis(std::size_t i) const { return basis_.at(i); }
    const std::vector<BasisElement>& basis() const noexcept { return basis_; }
    int degree(std::size_t i) const { return basis_.at(i).degree; }
    int top_degree() const noexcept { return top_degree_; }
    std::vector<std::size_t> indices_of_degree(int n) const;

    /// Structure constants of basis(i) * basis(j).
    const BasisVector& product(std::size_t i, std::size_t j) const { return table_[i][j]; }
    const BasisVector& d(std::size_t i) const { return diff_[i]; }

    BasisVector multiply(const BasisVector& a, const BasisVector& b) const;
    BasisVector differentiate(const BasisVector& a) const;
    /// Degree of a nonzero homogeneous vector; throws DegreeError otherwise.
    std::optional<int> degree_of(const BasisVector& v) const;

    /// Generators named after the positive basis, used to parse expressions.
    const Context& names() const noexcept { return names_; }
    /// Evaluates a polynomial in the basis names through the multiplication.
    BasisVector evaluate(const Element& e) const;
    BasisVector parse(std::string_view text) const;
    std::string to_string(const BasisVector& v) const;

    /// Listed products (one per unordered nonzero pair, left <= right).
    std::vector<Product> product_list() const;
    std::vector<std::pair<std::size_t, BasisVector>> differential_list() const;

    friend bool operator==(const FiniteCdga& a, const FiniteCdga& b);

private:
    void validate() const;

    std::string label_;
    std::vector<BasisElement> basis_;
    std::vector<std::vector<BasisVector>> table_;
    std::vector<BasisVector> diff_;
    Context names_;
    int top_degree_ = 0;
};

/// Tensor product A (x) B; basis pairs ordered by (a, b), names "a*b" are
/// replaced by "<a>_<b>" identifiers, unit pairs keep the other factor's name.
FiniteCdga tensor(const FiniteCdga& a, const FiniteCdga& b);

}  // namespace rht
