#pragma once

// Exact linear algebra over Q. The sparse eliminator is fraction-free (every
// column is scaled to a primitive integer vector and reduced with integer
// cross-multiplication); the dense eliminator works directly over Q and is
// kept as an independent cross-check.

#include "rht/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace rht {

using SparseVector = std::map<std::size_t, Rational>;

/// Column-major sparse matrix.
struct SparseMatrix {
    std::size_t rows = 0;
    std::vector<SparseVector> columns;

    std::size_t cols() const noexcept { return columns.size(); }
};

/// Rank by fraction-free sparse column reduction.
std::size_t sparse_rank(const SparseMatrix& m);

/// Rank by dense Gaussian elimination over Q.
std::size_t dense_rank(const SparseMatrix& m);

/// Basis of the right kernel (vectors indexed by column).
std::vector<SparseVector> kernel_basis(const SparseMatrix& m);

/// Some x with m x = b (free variables set to zero), or nullopt.
std::optional<SparseVector> solve(const SparseMatrix& m, const SparseVector& b);

/// Incrementally grown linear span with integer-primitive pivots.
class SpanBuilder {
public:
    /// Adds v; returns true iff v was independent of the current span.
    bool insert(const SparseVector& v);
    /// Membership test without modifying the span.
    bool contains(const SparseVector& v) const;
    std::size_t dimension() const noexcept { return basis_.size(); }

private:
    using IntVector = std::vector<std::pair<std::size_t, Integer>>;
    IntVector reduce(IntVector v) const;
    std::map<std::size_t, IntVector> basis_;  // pivot (largest index) -> vector
};

}  // namespace rht
