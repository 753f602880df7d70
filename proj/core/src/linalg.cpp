#include "rht/linalg.hpp"

#include <algorithm>
#include <utility>

namespace rht {

namespace {

using IntVector = std::vector<std::pair<std::size_t, Integer>>;

IntVector to_primitive(const SparseVector& v)
{
    Integer l = 1;
    for (const auto& [i, q] : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    IntVector out;
    out.reserve(v.size());
    Integer g = 0;
    for (const auto& [i, q] : v) {
        if (q == 0)
            continue;
        Integer z = q.get_num() * (l / q.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
        out.emplace_back(i, std::move(z));
    }
    if (g > 1)
        for (auto& [i, z] : out)
            mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
    return out;
}

// a*x - b*y, merged on sorted indices.
IntVector combine(const Integer& a, const IntVector& x, const Integer& b, const IntVector& y)
{
    IntVector out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.emplace_back(x[i].first, a * x[i].second);
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.emplace_back(y[j].first, -b * y[j].second);
            ++j;
        } else {
            Integer z = a * x[i].second - b * y[j].second;
            if (z != 0)
                out.emplace_back(x[i].first, std::move(z));
            ++i;
            ++j;
        }
    }
    return out;
}

Integer content(const IntVector& v)
{
    Integer g = 0;
    for (const auto& [i, z] : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    return g;
}

void divide(IntVector& v, const Integer& g)
{
    for (auto& [i, z] : v)
        mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
}

// Reduces (col, track) against the pivots; returns when col is zero or has a
// fresh pivot. Track vectors follow the same integer row operations.
void reduce_tracked(IntVector& col, IntVector* track, const std::map<std::size_t, std::pair<IntVector, IntVector>>& pivots)
{
    while (!col.empty()) {
        auto it = pivots.find(col.back().first);
        if (it == pivots.end())
            return;
        const auto& [pcol, ptrack] = it->second;
        Integer a = pcol.back().second;
        Integer b = col.back().second;
        Integer g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        a /= g;
        b /= g;
        col = combine(a, col, b, pcol);
        if (track)
            *track = combine(a, *track, b, ptrack);
        Integer c = content(col);
        if (track) {
            Integer t = content(*track);
            mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.get_mpz_t());
        }
        if (c > 1) {
            divide(col, c);
            if (track)
                divide(*track, c);
        }
    }
}

}  // namespace

std::size_t sparse_rank(const SparseMatrix& m)
{
    std::map<std::size_t, std::pair<IntVector, IntVector>> pivots;
    for (const auto& c : m.columns) {
        IntVector col = to_primitive(c);
        reduce_tracked(col, nullptr, pivots);
        if (!col.empty()) {
            auto p = col.back().first;
            pivots.emplace(p, std::make_pair(std::move(col), IntVector{}));
        }
    }
    return pivots.size();
}

std::vector<SparseVector> kernel_basis(const SparseMatrix& m)
{
    // Combinations are tracked in terms of the primitive integer columns;
    // scale[j] converts back: primitive_j = scale[j] * column_j.
    std::map<std::size_t, std::pair<IntVector, IntVector>> pivots;
    std::vector<Rational> scale(m.columns.size(), Rational(1));
    std::vector<SparseVector> kernel;
    for (std::size_t j = 0; j < m.columns.size(); ++j) {
        IntVector col = to_primitive(m.columns[j]);
        if (col.empty()) {
            kernel.push_back(SparseVector{{j, Rational(1)}});
            continue;
        }
        scale[j] = Rational(col.front().second) / m.columns[j].at(col.front().first);
        IntVector track{{j, Integer(1)}};
        reduce_tracked(col, &track, pivots);
        if (col.empty()) {
            SparseVector v;
            for (const auto& [i, z] : track)
                v[i] = Rational(z) * scale[i];
            kernel.push_back(std::move(v));
        } else {
            auto p = col.back().first;
            pivots.emplace(p, std::make_pair(std::move(col), std::move(track)));
        }
    }
    return kernel;
}

std::size_t dense_rank(const SparseMatrix& m)
{
    const std::size_t rows = m.rows, cols = m.cols();
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
    for (std::size_t j = 0; j < cols; ++j)
        for (const auto& [i, q] : m.columns[j])
            a[i][j] = q;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][col] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (a[r][col] == 0)
                continue;
            Rational f = a[r][col] / a[rank][col];
            for (std::size_t c = col; c < cols; ++c)
                a[r][c] -= f * a[rank][c];
        }
        ++rank;
    }
    return rank;
}

std::optional<SparseVector> solve(const SparseMatrix& m, const SparseVector& b)
{
    const std::size_t rows = m.rows, cols = m.cols();
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1));
    for (std::size_t j = 0; j < cols; ++j)
        for (const auto& [i, q] : m.columns[j])
            a[i][j] = q;
    for (const auto& [i, q] : b) {
        if (i >= rows)
            return std::nullopt;
        a[i][cols] = q;
    }
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][col] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(a[piv], a[rank]);
        Rational inv = 1 / a[rank][col];
        for (std::size_t c = col; c <= cols; ++c)
            a[rank][c] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][col] == 0)
                continue;
            Rational f = a[r][col];
            for (std::size_t c = col; c <= cols; ++c)
                a[r][c] -= f * a[rank][c];
        }
        pivots.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r)
        if (a[r][cols] != 0)
            return std::nullopt;
    SparseVector x;
    for (std::size_t r = 0; r < rank; ++r)
        if (a[r][cols] != 0)
            x[pivots[r]] = a[r][cols];
    return x;
}

// ---------------------------------------------------------------- SpanBuilder

SpanBuilder::IntVector SpanBuilder::reduce(IntVector v) const
{
    while (!v.empty()) {
        auto it = basis_.find(v.back().first);
        if (it == basis_.end())
            break;
        const IntVector& p = it->second;
        Integer a = p.back().second, b = v.back().second, g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        a /= g;
        b /= g;
        v = combine(a, v, b, p);
        Integer c = content(v);
        if (c > 1)
            divide(v, c);
    }
    return v;
}

bool SpanBuilder::insert(const SparseVector& v)
{
    IntVector r = reduce(to_primitive(v));
    if (r.empty())
        return false;
    auto p = r.back().first;
    basis_.emplace(p, std::move(r));
    return true;
}

bool SpanBuilder::contains(const SparseVector& v) const { return reduce(to_primitive(v)).empty(); }

}  // namespace rht
