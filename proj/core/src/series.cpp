#include "rht/series.hpp"

#include "rht/error.hpp"

#include <algorithm>

namespace rht {

PoincareSeries::PoincareSeries(int cutoff) : cutoff_(cutoff), coeffs_(static_cast<std::size_t>(cutoff + 1))
{
    if (cutoff < 0)
        throw ValidationError("series cutoff must be nonnegative");
}

PoincareSeries::PoincareSeries(std::vector<Integer> coeffs, int cutoff) : PoincareSeries(cutoff)
{
    for (std::size_t i = 0; i < coeffs.size() && i < coeffs_.size(); ++i)
        coeffs_[i] = std::move(coeffs[i]);
}

PoincareSeries PoincareSeries::one(int cutoff)
{
    PoincareSeries s(cutoff);
    s.coeffs_[0] = 1;
    return s;
}

PoincareSeries PoincareSeries::from_betti(const BettiTable& betti)
{
    std::vector<Integer> c;
    for (long b : betti.dims)
        c.emplace_back(b);
    return PoincareSeries(std::move(c), betti.cutoff);
}

bool PoincareSeries::is_polynomial_below_cutoff() const { return coeffs_.back() == 0; }

PoincareSeries PoincareSeries::truncate(int cutoff) const
{
    return PoincareSeries(coeffs_, std::min(cutoff, cutoff_));
}

PoincareSeries em_series(int n, long multiplicity, int cutoff)
{
    if (n < 1 || multiplicity < 0)
        throw ValidationError("em_series needs n >= 1 and multiplicity >= 0");
    PoincareSeries one = PoincareSeries::one(cutoff), out = one;
    std::vector<Integer> c(static_cast<std::size_t>(cutoff + 1));
    c[0] = 1;
    if (n % 2 == 1) {
        if (n <= cutoff)
            c[static_cast<std::size_t>(n)] = 1;
    } else {
        for (int j = 0; j <= cutoff; j += n)
            c[static_cast<std::size_t>(j)] = 1;
    }
    PoincareSeries factor(std::move(c), cutoff);
    for (long i = 0; i < multiplicity; ++i)
        out = series_product(out, factor);
    return out;
}

PoincareSeries series_product(const PoincareSeries& a, const PoincareSeries& b)
{
    const int n = std::min(a.cutoff(), b.cutoff());
    std::vector<Integer> c(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; i + j <= n; ++j)
            if (b[j] != 0)
                c[static_cast<std::size_t>(i + j)] += a[i] * b[j];
    }
    return PoincareSeries(std::move(c), n);
}

PoincareSeries rational_series(const std::vector<Integer>& numerator, const std::vector<int>& denominator, int cutoff)
{
    std::vector<Integer> c(static_cast<std::size_t>(cutoff + 1));
    for (std::size_t i = 0; i < numerator.size() && i < c.size(); ++i)
        c[i] = numerator[i];
    for (int d : denominator) {
        if (d < 1)
            throw ValidationError("denominator degrees must be positive");
        for (std::size_t i = static_cast<std::size_t>(d); i < c.size(); ++i)  // divide by 1 - t^d
            c[i] += c[i - static_cast<std::size_t>(d)];
    }
    return PoincareSeries(std::move(c), cutoff);
}

PoincareSeries multiply_by_denominator(const PoincareSeries& a, const std::vector<int>& denominator)
{
    std::vector<Integer> c = a.coefficients();
    for (int d : denominator)
        for (std::size_t i = c.size(); i-- > static_cast<std::size_t>(d);)
            c[i] -= c[i - static_cast<std::size_t>(d)];
    return PoincareSeries(std::move(c), a.cutoff());
}

}  // namespace rht
