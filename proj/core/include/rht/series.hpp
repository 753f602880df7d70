#pragma once

// Truncated Poincare series with exact integer coefficients.

#include "rht/cohomology.hpp"

#include <vector>

namespace rht {

class PoincareSeries {
public:
    PoincareSeries() = default;
    /// Zero series b_0 = .. = b_N = 0.
    explicit PoincareSeries(int cutoff);
    /// Pads or truncates `coeffs` to cutoff + 1 entries.
    PoincareSeries(std::vector<Integer> coeffs, int cutoff);

    static PoincareSeries one(int cutoff);
    static PoincareSeries from_betti(const BettiTable& betti);

    int cutoff() const noexcept { return cutoff_; }
    const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
    const Integer& operator[](std::size_t n) const { return coeffs_.at(n); }
    bool is_polynomial_below_cutoff() const;  // last coefficient zero

    PoincareSeries truncate(int cutoff) const;

    friend bool operator==(const PoincareSeries&, const PoincareSeries&) = default;

private:
    int cutoff_ = 0;
    std::vector<Integer> coeffs_{Integer(0)};
};

/// Cohomology series of K(Q^multiplicity, n).
PoincareSeries em_series(int n, long multiplicity, int cutoff);

/// Truncated product; the cutoff is the smaller of the two.
PoincareSeries series_product(const PoincareSeries& a, const PoincareSeries& b);

/// numerator / prod_j (1 - t^{d_j}), expanded to `cutoff`.
PoincareSeries rational_series(const std::vector<Integer>& numerator, const std::vector<int>& denominator,
                               int cutoff);

/// a * prod_j (1 - t^{d_j}), truncated at a's cutoff.
PoincareSeries multiply_by_denominator(const PoincareSeries& a, const std::vector<int>& denominator);

}  // namespace rht
