#pragma once

#include "rht/linalg.hpp"
#include "rht/morphism.hpp"
#include "rht/relative_model.hpp"

#include <string>
#include <vector>

namespace rht {

enum class RankMethod { Sparse, Dense };

struct CohomologyOptions {
    RankMethod method = RankMethod::Sparse;
    bool representatives = false;
    /// Worker threads for the per-degree ranks; 0 picks hardware concurrency.
    unsigned threads = 0;
};

/// Betti numbers b_0..b_cutoff. Computing them needs chain bases up to
/// degree cutoff + 1.
struct BettiTable {
    int cutoff = 0;
    std::vector<long> dims;
    /// Cocycles spanning a complement of the coboundaries, per degree; empty
    /// unless requested.
    std::vector<std::vector<TensorElement>> representatives;

    long operator[](std::size_t n) const { return dims.at(n); }
    /// Degrees with nonzero Betti number.
    std::vector<int> support() const;
    friend bool operator==(const BettiTable& a, const BettiTable& b) { return a.cutoff == b.cutoff && a.dims == b.dims; }
};

/// Matrix of D: C^n -> C^{n+1} in the bases returned by basis_of_degree.
SparseMatrix differential_matrix(const RelativeModel& model, int n);

/// Coordinates of a homogeneous degree-n element in basis_of_degree(n).
SparseVector coordinates(const RelativeModel& model, const TensorElement& e, int n);

BettiTable cohomology(const RelativeModel& model, int cutoff, const CohomologyOptions& options = {});
BettiTable cohomology(const FreeCdga& model, int cutoff, const CohomologyOptions& options = {});
BettiTable cohomology(const FiniteCdga& model, int cutoff, const CohomologyOptions& options = {});

/// Truncated convolution of two Betti sequences (Kunneth).
std::vector<long> convolve(const std::vector<long>& a, const std::vector<long>& b, int cutoff);

/// True iff v is a coboundary in degree n (v must be a cocycle of degree n).
bool is_exact(const RelativeModel& model, const TensorElement& v, int n);
bool is_exact(const FiniteCdga& model, const BasisVector& v);

struct DSquaredViolation {
    std::string generator;
    std::string residue;
};

/// Generators g with |g| + 2 <= cutoff and D(D(g)) != 0.
std::vector<DSquaredViolation> check_d_squared(const FreeCdga& model, int cutoff);
std::vector<DSquaredViolation> check_d_squared(const RelativeModel& model, int cutoff);

struct QuasiIsoDegree {
    int degree = 0;
    long source_dim = 0;
    long target_dim = 0;
    bool injective = false;
    bool iso() const noexcept { return injective && source_dim == target_dim; }
};

struct QuasiIsoReport {
    bool quasi_iso = false;
    std::vector<QuasiIsoDegree> degrees;
};

/// Checks that f induces isomorphisms H^n for n <= cutoff: equal dimensions
/// and injectivity on representatives. Throws ChainMapError naming the first
/// failing generator if f does not commute with the differentials.
QuasiIsoReport is_quasi_iso(const CdgaMorphism& f, int cutoff, const CohomologyOptions& options = {});

}  // namespace rht
