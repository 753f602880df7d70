#pragma once

// Rational homotopy description of the components of Imm(M, R^{m+k}) for
// manifolds whose framed bundle is rationally trivial.

#include "rht/bundle_models.hpp"
#include "rht/mapping_spaces.hpp"
#include "rht/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rht {

enum class Connectivity { Connected, ComponentsIndexed };

/// Connected iff k >= m+1. Throws ValidationError for k < 2.
Connectivity connectivity_verdict(int m, int k);

struct HypothesisCheck {
    std::string name;
    std::string statement;
    bool passed = false;
    friend bool operator==(const HypothesisCheck&, const HypothesisCheck&) = default;
};

/// numerator / prod_j (1 - t^{denominator_j}).
struct RationalForm {
    std::vector<Integer> numerator;
    std::vector<int> denominator;
    friend bool operator==(const RationalForm&, const RationalForm&) = default;
};

enum class SphereStatus { ResolvedNull, Symbolic };

struct SphereFactor {
    int k = 0;
    SphereStatus status = SphereStatus::Symbolic;
    std::optional<FreeCdga> model;          // present iff resolved
    std::optional<RationalForm> rational;   // cohomology series of the model, when identified
    friend bool operator==(const SphereFactor&, const SphereFactor&) = default;
};

struct Growth {
    enum class Kind { Finite, Polynomial, Symbolic };
    Kind kind = Kind::Symbolic;
    int degree = 0;  // meaningful for Polynomial
    friend bool operator==(const Growth&, const Growth&) = default;
};

enum class SeriesScope { Total, EmPart };

struct ImmersionReport {
    std::string manifold;
    int dimension = 0;
    int k = 0;
    int max_degree = 0;
    std::vector<HypothesisCheck> hypotheses;
    bool hypotheses_passed = false;
    Connectivity connectivity = Connectivity::ComponentsIndexed;
    std::vector<EMFactor> em_factors;  // merged by degree, ascending
    std::optional<SphereFactor> sphere;
    std::optional<PoincareSeries> series;
    SeriesScope scope = SeriesScope::Total;
    std::optional<Growth> growth;

    bool symbolic() const noexcept { return sphere && sphere->status == SphereStatus::Symbolic; }
    friend bool operator==(const ImmersionReport&, const ImmersionReport&) = default;
};

/// Hypothesis check, factor list, series up to `max_degree`, connectivity and
/// growth. A failed Pontryagin hypothesis yields a report with
/// hypotheses_passed = false and nothing else filled in.
ImmersionReport immersion_components(const ManifoldModel& manifold, int k, int max_degree = 20);

/// Pole order at t = 1 of numerator / prod (1 - t^d).
int pole_order(const RationalForm& r);

/// Identifies the cohomology series of a free model as a rational function
/// with denominator prod over even generators, or nullopt if the numerator
/// does not stabilize below `max_cutoff`.
std::optional<RationalForm> rational_cohomology_series(const FreeCdga& model, int max_cutoff = 96);

/// Finite when the total count of even generators (even EM factors with
/// multiplicity plus the pole order of the sphere factor) is zero, else
/// polynomial of degree count - 1. Throws ValidationError for reports that
/// failed their hypotheses or carry an unidentified sphere factor.
Growth growth_degree(const ImmersionReport& report);

/// Series of the full description up to `top`, from factor data only.
PoincareSeries description_series(const ImmersionReport& report, int top);

struct GrowthCheck {
    bool bounded = false;    // b_j / j^d stays bounded
    bool unbounded = false;  // b_j / j^(d-1) grows
    bool passed() const noexcept { return bounded && unbounded; }
};

/// Numerical check of the growth class over degrees up to `top` (>= 200).
GrowthCheck check_growth(const ImmersionReport& report, int top = 200);

std::string to_string(Connectivity c);
std::string to_string(SphereStatus s);
std::string to_string(Growth::Kind g);
std::string to_string(SeriesScope s);

}  // namespace rht
