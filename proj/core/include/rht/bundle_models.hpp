#pragma once

// Models of classifying spaces, Borel associated bundles with homogeneous
// fiber, Stiefel manifolds V_m(R^{m+k}) and framed bundles over a manifold.

#include "rht/cohomology.hpp"
#include "rht/morphism.hpp"
#include "rht/relative_model.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rht {

/// H*(BSO(n); Q) as a free CDGA with zero differential: p_1..p_r for
/// n = 2r+1; p_1..p_{r-1} and the Euler class e_n for n = 2r.
struct BsoModel {
    int n = 0;
    FreeCdga algebra;
};

BsoModel bso_model(int n);

struct PontryaginClass {
    int index = 0;
    BasisVector cocycle;
    friend bool operator==(const PontryaginClass&, const PontryaginClass&) = default;
};

/// A finite CDGA model of a simply connected closed m-manifold together with
/// representatives of its Pontryagin classes p_i(tau_M), 4i <= m.
class ManifoldModel {
public:
    /// Throws ValidationError for 4i > m, duplicate indices, cocycles that
    /// are not closed or not of degree 4i, or H^1 != 0.
    ManifoldModel(std::string name, int dimension, std::shared_ptr<const FiniteCdga> model,
                  std::vector<PontryaginClass> pontryagin);

    const std::string& name() const noexcept { return name_; }
    int dimension() const noexcept { return dim_; }
    const FiniteCdga& model() const noexcept { return *model_; }
    const std::shared_ptr<const FiniteCdga>& model_ptr() const noexcept { return model_; }
    const std::vector<PontryaginClass>& pontryagin() const noexcept { return classes_; }
    /// p_i(tau_M), zero when not supplied.
    BasisVector pontryagin(int i) const;

    /// Same manifold with all Pontryagin classes replaced.
    ManifoldModel with_pontryagin(std::vector<PontryaginClass> classes) const;

    friend bool operator==(const ManifoldModel& a, const ManifoldModel& b);

private:
    std::string name_;
    int dim_ = 0;
    std::shared_ptr<const FiniteCdga> model_;
    std::vector<PontryaginClass> classes_;
};

/// Relative model of P x_G H/K -> B:
///   D|_A = d_A, D|_{V_K} = 0, D(sv) = phi(Bmu*(v)) - Bnu*(v).
/// `phi` goes from the free algebra LV_G (base Q) to the base A (no fiber).
/// `bmu[i]` lives over LV_G and `bnu[i]` over LV_K with degree |sv_i| + 1.
RelativeModel borel_assoc_model(const CdgaMorphism& phi, const std::vector<Generator>& vk,
                                const std::vector<Generator>& svh, const std::vector<Element>& bmu,
                                const std::vector<Element>& bnu, std::string label = "borel");

/// Minimal model of V_m(R^{m+k}); generator names x<i> (degree 4i-1), e<k>
/// and ebar<m+k-1>. Throws ValidationError for m < 1 or k < 2.
FreeCdga stiefel_model(int m, int k);

/// Framed bundle model over M with Stiefel fiber.
RelativeModel framed_bundle_model(const ManifoldModel& manifold, int k);

struct UnreducedFramedModel {
    std::shared_ptr<const RelativeModel> unreduced;
    std::shared_ptr<const RelativeModel> reduced;
    CdgaMorphism reduction;  // unreduced -> reduced
};

/// Model A (x) L(x_1.., [ebar], [e_k], b_1..) straight from the Borel
/// construction, with Dx_i = p_i - b_i below the Stiefel range, together with
/// the reduction onto framed_bundle_model. The reduction kills x_i and sends
/// b_i to p_i(tau_M). Throws ChainMapError if the reduction fails to commute
/// with the differentials; when `verify_cutoff >= 0` it also throws
/// ValidationError unless the reduction is a quasi-isomorphism up to that degree.
UnreducedFramedModel unreduced_framed_model(const ManifoldModel& manifold, int k, int verify_cutoff = -1);

struct KunnethCertificate {
    int cutoff = 0;
    std::vector<long> total;
    std::vector<long> base;
    std::vector<long> fiber;
    std::vector<long> expected;  // convolution of base and fiber
    bool passed = false;
};

struct TrivialityVerdict {
    enum class Kind { Trivial, NotEstablished };
    Kind kind = Kind::NotEstablished;
    /// Indices i in the hypothesis range with [p_i(tau_M)] != 0.
    std::vector<int> obstructions;
    std::optional<KunnethCertificate> certificate;
};

/// Smallest Pontryagin index that must vanish: s+1 for k = 2s+1, s for k = 2s.
int pontryagin_threshold(int k);

/// Trivial when [p_i] = 0 for every i at or above the threshold and the
/// Kunneth certificate holds up to `cutoff`; otherwise not established.
TrivialityVerdict is_rationally_trivial(const ManifoldModel& manifold, int k, int cutoff = 20);

}  // namespace rht
