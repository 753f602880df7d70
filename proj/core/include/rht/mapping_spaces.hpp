#pragma once

// Mapping spaces out of a manifold M into Eilenberg-MacLane spaces and into
// even spheres (null component only).

#include "rht/cohomology.hpp"
#include "rht/morphism.hpp"

#include <optional>
#include <vector>

namespace rht {

/// K(Q^coefficient_dim, degree).
struct EMFactor {
    long coefficient_dim = 0;
    int degree = 0;
    friend bool operator==(const EMFactor&, const EMFactor&) = default;
};

/// Map(M, K(Q, n)) ~ prod_{1 <= q <= n} K(H^{n-q}(M), q); trivial factors
/// are omitted. Throws ValidationError when `betti` stops below degree n.
std::vector<EMFactor> em_mapping_space(const BettiTable& betti, int n);

/// dim H^n(M): the rank of the group of components of Map(M, K(Q, n)).
long em_component_rank(const BettiTable& betti, int n);

/// Odd spheres are rationally K(Q, k). Throws ValidationError for even k or k < 3.
std::vector<EMFactor> odd_sphere_mapping(const BettiTable& betti, int k);

/// Even-sphere model L(x, y), |x| = k, |y| = 2k-1, dy = x^2.
FreeCdga sphere_model(int k);

/// Model of the null component Map(M, S^k; const) from a finite model A of M:
/// generators x(a_u) of degree k-|a_u| and y(a_u) of degree 2k-1-|a_u|,
/// named u<deg> and v<deg> (suffixed by the basis name on collisions).
/// Degree-0 generators are set to zero, negative ones are dropped.
/// Throws ValidationError for odd k, k < 2, H^1(A) != 0, or D^2 != 0.
FreeCdga sphere_map_null_model(const FiniteCdga& A, int k);

struct SigmaNormalization {
    CdgaMorphism normalized;  // x, y -> 0
    BasisVector c;            // d c = sigma(x)
    BasisVector a;            // sigma(y) - c sigma(x), a cocycle; y' = y - a
};

/// Moves sigma: L(x, y) -> A to the map killing x and y by the change of
/// variables y' = y - a. The source must be the sphere model and the target
/// have no fiber generators. Throws ComponentObstruction if [sigma(x)] != 0.
SigmaNormalization sigma_normalize(const CdgaMorphism& sigma);

}  // namespace rht
