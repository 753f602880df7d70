#pragma once

// Standard manifold models and seeded random finite CDGAs for sweeps.

#include "rht/bundle_models.hpp"

#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace rht {

/// H*(S^n), class named s<n>, no Pontryagin classes. n >= 2.
ManifoldModel sphere_manifold(int n);

/// H*(CP^n) = Q[a]/a^{n+1} with basis a, a2, .., a<n>; p(CP^n) = (1+a^2)^{n+1}.
ManifoldModel complex_projective(int n);

/// Tensor product model with p(M x N) = p(M) p(N).
ManifoldModel product_manifold(const ManifoldModel& a, const ManifoldModel& b);

/// "S<n>", "CP<n>" or products such as "S2xS3". Throws ValidationError.
ManifoldModel named_manifold(std::string_view name);

/// Square-zero algebra 1, u, du with |u| = degree; quasi-isomorphic to Q.
FiniteCdga contractible_pair(int degree, std::string name = "c");

/// Re-expresses A in a random integer basis of each degree (same structure).
FiniteCdga change_basis(const FiniteCdga& A, std::mt19937& rng);

/// Tensor product of one to `max_pieces` formal pieces (spheres, truncated
/// polynomial algebras), optionally a contractible pair, then a random basis
/// change. Always simply connected.
FiniteCdga random_base(std::mt19937& rng, int max_pieces = 3);

/// Random closed element of the given degree (possibly zero).
BasisVector random_cocycle(const FiniteCdga& A, int degree, std::mt19937& rng);

}  // namespace rht
