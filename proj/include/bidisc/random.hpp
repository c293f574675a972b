#pragma once

// Seeded generators for property tests and the verify command.

#include <random>

#include "bidisc/colligation.hpp"
#include "bidisc/nev2d.hpp"
#include "bidisc/representations.hpp"

namespace bidisc {

using Rng = std::mt19937_64;

Complex random_gaussian(Rng& rng);
CMatrix random_gaussian_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols);
// Haar-distributed unitary from QR of a Gaussian matrix.
CMatrix random_unitary(Rng& rng, Eigen::Index n);
// Orthogonal projection onto a random subspace of dimension rank.
CMatrix random_projection(Rng& rng, Eigen::Index n, Eigen::Index rank);
// Random Hermitian Y with spectrum in [0, 1].
CMatrix random_positive_contraction(Rng& rng, Eigen::Index n);

BidiscPoint random_interior_point(Rng& rng, double rmax = 0.95);
TorusPoint random_torus_point(Rng& rng);
// Direction in H(tau) with moderate aperture.
Direction random_direction(Rng& rng, const TorusPoint& tau);
Complex random_upper_half_plane(Rng& rng);

// Unitary colligation on C^(m+k) for which ker(1 - D tau) has dimension exactly k
// (generically) and gamma is in its orthocomplement, so tau is a singular carapoint.
Colligation random_kernel_colligation(Rng& rng, Eigen::Index m, Eigen::Index k, const TorusPoint& tau);

// Random unitary colligation with a random projection P1.
Colligation random_colligation(Rng& rng, Eigen::Index n);

DiscreteMeasure01 random_measure(Rng& rng, int max_atoms = 5);
TwoVarNevRep random_rep(Rng& rng, Eigen::Index m);

} // namespace bidisc
