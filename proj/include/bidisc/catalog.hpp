#pragma once

// Closed-form test functions and their realizations.

#include "bidisc/colligation.hpp"

namespace bidisc {

// (l1/2 + l2/2 - l1 l2) / (1 - l1/2 - l2/2), singular at chi with value 1.
Complex favourite_phi(const BidiscPoint& lambda);
Evaluator favourite_evaluator();

// Model vector of a two-dimensional Agler model of the favourite with P1 = diag(1, 0):
// u = (1 - l2, 1 - l1) / (sqrt(2) (1 - l1/2 - l2/2)).
CVector favourite_model_vector(const BidiscPoint& lambda);

// Deterministic interior sample points used for fitting.
std::vector<BidiscPoint> fitting_grid(int count = 20);

// Colligation of the favourite obtained from the lurking isometry on fitting_grid samples.
Colligation favourite_colligation(const Tolerances& tol = {});

// phi(lambda) = lambda1: a = 0, beta = gamma = 1, D = 0, P1 = 1.
Colligation lambda1_colligation();

} // namespace bidisc
