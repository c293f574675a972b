#include "bidisc/random.hpp"

#include <cmath>
#include <numbers>

namespace bidisc {

Complex random_gaussian(Rng& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    const double re = n(rng);
    const double im = n(rng);
    return {re, im};
}

CMatrix random_gaussian_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
    CMatrix A(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i) A(i, j) = random_gaussian(rng);
    return A;
}

CMatrix random_unitary(Rng& rng, Eigen::Index n) {
    const CMatrix A = random_gaussian_matrix(rng, n, n);
    Eigen::HouseholderQR<CMatrix> qr(A);
    CMatrix Q = qr.householderQ();
    const CMatrix R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < n; ++j) {
        const Complex d = R(j, j);
        if (std::abs(d) > 0) Q.col(j) *= d / std::abs(d);
    }
    return Q;
}

CMatrix random_projection(Rng& rng, Eigen::Index n, Eigen::Index rank) {
    const CMatrix U = random_unitary(rng, n);
    return U.leftCols(rank) * U.leftCols(rank).adjoint();
}

CMatrix random_positive_contraction(Rng& rng, Eigen::Index n) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const CMatrix U = random_unitary(rng, n);
    Eigen::VectorXd ev(n);
    for (Eigen::Index i = 0; i < n; ++i) ev(i) = u(rng);
    CMatrix Y = U * ev.asDiagonal() * U.adjoint();
    return (Y + Y.adjoint()) / 2.0;
}

BidiscPoint random_interior_point(Rng& rng, double rmax) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    auto one = [&] {
        const double r = rmax * std::sqrt(u(rng));
        return std::polar(r, 2.0 * std::numbers::pi * u(rng));
    };
    const Complex a = one();
    const Complex b = one();
    return {a, b};
}

TorusPoint random_torus_point(Rng& rng) {
    std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
    const double a = u(rng);
    const double b = u(rng);
    return {std::polar(1.0, a), std::polar(1.0, b)};
}

Direction random_direction(Rng& rng, const TorusPoint& tau) {
    // delta_j = tau_j r_j e^{i theta_j} with |theta_j| < 1.2 < pi/2.
    std::uniform_real_distribution<double> r(0.3, 3.0), th(-1.2, 1.2);
    const double r1 = r(rng), t1 = th(rng), r2 = r(rng), t2 = th(rng);
    return {tau.l1 * std::polar(r1, t1), tau.l2 * std::polar(r2, t2)};
}

Complex random_upper_half_plane(Rng& rng) {
    std::uniform_real_distribution<double> x(-5.0, 5.0), ly(-3.0, 1.0);
    const double re = x(rng);
    const double im = std::pow(10.0, ly(rng));
    return {re, im};
}

Colligation random_kernel_colligation(Rng& rng, Eigen::Index m, Eigen::Index k, const TorusPoint& tau) {
    const Eigen::Index n = m + k;
    // Small unitary carrying (a, beta, gamma, Q) on C + C^m.
    const CMatrix L0 = random_unitary(rng, m + 1);
    const CMatrix W = random_unitary(rng, n);
    std::uniform_int_distribution<Eigen::Index> rk(1, n - 1 > 0 ? n - 1 : 1);
    const Eigen::Index r = n > 1 ? rk(rng) : 1;
    Colligation c;
    c.P1 = random_projection(rng, n, r);
    const CMatrix T = coordinate_operator(c.P1, tau);
    CMatrix blk = CMatrix::Identity(n, n);
    blk.topLeftCorner(m, m) = L0.block(1, 1, m, m);
    const CMatrix DT = W * blk * W.adjoint();
    c.D = DT * T.adjoint();
    c.a = L0(0, 0);
    CVector g = CVector::Zero(n), b = CVector::Zero(n);
    g.head(m) = L0.block(1, 0, m, 1);
    b.head(m) = L0.block(0, 1, 1, m).adjoint();
    c.gamma = W * g;
    c.beta = T * (W * b);
    return c;
}

Colligation random_colligation(Rng& rng, Eigen::Index n) {
    const CMatrix L = random_unitary(rng, n + 1);
    std::uniform_int_distribution<Eigen::Index> rk(0, n);
    Colligation c;
    c.a = L(0, 0);
    c.beta = L.block(0, 1, 1, n).adjoint();
    c.gamma = L.block(1, 0, n, 1);
    c.D = L.block(1, 1, n, n);
    c.P1 = random_projection(rng, n, rk(rng));
    return c;
}

DiscreteMeasure01 random_measure(Rng& rng, int max_atoms) {
    std::uniform_int_distribution<int> na(1, max_atoms);
    std::uniform_real_distribution<double> s(0.0, 1.0), w(0.05, 2.0), coin(0.0, 1.0);
    const int n = na(rng);
    std::vector<Atom01> raw;
    for (int i = 0; i < n; ++i) {
        double loc = s(rng);
        // Exercise the endpoint atoms now and then.
        const double c = coin(rng);
        if (c < 0.1) loc = 0.0;
        else if (c < 0.2) loc = 1.0;
        raw.push_back({loc, w(rng)});
    }
    return DiscreteMeasure01::normalize(std::move(raw));
}

TwoVarNevRep random_rep(Rng& rng, Eigen::Index m) {
    std::normal_distribution<double> n(0.0, 1.0);
    TwoVarNevRep rep;
    rep.b = n(rng);
    rep.alpha = random_gaussian_matrix(rng, m, 1);
    const CMatrix G = random_gaussian_matrix(rng, m, m);
    rep.B = (G + G.adjoint()) / 2.0;
    rep.Y = random_positive_contraction(rng, m);
    return rep;
}

} // namespace bidisc
