#include <doctest.h>

#include <cmath>

#include "bidisc/catalog.hpp"
#include "bidisc/desingularize.hpp"
#include "bidisc/random.hpp"
#include "bidisc/slope.hpp"

using namespace bidisc;

namespace {

CMatrix scalar(double y) {
    CMatrix m(1, 1);
    m(0, 0) = y;
    return m;
}

// 1 - (1 - l1)(1 - l2)/(l1 - l2) [log(1 - l2) - log(1 - l1)]
Complex log_closed_form(const BidiscPoint& l) {
    return 1.0 - (1.0 - l.l1) * (1.0 - l.l2) / (l.l1 - l.l2) * (std::log(1.0 - l.l2) - std::log(1.0 - l.l1));
}

void check_invariants(const Desingularization& d, double bound) {
    CHECK_NOTHROW(d.g.validate());
    CHECK(d.report.gamma_perp_residual < bound);
    CHECK(d.report.beta_perp_residual < bound);
    CHECK(d.report.u_tau_perp_residual < bound);
    CHECK(d.report.chiga_residual < bound);
    CHECK(d.report.decomp_residual < bound);
    CHECK(d.report.Q_unit_kernel_sigma > 0.0);
}

} // namespace

TEST_CASE("favourite at chi reproduces the slope -2/(1+z)") {
    const Desingularization d = desingularize(favourite_colligation(), CHI);
    check_invariants(d, 1e-9);
    const SlopePair sp = slope_pair(d.g);
    for (Complex z : {Complex(1.0), Complex(0.0, 1.0), Complex(2.0, 1.0), Complex(0.1), Complex(10.0)})
        CHECK(std::abs(slope_eval(sp, z) + 2.0 / (1.0 + z)) < 1e-9);
}

TEST_CASE("lambda1 at chi has Y = 1") {
    const Desingularization d = desingularize(lambda1_colligation(), CHI);
    REQUIRE(d.g.dim() == 1);
    CHECK(std::abs(d.g.Y(0, 0) - 1.0) < 1e-14);
    const CMatrix I = eval_I(d.g, {0.3, -0.7});
    CHECK(std::abs(I(0, 0) - 0.3) < 1e-14);
}

TEST_CASE("engineered two-dimensional kernel") {
    Rng rng(31);
    for (int k = 0; k < 5; ++k) {
        const TorusPoint tau = random_torus_point(rng);
        const Colligation c = random_kernel_colligation(rng, 3, 2, tau);
        const Desingularization d = desingularize(c, tau);
        CHECK(d.report.dim_N == 2);
        CHECK(d.report.dim_M == 3);
        check_invariants(d, 1e-9);
        double worst = 0.0;
        for (int j = 0; j < 100; ++j) {
            const BidiscPoint p = random_interior_point(rng);
            worst = std::max(worst, std::abs(eval_phi_gen(d.g, p) - eval_phi(c, p)));
        }
        CHECK(worst < 1e-9);
    }
}

TEST_CASE("eval_I examples") {
    Rng rng(32);
    for (int k = 0; k < 10; ++k) {
        const CMatrix Y = random_positive_contraction(rng, 3);
        const TorusPoint tau = random_torus_point(rng);
        const double r = 0.05 + 0.9 * k / 10.0;
        const CMatrix I = eval_I(Y, tau, {r * tau.l1, r * tau.l2});
        CHECK((I - r * CMatrix::Identity(3, 3)).norm() < 1e-12);
    }
    CHECK(std::abs(eval_I(scalar(0.5), CHI, {0.5, 0.5})(0, 0) - 0.5) < 1e-15);

    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const BidiscPoint p = random_interior_point(rng);
        worst = std::max(worst, std::abs(eval_I(scalar(0.5), CHI, p)(0, 0) - favourite_phi(p)));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("eval_I is inner: I(lambda) contractive inside") {
    Rng rng(33);
    const CMatrix Y = random_positive_contraction(rng, 4);
    const TorusPoint tau = random_torus_point(rng);
    for (int k = 0; k < 100; ++k) CHECK(spectral_norm(eval_I(Y, tau, random_interior_point(rng))) <= 1 + 1e-12);
}

TEST_CASE("u_vector examples") {
    const Desingularization d = desingularize(favourite_colligation(), CHI);
    CHECK((u_vector(d.g, {0.0, 0.0}) - d.g.gamma).norm() < 1e-14);
    for (double r : {0.1, 0.5, 0.9, 0.999})
        CHECK(std::abs(u_vector(d.g, {r, r}).squaredNorm() - 1.0) < 1e-9);

    double prev = INFINITY;
    for (double t = 0.5; t > 1e-8; t /= 2) {
        const double dist = (u_vector(d.g, {1.0 - t, 1.0 - t}) - d.g.u_tau).norm();
        CHECK(dist <= prev + 1e-14);
        prev = dist;
    }
    CHECK(prev < 1e-6);
}

TEST_CASE("eval_phi_gen examples") {
    const Desingularization d = desingularize(favourite_colligation(), CHI);
    CHECK(std::abs(eval_phi_gen(d.g, {0.0, 0.0}) - d.g.a) < 1e-15);
    CHECK(std::abs(eval_phi_gen(d.g, {0.9, 0.9}) - 0.9) < 1e-10);
    Rng rng(34);
    double worst = 0.0, model = 0.0;
    for (int k = 0; k < 100; ++k) {
        const BidiscPoint p = random_interior_point(rng), q = random_interior_point(rng);
        worst = std::max(worst, std::abs(eval_phi_gen(d.g, p) - favourite_phi(p)));
        model = std::max(model, model_residual_gen(d.g, p, q));
    }
    CHECK(worst < 1e-9);
    CHECK(model < 1e-9);
}

TEST_CASE("lift_to_colligation round trip") {
    Rng rng(35);
    for (int k = 0; k < 5; ++k) {
        const TorusPoint tau = random_torus_point(rng);
        const Desingularization d0 = desingularize(random_kernel_colligation(rng, 3, 1, tau), tau);
        const Colligation lifted = lift_to_colligation(d0.g);
        CHECK_NOTHROW(lifted.validate());
        for (int j = 0; j < 20; ++j) {
            const BidiscPoint p = random_interior_point(rng);
            CHECK(std::abs(eval_phi(lifted, p) - eval_phi_gen(d0.g, p)) < 1e-9);
        }
    }
}

TEST_CASE("gamma with a kernel component raises the precondition error") {
    // For unitary L this cannot happen, so the colligation is corrupted on purpose.
    Rng rng(36);
    Colligation k = random_kernel_colligation(rng, 2, 1, CHI);
    const Desingularization d = desingularize(k, CHI);
    k.gamma += d.kernel_basis.col(0);
    CHECK_THROWS_AS(desingularize(k, CHI), PreconditionError);
}

TEST_CASE("quadrature against the logarithm closed form") {
    const BidiscPoint l{0.5, -0.5};
    const auto q = quadrature_log_check(10000, l);
    CHECK(std::abs(q.closed_form - log_closed_form(l)) < 1e-14);
    CHECK(q.error < 1e-3);

    const BidiscPoint m{0.3, -0.3};
    const double e3 = quadrature_log_check(1000, m).error, e4 = quadrature_log_check(10000, m).error;
    CHECK(e4 < e3);
    CHECK(e3 / e4 >= 10.0);

    CHECK_THROWS_AS(quadrature_log_check(100, {0.5, 0.5}), UseLimit);
}
