#include <doctest.h>

#include <cmath>

#include "bidisc/catalog.hpp"
#include "bidisc/colligation.hpp"
#include "bidisc/random.hpp"

using namespace bidisc;

TEST_CASE("eval_phi at the origin returns a") {
    Rng rng(1);
    for (int k = 0; k < 5; ++k) {
        const Colligation c = random_colligation(rng, 3);
        CHECK(std::abs(eval_phi(c, {0.0, 0.0}) - c.a) < 1e-15);
        CHECK((model_vector(c, {0.0, 0.0}) - c.gamma).norm() < 1e-15);
    }
}

TEST_CASE("fitted favourite colligation") {
    const Colligation c = favourite_colligation();
    CHECK_NOTHROW(c.validate());
    CHECK(std::abs(eval_phi(c, {0.5, 0.5}) - 0.5) < 1e-12);
    CHECK(std::abs(eval_phi(c, {0.9, 0.9}) - 0.9) < 1e-12);
    // ||u_lambda||^2 equals the Julia quotient, which is 1 on the diagonal.
    CHECK(std::abs(model_vector(c, {0.9, 0.9}).squaredNorm() - 1.0) < 1e-10);

    Rng rng(2);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const BidiscPoint p = random_interior_point(rng);
        worst = std::max(worst, std::abs(eval_phi(c, p) - favourite_phi(p)));
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("closed-form favourite model satisfies the model equation") {
    // Independent of the fit: u and P1 = diag(1, 0) plugged straight into the identity.
    Rng rng(9);
    for (int k = 0; k < 100; ++k) {
        const BidiscPoint l = random_interior_point(rng), m = random_interior_point(rng);
        const CVector ul = favourite_model_vector(l), um = favourite_model_vector(m);
        const Complex lhs = 1.0 - std::conj(favourite_phi(m)) * favourite_phi(l);
        const Complex rhs = (1.0 - std::conj(m.l1) * l.l1) * std::conj(um(0)) * ul(0) +
                            (1.0 - std::conj(m.l2) * l.l2) * std::conj(um(1)) * ul(1);
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("model_residual for unitary colligations and a scaled negative control") {
    Rng rng(4);
    const Colligation c = random_colligation(rng, 4);
    CHECK(model_residual(c, {0.0, 0.0}, {0.0, 0.0}) < 1e-14);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k)
        worst = std::max(worst, model_residual(c, random_interior_point(rng), random_interior_point(rng)));
    CHECK(worst < 1e-10);

    Colligation bad = c;
    bad.a *= 1.01;
    bad.beta *= 1.01;
    bad.gamma *= 1.01;
    bad.D *= 1.01;
    double big = 0.0;
    for (int k = 0; k < 20; ++k)
        big = std::max(big, model_residual(bad, random_interior_point(rng), random_interior_point(rng)));
    CHECK(big > 1e-3);
    CHECK_THROWS_AS(bad.validate(), InvalidInput);
}

TEST_CASE("model_vector solves the resolvent equation") {
    Rng rng(6);
    const Colligation c = random_colligation(rng, 5);
    for (int k = 0; k < 20; ++k) {
        const BidiscPoint p = random_interior_point(rng);
        const CVector u = model_vector(c, p);
        const CMatrix I = coordinate_operator(c.P1, p);
        CHECK(((CMatrix::Identity(5, 5) - c.D * I) * u - c.gamma).norm() < 1e-10);
    }
}

TEST_CASE("Schur class bound") {
    Rng rng(8);
    for (int k = 0; k < 20; ++k) {
        const Colligation c = random_colligation(rng, 1 + k % 5);
        for (int j = 0; j < 50; ++j) CHECK(std::abs(eval_phi(c, random_interior_point(rng, 0.999))) <= 1 + 1e-9);
    }
}

TEST_CASE("interior operations reject boundary points") {
    const Colligation c = lambda1_colligation();
    CHECK_THROWS_AS(eval_phi(c, {1.0, 0.0}), DomainError);
}

TEST_CASE("unitary_extension examples") {
    const CMatrix I2 = CMatrix::Identity(2, 2);
    CHECK((unitary_extension(I2, I2) - I2).norm() < 1e-14);

    CMatrix e1 = CMatrix::Zero(2, 1), e2 = CMatrix::Zero(2, 1);
    e1(0, 0) = 1.0;
    e2(1, 0) = 1.0;
    const CMatrix U = unitary_extension(e1, e2);
    CHECK(structure_check(U, StructureKind::unitary).pass);
    CHECK((U * e1 - e2).norm() < 1e-14);

    CMatrix f = e2 * 2.0;
    CHECK_THROWS_AS(unitary_extension(e1, f), NotAnIsometry);
}

TEST_CASE("unitary_extension pads unequal dimensions") {
    CMatrix d(1, 1), r(3, 1);
    d << 1.0;
    r << 0.6, 0.0, Complex(0.0, 0.8);
    const CMatrix U = unitary_extension(d, r);
    REQUIRE(U.rows() == 3);
    CHECK(structure_check(U, StructureKind::unitary).residual < 1e-12);
    CMatrix dp = CMatrix::Zero(3, 1);
    dp(0, 0) = 1.0;
    CHECK((U * dp - r).norm() < 1e-14);
}

TEST_CASE("lurking isometry round trip from a known colligation") {
    Rng rng(12);
    const Colligation c = random_colligation(rng, 3);
    std::vector<BidiscPoint> pts;
    std::vector<Complex> phis;
    CMatrix U(3, 20);
    for (int k = 0; k < 20; ++k) {
        pts.push_back(random_interior_point(rng, 0.8));
        phis.push_back(eval_phi(c, pts.back()));
        U.col(k) = model_vector(c, pts.back());
    }
    const Colligation f = fit_colligation(pts, phis, U, c.P1);
    CHECK(structure_check(f.L(), StructureKind::unitary).residual < 1e-9);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const BidiscPoint p = random_interior_point(rng);
        worst = std::max(worst, std::abs(eval_phi(f, p) - eval_phi(c, p)));
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("relocate and change_basis act on the function as documented") {
    Rng rng(13);
    const Colligation c = random_colligation(rng, 3);
    const TorusPoint tau = random_torus_point(rng);
    const Complex omega = std::polar(1.0, 0.7);
    const Colligation r = relocate(c, tau, omega);
    const Colligation b = change_basis(c, random_unitary(rng, 3));
    CHECK_NOTHROW(r.validate());
    CHECK_NOTHROW(b.validate());
    for (int k = 0; k < 20; ++k) {
        const BidiscPoint p = random_interior_point(rng);
        const BidiscPoint q{std::conj(tau.l1) * p.l1, std::conj(tau.l2) * p.l2};
        CHECK(std::abs(eval_phi(r, p) - omega * eval_phi(c, q)) < 1e-12);
        CHECK(std::abs(eval_phi(b, p) - eval_phi(c, p)) < 1e-12);
    }
}
