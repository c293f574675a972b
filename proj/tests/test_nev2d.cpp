#include <doctest.h>

#include <cmath>

#include "bidisc/catalog.hpp"
#include "bidisc/nev2d.hpp"
#include "bidisc/random.hpp"

using namespace bidisc;

namespace {

const Complex I_{0.0, 1.0};

TwoVarNevRep simple_rep() {
    TwoVarNevRep r;
    r.b = 0.0;
    r.alpha = CVector::Ones(1);
    r.B = CMatrix::Zero(1, 1);
    r.Y = CMatrix::Constant(1, 1, 0.5);
    return r;
}

Complex minus_two_over_sum(const HalfPlanePoint& z) { return -2.0 / (z.z1 + z.z2); }

// i (1 + l)/(1 - l) coordinatewise
HalfPlanePoint cayley(const BidiscPoint& l) {
    return {I_ * (1.0 + l.l1) / (1.0 - l.l1), I_ * (1.0 + l.l2) / (1.0 - l.l2)};
}

HalfPlanePoint random_pi2(Rng& rng) { return {random_upper_half_plane(rng), random_upper_half_plane(rng)}; }

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

} // namespace

TEST_CASE("eval_h2 examples") {
    const TwoVarNevRep r = simple_rep();
    CHECK(std::abs(eval_h2(r, {I_, I_}) - I_) < 1e-15);
    for (double y : {0.5, 2.0, 100.0}) {
        const Complex h = eval_h2(r, {I_ * y, I_ * y});
        CHECK(std::abs(h - I_ / y) < 1e-15);
        CHECK(std::abs(y * h.imag() - 1.0) < 1e-14);
    }
    TwoVarNevRep c = simple_rep();
    c.b = 2.5;
    c.alpha.setZero();
    CHECK(std::abs(eval_h2(c, {Complex(1.0, 3.0), Complex(-2.0, 0.1)}) - 2.5) < 1e-15);
}

TEST_CASE("eval_h2 agrees with -2/(z1+z2) and a dense solve") {
    Rng rng(71);
    for (int k = 0; k < 100; ++k) {
        const HalfPlanePoint z = random_pi2(rng);
        CHECK(rel(eval_h2(simple_rep(), z), minus_two_over_sum(z)) < 1e-13);
    }
    for (int k = 0; k < 20; ++k) {
        const TwoVarNevRep r = random_rep(rng, 3);
        const HalfPlanePoint z = random_pi2(rng);
        const CMatrix A = r.B + z.z1 * r.Y + z.z2 * (CMatrix::Identity(3, 3) - r.Y);
        const Complex dense = r.b - r.alpha.dot(A.partialPivLu().solve(r.alpha));
        CHECK(rel(eval_h2(r, z), dense) < 1e-10);
    }
}

TEST_CASE("carapoint_at_infinity examples") {
    const auto a = carapoint_at_infinity(minus_two_over_sum);
    CHECK(a.finite);
    CHECK(std::abs(a.limit - 1.0) < 1e-6);
    CHECK(std::abs(a.value) < 1e-6);

    const auto b = carapoint_at_infinity([](const HalfPlanePoint& z) { return (z.z1 + z.z2) / 2.0; });
    CHECK_FALSE(b.finite);

    const auto c = carapoint_at_infinity([](const HalfPlanePoint&) { return Complex(-0.75); });
    CHECK(c.finite);
    CHECK(std::abs(c.limit) < 1e-12);
    CHECK(std::abs(c.value + 0.75) < 1e-12);
}

TEST_CASE("Cayley maps") {
    const HalfPlanePoint z = to_halfplane({0.0, 0.0});
    CHECK(std::abs(z.z1 - I_) < 1e-15);
    CHECK(std::abs(z.z2 - I_) < 1e-15);
    const BidiscPoint l = to_bidisc({I_, I_});
    CHECK(std::abs(l.l1) < 1e-15);
    CHECK(std::abs(l.l2) < 1e-15);

    Rng rng(72);
    const Evaluator2 fav_h = pick_from_schur(favourite_evaluator());
    for (int k = 0; k < 1000; ++k) {
        const BidiscPoint p = random_interior_point(rng);
        const HalfPlanePoint w = cayley(p);
        CHECK(std::abs(to_halfplane(p).z1 - w.z1) <= 1e-12 * std::abs(w.z1));
        const BidiscPoint back = to_bidisc(to_halfplane(p));
        CHECK(std::abs(back.l1 - p.l1) < 1e-14);
        CHECK(std::abs(back.l2 - p.l2) < 1e-14);
        const HalfPlanePoint zz = random_pi2(rng);
        const Complex h = fav_h(zz), want = (zz.z1 + zz.z2) / 2.0;
        CHECK(rel(h, want) < 1e-9);
    }
    const Complex phi = 0.3 - 0.4 * I_;
    CHECK(std::abs(schur_value_from_pick(pick_value_from_schur(phi)) - phi) < 1e-15);

    const Evaluator phi_m = schur_from_pick(minus_two_over_sum);
    const auto v = nontangential_value(phi_m, ApproachPath::radial(CHI));
    CHECK(std::abs(v.value + 1.0) < 1e-8);
}

TEST_CASE("rep_from_schur recovers -2/(z1+z2)") {
    const GeneralizedRealization g0 = generalized_from_rep(simple_rep());
    // pass through a plain colligation so the inverse starts from desingularized data
    Rng rng(73);
    const Colligation c0 = lift_to_colligation(g0);
    const Colligation c = change_basis(c0, random_unitary(rng, c0.dim()));
    const Desingularization d = desingularize(c, CHI);
    const TwoVarNevRep r = rep_from_schur(d.g);
    CHECK(std::abs(r.b) < 1e-10);
    CHECK(std::abs(r.alpha.squaredNorm() - 1.0) < 1e-10);
    for (int k = 0; k < 50; ++k) {
        const HalfPlanePoint z = random_pi2(rng);
        CHECK(rel(eval_h2(r, z), minus_two_over_sum(z)) < 1e-8);
    }
}

TEST_CASE("rep_from_schur obstruction for the favourite") {
    const Desingularization d = desingularize(favourite_colligation(), CHI);
    CHECK_THROWS_AS(rep_from_schur(d.g), ObstructionError);
    try {
        rep_from_schur(d.g);
    } catch (const ObstructionError& e) {
        CHECK(std::string(e.what()).find("phi(chi) != 1") != std::string::npos);
    }
}

TEST_CASE("rep_from_schur on a zero-dimensional model gives the constant") {
    for (double theta : {M_PI, M_PI / 2, 2.0}) {
        GeneralizedRealization g;
        g.a = std::polar(1.0, theta);
        g.beta = CVector(0);
        g.gamma = CVector(0);
        g.u_tau = CVector(0);
        g.Q = CMatrix(0, 0);
        g.Y = CMatrix(0, 0);
        const TwoVarNevRep r = rep_from_schur(g);
        const Complex want = I_ * (1.0 + g.a) / (1.0 - g.a);
        CHECK(std::abs(want.imag()) < 1e-15);
        CHECK(std::abs(eval_h2(r, {I_, Complex(2.0, 1.0)}) - want) < 1e-12);
    }
}

TEST_CASE("rep_from_schur requires tau = chi") {
    GeneralizedRealization g = generalized_from_rep(simple_rep());
    g.tau = {-1.0, 1.0};
    CHECK_THROWS_AS(rep_from_schur(g), PreconditionError);
}

TEST_CASE("random reps: Pick class, carapoint at infinity, equivalence chain, round trip") {
    Rng rng(74);
    for (int m = 0; m < 10; ++m) {
        const TwoVarNevRep r = random_rep(rng, 1 + m % 4);
        CHECK_NOTHROW(r.validate());
        const Evaluator2 h = evaluator(r);
        for (int k = 0; k < 100; ++k) CHECK(h(random_pi2(rng)).imag() >= -1e-12);

        const auto inf = carapoint_at_infinity(h);
        CHECK(inf.finite);
        CHECK(std::abs(inf.limit - r.alpha.squaredNorm()) <= 1e-6 * std::max(1.0, r.alpha.squaredNorm()));

        const Evaluator phi = schur_from_pick(h);
        const auto lim = radial_liminf(phi, ApproachPath::radial(CHI));
        CHECK_FALSE(lim.report.diverged);
        CHECK(std::abs(nontangential_value(phi, ApproachPath::radial(CHI)).value - 1.0) > 1e-6);

        const Colligation c = change_basis(lift_to_colligation(generalized_from_rep(r)),
                                           random_unitary(rng, 2 * r.dim()));
        const TwoVarNevRep back = rep_from_schur(desingularize(c, CHI).g);
        for (const auto& z : rep_verification_grid()) CHECK(rel(eval_h2(back, z), h(z)) < 1e-7);
    }
}

TEST_CASE("favourite fails all four conditions together") {
    const Evaluator2 h = pick_from_schur(favourite_evaluator());
    CHECK_FALSE(carapoint_at_infinity(h).finite);
    CHECK(std::abs(nontangential_value(favourite_evaluator(), ApproachPath::radial(CHI)).value - 1.0) < 1e-8);
    CHECK_THROWS_AS(rep_from_schur(desingularize(favourite_colligation(), CHI).g), ObstructionError);
}
