#include <doctest.h>

#include <cmath>

#include "bidisc/catalog.hpp"
#include "bidisc/random.hpp"
#include "bidisc/slope.hpp"

using namespace bidisc;

namespace {

const Complex I_{0.0, 1.0};

SlopePair half_pair(Complex u = 1.0) {
    SlopePair sp;
    sp.Y = CMatrix::Constant(1, 1, 0.5);
    sp.u_tau = CVector::Constant(1, u);
    return sp;
}

Complex fav_h(Complex z) { return -2.0 / (1.0 + z); }

std::vector<Complex> upper_grid() {
    std::vector<Complex> g;
    for (int j = 0; j < 10; ++j)
        for (int k = 0; k < 10; ++k) g.emplace_back(-5.0 + 10.0 * j / 9.0, std::pow(10.0, -2.0 + 4.0 * k / 9.0));
    return g;
}

} // namespace

TEST_CASE("slope_eval examples") {
    CHECK(std::abs(slope_eval(half_pair(), 1.0) + 1.0) < 1e-15);
    CHECK(std::abs(slope_eval(half_pair(), I_) - Complex(-1.0, 1.0)) < 1e-15);
    CHECK(std::abs(slope_eval(half_pair(0.0), Complex(3.0, 2.0))) == 0.0);
    CHECK_THROWS_AS(slope_eval(half_pair(), -1.0), DomainError);
    CHECK_THROWS_AS(slope_eval(half_pair(), 0.0), DomainError);
}

TEST_CASE("slope_eval agrees with the dense resolvent") {
    Rng rng(41);
    for (int k = 0; k < 20; ++k) {
        SlopePair sp;
        sp.Y = random_positive_contraction(rng, 4);
        sp.u_tau = random_gaussian_matrix(rng, 4, 1);
        const Complex z = random_upper_half_plane(rng);
        const CMatrix R = CMatrix::Identity(4, 4) - sp.Y + z * sp.Y;
        const Complex dense = -sp.u_tau.dot(R.partialPivLu().solve(sp.u_tau));
        CHECK(std::abs(slope_eval(sp, z) - dense) <= 1e-10 * std::max(1.0, std::abs(dense)));
    }
}

TEST_CASE("directional_derivative_formula examples") {
    CHECK(std::abs(directional_derivative_formula(1.0, CHI, {1.0, 1.0}, fav_h) + 1.0) < 1e-15);
    CHECK(std::abs(directional_derivative_formula(1.0, CHI, {1.0, 2.0}, fav_h) + 4.0 / 3.0) < 1e-15);
    CHECK(std::abs(directional_derivative_analytic(1.0, CHI, {1.0, 2.0}, half_pair()) + 4.0 / 3.0) < 1e-15);
    CHECK(std::abs(directional_derivative_analytic(1.0, CHI, {1.0, 2.0}, half_pair(0.0))) == 0.0);
    // closed form -2 d1 d2 / (d1 + d2) for the favourite
    Rng rng(42);
    for (int k = 0; k < 20; ++k) {
        const Direction d = random_direction(rng, CHI);
        CHECK(std::abs(directional_derivative_formula(1.0, CHI, d, fav_h) + 2.0 * d.d1 * d.d2 / (d.d1 + d.d2)) < 1e-13);
    }
}

TEST_CASE("directional_derivative_numeric examples") {
    const auto a = directional_derivative_numeric(favourite_evaluator(), CHI, {1.0, 1.0});
    CHECK(std::abs(a.value + 1.0) < 1e-6);
    const auto b = directional_derivative_numeric(favourite_evaluator(), CHI, {2.0, 1.0});
    CHECK(std::abs(b.value + 4.0 / 3.0) < 1e-6);
    const Evaluator l1 = [](const BidiscPoint& l) { return l.l1; };
    CHECK(std::abs(directional_derivative_numeric(l1, CHI, {1.0, 1.0}, 1.0).value + 1.0) < 1e-12);
}

TEST_CASE("numeric and analytic derivatives agree for desingularized random colligations") {
    Rng rng(43);
    for (int k = 0; k < 10; ++k) {
        const TorusPoint tau = random_torus_point(rng);
        const Colligation c = random_kernel_colligation(rng, 3, 1, tau);
        const Desingularization d = desingularize(c, tau);
        const Complex phi_tau = nontangential_value(evaluator(c), ApproachPath::radial(tau)).value;
        const Direction delta = random_direction(rng, tau);
        const Complex an = directional_derivative_analytic(phi_tau, tau, delta, slope_pair(d.g));
        const Complex nu = directional_derivative_numeric(evaluator(c), tau, delta, phi_tau).value;
        CHECK(std::abs(an - nu) <= 1e-5 * std::max(1.0, std::abs(an)));
    }
}

TEST_CASE("pick_check examples") {
    const auto g = upper_grid();
    const auto p = pick_check(fav_h, g);
    CHECK(p.pass);
    CHECK(p.min_im_h > 0.0);
    CHECK(p.min_im_zh > 0.0);
    CHECK(std::abs(fav_h(I_).imag() - 1.0) < 1e-15);

    std::vector<Complex> g2 = g;
    g2.push_back(std::polar(1.0, M_PI / 4));
    const auto z = pick_check([](Complex w) { return w; }, g2);
    CHECK_FALSE(z.pass);
    CHECK(z.min_im_zh < 0.0);

    const auto c = pick_check([](Complex) { return Complex(-1.0); }, g);
    CHECK(c.pass);
    CHECK(c.min_im_h == 0.0);
}

TEST_CASE("slope_real_axis_check examples") {
    const auto r = slope_real_axis_check(half_pair(), {0.1, 1.0, 10.0});
    CHECK(r.pass);
    CHECK(std::abs(r.values[0] + 2.0 / 1.1) < 1e-15);
    CHECK(std::abs(r.values[1] + 1.0) < 1e-15);
    CHECK(std::abs(r.values[2] + 2.0 / 11.0) < 1e-15);

    const auto z = slope_real_axis_check(half_pair(0.0), {0.5, 2.0});
    CHECK(z.pass);
    for (Complex v : z.values) CHECK(v == Complex(0.0));

    Rng rng(44);
    std::vector<double> xs;
    for (int k = 0; k < 20; ++k) xs.push_back(std::pow(10.0, -3.0 + 6.0 * k / 19.0));
    for (int k = 0; k < 10; ++k) {
        SlopePair sp;
        sp.Y = random_positive_contraction(rng, 5);
        sp.u_tau = random_gaussian_matrix(rng, 5, 1);
        CHECK(slope_real_axis_check(sp, xs).pass);
    }
}

TEST_CASE("slope functions of random pairs are of slope type") {
    Rng rng(45);
    const auto g = upper_grid();
    for (int k = 0; k < 20; ++k) {
        SlopePair sp;
        sp.Y = random_positive_contraction(rng, 1 + k % 5);
        sp.u_tau = random_gaussian_matrix(rng, sp.Y.rows(), 1);
        CHECK(pick_check(slope_evaluator(sp), g).pass);
    }
}

TEST_CASE("SlopePair validation") {
    SlopePair sp = half_pair();
    sp.Y(0, 0) = 1.5;
    CHECK_THROWS_AS(sp.validate(), InvalidInput);
}
