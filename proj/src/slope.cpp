#include "bidisc/slope.hpp"

#include <cmath>
#include <limits>

namespace bidisc {

void SlopePair::validate(const Tolerances& tol) const {
    if (Y.rows() != Y.cols() || u_tau.size() != Y.rows())
        throw InvalidInput("slope pair: inconsistent dimensions");
    if (!all_finite(Y) || !all_finite(u_tau)) throw InvalidInput("slope pair: non-finite entry");
    if (!structure_check(Y, StructureKind::positive_contraction, tol).pass)
        throw InvalidInput("slope pair: Y is not a positive contraction");
}

SlopePair slope_pair(const GeneralizedRealization& g) { return {g.Y, g.u_tau}; }

namespace {

void require_off_cut(Complex z, const char* where) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw InvalidInput(std::string(where) + ": non-finite argument");
    if (z.imag() == 0.0 && z.real() <= 0.0)
        throw DomainError(std::string(where) + ": z lies on the cut (-inf, 0]");
}

} // namespace

Complex slope_eval(const SlopePair& s, Complex z) {
    require_off_cut(z, "slope_eval");
    const Eigen::Index m = s.Y.rows();
    if (m == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<CMatrix> es((s.Y + s.Y.adjoint()) / 2.0);
    const CVector c = es.eigenvectors().adjoint() * s.u_tau;
    Complex h{0.0, 0.0};
    for (Eigen::Index k = 0; k < m; ++k) {
        const double y = std::min(1.0, std::max(0.0, es.eigenvalues()(k)));
        h -= std::norm(c(k)) / (1.0 - y + z * y);
    }
    return h;
}

Evaluator1 slope_evaluator(const SlopePair& s) {
    return [s](Complex z) { return slope_eval(s, z); };
}

Complex directional_derivative_formula(Complex phi_tau, const TorusPoint& tau, const Direction& delta,
                                       const Evaluator1& h) {
    require_in_H(tau, delta, "directional derivative");
    const Complex w2 = std::conj(tau.l2) * delta.d2;
    const Complex w1 = std::conj(tau.l1) * delta.d1;
    return phi_tau * w2 * h(w2 / w1);
}

Complex directional_derivative_analytic(Complex phi_tau, const TorusPoint& tau, const Direction& delta,
                                        const SlopePair& s) {
    return directional_derivative_formula(phi_tau, tau, delta, slope_evaluator(s));
}

ComplexEstimate directional_derivative_numeric(const Evaluator& phi, const TorusPoint& tau,
                                               const Direction& delta, Complex phi_tau,
                                               const ExtrapolationOptions& opt) {
    const ApproachPath path = ApproachPath::make(tau, delta);
    auto q = [&](double t) { return (phi(along(tau, delta, t)) - phi_tau) / t; };
    return extrapolate_limit(q, path.steps, opt);
}

ComplexEstimate directional_derivative_numeric(const Evaluator& phi, const TorusPoint& tau,
                                               const Direction& delta, const ExtrapolationOptions& opt) {
    const ApproachPath path = ApproachPath::make(tau, delta);
    const ComplexEstimate v = nontangential_value(phi, path, {1e-13, 3, 1e6});
    return directional_derivative_numeric(phi, tau, delta, v.value, opt);
}

PickReport pick_check(const Evaluator1& h, const std::vector<Complex>& grid, double floor) {
    PickReport r;
    r.min_im_h = std::numeric_limits<double>::infinity();
    r.min_im_zh = std::numeric_limits<double>::infinity();
    for (Complex z : grid) {
        if (!(z.imag() > 0.0)) throw InvalidInput("pick_check: grid point not in the upper half-plane");
        const Complex v = h(z);
        r.min_im_h = std::min(r.min_im_h, v.imag());
        r.min_im_zh = std::min(r.min_im_zh, (-z * v).imag());
    }
    r.pass = r.min_im_h >= floor && r.min_im_zh >= floor;
    return r;
}

RealAxisReport slope_real_axis_check(const SlopePair& s, const std::vector<double>& xs) {
    RealAxisReport r;
    for (double x : xs) {
        if (!(x > 0.0)) throw InvalidInput("slope_real_axis_check: points must be positive");
        const Complex v = slope_eval(s, x);
        r.values.push_back(v);
        r.max_abs_im = std::max(r.max_abs_im, std::abs(v.imag()));
    }
    r.pass = r.max_abs_im < 1e-12;
    return r;
}

} // namespace bidisc
