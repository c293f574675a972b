#include "bidisc/synthesis.hpp"

#include <cmath>

#include "bidisc/boundary.hpp"
#include "bidisc/slope.hpp"

namespace bidisc {

void SynthesizedSchur::validate() const {
    nu.validate();
    require_torus(tau, "synthesized function");
    if (std::abs(std::abs(omega) - 1.0) > 1e-9) throw InvalidInput("synthesized function: |omega| must be 1");
}

Complex herglotz_component(double s, const BidiscPoint& lambda) {
    const Complex l1 = lambda.l1, l2 = lambda.l2;
    if (s < 0.0 || s > 1.0) throw InvalidInput("herglotz_component: s must lie in [0, 1]");
    // For s in {0, 1} one factor cancels; dividing it out keeps values exact near l_j = 1.
    if (s == 1.0 || s == 0.0) {
        const Complex l = (s == 1.0) ? l1 : l2;
        if (l == -1.0) throw PoleError("herglotz_component: vanishing denominator");
        return (1.0 - l) / (1.0 + l);
    }
    const Complex den = s * (1.0 + l1) * (1.0 - l2) + (1.0 - s) * (1.0 + l2) * (1.0 - l1);
    if (den == 0.0) throw PoleError("herglotz_component: vanishing denominator");
    return (1.0 - l1) * (1.0 - l2) / den;
}

Complex herglotz_sum(const DiscreteMeasure01& nu, const BidiscPoint& lambda) {
    Complex f{0.0, 0.0};
    for (const auto& a : nu.atoms) f += a.w * herglotz_component(a.s, lambda);
    return f;
}

Complex synth_eval(const SynthesizedSchur& syn, const BidiscPoint& lambda) {
    require_interior(lambda, "synth_eval");
    const BidiscPoint mu{std::conj(syn.tau.l1) * lambda.l1, std::conj(syn.tau.l2) * lambda.l2};
    const Complex f = herglotz_sum(syn.nu, mu);
    if (f == -1.0) throw InternalInconsistency("synth_eval: f = -1 inside the bidisc");
    return syn.omega * (1.0 - f) / (1.0 + f);
}

Evaluator evaluator(const SynthesizedSchur& syn) {
    return [syn](const BidiscPoint& l) { return synth_eval(syn, l); };
}

Evaluator1 slope_function(const SynthesizedSchur& syn) {
    return [nu = syn.nu](Complex z) { return h_from_measure(nu, z); };
}

SlopeVerification verify_slope(const SynthesizedSchur& syn, const std::vector<Direction>& deltas, double tol) {
    SlopeVerification out;
    const Evaluator phi = evaluator(syn);
    const Evaluator1 h = slope_function(syn);
    for (const auto& d : deltas) {
        SlopeCheckEntry e;
        e.delta = d;
        const ComplexEstimate num = directional_derivative_numeric(phi, syn.tau, d);
        e.numeric = num.value;
        e.converged = num.report.converged;
        e.analytic = directional_derivative_formula(syn.omega, syn.tau, d, h);
        e.rel_error = std::abs(e.numeric - e.analytic) / std::max(1.0, std::abs(e.analytic));
        out.max_rel_error = std::max(out.max_rel_error, e.rel_error);
        out.entries.push_back(e);
    }
    out.pass = out.max_rel_error < tol;
    return out;
}

CarapointVerification verify_carapoint(const SynthesizedSchur& syn, double tol) {
    CarapointVerification out;
    const Evaluator phi = evaluator(syn);
    const ApproachPath path = ApproachPath::radial(syn.tau);
    const RealEstimate lim = radial_liminf(phi, path);
    const ComplexEstimate val = nontangential_value(phi, path);
    out.liminf = lim.value;
    out.liminf_converged = lim.report.converged;
    out.expected_liminf = syn.nu.total_mass();
    out.value = val.value;
    out.value_converged = val.report.converged;
    out.expected_value = syn.omega;
    out.pass = std::abs(out.liminf - out.expected_liminf) <= tol * std::max(1.0, out.expected_liminf) &&
               std::abs(out.value - out.expected_value) <= tol;
    return out;
}

Colligation synth_colligation(const SynthesizedSchur& syn) {
    syn.validate();
    const Eigen::Index m = static_cast<Eigen::Index>(syn.nu.atoms.size());
    TwoVarNevRep rep;
    rep.b = 0.0;
    rep.alpha = CVector::Zero(m);
    rep.B = CMatrix::Zero(m, m);
    rep.Y = CMatrix::Zero(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        rep.alpha(i) = std::sqrt(syn.nu.atoms[i].w);
        rep.Y(i, i) = syn.nu.atoms[i].s;
    }
    GeneralizedRealization g = generalized_from_rep(rep);
    g.a = -g.a;
    g.beta = -g.beta;
    return relocate(lift_to_colligation(g), syn.tau, syn.omega);
}

} // namespace bidisc
