#include "bidisc/verify.hpp"

#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <sstream>

#include "bidisc/boundary.hpp"
#include "bidisc/desingularize.hpp"
#include "bidisc/nev2d.hpp"
#include "bidisc/random.hpp"
#include "bidisc/representations.hpp"
#include "bidisc/slope.hpp"
#include "bidisc/synthesis.hpp"

namespace bidisc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using Case = std::function<double(Rng&)>;

SuiteResult run_suite(const std::string& name, int n, std::uint64_t seed, double threshold, const Case& body) {
    SuiteResult r;
    r.name = name;
    r.threshold = threshold;
    // Suite-local stream so adding a suite does not perturb the others.
    std::uint64_t h = 1469598103934665603ull;   // FNV-1a of the suite name
    for (unsigned char ch : name) h = (h ^ ch) * 1099511628211ull;
    Rng rng(seed ^ h);
    for (int i = 0; i < n; ++i) {
        double res;
        try {
            res = body(rng);
        } catch (const std::exception&) {
            res = kInf;
        }
        ++r.cases;
        if (!(res <= threshold)) ++r.failures;
        if (!(res <= r.worst)) r.worst = res;
    }
    r.pass = r.failures == 0;
    return r;
}

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

double shortfall(double v) { return std::max(0.0, -v); }

// Torus point with |lambda_j - tau_j| > 0.1 in both coordinates.
TorusPoint torus_away(Rng& rng, const TorusPoint& tau) {
    for (;;) {
        const TorusPoint p = random_torus_point(rng);
        if (std::abs(p.l1 - tau.l1) > 0.1 && std::abs(p.l2 - tau.l2) > 0.1) return p;
    }
}

Colligation kernel_case(Rng& rng, TorusPoint& tau) {
    tau = random_torus_point(rng);
    return random_kernel_colligation(rng, uniform_int(rng, 1, 3), uniform_int(rng, 1, 2), tau);
}

} // namespace

std::vector<SuiteResult> run_verification(int n, std::uint64_t seed, const Tolerances& tol) {
    std::vector<SuiteResult> out;

    out.push_back(run_suite("linalg.null_space", n, seed, 1e-9, [&](Rng& rng) {
        const int dim = uniform_int(rng, 2, 6), r = uniform_int(rng, 1, dim - 1);
        const CMatrix A = random_gaussian_matrix(rng, dim, r) * random_gaussian_matrix(rng, r, dim);
        const CMatrix N = null_space(A, tol);
        if (N.cols() != dim - r) return kInf;
        const double orth = spectral_norm(N.adjoint() * N - CMatrix::Identity(N.cols(), N.cols()));
        return std::max(orth, spectral_norm(A * N) / spectral_norm(A));
    }));

    out.push_back(run_suite("linalg.min_norm_solve", n, seed, 1e-9, [&](Rng& rng) {
        const int dim = uniform_int(rng, 2, 6), r = uniform_int(rng, 1, dim);
        const CMatrix A = random_gaussian_matrix(rng, dim, r) * random_gaussian_matrix(rng, r, dim);
        const CVector x0 = random_gaussian_matrix(rng, dim, 1);
        const CVector b = A * x0;
        const CVector x = min_norm_solve(A, b, tol);
        return std::max((A * x - b).norm() / b.norm(), std::max(0.0, x.norm() - x0.norm()));
    }));

    out.push_back(run_suite("colligation.model_equation", n, seed, 1e-9, [&](Rng& rng) {
        const Colligation c = random_colligation(rng, uniform_int(rng, 1, 5));
        double worst = 0.0;
        for (int k = 0; k < 5; ++k) {
            const BidiscPoint l = random_interior_point(rng), m = random_interior_point(rng);
            worst = std::max(worst, model_residual(c, l, m, tol));
            worst = std::max(worst, std::abs(eval_phi(c, l, tol)) - 1.0);
        }
        return worst;
    }));

    out.push_back(run_suite("colligation.unitary_extension", n, seed, 1e-8, [&](Rng& rng) {
        const Colligation c = random_colligation(rng, uniform_int(rng, 1, 4));
        std::vector<BidiscPoint> pts;
        std::vector<Complex> phis;
        CMatrix U(c.dim(), 20);
        for (int k = 0; k < 20; ++k) {
            pts.push_back(random_interior_point(rng, 0.8));
            phis.push_back(eval_phi(c, pts.back(), tol));
            U.col(k) = model_vector(c, pts.back(), tol);
        }
        const Colligation f = fit_colligation(pts, phis, U, c.P1, tol);
        double worst = structure_check(f.L(), StructureKind::unitary, tol).residual;
        for (int k = 0; k < 20; ++k) {
            const BidiscPoint p = random_interior_point(rng);
            worst = std::max(worst, std::abs(eval_phi(f, p, tol) - eval_phi(c, p, tol)));
        }
        return worst;
    }));

    out.push_back(run_suite("desingularize.generalized_model", n, seed, 1e-9, [&](Rng& rng) {
        TorusPoint tau;
        const Colligation c = kernel_case(rng, tau);
        const Desingularization d = desingularize(c, tau, tol);
        d.g.validate(tol);
        const Eigen::Index m = d.g.dim();
        double worst = std::max(d.report.decomp_residual, d.report.u_tau_perp_residual);
        for (int k = 0; k < 5; ++k) {
            const BidiscPoint l = random_interior_point(rng), mu = random_interior_point(rng);
            worst = std::max(worst, model_residual_gen(d.g, l, mu, tol));
            worst = std::max(worst, std::abs(eval_phi_gen(d.g, l, tol) - eval_phi(c, l, tol)));
            const CMatrix I = eval_I(d.g, torus_away(rng, tau));
            worst = std::max(worst, spectral_norm(I.adjoint() * I - CMatrix::Identity(m, m)));
        }
        return worst;
    }));

    out.push_back(run_suite("desingularize.radial_identity", n, seed, 1e-12, [&](Rng& rng) {
        TorusPoint tau;
        const Colligation c = kernel_case(rng, tau);
        const Desingularization d = desingularize(c, tau, tol);
        const Eigen::Index m = d.g.dim();
        double worst = 0.0;
        for (int k = 1; k <= 20; ++k) {
            const double t = std::ldexp(1.0, -k);
            const CMatrix I = eval_I(d.g, {(1 - t) * tau.l1, (1 - t) * tau.l2});
            worst = std::max(worst, (I - (1 - t) * CMatrix::Identity(m, m)).cwiseAbs().maxCoeff());
        }
        return worst;
    }));

    out.push_back(run_suite("desingularize.c_point", n, seed, 1e-12, [&](Rng& rng) {
        TorusPoint tau;
        const Colligation c = kernel_case(rng, tau);
        const Desingularization d = desingularize(c, tau, tol);
        double prev = kInf, worst = 0.0;
        for (int k = 1; k <= 20; ++k) {
            const double t = std::ldexp(1.0, -k);
            const double dist = (u_vector(d.g, {(1 - t) * tau.l1, (1 - t) * tau.l2}, tol) - d.g.u_tau).norm();
            worst = std::max(worst, dist - prev);   // positive when the distance grows
            prev = dist;
        }
        return worst;
    }));

    out.push_back(run_suite("boundary.julia_liminf", n, seed, 1e-6, [&](Rng& rng) {
        TorusPoint tau;
        const Colligation c = kernel_case(rng, tau);
        const CarapointResult cp = is_carapoint(c, tau, tol);
        if (!cp.carapoint) return kInf;
        const RealEstimate lim = radial_liminf(evaluator(c, tol), ApproachPath::radial(tau));
        const double w = cp.witness.squaredNorm();
        return std::abs(lim.value - w) / std::max(1.0, w);
    }));

    out.push_back(run_suite("slope.directional_derivative", n, seed, 1e-5, [&](Rng& rng) {
        TorusPoint tau;
        const Colligation c = kernel_case(rng, tau);
        const Desingularization d = desingularize(c, tau, tol);
        const Evaluator phi = evaluator(c, tol);
        const ComplexEstimate v = nontangential_value(phi, ApproachPath::radial(tau), {1e-13, 3, 1e6});
        double worst = 0.0;
        for (int k = 0; k < 2; ++k) {
            const Direction dl = random_direction(rng, tau);
            const Complex num = directional_derivative_numeric(phi, tau, dl, v.value).value;
            const Complex ana = directional_derivative_analytic(v.value, tau, dl, slope_pair(d.g));
            worst = std::max(worst, std::abs(num - ana) / (1.0 + std::abs(ana)));
        }
        return worst;
    }));

    out.push_back(run_suite("slope.pick_class", n, seed, 1e-12, [&](Rng& rng) {
        TorusPoint tau;
        const Colligation c = kernel_case(rng, tau);
        const SlopePair sp = slope_pair(desingularize(c, tau, tol).g);
        std::vector<Complex> grid;
        for (int k = 0; k < 50; ++k) grid.push_back(random_upper_half_plane(rng));
        const PickReport p = pick_check(slope_evaluator(sp), grid);
        std::vector<double> xs;
        for (int k = 0; k < 20; ++k) xs.push_back(std::pow(10.0, -3.0 + 6.0 * k / 19.0));
        const RealAxisReport ra = slope_real_axis_check(sp, xs);
        return std::max({shortfall(p.min_im_h), shortfall(p.min_im_zh), ra.max_abs_im});
    }));

    out.push_back(run_suite("representations.round_trip", n, seed, 1e-10, [&](Rng& rng) {
        const DiscreteMeasure01 nu = random_measure(rng);
        const NevanlinnaData nd = nevanlinna_from_measure(nu);
        const DiscreteMeasure01 back = measure_from_nevanlinna(nd);
        if (back.atoms.size() != nu.atoms.size()) return kInf;
        double worst = 0.0;
        for (std::size_t i = 0; i < nu.atoms.size(); ++i)
            worst = std::max({worst, std::abs(back.atoms[i].s - nu.atoms[i].s), std::abs(back.atoms[i].w - nu.atoms[i].w)});
        for (int k = 0; k < 20; ++k) {
            const Complex z = random_upper_half_plane(rng);
            worst = std::max(worst, std::abs(h_from_measure(nu, z) - h_from_nevanlinna(nd, z)));
            worst = std::max(worst, std::abs(h_from_measure(nu, z) - slope_eval(slope_pair_from_measure(nu), z)));
        }
        return worst;
    }));

    out.push_back(run_suite("representations.pick_class", n, seed, 1e-12, [&](Rng& rng) {
        const DiscreteMeasure01 nu = random_measure(rng);
        std::vector<Complex> grid;
        for (int k = 0; k < 100; ++k) grid.push_back(random_upper_half_plane(rng));
        const PickReport p = pick_check([&](Complex z) { return h_from_measure(nu, z); }, grid);
        return std::max(shortfall(p.min_im_h), shortfall(p.min_im_zh));
    }));

    out.push_back(run_suite("synthesis.schur_class", n, seed, 1e-12, [&](Rng& rng) {
        SynthesizedSchur syn{random_measure(rng), random_torus_point(rng), random_torus_point(rng).l1};
        double worst = 0.0;
        for (int k = 0; k < 100; ++k) {
            const BidiscPoint p = random_interior_point(rng, 0.999);
            worst = std::max(worst, std::abs(synth_eval(syn, p)) - 1.0);
            const BidiscPoint mu{std::conj(syn.tau.l1) * p.l1, std::conj(syn.tau.l2) * p.l2};
            worst = std::max(worst, shortfall(herglotz_sum(syn.nu, mu).real()));
        }
        return worst;
    }));

    out.push_back(run_suite("synthesis.slope_and_carapoint", n, seed, 1e-5, [&](Rng& rng) {
        SynthesizedSchur syn{random_measure(rng), random_torus_point(rng), random_torus_point(rng).l1};
        const SlopeVerification sv = verify_slope(syn, {random_direction(rng, syn.tau), random_direction(rng, syn.tau)});
        const CarapointVerification cv = verify_carapoint(syn);
        const double lim = std::abs(cv.liminf - cv.expected_liminf) / std::max(1.0, cv.expected_liminf);
        return std::max({sv.max_rel_error, lim, std::abs(cv.value - cv.expected_value)});
    }));

    out.push_back(run_suite("synthesis.colligation", n, seed, 1e-9, [&](Rng& rng) {
        SynthesizedSchur syn{random_measure(rng), random_torus_point(rng), random_torus_point(rng).l2};
        const Colligation c = synth_colligation(syn);
        double worst = structure_check(c.L(), StructureKind::unitary, tol).residual;
        for (int k = 0; k < 20; ++k) {
            const BidiscPoint p = random_interior_point(rng);
            worst = std::max(worst, std::abs(eval_phi(c, p, tol) - synth_eval(syn, p)));
        }
        return worst;
    }));

    out.push_back(run_suite("nev2d.pick_class", n, seed, 1e-12, [&](Rng& rng) {
        const TwoVarNevRep rep = random_rep(rng, uniform_int(rng, 1, 4));
        double worst = 0.0;
        for (int k = 0; k < 100; ++k) {
            const HalfPlanePoint z{random_upper_half_plane(rng), random_upper_half_plane(rng)};
            worst = std::max(worst, shortfall(eval_h2(rep, z, tol).imag()));
        }
        return worst;
    }));

    out.push_back(run_suite("nev2d.carapoint_at_infinity", n, seed, 1e-6, [&](Rng& rng) {
        const TwoVarNevRep rep = random_rep(rng, uniform_int(rng, 1, 4));
        const InfinityReport r = carapoint_at_infinity(evaluator(rep, tol));
        if (!r.finite) return kInf;
        const double a2 = rep.alpha.squaredNorm();
        return std::max(std::abs(r.limit - a2) / std::max(1.0, a2), std::abs(r.value - Complex(rep.b, 0.0)) / std::max(1.0, std::abs(rep.b)));
    }));

    out.push_back(run_suite("nev2d.round_trip", n, seed, 1e-7, [&](Rng& rng) {
        const Eigen::Index m = uniform_int(rng, 1, 3);
        const TwoVarNevRep rep = random_rep(rng, m);
        const Colligation big = change_basis(lift_to_colligation(generalized_from_rep(rep)), random_unitary(rng, 2 * m));
        const TwoVarNevRep back = rep_from_schur(desingularize(big, CHI, tol).g, tol);
        double worst = 0.0;
        for (int k = 0; k < 20; ++k) {
            const HalfPlanePoint z{random_upper_half_plane(rng), random_upper_half_plane(rng)};
            const Complex h0 = eval_h2(rep, z, tol);
            worst = std::max(worst, std::abs(eval_h2(back, z, tol) - h0) / std::max(1.0, std::abs(h0)));
        }
        return worst;
    }));

    return out;
}

std::string format_suite_table(const std::vector<SuiteResult>& results) {
    std::ostringstream os;
    os << std::left << std::setw(34) << "suite" << std::right << std::setw(7) << "cases" << std::setw(9)
       << "failed" << std::setw(14) << "worst" << std::setw(12) << "bound" << "  status\n";
    for (const auto& r : results) {
        os << std::left << std::setw(34) << r.name << std::right << std::setw(7) << r.cases << std::setw(9)
           << r.failures << std::setw(14) << std::scientific << std::setprecision(3) << r.worst << std::setw(12)
           << std::setprecision(1) << r.threshold << "  " << (r.pass ? "PASS" : "FAIL") << "\n";
        os << std::defaultfloat;
    }
    return os.str();
}

} // namespace bidisc
