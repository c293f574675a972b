// bidisc: command-line front end (analyze, synth, nevrep, verify).

#include <chrono>
#include <cmath>
#include <ctime>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "bidisc/boundary.hpp"
#include "bidisc/catalog.hpp"
#include "bidisc/desingularize.hpp"
#include "bidisc/io.hpp"
#include "bidisc/nev2d.hpp"
#include "bidisc/representations.hpp"
#include "bidisc/slope.hpp"
#include "bidisc/synthesis.hpp"
#include "bidisc/verify.hpp"

using namespace bidisc;
using io::json;

namespace {

constexpr const char* TOOL_VERSION = "0.1.0";

enum Exit { OK = 0, INPUT = 2, PRECONDITION = 3, NUMERIC = 4, VERIFY = 5, OBSTRUCTION = 6 };

struct Common {
    bool no_timestamp = false;
    std::string tolerance_spec;
};

struct Context {
    Tolerances tol;
    std::string tol_source = "defaults";
};

Context make_context(const Common& common, const json* input) {
    Context ctx;
    ctx.tol = io::default_tolerances();
    if (const char* env = std::getenv(io::TOLERANCE_ENV); env && *env)
        ctx.tol_source = std::string("environment ") + io::TOLERANCE_ENV;
    if (input && input->is_object() && input->contains("tolerances")) {
        ctx.tol = io::tolerances_from_json((*input)["tolerances"], ctx.tol);
        ctx.tol_source = "input file";
    }
    if (!common.tolerance_spec.empty()) {
        ctx.tol = io::parse_tolerance_spec(common.tolerance_spec, ctx.tol);
        ctx.tol_source = "command line";
    }
    return ctx;
}

json report_header(const Common& common, const Context& ctx, const std::string& command) {
    json r;
    r["tool_version"] = TOOL_VERSION;
    r["command"] = command;
    r["tolerances"] = io::to_json(ctx.tol);
    r["tolerance_source"] = ctx.tol_source;
    if (!common.no_timestamp) {
        const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        r["timestamp"] = buf;
    }
    return r;
}

json check(double residual, double bound) {
    return {{"residual", residual}, {"bound", bound}, {"pass", residual <= bound}};
}

json point_json(const BidiscPoint& p) { return json::array({io::to_json(p.l1), io::to_json(p.l2)}); }

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string csv_row(std::initializer_list<double> xs) {
    std::string line;
    bool first = true;
    for (double x : xs) {
        if (!first) line += ',';
        line += io::format_double(x);
        first = false;
    }
    return line + "\n";
}

void emit(const json& report, const std::string& out) {
    const std::string text = report.dump(2) + "\n";
    if (out.empty())
        std::cout << text;
    else
        io::write_text_file(out, text);
}

Complex parse_unimodular(const std::string& s) {
    const Complex w = io::parse_complex(s);
    if (std::abs(std::abs(w) - 1.0) > 1e-9) throw InvalidInput("omega must be unimodular");
    return w / std::abs(w);
}

std::vector<Direction> standard_directions(const TorusPoint& tau) {
    const std::vector<std::pair<Complex, Complex>> cs{
        {1.0, 1.0}, {1.0, 2.0}, {2.0, 1.0}, {Complex(1.0, 0.5), Complex(1.0, -0.5)}};
    std::vector<Direction> out;
    for (auto [c1, c2] : cs) out.push_back({tau.l1 * c1, tau.l2 * c2});
    return out;
}

std::vector<Complex> slope_sample_points() {
    std::vector<Complex> zs;
    for (int k = 0; k <= 8; ++k) zs.push_back(std::pow(10.0, -2.0 + 0.5 * k));
    for (Complex z : {Complex(0, 1), Complex(1, 1), Complex(2, 1), Complex(-1, 1), Complex(0, 10)}) zs.push_back(z);
    return zs;
}

// ---- analyze -------------------------------------------------------------

struct AnalyzeOpts {
    std::string input, tau, out, csv;
};

int cmd_analyze(const AnalyzeOpts& o, const Common& common) {
    const json in = io::read_json_file(o.input);
    const Context ctx = make_context(common, &in);
    const Tolerances& tol = ctx.tol;
    const Colligation c = io::colligation_from_json(in);
    c.validate(tol);
    const TorusPoint tau = normalize_torus(io::parse_pair(o.tau));

    json rep = report_header(common, ctx, "analyze");
    rep["input"] = {{"colligation", io::to_json(c)}, {"tau", point_json(tau)}};

    const CarapointResult cp = is_carapoint(c, tau, tol);
    if (!cp.carapoint) {
        std::cerr << "tau is not a carapoint: gamma is not in ran(1 - D tau) (residual " << cp.residual << ")\n";
        return PRECONDITION;
    }
    const Evaluator phi = evaluator(c, tol);
    const ApproachPath radial = ApproachPath::radial(tau);
    const RealEstimate lim = radial_liminf(phi, radial);
    if (lim.report.diverged) {
        std::cerr << "no carapoint evidence: the Julia quotient diverges along the radial path\n";
        return PRECONDITION;
    }
    const ComplexEstimate val = nontangential_value(phi, radial, {1e-13, 3, 1e6});
    const Desingularization d = desingularize(c, tau, tol);
    const SlopePair sp = slope_pair(d.g);
    const double unorm2 = d.g.u_tau.squaredNorm();

    json carapoint;
    carapoint["is_carapoint"] = true;
    carapoint["regular_point"] = d.report.dim_N == 0;
    carapoint["witness_norm_sq"] = unorm2;
    carapoint["radial_liminf"] = lim.value;
    carapoint["radial_liminf_converged"] = lim.report.converged;
    carapoint["liminf_vs_witness"] = check(std::abs(lim.value - unorm2) / std::max(1.0, unorm2), 1e-6);
    carapoint["value"] = io::to_json(val.value);
    carapoint["value_converged"] = val.report.converged;
    rep["carapoint"] = carapoint;

    json ds;
    ds["dim_total"] = d.report.dim_total;
    ds["dim_N"] = d.report.dim_N;
    ds["dim_M"] = d.report.dim_M;
    ds["near_kernel_warning"] = d.report.near_kernel_warning;
    ds["retained_singular_ratio"] = d.report.retained_ratio;
    ds["chiga"] = check(d.report.chiga_residual, std::sqrt(tol.structural));
    ds["u_tau_perp_N"] = check(d.report.u_tau_perp_residual, 1e-10);
    ds["decompP1"] = check(d.report.decomp_residual, std::sqrt(tol.structural));
    ds["generalized_realization"] = io::to_json(d.g);
    rep["desingularization"] = ds;

    // Residuals of the generalized model on a fixed set of points.
    double model_res = 0.0, phi_res = 0.0;
    const std::vector<BidiscPoint> pts{{0.3, -0.2}, {Complex(0.1, 0.5), 0.4}, {-0.6, Complex(0, -0.7)}, {0.9 * tau.l1, 0.8 * tau.l2}};
    for (const auto& l : pts) {
        phi_res = std::max(phi_res, std::abs(eval_phi_gen(d.g, l, tol) - phi(l)));
        for (const auto& m : pts) model_res = std::max(model_res, model_residual_gen(d.g, l, m, tol));
    }
    json verification;
    verification["model_equation"] = check(model_res, 1e-9);
    verification["phi_equivalence"] = check(phi_res, 1e-9);

    const DiscreteMeasure01 nu = measure_from_slope_pair(sp);
    json repr;
    repr["measure"] = io::to_json(nu);
    repr["nevanlinna"] = io::to_json(nevanlinna_from_measure(nu));
    rep["representations"] = repr;

    json samples = json::array();
    std::string csv = "z_re,z_im,h_re,h_im\n";
    for (Complex z : slope_sample_points()) {
        const Complex h = slope_eval(sp, z);
        samples.push_back({{"z", io::to_json(z)}, {"h", io::to_json(h)}});
        csv += csv_row({z.real(), z.imag(), h.real(), h.imag()});
    }
    rep["slope_samples"] = samples;
    const Complex h1 = slope_eval(sp, 1.0);
    verification["h1_vs_liminf"] = check(std::abs(h1.real() + lim.value) / std::max(1.0, lim.value), 1e-6);

    std::vector<Complex> grid;
    for (double x : {-3.0, -1.0, 0.0, 0.5, 2.0})
        for (double y : {0.01, 0.3, 1.0, 5.0}) grid.push_back({x, y});
    const PickReport pk = pick_check(slope_evaluator(sp), grid);
    verification["pick_h"] = check(std::max(0.0, -pk.min_im_h), 1e-12);
    verification["pick_minus_zh"] = check(std::max(0.0, -pk.min_im_zh), 1e-12);

    json derivs = json::array();
    double worst = 0.0;
    for (const auto& dl : standard_directions(tau)) {
        const ComplexEstimate num = directional_derivative_numeric(phi, tau, dl, val.value);
        const Complex ana = directional_derivative_analytic(val.value, tau, dl, sp);
        const double err = std::abs(num.value - ana) / (1.0 + std::abs(ana));
        worst = std::max(worst, err);
        derivs.push_back({{"delta", json::array({io::to_json(dl.d1), io::to_json(dl.d2)})},
                          {"numeric", io::to_json(num.value)},
                          {"analytic", io::to_json(ana)},
                          {"converged", num.report.converged},
                          {"check", check(err, 1e-5)}});
    }
    rep["directional_derivatives"] = derivs;
    verification["directional_derivatives"] = check(worst, 1e-5);

    bool all = true;
    for (auto& [k, v] : verification.items()) all = all && v["pass"].get<bool>();
    verification["all_pass"] = all;
    rep["verification"] = verification;

    if (!o.csv.empty()) io::write_text_file(o.csv, csv);
    emit(rep, o.out);
    return OK;
}

// ---- synth ---------------------------------------------------------------

struct SynthOpts {
    std::string input, tau = "1,1", omega = "1", out;
    bool verify = false;
};

int cmd_synth(const SynthOpts& o, const Common& common) {
    const json in = io::read_json_file(o.input);
    const Context ctx = make_context(common, &in);
    SynthesizedSchur syn;
    syn.nu = io::measure_from_json(in);
    syn.tau = normalize_torus(io::parse_pair(o.tau));
    syn.omega = parse_unimodular(o.omega);
    syn.validate();

    json verification;
    bool pass = true;
    Colligation c;
    if (o.verify || !ends_with(o.out, ".csv")) c = synth_colligation(syn);
    if (o.verify) {
        const SlopeVerification sv = verify_slope(syn, standard_directions(syn.tau));
        const CarapointVerification cv = verify_carapoint(syn);
        json entries = json::array();
        for (const auto& e : sv.entries)
            entries.push_back({{"delta", json::array({io::to_json(e.delta.d1), io::to_json(e.delta.d2)})},
                               {"numeric", io::to_json(e.numeric)},
                               {"analytic", io::to_json(e.analytic)},
                               {"rel_error", e.rel_error}});
        verification["slope"] = {{"entries", entries}, {"check", check(sv.max_rel_error, 1e-5)}};
        const double lim_err = std::abs(cv.liminf - cv.expected_liminf) / std::max(1.0, cv.expected_liminf);
        verification["carapoint"] = {{"liminf", cv.liminf},
                                     {"expected_liminf", cv.expected_liminf},
                                     {"value", io::to_json(cv.value)},
                                     {"expected_value", io::to_json(cv.expected_value)},
                                     {"liminf_check", check(lim_err, 1e-6)},
                                     {"value_check", check(std::abs(cv.value - cv.expected_value), 1e-6)}};
        double real_err = structure_check(c.L(), StructureKind::unitary, ctx.tol).residual;
        for (const auto& p : fitting_grid(100)) real_err = std::max(real_err, std::abs(eval_phi(c, p, ctx.tol) - synth_eval(syn, p)));
        verification["colligation"] = check(real_err, 1e-9);
        pass = sv.pass && cv.pass && real_err <= 1e-9;
        verification["all_pass"] = pass;
    }

    if (ends_with(o.out, ".csv")) {
        std::string csv = "l1_re,l1_im,l2_re,l2_im,phi_re,phi_im\n";
        for (const auto& p : fitting_grid(100)) {
            const Complex v = synth_eval(syn, p);
            csv += csv_row({p.l1.real(), p.l1.imag(), p.l2.real(), p.l2.imag(), v.real(), v.imag()});
        }
        io::write_text_file(o.out, csv);
        if (o.verify) {
            json rep = report_header(common, ctx, "synth");
            rep["verification"] = verification;
            std::cout << rep.dump(2) << "\n";
        }
    } else {
        json rep = io::to_json(c);
        rep["function"] = {{"measure", io::to_json(syn.nu)},
                           {"tau", point_json(syn.tau)},
                           {"omega", io::to_json(syn.omega)}};
        rep["report"] = report_header(common, ctx, "synth");
        if (o.verify) rep["verification"] = verification;
        emit(rep, o.out);
    }
    if (!pass) {
        std::cerr << "verification failed\n";
        return VERIFY;
    }
    return OK;
}

// ---- nevrep --------------------------------------------------------------

struct NevrepOpts {
    std::string input, out;
};

int cmd_nevrep(const NevrepOpts& o, const Common& common) {
    const json in = io::read_json_file(o.input);
    const Context ctx = make_context(common, &in);
    const Tolerances& tol = ctx.tol;
    json rep = report_header(common, ctx, "nevrep");

    Colligation c;
    std::optional<TwoVarNevRep> source;
    if (in.is_object() && in.contains("D")) {
        c = io::colligation_from_json(in);
        c.validate(tol);
        rep["input_kind"] = "colligation";
    } else if (in.is_object() && in.contains("alpha")) {
        source = io::rep_from_json(in);
        source->validate(tol);
        c = lift_to_colligation(generalized_from_rep(*source));
        rep["input_kind"] = "representation";
    } else {
        throw InvalidInput("nevrep: input must be a colligation or a representation");
    }
    const Desingularization d = desingularize(c, CHI, tol);
    const TwoVarNevRep out = rep_from_schur(d.g, tol);
    const InfinityReport inf = carapoint_at_infinity(evaluator(out, tol));
    const double a2 = out.alpha.squaredNorm();

    rep["representation"] = io::to_json(out);
    rep["alpha_norm_sq"] = a2;
    rep["infinity"] = {{"finite", inf.finite},
                       {"limit", inf.finite ? json(inf.limit) : json(nullptr)},
                       {"value", io::to_json(inf.value)},
                       {"limit_vs_alpha", check(inf.finite ? std::abs(inf.limit - a2) / std::max(1.0, a2) : INFINITY, 1e-6)}};
    const Evaluator phi = evaluator(c, tol);
    double worst = 0.0;
    for (const auto& z : rep_verification_grid()) {
        const Complex hr = eval_h2(out, z, tol);
        const Complex hc = source ? eval_h2(*source, z, tol) : pick_value_from_schur(phi(to_bidisc(z)));
        worst = std::max(worst, std::abs(hr - hc) / std::max(1.0, std::abs(hc)));
    }
    rep["grid_check"] = check(worst, source ? 1e-7 : 1e-8);
    emit(rep, o.out);
    return OK;
}

// ---- verify --------------------------------------------------------------

int cmd_verify(int n, std::uint64_t seed, const Common& common) {
    const Context ctx = make_context(common, nullptr);
    const auto results = run_verification(n, seed, ctx.tol);
    std::cout << "bidisc verify --random " << n << " --seed " << seed << "\n";
    std::cout << format_suite_table(results);
    bool all = true;
    for (const auto& r : results) all = all && r.pass;
    std::cout << (all ? "all suites passed\n" : "some suites FAILED\n");
    return all ? OK : VERIFY;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Boundary analysis of two-variable Schur functions"};
    app.require_subcommand(1);
    Common common;
    app.add_flag("--no-timestamp", common.no_timestamp, "Omit timestamps from reports");
    app.add_option("--tolerances", common.tolerance_spec,
                   "Override tolerances, e.g. rank_rel=1e-10,structural=1e-9,solve_cond_max=1e14");
    app.set_version_flag("--version", TOOL_VERSION);

    AnalyzeOpts ao;
    auto* analyze = app.add_subcommand("analyze", "Carapoint, desingularization and slope analysis of a colligation");
    analyze->add_option("colligation", ao.input, "Colligation JSON")->required();
    analyze->add_option("--tau", ao.tau, "Torus point a,b")->required();
    analyze->add_option("--out", ao.out, "Report JSON (stdout when omitted)");
    analyze->add_option("--csv", ao.csv, "Slope samples CSV");

    SynthOpts so;
    auto* synth = app.add_subcommand("synth", "Schur function with a prescribed slope measure");
    synth->add_option("measure", so.input, "Measure JSON")->required();
    synth->add_option("--tau", so.tau, "Torus point a,b (default 1,1)");
    synth->add_option("--omega", so.omega, "Unimodular value at tau (default 1)");
    synth->add_option("--out", so.out, "Output .json (colligation) or .csv (samples)")->required();
    synth->add_flag("--verify", so.verify, "Check slope and carapoint behaviour");

    NevrepOpts no;
    auto* nevrep = app.add_subcommand("nevrep", "Two-variable Nevanlinna representation at infinity");
    nevrep->add_option("input", no.input, "Colligation JSON or representation JSON")->required();
    nevrep->add_option("--out", no.out, "Report JSON (stdout when omitted)");

    int n = 50;
    std::uint64_t seed = 7;
    auto* verify = app.add_subcommand("verify", "Seeded invariant suites");
    verify->add_option("--random", n, "Instances per suite")->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "Random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? OK : INPUT;
    }

    try {
        if (*analyze) return cmd_analyze(ao, common);
        if (*synth) return cmd_synth(so, common);
        if (*nevrep) return cmd_nevrep(no, common);
        if (*verify) return cmd_verify(n, seed, common);
    } catch (const ObstructionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return OBSTRUCTION;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return PRECONDITION;
    } catch (const InvalidInput& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return INPUT;
    } catch (const NotSlopeType& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return INPUT;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return INPUT;
    } catch (const Error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return NUMERIC;
    }
    return OK;
}
