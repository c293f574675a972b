#include "bidisc/representations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace bidisc {

namespace {

constexpr double PI = std::numbers::pi;

bool finite(double x) { return std::isfinite(x); }

} // namespace

DiscreteMeasure01 DiscreteMeasure01::normalize(std::vector<Atom01> raw) {
    for (const auto& a : raw) {
        if (!finite(a.s) || !finite(a.w)) throw InvalidInput("measure: non-finite atom");
        if (a.s < 0.0 || a.s > 1.0) throw InvalidInput("measure: atom location outside [0, 1]");
        if (a.w < 0.0) throw InvalidInput("measure: negative weight");
    }
    std::sort(raw.begin(), raw.end(), [](const Atom01& x, const Atom01& y) { return x.s < y.s; });
    DiscreteMeasure01 out;
    for (const auto& a : raw) {
        if (!out.atoms.empty() && out.atoms.back().s == a.s)
            out.atoms.back().w += a.w;
        else
            out.atoms.push_back(a);
    }
    std::erase_if(out.atoms, [](const Atom01& a) { return a.w == 0.0; });
    return out;
}

double DiscreteMeasure01::total_mass() const {
    double m = 0.0;
    for (const auto& a : atoms) m += a.w;
    return m;
}

void DiscreteMeasure01::validate() const {
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        const auto& a = atoms[i];
        if (!finite(a.s) || !finite(a.w) || a.s < 0.0 || a.s > 1.0 || !(a.w > 0.0))
            throw InvalidInput("measure: invalid atom");
        if (i && !(atoms[i - 1].s < a.s)) throw InvalidInput("measure: atoms not strictly increasing");
    }
}

NevanlinnaData NevanlinnaData::normalize(double c, double d, std::vector<AtomR> raw) {
    if (!finite(c) || !finite(d)) throw InvalidInput("Nevanlinna data: non-finite c or d");
    if (d < 0.0) throw InvalidInput("Nevanlinna data: d must be non-negative");
    for (const auto& a : raw) {
        if (!finite(a.t) || !finite(a.m)) throw InvalidInput("Nevanlinna data: non-finite atom");
        if (a.m < 0.0) throw InvalidInput("Nevanlinna data: negative mass");
    }
    std::sort(raw.begin(), raw.end(), [](const AtomR& x, const AtomR& y) { return x.t < y.t; });
    NevanlinnaData out;
    out.c = c;
    out.d = d;
    for (const auto& a : raw) {
        if (!out.atoms.empty() && out.atoms.back().t == a.t)
            out.atoms.back().m += a.m;
        else
            out.atoms.push_back(a);
    }
    std::erase_if(out.atoms, [](const AtomR& a) { return a.m == 0.0; });
    return out;
}

void NevanlinnaData::validate() const {
    if (!finite(c) || !finite(d) || d < 0.0) throw InvalidInput("Nevanlinna data: invalid c or d");
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (!finite(atoms[i].t) || !finite(atoms[i].m) || atoms[i].m < 0.0)
            throw InvalidInput("Nevanlinna data: invalid atom");
        if (i && !(atoms[i - 1].t < atoms[i].t))
            throw InvalidInput("Nevanlinna data: atoms not strictly increasing");
    }
}

Complex h_from_measure(const DiscreteMeasure01& nu, Complex z) {
    if (z.imag() == 0.0 && z.real() <= 0.0)
        throw DomainError("h_from_measure: z lies on the cut (-inf, 0]");
    Complex h{0.0, 0.0};
    for (const auto& a : nu.atoms) {
        const Complex den = 1.0 - a.s + a.s * z;
        if (den == 0.0) throw PoleError("h_from_measure: 1 - s + s z vanishes");
        h -= a.w / den;
    }
    return h;
}

Complex h_from_nevanlinna(const NevanlinnaData& nd, Complex z) {
    Complex h = nd.c + nd.d * z;
    for (const auto& a : nd.atoms) {
        if (z == Complex(a.t, 0.0)) throw PoleError("h_from_nevanlinna: z sits on an atom");
        h += a.m * (1.0 + a.t * z) / (a.t - z) / PI;
    }
    return h;
}

NevanlinnaData nevanlinna_from_measure(const DiscreteMeasure01& nu) {
    nu.validate();
    NevanlinnaData nd;
    double nu0 = 0.0;
    double tm = 0.0;
    for (const auto& a : nu.atoms) {
        if (a.s == 0.0) {
            nu0 += a.w;
            continue;
        }
        const double t = 1.0 - 1.0 / a.s;
        const double m = PI * a.w * (1.0 - t) / (1.0 + t * t);
        nd.atoms.push_back({t, m});
        tm += t * m;
    }
    std::sort(nd.atoms.begin(), nd.atoms.end(), [](const AtomR& x, const AtomR& y) { return x.t < y.t; });
    nd.c = tm / PI - nu0;
    nd.d = 0.0;
    return nd;
}

DiscreteMeasure01 measure_from_nevanlinna(const NevanlinnaData& nd) {
    nd.validate();
    if (nd.d != 0.0) throw NotSlopeType("not of slope type: condition (a) requires d = 0", 'a');
    double tm = 0.0;
    double scale = std::abs(nd.c);
    for (const auto& a : nd.atoms) {
        if (a.t > 0.0 && a.m > 0.0)
            throw NotSlopeType("not of slope type: condition (b) forbids mass on (0, inf)", 'b');
        tm += a.t * a.m;
        scale = std::max(scale, std::abs(a.t * a.m) / PI);
    }
    double nu0 = tm / PI - nd.c;
    const double slack = 1e-12 * std::max(1.0, scale);
    if (nu0 < -slack) {
        std::ostringstream os;
        os << "not of slope type: condition (c) requires c <= (1/pi) sum t m (excess " << -nu0 << ")";
        throw NotSlopeType(os.str(), 'c');
    }
    std::vector<Atom01> raw;
    if (nu0 > slack) raw.push_back({0.0, nu0});
    for (const auto& a : nd.atoms) {
        const double s = 1.0 / (1.0 - a.t);
        const double w = a.m * (1.0 + a.t * a.t) / (PI * (1.0 - a.t));
        raw.push_back({s, w});
    }
    return DiscreteMeasure01::normalize(std::move(raw));
}

SlopePair slope_pair_from_measure(const DiscreteMeasure01& nu) {
    const Eigen::Index n = static_cast<Eigen::Index>(nu.atoms.size());
    SlopePair sp;
    sp.Y = CMatrix::Zero(n, n);
    sp.u_tau = CVector::Zero(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        sp.Y(i, i) = nu.atoms[i].s;
        sp.u_tau(i) = std::sqrt(nu.atoms[i].w);
    }
    return sp;
}

DiscreteMeasure01 measure_from_slope_pair(const SlopePair& sp, double merge_tol) {
    const Eigen::Index m = sp.Y.rows();
    std::vector<Atom01> raw;
    if (m == 0) return {};
    Eigen::SelfAdjointEigenSolver<CMatrix> es((sp.Y + sp.Y.adjoint()) / 2.0);
    const CVector c = es.eigenvectors().adjoint() * sp.u_tau;
    const double mass = sp.u_tau.squaredNorm();
    for (Eigen::Index k = 0; k < m; ++k) {
        double s = std::min(1.0, std::max(0.0, es.eigenvalues()(k)));
        const double w = std::norm(c(k));
        // Weights at rounding level carry no information.
        if (w <= 1e-14 * std::max(1.0, mass)) continue;
        if (!raw.empty() && std::abs(raw.back().s - s) <= merge_tol) {
            const double W = raw.back().w + w;
            raw.back().s = (raw.back().s * raw.back().w + s * w) / W;
            raw.back().w = W;
        } else {
            raw.push_back({s, w});
        }
    }
    return DiscreteMeasure01::normalize(std::move(raw));
}

namespace {

struct Integrator {
    const std::function<double(double)>& f;
    double abs_tol_per_length;
    int max_depth = 40;

    double panel(double l, double r, double fl, double fr, int depth) const {
        const double mid = 0.5 * (l + r);
        const double fm = f(mid);
        const double t1 = 0.5 * (r - l) * (fl + fr);
        const double t2 = 0.25 * (r - l) * (fl + 2.0 * fm + fr);
        const double err = std::abs(t2 - t1) / 3.0;
        if (err <= abs_tol_per_length * (r - l) || depth >= max_depth)
            return t2 + (t2 - t1) / 3.0;
        return panel(l, mid, fl, fm, depth + 1) + panel(mid, r, fm, fr, depth + 1);
    }
};

double adaptive_integral(const std::function<double(double)>& f, double a, double b, int panels,
                         double rel_tol) {
    std::vector<double> xs(panels + 1), fs(panels + 1);
    double rough = 0.0;
    for (int i = 0; i <= panels; ++i) {
        xs[i] = a + (b - a) * i / panels;
        fs[i] = f(xs[i]);
    }
    for (int i = 0; i < panels; ++i) rough += 0.5 * (xs[i + 1] - xs[i]) * std::abs(fs[i] + fs[i + 1]);
    // Absolute floor keeps near-zero integrals from demanding unbounded refinement.
    const double tol = rel_tol * std::max(rough, 1e-3 * (b - a));
    Integrator in{f, tol / (b - a)};
    double sum = 0.0;
    for (int i = 0; i < panels; ++i) sum += in.panel(xs[i], xs[i + 1], fs[i], fs[i + 1], 0);
    return sum;
}

} // namespace

StieltjesResult stieltjes_recover(const Evaluator1& h, double a, double b, const std::vector<double>& ys,
                                  double rel_tol) {
    if (!(a < b)) throw InvalidInput("stieltjes_recover: need a < b");
    if (ys.empty()) throw InvalidInput("stieltjes_recover: need at least one y");
    for (std::size_t k = 0; k < ys.size(); ++k) {
        if (!(ys[k] > 0.0)) throw InvalidInput("stieltjes_recover: ys must be positive");
        if (k && !(ys[k] < ys[k - 1])) throw InvalidInput("stieltjes_recover: ys must decrease");
    }
    StieltjesResult out;
    out.ys = ys;
    for (double y : ys) {
        std::function<double(double)> f = [&](double x) { return h(Complex(x, y)).imag(); };
        // Panels no wider than y so a Lorentzian of width y cannot fall between samples.
        const double want = std::ceil((b - a) / y);
        const int panels = static_cast<int>(std::clamp(want, 16.0, 2e6));
        out.integrals.push_back(adaptive_integral(f, a, b, panels, rel_tol));
    }
    // The window integral deviates from its limit linearly in y.
    for (std::size_t k = 0; k < ys.size(); ++k) {
        if (k == 0) {
            out.extrapolated.push_back(out.integrals[0]);
            continue;
        }
        const double y0 = ys[k - 1], y1 = ys[k];
        out.extrapolated.push_back((y0 * out.integrals[k] - y1 * out.integrals[k - 1]) / (y0 - y1));
    }
    out.value = out.extrapolated.back();
    const std::size_t n = out.extrapolated.size();
    if (n >= 3) {
        const double scale = std::max(1.0, std::abs(out.value));
        out.converged = std::abs(out.extrapolated[n - 1] - out.extrapolated[n - 2]) <= 1e-3 * scale;
    }
    return out;
}

Complex cauchy_rep_eval(const std::vector<AtomR>& mu, Complex z) {
    Complex h{0.0, 0.0};
    for (const auto& a : mu) {
        if (z == Complex(a.t, 0.0)) throw PoleError("cauchy_rep_eval: z sits on an atom");
        h += a.m / (a.t - z);
    }
    return h;
}

std::vector<double> default_growth_ys() {
    std::vector<double> ys;
    for (int k = 1; k <= 8; ++k) ys.push_back(std::pow(10.0, k));
    return ys;
}

ComplexEstimate extrapolate_infinity(const std::function<Complex(double)>& g, const std::vector<double>& ys,
                                     const ExtrapolationOptions& opt) {
    std::vector<double> ts;
    for (std::size_t k = 0; k < ys.size(); ++k) {
        if (!(ys[k] > 0.0) || (k && !(ys[k] > ys[k - 1])))
            throw InvalidInput("extrapolate_infinity: ys must be positive and increasing");
        ts.push_back(1.0 / ys[k]);
    }
    return extrapolate_limit([&](double t) { return g(1.0 / t); }, ts, opt);
}

GrowthResult growth_check(const Evaluator1& h, const std::vector<double>& ys_in) {
    const std::vector<double> ys = ys_in.empty() ? default_growth_ys() : ys_in;
    ComplexEstimate e = extrapolate_infinity([&](double y) { return Complex(y * h(Complex(0.0, y)).imag(), 0.0); }, ys);
    GrowthResult out;
    out.finite = e.report.converged && !e.report.diverged;
    out.limit = out.finite ? e.value.real() : INFINITY;
    out.report = std::move(e.report);
    return out;
}

} // namespace bidisc
