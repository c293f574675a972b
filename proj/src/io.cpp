#include "bidisc/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace bidisc::io {

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(const CMatrix& A) {
    json data = json::array();
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = 0; j < A.cols(); ++j) data.push_back(to_json(A(i, j)));
    return {{"rows", A.rows()}, {"cols", A.cols()}, {"data", data}};
}

json to_json(const Tolerances& t) {
    return {{"rank_rel", t.rank_rel}, {"structural", t.structural}, {"solve_cond_max", t.solve_cond_max}};
}

json to_json(const Colligation& c) {
    return {{"a", to_json(c.a)},
            {"beta", to_json(CMatrix(c.beta))},
            {"gamma", to_json(CMatrix(c.gamma))},
            {"D", to_json(c.D)},
            {"P1", to_json(c.P1)}};
}

json to_json(const GeneralizedRealization& g) {
    return {{"a", to_json(g.a)},
            {"beta", to_json(CMatrix(g.beta))},
            {"gamma", to_json(CMatrix(g.gamma))},
            {"Q", to_json(g.Q)},
            {"Y", to_json(g.Y)},
            {"tau", json::array({to_json(g.tau.l1), to_json(g.tau.l2)})},
            {"u_tau", to_json(CMatrix(g.u_tau))}};
}

json to_json(const DiscreteMeasure01& nu) {
    json atoms = json::array();
    for (const auto& a : nu.atoms) atoms.push_back({{"s", a.s}, {"w", a.w}});
    return {{"atoms", atoms}};
}

json to_json(const NevanlinnaData& nd) {
    json atoms = json::array();
    for (const auto& a : nd.atoms) atoms.push_back({{"t", a.t}, {"m", a.m}});
    return {{"c", nd.c}, {"d", nd.d}, {"atoms", atoms}};
}

json to_json(const TwoVarNevRep& rep) {
    return {{"b", rep.b}, {"alpha", to_json(CMatrix(rep.alpha))}, {"B", to_json(rep.B)}, {"Y", to_json(rep.Y)}};
}

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object()) throw InvalidInput("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw InvalidInput(std::string("missing field \"") + key + "\"");
    return *it;
}

} // namespace

double real_from_json(const json& j, const char* what) {
    if (!j.is_number()) throw InvalidInput(std::string(what) + ": expected a number");
    const double x = j.get<double>();
    if (!std::isfinite(x)) throw InvalidInput(std::string(what) + ": non-finite number");
    return x;
}

Complex complex_from_json(const json& j) {
    if (j.is_number()) return {real_from_json(j, "complex"), 0.0};
    if (!j.is_array() || j.size() != 2) throw InvalidInput("complex number must be [re, im]");
    return {real_from_json(j[0], "complex"), real_from_json(j[1], "complex")};
}

CMatrix matrix_from_json(const json& j) {
    const json& r = field(j, "rows");
    const json& c = field(j, "cols");
    const json& data = field(j, "data");
    if (!r.is_number_integer() || !c.is_number_integer() || r.get<long long>() < 0 || c.get<long long>() < 0)
        throw InvalidInput("matrix: rows and cols must be non-negative integers");
    const Eigen::Index rows = r.get<Eigen::Index>(), cols = c.get<Eigen::Index>();
    if (!data.is_array() || static_cast<Eigen::Index>(data.size()) != rows * cols)
        throw InvalidInput("matrix: data length must equal rows * cols");
    CMatrix A(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index k = 0; k < cols; ++k) A(i, k) = complex_from_json(data[i * cols + k]);
    return A;
}

CVector vector_from_json(const json& j) {
    const CMatrix A = matrix_from_json(j);
    if (A.cols() != 1 && !(A.rows() == 0)) throw InvalidInput("vector: cols must be 1");
    return A.rows() == 0 ? CVector(0) : CVector(A.col(0));
}

Tolerances tolerances_from_json(const json& j, Tolerances base) {
    if (!j.is_object()) throw InvalidInput("tolerances must be an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        const double v = real_from_json(it.value(), "tolerance");
        if (it.key() == "rank_rel") base.rank_rel = v;
        else if (it.key() == "structural") base.structural = v;
        else if (it.key() == "solve_cond_max") base.solve_cond_max = v;
        else throw InvalidInput("unknown tolerance \"" + it.key() + "\"");
    }
    base.validate();
    return base;
}

Colligation colligation_from_json(const json& j) {
    Colligation c;
    c.a = complex_from_json(field(j, "a"));
    c.beta = vector_from_json(field(j, "beta"));
    c.gamma = vector_from_json(field(j, "gamma"));
    c.D = matrix_from_json(field(j, "D"));
    c.P1 = matrix_from_json(field(j, "P1"));
    return c;
}

GeneralizedRealization generalized_from_json(const json& j) {
    GeneralizedRealization g;
    g.a = complex_from_json(field(j, "a"));
    g.beta = vector_from_json(field(j, "beta"));
    g.gamma = vector_from_json(field(j, "gamma"));
    g.Q = matrix_from_json(field(j, "Q"));
    g.Y = matrix_from_json(field(j, "Y"));
    const json& t = field(j, "tau");
    if (!t.is_array() || t.size() != 2) throw InvalidInput("tau must be a pair of complex numbers");
    g.tau = {complex_from_json(t[0]), complex_from_json(t[1])};
    g.u_tau = vector_from_json(field(j, "u_tau"));
    return g;
}

DiscreteMeasure01 measure_from_json(const json& j) {
    const json& atoms = field(j, "atoms");
    if (!atoms.is_array()) throw InvalidInput("measure: atoms must be an array");
    std::vector<Atom01> raw;
    for (const auto& a : atoms) raw.push_back({real_from_json(field(a, "s"), "s"), real_from_json(field(a, "w"), "w")});
    return DiscreteMeasure01::normalize(std::move(raw));
}

NevanlinnaData nevanlinna_from_json(const json& j) {
    const json& atoms = field(j, "atoms");
    if (!atoms.is_array()) throw InvalidInput("Nevanlinna data: atoms must be an array");
    std::vector<AtomR> raw;
    for (const auto& a : atoms) raw.push_back({real_from_json(field(a, "t"), "t"), real_from_json(field(a, "m"), "m")});
    return NevanlinnaData::normalize(real_from_json(field(j, "c"), "c"), real_from_json(field(j, "d"), "d"),
                                     std::move(raw));
}

TwoVarNevRep rep_from_json(const json& j) {
    TwoVarNevRep rep;
    rep.b = real_from_json(field(j, "b"), "b");
    rep.alpha = vector_from_json(field(j, "alpha"));
    rep.B = matrix_from_json(field(j, "B"));
    rep.Y = matrix_from_json(field(j, "Y"));
    return rep;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InvalidInput("malformed JSON in " + path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write " + path);
    out << text;
    if (!out) throw InvalidInput("failed writing " + path);
}

namespace {

double parse_double(std::string_view s, const char* what) {
    double v = 0.0;
    const char* b = s.data();
    const char* e = s.data() + s.size();
    if (!s.empty() && *b == '+') ++b;
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || p != e || b == e) throw InvalidInput(std::string("cannot parse ") + what + " \"" + std::string(s) + "\"");
    return v;
}

} // namespace

Tolerances parse_tolerance_spec(const std::string& spec, Tolerances base) {
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw InvalidInput("tolerance entry \"" + item + "\" lacks '='");
        const std::string key = item.substr(0, eq);
        const double v = parse_double(std::string_view(item).substr(eq + 1), "tolerance");
        if (key == "rank_rel") base.rank_rel = v;
        else if (key == "structural") base.structural = v;
        else if (key == "solve_cond_max") base.solve_cond_max = v;
        else throw InvalidInput("unknown tolerance \"" + key + "\"");
    }
    base.validate();
    return base;
}

Tolerances default_tolerances() {
    const char* env = std::getenv(TOLERANCE_ENV);
    if (!env || !*env) return {};
    return parse_tolerance_spec(env);
}

Complex parse_complex(const std::string& s) {
    if (s.empty()) throw InvalidInput("empty complex number");
    if (s.back() != 'i') return {parse_double(s, "complex number"), 0.0};
    const std::string body = s.substr(0, s.size() - 1);
    // Split at the last sign that is not the leading one and not part of an exponent.
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    auto imag_part = [](const std::string& t) {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return parse_double(t, "imaginary part");
    };
    if (split == std::string::npos) return {0.0, imag_part(body)};
    return {parse_double(body.substr(0, split), "real part"), imag_part(body.substr(split))};
}

BidiscPoint parse_pair(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos)
        throw InvalidInput("expected a pair \"a,b\", got \"" + s + "\"");
    return {parse_complex(s.substr(0, comma)), parse_complex(s.substr(comma + 1))};
}

std::string format_double(double x) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc()) return "nan";
    return std::string(buf, p);
}

} // namespace bidisc::io
