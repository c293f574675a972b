#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "bidisc/colligation.hpp"
#include "bidisc/desingularize.hpp"
#include "bidisc/nev2d.hpp"
#include "bidisc/representations.hpp"

namespace bidisc::io {

using nlohmann::json;

// Complex as [re, im]; matrices as {"rows", "cols", "data": [[re, im], ...]} row-major;
// vectors are matrices with cols = 1. Parsers throw InvalidInput on schema violations.
json to_json(Complex z);
json to_json(const CMatrix& A);
json to_json(const Tolerances& t);
json to_json(const Colligation& c);
json to_json(const GeneralizedRealization& g);
json to_json(const DiscreteMeasure01& nu);
json to_json(const NevanlinnaData& nd);
json to_json(const TwoVarNevRep& rep);

Complex complex_from_json(const json& j);
CMatrix matrix_from_json(const json& j);
CVector vector_from_json(const json& j);
double real_from_json(const json& j, const char* what);
// Starts from base and overrides the keys present in j.
Tolerances tolerances_from_json(const json& j, Tolerances base = {});
Colligation colligation_from_json(const json& j);
GeneralizedRealization generalized_from_json(const json& j);
DiscreteMeasure01 measure_from_json(const json& j);
NevanlinnaData nevanlinna_from_json(const json& j);
TwoVarNevRep rep_from_json(const json& j);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// "rank_rel=1e-10,structural=1e-9,solve_cond_max=1e14"; unknown keys are an error.
Tolerances parse_tolerance_spec(const std::string& spec, Tolerances base = {});
// Defaults overridden by the BIDISC_TOLERANCES environment variable when set.
Tolerances default_tolerances();
inline constexpr const char* TOLERANCE_ENV = "BIDISC_TOLERANCES";

// Accepts "x", "yi", "x+yi", "x-yi", "i", "-i" (no spaces).
Complex parse_complex(const std::string& s);
// "a,b" pair of complex numbers.
BidiscPoint parse_pair(const std::string& s);

// Shortest round-trip decimal representation, "." separator.
std::string format_double(double x);

} // namespace bidisc::io
