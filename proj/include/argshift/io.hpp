#ifndef ARGSHIFT_IO_HPP
#define ARGSHIFT_IO_HPP

#include "argshift/lie_algebra.hpp"
#include "argshift/matrix.hpp"
#include "argshift/mpoly.hpp"
#include "argshift/rational.hpp"
#include "argshift/subspace.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

/*
 * JSON encodings. Rationals are strings "p/q" (or "p"); integers are also
 * accepted on input. Polynomials are {"nvars", "terms": [{"coeff", "exps"}]}
 * with terms in grlex-descending order, and may be given as text
 * ("x_h^2 + 4*x_e*x_f") wherever coordinate names are known. All parse
 * failures throw ParseError.
 */
namespace argshift::io {

using Json = nlohmann::json;

inline constexpr int kSchema = 1;

Json to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json to_json(const VecQ& v);
VecQ vec_from_json(const Json& j);

Json to_json(const PointQ& p);
PointQ point_from_json(const Json& j, std::size_t dim);

Json to_json(const MatQ& M);
MatQ matrix_from_json(const Json& j);

Json to_json(const SubspaceQ& U);

Json to_json(const MPoly& f);
/// Structured object, or text over `names` (coordinate names, with or without the "x_" prefix).
MPoly poly_from_json(const Json& j, std::size_t nvars, const std::vector<std::string>& names);

/// Text form: sums of products of rationals and name[^k]; no parentheses.
MPoly parse_poly(std::string_view text, const std::vector<std::string>& names);

/// {"dim", "basis": [names], "brackets": [{"i","j","coeffs":{"k":"c"}}]}; i < j, sorted.
Json to_json(const LieAlgebraData& L);
/// Accepts the same form; brackets may use either orientation. Antisymmetry conflicts throw ParseError.
LieAlgebraData algebra_from_json(const Json& j);
/// Raw rows of an algebra document, for validation without normalization.
std::vector<BracketEntry> bracket_entries_from_json(const Json& j, std::vector<std::string>& names);

/*
 * Built-in constructions: {"construct": "classical", "family": "sl", "n": 3},
 * "vinberg" {"eigenvalues"}, "takiff" {"base", "n"}, "z2_contraction"
 * {"base", "parity"}, "semidirect" {"base", "rho", "v_names"?},
 * "centralizer_sl" {"n", "partition"}, "rebase" {"base", "basis" (rows in the
 * old basis), "names"}. "base" is itself an algebra document
 * or construction.
 */
LieAlgebraData build_algebra(const Json& spec);

/// An algebra document or a construction spec.
LieAlgebraData load_algebra(const Json& j);

/// {"generators": [poly...]}, a bare array, {"construct": "classical", "family", "n"}
/// or {"construct": "takiff_lift", "base", "f", "n"}.
std::vector<MPoly> casimirs_from_json(const Json& j, const LieAlgebraData& L);

Json read_json_file(const std::string& path);
std::string fnv1a_hex(std::string_view bytes);

} // namespace argshift::io

#endif // ARGSHIFT_IO_HPP
