#ifndef ARGSHIFT_REPORT_HPP
#define ARGSHIFT_REPORT_HPP

#include "argshift/io.hpp"
#include "argshift/pencil.hpp"
#include "argshift/poisson.hpp"
#include "argshift/regcert.hpp"
#include "argshift/shift.hpp"

#include <string>
#include <vector>

/*
 * JSON views of module results. Polynomials appear as text over the given
 * coordinate names, so parse_poly() with the same names reads them back.
 */
namespace argshift::io {

Json poly_text(const MPoly& f, const std::vector<std::string>& names);

Json to_json(const ValidationReport& r, const LieAlgebraData& L);
Json to_json(const AlgebraProfile& p);
Json to_json(const CasimirSet& C, const std::vector<std::string>& names);
Json to_json(const ShiftFamily& F, const std::vector<std::string>& names);
Json to_json(const CommutativityReport& r, const ShiftFamily& F, const std::vector<std::string>& names);
Json to_json(const DegreeProfile& d);
Json to_json(const MinorGcd& g, const std::vector<std::string>& names);
Json to_json(const KostantCheck& k);
Json to_json(const PlaneSpec& P);
Json to_json(const Codim2Result& r, const std::vector<std::string>& names);
Json to_json(const PlaneSearch& s);
Json to_json(const ComplReport& r);
Json to_json(const BolsReport& r);
Json to_json(const Ratio& r);
Json to_json(const RankProfile& p);
Json to_json(const PhiOperator& phi);
Json to_json(const Com1Report& r);
Json to_json(const PencilReport& r);

/// Names (a, b) of the pencil-line variables.
const std::vector<std::string>& line_names();

} // namespace argshift::io

#endif // ARGSHIFT_REPORT_HPP
