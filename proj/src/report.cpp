#include "argshift/report.hpp"

namespace argshift::io {

namespace {

Json rat_list(const std::vector<Rat>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

} // namespace

const std::vector<std::string>& line_names() {
    static const std::vector<std::string> names{"a", "b"};
    return names;
}

Json poly_text(const MPoly& f, const std::vector<std::string>& names) { return to_string(f, names); }

Json to_json(const ValidationReport& r, const LieAlgebraData& L) {
    Json w = Json::array();
    for (auto i : r.witness) w.push_back(L.basis_names().at(i));
    return {{"ok", r.ok}, {"violation", r.violation}, {"witness", w}};
}

Json to_json(const AlgebraProfile& p) {
    Json j{{"dim", p.dim},
           {"ind", p.ind},
           {"source", p.source == IndexSource::Estimated ? "estimated" : "declared"},
           {"b", p.b() ? Json(*p.b()) : Json(nullptr)}};
    if (p.source == IndexSource::Estimated) {
        j["max_rank"] = p.max_rank;
        j["trials"] = p.trials;
        j["seed"] = p.seed;
        j["bound"] = p.bound;
        j["witness"] = p.witness ? to_json(*p.witness) : Json(nullptr);
    }
    return j;
}

Json to_json(const CasimirSet& C, const std::vector<std::string>& names) {
    Json g = Json::array();
    for (const auto& f : C.generators()) g.push_back(poly_text(f, names));
    return {{"generators", g},
            {"degrees", C.degrees()},
            {"sum_degrees", C.sum_degrees()},
            {"homogeneous", C.homogeneous()},
            {"independence_witness", to_json(C.independence_witness())}};
}

Json to_json(const ShiftFamily& F, const std::vector<std::string>& names) {
    Json m = Json::array();
    const auto labels = F.labels();
    for (std::size_t k = 0; k < F.size(); ++k) m.push_back({{"label", labels[k]}, {"poly", poly_text(F.members[k].poly, names)}});
    return {{"xi", to_json(F.xi)}, {"size", F.size()}, {"members", m}};
}

Json to_json(const CommutativityReport& r, const ShiftFamily& F, const std::vector<std::string>& names) {
    Json nz = Json::array();
    const auto labels = F.labels();
    for (const auto& p : r.nonzero)
        nz.push_back({{"a", labels[p.a]}, {"b", labels[p.b]}, {"bracket", poly_text(p.bracket, names)}});
    return {{"pairs_checked", r.pairs_checked}, {"zero_brackets", r.pairs_checked - r.nonzero.size()}, {"nonzero", nz},
            {"passed", r.passed()}};
}

Json to_json(const DegreeProfile& d) {
    return {{"verdict", verdict_name(d.verdict)}, {"degrees", d.degrees}, {"sum", d.sum}, {"b", d.b}, {"arithmetic", d.arithmetic}};
}

Json to_json(const MinorGcd& g, const std::vector<std::string>& names) {
    Json eff = Json::array();
    for (std::size_t k = 0; k < g.effective.size(); ++k)
        eff.push_back({{"rows", g.effective[k].rows}, {"cols", g.effective[k].cols}, {"value", poly_text(g.effective_values[k], names)}});
    return {{"order", g.order},      {"gcd", poly_text(g.gcd, names)}, {"constant", g.constant()}, {"consumed", g.consumed},
            {"total", g.total},      {"seed", g.seed},                 {"effective", eff}};
}

Json to_json(const KostantCheck& k) {
    return {{"regular_by_rank", k.regular_by_rank}, {"independent_differentials", k.independent_differentials}, {"agree", k.agree()}};
}

Json to_json(const PlaneSpec& P) {
    Json j{{"xi", to_json(P.xi)}, {"eta", to_json(P.eta)}, {"certified", P.certified()}};
    j["certificate"] = P.certificate ? to_json(*P.certificate, line_names()) : Json(nullptr);
    return j;
}

Json to_json(const Codim2Result& r, const std::vector<std::string>& names) {
    return {{"certified", r.certified()},
            {"minors", to_json(r.minors, names)},
            {"hypersurface", r.hypersurface ? poly_text(*r.hypersurface, names) : Json(nullptr)}};
}

Json to_json(const PlaneSearch& s) {
    return {{"found", s.plane.has_value()},
            {"attempts", s.attempts},
            {"plane", s.plane ? to_json(*s.plane) : Json(nullptr)},
            {"last_witness", s.last_witness ? poly_text(*s.last_witness, line_names()) : Json(nullptr)}};
}

Json to_json(const ComplReport& r) {
    Json pairs = Json::array();
    for (const auto& p : r.pairs)
        pairs.push_back({{"coeffs", rat_list({p.a1, p.b1, p.a2, p.b2})}, {"xi", to_json(p.xi)}, {"eta", to_json(p.eta)}, {"rank", p.rank}});
    return {{"b", r.b}, {"skipped_dependent", r.skipped_dependent}, {"pairs", pairs}};
}

Json to_json(const BolsReport& r) {
    return {{"b", r.b}, {"max_rank", r.max_rank}, {"trials", r.trials}, {"best_eta", to_json(r.best_eta)}};
}

Json to_json(const Ratio& r) { return Json::array({to_json(r.a), to_json(r.b)}); }

Json to_json(const RankProfile& p) {
    Json reg = Json::array(), sing = Json::array();
    for (const auto& r : p.regular) reg.push_back(to_json(r));
    for (const auto& r : p.singular) sing.push_back(to_json(r));
    return {{"m", p.m}, {"regular", reg}, {"singular", sing}, {"unsampled_singular_bound", p.unsampled_singular_bound}};
}

Json to_json(const PhiOperator& phi) {
    Json comp = Json::array();
    for (const auto& v : phi.complement) comp.push_back(to_json(v));
    return {{"a_choice", to_json(phi.a_choice)},
            {"b_choice", to_json(phi.b_choice)},
            {"complement", comp},
            {"matrix", to_json(phi.matrix)},
            {"char_poly", rat_list(phi.char_poly)},
            {"rational_eigenvalues", rat_list(phi.rational_eigenvalues)},
            {"residual_factor", rat_list(phi.residual_factor)}};
}

Json to_json(const Com1Report& r) {
    Json checks = Json::array();
    for (const auto& e : r.eigen_checks) checks.push_back({{"lambda", to_json(e.lambda)}, {"rank", e.rank}, {"singular", e.singular}});
    return {{"all_sampled_regular", r.all_sampled_regular},
            {"line_certificate", to_json(r.line_certificate, line_names())},
            {"precondition", r.precondition},
            {"l_equals_ltilde", r.l_equals_ltilde},
            {"dim_l", r.dim_l},
            {"maximal_isotropic_dim", r.maximal_isotropic_dim},
            {"isotropic", r.isotropic},
            {"eigen_checks", checks},
            {"falsified", r.falsified},
            {"detail", r.detail}};
}

Json to_json(const PencilReport& r) {
    return {{"profile", to_json(r.profile)},
            {"L", to_json(r.L)},
            {"image_equality", r.image_equality},
            {"Ltilde", to_json(r.Ltilde)},
            {"phi", r.phi ? to_json(*r.phi) : Json(nullptr)},
            {"com1", to_json(r.com1)}};
}

} // namespace argshift::io
