#include "argshift/io.hpp"

#include "argshift/errors.hpp"
#include "argshift/poisson.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace argshift::io {

Json to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    throw ParseError("expected a rational (string \"p/q\" or integer), got " + j.dump());
}

Json to_json(const VecQ& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

VecQ vec_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an array of rationals, got " + j.dump());
    VecQ v;
    v.reserve(j.size());
    for (const auto& x : j) v.push_back(rat_from_json(x));
    return v;
}

Json to_json(const PointQ& p) { return to_json(p.coords); }

PointQ point_from_json(const Json& j, std::size_t dim) {
    PointQ p(vec_from_json(j));
    if (p.size() != dim) {
        throw ParseError("point has " + std::to_string(p.size()) + " coordinates, expected " + std::to_string(dim));
    }
    return p;
}

Json to_json(const MatQ& M) {
    Json a = Json::array();
    for (std::size_t i = 0; i < M.rows(); ++i) a.push_back(to_json(M.row(i)));
    return a;
}

MatQ matrix_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected a matrix as an array of rows");
    std::vector<VecQ> rows;
    for (const auto& r : j) rows.push_back(vec_from_json(r));
    for (const auto& r : rows)
        if (r.size() != rows.front().size()) throw ParseError("matrix rows differ in length");
    return MatQ::from_rows(rows);
}

Json to_json(const SubspaceQ& U) {
    Json basis = Json::array();
    for (const auto& v : U.basis()) basis.push_back(to_json(v));
    return {{"ambient", U.ambient_dim()}, {"dim", U.dim()}, {"basis", basis}};
}

Json to_json(const MPoly& f) {
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms()) terms.push_back({{"coeff", to_json(c)}, {"exps", e}});
    return {{"nvars", f.nvars()}, {"terms", terms}};
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, const std::vector<std::string>& names) : s_(text), names_(names) {}

    MPoly parse() {
        MPoly out(names_.size());
        skip();
        if (pos_ == s_.size()) fail("empty polynomial");
        bool first = true;
        while (pos_ < s_.size()) {
            Rat sign(1);
            if (peek() == '+' || peek() == '-') {
                if (peek() == '-') sign = Rat(-1);
                ++pos_;
                skip();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            out += term() * sign;
            first = false;
            skip();
        }
        return out;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("polynomial text at offset " + std::to_string(pos_) + ": " + msg);
    }

    MPoly term() {
        MPoly t = factor();
        skip();
        while (peek() == '*') {
            ++pos_;
            skip();
            t = t * factor();
            skip();
        }
        return t;
    }

    std::string digits() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected digits");
        return std::string(s_.substr(start, pos_ - start));
    }

    MPoly factor() {
        const std::size_t n = names_.size();
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string lit = digits();
            if (peek() == '/') {
                ++pos_;
                lit += "/" + digits();
            }
            return MPoly::constant(n, Rat::parse(lit));
        }
        const std::size_t start = pos_;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '{' || peek() == '}') ++pos_;
        if (start == pos_) fail("expected a number or a variable");
        const std::string id(s_.substr(start, pos_ - start));
        std::size_t var = n;
        for (std::size_t k = 0; k < n; ++k)
            if (names_[k] == id || names_[k] == "x_" + id) var = k;
        if (var == n) fail("unknown variable '" + id + "'");
        unsigned power = 1;
        skip();
        if (peek() == '^') {
            ++pos_;
            skip();
            power = static_cast<unsigned>(std::stoul(digits()));
        }
        return pow(MPoly::variable(n, var), power);
    }

    std::string_view s_;
    const std::vector<std::string>& names_;
    std::size_t pos_ = 0;
};

} // namespace

MPoly parse_poly(std::string_view text, const std::vector<std::string>& names) { return PolyParser(text, names).parse(); }

MPoly poly_from_json(const Json& j, std::size_t nvars, const std::vector<std::string>& names) {
    if (j.is_string()) {
        if (names.size() != nvars) throw ParseError("polynomial text needs one name per variable");
        return parse_poly(j.get<std::string>(), names);
    }
    if (!j.is_object() || !j.contains("terms")) throw ParseError("expected a polynomial object or text, got " + j.dump());
    const std::size_t nv = j.value("nvars", nvars);
    if (nv != nvars) throw ParseError("polynomial has " + std::to_string(nv) + " variables, expected " + std::to_string(nvars));
    MPoly f(nvars);
    for (const auto& t : j.at("terms")) {
        auto e = t.at("exps").get<Exponents>();
        if (e.size() != nvars) throw ParseError("exponent vector length differs from nvars");
        f.add_term(e, rat_from_json(t.at("coeff")));
    }
    return f;
}

Json to_json(const LieAlgebraData& L) {
    Json brackets = Json::array();
    for (const auto& [key, coeffs] : L.upper_table()) {
        Json c = Json::object();
        for (const auto& [k, v] : coeffs) c[std::to_string(k)] = to_json(v);
        brackets.push_back({{"i", key.first}, {"j", key.second}, {"coeffs", c}});
    }
    return {{"dim", L.dim()}, {"basis", L.basis_names()}, {"brackets", brackets}};
}

std::vector<BracketEntry> bracket_entries_from_json(const Json& j, std::vector<std::string>& names) {
    try {
        if (j.contains("basis")) {
            names = j.at("basis").get<std::vector<std::string>>();
        } else {
            names.clear();
            for (std::size_t k = 0; k < j.at("dim").get<std::size_t>(); ++k) names.push_back("b" + std::to_string(k + 1));
        }
        if (j.contains("dim") && j.at("dim").get<std::size_t>() != names.size()) throw ParseError("dim disagrees with basis length");
        std::vector<BracketEntry> rows;
        for (const auto& b : j.value("brackets", Json::array())) {
            BracketEntry e;
            e.i = b.at("i").get<std::size_t>();
            e.j = b.at("j").get<std::size_t>();
            for (const auto& [k, v] : b.at("coeffs").items()) {
                const std::size_t idx = std::stoul(k);
                if (idx >= names.size()) throw ParseError("coefficient index " + k + " out of range");
                const Rat c = rat_from_json(v);
                if (!c.is_zero()) e.coeffs[idx] = c;
            }
            if (e.i >= names.size() || e.j >= names.size()) throw ParseError("bracket index out of range");
            rows.push_back(std::move(e));
        }
        return rows;
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("malformed algebra document: ") + ex.what());
    } catch (const std::invalid_argument&) {
        throw ParseError("coefficient keys must be basis indices");
    }
}

LieAlgebraData algebra_from_json(const Json& j) {
    std::vector<std::string> names;
    auto rows = bracket_entries_from_json(j, names);
    try {
        return from_entries(std::move(names), rows);
    } catch (const PreconditionFailed& e) {
        throw ParseError(e.what());
    }
}

namespace {

std::vector<std::size_t> size_list(const Json& j) { return j.get<std::vector<std::size_t>>(); }

} // namespace

LieAlgebraData build_algebra(const Json& spec) {
    try {
        const auto kind = spec.at("construct").get<std::string>();
        if (kind == "classical") {
            return make_classical(parse_family(spec.at("family").get<std::string>()), spec.at("n").get<std::size_t>());
        }
        if (kind == "vinberg") return make_vinberg(vec_from_json(spec.at("eigenvalues")));
        if (kind == "takiff") return make_takiff(load_algebra(spec.at("base")), spec.at("n").get<std::size_t>());
        if (kind == "z2_contraction") {
            return make_z2_contraction(load_algebra(spec.at("base")), spec.at("parity").get<std::vector<int>>());
        }
        if (kind == "semidirect") {
            std::vector<MatQ> rho;
            for (const auto& m : spec.at("rho")) rho.push_back(matrix_from_json(m));
            return make_semidirect(load_algebra(spec.at("base")), rho,
                                   spec.value("v_names", std::vector<std::string>{}));
        }
        if (kind == "rebase") {
            return rebase(load_algebra(spec.at("base")), matrix_from_json(spec.at("basis")),
                          spec.at("names").get<std::vector<std::string>>());
        }
        if (kind == "centralizer_sl") {
            return make_centralizer_sl(spec.at("n").get<std::size_t>(), size_list(spec.at("partition")));
        }
        throw ParseError("unknown construction '" + kind + "'");
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("malformed construction: ") + ex.what());
    }
}

LieAlgebraData load_algebra(const Json& j) {
    if (j.is_object() && j.contains("construct")) return build_algebra(j);
    return algebra_from_json(j);
}

std::vector<MPoly> casimirs_from_json(const Json& j, const LieAlgebraData& L) {
    if (j.is_object() && j.contains("construct")) {
        try {
            const auto kind = j.at("construct").get<std::string>();
            if (kind == "classical") {
                auto C = classical_casimirs(parse_family(j.at("family").get<std::string>()), j.at("n").get<std::size_t>());
                return C.generators();
            }
            if (kind == "takiff_lift") {
                const LieAlgebraData base = load_algebra(j.at("base"));
                const MPoly f = poly_from_json(j.at("f"), base.dim(), base.coordinate_names());
                return takiff_lift(base, f, j.at("n").get<std::size_t>());
            }
            throw ParseError("unknown Casimir construction '" + kind + "'");
        } catch (const nlohmann::json::exception& ex) {
            throw ParseError(std::string("malformed Casimir construction: ") + ex.what());
        }
    }
    const Json& arr = j.is_object() ? j.at("generators") : j;
    if (!arr.is_array()) throw ParseError("expected a list of Casimir generators");
    const auto names = L.coordinate_names();
    std::vector<MPoly> out;
    for (const auto& g : arr) out.push_back(poly_from_json(g, L.dim(), names));
    return out;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

} // namespace argshift::io
