#include "argshift/errors.hpp"
#include "argshift/io.hpp"
#include "argshift/pencil.hpp"
#include "argshift/pipeline.hpp"
#include "argshift/poisson.hpp"
#include "argshift/regcert.hpp"
#include "argshift/report.hpp"
#include "argshift/shift.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>

using namespace argshift;
using io::Json;

namespace {

struct Globals {
    std::uint64_t seed = 0;
    std::size_t trials = 20;
    long bound = 9;
    std::string out;
};

// A JSON argument: inline text when it starts with '{' or '[', a file path otherwise.
Json load_arg(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
        try {
            return Json::parse(arg);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("inline JSON: ") + e.what());
        }
    }
    return io::read_json_file(arg);
}

// "1,0,-1/2", "[1, 0, \"-1/2\"]" or a JSON array.
PointQ parse_point(const std::string& text, std::size_t dim) {
    const auto first = text.find_first_not_of(" \t");
    if (first != std::string::npos && text[first] == '[') return io::point_from_json(load_arg(text), dim);
    VecQ v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        v.push_back(Rat::parse(item));
    }
    return io::point_from_json(io::to_json(v), dim);
}

std::string input_hash(const Json& j) { return io::fnv1a_hex(j.dump()); }

struct Loaded {
    LieAlgebraData L;
    Json inputs = Json::object();
};

Loaded load_algebra_arg(const std::string& arg) {
    const Json j = load_arg(arg);
    return {io::load_algebra(j), {{"algebra", input_hash(j)}}};
}

std::vector<MPoly> load_casimirs_arg(const std::string& arg, const LieAlgebraData& L, Json& inputs) {
    const Json j = load_arg(arg);
    inputs["casimirs"] = input_hash(j);
    return io::casimirs_from_json(j, L);
}

RunReport make_report(const std::string& command, const Globals& g, Json inputs) {
    RunReport r;
    r.command = command;
    r.seed = g.seed;
    r.inputs = std::move(inputs);
    return r;
}

AlgebraProfile profile_of(const LieAlgebraData& L, const Globals& g) { return estimate_index(L, g.trials, g.seed, g.bound); }

// Regular point from --xi, or sampled.
PointQ xi_or_sample(const LieAlgebraData& L, const AlgebraProfile& p, const std::string& xi, const Globals& g) {
    if (!xi.empty()) return parse_point(xi, L.dim());
    return sample_regular_point(L, p, g.seed, g.bound);
}

int emit(const RunReport& r, const Globals& g) {
    const std::string text = r.to_json().dump(2);
    std::cout << text << '\n';
    if (!g.out.empty()) {
        std::ofstream f(g.out);
        if (!f) {
            std::cerr << "cannot write " << g.out << '\n';
            return 2;
        }
        f << text << '\n';
    }
    return exit_code(r.verdict);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for argument shift subalgebras of Lie-Poisson algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--seed", g.seed, "Random seed (default 0)");
    app.add_option("--trials", g.trials, "Random trials for index estimation and rank maxima");
    app.add_option("--bound", g.bound, "Sample height: coordinates drawn from [-B, B]");
    app.add_option("--out", g.out, "Also write the report to FILE");

    std::function<RunReport()> action;
    std::string alg, cas, xi, eta, f_text, g_text, pencil_file, p1, p2;

    auto* algebra = app.add_subcommand("algebra", "Load, build and validate algebras")->require_subcommand(1);
    auto* a_validate = algebra->add_subcommand("validate", "Antisymmetry and Jacobi identity");
    a_validate->add_option("algebra", alg, "Algebra document or construction")->required();
    a_validate->callback([&] {
        action = [&] {
            const Json j = load_arg(alg);
            auto r = make_report("algebra validate", g, {{"algebra", input_hash(j)}});
            ValidationReport rep;
            std::vector<std::string> names;
            if (j.is_object() && j.contains("construct")) {
                const auto L = io::build_algebra(j);
                names = L.basis_names();
                rep = validate(L);
            } else {
                const auto rows = io::bracket_entries_from_json(j, names);
                rep = validate_entries(names, rows);
            }
            const LieAlgebraData shown(names);
            r.verdicts["validate"] = io::to_json(rep, shown);
            if (!rep.ok) {
                r.verdict = Verdict::Fail;
                r.witnesses["jacobi"] = r.verdicts["validate"];
            }
            return r;
        };
    });
    auto* a_build = algebra->add_subcommand("build", "Expand a construction into a structure-constant table");
    a_build->add_option("spec", alg, "Construction spec")->required();
    a_build->callback([&] {
        action = [&] {
            const auto [L, inputs] = load_algebra_arg(alg);
            auto r = make_report("algebra build", g, inputs);
            r.verdicts["algebra"] = io::to_json(L);
            r.verdicts["valid"] = validate(L).ok;
            return r;
        };
    });

    auto* poisson = app.add_subcommand("poisson", "Lie-Poisson brackets, Casimirs and the index")->require_subcommand(1);
    auto* p_bracket = poisson->add_subcommand("bracket", "{f, g}, or the frozen bracket with --xi");
    p_bracket->add_option("algebra", alg)->required();
    p_bracket->add_option("f", f_text)->required();
    p_bracket->add_option("g", g_text)->required();
    p_bracket->add_option("--xi", xi, "Freeze the bracket at xi");
    p_bracket->callback([&] {
        action = [&] {
            const auto [L, inputs] = load_algebra_arg(alg);
            const auto names = L.coordinate_names();
            const MPoly f = io::parse_poly(f_text, names);
            const MPoly h = io::parse_poly(g_text, names);
            auto r = make_report("poisson bracket", g, inputs);
            r.verdicts["f"] = io::poly_text(f, names);
            r.verdicts["g"] = io::poly_text(h, names);
            if (xi.empty()) {
                r.verdicts["bracket"] = io::poly_text(bracket(L, f, h), names);
            } else {
                const PointQ p = parse_point(xi, L.dim());
                r.verdicts["xi"] = io::to_json(p);
                r.verdicts["bracket"] = io::poly_text(frozen_bracket(L, f, h, p), names);
            }
            return r;
        };
    });
    auto* p_cas = poisson->add_subcommand("casimir-check", "Centrality and independence of generators");
    p_cas->add_option("algebra", alg)->required();
    p_cas->add_option("casimirs", cas)->required();
    p_cas->callback([&] {
        action = [&] {
            auto [L, inputs] = load_algebra_arg(alg);
            const auto gens = load_casimirs_arg(cas, L, inputs);
            const auto names = L.coordinate_names();
            auto r = make_report("poisson casimir-check", g, inputs);
            Json checks = Json::array();
            for (const auto& f : gens) {
                const auto c = is_casimir(L, f);
                Json e{{"poly", io::poly_text(f, names)}, {"is_casimir", c.is_casimir}};
                if (c.witness_index) {
                    e["witness"] = {{"coordinate", names[*c.witness_index]}, {"bracket", io::poly_text(c.witness_bracket, names)}};
                    r.verdict = Verdict::Fail;
                    r.witnesses["non_central"] = e;
                }
                checks.push_back(e);
            }
            r.verdicts["generators"] = checks;
            if (r.verdict == Verdict::Pass) r.verdicts["set"] = io::to_json(verify_casimirs(L, gens, g.seed, g.bound), names);
            return r;
        };
    });
    auto* p_index = poisson->add_subcommand("index", "Estimate ind q by sampled Kirillov ranks");
    p_index->add_option("algebra", alg)->required();
    p_index->callback([&] {
        action = [&] {
            const auto [L, inputs] = load_algebra_arg(alg);
            auto r = make_report("poisson index", g, inputs);
            r.verdicts["profile"] = io::to_json(profile_of(L, g));
            return r;
        };
    });

    auto* shift = app.add_subcommand("shift", "Argument shift families")->require_subcommand(1);
    auto family_cmd = [&](CLI::App* sub, bool certify) {
        sub->add_option("algebra", alg)->required();
        sub->add_option("casimirs", cas)->required();
        sub->add_option("--xi", xi, "Shift point; sampled regular when absent");
        sub->callback([&, certify] {
            action = [&, certify] {
                auto [L, inputs] = load_algebra_arg(alg);
                const auto C = verify_casimirs(L, load_casimirs_arg(cas, L, inputs), g.seed, g.bound);
                const auto names = L.coordinate_names();
                const PointQ p = xi_or_sample(L, profile_of(L, g), xi, g);
                const auto F = build_family(L, C, p);
                auto r = make_report(certify ? "shift certify" : "shift build", g, inputs);
                r.verdicts["family"] = io::to_json(F, names);
                if (certify) {
                    const auto rep = certify_commutative(L, F);
                    r.verdicts["certify_commutative"] = io::to_json(rep, F, names);
                    if (!rep.passed()) {
                        r.verdict = Verdict::Falsified;
                        r.witnesses["nonzero_brackets"] = r.verdicts["certify_commutative"]["nonzero"];
                    }
                }
                return r;
            };
        });
    };
    family_cmd(shift->add_subcommand("build", "Generators of F_xi"), false);
    family_cmd(shift->add_subcommand("certify", "Symbolic Poisson commutativity of F_xi"), true);

    auto* reg = app.add_subcommand("reg", "Regularity certificates")->require_subcommand(1);
    auto* r_point = reg->add_subcommand("point", "Regularity of xi, and the differential criterion given Casimirs");
    r_point->add_option("algebra", alg)->required();
    r_point->add_option("casimirs", cas);
    r_point->add_option("--xi", xi)->required();
    r_point->callback([&] {
        action = [&] {
            auto [L, inputs] = load_algebra_arg(alg);
            const auto p = profile_of(L, g);
            const PointQ x = parse_point(xi, L.dim());
            auto r = make_report("reg point", g, inputs);
            r.verdicts["profile"] = io::to_json(p);
            r.verdicts["rank"] = rank(kirillov_matrix(L, x));
            r.verdicts["regular"] = is_regular(L, p, x);
            if (!cas.empty()) {
                const auto C = verify_casimirs(L, load_casimirs_arg(cas, L, inputs), g.seed, g.bound);
                r.inputs = inputs;
                const auto k = kostant_criterion(L, C, p, x);
                r.verdicts["kostant"] = io::to_json(k);
                if (!k.agree()) {
                    r.verdict = Verdict::Falsified;
                    r.witnesses["kostant_disagreement"] = {{"xi", io::to_json(x)}, {"check", r.verdicts["kostant"]}};
                }
            }
            return r;
        };
    });
    auto* r_plane = reg->add_subcommand("plane", "Certify span(xi, eta) minus 0 regular, or search for eta");
    r_plane->add_option("algebra", alg)->required();
    r_plane->add_option("--xi", xi)->required();
    r_plane->add_option("--eta", eta, "Second point; searched when absent");
    r_plane->callback([&] {
        action = [&] {
            const auto [L, inputs] = load_algebra_arg(alg);
            const auto p = profile_of(L, g);
            const PointQ x = parse_point(xi, L.dim());
            auto r = make_report("reg plane", g, inputs);
            if (!eta.empty()) {
                const auto P = certify_regular_plane(L, p, x, parse_point(eta, L.dim()), g.seed);
                r.verdicts["plane"] = io::to_json(P);
                if (!P.certified()) {
                    r.verdict = Verdict::Fail;
                    r.witnesses["singular_directions"] = r.verdicts["plane"]["certificate"]["gcd"];
                }
            } else {
                const auto s = find_regular_plane(L, p, x, 5, g.seed, g.bound);
                r.verdicts["search"] = io::to_json(s);
                if (!s.plane) {
                    r.verdict = Verdict::Fail;
                    if (s.last_witness) r.witnesses["singular_directions"] = io::poly_text(*s.last_witness, io::line_names());
                }
            }
            return r;
        };
    });
    auto* r_codim2 = reg->add_subcommand("codim2", "Minor-gcd certificate for codimension >= 2 of the singular set");
    r_codim2->add_option("algebra", alg)->required();
    r_codim2->callback([&] {
        action = [&] {
            const auto [L, inputs] = load_algebra_arg(alg);
            const auto p = profile_of(L, g);
            const auto c = certify_codim2(L, p, g.seed);
            auto r = make_report("reg codim2", g, inputs);
            r.verdicts["profile"] = io::to_json(p);
            r.verdicts["codim2"] = io::to_json(c, L.coordinate_names());
            if (!c.certified()) {
                r.verdict = Verdict::Fail;
                r.witnesses["hypersurface"] = r.verdicts["codim2"]["hypersurface"];
            }
            return r;
        };
    });
    auto consequence_cmd = [&](CLI::App* sub, bool compl_check) {
        sub->add_option("algebra", alg)->required();
        sub->add_option("casimirs", cas)->required();
        sub->add_option("--xi", xi, "Regular point; sampled when absent");
        sub->callback([&, compl_check] {
            action = [&, compl_check] {
                auto [L, inputs] = load_algebra_arg(alg);
                const auto C = verify_casimirs(L, load_casimirs_arg(cas, L, inputs), g.seed, g.bound);
                const auto p = profile_of(L, g);
                const auto codim2 = certify_codim2(L, p, g.seed);
                const PointQ x = xi_or_sample(L, p, xi, g);
                auto r = make_report(compl_check ? "reg compl" : "reg bols", g, inputs);
                r.verdicts["codim2_certified"] = codim2.certified();
                if (compl_check) {
                    const auto s = find_regular_plane(L, p, x, 5, g.seed, g.bound);
                    r.verdicts["search"] = io::to_json(s);
                    if (!s.plane) {
                        r.verdict = Verdict::Fail;
                        return r;
                    }
                    r.verdicts["compl"] = io::to_json(verify_compl(L, C, p, codim2, *s.plane, g.trials, g.seed, g.bound));
                } else {
                    r.verdicts["bols"] = io::to_json(verify_bols(L, C, p, codim2, x, g.trials, g.seed, g.bound));
                }
                return r;
            };
        });
    };
    consequence_cmd(reg->add_subcommand("compl", "Jacobian rank b(q) at pairs on a certified regular plane"), true);
    consequence_cmd(reg->add_subcommand("bols", "Maximal Jacobian rank of F_xi over random points"), false);

    auto* pencil = app.add_subcommand("pencil", "Pencils of skew forms")->require_subcommand(1);
    auto* pe_analyze = pencil->add_subcommand("analyze", "L, L~, Phi and the all-regular consequences");
    pe_analyze->add_option("pencil", pencil_file, "{\"A\": matrix, \"B\": matrix}");
    pe_analyze->add_option("--algebra", alg, "Use A = K_p1, B = K_p2 on this algebra");
    pe_analyze->add_option("--p1", p1);
    pe_analyze->add_option("--p2", p2);
    pe_analyze->callback([&] {
        action = [&] {
            Json inputs;
            std::optional<SkewPencil> P;
            if (!alg.empty()) {
                if (p1.empty() || p2.empty()) throw ParseError("--algebra needs --p1 and --p2");
                auto loaded = load_algebra_arg(alg);
                inputs = loaded.inputs;
                P.emplace(SkewPencil::from_kirillov(loaded.L, parse_point(p1, loaded.L.dim()), parse_point(p2, loaded.L.dim()), g.seed));
            } else {
                if (pencil_file.empty()) throw ParseError("pencil analyze needs a pencil file or --algebra");
                const Json j = load_arg(pencil_file);
                inputs = {{"pencil", input_hash(j)}};
                try {
                    P.emplace(io::matrix_from_json(j.at("A")), io::matrix_from_json(j.at("B")), g.seed);
                } catch (const nlohmann::json::exception& e) {
                    throw ParseError(std::string("pencil document: ") + e.what());
                }
            }
            auto r = make_report("pencil analyze", g, inputs);
            const auto rep = analyze(*P);
            r.verdicts["pencil"] = io::to_json(rep);
            if (rep.com1.falsified) {
                r.verdict = Verdict::Falsified;
                r.witnesses["com1"] = rep.com1.detail;
            }
            return r;
        };
    });

    auto* pipeline = app.add_subcommand("pipeline", "All hypotheses and checkable consequences")->require_subcommand(1);
    auto* pl_run = pipeline->add_subcommand("run", "validate, index, degrees, codim-2, family, brackets, plane, ranks");
    pl_run->add_option("algebra", alg)->required();
    pl_run->add_option("casimirs", cas)->required();
    pl_run->add_option("--xi", xi, "Shift point; sampled regular when absent");
    pl_run->callback([&] {
        action = [&] {
            auto [L, inputs] = load_algebra_arg(alg);
            const auto gens = load_casimirs_arg(cas, L, inputs);
            PipelineOptions opts;
            opts.seed = g.seed;
            opts.trials = g.trials;
            opts.bound = g.bound;
            std::optional<PointQ> x;
            if (!xi.empty()) x = parse_point(xi, L.dim());
            return run_pipeline(L, gens, x, opts, inputs);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return emit(action(), g);
    } catch (const FalsificationEvent& e) {
        RunReport r;
        r.command = "falsification";
        r.seed = g.seed;
        r.verdict = Verdict::Falsified;
        r.witnesses["falsification"] = {{"what", e.what()}, {"bundle", Json::parse(e.bundle(), nullptr, false)}};
        return emit(r, g);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
