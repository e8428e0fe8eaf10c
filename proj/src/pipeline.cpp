#include "argshift/pipeline.hpp"

#include "argshift/errors.hpp"
#include "argshift/poisson.hpp"
#include "argshift/regcert.hpp"
#include "argshift/report.hpp"
#include "argshift/sampling.hpp"
#include "argshift/shift.hpp"

#include <chrono>

namespace argshift {

std::string verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Error: return "ERROR";
    case Verdict::Falsified: return "FALSIFIED";
    }
    return "ERROR";
}

int exit_code(Verdict v) {
    switch (v) {
    case Verdict::Pass: return 0;
    case Verdict::Fail: return 1;
    case Verdict::Error: return 2;
    case Verdict::Falsified: return 3;
    }
    return 2;
}

io::Json RunReport::to_json() const {
    io::Json j = deterministic();
    j["timings"] = timings;
    return j;
}

io::Json RunReport::deterministic() const {
    return {{"schema", io::kSchema}, {"command", command},   {"inputs", inputs},      {"seed", seed},
            {"verdict", verdict_name(verdict)}, {"verdicts", verdicts}, {"witnesses", witnesses}};
}

namespace {

class StageRunner {
public:
    explicit StageRunner(RunReport& r) : r_(r) {}

    // Runs f under `stage`; false once the report carries a verdict.
    template <class F>
    bool run(const std::string& stage, F&& f) {
        if (stopped_) return false;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            f();
        } catch (const FalsificationEvent& e) {
            stop(Verdict::Falsified, stage, e.what());
            r_.witnesses["falsification"] = {{"stage", stage}, {"what", e.what()}, {"bundle", io::Json::parse(e.bundle(), nullptr, false)}};
        } catch (const Error& e) {
            stop(Verdict::Error, stage, e.what());
        }
        const auto t1 = std::chrono::steady_clock::now();
        r_.timings[stage] = std::chrono::duration<double, std::milli>(t1 - t0).count();
        return !stopped_;
    }

    void stop(Verdict v, const std::string& stage, const std::string& message) {
        stopped_ = true;
        r_.verdict = v;
        r_.verdicts["failed_stage"] = stage;
        r_.verdicts["message"] = message;
    }

    bool stopped() const { return stopped_; }

private:
    RunReport& r_;
    bool stopped_ = false;
};

} // namespace

RunReport run_pipeline(const LieAlgebraData& L, const std::vector<MPoly>& casimirs, const std::optional<PointQ>& xi_in,
                       const PipelineOptions& opts, io::Json inputs) {
    RunReport r;
    r.command = "pipeline run";
    r.inputs = std::move(inputs);
    r.seed = opts.seed;
    StageRunner st(r);
    const auto names = L.coordinate_names();
    auto& v = r.verdicts;

    st.run("validate", [&] {
        const auto rep = validate(L);
        v["validate"] = io::to_json(rep, L);
        if (!rep.ok) {
            r.witnesses["jacobi"] = v["validate"];
            st.stop(Verdict::Fail, "validate", rep.violation);
        }
    });

    AlgebraProfile profile;
    st.run("estimate_index", [&] {
        profile = estimate_index(L, opts.trials, opts.seed, opts.bound);
        v["estimate_index"] = io::to_json(profile);
    });

    std::optional<CasimirSet> C;
    st.run("casimirs", [&] {
        C = verify_casimirs(L, casimirs, opts.seed, opts.bound);
        v["casimirs"] = io::to_json(*C, names);
    });

    DegreeProfile degrees;
    st.run("degree_profile", [&] {
        degrees = degree_profile(*C, profile);
        v["degree_profile"] = io::to_json(degrees);
    });

    std::optional<Codim2Result> codim2;
    st.run("codim2", [&] {
        codim2 = certify_codim2(L, profile, opts.seed);
        v["codim2"] = io::to_json(*codim2, names);
        if (!codim2->certified()) {
            r.witnesses["hypersurface"] = v["codim2"]["hypersurface"];
            st.stop(Verdict::Fail, "codim2", "singular set contains a hypersurface");
        }
    });
    if (!st.stopped() && degrees.verdict != DegreeVerdict::Exact) {
        r.witnesses["degree_profile"] = degrees.arithmetic;
        st.stop(Verdict::Fail, "degree_profile", "sum of Casimir degrees is " + verdict_name(degrees.verdict) + " relative to b(q)");
    }

    PointQ xi;
    st.run("choose_xi", [&] {
        if (xi_in) {
            if (xi_in->size() != L.dim()) throw DimensionMismatch("xi has the wrong number of coordinates");
            xi = *xi_in;
            v["xi"] = {{"point", io::to_json(xi)}, {"source", "supplied"}, {"regular", is_regular(L, profile, xi)}};
            return;
        }
        xi = sample_regular_point(L, profile, opts.seed, opts.bound);
        v["xi"] = {{"point", io::to_json(xi)}, {"source", "sampled"}, {"regular", true}};
    });

    std::optional<ShiftFamily> F;
    st.run("build_family", [&] {
        F = build_family(L, *C, xi);
        v["build_family"] = io::to_json(*F, names);
    });

    st.run("certify_commutative", [&] {
        const auto rep = certify_commutative(L, *F);
        v["certify_commutative"] = io::to_json(rep, *F, names);
        if (!rep.passed()) {
            throw FalsificationEvent("nonzero bracket inside a shift family",
                                     io::Json{{"algebra", io::to_json(L)}, {"xi", io::to_json(xi)}, {"nonzero", v["certify_commutative"]["nonzero"]}}.dump());
        }
    });

    std::optional<PlaneSpec> plane;
    st.run("find_regular_plane", [&] {
        const auto s = find_regular_plane(L, profile, xi, opts.plane_attempts, opts.seed, opts.bound);
        v["find_regular_plane"] = io::to_json(s);
        v["codim3"] = {{"status", "not certified"},
                       {"plane_statistics", {{"attempts", s.attempts}, {"certified_plane", s.plane.has_value()}}}};
        if (!s.plane) {
            if (s.last_witness) r.witnesses["plane"] = io::poly_text(*s.last_witness, io::line_names());
            st.stop(Verdict::Fail, "find_regular_plane", "no certified regular plane through xi");
            return;
        }
        plane = s.plane;
    });

    std::optional<ComplReport> compl_rep;
    st.run("verify_compl", [&] {
        compl_rep = verify_compl(L, *C, profile, *codim2, *plane, opts.compl_samples, opts.seed, opts.bound);
        v["verify_compl"] = io::to_json(*compl_rep);
    });

    std::optional<BolsReport> bols;
    st.run("verify_bols", [&] {
        bols = verify_bols(L, *C, profile, *codim2, xi, opts.trials, opts.seed, opts.bound);
        v["verify_bols"] = io::to_json(*bols);
    });

    st.run("maximality", [&] {
        io::Json& m = v["maximality"];
        m = {{"status", "not machine-checked"}, {"reason", "implied only under codim-3, which is not certified"}};
        if (!C->homogeneous()) {
            m["linear_search"] = "skipped: generators are not homogeneous";
            return;
        }
        const SubspaceQ cent = linear_centralizer(L, *F);
        m["linear_centralizer_dim"] = cent.dim();
        for (const auto& coeffs : cent.basis()) {
            MPoly ell(L.dim());
            for (std::size_t i = 0; i < L.dim(); ++i)
                if (!coeffs[i].is_zero()) ell += coeffs[i] * MPoly::variable(L.dim(), i);
            if (!nonmembership_linear(*F, ell)) continue;
            std::size_t zeros = 0;
            for (const auto& f : F->polys()) zeros += bracket(L, ell, f).is_zero() ? 1 : 0;
            m["status"] = "refuted by witness";
            r.witnesses["non_maximality"] = {{"linear_form", io::poly_text(ell, names)},
                                             {"zero_brackets", zeros},
                                             {"members", F->size()},
                                             {"in_family", false}};
            return;
        }
    });

    if (!st.stopped()) {
        v["conclusions"] = {
            {"poisson_commutative", "verified"},
            {"polynomiality", "verified: b(q) generators with independent differentials"},
            {"maximal_dimension", "verified: rank " + std::to_string(bols->max_rank) + " = b(q)"},
            {"maximality", v["maximality"]["status"]}};
    }
    return r;
}

} // namespace argshift
