#ifndef ARGSHIFT_PIPELINE_HPP
#define ARGSHIFT_PIPELINE_HPP

#include "argshift/io.hpp"
#include "argshift/lie_algebra.hpp"
#include "argshift/mpoly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace argshift {

enum class Verdict { Pass, Fail, Error, Falsified };

std::string verdict_name(Verdict v);

/// 0 pass, 1 fail with witness, 2 usage or input error, 3 falsification event.
int exit_code(Verdict v);

/*
 * Machine-readable result of one command. Everything except `timings` is a
 * function of the inputs and the seed, so two runs serialize to the same
 * bytes once timings are dropped.
 */
struct RunReport {
    std::string command;
    io::Json inputs = io::Json::object(); // content hashes
    std::uint64_t seed = 0;
    Verdict verdict = Verdict::Pass;
    io::Json verdicts = io::Json::object();
    io::Json witnesses = io::Json::object();
    io::Json timings = io::Json::object(); // milliseconds by stage

    io::Json to_json() const;
    /// to_json() without timings.
    io::Json deterministic() const;
};

struct PipelineOptions {
    std::uint64_t seed = 0;
    std::size_t trials = 20;   // index estimation and verify_bols
    long bound = 9;            // sample height
    std::size_t plane_attempts = 5;
    std::size_t compl_samples = 20;
};

/*
 * Runs validate, estimate_index, degree_profile, certify_codim2,
 * build_family, certify_commutative, find_regular_plane, verify_compl and
 * verify_bols in that order. A hypothesis that fails stops the run with
 * verdict Fail; a codim-2 refusal is reported ahead of a degree mismatch.
 * Errors become verdict Error tagged with the stage; contradictions of
 * proven statements become Falsified with their reproduction bundle.
 * Without xi a regular point is sampled.
 */
RunReport run_pipeline(const LieAlgebraData& L, const std::vector<MPoly>& casimirs, const std::optional<PointQ>& xi,
                       const PipelineOptions& opts, io::Json inputs = io::Json::object());

} // namespace argshift

#endif // ARGSHIFT_PIPELINE_HPP
