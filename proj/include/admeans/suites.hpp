#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "admeans/random.hpp"

namespace admeans {

// A replayable property-violation record: regenerate the trial's inputs with
// trial_rng(seed, index).
struct Witness {
    int index = 0;
    std::uint64_t seed = 0;
    std::string detail;
    nlohmann::json inputs;      // matrices in the matrix-file schema
    std::string classification; // set by the extended-precision recheck

    bool operator==(const Witness&) const = default;
};

struct SuiteOptions {
    // Rerun every witness at extended precision (~32 significant digits) and
    // tag it genuine vs roundoff. Off by default.
    bool recheck_witnesses = false;
};

struct PropertyReport {
    std::string suite;
    int trials = 0;
    int violations = 0;
    bool inverted_polarity = false; // suite passes when violations are FOUND
    double wall_time_seconds = 0.0;
    InstanceSpec spec;
    std::vector<Witness> witnesses;

    bool passed() const { return inverted_polarity ? violations > 0 : violations == 0; }

    nlohmann::json to_json() const;
    static PropertyReport from_json(const nlohmann::json& j);
};

// One dataset entry reproducing a numbered example from the literature the
// library implements; run() returns a failure description or nullopt.
struct PaperExample {
    std::string id;
    std::string description;
    std::function<std::optional<std::string>(const ToleranceConfig&)> run;
};

const std::vector<PaperExample>& paper_example_registry();

const std::vector<std::string>& suite_names();

// Executes `name` over spec.count generated trials (or the fixed registry for
// paper-examples). Throws UnknownSuite. The question42-survey suite has
// inverted pass polarity: witnesses are the refutations it exists to find.
PropertyReport run_suite(const std::string& name, const InstanceSpec& spec,
                         const ToleranceConfig& tol = {});
PropertyReport run_suite(const std::string& name, const InstanceSpec& spec,
                         const ToleranceConfig& tol, const SuiteOptions& options);

} // namespace admeans
