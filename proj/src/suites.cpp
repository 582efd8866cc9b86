#include "admeans/suites.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "admeans/highprec.hpp"
#include "admeans/matrix_io.hpp"
#include "admeans/means.hpp"
#include "admeans/schur.hpp"

namespace admeans {

using nlohmann::json;

namespace {

std::string fmt(double v) {
    std::ostringstream out;
    out << std::setprecision(17) << v;
    return out.str();
}

std::string fmt(const Complex& z) {
    return fmt(z.real()) + (z.imag() < 0 ? "" : "+") + fmt(z.imag()) + "i";
}

int draw_dim(std::mt19937_64& rng, int max_dim, int min_dim = 1) {
    const int hi = std::max(max_dim, min_dim);
    return std::uniform_int_distribution<int>(min_dim, hi)(rng);
}

Eigen::Index draw_split(std::mt19937_64& rng, Eigen::Index n) {
    return std::uniform_int_distribution<Eigen::Index>(1, n - 1)(rng);
}

MeanKind cycle_kind(int index) {
    switch (index % 3) {
        case 0: return MeanKind::Arithmetic;
        case 1: return MeanKind::Geometric;
        default: return MeanKind::Harmonic;
    }
}

MeanKind kind_from_string(const std::string& s) {
    if (s == "arithmetic") return MeanKind::Arithmetic;
    if (s == "geometric") return MeanKind::Geometric;
    if (s == "harmonic") return MeanKind::Harmonic;
    throw InvalidInput("unknown mean kind: " + s);
}

struct TrialResult {
    bool violated = false;
    std::string detail;
    json inputs;
};

using TrialFn = std::function<TrialResult(int index, std::mt19937_64& rng)>;

PropertyReport run_trials(const std::string& name, const InstanceSpec& spec, bool inverted,
                          const TrialFn& fn) {
    spec.validate();
    PropertyReport report;
    report.suite = name;
    report.spec = spec;
    report.inverted_polarity = inverted;

    const auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < spec.count; ++i) {
        auto rng = trial_rng(spec.seed, static_cast<std::uint64_t>(i));
        TrialResult result = fn(i, rng);
        ++report.trials;
        if (result.violated) {
            ++report.violations;
            report.witnesses.push_back(
                {i, spec.seed, std::move(result.detail), std::move(result.inputs)});
        }
    }
    report.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

// Condition gate for identity suites over unstructured random blocks: the
// identities are exact, so instances are redrawn until the inverted blocks
// are well conditioned enough that a double-precision evaluation can meet
// the pinned thresholds.
bool well_conditioned(const CMatrix& m, double limit = 1e-2) {
    Eigen::JacobiSVD<CMatrix> svd(m);
    const auto& sv = svd.singularValues();
    return sv(sv.size() - 1) > limit * sv(0);
}

json pair_inputs(const AccretiveDissipativeMatrix& t, const AccretiveDissipativeMatrix& s) {
    return {{"T", matrix_to_json_value(t.matrix())}, {"S", matrix_to_json_value(s.matrix())}};
}

// ---------------------------------------------------------------------------
// Suite bodies
// ---------------------------------------------------------------------------

TrialFn amgmhm_trials(const InstanceSpec& spec, const ToleranceConfig& tol) {
    return [spec, tol](int, std::mt19937_64& rng) {
        const int n = draw_dim(rng, spec.dim);
        const auto t = random_ad(n, spec.conditioning, rng);
        const auto s = random_ad(n, spec.conditioning, rng);
        const auto [am_gm, gm_hm] = check_amgmhm(t, s, tol);
        TrialResult r;
        r.violated = !(am_gm.greater_eq() && gm_hm.greater_eq());
        if (r.violated) {
            r.detail = std::string("arithmetic vs geometric: ") + to_string(am_gm.tag) +
                       ", geometric vs harmonic: " + to_string(gm_hm.tag);
            r.inputs = pair_inputs(t, s);
        }
        return r;
    };
}

TrialFn superadd_trials(MeanKind kind, const InstanceSpec& spec, const ToleranceConfig& tol) {
    return [kind, spec, tol](int, std::mt19937_64& rng) {
        const int n = draw_dim(rng, spec.dim);
        const int m = std::uniform_int_distribution<int>(1, 4)(rng);
        std::vector<std::pair<AccretiveDissipativeMatrix, AccretiveDissipativeMatrix>> pairs;
        pairs.reserve(m);
        for (int j = 0; j < m; ++j)
            pairs.emplace_back(random_ad(n, spec.conditioning, rng),
                               random_ad(n, spec.conditioning, rng));
        const OrderRelation rel = check_superadditivity(kind, pairs, tol);
        TrialResult r;
        r.violated = !rel.greater_eq();
        if (r.violated) {
            r.detail = std::string("mean of sums vs sum of means: ") + to_string(rel.tag);
            json list = json::array();
            for (const auto& [tk, sk] : pairs)
                list.push_back({matrix_to_json_value(tk.matrix()),
                                matrix_to_json_value(sk.matrix())});
            r.inputs = {{"pairs", list}};
        }
        return r;
    };
}

TrialFn congruence_trials(const InstanceSpec& spec, const ToleranceConfig& tol) {
    return [spec, tol](int, std::mt19937_64& rng) {
        const int n = draw_dim(rng, spec.dim);
        const auto t = random_ad(n, spec.conditioning, rng);
        const auto s = random_ad(n, spec.conditioning, rng);
        const CMatrix q = random_nonsingular(n, rng);
        TrialResult r;
        r.violated = !check_congruence(t, s, q, tol);
        if (r.violated) {
            r.detail = "congruence identity residual above tolerance";
            r.inputs = pair_inputs(t, s);
            r.inputs["Q"] = matrix_to_json_value(q);
        }
        return r;
    };
}

TrialFn order_equiv_trials(const InstanceSpec& spec, const ToleranceConfig& tol) {
    return [spec, tol](int index, std::mt19937_64& rng) {
        const int n = draw_dim(rng, spec.dim);
        const auto t = random_ad(n, spec.conditioning, rng);
        // Alternate genuinely comparable pairs with independent (usually
        // incomparable) ones so both branches of the equivalence are hit.
        const auto s = (index % 2 == 0)
                           ? random_ad(n, spec.conditioning, rng)
                           : AccretiveDissipativeMatrix(
                                 t.matrix() + random_ad(n, spec.conditioning, rng).matrix(), tol);
        const OrderEquivalences eq = check_order_equivalences(t, s, tol);
        TrialResult r;
        const bool agree = eq.mean_below_second == eq.first_below_second &&
                           eq.first_below_second == eq.first_below_mean;
        r.violated = !agree || (index % 2 == 1 && !eq.first_below_second);
        if (r.violated) {
            std::ostringstream out;
            out << "predicates disagree: mean<=S " << eq.mean_below_second << ", T<=S "
                << eq.first_below_second << ", T<=mean " << eq.first_below_mean;
            r.detail = out.str();
            r.inputs = pair_inputs(t, s);
        }
        return r;
    };
}

TrialFn thm34_trials(const InstanceSpec& spec, const ToleranceConfig& tol) {
    return [spec, tol](int, std::mt19937_64& rng) {
        const int n = draw_dim(rng, spec.dim);
        const auto t = random_ad(n, spec.conditioning, rng);
        const auto s = random_ad(n, spec.conditioning, rng);
        const OrderRelation rel = check_parallel_vs_harmonic(t, s, tol);
        TrialResult r;
        r.violated = !rel.greater_eq();
        if (r.violated) {
            r.detail = std::string("2(T:S) vs T!S: ") + to_string(rel.tag) +
                       " (real min eig " + fmt(rel.real_part.min_eig) + ", imag min eig " +
                       fmt(rel.imag_part.min_eig) + ")";
            r.inputs = pair_inputs(t, s);
        }
        return r;
    };
}

TrialFn lemma31_trials(const InstanceSpec& spec, const ToleranceConfig&) {
    return [spec](int, std::mt19937_64& rng) {
        const int n = draw_dim(rng, spec.dim, 2);
        const Eigen::Index k = draw_split(rng, n);
        CMatrix a, b;
        for (;;) {
            a = random_complex_gaussian(n, rng);
            b = random_complex_gaussian(n, rng);
            const auto a22 = a.bottomRightCorner(n - k, n - k);
            const auto b22 = b.bottomRightCorner(n - k, n - k);
            if (well_conditioned(a22) && well_conditioned(b22) &&
                well_conditioned(a22 + b22))
                break;
        }
        const auto d = schur_sum_decomposition(a, b, {k});
        const double term_scale = frobenius_norm(d.lhs) +
                                  frobenius_norm(d.correction.x * d.correction.core *
                                                 d.correction.y);
        const double scale = std::max(1.0, term_scale);
        TrialResult r;
        r.violated = d.residual() > 1e-10 * scale;
        if (r.violated) {
            r.detail = "identity residual " + fmt(d.residual()) + " at scale " + fmt(scale);
            r.inputs = {{"A", matrix_to_json_value(a)},
                        {"B", matrix_to_json_value(b)},
                        {"k", k}};
        }
        return r;
    };
}

TrialFn identities_trials(const InstanceSpec& spec, const ToleranceConfig& tol) {
    return [spec, tol](int, std::mt19937_64& rng) {
        const int n = draw_dim(rng, spec.dim);
        const auto t = random_ad(n, spec.conditioning, rng);
        const auto [first, second] = identity_residuals(t, tol);
        const double scale =
            std::max({1.0, frobenius_norm(hermitian_inverse(t.real_part(), tol).get()),
                      frobenius_norm(hermitian_inverse(t.imag_part(), tol).get())});
        TrialResult r;
        r.violated = first > tol.eq_tol * scale || second > tol.eq_tol * scale;
        if (r.violated) {
            r.detail = "identity residuals " + fmt(first) + ", " + fmt(second) + " at scale " +
                       fmt(scale);
            r.inputs = {{"T", matrix_to_json_value(t.matrix())}};
        }
        return r;
    };
}

TrialFn smw_trials(const InstanceSpec& spec, const ToleranceConfig& tol) {
    return [spec, tol](int, std::mt19937_64& rng) {
        const int n = draw_dim(rng, spec.dim);
        const auto t = random_ad(n, spec.conditioning, rng);
        const double residual = smw_residual(t, tol);
        const double scale =
            std::max(1.0, frobenius_norm(hermitian_inverse(t.real_part(), tol).get()));
        TrialResult r;
        r.violated = residual > tol.eq_tol * scale;
        if (r.violated) {
            r.detail = "SMW residual " + fmt(residual) + " at scale " + fmt(scale);
            r.inputs = {{"T", matrix_to_json_value(t.matrix())}};
        }
        return r;
    };
}

TrialFn prop45_trials(const InstanceSpec& spec, const ToleranceConfig& tol) {
    return [spec, tol](int, std::mt19937_64& rng) {
        const int n = draw_dim(rng, spec.dim, 2);
        const Eigen::Index k = draw_split(rng, n);

        const auto check = [&](const CMatrix& t, const CMatrix& s) -> std::pair<bool, double> {
            const CMatrix lhs = schur_complement(parallel_sum(t, s, tol), {k}, tol);
            const CMatrix rhs = parallel_sum(schur_complement(t, {k}, tol),
                                             schur_complement(s, {k}, tol), tol);
            const double scale =
                std::max({1.0, frobenius_norm(lhs), frobenius_norm(rhs)});
            const double residual = frobenius_norm(lhs - rhs);
            return {residual > tol.eq_tol * scale, residual};
        };

        const auto t_ad = random_ad(n, spec.conditioning, rng);
        const auto s_ad = random_ad(n, spec.conditioning, rng);
        const auto [ad_bad, ad_residual] = check(t_ad.matrix(), s_ad.matrix());

        CMatrix t_gen, s_gen;
        for (;;) {
            t_gen = random_nonsingular(n, rng);
            s_gen = random_nonsingular(n, rng);
            const auto ok = [&](const CMatrix& m) {
                return well_conditioned(m) &&
                       well_conditioned(m.bottomRightCorner(n - k, n - k));
            };
            if (ok(t_gen) && ok(s_gen) && well_conditioned(t_gen.inverse() + s_gen.inverse()))
                break;
        }
        const auto [gen_bad, gen_residual] = check(t_gen, s_gen);

        TrialResult r;
        r.violated = ad_bad || gen_bad;
        if (r.violated) {
            r.detail = "equality residuals: cone pair " + fmt(ad_residual) + ", general pair " +
                       fmt(gen_residual);
            r.inputs = {{"T", matrix_to_json_value(t_ad.matrix())},
                        {"S", matrix_to_json_value(s_ad.matrix())},
                        {"T_general", matrix_to_json_value(t_gen)},
                        {"S_general", matrix_to_json_value(s_gen)},
                        {"k", k}};
        }
        return r;
    };
}

TrialFn pd_schur_mean_trials(const InstanceSpec& spec, const ToleranceConfig& tol) {
    return [spec, tol](int index, std::mt19937_64& rng) {
        const int n = draw_dim(rng, spec.dim, 2);
        const Eigen::Index k = draw_split(rng, n);
        const MeanKind kind = cycle_kind(index);
        const auto a = random_hermitian_pd(n, spec.conditioning, rng);
        const auto c = random_hermitian_pd(n, spec.conditioning, rng);
        const OrderRelation rel = check_pd_schur_mean(a, c, kind, {k}, tol);
        TrialResult r;
        r.violated = !rel.greater_eq();
        if (r.violated) {
            r.detail = std::string(to_string(kind)) + " mean complement relation: " +
                       to_string(rel.tag);
            r.inputs = {{"A", matrix_to_json_value(a.get())},
                        {"C", matrix_to_json_value(c.get())},
                        {"k", k},
                        {"kind", to_string(kind)}};
        }
        return r;
    };
}

TrialFn mixed_schur_trials(const InstanceSpec& spec, const ToleranceConfig& tol) {
    return [spec, tol](int, std::mt19937_64& rng) {
        const int n = draw_dim(rng, spec.dim, 2);
        const Eigen::Index k = draw_split(rng, n);
        const auto a = random_hermitian_pd(n, spec.conditioning, rng);
        const auto b = random_hermitian_pd(n, spec.conditioning, rng);
        const OrderRelation rel = check_mixed_schur(a, b, {k}, tol);
        TrialResult r;
        r.violated = !rel.greater_eq();
        if (r.violated) {
            r.detail = std::string("mixed complement relation: ") + to_string(rel.tag);
            r.inputs = {{"A", matrix_to_json_value(a.get())},
                        {"B", matrix_to_json_value(b.get())},
                        {"k", k}};
        }
        return r;
    };
}

TrialFn fm_trials(const InstanceSpec& spec, const ToleranceConfig& tol) {
    return [spec, tol](int, std::mt19937_64& rng) {
        const int n = draw_dim(rng, spec.dim, 2);
        const Eigen::Index k = draw_split(rng, n);
        const auto a = random_hermitian_pd(n, spec.conditioning, rng);
        const auto b = random_hermitian_pd(n, spec.conditioning, rng);
        const OrderRelation rel = check_fm_inequality(a, b, {k}, tol);
        TrialResult r;
        r.violated = !rel.greater_eq();
        if (r.violated) {
            r.detail = std::string("sum complement relation: ") + to_string(rel.tag);
            r.inputs = {{"A", matrix_to_json_value(a.get())},
                        {"B", matrix_to_json_value(b.get())},
                        {"k", k}};
        }
        return r;
    };
}

TrialFn lower_bound_chain_trials(const InstanceSpec& spec, const ToleranceConfig& tol) {
    return [spec, tol](int index, std::mt19937_64& rng) {
        const int n = draw_dim(rng, spec.dim, 2);
        const Eigen::Index k = draw_split(rng, n);
        const MeanKind kind = cycle_kind(index);
        const auto t = random_ad(n, spec.conditioning, rng);
        const auto s = random_ad(n, spec.conditioning, rng);
        const auto [upper, lower] = check_lower_bound_chain(t, s, kind, {k}, tol);
        TrialResult r;
        r.violated = !(upper.greater_eq() && lower.greater_eq());
        if (r.violated) {
            r.detail = std::string("chain relations: ") + to_string(upper.tag) + ", " +
                       to_string(lower.tag);
            r.inputs = pair_inputs(t, s);
            r.inputs["k"] = k;
            r.inputs["kind"] = to_string(kind);
        }
        return r;
    };
}

TrialFn question42_trials(const InstanceSpec& spec, const ToleranceConfig& tol) {
    return [spec, tol](int index, std::mt19937_64& rng) {
        const int n = draw_dim(rng, spec.dim, 2);
        const Eigen::Index k = draw_split(rng, n);
        const MeanKind kind = cycle_kind(index);
        const auto t = random_ad(n, spec.conditioning, rng);
        const auto s = random_ad(n, spec.conditioning, rng);
        const auto outcome = evaluate_question_42(t, s, kind, {k}, tol);
        TrialResult r;
        // Inverted polarity: a refutation (non-GreaterEq outcome) is the find.
        r.violated = !outcome.relation.greater_eq();
        if (r.violated) {
            r.detail = std::string("conjecture falsified for ") + to_string(kind) +
                       " mean: relation " + to_string(outcome.relation.tag);
            r.inputs = pair_inputs(t, s);
            r.inputs["k"] = k;
            r.inputs["kind"] = to_string(kind);
        }
        return r;
    };
}

PropertyReport run_paper_examples(const InstanceSpec& spec, const ToleranceConfig& tol) {
    PropertyReport report;
    report.suite = "paper-examples";
    report.spec = spec;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& example : paper_example_registry()) {
        ++report.trials;
        if (auto failure = example.run(tol)) {
            ++report.violations;
            report.witnesses.push_back({report.trials - 1, spec.seed,
                                        example.id + ": " + *failure,
                                        {{"example", example.id}}});
        }
    }
    report.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "paper-examples", "amgmhm",      "superadd-geo",     "superadd-harm",
        "congruence",     "order-equiv", "thm34",            "lemma31",
        "identities",     "smw",         "prop45",           "pd-schur-mean",
        "mixed-schur",    "fm",          "lower-bound-chain", "question42-survey"};
    return names;
}

PropertyReport run_suite(const std::string& name, const InstanceSpec& spec,
                         const ToleranceConfig& tol) {
    return run_suite(name, spec, tol, SuiteOptions{});
}

PropertyReport run_suite(const std::string& name, const InstanceSpec& spec,
                         const ToleranceConfig& tol, const SuiteOptions& options) {
    PropertyReport report;
    if (name == "paper-examples") {
        report = run_paper_examples(spec, tol);
    } else if (name == "amgmhm") {
        report = run_trials(name, spec, false, amgmhm_trials(spec, tol));
    } else if (name == "superadd-geo") {
        report = run_trials(name, spec, false, superadd_trials(MeanKind::Geometric, spec, tol));
    } else if (name == "superadd-harm") {
        report = run_trials(name, spec, false, superadd_trials(MeanKind::Harmonic, spec, tol));
    } else if (name == "congruence") {
        report = run_trials(name, spec, false, congruence_trials(spec, tol));
    } else if (name == "order-equiv") {
        report = run_trials(name, spec, false, order_equiv_trials(spec, tol));
    } else if (name == "thm34") {
        report = run_trials(name, spec, false, thm34_trials(spec, tol));
    } else if (name == "lemma31") {
        report = run_trials(name, spec, false, lemma31_trials(spec, tol));
    } else if (name == "identities") {
        report = run_trials(name, spec, false, identities_trials(spec, tol));
    } else if (name == "smw") {
        report = run_trials(name, spec, false, smw_trials(spec, tol));
    } else if (name == "prop45") {
        report = run_trials(name, spec, false, prop45_trials(spec, tol));
    } else if (name == "pd-schur-mean") {
        report = run_trials(name, spec, false, pd_schur_mean_trials(spec, tol));
    } else if (name == "mixed-schur") {
        report = run_trials(name, spec, false, mixed_schur_trials(spec, tol));
    } else if (name == "fm") {
        report = run_trials(name, spec, false, fm_trials(spec, tol));
    } else if (name == "lower-bound-chain") {
        report = run_trials(name, spec, false, lower_bound_chain_trials(spec, tol));
    } else if (name == "question42-survey") {
        report = run_trials(name, spec, true, question42_trials(spec, tol));
    } else {
        throw UnknownSuite("unknown suite: " + name);
    }

    if (options.recheck_witnesses) {
        for (auto& witness : report.witnesses)
            witness.classification = to_string(highprec::recheck_witness(name, witness, tol));
    }
    return report;
}

json PropertyReport::to_json() const {
    json witnesses_json = json::array();
    for (const auto& w : witnesses) {
        json entry = {{"index", w.index},
                      {"seed", w.seed},
                      {"detail", w.detail},
                      {"inputs", w.inputs}};
        if (!w.classification.empty()) entry["classification"] = w.classification;
        witnesses_json.push_back(std::move(entry));
    }
    return {{"suite", suite},
            {"trials", trials},
            {"violations", violations},
            {"inverted_polarity", inverted_polarity},
            {"wall_time_seconds", wall_time_seconds},
            {"spec",
             {{"dim", spec.dim},
              {"seed", spec.seed},
              {"conditioning", spec.conditioning},
              {"count", spec.count}}},
            {"witnesses", witnesses_json}};
}

PropertyReport PropertyReport::from_json(const json& j) {
    PropertyReport r;
    r.suite = j.at("suite").get<std::string>();
    r.trials = j.at("trials").get<int>();
    r.violations = j.at("violations").get<int>();
    r.inverted_polarity = j.at("inverted_polarity").get<bool>();
    r.wall_time_seconds = j.at("wall_time_seconds").get<double>();
    const auto& s = j.at("spec");
    r.spec.dim = s.at("dim").get<int>();
    r.spec.seed = s.at("seed").get<std::uint64_t>();
    r.spec.conditioning = s.at("conditioning").get<double>();
    r.spec.count = s.at("count").get<int>();
    for (const auto& w : j.at("witnesses")) {
        Witness witness;
        witness.index = w.at("index").get<int>();
        witness.seed = w.at("seed").get<std::uint64_t>();
        witness.detail = w.at("detail").get<std::string>();
        witness.inputs = w.at("inputs");
        if (w.contains("classification"))
            witness.classification = w.at("classification").get<std::string>();
        r.witnesses.push_back(std::move(witness));
    }
    return r;
}

} // namespace admeans
