#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "siglap/bounds.hpp"
#include "siglap/graph.hpp"
#include "siglap/weights.hpp"

#include <json.hpp>

namespace siglap {

// Deterministic RNG with platform-independent output: raw mt19937_64 bits
// mapped to doubles in-house so sequences never depend on the standard
// library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }  // [0, 1)
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    bool bernoulli(double p) { return uniform() < p; }
    double gaussian();
    double gaussian(double mean, double sd) { return mean + sd * gaussian(); }
    std::uint64_t uniform_int(std::uint64_t n);  // [0, n), rejection sampled

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Per-trial seed derived from a master seed; trials are independently
// reproducible.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

enum class ErRegime { critical, supercritical };

struct ErParams {
    int n = 0;
    ErRegime regime = ErRegime::supercritical;
    double p0 = 0.0;  // critical: p = p0 log(n)/n, p0 > 1
    double p = 0.0;   // supercritical: fixed p in (0, 1)

    static ErParams critical(int n, double p0);
    static ErParams supercritical(int n, double p);
    double derived_p() const;
};

Graph gen_er(const ErParams& params, std::uint64_t seed);

// Random d-regular graph via stub pairing: each vertex contributes d stubs,
// stubs are matched by repeatedly drawing random pairs and rejecting
// self-loops and repeated edges; a stuck matching restarts. Errors if n*d is
// odd, d >= n, d < 3, or the restart cap is exceeded.
Graph gen_regular(int n, int d, std::uint64_t seed);

struct ConstantWeights { double c = 1.0; };
struct GaussianWeights { double mean = 0.0; double sd = 1.0; };
struct UniformWeights { double lo = 0.0; double hi = 1.0; };
struct SignedBernoulliWeights { double p_plus = 0.5; double magnitude = 1.0; };

using WeightModel = std::variant<ConstantWeights, GaussianWeights, UniformWeights, SignedBernoulliWeights>;

std::string weight_model_name(const WeightModel& m);
WeightVector gen_weights(int e, const WeightModel& model, std::uint64_t seed);

// Solution of p0 - 1 = a p0 (1 - log a) on (0, 1); a(1 - log a) is strictly
// increasing there, so bisection finds the unique root.
struct AConstant {
    double p0 = 0.0;
    double a = 0.0;
    double residual = 0.0;
};

AConstant solve_a(double p0);

// Degree-tail exponent beta(C) = 2 - p0 - C p0 log C + C p0 (natural log)
// together with the threshold C p0 log N it controls.
struct DegreeTailParams {
    double p0 = 0.0;
    double c = 0.0;
    double beta = 0.0;
    bool beta_negative = false;

    double threshold(double n) const { return c * p0 * std::log(n); }
};

DegreeTailParams degree_tail_params(double p0, double c);

struct DegreeTailResult {
    double fraction_within = 0.0;  // trials with max degree <= C p0 log N
    int worst_max_degree = 0;
    int trials = 0;
};

DegreeTailResult run_degree_tail_experiment(int n, double p0, double c, int trials, std::uint64_t seed);

struct LadderPoint {
    int n = 0;
    double median_abs_dev = 0.0;
    int disconnected = 0;  // samples excluded from the statistic
    int trials_used = 0;
};

// For each N in the ladder: median over trials of |lambda2 / (N p) - target|
// where the target is a(p0) in the critical regime and 1 in the
// supercritical regime. Disconnected samples are counted and excluded.
std::vector<LadderPoint> run_lambda2_concentration(ErRegime regime, double p0_or_p,
                                                   const std::vector<int>& ladder, int trials,
                                                   std::uint64_t seed);

struct TightnessResult {
    double best_gap_lower = 0.0;  // |achieved - bound| / interval half-width
    double best_gap_upper = 0.0;
    WeightVector best_weights;    // weights realizing best_gap_lower
    int evaluations = 0;
};

// Searches mean-zero fluctuations on the sphere ||g~||^2 = E (P - Q^2) of the
// complete graph K_n for weightings driving the extreme eigenvalues onto the
// certified interval endpoints. Random restarts plus coordinate descent with
// a shrinking step, re-projected onto the sphere after every move;
// `iterations` caps the total number of eigensolve evaluations per side.
TightnessResult tightness_search(int n, double q, double p_target, int iterations,
                                 std::uint64_t seed);

enum class Family { complete, cycle, er_critical, er_supercritical, random_regular };

std::string family_name(Family f);

struct FamilyParams {
    int n = 0;
    int d = 0;        // random_regular
    double p0 = 0.0;  // er_critical
    double p = 0.0;   // er_supercritical
};

struct TrialRecord {
    int trial = 0;
    std::uint64_t seed = 0;
    int n = 0;
    int e = 0;
    int max_degree = 0;
    bool connected = false;
    std::optional<int> regular_degree;
    double lambda2_g = 0.0;
    double lambdaN_g = 0.0;
    double mu = 0.0;
    std::string weight_model;
    BoundsCertificate certificate;
    bool sandwich_ok = false;
};

struct ExperimentSummary {
    Family family = Family::complete;
    int trials = 0;
    std::uint64_t seed = 0;
    int sandwich_violations = 0;
    int disconnected = 0;
    double improvement_ratio_min = 0.0;
    double improvement_ratio_max = 0.0;
    double improvement_ratio_mean = 0.0;
    std::optional<double> a_p0;  // er_critical only
};

struct ExperimentResult {
    std::vector<TrialRecord> records;
    ExperimentSummary summary;
};

// Per trial: generate a graph and a weight vector, build the full
// certificate with oracle, and check the sandwich. Deterministic per
// (params, seed).
ExperimentResult run_family_experiment(Family family, const FamilyParams& params,
                                       const WeightModel& weights, int trials, std::uint64_t seed);

nlohmann::ordered_json trial_record_json(const TrialRecord& r);
nlohmann::ordered_json experiment_summary_json(const ExperimentSummary& s, const FamilyParams& params);

}  // namespace siglap
