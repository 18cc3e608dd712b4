#include "siglap/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace siglap {

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Box-Muller on in-house uniforms; no rejection keeps the draw count per
    // sample fixed
    double u1 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(angle);
    have_spare_ = true;
    return r * std::cos(angle);
}

std::uint64_t Rng::uniform_int(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("uniform_int needs n >= 1");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
        x = gen_();
    } while (x >= limit);
    return x % n;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    // splitmix64 finalizer over the master/index mix
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

ErParams ErParams::critical(int n, double p0) {
    if (n < 2) throw std::invalid_argument("er graph needs n >= 2");
    if (p0 <= 1.0) throw std::invalid_argument("critical regime needs p0 > 1");
    ErParams params;
    params.n = n;
    params.regime = ErRegime::critical;
    params.p0 = p0;
    params.p = p0 * std::log(static_cast<double>(n)) / n;
    if (params.p > 1.0)
        throw std::invalid_argument("p0 log(n)/n exceeds 1; n too small for the critical regime");
    return params;
}

ErParams ErParams::supercritical(int n, double p) {
    if (n < 2) throw std::invalid_argument("er graph needs n >= 2");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability must be in [0, 1]");
    ErParams params;
    params.n = n;
    params.regime = ErRegime::supercritical;
    params.p = p;
    return params;
}

double ErParams::derived_p() const { return p; }

Graph gen_er(const ErParams& params, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::pair<int, int>> pairs;
    const double p = params.derived_p();
    for (int u = 0; u < params.n; ++u)
        for (int v = u + 1; v < params.n; ++v)
            if (rng.bernoulli(p)) pairs.emplace_back(u, v);
    return build_graph(params.n, std::move(pairs));
}

Graph gen_regular(int n, int d, std::uint64_t seed) {
    if (d < 3) throw std::invalid_argument("regular generator needs d >= 3");
    if (d >= n) throw std::invalid_argument("regular generator needs d < n");
    if ((static_cast<long long>(n) * d) % 2 != 0)
        throw std::invalid_argument("n * d must be even (handshake parity)");

    Rng rng(seed);
    const int stub_count = n * d;
    for (int restart = 0; restart < 1000; ++restart) {
        std::vector<int> stubs;
        stubs.reserve(static_cast<size_t>(stub_count));
        for (int v = 0; v < n; ++v)
            for (int k = 0; k < d; ++k) stubs.push_back(v);

        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(static_cast<size_t>(stub_count / 2));
        std::vector<char> seen(static_cast<size_t>(n) * n, 0);
        bool stuck = false;
        while (!stubs.empty()) {
            // draw stub pairs, rejecting loops and repeats; give up on this
            // matching when no legal pair shows up in a reasonable window
            const long tries_cap = 200 + 20L * static_cast<long>(stubs.size());
            long tries = 0;
            int u = -1, v = -1;
            for (;;) {
                const size_t i = static_cast<size_t>(rng.uniform_int(stubs.size()));
                const size_t j = static_cast<size_t>(rng.uniform_int(stubs.size()));
                if (i == j) continue;
                u = stubs[i];
                v = stubs[j];
                if (u != v && !seen[static_cast<size_t>(std::min(u, v)) * n + std::max(u, v)]) {
                    const size_t hi = std::max(i, j), lo = std::min(i, j);
                    stubs[hi] = stubs.back();
                    stubs.pop_back();
                    stubs[lo] = stubs.back();
                    stubs.pop_back();
                    break;
                }
                if (++tries > tries_cap) { stuck = true; break; }
            }
            if (stuck) break;
            seen[static_cast<size_t>(std::min(u, v)) * n + std::max(u, v)] = 1;
            pairs.emplace_back(u, v);
        }
        if (!stuck) return build_graph(n, std::move(pairs));
    }
    throw std::runtime_error("regular generator exceeded the restart cap for n=" + std::to_string(n) +
                             ", d=" + std::to_string(d));
}

std::string weight_model_name(const WeightModel& m) {
    return std::visit(
        [](const auto& w) -> std::string {
            using T = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<T, ConstantWeights>)
                return "constant(" + std::to_string(w.c) + ")";
            else if constexpr (std::is_same_v<T, GaussianWeights>)
                return "gaussian(" + std::to_string(w.mean) + "," + std::to_string(w.sd) + ")";
            else if constexpr (std::is_same_v<T, UniformWeights>)
                return "uniform(" + std::to_string(w.lo) + "," + std::to_string(w.hi) + ")";
            else
                return "signed_bernoulli(" + std::to_string(w.p_plus) + "," + std::to_string(w.magnitude) + ")";
        },
        m);
}

WeightVector gen_weights(int e, const WeightModel& model, std::uint64_t seed) {
    if (e < 1) throw std::invalid_argument("weight generation needs e >= 1");
    Rng rng(seed);
    WeightVector w = WeightVector::zeros(e);
    std::visit(
        [&](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ConstantWeights>) {
                if (!std::isfinite(m.c)) throw std::invalid_argument("constant weight must be finite");
                for (int i = 0; i < e; ++i) w[i] = m.c;
            } else if constexpr (std::is_same_v<T, GaussianWeights>) {
                if (m.sd < 0.0) throw std::invalid_argument("gaussian sd must be >= 0");
                for (int i = 0; i < e; ++i) w[i] = rng.gaussian(m.mean, m.sd);
            } else if constexpr (std::is_same_v<T, UniformWeights>) {
                if (m.lo > m.hi) throw std::invalid_argument("uniform bounds out of order");
                for (int i = 0; i < e; ++i) w[i] = rng.uniform(m.lo, m.hi);
            } else {
                if (m.p_plus < 0.0 || m.p_plus > 1.0)
                    throw std::invalid_argument("p_plus must be in [0, 1]");
                if (m.magnitude < 0.0) throw std::invalid_argument("magnitude must be >= 0");
                for (int i = 0; i < e; ++i)
                    w[i] = rng.bernoulli(m.p_plus) ? m.magnitude : -m.magnitude;
            }
        },
        model);
    return w;
}

AConstant solve_a(double p0) {
    if (p0 <= 1.0) throw std::invalid_argument("a(p0) needs p0 > 1");
    const double target = (p0 - 1.0) / p0;
    auto f = [&](double a) { return a * (1.0 - std::log(a)) - target; };
    double lo = 1e-300, hi = 1.0;
    for (int it = 0; it < 2000; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    AConstant out;
    out.p0 = p0;
    out.a = 0.5 * (lo + hi);
    out.residual = std::fabs(p0 - 1.0 - out.a * p0 * (1.0 - std::log(out.a)));
    return out;
}

DegreeTailParams degree_tail_params(double p0, double c) {
    if (c <= 0.0) throw std::invalid_argument("degree-tail constant must be positive");
    DegreeTailParams out;
    out.p0 = p0;
    out.c = c;
    out.beta = 2.0 - p0 - c * p0 * std::log(c) + c * p0;
    out.beta_negative = out.beta < 0.0;
    return out;
}

DegreeTailResult run_degree_tail_experiment(int n, double p0, double c, int trials, std::uint64_t seed) {
    ErParams params = ErParams::critical(n, p0);  // validates the regime
    const double threshold = degree_tail_params(p0, c).threshold(n);
    DegreeTailResult out;
    out.trials = trials;
    int within = 0;
    for (int t = 0; t < trials; ++t) {
        Graph g = gen_er(params, derive_seed(seed, static_cast<std::uint64_t>(t)));
        const int dmax = g.max_degree();
        out.worst_max_degree = std::max(out.worst_max_degree, dmax);
        if (dmax <= threshold) ++within;
    }
    out.fraction_within = trials > 0 ? static_cast<double>(within) / trials : 0.0;
    return out;
}

std::vector<LadderPoint> run_lambda2_concentration(ErRegime regime, double p0_or_p,
                                                   const std::vector<int>& ladder, int trials,
                                                   std::uint64_t seed) {
    if (trials < 30) throw std::invalid_argument("concentration runs need trials >= 30");
    std::vector<LadderPoint> out;
    std::uint64_t trial_index = 0;
    for (int n : ladder) {
        ErParams params = regime == ErRegime::critical ? ErParams::critical(n, p0_or_p)
                                                       : ErParams::supercritical(n, p0_or_p);
        const double target = regime == ErRegime::critical ? solve_a(p0_or_p).a : 1.0;
        const double np = static_cast<double>(n) * params.derived_p();

        LadderPoint point;
        point.n = n;
        std::vector<double> devs;
        devs.reserve(static_cast<size_t>(trials));
        for (int t = 0; t < trials; ++t) {
            Graph g = gen_er(params, derive_seed(seed, trial_index++));
            if (!classify(g).connected) {
                ++point.disconnected;
                continue;
            }
            const double lambda2 = equal_weight_lambda2(g);
            devs.push_back(std::fabs(lambda2 / np - target));
        }
        point.trials_used = static_cast<int>(devs.size());
        if (!devs.empty()) {
            std::sort(devs.begin(), devs.end());
            const size_t mid = devs.size() / 2;
            point.median_abs_dev =
                devs.size() % 2 == 1 ? devs[mid] : 0.5 * (devs[mid - 1] + devs[mid]);
        }
        out.push_back(point);
    }
    return out;
}

namespace {

// Extreme eigenvalue of L(q 1 + fluct) on the complement of the all-ones
// vector, for the tightness search.
struct TightnessObjective {
    const Graph& g;
    double q;

    double extreme(const WeightVector& fluct, bool lower) const {
        WeightVector w = fluct;
        for (int i = 0; i < w.size(); ++i) w[i] += q;
        SymmetricMatrix l = laplacian(g, w);
        const std::vector<double> ones(static_cast<size_t>(g.vertex_count()), 1.0);
        SpectrumSummary s = eigendecompose(restrict_to_complement(l, ones));
        return lower ? s.eigenvalues.front() : s.eigenvalues.back();
    }
};

void project_to_sphere(WeightVector& v, double radius) {
    const int e = v.size();
    double mean = 0.0;
    for (int i = 0; i < e; ++i) mean += v[i];
    mean /= e;
    double norm = 0.0;
    for (int i = 0; i < e; ++i) {
        v[i] -= mean;
        norm += v[i] * v[i];
    }
    norm = std::sqrt(norm);
    if (norm == 0.0) {
        // arbitrary mean-zero direction
        v[0] = 1.0;
        v[e - 1] = -1.0;
        for (int i = 1; i < e - 1; ++i) v[i] = 0.0;
        norm = std::sqrt(2.0);
    }
    for (int i = 0; i < e; ++i) v[i] *= radius / norm;
}

}  // namespace

TightnessResult tightness_search(int n, double q, double p_target, int iterations, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("tightness search needs n >= 3");
    const double variance = p_target - q * q;
    if (variance < 0.0) throw std::invalid_argument("invalid moments: p < q^2");

    const Graph g = complete_graph(n);
    const int e = g.edge_count();
    TightnessResult out;

    if (variance == 0.0) {
        out.best_weights = WeightVector::zeros(e);
        return out;  // interval collapses; both gaps are identically zero
    }

    const double radius = std::sqrt(e * variance);
    // K_n closed forms: lambda2 = lambdaN = mu = n
    const double half_width = std::sqrt(e * variance * n * (n - 2) / static_cast<double>(n - 1));
    const double bound_lower = q * n - half_width;
    const double bound_upper = q * n + half_width;

    const TightnessObjective obj{g, q};
    Rng rng(seed);

    auto search_side = [&](bool lower) {
        double best_val = lower ? std::numeric_limits<double>::infinity()
                                : -std::numeric_limits<double>::infinity();
        WeightVector best;
        int evals = 0;
        const int restarts = 20;
        for (int r = 0; r < restarts && evals < iterations; ++r) {
            WeightVector x = WeightVector::zeros(e);
            for (int i = 0; i < e; ++i) x[i] = rng.gaussian();
            project_to_sphere(x, radius);
            double cur = obj.extreme(x, lower);
            ++evals;
            if ((lower && cur < best_val) || (!lower && cur > best_val)) { best_val = cur; best = x; }

            double step = 0.5 * radius;
            while (step > 1e-10 && evals < iterations) {
                bool improved = false;
                for (int i = 0; i < e && evals < iterations; ++i) {
                    for (double sgn : {1.0, -1.0}) {
                        if (evals >= iterations) break;
                        WeightVector cand = x;
                        cand[i] += sgn * step;
                        project_to_sphere(cand, radius);
                        const double val = obj.extreme(cand, lower);
                        ++evals;
                        const bool better = lower ? val < cur - 1e-15 : val > cur + 1e-15;
                        if (better) {
                            cur = val;
                            x = cand;
                            improved = true;
                        }
                    }
                }
                if (!improved) step *= 0.5;
                if ((lower && cur < best_val) || (!lower && cur > best_val)) { best_val = cur; best = x; }
            }
        }
        out.evaluations += evals;
        return std::make_pair(best_val, best);
    };

    auto [low_val, low_weights] = search_side(true);
    auto [high_val, high_weights] = search_side(false);
    (void)high_weights;
    out.best_gap_lower = std::fabs(low_val - bound_lower) / half_width;
    out.best_gap_upper = std::fabs(high_val - bound_upper) / half_width;
    WeightVector w = low_weights;
    for (int i = 0; i < w.size(); ++i) w[i] += q;
    out.best_weights = w;
    return out;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::complete: return "complete";
        case Family::cycle: return "cycle";
        case Family::er_critical: return "er_critical";
        case Family::er_supercritical: return "er_supercritical";
        case Family::random_regular: return "random_regular";
    }
    return "unknown";
}

ExperimentResult run_family_experiment(Family family, const FamilyParams& params,
                                       const WeightModel& weights, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("experiment needs trials >= 1");

    ExperimentResult out;
    out.summary.family = family;
    out.summary.trials = trials;
    out.summary.seed = seed;
    if (family == Family::er_critical) out.summary.a_p0 = solve_a(params.p0).a;

    double ratio_sum = 0.0;
    double ratio_min = std::numeric_limits<double>::infinity();
    double ratio_max = -std::numeric_limits<double>::infinity();

    for (int t = 0; t < trials; ++t) {
        const std::uint64_t graph_seed = derive_seed(seed, 2 * static_cast<std::uint64_t>(t));
        const std::uint64_t weight_seed = derive_seed(seed, 2 * static_cast<std::uint64_t>(t) + 1);

        Graph g = [&] {
            switch (family) {
                case Family::complete: return complete_graph(params.n);
                case Family::cycle: return cycle_graph(params.n);
                case Family::er_critical:
                    return gen_er(ErParams::critical(params.n, params.p0), graph_seed);
                case Family::er_supercritical:
                    return gen_er(ErParams::supercritical(params.n, params.p), graph_seed);
                case Family::random_regular: return gen_regular(params.n, params.d, graph_seed);
            }
            throw std::logic_error("unreachable family");
        }();

        WeightVector w = gen_weights(g.edge_count(), weights, weight_seed);
        BoundsCertificate cert = theorem_bounds(g, w, /*with_oracle=*/true);

        TrialRecord rec;
        rec.trial = t;
        rec.seed = graph_seed;
        rec.n = g.vertex_count();
        rec.e = g.edge_count();
        rec.max_degree = g.max_degree();
        const GraphClassification cls = classify(g);
        rec.connected = cls.connected;
        rec.regular_degree = cls.regular_degree;
        rec.lambda2_g = cert.lambda2_g;
        rec.lambdaN_g = cert.lambdaN_g;
        rec.mu = cert.mu.value;
        rec.weight_model = weight_model_name(weights);
        rec.certificate = cert;

        const double tol = certificate_tol(cert.lower, cert.upper);
        rec.sandwich_ok = true;
        for (double lam : *cert.oracle_eigenvalues) {
            if (lam < cert.lower - tol || lam > cert.upper + tol) {
                rec.sandwich_ok = false;
                break;
            }
        }
        if (!rec.sandwich_ok) ++out.summary.sandwich_violations;
        if (!rec.connected) ++out.summary.disconnected;

        ratio_sum += cert.improvement_ratio;
        ratio_min = std::min(ratio_min, cert.improvement_ratio);
        ratio_max = std::max(ratio_max, cert.improvement_ratio);
        out.records.push_back(std::move(rec));
    }
    out.summary.improvement_ratio_min = ratio_min;
    out.summary.improvement_ratio_max = ratio_max;
    out.summary.improvement_ratio_mean = ratio_sum / trials;
    return out;
}

nlohmann::ordered_json trial_record_json(const TrialRecord& r) {
    nlohmann::ordered_json j;
    j["trial"] = r.trial;
    j["seed"] = r.seed;
    j["graph"] = {{"n", r.n},
                  {"e", r.e},
                  {"max_degree", r.max_degree},
                  {"connected", r.connected}};
    if (r.regular_degree)
        j["graph"]["regular_degree"] = *r.regular_degree;
    else
        j["graph"]["regular_degree"] = nullptr;
    j["spectral"] = {{"lambda2_g", r.lambda2_g}, {"lambdaN_g", r.lambdaN_g}, {"mu", r.mu}};
    j["weight_model"] = r.weight_model;
    j["sandwich_ok"] = r.sandwich_ok;
    j["certificate"] = certificate_json(r.certificate);
    return j;
}

nlohmann::ordered_json experiment_summary_json(const ExperimentSummary& s, const FamilyParams& params) {
    nlohmann::ordered_json j;
    j["family"] = family_name(s.family);
    j["trials"] = s.trials;
    j["seed"] = s.seed;
    nlohmann::ordered_json p;
    p["n"] = params.n;
    switch (s.family) {
        case Family::random_regular: p["d"] = params.d; break;
        case Family::er_critical: p["p0"] = params.p0; break;
        case Family::er_supercritical: p["p"] = params.p; break;
        default: break;
    }
    j["params"] = p;
    j["sandwich_violations"] = s.sandwich_violations;
    j["disconnected"] = s.disconnected;
    j["improvement_ratio"] = {{"min", s.improvement_ratio_min},
                              {"max", s.improvement_ratio_max},
                              {"mean", s.improvement_ratio_mean}};
    if (s.a_p0) j["a_p0"] = *s.a_p0;
    return j;
}

}  // namespace siglap
