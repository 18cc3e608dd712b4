#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "siglap/graph.hpp"
#include "siglap/spectral.hpp"
#include "siglap/weights.hpp"

#include <json.hpp>

namespace siglap {

// Positivity conditions are strict with this absolute slack on the margin.
inline constexpr double kPositivityTol = 1e-12;

// Tolerance used when checking oracle eigenvalues against the certified
// interval.
inline double certificate_tol(double lower, double upper) {
    return 1e-8 * (1.0 + std::fabs(lower) + std::fabs(upper));
}

// Mean Q and second moment P of the edge weights.
struct EdgeMoments {
    double q = 0.0;
    double p = 0.0;
    double variance = 0.0;  // p - q^2, clamped to 0 within rounding slack
    int edge_count = 0;
};

EdgeMoments moments(const WeightVector& w);

enum class MuMethod { regular_closed_form, projected_rayleigh, dmax_upper_bound };

std::string mu_method_name(MuMethod m);

// mu = max Rayleigh quotient of 4I + A^LG over edge vectors orthogonal to
// the all-ones vector, together with its eigenvalue bracket
// 4 + lambda_{E-1} <= mu <= 4 + lambda_E <= 2 d_max + 2 (eigenvalues of the
// line-graph adjacency in signed ascending order).
struct MuEstimate {
    double value = 0.0;
    MuMethod method = MuMethod::projected_rayleigh;
    double bracket_low = 0.0;
    double bracket_high = 0.0;
    double dmax_bound = 0.0;
};

// Auto selection: d-regular graphs use the closed form 2d + 2 - lambda2 and
// cross-check it against the projected Rayleigh value; everything else uses
// the projected Rayleigh value directly. Requesting dmax_upper_bound returns
// the cheap 2 d_max + 2 estimate. Throws if E < 2 (trivial mean-zero space)
// or if the closed form is requested for an irregular graph.
MuEstimate compute_mu(const Graph& g);
MuEstimate compute_mu(const Graph& g, MuMethod method);

struct BoundsCertificate {
    int n = 0;
    int e = 0;
    EdgeMoments moments;
    double lambda2_g = 0.0;
    double lambdaN_g = 0.0;
    MuEstimate mu;
    double lower = 0.0;
    double upper = 0.0;
    bool positivity_paper = false;
    bool positivity_naive = false;
    double margin_paper = 0.0;   // (lambda2^2/mu) Q^2/E - variance
    double margin_naive = 0.0;   // Q^2/E - variance
    double improvement_ratio = 0.0;
    bool connected = false;
    std::optional<std::vector<double>> oracle_eigenvalues;  // spectrum of L(w) on 1-perp
};

// Theorem interval for the eigenvalues of L(w) restricted to the complement
// of the all-ones vector, with positivity verdicts from the moments alone.
// Runs on disconnected graphs too but marks the certificate accordingly.
// Throws for N < 3.
BoundsCertificate theorem_bounds(const Graph& g, const WeightVector& w, bool with_oracle);

// Closed forms for the complete graph: the sharp interval
// N (Q +- sqrt((N-2)/2) sqrt(P - Q^2)) and the rough prior interval
// N (Q +- sqrt(N-1) sqrt(P - Q^2)).
std::pair<double, double> complete_graph_bounds(int n, const EdgeMoments& m);
std::pair<double, double> rough_bounds(int n, const EdgeMoments& m);

// (lambda2^G)^2 / mu; above 1 the moment condition tolerates more variance
// than the all-weights-positive condition. Returns 0 for graphs with
// lambda2 = 0 (disconnected).
double improvement_ratio(const Graph& g);

// Fixed-schema JSON document for a certificate.
nlohmann::ordered_json certificate_json(const BoundsCertificate& c);

}  // namespace siglap
