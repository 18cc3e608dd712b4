#include "siglap/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace siglap {

EdgeMoments moments(const WeightVector& w) {
    const int e = w.size();
    if (e < 1) throw std::invalid_argument("moments need at least one edge weight");
    double sum = 0.0, sum_sq = 0.0;
    for (int i = 0; i < e; ++i) {
        if (!std::isfinite(w[i])) throw std::invalid_argument("weights must be finite");
        sum += w[i];
        sum_sq += w[i] * w[i];
    }
    EdgeMoments m;
    m.edge_count = e;
    m.q = sum / e;
    m.p = sum_sq / e;
    m.variance = m.p - m.q * m.q;
    if (m.variance < 0.0) {
        if (m.variance >= -1e-12 * std::max(1.0, m.p))
            m.variance = 0.0;
        else
            throw std::runtime_error("variance " + std::to_string(m.variance) +
                                     " is negative beyond rounding tolerance");
    }
    return m;
}

std::string mu_method_name(MuMethod m) {
    switch (m) {
        case MuMethod::regular_closed_form: return "regular_closed_form";
        case MuMethod::projected_rayleigh: return "projected_rayleigh";
        case MuMethod::dmax_upper_bound: return "dmax_upper_bound";
    }
    return "unknown";
}

namespace {

double projected_mu(const Graph& g) {
    const int e = g.edge_count();
    const std::vector<double> ones(static_cast<size_t>(e), 1.0);
    if (e <= kDensePathMaxDim) {
        SymmetricMatrix form(e);
        SymmetricMatrix a = line_graph_adjacency(g);
        for (int i = 0; i < e; ++i)
            for (int j = i; j < e; ++j) form.set(i, j, a(i, j) + (i == j ? 4.0 : 0.0));
        return max_rayleigh_orthogonal_to(form, ones).value;
    }
    // large line graphs: apply 4I + A^LG implicitly in O(E)
    LinearOp op = [&g](const double* x, double* y) { apply_line_graph_form(g, x, y); };
    double shift = 0.0;
    for (int k = 0; k < e; ++k) {
        const Edge& ed = g.edge(k);
        shift = std::max(shift, 2.0 + static_cast<double>(g.degree(ed.u) + g.degree(ed.v)));
    }
    return max_rayleigh_power(op, e, ones, shift, /*seed=*/0).value;
}

// Top two eigenvalues of A^LG in signed ascending order.
std::pair<double, double> line_graph_top_two(const Graph& g) {
    const int e = g.edge_count();
    if (e <= kDensePathMaxDim) {
        SpectrumSummary s = eigendecompose(line_graph_adjacency(g));
        return {s.eigenvalues[static_cast<size_t>(e - 2)], s.eigenvalues[static_cast<size_t>(e - 1)]};
    }
    // two-stage power iteration on the implicit operator; the bracket fields
    // are power-iteration approximations at this scale
    LinearOp op = [&g](const double* x, double* y) {
        apply_line_graph_form(g, x, y);
        for (int k = 0; k < g.edge_count(); ++k) y[k] -= 4.0 * x[k];
    };
    double shift = 0.0;
    for (int k = 0; k < e; ++k) {
        const Edge& ed = g.edge(k);
        shift = std::max(shift, static_cast<double>(g.degree(ed.u) + g.degree(ed.v) - 2));
    }
    RayleighMax top = max_rayleigh_power(op, e, {}, shift, 1);
    RayleighMax second = max_rayleigh_power(op, e, top.argmax, shift, 2);
    return {second.value, top.value};
}

}  // namespace

MuEstimate compute_mu(const Graph& g) {
    const GraphClassification cls = classify(g);
    if (cls.regular_degree.has_value()) return compute_mu(g, MuMethod::regular_closed_form);
    return compute_mu(g, MuMethod::projected_rayleigh);
}

MuEstimate compute_mu(const Graph& g, MuMethod method) {
    const int e = g.edge_count();
    if (e < 2) throw std::invalid_argument("mean-zero edge space is trivial (E < 2)");

    MuEstimate est;
    est.method = method;
    est.dmax_bound = 2.0 * g.max_degree() + 2.0;
    auto [lo, hi] = line_graph_top_two(g);
    est.bracket_low = 4.0 + lo;
    est.bracket_high = 4.0 + hi;

    switch (method) {
        case MuMethod::regular_closed_form: {
            const GraphClassification cls = classify(g);
            if (!cls.regular_degree.has_value())
                throw std::invalid_argument("closed-form mu requires a regular graph");
            const double d = *cls.regular_degree;
            const double lambda2 = equal_weight_lambda2(g);
            est.value = 2.0 * d + 2.0 - lambda2;
            if (e <= kDensePathMaxDim) {
                const double proj = projected_mu(g);
                if (std::fabs(proj - est.value) > kEigTol * std::max(1.0, std::fabs(est.value)))
                    throw std::runtime_error("regular-graph duality cross-check failed: closed form " +
                                             std::to_string(est.value) + " vs projected " +
                                             std::to_string(proj));
            }
            break;
        }
        case MuMethod::projected_rayleigh:
            est.value = projected_mu(g);
            break;
        case MuMethod::dmax_upper_bound:
            est.value = est.dmax_bound;
            break;
    }
    return est;
}

BoundsCertificate theorem_bounds(const Graph& g, const WeightVector& w, bool with_oracle) {
    const int n = g.vertex_count();
    if (n < 3) throw std::invalid_argument("theorem bounds need N >= 3");

    BoundsCertificate cert;
    cert.n = n;
    cert.e = g.edge_count();
    cert.moments = moments(w);
    cert.connected = classify(g).connected;

    const std::vector<double> ones(static_cast<size_t>(n), 1.0);
    SymmetricMatrix l1 = equal_weight_laplacian(g);
    SpectrumSummary deflated = eigendecompose(restrict_to_complement(l1, ones));
    cert.lambda2_g = deflated.eigenvalues.front();
    cert.lambdaN_g = deflated.eigenvalues.back();

    if (cert.e >= 2) {
        cert.mu = compute_mu(g);
    } else {
        // a single edge has a trivial mean-zero space; the variance is then
        // identically zero and mu never enters the radius
        cert.mu.method = MuMethod::dmax_upper_bound;
        cert.mu.dmax_bound = 2.0 * g.max_degree() + 2.0;
        cert.mu.value = cert.mu.dmax_bound;
        cert.mu.bracket_low = cert.mu.bracket_high = cert.mu.dmax_bound;
    }

    const EdgeMoments& m = cert.moments;
    const double radius =
        std::sqrt(cert.e * m.variance * cert.mu.value * (n - 2) / static_cast<double>(n - 1));
    // for negative mean the roles of the extreme equal-weight eigenvalues swap
    const double mean_low = m.q >= 0.0 ? m.q * cert.lambda2_g : m.q * cert.lambdaN_g;
    const double mean_high = m.q >= 0.0 ? m.q * cert.lambdaN_g : m.q * cert.lambda2_g;
    cert.lower = mean_low - radius;
    cert.upper = mean_high + radius;

    cert.margin_naive = m.q * m.q / cert.e - m.variance;
    cert.margin_paper =
        (cert.lambda2_g * cert.lambda2_g / cert.mu.value) * m.q * m.q / cert.e - m.variance;
    cert.positivity_naive = (m.q > 0.0) && (cert.margin_naive > kPositivityTol);
    cert.positivity_paper = (m.q > 0.0) && (cert.margin_paper > kPositivityTol);
    cert.improvement_ratio = cert.lambda2_g * cert.lambda2_g / cert.mu.value;

    if (with_oracle) {
        SymmetricMatrix lw = laplacian(g, w);
        SpectrumSummary spec = eigendecompose(restrict_to_complement(lw, ones));
        cert.oracle_eigenvalues = spec.eigenvalues;
    }
    return cert;
}

std::pair<double, double> complete_graph_bounds(int n, const EdgeMoments& m) {
    if (n < 3) throw std::invalid_argument("complete graph bounds need n >= 3");
    const double half = n * std::sqrt((n - 2) / 2.0) * std::sqrt(m.variance);
    return {n * m.q - half, n * m.q + half};
}

std::pair<double, double> rough_bounds(int n, const EdgeMoments& m) {
    if (n < 3) throw std::invalid_argument("rough bounds need n >= 3");
    const double half = n * std::sqrt(static_cast<double>(n - 1)) * std::sqrt(m.variance);
    return {n * m.q - half, n * m.q + half};
}

double improvement_ratio(const Graph& g) {
    const double lambda2 = equal_weight_lambda2(g);
    if (std::fabs(lambda2) < 1e-12) return 0.0;
    return lambda2 * lambda2 / compute_mu(g).value;
}

nlohmann::ordered_json certificate_json(const BoundsCertificate& c) {
    nlohmann::ordered_json j;
    j["n"] = c.n;
    j["e"] = c.e;
    j["q"] = c.moments.q;
    j["p"] = c.moments.p;
    j["variance"] = c.moments.variance;
    j["lambda2_g"] = c.lambda2_g;
    j["lambdaN_g"] = c.lambdaN_g;
    j["mu"] = c.mu.value;
    j["mu_method"] = mu_method_name(c.mu.method);
    j["lower"] = c.lower;
    j["upper"] = c.upper;
    j["positivity_paper"] = c.positivity_paper;
    j["positivity_naive"] = c.positivity_naive;
    j["improvement_ratio"] = c.improvement_ratio;
    j["connected"] = c.connected;
    if (c.oracle_eigenvalues) j["oracle_eigenvalues"] = *c.oracle_eigenvalues;
    j["margins"] = {{"paper", c.margin_paper}, {"naive", c.margin_naive}};
    return j;
}

}  // namespace siglap
