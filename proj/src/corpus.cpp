#include "siglap/corpus.hpp"

#include <cmath>
#include <stdexcept>

#include "siglap/ensembles.hpp"

namespace siglap {

Graph path_graph(int n) {
    if (n < 2) throw std::invalid_argument("path graph needs n >= 2");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u + 1 < n; ++u) pairs.emplace_back(u, u + 1);
    return build_graph(n, std::move(pairs));
}

Graph star_graph(int n) {
    if (n < 2) throw std::invalid_argument("star graph needs n >= 2");
    std::vector<std::pair<int, int>> pairs;
    for (int v = 1; v < n; ++v) pairs.emplace_back(0, v);
    return build_graph(n, std::move(pairs));
}

std::vector<CorpusEntry> standard_corpus(std::uint64_t seed) {
    std::vector<CorpusEntry> out;
    auto add = [&](Graph g, std::string name) { out.push_back({std::move(g), std::move(name)}); };

    for (int n = 3; n <= 12; ++n) add(complete_graph(n), "K" + std::to_string(n));
    for (int n = 3; n <= 40; ++n) add(cycle_graph(n), "C" + std::to_string(n));
    for (int n = 3; n <= 40; ++n) add(path_graph(n), "P" + std::to_string(n));
    for (int n = 4; n <= 40; n += 2) add(star_graph(n), "S" + std::to_string(n));

    // 60 Erdos-Renyi samples cycling through sparse, medium and critical
    // densities
    Rng rng(derive_seed(seed, 0xe5));
    for (int k = 0; k < 60; ++k) {
        const int n = 5 + static_cast<int>(rng.uniform_int(36));  // 5..40
        double p = 0.0;
        switch (k % 3) {
            case 0: p = 0.15; break;
            case 1: p = 0.35; break;
            default: p = std::min(1.0, 2.0 * std::log(n) / n); break;
        }
        add(gen_er(ErParams::supercritical(n, p), derive_seed(seed, 100 + static_cast<std::uint64_t>(k))),
            "ER" + std::to_string(n) + "_" + std::to_string(k));
    }

    // 35 random regular graphs over d in {3, 4, 8}
    const int degrees[3] = {3, 4, 8};
    for (int k = 0; k < 35; ++k) {
        const int d = degrees[k % 3];
        int n = std::max(d + 2, 8) + static_cast<int>(rng.uniform_int(30));
        if (n > 40) n = 40;
        if ((n * d) % 2 != 0) ++n;
        add(gen_regular(n, d, derive_seed(seed, 300 + static_cast<std::uint64_t>(k))),
            "R" + std::to_string(d) + "_" + std::to_string(n) + "_" + std::to_string(k));
    }
    return out;
}

WeightVector corpus_weights(int e, int model_class, std::uint64_t seed) {
    Rng rng(seed);
    WeightVector w = WeightVector::zeros(e);
    switch (model_class) {
        case 0:  // signed
            for (int i = 0; i < e; ++i) w[i] = rng.gaussian();
            break;
        case 1:  // heavy-tailed: gaussian over uniform has no finite mean
            for (int i = 0; i < e; ++i) {
                double u = rng.uniform();
                if (u < 1e-6) u = 1e-6;
                w[i] = rng.gaussian() / u;
            }
            break;
        case 2:  // near-constant, positive mean
            for (int i = 0; i < e; ++i) w[i] = rng.gaussian(1.0, 1e-3);
            break;
        default:
            throw std::invalid_argument("unknown corpus weight class");
    }
    return w;
}

}  // namespace siglap
