#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "siglap/graph.hpp"
#include "siglap/weights.hpp"

namespace siglap {

struct CorpusEntry {
    Graph graph;
    std::string name;
};

Graph path_graph(int n);
Graph star_graph(int n);  // vertex 0 is the hub

// 200-graph fuzz corpus spanning complete graphs, cycles, paths, stars,
// Erdos-Renyi samples and random regular graphs with 3 <= N <= 40.
// Deterministic per seed.
std::vector<CorpusEntry> standard_corpus(std::uint64_t seed);

// Weight samplers used by the property suites: 0 = signed gaussian,
// 1 = heavy-tailed (gaussian over uniform ratio), 2 = near-constant.
WeightVector corpus_weights(int e, int model_class, std::uint64_t seed);
inline constexpr int kCorpusWeightClasses = 3;

}  // namespace siglap
