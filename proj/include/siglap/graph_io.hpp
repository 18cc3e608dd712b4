#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "siglap/graph.hpp"
#include "siglap/weights.hpp"

namespace siglap {

// Parse/serialization error carrying the 1-based line number.
class EdgeListError : public std::runtime_error {
public:
    EdgeListError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

struct EdgeListData {
    Graph graph;
    std::optional<WeightVector> weights;
};

// Edge-list text format: first nonblank line is N; every following nonblank
// line is "u v" or "u v w"; lines starting with '#' are ignored. All edge
// lines must agree on whether a weight column is present.
EdgeListData read_edge_list(std::string_view text);

// Inverse of read_edge_list; weights are printed with enough digits to
// round-trip bit-exactly.
std::string write_edge_list(const Graph& g, const WeightVector* weights = nullptr);

EdgeListData read_edge_list_file(const std::string& path);
void write_edge_list_file(const std::string& path, const Graph& g, const WeightVector* weights = nullptr);

}  // namespace siglap
