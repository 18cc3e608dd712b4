#pragma once

#include <vector>

namespace siglap {

// Edge weights aligned to a Graph's edge ordering.
struct WeightVector {
    std::vector<double> values;

    WeightVector() = default;
    explicit WeightVector(std::vector<double> v) : values(std::move(v)) {}

    int size() const { return static_cast<int>(values.size()); }
    double& operator[](int i) { return values[static_cast<size_t>(i)]; }
    double operator[](int i) const { return values[static_cast<size_t>(i)]; }

    static WeightVector ones(int e) { return WeightVector(std::vector<double>(static_cast<size_t>(e), 1.0)); }
    static WeightVector zeros(int e) { return WeightVector(std::vector<double>(static_cast<size_t>(e), 0.0)); }

    friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

}  // namespace siglap
