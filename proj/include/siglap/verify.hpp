#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace siglap {

struct PropertyResult {
    std::string name;
    long checked = 0;
    long failures = 0;
    std::string note;  // extra diagnostics, e.g. logged-only observations
};

struct SuiteReport {
    std::string suite;
    std::vector<PropertyResult> properties;

    bool passed() const {
        for (const auto& p : properties)
            if (p.failures > 0) return false;
        return true;
    }
};

// Exact incidence identities and Hilbert-Schmidt consistency over the
// standard corpus.
SuiteReport run_identities_suite(std::uint64_t seed);

// Theorem interval soundness and positivity-certificate soundness over the
// corpus crossed with the corpus weight models.
SuiteReport run_sandwich_suite(std::uint64_t seed);

// Regular-graph duality (closed-form mu vs projected Rayleigh) and the
// eigenvalue bracket, including the logged-only absolute-order reading.
SuiteReport run_duality_suite(std::uint64_t seed);

}  // namespace siglap
