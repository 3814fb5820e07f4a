#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "edgecut/graph.hpp"

namespace edgecut {

/// Plain recursive-matrix generator parameters (no per-level noise).
struct RmatParams {
    unsigned scale = 10;            ///< target |V| = 2^scale
    std::uint64_t edge_factor = 16; ///< |E| = edge_factor * 2^scale
    double a = 0.57;
    double b = 0.19;
    double c = 0.19;
    double d = 0.05;
    std::uint64_t seed = 1;

    /// Throws ParameterError.
    void validate() const;
};

/// Configuration-model graph over a discrete power-law degree sequence,
/// P(d) proportional to d^-alpha on [d_min, n - 1].
struct PowerLawParams {
    std::uint64_t n = 1000;
    double alpha = 1.6;
    std::uint64_t d_min = 1;
    std::uint64_t seed = 1;

    void validate() const;
};

/// Parses "src<ws>dst" lines. Lines starting with '#' or '%' and blank lines are
/// skipped; CRLF is accepted. Throws ParseError(line) or EmptyGraph.
EdgeListGraph read_edge_list(std::istream& in);
EdgeListGraph read_edge_list(const std::filesystem::path& path);

void write_edge_list(std::ostream& out, const EdgeListGraph& g);

EdgeListGraph generate_rmat(const RmatParams& p);

/// Degree sequence of generate_power_law before pairing; exposed for tests.
/// The sum is always even: when sampling yields an odd total, one randomly
/// chosen vertex below the cap gets one extra stub.
std::vector<std::uint64_t> sample_power_law_degrees(const PowerLawParams& p);

EdgeListGraph generate_power_law(const PowerLawParams& p);

}  // namespace edgecut
