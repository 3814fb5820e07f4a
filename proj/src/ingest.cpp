#include "edgecut/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <random>
#include <string>
#include <string_view>

#include "edgecut/error.hpp"

namespace edgecut {
namespace {

// Uniform double in [0, 1) from the top 53 bits.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Uniform integer in [0, bound) by rejection; bound > 0.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

bool is_blank(char ch) { return ch == ' ' || ch == '\t'; }

bool next_token(std::string_view& rest, std::string_view& token) {
    std::size_t i = 0;
    while (i < rest.size() && is_blank(rest[i])) ++i;
    if (i == rest.size()) return false;
    std::size_t j = i;
    while (j < rest.size() && !is_blank(rest[j])) ++j;
    token = rest.substr(i, j - i);
    rest.remove_prefix(j);
    return true;
}

bool parse_id(std::string_view token, VertexId& out) {
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace

void RmatParams::validate() const {
    if (scale < 1 || scale > 62) throw ParameterError("rmat scale must be in [1, 62]");
    if (edge_factor < 1) throw ParameterError("rmat edge factor must be at least 1");
    for (const double q : {a, b, c, d}) {
        if (!(q > 0.0 && q < 1.0)) throw ParameterError("rmat probabilities must lie in (0, 1)");
    }
    if (std::abs(a + b + c + d - 1.0) > 1e-9) throw ParameterError("rmat probabilities must sum to 1");
}

void PowerLawParams::validate() const {
    if (n < 2) throw ParameterError("power-law graph needs n >= 2");
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw ParameterError("alpha must be positive");
    if (d_min < 1) throw ParameterError("d_min must be at least 1");
    if (d_min > n - 1) throw ParameterError("d_min must not exceed n - 1");
}

EdgeListGraph read_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view rest(line);
        if (!rest.empty() && rest.back() == '\r') rest.remove_suffix(1);
        std::string_view first;
        if (!next_token(rest, first)) continue;
        if (first.front() == '#' || first.front() == '%') continue;
        std::string_view second;
        std::string_view extra;
        if (!next_token(rest, second)) throw ParseError(line_no, "expected two vertex ids");
        if (next_token(rest, extra)) throw ParseError(line_no, "unexpected trailing token");
        Edge e;
        if (!parse_id(first, e.src) || !parse_id(second, e.dst)) {
            throw ParseError(line_no, "vertex ids must be unsigned 64-bit integers");
        }
        edges.push_back(e);
    }
    if (in.bad()) throw Error("read failure");
    return EdgeListGraph(std::move(edges));
}

EdgeListGraph read_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string());
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const EdgeListGraph& g) {
    for (const Edge& e : g.edges()) {
        out << e.src << ' ' << e.dst << '\n';
    }
}

EdgeListGraph generate_rmat(const RmatParams& p) {
    p.validate();
    const std::uint64_t count = p.edge_factor << p.scale;
    const double ab = p.a + p.b;
    const double abc = ab + p.c;

    std::mt19937_64 rng(p.seed);
    std::vector<Edge> edges;
    edges.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        VertexId src = 0;
        VertexId dst = 0;
        for (unsigned level = 0; level < p.scale; ++level) {
            const double r = unit(rng);
            src <<= 1;
            dst <<= 1;
            if (r < p.a) {
            } else if (r < ab) {
                dst |= 1;
            } else if (r < abc) {
                src |= 1;
            } else {
                src |= 1;
                dst |= 1;
            }
        }
        edges.push_back({src, dst});
    }
    return EdgeListGraph(std::move(edges));
}

std::vector<std::uint64_t> sample_power_law_degrees(const PowerLawParams& p) {
    p.validate();
    const std::uint64_t cap = p.n - 1;

    // Inverse CDF over the truncated support [d_min, cap].
    std::vector<double> cdf;
    cdf.reserve(cap - p.d_min + 1);
    double total = 0.0;
    for (std::uint64_t d = p.d_min; d <= cap; ++d) {
        total += std::pow(static_cast<double>(d), -p.alpha);
        cdf.push_back(total);
    }

    std::mt19937_64 rng(p.seed);
    std::vector<std::uint64_t> degrees(p.n);
    std::uint64_t sum = 0;
    for (auto& d : degrees) {
        const double u = unit(rng) * total;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const auto offset = std::min<std::size_t>(static_cast<std::size_t>(it - cdf.begin()), cdf.size() - 1);
        d = p.d_min + offset;
        sum += d;
    }

    if (sum % 2 == 1) {
        // An all-at-cap sequence has an even sum, so a vertex below the cap exists.
        std::uint64_t v = below(rng, p.n);
        while (degrees[v] >= cap) v = (v + 1) % p.n;
        ++degrees[v];
    }
    return degrees;
}

EdgeListGraph generate_power_law(const PowerLawParams& p) {
    const std::vector<std::uint64_t> degrees = sample_power_law_degrees(p);

    std::vector<VertexId> stubs;
    for (VertexId v = 0; v < degrees.size(); ++v) {
        stubs.insert(stubs.end(), degrees[v], v);
    }

    // Fisher-Yates with a generator seeded independently of the degree draw.
    std::mt19937_64 rng(p.seed ^ 0x9e3779b97f4a7c15ULL);
    for (std::size_t i = stubs.size(); i > 1; --i) {
        const std::size_t j = below(rng, i);
        std::swap(stubs[i - 1], stubs[j]);
    }

    std::vector<Edge> edges;
    edges.reserve(stubs.size() / 2);
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        edges.push_back({stubs[i], stubs[i + 1]});
    }
    return EdgeListGraph(std::move(edges));
}

}  // namespace edgecut
