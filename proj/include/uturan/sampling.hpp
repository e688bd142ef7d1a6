#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "uturan/hypergraph.hpp"
#include "uturan/limits.hpp"
#include "uturan/palette.hpp"
#include "uturan/rational.hpp"

namespace uturan {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Unbiased uniform draw from [0, bound) via rejection; mt19937_64 output is
/// fully specified by the standard, so results are identical across
/// platforms (std::uniform_int_distribution is not).
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

// Cumulative integer thresholds over a common denominator, in palette color
// order.
struct ColorSampler {
    std::uint64_t denom = 1;
    std::vector<std::uint64_t> cumulative; // per color

    ColorSampler(const Palette& p, const ColorDistribution& dist) {
        validate_distribution(p, dist);
        BigInt d(1);
        for (const auto& c : p.colors) {
            const Rational& r = dist.at(c);
            d = boost::multiprecision::lcm(d, r.denominator());
        }
        if (d > BigInt(std::uint64_t{1} << 62))
            throw Error("color distribution denominator too large to sample");
        denom = static_cast<std::uint64_t>(d);
        BigInt acc(0);
        for (const auto& c : p.colors) {
            const Rational& r = dist.at(c);
            acc += r.numerator() * (d / r.denominator());
            cumulative.push_back(static_cast<std::uint64_t>(acc));
        }
    }

    int draw(std::mt19937_64& rng) const {
        std::uint64_t x = uniform_below(rng, denom);
        for (size_t i = 0; i < cumulative.size(); ++i)
            if (x < cumulative[i]) return static_cast<int>(i);
        return static_cast<int>(cumulative.size()) - 1;
    }
};

/// Uniformly random k-subset of 0..n-1 (partial Fisher-Yates).
inline std::vector<int> random_subset(std::mt19937_64& rng, int n, int k) {
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    for (int i = 0; i < k; ++i) {
        int j = i + static_cast<int>(uniform_below(rng, n - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
}

} // namespace detail

/// A sampled host hypergraph from a random palette construction, with the
/// full pair-color transcript so the sample can be re-audited. RNG:
/// mt19937_64 seeded directly, pairs in lexicographic order, colors drawn by
/// rejection over the distribution's common denominator.
struct HostSample {
    Hypergraph3 hypergraph;
    std::string palette_name;
    Palette palette;
    std::uint64_t seed = 0;
    std::map<PairKey, int> pair_colors; // pair -> color index
};

/// Colors every pair of 0..n-1 i.i.d. from `dist`, then includes each triple
/// i < j < k whose (left, top, right) pair colors form an allowed triple
/// under the natural label order. Fully reproducible from the seed.
inline HostSample sample_palette_host(int n, const Palette& p, const ColorDistribution& dist,
                                      std::uint64_t seed, const std::string& palette_name = "") {
    p.validate();
    detail::ColorSampler sampler(p, dist);
    std::mt19937_64 rng(seed);
    HostSample sample;
    sample.palette = p;
    sample.palette_name = palette_name;
    sample.seed = seed;
    std::vector<int> color(n * n, -1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int c = sampler.draw(rng);
            color[i * n + j] = c;
            sample.pair_colors.emplace(PairKey{i, j}, c);
        }
    std::vector<Triple> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                std::array<int, 3> got{color[i * n + j], color[i * n + k], color[j * n + k]};
                for (const auto& tri : p.allowed)
                    if (tri == got) {
                        edges.push_back({i, j, k});
                        break;
                    }
            }
    sample.hypergraph = Hypergraph3::make(n, std::move(edges));
    return sample;
}

/// Edge density m / C(n,3); by convention 0 when n < 3.
inline Rational overall_density(const Hypergraph3& h) {
    long denom = static_cast<long>(h.n) * (h.n - 1) * (h.n - 2) / 6;
    if (denom <= 0) return Rational(0);
    return Rational(BigInt(h.edge_count()), BigInt(denom));
}

/// Result of a density computation; `exact` distinguishes the exhaustive
/// minimum from a sampled upper bound.
struct DensityEstimate {
    Rational value{0};
    bool exact = false;
    long subsets_checked = 0;
};

namespace detail {

inline long count_induced(const std::vector<std::uint32_t>& edge_masks, std::uint32_t w) {
    long c = 0;
    for (std::uint32_t em : edge_masks)
        if ((em & w) == em) ++c;
    return c;
}

inline std::vector<std::uint32_t> edge_bit_masks(const Hypergraph3& h) {
    std::vector<std::uint32_t> out;
    out.reserve(h.edges.size());
    for (const Triple& t : h.edges)
        out.push_back((1u << t[0]) | (1u << t[1]) | (1u << t[2]));
    return out;
}

inline Rational subset_density(long edges, int size) {
    long denom = static_cast<long>(size) * (size - 1) * (size - 2) / 6;
    if (denom <= 0) return Rational(0); // density convention for |W| < 3
    return Rational(BigInt(edges), BigInt(denom));
}

inline long count_induced_flags(const Hypergraph3& h, const std::vector<char>& in) {
    long c = 0;
    for (const Triple& t : h.edges)
        if (in[t[0]] && in[t[1]] && in[t[2]]) ++c;
    return c;
}

} // namespace detail

/// Minimum density over induced subhypergraphs on at least ceil(eps*n)
/// vertices. Exact mode enumerates all subsets (n <= 20); sampled mode takes
/// the minimum over `trials` random subsets of size exactly ceil(eps*n) and
/// is an upper bound on the true value.
inline DensityEstimate epsilon_linear_density(const Hypergraph3& h, const Rational& eps,
                                              bool exact, long trials = 0,
                                              std::uint64_t seed = 0) {
    BigInt scaled = eps.numerator() * h.n;
    BigInt s_big = (scaled + eps.denominator() - 1) / eps.denominator(); // ceil
    int s = std::max(0, static_cast<int>(s_big));
    DensityEstimate out;
    out.exact = exact;
    if (exact) {
        if (h.n > 20) throw BoundError("exact epsilon-linear density limited to n <= 20");
        auto masks = detail::edge_bit_masks(h);
        bool have = false;
        for (std::uint32_t w = 0; w < (std::uint32_t{1} << h.n); ++w) {
            int size = std::popcount(w);
            if (size < s) continue;
            Rational d = detail::subset_density(detail::count_induced(masks, w), size);
            if (!have || d < out.value) {
                out.value = d;
                have = true;
            }
            ++out.subsets_checked;
        }
        if (!have) out.value = Rational(0);
    } else {
        bool have = false;
        for (long t = 0; t < trials; ++t) {
            std::mt19937_64 rng(detail::splitmix64(seed + static_cast<std::uint64_t>(t)));
            auto subset = detail::random_subset(rng, h.n, std::min(s, h.n));
            std::vector<char> in(h.n, 0);
            for (int v : subset) in[v] = 1;
            Rational d = detail::subset_density(detail::count_induced_flags(h, in),
                                                static_cast<int>(subset.size()));
            if (!have || d < out.value) {
                out.value = d;
                have = true;
            }
            ++out.subsets_checked;
        }
        if (!have) out.value = Rational(0);
    }
    return out;
}

/// Verdict of the (d, eps)-denseness check: every vertex subset W must
/// induce at least d*C(|W|,3) - eps*n^3 edges. Sampled mode is one-sided: it
/// only reports violations it finds.
struct DensenessVerdict {
    bool violated = false;
    bool exact = false;
    long subsets_checked = 0;
    std::vector<int> witness; // violating subset, if any
};

inline DensenessVerdict check_d_eps_dense(const Hypergraph3& h, const Rational& d,
                                          const Rational& eps, bool exact, long trials = 0,
                                          std::uint64_t seed = 0) {
    const Rational slack = eps * Rational(BigInt(h.n) * h.n * h.n);
    auto violates = [&](long induced, int size) {
        BigInt choose3 = BigInt(size) * (size - 1) * (size - 2) / 6;
        return Rational(BigInt(induced)) < d * Rational(choose3) - slack;
    };
    DensenessVerdict out;
    out.exact = exact;
    if (exact) {
        if (h.n > 20) throw BoundError("exact denseness check limited to n <= 20");
        auto masks = detail::edge_bit_masks(h);
        for (std::uint32_t w = 0; w < (std::uint32_t{1} << h.n); ++w) {
            ++out.subsets_checked;
            if (violates(detail::count_induced(masks, w), std::popcount(w))) {
                out.violated = true;
                for (int v = 0; v < h.n; ++v)
                    if (w >> v & 1) out.witness.push_back(v);
                return out;
            }
        }
    } else {
        for (long t = 0; t < trials; ++t) {
            std::mt19937_64 rng(detail::splitmix64(seed + static_cast<std::uint64_t>(t)));
            int size = static_cast<int>(detail::uniform_below(rng, h.n + 1));
            auto subset = detail::random_subset(rng, h.n, size);
            std::vector<char> in(h.n, 0);
            for (int v : subset) in[v] = 1;
            ++out.subsets_checked;
            if (violates(detail::count_induced_flags(h, in), size)) {
                out.violated = true;
                out.witness = subset;
                std::sort(out.witness.begin(), out.witness.end());
                return out;
            }
        }
    }
    return out;
}

} // namespace uturan
