#pragma once

#include <cassert>
#include <cstdint>
#include <random>
#include <span>

namespace quditlab {

/* Seedable deterministic random source.  Every stochastic operation in the
 * library draws through one of these, so a run is reproducible from its seed
 * alone.  The draw primitives below are implemented by hand (instead of
 * <random> distributions) because the standard leaves distribution output
 * unspecified across implementations; mt19937_64 itself is pinned by the
 * standard, which makes transcripts byte-identical everywhere.
 */
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound). Bound must be small (< 2^16);
    /// the multiply-shift map keeps the bias below bound * 2^-53.
    std::uint32_t below(std::uint32_t bound) {
        assert(bound > 0 && bound < (1u << 16));
        const std::uint64_t x = engine_() >> 11;  // 53 bits
        return static_cast<std::uint32_t>((x * bound) >> 53);
    }

    /// One fair random bit.
    unsigned bit() { return static_cast<unsigned>(engine_() >> 63); }

    /// Categorical draw; probabilities must be nonnegative and sum to ~1.
    /// Walks the CDF with a single uniform; clamps to the last index so a
    /// sum slightly below 1 cannot fall off the end.
    std::size_t categorical(std::span<const double> p) {
        assert(!p.empty());
        const double r = uniform();
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            acc += p[i];
            if (r < acc) return i;
        }
        return p.size() - 1;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace quditlab
