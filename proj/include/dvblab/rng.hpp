#pragma once

#include <cstdint>

#include "dvblab/linmap.hpp"

namespace dvblab {

/// Deterministic 64-bit generator (splitmix64). Identical seeds produce
/// identical streams on every platform; no standard-library distributions
/// are involved. Per-trial substreams are derived by counter, so trials can
/// be evaluated in any order (or in parallel) without changing results.
struct Rng {
    std::uint64_t state = 0;

    explicit Rng(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Substream k of a master seed; statistically decorrelated from
    /// neighbouring counters.
    static Rng substream(std::uint64_t seed, std::uint64_t counter) {
        Rng mix(seed ^ (counter * 0xD1B54A32D192ED03ull + 0x8CB92BA72F3D8DD7ull));
        Rng out(mix.next());
        return out;
    }

    /// Uniform-ish integer in [lo, hi]; fixed algorithm, bias irrelevant here.
    long long int_in(long long lo, long long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long long>(next() % span);
    }

    /// The small integer entry pool [-3, 3] used for all random instances.
    Rat pool_entry() { return Rat(int_in(-3, 3)); }

    /// Nonzero rational scalar pool for law checks; includes halves so that
    /// non-integer scalar multiplication is exercised.
    Rat scalar() {
        const long long num = int_in(-3, 3);
        return (next() & 1u) ? Rat(num, 2) : Rat(num);
    }

    Vec vec(int dim) {
        Vec v = zero_vec(dim);
        for (auto& x : v) x = pool_entry();
        return v;
    }

    LinMap map(const Space& dom, const Space& cod) {
        LinMap f(dom, cod);
        for (auto& x : f.m) x = pool_entry();
        return f;
    }

    /// Random invertible automorphism: resample pooled entries until the
    /// matrix has full rank.
    LinMap invertible(const Space& s) {
        if (s.dim == 0) return identity(s);
        for (;;) {
            LinMap f = map(s, s);
            if (rank(f) == s.dim) return f;
        }
    }
};

} // namespace dvblab
