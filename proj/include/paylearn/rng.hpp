#pragma once

#include <cstdint>
#include <random>

namespace paylearn {

// splitmix64, used to spread a master seed into independent stream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic random stream. All draws go through the helpers below so
// datasets are byte-identical across platforms and standard-library builds.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // uniform on [0,1)
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform on (0,1]
    double uniform_pos() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

    // uniform integer in [0, n), unbiased via rejection
    std::uint32_t below(std::uint32_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x = next();
        while (x >= limit) x = next();
        return static_cast<std::uint32_t>(x % n);
    }

    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::mt19937_64 engine_;
};

// Derives the seed for a named substream (train/val/test, grid cells, ...)
// from one master seed. Streams with distinct tags are independent.
inline Rng derive_stream(std::uint64_t master_seed, std::uint64_t stream_tag) {
    std::uint64_t s = master_seed;
    std::uint64_t mixed = splitmix64(s) ^ (stream_tag * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
    return Rng(splitmix64(mixed));
}

}  // namespace paylearn
