#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace ltvboot {

// Deterministic randomness for the whole library.
//
// CounterRng is SplitMix64 run in counter mode: draw k of a stream with key K
// is mix64(K + (k+1) * 0x9e3779b97f4a7c15). Streams are cheap to construct,
// jump-free, and two streams with different keys are independent for
// resampling purposes. Every random consumer in this library derives its key
// from (seed, stream ids) via derive_stream_key, so results are a pure
// function of the seed regardless of thread count or call order.
//
// Stream derivation contract (relied on by replay tests):
//   bootstrap iteration j of a group:  derive_stream_key(seed, fnv1a64(group_label), j)
//   simulated user u of a group:       derive_stream_key(seed, fnv1a64(group_label), u)
//   retrospective replicate r:         sim seed  = derive_stream_key(master, r, 0)
//                                      boot seed = derive_stream_key(master, r, 1)

constexpr std::uint64_t kSplitMixGamma = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

// FNV-1a over the label bytes; stable across platforms.
constexpr std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

constexpr std::uint64_t derive_stream_key(std::uint64_t seed, std::uint64_t s0,
                                          std::uint64_t s1) {
    std::uint64_t h = mix64(seed + kSplitMixGamma);
    h = mix64(h ^ s0);
    h = mix64(h ^ s1);
    return h;
}

class CounterRng {
public:
    explicit CounterRng(std::uint64_t key) : key_(key) {}

    std::uint64_t next_u64() {
        counter_ += 1;
        return mix64(key_ + counter_ * kSplitMixGamma);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform index in [0, n); unbiased via rejection.
    std::size_t next_index(std::size_t n) {
        const std::uint64_t threshold = (0 - static_cast<std::uint64_t>(n)) % n;
        std::uint64_t r = next_u64();
        while (r < threshold) r = next_u64();
        return static_cast<std::size_t>(r % n);
    }

    // Standard normal via Box-Muller, cosine branch only. Consumes exactly
    // two uniforms per call.
    double next_normal() {
        const double u1 =
            (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
        const double u2 = next_unit();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace ltvboot
