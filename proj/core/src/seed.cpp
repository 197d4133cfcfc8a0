#include "transorder/seed.hpp"

namespace transorder {

namespace {

// splitmix64 finalizer (Vigna). Also used as the mixing hash for seed
// derivation.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// FNV-1a, written out so that labels hash identically on every platform
// (std::hash is unspecified).
constexpr std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (char c : text) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ULL;
    }
    return h;
}

}  // namespace

SeedSpec SeedSpec::derive(std::string_view label) const {
    const std::uint64_t folded = mix64(master_seed) ^ mix64(~stream_id) ^ fnv1a(label);
    return {mix64(folded), 0};
}

RandomStream::RandomStream(SeedSpec spec)
    : state_(mix64(mix64(spec.master_seed) ^ mix64(~spec.stream_id))) {}

std::uint64_t RandomStream::next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double RandomStream::next_u01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

}  // namespace transorder
