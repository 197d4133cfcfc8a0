#pragma once

#include <cstdint>
#include <string_view>

namespace transorder {

// Seeding contract: (master_seed, stream_id) fully determines a stream, and
// distinct stream ids behave as independent streams. There is no global RNG
// state anywhere in the library.
struct SeedSpec {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_id = 0;

    // Same master, different stream.
    [[nodiscard]] SeedSpec stream(std::uint64_t id) const { return {master_seed, id}; }

    // New master keyed by a label, stream reset to 0. Used to carve
    // non-overlapping stream families ("null:n=50", "boot", ...) out of a
    // single user-facing seed, independently of evaluation order.
    [[nodiscard]] SeedSpec derive(std::string_view label) const;
};

// Counter-based splitmix64 stream. Construction is two multiplies, so every
// Monte Carlo replicate gets a stream of its own.
class RandomStream {
public:
    explicit RandomStream(SeedSpec spec);

    std::uint64_t next_u64();

    // Uniform on [0,1) with 53 random bits; 1 is never returned.
    double next_u01();

private:
    std::uint64_t state_;
};

}  // namespace transorder
