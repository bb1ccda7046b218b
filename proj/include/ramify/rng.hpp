#pragma once

#include <cstdint>
#include <random>

namespace ramify {

// Seeded generator shared by all randomized checks. Bounded draws use a plain
// modulo reduction so results do not depend on the standard library's
// distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }
    std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : eng_() % bound; }
    std::int64_t between(std::int64_t lo, std::int64_t hi)
    {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    bool coin() { return (eng_() >> 17U) & 1U; }

private:
    std::mt19937_64 eng_;
};

} // namespace ramify
