#pragma once

#include <cstdint>
#include <random>

namespace twoclub {

// Seeded generator with pinned output mappings so a given seed produces the
// same stream everywhere (std::uniform_int_distribution is not portable).
class Rng {
public:
    explicit Rng(unsigned long long seed) : engine_(seed) {}

    unsigned long long next() { return engine_(); }

    // uniform in [0, n); n must be positive
    int below(int n) { return static_cast<int>(next() % static_cast<unsigned long long>(n)); }

    // uniform in [0, 1) with 53 bits
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

}  // namespace twoclub
