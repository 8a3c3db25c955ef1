#ifndef FLOWCERT_SRC_RNG_HPP
#define FLOWCERT_SRC_RNG_HPP

#include <cstdint>
#include <random>

namespace flowcert::detail {

// Engine output is fixed by the standard; the distribution mapping is done
// here so results do not depend on the standard library in use.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, bound), bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace flowcert::detail

#endif
