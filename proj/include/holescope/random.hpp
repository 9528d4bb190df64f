#ifndef HOLESCOPE_RANDOM_HPP
#define HOLESCOPE_RANDOM_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace holescope {

/// mt19937_64 with portable integer draws. The standard distributions are
/// implementation-defined, so seeded output would differ between toolchains.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound)
    {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do
            x = engine_();
        while (x >= limit);
        return x % bound;
    }

    bool coin() { return engine_() >> 63; }

    /// Fisher-Yates, front to back.
    template <typename T>
    void shuffle(std::vector<T>& v)
    {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace holescope

#endif
