#ifndef HOLESCOPE_BUDGET_HPP
#define HOLESCOPE_BUDGET_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace holescope {

/// Raised when an exact search runs out of node expansions. Searches never
/// return a partial answer in place of this.
class BudgetExhausted : public std::runtime_error {
  public:
    explicit BudgetExhausted(const std::string& what) : std::runtime_error("budget exhausted: " + what) {}
};

/// Node-expansion cap for one search.
struct Budget {
    std::uint64_t max_nodes = 200'000'000;

    static Budget unlimited() { return {UINT64_MAX}; }
};

/// Budget from HOLESCOPE_BUDGET if set and valid, otherwise the default.
Budget budget_from_environment();

class NodeCounter {
  public:
    NodeCounter(Budget budget, const char* search) : budget_(budget), search_(search) {}

    void charge(std::uint64_t n = 1)
    {
        used_ += n;
        if (used_ > budget_.max_nodes)
            throw BudgetExhausted(std::string(search_) + " exceeded " + std::to_string(budget_.max_nodes) + " nodes");
    }

    std::uint64_t used() const { return used_; }

  private:
    Budget budget_;
    const char* search_;
    std::uint64_t used_ = 0;
};

}  // namespace holescope

#endif
