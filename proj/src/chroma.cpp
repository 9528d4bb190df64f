#include "holescope/chroma.hpp"

#include "holescope/random.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <string>

namespace holescope {

Budget budget_from_environment()
{
    Budget budget;
    if (const char* env = std::getenv("HOLESCOPE_BUDGET")) {
        try {
            std::size_t used = 0;
            auto value = std::stoull(env, &used);
            if (used == std::string(env).size() && value > 0)
                budget.max_nodes = value;
        }
        catch (const std::exception&) {
        }
    }
    return budget;
}

namespace {

// DSATUR branch and bound. Vertex choice: highest saturation, then highest
// degree, then smallest id; colours tried in increasing order.
class DsaturSolver {
  public:
    DsaturSolver(const Graph& g, Budget budget)
        : g_(g), n_(g.order()), counter_(budget, "chromatic number"), colour_(n_, -1), sat_(n_, 0),
          seen_(static_cast<std::size_t>(n_) * (n_ + 1), 0)
    {
    }

    std::vector<int> solve()
    {
        if (n_ == 0)
            return {};
        lower_ = greedy_clique_size();
        greedy_upper_bound();
        if (best_ > lower_)
            branch(0, 0);
        return best_colouring_;
    }

  private:
    int& seen(Vertex v, int c) { return seen_[static_cast<std::size_t>(v) * (n_ + 1) + c]; }

    Vertex select() const
    {
        Vertex pick = -1;
        for (Vertex v = 0; v < n_; ++v) {
            if (colour_[v] >= 0)
                continue;
            if (pick < 0 || sat_[v] > sat_[pick] || (sat_[v] == sat_[pick] && g_.degree(v) > g_.degree(pick)))
                pick = v;
        }
        return pick;
    }

    void assign(Vertex v, int c)
    {
        colour_[v] = c;
        for (Vertex w : g_.neighbours(v))
            if (seen(w, c)++ == 0)
                ++sat_[w];
    }

    void unassign(Vertex v)
    {
        int c = colour_[v];
        colour_[v] = -1;
        for (Vertex w : g_.neighbours(v))
            if (--seen(w, c) == 0)
                --sat_[w];
    }

    void greedy_upper_bound()
    {
        std::vector<Vertex> order;
        int used = 0;
        for (int done = 0; done < n_; ++done) {
            Vertex v = select();
            int c = 0;
            while (seen(v, c) > 0)
                ++c;
            assign(v, c);
            order.push_back(v);
            used = std::max(used, c + 1);
        }
        best_ = used;
        best_colouring_ = colour_;
        for (auto it = order.rbegin(); it != order.rend(); ++it)
            unassign(*it);
    }

    void branch(int coloured, int used)
    {
        if (coloured == n_) {
            if (used < best_) {
                best_ = used;
                best_colouring_ = colour_;
            }
            return;
        }
        Vertex v = select();
        for (int c = 0; c <= used && c + 1 < best_; ++c) {
            if (seen(v, c) > 0)
                continue;
            counter_.charge();
            assign(v, c);
            branch(coloured + 1, std::max(used, c + 1));
            unassign(v);
            if (best_ <= lower_)
                return;
        }
    }

    int greedy_clique_size() const
    {
        int best = 1;
        for (Vertex v = 0; v < n_; ++v) {
            std::vector<Vertex> candidates = g_.neighbours(v);
            std::stable_sort(candidates.begin(), candidates.end(),
                             [&](Vertex a, Vertex b) { return g_.degree(a) > g_.degree(b); });
            std::vector<Vertex> clique{v};
            for (Vertex w : candidates)
                if (std::all_of(clique.begin(), clique.end(), [&](Vertex u) { return g_.adjacent(u, w); }))
                    clique.push_back(w);
            best = std::max(best, static_cast<int>(clique.size()));
        }
        return best;
    }

    const Graph& g_;
    int n_;
    NodeCounter counter_;
    std::vector<int> colour_;
    std::vector<int> sat_;
    std::vector<int> seen_;
    int lower_ = 0;
    int best_ = 0;
    std::vector<int> best_colouring_;
};

}  // namespace

std::vector<int> optimal_colouring(const Graph& g, Budget budget) { return DsaturSolver(g, budget).solve(); }

int chromatic_number(const Graph& g, Budget budget)
{
    auto colouring = optimal_colouring(g, budget);
    return colouring.empty() ? 0 : *std::max_element(colouring.begin(), colouring.end()) + 1;
}

int chi_of_set(const Graph& g, const VertexSet& s, Budget budget)
{
    return chromatic_number(induced_subgraph(g, s).graph, budget);
}

std::vector<int> ball_chromatic_numbers(const Graph& g, int radius, Budget budget)
{
    std::vector<int> out(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        out[v] = chi_of_set(g, neighbourhood(g, v, radius, true), budget);
    return out;
}

int chi_rho(const Graph& g, int radius, Budget budget)
{
    auto balls = ball_chromatic_numbers(g, radius, budget);
    return balls.empty() ? 0 : *std::max_element(balls.begin(), balls.end());
}

PhiTable::PhiTable(std::vector<int> values, Policy policy) : values_(std::move(values)), policy_(policy)
{
    if (values_.empty())
        throw std::invalid_argument("phi table must have at least one value");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] < 0)
            throw std::invalid_argument("phi values must be nonnegative");
        if (i > 0 && values_[i] < values_[i - 1])
            throw std::invalid_argument("phi table must be non-decreasing (index " + std::to_string(i) + ")");
    }
}

PhiTable PhiTable::from_json(std::string_view text, Policy policy)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("phi table: ") + e.what());
    }
    if (!doc.is_array())
        throw std::invalid_argument("phi table: expected a JSON array");
    std::vector<int> values;
    for (const auto& item : doc) {
        if (!item.is_number_integer() || item.get<long long>() < 0)
            throw std::invalid_argument("phi table: entries must be nonnegative integers");
        values.push_back(item.get<int>());
    }
    return PhiTable(std::move(values), policy);
}

PhiTable PhiTable::identity(int max_arg, Policy policy)
{
    std::vector<int> values(max_arg + 1);
    for (int i = 0; i <= max_arg; ++i)
        values[i] = i;
    return PhiTable(std::move(values), policy);
}

PhiTable PhiTable::constant(int value, int max_arg, Policy policy)
{
    return PhiTable(std::vector<int>(max_arg + 1, value), policy);
}

int PhiTable::operator()(long kappa) const
{
    if (kappa < 0)
        throw PhiRangeError("phi argument must be nonnegative");
    if (static_cast<std::size_t>(kappa) < values_.size())
        return values_[kappa];
    if (policy_ == Policy::clamp)
        return values_.back();
    throw PhiRangeError("phi argument " + std::to_string(kappa) + " beyond table of size " +
                        std::to_string(values_.size()));
}

namespace {

void examine(const Graph& g, const VertexSet& subset, int radius, const PhiTable& phi, Budget budget,
             ControlReport& report)
{
    const Graph h = induced_subgraph(g, subset).graph;
    int chi = chromatic_number(h, budget);
    int local = chi_rho(h, radius, budget);
    ++report.checked;
    if (chi > phi(local))
        report.violations.push_back({subset, chi, local});
}

VertexSet random_connected_subset(const Graph& g, Rng& rng)
{
    const auto n = static_cast<std::uint64_t>(g.order());
    auto target = 1 + rng.below(n);
    VertexSet chosen{static_cast<Vertex>(rng.below(n))};
    std::vector<Vertex> frontier;
    auto refresh = [&] {
        frontier.clear();
        for (Vertex u : chosen)
            for (Vertex w : g.neighbours(u))
                if (!set_contains(chosen, w))
                    frontier.push_back(w);
        frontier = make_set(std::move(frontier));
    };
    refresh();
    while (chosen.size() < target && !frontier.empty()) {
        chosen = set_union(chosen, {frontier[rng.below(frontier.size())]});
        refresh();
    }
    return chosen;
}

}  // namespace

ControlReport check_controlled(const Graph& g, int radius, const PhiTable& phi, const ControlOptions& options)
{
    if (radius < 1)
        throw std::invalid_argument("radius must be positive");
    ControlReport report;
    const int n = g.order();
    if (n < 63 && (std::uint64_t{1} << n) <= options.subset_cap) {
        report.exhaustive = true;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            VertexSet subset;
            for (Vertex v = 0; v < n; ++v)
                if ((mask >> v) & 1)
                    subset.push_back(v);
            examine(g, subset, radius, phi, options.budget, report);
        }
        return report;
    }
    Rng rng(options.seed);
    for (std::uint64_t i = 0; i < options.samples; ++i)
        examine(g, random_connected_subset(g, rng), radius, phi, options.budget, report);
    return report;
}

}  // namespace holescope
