#include "holescope/holes.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace holescope {

HoleSpectrum::HoleSpectrum(int cap, bool complete, std::map<int, VertexSeq> witnesses)
    : cap_(cap), complete_(complete), witnesses_(std::move(witnesses))
{
}

std::vector<int> HoleSpectrum::lengths() const
{
    std::vector<int> out;
    for (const auto& [len, _] : witnesses_)
        out.push_back(len);
    return out;
}

namespace {

// Extends induced paths from a start vertex s that is the smallest vertex of
// the cycle being built. A path vertex adjacent to s closes a cycle and cannot
// be extended further.
class HoleSearch {
  public:
    HoleSearch(const Graph& g, std::vector<bool> wanted, bool stop_on_first, Budget budget)
        : g_(g), wanted_(std::move(wanted)), stop_on_first_(stop_on_first), counter_(budget, "hole search"),
          on_path_(g.order(), false), touch_(g.order(), 0), to_start_(g.order(), -1)
    {
        remaining_ = static_cast<int>(std::count(wanted_.begin(), wanted_.end(), true));
    }

    std::map<int, VertexSeq> run()
    {
        for (Vertex s = 0; s < g_.order() && !done(); ++s) {
            start_ = s;
            distances_to_start();
            path_ = {s};
            on_path_[s] = true;
            for (Vertex p : g_.neighbours(s)) {
                if (p < s || done())
                    continue;
                push(p);
                extend();
                pop();
            }
            on_path_[s] = false;
        }
        return found_;
    }

  private:
    bool done() const { return remaining_ == 0 || (stop_on_first_ && !found_.empty()); }

    int longest_wanted() const
    {
        for (int len = static_cast<int>(wanted_.size()) - 1; len >= 4; --len)
            if (wanted_[len])
                return len;
        return 0;
    }

    void distances_to_start()
    {
        std::fill(to_start_.begin(), to_start_.end(), -1);
        std::deque<Vertex> queue{start_};
        to_start_[start_] = 0;
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            for (Vertex w : g_.neighbours(u))
                if (w > start_ && to_start_[w] < 0) {
                    to_start_[w] = to_start_[u] + 1;
                    queue.push_back(w);
                }
        }
    }

    // touch_ counts adjacency to path vertices other than the start.
    void push(Vertex v)
    {
        path_.push_back(v);
        on_path_[v] = true;
        for (Vertex w : g_.neighbours(v))
            ++touch_[w];
    }

    void pop()
    {
        Vertex v = path_.back();
        path_.pop_back();
        on_path_[v] = false;
        for (Vertex w : g_.neighbours(v))
            --touch_[w];
    }

    void extend()
    {
        const Vertex last = path_.back();
        const int limit = longest_wanted();
        for (Vertex w : g_.neighbours(last)) {
            if (done())
                return;
            if (w <= start_ || on_path_[w] || touch_[w] != 1)
                continue;
            counter_.charge();
            const int vertices = static_cast<int>(path_.size()) + 1;
            if (g_.adjacent(w, start_)) {
                if (vertices >= 4 && vertices < static_cast<int>(wanted_.size()) && wanted_[vertices]) {
                    VertexSeq cycle = path_;
                    cycle.push_back(w);
                    found_.emplace(vertices, std::move(cycle));
                    wanted_[vertices] = false;
                    --remaining_;
                }
                continue;
            }
            if (to_start_[w] < 0 || vertices + to_start_[w] - 1 > limit)
                continue;
            push(w);
            extend();
            pop();
        }
    }

    const Graph& g_;
    std::vector<bool> wanted_;
    bool stop_on_first_;
    NodeCounter counter_;
    std::vector<bool> on_path_;
    std::vector<int> touch_;
    std::vector<int> to_start_;
    Vertex start_ = 0;
    VertexSeq path_;
    int remaining_ = 0;
    std::map<int, VertexSeq> found_;
};

std::map<int, VertexSeq> search(const Graph& g, std::vector<bool> wanted, bool stop_on_first, Budget budget)
{
    if (std::none_of(wanted.begin(), wanted.end(), [](bool b) { return b; }))
        return {};
    return HoleSearch(g, std::move(wanted), stop_on_first, budget).run();
}

}  // namespace

HoleSpectrum hole_spectrum(const Graph& g, int max_length, Budget budget)
{
    if (max_length < 4)
        throw std::invalid_argument("hole spectrum cap must be at least 4");
    const int reach = std::min(max_length, g.order());
    std::vector<bool> wanted(std::max(reach + 1, 0), false);
    for (int len = 4; len <= reach; ++len)
        wanted[len] = true;
    return HoleSpectrum(max_length, max_length >= g.order(), search(g, std::move(wanted), false, budget));
}

std::optional<VertexSeq> find_hole_of_length(const Graph& g, int length, Budget budget)
{
    if (length < 4)
        throw std::invalid_argument("hole length must be at least 4");
    if (length > g.order())
        return std::nullopt;
    std::vector<bool> wanted(length + 1, false);
    wanted[length] = true;
    auto found = search(g, std::move(wanted), true, budget);
    if (found.empty())
        return std::nullopt;
    return found.begin()->second;
}

std::optional<VertexSeq> odd_hole_min_length(const Graph& g, int min_length, int max_length, Budget budget)
{
    if (min_length < 5)
        throw std::invalid_argument("odd hole minimum length must be at least 5");
    const int reach = std::min(max_length, g.order());
    if (reach < min_length)
        return std::nullopt;
    std::vector<bool> wanted(reach + 1, false);
    for (int len = min_length; len <= reach; ++len)
        wanted[len] = len % 2 == 1;
    auto found = search(g, std::move(wanted), true, budget);
    if (found.empty())
        return std::nullopt;
    return found.begin()->second;
}

std::optional<HoleInterval> hole_interval(const HoleSpectrum& spectrum, int nu)
{
    if (nu < 1)
        throw std::invalid_argument("interval size must be at least 1");
    for (int t = 3; t + nu <= spectrum.cap(); ++t) {
        bool all = true;
        for (int i = 1; i <= nu && all; ++i)
            all = spectrum.contains(t + i);
        if (all) {
            HoleInterval out{t, {}};
            for (int i = 1; i <= nu; ++i)
                out.holes.push_back(spectrum.witness(t + i));
            return out;
        }
    }
    return std::nullopt;
}

std::optional<HoleInterval> hole_interval(const Graph& g, int nu, int max_length, Budget budget)
{
    return hole_interval(hole_spectrum(g, max_length, budget), nu);
}

SpectrumDensity spectrum_density(const std::vector<int>& lengths)
{
    std::vector<int> sorted = lengths;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    SpectrumDensity out;
    out.count = static_cast<int>(sorted.size());
    if (sorted.empty())
        return out;
    out.min = sorted.front();
    out.max = sorted.back();
    for (std::size_t i = 1; i < sorted.size(); ++i)
        out.largest_gap = std::max(out.largest_gap, sorted[i] - sorted[i - 1]);
    return out;
}

SpectrumDensity spectrum_density(const Graph& g, int max_length, Budget budget)
{
    return spectrum_density(hole_spectrum(g, max_length, budget).lengths());
}

}  // namespace holescope
