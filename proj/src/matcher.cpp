#include "permpat/matcher.hpp"

#include "permpat/kernels.hpp"

#include <algorithm>
#include <limits>

namespace permpat {

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) noexcept
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // acc * (n - k + i) / i stays exact at every step.
        acc = acc * (n - k + i) / i;
        if (acc > kMax)
            return kMax;
    }
    return static_cast<std::uint64_t>(acc);
}

bool is_valid_embedding(const GeneralizedPattern& p, const Permutation& t, const Embedding& e)
{
    const Index k = p.size();
    const Index n = t.size();
    if (e.size() != k)
        return false;
    for (Index i = 1; i <= k; ++i)
        if (e.at(i) < 1 || e.at(i) > n)
            return false;

    for (Index i = 1; i <= k; ++i)
        for (Index j = 1; j <= k; ++j)
            if ((p.at(i) < p.at(j)) != (t.at(e.at(i)) < t.at(e.at(j))))
                return false;

    for (const Block& b : p.blocks())
        for (Index i = b.first; i < b.last; ++i)
            if (e.at(i + 1) != e.at(i) + 1)
                return false;
    return true;
}

// ---------------------------------------------------------------------------
// Result collection shared by the engines
// ---------------------------------------------------------------------------

namespace {

class Collector {
public:
    explicit Collector(MatchMode mode) { result_.mode = mode; }

    /// Returns false once the search may stop.
    bool accept(std::span<const Index> positions)
    {
        switch (result_.mode) {
        case MatchMode::Decide:
            result_.found = true;
            result_.witness = validate_embedding({positions.begin(), positions.end()});
            return false;
        case MatchMode::Count:
            if (++small_count_ == std::numeric_limits<std::uint64_t>::max()) {
                result_.count += small_count_;
                small_count_ = 0;
            }
            return true;
        case MatchMode::EnumerateAll:
            result_.embeddings.push_back(validate_embedding({positions.begin(), positions.end()}));
            return true;
        }
        return true;
    }

    MatchResult finish() &&
    {
        switch (result_.mode) {
        case MatchMode::Decide:
            break;
        case MatchMode::Count:
            result_.count += small_count_;
            result_.found = result_.count > 0;
            break;
        case MatchMode::EnumerateAll:
            result_.count = result_.embeddings.size();
            result_.found = !result_.embeddings.empty();
            break;
        }
        return std::move(result_);
    }

private:
    MatchResult result_;
    std::uint64_t small_count_ = 0;
};

}  // namespace

// ---------------------------------------------------------------------------
// Brute force
// ---------------------------------------------------------------------------

MatchResult match_bruteforce(const MatchRequest& req, std::uint64_t budget)
{
    const Index k = req.pattern.size();
    const Index n = req.text.size();
    Collector out(req.mode);
    if (k > n)
        return std::move(out).finish();

    const std::uint64_t candidates = binomial_saturating(n, k);
    if (candidates > budget)
        throw BudgetExceeded("brute force needs C(" + std::to_string(n) + "," +
                             std::to_string(k) + ") candidate tuples, budget is " +
                             std::to_string(budget));

    // Lexicographic walk over k-subsets of 1..n.
    std::vector<Index> pos(k);
    for (Index i = 0; i < k; ++i)
        pos[i] = i + 1;
    for (;;) {
        const Embedding e = validate_embedding(pos);
        if (is_valid_embedding(req.pattern, req.text, e) && !out.accept(pos))
            break;

        Index i = k;
        while (i > 0 && pos[i - 1] == n - k + i)
            --i;
        if (i == 0)
            break;
        ++pos[i - 1];
        for (Index j = i; j < k; ++j)
            pos[j] = pos[j - 1] + 1;
    }
    return std::move(out).finish();
}

// ---------------------------------------------------------------------------
// Backtracking over placement units
// ---------------------------------------------------------------------------

namespace {

struct Unit {
    Index first;   // 0-based pattern index
    Index length;  // 1 for a free element
};

class Backtracker {
public:
    Backtracker(const GeneralizedPattern& p, const Permutation& t, Collector& out)
        : pattern_(p.values().begin(), p.values().end()),
          text_(t.values().begin(), t.values().end()),
          out_(out),
          k_(p.size()),
          n_(t.size())
    {
        Index next = 0;
        for (const Block& b : p.blocks()) {
            for (; next + 1 < b.first; ++next)
                units_.push_back({next, 1});
            units_.push_back({b.first - 1, b.length()});
            next = b.last;
        }
        for (; next < k_; ++next)
            units_.push_back({next, 1});

        // want_below_[row i][j] for j < i: all ones iff P(j) < P(i).
        row_offset_.resize(k_ + 1, 0);
        for (Index i = 0; i < k_; ++i)
            row_offset_[i + 1] = row_offset_[i] + i;
        want_below_.resize(row_offset_[k_]);
        for (Index i = 0; i < k_; ++i)
            for (Index j = 0; j < i; ++j)
                want_below_[row_offset_[i] + j] = pattern_[j] < pattern_[i] ? -1 : 0;

        placed_.resize(k_);
        positions_.resize(k_);
        row_bounds_.resize(k_);
    }

    void run()
    {
        if (k_ > n_ || !compute_latest_starts())
            return;
        place(0, 0);
    }

private:
    // Window t[s, s+len) is order-isomorphic to the unit's pattern values.
    bool window_matches(const Unit& u, Index s) const
    {
        for (Index a = 0; a < u.length; ++a)
            for (Index b = a + 1; b < u.length; ++b)
                if ((pattern_[u.first + a] < pattern_[u.first + b]) !=
                    (text_[s + a] < text_[s + b]))
                    return false;
        return true;
    }

    // For each unit, the feasible starts of block units and the latest start
    // from which the remaining units still fit. False if some unit has no
    // room at all.
    bool compute_latest_starts()
    {
        feasible_.assign(units_.size(), {});
        latest_.assign(units_.size(), 0);
        Index limit = n_;  // exclusive end available to units [u, end)
        for (Index u = units_.size(); u-- > 0;) {
            const Unit& unit = units_[u];
            if (limit < unit.length)
                return false;
            if (unit.length == 1) {
                latest_[u] = limit - 1;
            } else {
                auto& ok = feasible_[u];
                ok.assign(n_, 0);
                bool any = false;
                for (Index s = 0; s + unit.length <= limit; ++s) {
                    ok[s] = window_matches(unit, s);
                    if (ok[s]) {
                        latest_[u] = s;
                        any = true;
                    }
                }
                if (!any)
                    return false;
            }
            limit = latest_[u];
        }
        return true;
    }

    kernels::ValueBounds bounds_for_row(Index row, Index prefix) const
    {
        return kernels::order_bounds(
            std::span<const std::int32_t>(placed_.data(), prefix),
            std::span<const std::int32_t>(want_below_.data() + row_offset_[row], prefix));
    }

    // Returns false when the search should stop.
    bool place(Index u, Index from)
    {
        if (u == units_.size())
            return out_.accept(positions_);

        const Unit& unit = units_[u];
        const Index a = unit.first;
        const Index last = latest_[u];
        if (from > last)
            return true;

        // Bounds from the already placed prefix for every row of the unit.
        for (Index o = 0; o < unit.length; ++o)
            row_bounds_[a + o] = bounds_for_row(a + o, a);

        const std::span<const std::int32_t> text(text_);
        Index s = from;
        for (;;) {
            s = kernels::find_in_bounds(text, s, last + 1, row_bounds_[a]);
            if (s > last)
                return true;
            if (unit.length == 1 || fits_block(unit, s)) {
                for (Index o = 0; o < unit.length; ++o) {
                    placed_[a + o] = text_[s + o];
                    positions_[a + o] = s + o + 1;
                }
                if (!place(u + 1, s + unit.length))
                    return false;
            }
            ++s;
        }
    }

    bool fits_block(const Unit& unit, Index s) const
    {
        if (!feasible_[units_index(unit)][s])
            return false;
        for (Index o = 1; o < unit.length; ++o) {
            const auto v = static_cast<std::uint32_t>(text_[s + o]);
            const auto& b = row_bounds_[unit.first + o];
            if (!(b.lo < v && v < b.hi))
                return false;
        }
        return true;
    }

    Index units_index(const Unit& unit) const
    {
        return static_cast<Index>(&unit - units_.data());
    }

    std::vector<Value> pattern_;
    std::vector<std::int32_t> text_;
    Collector& out_;
    Index k_;
    Index n_;
    std::vector<Unit> units_;
    std::vector<Index> row_offset_;
    std::vector<std::int32_t> want_below_;
    std::vector<std::vector<char>> feasible_;
    std::vector<Index> latest_;
    std::vector<std::int32_t> placed_;
    std::vector<Index> positions_;
    std::vector<kernels::ValueBounds> row_bounds_;
};

}  // namespace

MatchResult match_backtracking(const MatchRequest& req)
{
    Collector out(req.mode);
    Backtracker(req.pattern, req.text, out).run();
    return std::move(out).finish();
}

// ---------------------------------------------------------------------------
// Increasing subsequences
// ---------------------------------------------------------------------------

namespace {

// longest[i]: length of the longest increasing subsequence starting at i.
std::vector<Index> longest_from(std::span<const Value> t)
{
    std::vector<Index> longest(t.size());
    std::vector<Value> tails;  // over negated values, read right to left
    for (Index i = t.size(); i-- > 0;) {
        const Value key = -t[i];
        auto it = std::lower_bound(tails.begin(), tails.end(), key);
        longest[i] = static_cast<Index>(it - tails.begin()) + 1;
        if (it == tails.end())
            tails.push_back(key);
        else
            *it = key;
    }
    return longest;
}

}  // namespace

Index lis_length(const Permutation& t)
{
    std::vector<Value> tails;
    for (Value v : t.values()) {
        auto it = std::lower_bound(tails.begin(), tails.end(), v);
        if (it == tails.end())
            tails.push_back(v);
        else
            *it = v;
    }
    return tails.size();
}

std::optional<Embedding> least_increasing_embedding(const Permutation& t, Index k)
{
    const auto values = t.values();
    if (k == 0 || k > values.size())
        return std::nullopt;
    const auto longest = longest_from(values);

    std::vector<Index> positions;
    positions.reserve(k);
    Value previous = 0;
    Index i = 0;
    for (Index need = k; need > 0; --need) {
        while (i < values.size() && !(values[i] > previous && longest[i] >= need))
            ++i;
        if (i == values.size())
            return std::nullopt;
        positions.push_back(i + 1);
        previous = values[i];
        ++i;
    }
    return validate_embedding(std::move(positions));
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

namespace {

bool is_identity(const GeneralizedPattern& p)
{
    const auto v = p.values();
    for (Index i = 0; i < v.size(); ++i)
        if (v[i] != static_cast<Value>(i + 1))
            return false;
    return true;
}

}  // namespace

MatchResult match_dispatch(const MatchRequest& req)
{
    if (req.mode == MatchMode::Decide && req.pattern.is_classical() && is_identity(req.pattern)) {
        MatchResult r;
        r.mode = MatchMode::Decide;
        r.found = lis_length(req.text) >= req.pattern.size();
        if (r.found)
            r.witness = least_increasing_embedding(req.text, req.pattern.size());
        return r;
    }
    return match_backtracking(req);
}

}  // namespace permpat
