#include "subqa/alignment.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace subqa {
namespace {

struct Interval {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
};

double jaccard(Interval a, Interval b)
{
    const auto inter = std::min(a.hi, b.hi) - std::max(a.lo, b.lo);
    if (inter <= 0)
        return 0.0;
    const auto uni = std::max(a.hi, b.hi) - std::min(a.lo, b.lo);
    return uni > 0 ? static_cast<double>(inter) / static_cast<double>(uni) : 0.0;
}

bool contains(Interval outer, Interval inner)
{
    return outer.lo <= inner.lo && inner.hi <= outer.hi;
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n)
    {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b)
    {
        parent[find(a)] = find(b);
    }
};

// Length of the union of (already clamped) intervals.
std::int64_t union_length(std::vector<Interval> ivs)
{
    std::sort(ivs.begin(), ivs.end(), [](Interval a, Interval b) { return a.lo < b.lo; });
    std::int64_t total = 0, cur_lo = 0, cur_hi = -1;
    bool open = false;
    for (const Interval& iv : ivs) {
        if (!open || iv.lo > cur_hi) {
            if (open)
                total += cur_hi - cur_lo;
            cur_lo = iv.lo;
            cur_hi = iv.hi;
            open = true;
        } else {
            cur_hi = std::max(cur_hi, iv.hi);
        }
    }
    if (open)
        total += cur_hi - cur_lo;
    return total;
}

std::int64_t intersection_length(std::vector<Interval> a, std::vector<Interval> b)
{
    std::sort(a.begin(), a.end(), [](Interval x, Interval y) { return x.lo < y.lo; });
    std::sort(b.begin(), b.end(), [](Interval x, Interval y) { return x.lo < y.lo; });
    std::int64_t total = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const auto lo = std::max(a[i].lo, b[j].lo);
        const auto hi = std::min(a[i].hi, b[j].hi);
        if (hi > lo)
            total += hi - lo;
        (a[i].hi < b[j].hi) ? ++i : ++j;
    }
    return total;
}

Interval interval_of(const Cue& cue)
{
    // Zero (or negative, in lenient parses) durations clamp to a point.
    return {cue.start.millis, std::max(cue.end.millis, cue.start.millis)};
}

} // namespace

std::vector<AlignedCuePair> align_by_time(const SubtitleDocument& source, const SubtitleDocument& target,
                                          double threshold)
{
    const std::size_t n = source.cues.size();
    const std::size_t m = target.cues.size();
    std::vector<Interval> src(n), tgt(m);
    for (std::size_t i = 0; i < n; ++i)
        src[i] = interval_of(source.cues[i]);
    for (std::size_t j = 0; j < m; ++j)
        tgt[j] = interval_of(target.cues[j]);

    UnionFind uf(n + m);
    // Sweep over both sides ordered by start; only temporally overlapping
    // cross-document cues can join a pair.
    std::vector<std::size_t> so(n), to(m);
    std::iota(so.begin(), so.end(), std::size_t{0});
    std::iota(to.begin(), to.end(), std::size_t{0});
    std::sort(so.begin(), so.end(), [&](auto a, auto b) { return src[a].lo < src[b].lo; });
    std::sort(to.begin(), to.end(), [&](auto a, auto b) { return tgt[a].lo < tgt[b].lo; });

    std::size_t j_lo = 0;
    for (std::size_t si : so) {
        const Interval a = src[si];
        while (j_lo < m && tgt[to[j_lo]].hi < a.lo)
            ++j_lo;
        for (std::size_t jj = j_lo; jj < m; ++jj) {
            const std::size_t tj = to[jj];
            const Interval b = tgt[tj];
            if (b.lo > a.hi)
                break;
            const bool point_match = (a.lo == a.hi || b.lo == b.hi) && (contains(a, b) || contains(b, a));
            if (point_match || jaccard(a, b) >= threshold || contains(a, b) || contains(b, a))
                uf.unite(si, n + tj);
        }
    }

    std::vector<AlignedCuePair> pairs;
    std::vector<std::size_t> root_to_pair(n + m, static_cast<std::size_t>(-1));
    const auto pair_for = [&](std::size_t root) -> AlignedCuePair& {
        if (root_to_pair[root] == static_cast<std::size_t>(-1)) {
            root_to_pair[root] = pairs.size();
            pairs.emplace_back();
        }
        return pairs[root_to_pair[root]];
    };
    for (std::size_t i = 0; i < n; ++i)
        pair_for(uf.find(i)).source_indices.push_back(i);
    for (std::size_t j = 0; j < m; ++j)
        pair_for(uf.find(n + j)).target_indices.push_back(j);

    for (AlignedCuePair& p : pairs) {
        std::vector<Interval> a, b;
        for (auto i : p.source_indices)
            a.push_back(src[i]);
        for (auto j : p.target_indices)
            b.push_back(tgt[j]);
        if (a.empty() || b.empty()) {
            p.overlap = 0.0;
        } else {
            const auto inter = intersection_length(a, b);
            std::vector<Interval> all = a;
            all.insert(all.end(), b.begin(), b.end());
            const auto uni = union_length(all);
            p.overlap = uni > 0 ? static_cast<double>(inter) / static_cast<double>(uni)
                                : 1.0; // two coincident points
        }
    }

    std::sort(pairs.begin(), pairs.end(), [&](const AlignedCuePair& p, const AlignedCuePair& q) {
        const auto earliest = [&](const AlignedCuePair& x) {
            std::int64_t e = std::numeric_limits<std::int64_t>::max();
            for (auto i : x.source_indices)
                e = std::min(e, src[i].lo);
            for (auto j : x.target_indices)
                e = std::min(e, tgt[j].lo);
            return e;
        };
        return earliest(p) < earliest(q);
    });
    return pairs;
}

Findings check_block_count(const std::vector<AlignedCuePair>& alignment)
{
    Findings findings;
    for (const AlignedCuePair& pair : alignment) {
        if (pair.one_to_one())
            continue;
        Finding f;
        f.category = ErrorCategory::BlockCountIntegrity;
        f.severity = Severity::Error;
        f.cue_index = !pair.target_indices.empty() ? pair.target_indices.front()
                                                   : pair.source_indices.front();
        const auto s = pair.source_indices.size();
        const auto t = pair.target_indices.size();
        if (t == 0)
            f.message = "unmatched source cue (" + std::to_string(s) + "→0)";
        else if (s == 0)
            f.message = "unmatched target cue (0→" + std::to_string(t) + ")";
        else
            f.message = std::to_string(s) + "→" + std::to_string(t) +
                        (s > t ? " merge" : " split");
        findings.push_back(std::move(f));
    }
    return findings;
}

} // namespace subqa
