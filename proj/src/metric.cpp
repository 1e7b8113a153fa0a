#include "gplus/metric.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

namespace gplus {

namespace {

void require_connected(const DistanceMatrix& dm)
{
    if (!dm.connected())
        throw DisconnectedGraph();
}

void check_set(const DistanceMatrix& dm, std::span<const Vertex> W)
{
    for (Vertex w : W)
        if (w >= dm.order())
            throw IndexOutOfRange("resolving-set vertex " + std::to_string(w) + " out of range");
}

std::vector<std::size_t> distances_to(const DistanceMatrix& dm, Vertex u, std::span<const Vertex> W)
{
    if (u >= dm.order())
        throw IndexOutOfRange("vertex " + std::to_string(u) + " out of range");
    check_set(dm, W);
    require_connected(dm);
    std::vector<std::size_t> out;
    out.reserve(W.size());
    for (Vertex w : W)
        out.push_back(dm(u, w));
    return out;
}

// Binomial in 64 bits; nullopt on overflow.
std::optional<std::uint64_t> binomial64(std::size_t n, std::size_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    unsigned __int128 out = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        out = out * (n - k + i) / i;
        if (out > std::numeric_limits<std::uint64_t>::max())
            return std::nullopt;
    }
    return static_cast<std::uint64_t>(out);
}

}  // namespace

VectorRep vector_rep(const DistanceMatrix& dm, Vertex u, std::span<const Vertex> W)
{
    return {distances_to(dm, u, W)};
}

MultisetRep multiset_rep(const DistanceMatrix& dm, Vertex u, std::span<const Vertex> W)
{
    auto d = distances_to(dm, u, W);
    std::sort(d.begin(), d.end());
    return {std::move(d)};
}

VectorRep vector_rep(const LabeledGraph& g, Vertex u, std::span<const Vertex> W)
{
    return vector_rep(DistanceMatrix(g), u, W);
}

MultisetRep multiset_rep(const LabeledGraph& g, Vertex u, std::span<const Vertex> W)
{
    return multiset_rep(DistanceMatrix(g), u, W);
}

std::string_view to_string(ResolvingKind kind)
{
    switch (kind) {
    case ResolvingKind::Vector:
        return "vector";
    case ResolvingKind::Multiset:
        return "multiset";
    case ResolvingKind::OuterMultiset:
        return "outer";
    }
    return "unknown";
}

bool resolves(const DistanceMatrix& dm, std::span<const Vertex> W, ResolvingKind kind)
{
    check_set(dm, W);
    require_connected(dm);
    const std::size_t n = dm.order();
    std::vector<bool> in_set(n, false);
    for (Vertex w : W)
        in_set[w] = true;

    std::vector<std::vector<std::size_t>> reps;
    reps.reserve(n);
    for (Vertex u = 0; u < n; ++u) {
        if (kind == ResolvingKind::OuterMultiset && in_set[u])
            continue;
        std::vector<std::size_t> r;
        r.reserve(W.size());
        for (Vertex w : W)
            r.push_back(dm(u, w));
        if (kind != ResolvingKind::Vector)
            std::sort(r.begin(), r.end());
        reps.push_back(std::move(r));
    }
    std::sort(reps.begin(), reps.end());
    return std::adjacent_find(reps.begin(), reps.end()) == reps.end();
}

bool is_resolving(const LabeledGraph& g, std::span<const Vertex> W)
{
    return resolves(DistanceMatrix(g), W, ResolvingKind::Vector);
}

bool is_multiset_resolving(const LabeledGraph& g, std::span<const Vertex> W)
{
    return resolves(DistanceMatrix(g), W, ResolvingKind::Multiset);
}

bool is_outer_multiset_resolving(const LabeledGraph& g, std::span<const Vertex> W)
{
    return resolves(DistanceMatrix(g), W, ResolvingKind::OuterMultiset);
}

std::vector<Vertex> unrank_subset(std::size_t n, std::size_t k, std::uint64_t rank)
{
    std::vector<Vertex> out;
    out.reserve(k);
    Vertex x = 0;
    for (std::size_t i = 0; i < k; ++i) {
        while (true) {
            if (x >= n)
                throw std::out_of_range("subset rank out of range");
            auto block = binomial64(n - 1 - x, k - 1 - i).value();
            if (rank < block)
                break;
            rank -= block;
            ++x;
        }
        out.push_back(x++);
    }
    return out;
}

bool next_subset(std::vector<Vertex>& subset, std::size_t n)
{
    const std::size_t k = subset.size();
    std::size_t i = k;
    while (i > 0 && subset[i - 1] == n - k + i - 1)
        --i;
    if (i == 0)
        return false;
    ++subset[i - 1];
    for (std::size_t j = i; j < k; ++j)
        subset[j] = subset[j - 1] + 1;
    return true;
}

std::optional<DimensionResult> resolving_dimension(const LabeledGraph& g, ResolvingKind kind,
                                                   const DimensionOptions& options)
{
    const std::size_t n = g.order();
    if (n > options.order_cap && !options.ignore_cap)
        throw OrderCapExceeded("dimension search refused: order " + std::to_string(n) +
                               " exceeds cap " + std::to_string(options.order_cap));
    DistanceMatrix dm(g);
    require_connected(dm);

    unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
    threads = std::max(threads, 1u);
    const std::size_t max_size = std::min(options.max_size, n);

    for (std::size_t k = 0; k <= max_size; ++k) {
        auto total = binomial64(n, k);
        if (!total || threads == 1) {
            std::vector<Vertex> subset(k);
            for (std::size_t i = 0; i < k; ++i)
                subset[i] = i;
            do {
                if (resolves(dm, subset, kind))
                    return DimensionResult{k, subset};
            } while (next_subset(subset, n));
            continue;
        }

        // Disjoint rank ranges; the smallest rank that resolves wins no
        // matter which worker finishes first.
        std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
        const std::uint64_t workers = std::min<std::uint64_t>(threads, *total);
        const std::uint64_t chunk = (*total + workers - 1) / workers;
        auto work = [&](std::uint64_t lo, std::uint64_t hi) {
            auto subset = unrank_subset(n, k, lo);
            for (std::uint64_t r = lo; r < hi && r < best.load(); ++r) {
                if (resolves(dm, subset, kind)) {
                    std::uint64_t cur = best.load();
                    while (r < cur && !best.compare_exchange_weak(cur, r)) {
                    }
                    return;
                }
                next_subset(subset, n);
            }
        };
        std::vector<std::jthread> pool;
        for (std::uint64_t w = 0; w < workers; ++w) {
            std::uint64_t lo = w * chunk;
            std::uint64_t hi = std::min(*total, lo + chunk);
            if (lo < hi)
                pool.emplace_back(work, lo, hi);
        }
        pool.clear();
        if (best.load() != std::numeric_limits<std::uint64_t>::max())
            return DimensionResult{k, unrank_subset(n, k, best.load())};
    }
    return std::nullopt;
}

std::optional<DimensionResult> outer_multiset_dimension(const LabeledGraph& g,
                                                        std::size_t max_size)
{
    DimensionOptions options;
    options.max_size = max_size;
    return resolving_dimension(g, ResolvingKind::OuterMultiset, options);
}

}  // namespace gplus
