#include "quiverhh/corpus.hpp"

#include <random>
#include <string>

namespace quiverhh {

namespace {

std::optional<BoundQuiver> attempt(std::mt19937_64& rng, const CorpusOptions& opt) {
    std::uniform_int_distribution<std::size_t> nv(1, opt.max_vertices);
    const std::size_t vertices = nv(rng);
    std::uniform_int_distribution<std::size_t> na(vertices == 1 ? 1 : vertices - 1, opt.max_arrows);
    const std::size_t wanted = na(rng);
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(vertices - 1));

    std::vector<std::pair<std::uint32_t, std::uint32_t>> arrows;
    std::vector<int> out(vertices), in(vertices);
    for (std::size_t tries = 0; arrows.size() < wanted && tries < 8 * wanted; ++tries) {
        auto s = pick(rng), t = pick(rng);
        if (out[s] == 2 || in[t] == 2) continue;
        ++out[s];
        ++in[t];
        arrows.emplace_back(s, t);
    }

    BoundQuiver::Builder b;
    for (std::size_t v = 0; v < vertices; ++v) b.add_vertex(std::to_string(v + 1));
    for (std::size_t i = 0; i < arrows.size(); ++i)
        b.add_arrow(std::string(1, static_cast<char>('a' + i)), VertexId{arrows[i].first}, VertexId{arrows[i].second});

    // Each arrow gets at most one free successor and each arrow is at most one free successor.
    std::bernoulli_distribution keep_free(opt.free_probability);
    std::vector<int> free_next(arrows.size(), -1);
    std::vector<bool> taken(arrows.size(), false);
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        if (!keep_free(rng)) continue;
        std::vector<std::size_t> candidates;
        for (std::size_t j = 0; j < arrows.size(); ++j)
            if (arrows[j].first == arrows[i].second && !taken[j]) candidates.push_back(j);
        if (candidates.empty()) continue;
        std::uniform_int_distribution<std::size_t> c(0, candidates.size() - 1);
        auto j = candidates[c(rng)];
        free_next[i] = static_cast<int>(j);
        taken[j] = true;
    }
    for (std::size_t i = 0; i < arrows.size(); ++i)
        for (std::size_t j = 0; j < arrows.size(); ++j)
            if (arrows[j].first == arrows[i].second && free_next[i] != static_cast<int>(j))
                b.add_relation(ArrowId{static_cast<std::uint32_t>(i)}, ArrowId{static_cast<std::uint32_t>(j)});

    BoundQuiver bq = b.build();
    if (!validate_string_algebra(bq).ok()) return std::nullopt;
    return bq;
}

}  // namespace

std::vector<BoundQuiver> random_string_corpus(std::size_t count, std::uint64_t seed, const CorpusOptions& options) {
    std::mt19937_64 rng(seed);
    std::vector<BoundQuiver> out;
    while (out.size() < count)
        if (auto bq = attempt(rng, options)) out.push_back(std::move(*bq));
    return out;
}

const std::vector<BoundQuiver>& standard_corpus() {
    static const std::vector<BoundQuiver> corpus = random_string_corpus(kCorpusSize, kCorpusSeed);
    return corpus;
}

}  // namespace quiverhh
