#ifndef QUIVERHH_CORPUS_HPP
#define QUIVERHH_CORPUS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "quiverhh/quiver.hpp"

namespace quiverhh {

struct CorpusOptions {
    std::size_t max_vertices = 5;
    std::size_t max_arrows = 8;
    double free_probability = 0.6;  // chance an arrow keeps a relation-free continuation
};

/*
 * Deterministic pseudo-random connected finite-dimensional quadratic string
 * algebras. Arrows respect the in/out bound; relations are all composable
 * pairs except a random partial matching of "free" continuations, which is
 * exactly what the string condition allows.
 */
std::vector<BoundQuiver> random_string_corpus(std::size_t count, std::uint64_t seed, const CorpusOptions& options = {});

/// The corpus used by the test suites and `selftest`.
constexpr std::uint64_t kCorpusSeed = 20240611;
constexpr std::size_t kCorpusSize = 60;
const std::vector<BoundQuiver>& standard_corpus();

}  // namespace quiverhh

#endif
