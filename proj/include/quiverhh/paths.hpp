#ifndef QUIVERHH_PATHS_HPP
#define QUIVERHH_PATHS_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quiverhh/quiver.hpp"

namespace quiverhh {

/*
 * The relation-avoiding paths of a finite-dimensional bound quiver (trivial
 * paths included), in canonical order and indexed by endpoints. These are the
 * basis of A = kQ/I.
 */
class BasisPathSet {
public:
    const std::vector<Path>& paths() const { return paths_; }
    std::size_t size() const { return paths_.size(); }
    bool contains(const Path& p) const { return index_.contains(p); }
    /// Basis paths from `s` to `t`, canonical order.
    std::span<const Path> between(VertexId s, VertexId t) const;

private:
    friend BasisPathSet enumerate_basis_paths(const BoundQuiver& bq);

    std::vector<Path> paths_;
    std::map<Path, std::size_t> index_;
    std::map<std::pair<VertexId, VertexId>, std::vector<Path>> by_endpoints_;
};

/// Throws HypothesisError when a relation-avoiding path exceeds |Q1| arrows (infinite dimension).
BasisPathSet enumerate_basis_paths(const BoundQuiver& bq);

/// AP_n: length-n paths whose consecutive arrow pairs are all relations.
struct APSet {
    std::size_t degree = 0;
    std::vector<Path> elements;
};

APSet enumerate_ap(const BoundQuiver& bq, std::size_t n);

/// Cochain basis element: rho in AP_n and gamma a basis path with the same endpoints.
struct ParallelPair {
    Path rho;
    Path gamma;

    std::size_t degree() const { return rho.length(); }
    auto operator<=>(const ParallelPair&) const = default;
    bool operator==(const ParallelPair&) const = default;
};

std::string describe(const BoundQuiver& bq, const ParallelPair& p);

/// All pairs (rho, gamma) with rho in X, gamma in P parallel to it, |gamma| >= min_gamma_length.
std::vector<ParallelPair> parallel_pairs(const APSet& X, const BasisPathSet& P, std::size_t min_gamma_length = 0);

enum class PairTag { ZZ, OZ, ZO, OO };  // (0,0) (1,0) (0,1) (1,1)
enum class Decoration { Plus, Minus };

const char* to_string(PairTag t);

struct PairClass {
    PairTag tag;
    Decoration left;
    Decoration right;
    bool operator==(const PairClass&) const = default;
};

/// Minus iff beta*gamma lies in I for every arrow beta ending at s(gamma) (vacuously when there is none).
Decoration left_decoration(const BoundQuiver& bq, const Path& gamma);
/// Minus iff gamma*beta lies in I for every arrow beta starting at t(gamma).
Decoration right_decoration(const BoundQuiver& bq, const Path& gamma);

/// Requires |rho| >= 1. The tag records whether gamma begins with rho's first arrow and ends with its last.
PairClass classify_pair(const BoundQuiver& bq, const ParallelPair& p);

/// Cyclic structure of a pair (alpha_1...alpha_n, e_r) with n >= 1.
struct CyclicPairData {
    ParallelPair pair;
    bool complete = false;   // alpha_n alpha_1 in I
    std::size_t order = 0;   // least k with t^k fixing the pair; 0 when incomplete
    bool in_c0 = false;      // complete, with no other relation continuation at either end
    bool gentle = false;     // every rotation lies in C_n(0)
    bool empty = false;      // incomplete and no relation passes through r
};

bool is_complete(const BoundQuiver& bq, const ParallelPair& p);
bool in_c0(const BoundQuiver& bq, const ParallelPair& p);

/// t(alpha_1...alpha_n, e) = (alpha_n alpha_1...alpha_{n-1}, e'); throws std::logic_error on incomplete pairs.
ParallelPair rotate(const BoundQuiver& bq, const ParallelPair& p);
CyclicPairData rotate(const BoundQuiver& bq, const CyclicPairData& c);

/// Orbit t^0(p), ..., t^{k-1}(p) of a complete pair; its length is the order.
std::vector<ParallelPair> orbit(const BoundQuiver& bq, const ParallelPair& p);
std::size_t order_of(const BoundQuiver& bq, const ParallelPair& p);
/// N(p) as a formal sum: each orbit element with coefficient 1.
std::vector<ParallelPair> norm_of(const BoundQuiver& bq, const ParallelPair& p);

CyclicPairData classify_cyclic(const BoundQuiver& bq, const ParallelPair& p);

/// Number of t-orbits among the given gentle pairs, i.e. dim kG_n / Im(1 - t).
std::size_t orbit_count(const BoundQuiver& bq, std::span<const CyclicPairData> gentle_pairs);

/*
 * phi(alpha rho', alpha gamma') = (rho' beta, gamma' beta) on (1,0)^+, where beta
 * is the unique arrow with gamma beta not in I. Throws HypothesisError when the
 * image is not a pair of the expected class.
 */
ParallelPair phi(const BoundQuiver& bq, const BasisPathSet& P, const ParallelPair& p);

enum class GammaRange { Any, Trivial, Arrow, Long, Nontrivial };

struct ClassifiedPair {
    ParallelPair pair;
    PairClass cls;
};

/*
 * Every combinatorial set the dimension formulas refer to, for one degree.
 * For n = 0 the tag is meaningless and only decorations are filled in.
 */
class DegreeCensus {
public:
    DegreeCensus(const BoundQuiver& bq, const BasisPathSet& P, std::size_t n);

    std::size_t degree() const { return n_; }
    const std::vector<ClassifiedPair>& pairs() const { return pairs_; }
    /// Pairs with trivial gamma, with their cyclic data (n >= 1).
    const std::vector<CyclicPairData>& cyclic() const { return cyclic_; }

    std::size_t count(std::optional<PairTag> tag, std::optional<Decoration> left,
                      std::optional<Decoration> right, GammaRange range) const;

    std::size_t complete() const;
    std::size_t incomplete() const;
    std::size_t gentle() const;
    std::size_t non_gentle() const;
    std::size_t empty() const;
    std::size_t non_empty() const;
    std::size_t gentle_orbits() const { return gentle_orbits_; }
    std::vector<CyclicPairData> gentle_pairs() const;

private:
    std::size_t n_;
    std::vector<ClassifiedPair> pairs_;
    std::vector<CyclicPairData> cyclic_;
    std::size_t gentle_orbits_ = 0;
};

}  // namespace quiverhh

#endif
