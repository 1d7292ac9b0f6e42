#ifndef QUIVERHH_QUIVER_HPP
#define QUIVERHH_QUIVER_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quiverhh {

struct VertexId {
    std::uint32_t value = 0;
    auto operator<=>(const VertexId&) const = default;
};

struct ArrowId {
    std::uint32_t value = 0;
    auto operator<=>(const ArrowId&) const = default;
};

struct Arrow {
    ArrowId id;
    VertexId source;
    VertexId target;
    std::string label;
};

/// Thrown when a quiver is structurally malformed (bad ids, non-composable relations, ...).
class QuiverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when an operation's algebraic hypothesis does not hold (not gentle, wrong characteristic, ...).
class HypothesisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/*
 * A path in the quiver: either the trivial path at a vertex or a nonempty
 * sequence of composable arrows. Source and target are cached so a path can be
 * compared and concatenated without consulting the quiver.
 *
 * Ordering is the canonical one used throughout the library: by length, then
 * trivial paths by vertex, then nontrivial paths lexicographically by arrow id.
 */
class Path {
public:
    Path() = default;

    static Path trivial(VertexId v) { return Path(v, v, {}); }
    static Path from_arrow(const Arrow& a) { return Path(a.source, a.target, {a.id}); }
    /// Unchecked constructor; callers guarantee the arrows compose from `source` to `target`.
    static Path unchecked(VertexId source, VertexId target, std::vector<ArrowId> arrows) {
        return Path(source, target, std::move(arrows));
    }

    VertexId source() const { return source_; }
    VertexId target() const { return target_; }
    std::size_t length() const { return arrows_.size(); }
    bool is_trivial() const { return arrows_.empty(); }
    const std::vector<ArrowId>& arrows() const { return arrows_; }
    ArrowId first() const { return arrows_.front(); }
    ArrowId last() const { return arrows_.back(); }
    ArrowId operator[](std::size_t i) const { return arrows_[i]; }

    std::strong_ordering operator<=>(const Path& other) const;
    bool operator==(const Path& other) const = default;

private:
    Path(VertexId s, VertexId t, std::vector<ArrowId> arrows)
        : source_(s), target_(t), arrows_(std::move(arrows)) {}

    VertexId source_;
    VertexId target_;
    std::vector<ArrowId> arrows_;
};

/// Concatenation in the path algebra kQ; absent when t(p) != s(q).
std::optional<Path> compose(const Path& p, const Path& q);

/*
 * Finite quiver with a set of quadratic monomial relations. Vertices and arrows
 * are dense ids 0..n-1 in declaration order. Immutable once built.
 */
class BoundQuiver {
public:
    class Builder;

    std::size_t vertex_count() const { return vertex_labels_.size(); }
    std::size_t arrow_count() const { return arrows_.size(); }

    const std::string& vertex_label(VertexId v) const { return vertex_labels_.at(v.value); }
    const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }
    const Arrow& arrow(ArrowId a) const { return arrows_.at(a.value); }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    /// Relations as ordered (first, second) arrow pairs, sorted by id.
    const std::vector<std::pair<ArrowId, ArrowId>>& relations() const { return relations_; }

    /// True when the length-2 path `a b` lies in the relation set.
    bool is_relation(ArrowId a, ArrowId b) const {
        return relation_table_[a.value * arrows_.size() + b.value];
    }

    const std::vector<ArrowId>& outgoing(VertexId v) const { return outgoing_.at(v.value); }
    const std::vector<ArrowId>& incoming(VertexId v) const { return incoming_.at(v.value); }

    std::optional<VertexId> find_vertex(const std::string& label) const;
    std::optional<ArrowId> find_arrow(const std::string& label) const;

    /// Whether the path avoids every relation, i.e. is a basis element of kQ/I.
    bool avoids_relations(const Path& p) const;
    /// Whether every consecutive arrow pair of the path is a relation.
    bool is_relation_chain(const Path& p) const;

    /// Builds a path from arrow labels; throws QuiverError if they do not compose.
    Path path(const std::vector<std::string>& labels) const;
    Path trivial(const std::string& vertex_label) const;

    /// Arrows [begin, end) of `p`; an empty range yields the trivial path at the cut point.
    Path subpath(const Path& p, std::size_t begin, std::size_t end) const;

    std::string describe(const Path& p) const;

private:
    BoundQuiver() = default;

    std::vector<std::string> vertex_labels_;
    std::vector<Arrow> arrows_;
    std::vector<std::pair<ArrowId, ArrowId>> relations_;
    std::vector<bool> relation_table_;
    std::vector<std::vector<ArrowId>> outgoing_;
    std::vector<std::vector<ArrowId>> incoming_;
};

class BoundQuiver::Builder {
public:
    VertexId add_vertex(std::string label);
    ArrowId add_arrow(std::string label, VertexId source, VertexId target);
    ArrowId add_arrow(std::string label, const std::string& source, const std::string& target);
    /// Duplicate relations are ignored; non-composable pairs throw QuiverError.
    void add_relation(ArrowId first, ArrowId second);
    void add_relation(const std::string& first, const std::string& second);

    BoundQuiver build() const;

    std::optional<VertexId> vertex_by_label(const std::string& label) const;
    std::optional<ArrowId> arrow_by_label(const std::string& label) const;

private:

    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::vector<std::pair<ArrowId, ArrowId>> relations_;
};

enum class Condition { S1, S2, G1, Connected, FiniteDimensional };

const char* to_string(Condition c);

struct Violation {
    Condition condition;
    std::string witness;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

/// Conditions S1 and S2: at most two arrows in/out per vertex, at most one relation-free continuation per arrow.
ValidationReport validate_string(const BoundQuiver& bq);
/// Condition G1: at most one relation continuation on each side of every arrow.
ValidationReport validate_gentle(const BoundQuiver& bq);
/// Undirected connectivity of the underlying graph.
ValidationReport validate_connected(const BoundQuiver& bq);

/*
 * Empty when kQ/I is finite dimensional; otherwise a relation-avoiding cycle
 * whose powers never meet a relation. A relation-avoiding path with |Q1|+1
 * arrows repeats an arrow, so searching to that depth is complete.
 */
std::optional<Path> check_finite_dimensional(const BoundQuiver& bq);

/// Full hypothesis check used by the cohomology pipeline: string, connected, finite dimensional.
ValidationReport validate_string_algebra(const BoundQuiver& bq);

bool is_gentle(const BoundQuiver& bq);

/// Throws HypothesisError listing the violations unless `validate_string_algebra` passes.
void require_string_algebra(const BoundQuiver& bq);

}  // namespace quiverhh

#endif
