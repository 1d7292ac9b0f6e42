#include "quiverhh/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace quiverhh {

std::strong_ordering Path::operator<=>(const Path& other) const {
    if (auto c = length() <=> other.length(); c != 0) return c;
    if (is_trivial()) return source_ <=> other.source_;
    return arrows_ <=> other.arrows_;
}

std::optional<Path> compose(const Path& p, const Path& q) {
    if (p.target() != q.source()) return std::nullopt;
    if (p.is_trivial()) return q;
    if (q.is_trivial()) return p;
    std::vector<ArrowId> arrows = p.arrows();
    arrows.insert(arrows.end(), q.arrows().begin(), q.arrows().end());
    return Path::unchecked(p.source(), q.target(), std::move(arrows));
}

// ---------------------------------------------------------------------------

std::optional<VertexId> BoundQuiver::find_vertex(const std::string& label) const {
    auto it = std::find(vertex_labels_.begin(), vertex_labels_.end(), label);
    if (it == vertex_labels_.end()) return std::nullopt;
    return VertexId{static_cast<std::uint32_t>(it - vertex_labels_.begin())};
}

std::optional<ArrowId> BoundQuiver::find_arrow(const std::string& label) const {
    for (const auto& a : arrows_)
        if (a.label == label) return a.id;
    return std::nullopt;
}

bool BoundQuiver::avoids_relations(const Path& p) const {
    for (std::size_t i = 1; i < p.length(); ++i)
        if (is_relation(p[i - 1], p[i])) return false;
    return true;
}

bool BoundQuiver::is_relation_chain(const Path& p) const {
    for (std::size_t i = 1; i < p.length(); ++i)
        if (!is_relation(p[i - 1], p[i])) return false;
    return true;
}

Path BoundQuiver::path(const std::vector<std::string>& labels) const {
    if (labels.empty()) throw QuiverError("a nontrivial path needs at least one arrow");
    std::vector<ArrowId> ids;
    for (const auto& l : labels) {
        auto a = find_arrow(l);
        if (!a) throw QuiverError("unknown arrow '" + l + "'");
        if (!ids.empty() && arrow(ids.back()).target != arrow(*a).source)
            throw QuiverError("arrows do not compose at '" + l + "'");
        ids.push_back(*a);
    }
    VertexId s = arrow(ids.front()).source;
    VertexId t = arrow(ids.back()).target;
    return Path::unchecked(s, t, std::move(ids));
}

Path BoundQuiver::trivial(const std::string& vertex_label) const {
    auto v = find_vertex(vertex_label);
    if (!v) throw QuiverError("unknown vertex '" + vertex_label + "'");
    return Path::trivial(*v);
}

Path BoundQuiver::subpath(const Path& p, std::size_t begin, std::size_t end) const {
    if (begin > end || end > p.length()) throw QuiverError("subpath range out of bounds");
    if (begin == end) {
        if (p.is_trivial()) return p;
        VertexId v = begin < p.length() ? arrow(p[begin]).source : p.target();
        return Path::trivial(v);
    }
    std::vector<ArrowId> ids(p.arrows().begin() + static_cast<std::ptrdiff_t>(begin),
                             p.arrows().begin() + static_cast<std::ptrdiff_t>(end));
    VertexId s = arrow(ids.front()).source;
    VertexId t = arrow(ids.back()).target;
    return Path::unchecked(s, t, std::move(ids));
}

std::string BoundQuiver::describe(const Path& p) const {
    if (p.is_trivial()) return "e_" + vertex_label(p.source());
    std::string out;
    for (std::size_t i = 0; i < p.length(); ++i) {
        const auto& l = arrow(p[i]).label;
        // Multi-character labels are separated so the word stays readable.
        if (i > 0 && (l.size() > 1 || arrow(p[i - 1]).label.size() > 1)) out += '.';
        out += l;
    }
    return out;
}

// ---------------------------------------------------------------------------

VertexId BoundQuiver::Builder::add_vertex(std::string label) {
    if (label.empty()) throw QuiverError("empty vertex label");
    if (vertex_by_label(label)) throw QuiverError("duplicate vertex '" + label + "'");
    vertices_.push_back(std::move(label));
    return VertexId{static_cast<std::uint32_t>(vertices_.size() - 1)};
}

ArrowId BoundQuiver::Builder::add_arrow(std::string label, VertexId source, VertexId target) {
    if (label.empty()) throw QuiverError("empty arrow label");
    if (arrow_by_label(label)) throw QuiverError("duplicate arrow '" + label + "'");
    if (source.value >= vertices_.size() || target.value >= vertices_.size())
        throw QuiverError("arrow '" + label + "' references a missing vertex");
    ArrowId id{static_cast<std::uint32_t>(arrows_.size())};
    arrows_.push_back(Arrow{id, source, target, std::move(label)});
    return id;
}

ArrowId BoundQuiver::Builder::add_arrow(std::string label, const std::string& source,
                                         const std::string& target) {
    auto s = vertex_by_label(source);
    if (!s) throw QuiverError("unknown vertex '" + source + "'");
    auto t = vertex_by_label(target);
    if (!t) throw QuiverError("unknown vertex '" + target + "'");
    return add_arrow(std::move(label), *s, *t);
}

void BoundQuiver::Builder::add_relation(ArrowId first, ArrowId second) {
    if (first.value >= arrows_.size() || second.value >= arrows_.size())
        throw QuiverError("relation references a missing arrow");
    const auto& a = arrows_[first.value];
    const auto& b = arrows_[second.value];
    if (a.target != b.source)
        throw QuiverError("relation '" + a.label + " " + b.label + "' is not a composable path");
    std::pair rel{first, second};
    if (std::find(relations_.begin(), relations_.end(), rel) == relations_.end())
        relations_.push_back(rel);
}

void BoundQuiver::Builder::add_relation(const std::string& first, const std::string& second) {
    auto a = arrow_by_label(first);
    if (!a) throw QuiverError("unknown arrow '" + first + "'");
    auto b = arrow_by_label(second);
    if (!b) throw QuiverError("unknown arrow '" + second + "'");
    add_relation(*a, *b);
}

std::optional<VertexId> BoundQuiver::Builder::vertex_by_label(const std::string& label) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), label);
    if (it == vertices_.end()) return std::nullopt;
    return VertexId{static_cast<std::uint32_t>(it - vertices_.begin())};
}

std::optional<ArrowId> BoundQuiver::Builder::arrow_by_label(const std::string& label) const {
    for (const auto& a : arrows_)
        if (a.label == label) return a.id;
    return std::nullopt;
}

BoundQuiver BoundQuiver::Builder::build() const {
    BoundQuiver q;
    q.vertex_labels_ = vertices_;
    q.arrows_ = arrows_;
    q.relations_ = relations_;
    std::sort(q.relations_.begin(), q.relations_.end());
    const std::size_t na = arrows_.size();
    q.relation_table_.assign(na * na, false);
    for (auto [a, b] : q.relations_) q.relation_table_[a.value * na + b.value] = true;
    q.outgoing_.resize(vertices_.size());
    q.incoming_.resize(vertices_.size());
    for (const auto& a : arrows_) {
        q.outgoing_[a.source.value].push_back(a.id);
        q.incoming_[a.target.value].push_back(a.id);
    }
    return q;
}

// ---------------------------------------------------------------------------

const char* to_string(Condition c) {
    switch (c) {
        case Condition::S1: return "S1";
        case Condition::S2: return "S2";
        case Condition::G1: return "G1";
        case Condition::Connected: return "connected";
        case Condition::FiniteDimensional: return "finite-dimensional";
    }
    return "?";
}

namespace {

std::string join_labels(const BoundQuiver& bq, const std::vector<ArrowId>& ids) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out += ", ";
        out += bq.arrow(ids[i]).label;
    }
    return out;
}

}  // namespace

ValidationReport validate_string(const BoundQuiver& bq) {
    ValidationReport report;
    for (std::uint32_t v = 0; v < bq.vertex_count(); ++v) {
        const auto& out = bq.outgoing(VertexId{v});
        const auto& in = bq.incoming(VertexId{v});
        if (out.size() > 2)
            report.violations.push_back({Condition::S1, "vertex " + bq.vertex_label(VertexId{v}) +
                                                            " is the source of " + join_labels(bq, out)});
        if (in.size() > 2)
            report.violations.push_back({Condition::S1, "vertex " + bq.vertex_label(VertexId{v}) +
                                                            " is the target of " + join_labels(bq, in)});
    }
    for (const auto& a : bq.arrows()) {
        std::vector<ArrowId> free_after, free_before;
        for (ArrowId b : bq.outgoing(a.target))
            if (!bq.is_relation(a.id, b)) free_after.push_back(b);
        for (ArrowId c : bq.incoming(a.source))
            if (!bq.is_relation(c, a.id)) free_before.push_back(c);
        if (free_after.size() > 1)
            report.violations.push_back(
                {Condition::S2, "arrow " + a.label + " continues freely with " + join_labels(bq, free_after)});
        if (free_before.size() > 1)
            report.violations.push_back(
                {Condition::S2, "arrow " + a.label + " is preceded freely by " + join_labels(bq, free_before)});
    }
    return report;
}

ValidationReport validate_gentle(const BoundQuiver& bq) {
    ValidationReport report;
    for (const auto& a : bq.arrows()) {
        std::vector<ArrowId> rel_after, rel_before;
        for (ArrowId b : bq.outgoing(a.target))
            if (bq.is_relation(a.id, b)) rel_after.push_back(b);
        for (ArrowId c : bq.incoming(a.source))
            if (bq.is_relation(c, a.id)) rel_before.push_back(c);
        if (rel_after.size() > 1)
            report.violations.push_back(
                {Condition::G1, "arrow " + a.label + " is followed in relations by " + join_labels(bq, rel_after)});
        if (rel_before.size() > 1)
            report.violations.push_back(
                {Condition::G1, "arrow " + a.label + " is preceded in relations by " + join_labels(bq, rel_before)});
    }
    return report;
}

ValidationReport validate_connected(const BoundQuiver& bq) {
    ValidationReport report;
    const std::size_t n = bq.vertex_count();
    if (n == 0) {
        report.violations.push_back({Condition::Connected, "quiver has no vertices"});
        return report;
    }
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& a : bq.arrows()) parent[find(a.source.value)] = find(a.target.value);
    for (std::uint32_t v = 1; v < n; ++v)
        if (find(v) != find(0)) {
            report.violations.push_back({Condition::Connected, "vertex " + bq.vertex_label(VertexId{v}) +
                                                                   " is not connected to " +
                                                                   bq.vertex_label(VertexId{0})});
        }
    return report;
}

std::optional<Path> check_finite_dimensional(const BoundQuiver& bq) {
    const std::size_t depth = bq.arrow_count() + 1;
    std::vector<ArrowId> stack;
    std::optional<Path> witness;

    // Depth-first search over relation-avoiding paths; the first path reaching
    // `depth` arrows must repeat an arrow, and the segment between repeats is
    // a cycle whose closing junction is also relation-free.
    auto dfs = [&](auto&& self) -> bool {
        if (stack.size() == depth) {
            for (std::size_t j = 1; j < stack.size(); ++j)
                for (std::size_t i = 0; i < j; ++i)
                    if (stack[i] == stack[j]) {
                        std::vector<ArrowId> cyc(stack.begin() + static_cast<std::ptrdiff_t>(i),
                                                 stack.begin() + static_cast<std::ptrdiff_t>(j));
                        VertexId s = bq.arrow(cyc.front()).source;
                        witness = Path::unchecked(s, s, std::move(cyc));
                        return true;
                    }
            return false;
        }
        VertexId at = bq.arrow(stack.back()).target;
        for (ArrowId b : bq.outgoing(at)) {
            if (bq.is_relation(stack.back(), b)) continue;
            stack.push_back(b);
            if (self(self)) return true;
            stack.pop_back();
        }
        return false;
    };
    for (const auto& a : bq.arrows()) {
        stack.assign(1, a.id);
        if (dfs(dfs)) return witness;
    }
    return std::nullopt;
}

ValidationReport validate_string_algebra(const BoundQuiver& bq) {
    ValidationReport report = validate_string(bq);
    auto conn = validate_connected(bq);
    report.violations.insert(report.violations.end(), conn.violations.begin(), conn.violations.end());
    if (auto cycle = check_finite_dimensional(bq))
        report.violations.push_back(
            {Condition::FiniteDimensional, "cycle " + bq.describe(*cycle) + " never meets a relation"});
    return report;
}

bool is_gentle(const BoundQuiver& bq) {
    return validate_string(bq).ok() && validate_gentle(bq).ok();
}

void require_string_algebra(const BoundQuiver& bq) {
    auto report = validate_string_algebra(bq);
    if (report.ok()) return;
    std::ostringstream msg;
    msg << "not a connected finite-dimensional string algebra:";
    for (const auto& v : report.violations) msg << " [" << to_string(v.condition) << "] " << v.witness << ";";
    throw HypothesisError(msg.str());
}

}  // namespace quiverhh
