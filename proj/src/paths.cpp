#include "quiverhh/paths.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace quiverhh {

std::span<const Path> BasisPathSet::between(VertexId s, VertexId t) const {
    auto it = by_endpoints_.find({s, t});
    if (it == by_endpoints_.end()) return {};
    return it->second;
}

BasisPathSet enumerate_basis_paths(const BoundQuiver& bq) {
    BasisPathSet out;
    const std::size_t limit = bq.arrow_count();
    std::vector<Path> found;
    for (std::uint32_t v = 0; v < bq.vertex_count(); ++v) found.push_back(Path::trivial(VertexId{v}));

    std::vector<Path> frontier;
    for (const auto& a : bq.arrows()) frontier.push_back(Path::from_arrow(a));
    while (!frontier.empty()) {
        std::vector<Path> next;
        for (auto& p : frontier) {
            if (p.length() > limit)
                throw HypothesisError("relation-avoiding path " + bq.describe(p) +
                                      " is longer than the arrow count; the algebra is infinite dimensional");
            for (ArrowId b : bq.outgoing(p.target())) {
                if (bq.is_relation(p.last(), b)) continue;
                next.push_back(*compose(p, Path::from_arrow(bq.arrow(b))));
            }
            found.push_back(std::move(p));
        }
        frontier = std::move(next);
    }
    std::sort(found.begin(), found.end());
    out.paths_ = std::move(found);
    for (std::size_t i = 0; i < out.paths_.size(); ++i) {
        const auto& p = out.paths_[i];
        out.index_.emplace(p, i);
        out.by_endpoints_[{p.source(), p.target()}].push_back(p);
    }
    return out;
}

APSet enumerate_ap(const BoundQuiver& bq, std::size_t n) {
    APSet out{n, {}};
    if (n == 0) {
        for (std::uint32_t v = 0; v < bq.vertex_count(); ++v) out.elements.push_back(Path::trivial(VertexId{v}));
        return out;
    }
    std::vector<Path> current;
    for (const auto& a : bq.arrows()) current.push_back(Path::from_arrow(a));
    for (std::size_t len = 1; len < n; ++len) {
        std::vector<Path> next;
        for (const auto& p : current)
            for (ArrowId b : bq.outgoing(p.target()))
                if (bq.is_relation(p.last(), b)) next.push_back(*compose(p, Path::from_arrow(bq.arrow(b))));
        current = std::move(next);
    }
    std::sort(current.begin(), current.end());
    out.elements = std::move(current);
    return out;
}

std::string describe(const BoundQuiver& bq, const ParallelPair& p) {
    return "(" + bq.describe(p.rho) + ", " + bq.describe(p.gamma) + ")";
}

std::vector<ParallelPair> parallel_pairs(const APSet& X, const BasisPathSet& P, std::size_t min_gamma_length) {
    std::vector<ParallelPair> out;
    for (const auto& rho : X.elements)
        for (const auto& gamma : P.between(rho.source(), rho.target()))
            if (gamma.length() >= min_gamma_length) out.push_back({rho, gamma});
    std::sort(out.begin(), out.end());
    return out;
}

const char* to_string(PairTag t) {
    switch (t) {
        case PairTag::ZZ: return "(0,0)";
        case PairTag::OZ: return "(1,0)";
        case PairTag::ZO: return "(0,1)";
        case PairTag::OO: return "(1,1)";
    }
    return "?";
}

Decoration left_decoration(const BoundQuiver& bq, const Path& gamma) {
    for (ArrowId b : bq.incoming(gamma.source())) {
        // b * e_r = b is never in I; b * gamma is in I iff its junction is a relation.
        if (gamma.is_trivial() || !bq.is_relation(b, gamma.first())) return Decoration::Plus;
    }
    return Decoration::Minus;
}

Decoration right_decoration(const BoundQuiver& bq, const Path& gamma) {
    for (ArrowId b : bq.outgoing(gamma.target())) {
        if (gamma.is_trivial() || !bq.is_relation(gamma.last(), b)) return Decoration::Plus;
    }
    return Decoration::Minus;
}

PairClass classify_pair(const BoundQuiver& bq, const ParallelPair& p) {
    if (p.rho.is_trivial()) throw std::invalid_argument("classify_pair requires a pair of degree >= 1");
    bool begins = !p.gamma.is_trivial() && p.gamma.first() == p.rho.first();
    bool ends = !p.gamma.is_trivial() && p.gamma.last() == p.rho.last();
    PairTag tag = begins ? (ends ? PairTag::OO : PairTag::OZ) : (ends ? PairTag::ZO : PairTag::ZZ);
    return {tag, left_decoration(bq, p.gamma), right_decoration(bq, p.gamma)};
}

bool is_complete(const BoundQuiver& bq, const ParallelPair& p) {
    if (p.rho.is_trivial() || !p.gamma.is_trivial()) return false;
    return bq.is_relation(p.rho.last(), p.rho.first());
}

bool in_c0(const BoundQuiver& bq, const ParallelPair& p) {
    if (!is_complete(bq, p)) return false;
    ArrowId first = p.rho.first();
    ArrowId last = p.rho.last();
    for (ArrowId g : bq.incoming(p.rho.source()))
        if (g != last && bq.is_relation(g, first)) return false;
    for (ArrowId b : bq.outgoing(p.rho.target()))
        if (b != first && bq.is_relation(last, b)) return false;
    return true;
}

ParallelPair rotate(const BoundQuiver& bq, const ParallelPair& p) {
    if (!is_complete(bq, p)) throw std::logic_error("rotation is only defined on complete pairs");
    std::vector<ArrowId> arrows;
    arrows.reserve(p.rho.length());
    arrows.push_back(p.rho.last());
    arrows.insert(arrows.end(), p.rho.arrows().begin(), p.rho.arrows().end() - 1);
    VertexId v = bq.arrow(p.rho.last()).source;
    return {Path::unchecked(v, v, std::move(arrows)), Path::trivial(v)};
}

CyclicPairData rotate(const BoundQuiver& bq, const CyclicPairData& c) {
    return classify_cyclic(bq, rotate(bq, c.pair));
}

std::vector<ParallelPair> orbit(const BoundQuiver& bq, const ParallelPair& p) {
    std::vector<ParallelPair> out{p};
    for (ParallelPair q = rotate(bq, p); q != p; q = rotate(bq, q)) out.push_back(q);
    return out;
}

std::size_t order_of(const BoundQuiver& bq, const ParallelPair& p) { return orbit(bq, p).size(); }

std::vector<ParallelPair> norm_of(const BoundQuiver& bq, const ParallelPair& p) { return orbit(bq, p); }

CyclicPairData classify_cyclic(const BoundQuiver& bq, const ParallelPair& p) {
    if (p.rho.is_trivial() || !p.gamma.is_trivial() || p.rho.source() != p.rho.target())
        throw std::invalid_argument("classify_cyclic requires a pair (rho, e_r) with |rho| >= 1");
    CyclicPairData c;
    c.pair = p;
    c.complete = is_complete(bq, p);
    if (c.complete) {
        auto orb = orbit(bq, p);
        c.order = orb.size();
        c.in_c0 = in_c0(bq, p);
        c.gentle = std::all_of(orb.begin(), orb.end(), [&](const auto& q) { return in_c0(bq, q); });
    } else {
        VertexId r = p.rho.source();
        c.empty = true;
        for (ArrowId b : bq.incoming(r))
            for (ArrowId g : bq.outgoing(r))
                if (bq.is_relation(b, g)) c.empty = false;
    }
    return c;
}

std::size_t orbit_count(const BoundQuiver& bq, std::span<const CyclicPairData> gentle_pairs) {
    std::set<ParallelPair> seen;
    std::size_t orbits = 0;
    for (const auto& c : gentle_pairs) {
        if (seen.contains(c.pair)) continue;
        ++orbits;
        for (auto& q : orbit(bq, c.pair)) seen.insert(std::move(q));
    }
    return orbits;
}

ParallelPair phi(const BoundQuiver& bq, const BasisPathSet& P, const ParallelPair& p) {
    auto cls = classify_pair(bq, p);
    if (cls.tag != PairTag::OZ || cls.right != Decoration::Plus)
        throw std::invalid_argument("phi is defined on (1,0)^+ pairs only: " + describe(bq, p));
    std::optional<ArrowId> beta;
    for (ArrowId b : bq.outgoing(p.gamma.target())) {
        if (bq.is_relation(p.gamma.last(), b)) continue;
        if (beta) throw HypothesisError("two free continuations of " + bq.describe(p.gamma) + " (S2 fails)");
        beta = b;
    }
    if (!beta) throw HypothesisError("no free continuation of " + bq.describe(p.gamma));
    const std::size_t n = p.rho.length();
    Path rho_hat = bq.subpath(p.rho, 1, n);
    Path gamma_hat = bq.subpath(p.gamma, 1, p.gamma.length());
    Path b = Path::from_arrow(bq.arrow(*beta));
    ParallelPair image{*compose(rho_hat, b), *compose(gamma_hat, b)};
    if (!bq.is_relation_chain(image.rho))
        throw HypothesisError("phi image " + describe(bq, image) + " leaves AP_" + std::to_string(n));
    if (!P.contains(image.gamma))
        throw HypothesisError("phi image " + describe(bq, image) + " leaves the path basis");
    auto image_cls = classify_pair(bq, image);
    if (image_cls.tag != PairTag::ZO || image_cls.left != Decoration::Plus)
        throw HypothesisError("phi image " + describe(bq, image) + " is not in +(0,1)");
    return image;
}

// ---------------------------------------------------------------------------

DegreeCensus::DegreeCensus(const BoundQuiver& bq, const BasisPathSet& P, std::size_t n) : n_(n) {
    for (auto& pair : parallel_pairs(enumerate_ap(bq, n), P)) {
        PairClass cls{PairTag::ZZ, left_decoration(bq, pair.gamma), right_decoration(bq, pair.gamma)};
        if (n >= 1) cls = classify_pair(bq, pair);
        if (n >= 1 && pair.gamma.is_trivial()) cyclic_.push_back(classify_cyclic(bq, pair));
        pairs_.push_back({std::move(pair), cls});
    }
    auto g = gentle_pairs();
    gentle_orbits_ = orbit_count(bq, g);
}

namespace {

bool in_range(const Path& gamma, GammaRange range) {
    switch (range) {
        case GammaRange::Any: return true;
        case GammaRange::Trivial: return gamma.is_trivial();
        case GammaRange::Arrow: return gamma.length() == 1;
        case GammaRange::Long: return gamma.length() >= 2;
        case GammaRange::Nontrivial: return gamma.length() >= 1;
    }
    return false;
}

}  // namespace

std::size_t DegreeCensus::count(std::optional<PairTag> tag, std::optional<Decoration> left,
                                std::optional<Decoration> right, GammaRange range) const {
    return static_cast<std::size_t>(std::count_if(pairs_.begin(), pairs_.end(), [&](const ClassifiedPair& c) {
        return (!tag || c.cls.tag == *tag) && (!left || c.cls.left == *left) &&
               (!right || c.cls.right == *right) && in_range(c.pair.gamma, range);
    }));
}

std::size_t DegreeCensus::complete() const {
    return static_cast<std::size_t>(std::count_if(cyclic_.begin(), cyclic_.end(), [](auto& c) { return c.complete; }));
}
std::size_t DegreeCensus::incomplete() const { return cyclic_.size() - complete(); }
std::size_t DegreeCensus::gentle() const {
    return static_cast<std::size_t>(std::count_if(cyclic_.begin(), cyclic_.end(), [](auto& c) { return c.gentle; }));
}
std::size_t DegreeCensus::non_gentle() const { return complete() - gentle(); }
std::size_t DegreeCensus::empty() const {
    return static_cast<std::size_t>(std::count_if(cyclic_.begin(), cyclic_.end(), [](auto& c) { return c.empty; }));
}
std::size_t DegreeCensus::non_empty() const { return incomplete() - empty(); }

std::vector<CyclicPairData> DegreeCensus::gentle_pairs() const {
    std::vector<CyclicPairData> out;
    for (const auto& c : cyclic_)
        if (c.gentle) out.push_back(c);
    return out;
}

}  // namespace quiverhh
