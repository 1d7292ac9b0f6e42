#include "quiverhh/closed_form.hpp"

#include <stdexcept>

namespace quiverhh {

long DimensionReport::total() const {
    long t = 0;
    for (const auto& s : breakdown) t += s.value;
    return t;
}

std::string DimensionReport::describe() const {
    std::string out = "HH^" + std::to_string(degree) + " = " + std::to_string(dim) + " [" + char_case + "]:";
    for (const auto& s : breakdown) out += " " + s.name + "=" + std::to_string(s.value);
    return out;
}

namespace {

using enum Decoration;
constexpr auto Any = GammaRange::Any;

struct Setup {
    BasisPathSet paths;
};

Setup prepare(const BoundQuiver& bq) {
    require_string_algebra(bq);
    return {enumerate_basis_paths(bq)};
}

const char* char_case(const Field& field) { return field.characteristic() == 2 ? "char 2" : "char != 2"; }

DimensionReport finish(std::size_t n, std::vector<Summand> parts, const Field& field) {
    DimensionReport r;
    r.degree = n;
    r.breakdown = std::move(parts);
    r.char_case = char_case(field);
    long t = r.total();
    if (t < 0) throw std::logic_error("dimension formula evaluated to a negative number: " + r.describe());
    r.dim = static_cast<std::size_t>(t);
    return r;
}

std::size_t minus_zz_minus(const DegreeCensus& c) { return c.count(PairTag::ZZ, Minus, Minus, Any); }

std::vector<Summand> orbit_terms(const BoundQuiver& bq, const BasisPathSet& P, std::size_t n, const Field& field,
                                 const DegreeCensus& at_n) {
    auto [a, b] = orbit_coefficients(n, field);
    std::vector<Summand> out;
    if (a) out.push_back({"orbits(G_" + std::to_string(n) + ")", static_cast<long>(at_n.gentle_orbits())});
    if (b) {
        DegreeCensus prev(bq, P, n - 1);
        out.push_back({"orbits(G_" + std::to_string(n - 1) + ")", static_cast<long>(prev.gentle_orbits())});
    }
    return out;
}

}  // namespace

std::pair<int, int> orbit_coefficients(std::size_t n, const Field& field) {
    if (field.characteristic() == 2) return {1, 1};
    return n % 2 == 0 ? std::pair{1, 0} : std::pair{0, 1};
}

std::size_t arrow_term(const DegreeCensus& c) {
    return c.count(PairTag::OZ, std::nullopt, std::nullopt, GammaRange::Arrow) +
           c.count(PairTag::ZO, Minus, std::nullopt, GammaRange::Arrow);
}

DimensionReport hh0_dim(const BoundQuiver& bq, const Field& field) {
    auto s = prepare(bq);
    DegreeCensus c0(bq, s.paths, 0);
    return finish(0,
                  {{"|-(Q0//P_1)-|", static_cast<long>(c0.count(std::nullopt, Minus, Minus, GammaRange::Nontrivial))},
                   {"1", 1}},
                  field);
}

DimensionReport hh1_dim(const BoundQuiver& bq, const Field& field) {
    auto s = prepare(bq);
    DegreeCensus c1(bq, s.paths, 1);
    std::vector<Summand> parts{{"|-(0,0)_1-|", static_cast<long>(minus_zz_minus(c1))},
                               {"|Q1|", static_cast<long>(bq.arrow_count())},
                               {"-|Q0|", -static_cast<long>(bq.vertex_count())},
                               {"1", 1}};
    if (field.characteristic() == 2) parts.push_back({"|G_1|", static_cast<long>(c1.gentle())});
    return finish(1, std::move(parts), field);
}

DimensionReport hhn_dim(const BoundQuiver& bq, std::size_t n, const Field& field) {
    if (n < 2) throw std::invalid_argument("hhn_dim requires n >= 2");
    auto s = prepare(bq);
    DegreeCensus cn(bq, s.paths, n);
    DegreeCensus prev(bq, s.paths, n - 1);
    std::vector<Summand> parts{
        {"|-(0,0)_n-|", static_cast<long>(minus_zz_minus(cn))},
        {"|E_n|", static_cast<long>(cn.empty())},
        {"-|nE_{n-1}|", -static_cast<long>(prev.non_empty())},
        {"|((1,0)_n + -(0,1)_n) cap (AP_n//Q1)|", static_cast<long>(arrow_term(cn))},
    };
    for (auto& t : orbit_terms(bq, s.paths, n, field, cn)) parts.push_back(std::move(t));
    return finish(n, std::move(parts), field);
}

DimensionReport hhn_dim_gentle(const BoundQuiver& bq, std::size_t n, const Field& field) {
    if (n < 2) throw std::invalid_argument("hhn_dim_gentle requires n >= 2");
    auto s = prepare(bq);
    auto report = validate_gentle(bq);
    if (!report.ok()) throw HypothesisError("hhn_dim_gentle requires a gentle algebra: " + report.violations.front().witness);
    DegreeCensus cn(bq, s.paths, n);
    std::vector<Summand> parts{
        {"|-(0,0)_n-|", static_cast<long>(minus_zz_minus(cn))},
        {"|E_n|", static_cast<long>(cn.empty())},
    };
    for (auto& t : orbit_terms(bq, s.paths, n, field, cn)) parts.push_back(std::move(t));
    return finish(n, std::move(parts), field);
}

DimensionReport hh_dim_formula(const BoundQuiver& bq, std::size_t n, const Field& field) {
    if (n == 0) return hh0_dim(bq, field);
    if (n == 1) return hh1_dim(bq, field);
    return hhn_dim(bq, n, field);
}

BlockCounts block_counts(const DegreeCensus& at_n, const DegreeCensus& at_next, const Field& field) {
    if (at_n.degree() == 0) throw std::invalid_argument("block_counts requires n >= 1");
    using enum PairTag;
    constexpr auto NT = GammaRange::Nontrivial;
    constexpr auto Long = GammaRange::Long;
    const auto none = std::nullopt;
    BlockCounts b;
    b.ker_f1 = at_n.count(ZZ, Minus, Minus, NT) + at_n.count(ZO, Minus, none, NT) + at_n.count(OO, none, none, NT) +
               at_n.count(OZ, none, none, NT);
    b.im_f1 = at_next.count(ZO, Minus, none, Long) + at_next.count(OZ, none, none, Long) +
              at_next.count(OO, none, none, Long);
    const bool orbit_in_kernel = at_n.degree() % 2 == 0 || field.characteristic() == 2;
    const std::size_t orbits = orbit_in_kernel ? at_n.gentle_orbits() : 0;
    b.ker_f0 = at_n.empty() + orbits;
    b.im_f0 = at_n.complete() + at_n.non_empty() - orbits;
    return b;
}

}  // namespace quiverhh
