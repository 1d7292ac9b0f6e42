// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "quiverhh/closed_form.hpp"
#include "quiverhh/corpus.hpp"
#include "quiverhh/gerstenhaber.hpp"
#include "quiverhh/invariants.hpp"

using namespace quiverhh;

namespace {

using Dims = std::vector<std::size_t>;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

std::string join(const Dims& d) {
    std::string s;
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s;
}

Dims oracle_dims(const BoundQuiver& bq, const Field& f, std::size_t top) {
    CochainComplex cx(bq, f);
    Dims d;
    for (std::size_t n = 0; n <= top; ++n) d.push_back(cx.hh_dim(n));
    return d;
}

Dims formula_dims(const BoundQuiver& bq, const Field& f, std::size_t top) {
    Dims d;
    for (std::size_t n = 0; n <= top; ++n) d.push_back(hh_dim_formula(bq, n, f).dim);
    return d;
}

// Oracle and formula both have to equal the stated table.
void expect_dims(Outcome& out, const char* name, const BoundQuiver& bq, std::uint32_t p, const Dims& want,
                 std::string& summary) {
    Field f(p);
    Dims o = oracle_dims(bq, f, want.size() - 1), c = formula_dims(bq, f, want.size() - 1);
    summary += std::string(summary.empty() ? "" : "; ") + f.name() + " " + join(o);
    out.require(o == c, std::string(name) + " over " + f.name() + ": oracle " + join(o) + " != formula " + join(c));
    out.require(o == want, std::string(name) + " over " + f.name() + ": computed " + join(o) + ", expected " + join(want));
}

void time_limit(Outcome& out, double seconds, double limit) {
    out.require(seconds < limit, "took " + std::to_string(seconds) + " s, limit " + std::to_string(limit) + " s");
}

ParallelPair at_vertex(const BoundQuiver& bq, std::vector<std::string> rho) {
    auto r = bq.path(rho);
    return {r, Path::trivial(r.source())};
}

// ---------------------------------------------------------------------------

Outcome loop_dims(std::string& summary) {
    Outcome out;
    auto bq = fixtures::loop();
    expect_dims(out, "loop", bq, 0, Dims{2, 1, 1, 1, 1, 1, 1, 1, 1}, summary);
    expect_dims(out, "loop", bq, 2, Dims(9, 2), summary);
    return out;
}

Outcome two_cycle_dims(std::string& summary) {
    Outcome out;
    auto bq = fixtures::two_cycle();
    expect_dims(out, "2-cycle", bq, 0, Dims(9, 1), summary);
    expect_dims(out, "2-cycle", bq, 2, Dims{1, 2, 2, 2, 2, 2, 2, 2, 2}, summary);
    return out;
}

Outcome a3_dims(std::string& summary) {
    Outcome out;
    auto bq = fixtures::a3();
    for (std::uint32_t p : {0u, 2u, 3u}) expect_dims(out, "A3", bq, p, Dims{1, 0, 0, 0, 0, 0}, summary);
    return out;
}

Outcome corpus_equivalence(std::string& summary) {
    Outcome out;
    const auto& corpus = standard_corpus();
    out.require(corpus.size() >= 50, "corpus has only " + std::to_string(corpus.size()) + " quivers");
    std::size_t compared = 0;
    for (std::size_t q = 0; q < corpus.size(); ++q) {
        const auto& bq = corpus[q];
        out.require(bq.vertex_count() <= 5 && bq.arrow_count() <= 8, "corpus quiver " + std::to_string(q) + " too large");
        for (std::uint32_t p : {0u, 2u, 3u}) {
            Field f(p);
            Dims o = oracle_dims(bq, f, 5), c = formula_dims(bq, f, 5);
            compared += o.size();
            out.require(o == c, "corpus quiver " + std::to_string(q) + " over " + f.name() + ": oracle " + join(o) +
                                    " != formula " + join(c));
        }
    }
    summary = std::to_string(corpus.size()) + " quivers, " + std::to_string(compared) + " (quiver, char, degree) cases";
    return out;
}

using Check = CheckResult (*)(const CochainComplex&, const SuiteOptions&);

// Runs the given checks over the corpus in chars 0, 2, 3 and sums their case counts.
Outcome corpus_suites(const std::vector<std::pair<const char*, Check>>& checks, const SuiteOptions& o,
                      std::vector<std::size_t>& cases) {
    Outcome out;
    cases.assign(checks.size(), 0);
    const auto& corpus = standard_corpus();
    for (std::size_t q = 0; q < corpus.size(); ++q)
        for (std::uint32_t p : {0u, 2u, 3u}) {
            CochainComplex cx(corpus[q], Field(p));
            for (std::size_t i = 0; i < checks.size(); ++i) {
                auto r = checks[i].second(cx, o);
                cases[i] += r.cases;
                out.require(r.passed, std::string(checks[i].first) + " on corpus quiver " + std::to_string(q) +
                                          " over " + cx.field().name() + ": " + r.detail);
            }
        }
    return out;
}

std::string case_summary(const std::vector<std::pair<const char*, Check>>& checks, const std::vector<std::size_t>& cases) {
    std::string s;
    for (std::size_t i = 0; i < checks.size(); ++i)
        s += std::string(i ? ", " : "") + checks[i].first + " " + std::to_string(cases[i]);
    return s;
}

Outcome lemma_suites(std::string& summary) {
    std::vector<std::pair<const char*, Check>> checks{
        {"F o F = 0", check_complex_property},
        {"N / 1-t exactness", check_norm_exactness},
        {"G3 injectivity", check_g3_injectivity},
        {"Ker/Im block counts", check_block_propositions},
        {"coboundary criterion", check_coboundary_criterion},
    };
    SuiteOptions o;
    o.max_degree = 5;
    o.random_kernel = 2;
    std::vector<std::size_t> cases;
    Outcome out = corpus_suites(checks, o, cases);
    out.require(cases[4] >= 100, "only " + std::to_string(cases[4]) + " random kernel elements tested");
    summary = case_summary(checks, cases);
    return out;
}

Outcome gerstenhaber_identities(std::string& summary) {
    std::vector<std::pair<const char*, Check>> checks{
        {"derivation", check_derivation_identity},
        {"bracket compatibility", check_bracket_compatibility},
        {"graded commutativity", check_graded_commutativity},
        {"well-definedness", check_well_definedness},
    };
    SuiteOptions o;
    o.product_degree = 3;
    o.random_pairs = 2;
    std::vector<std::size_t> cases;
    Outcome out = corpus_suites(checks, o, cases);
    for (std::size_t i = 0; i < 3; ++i)
        out.require(cases[i] >= 200, std::string(checks[i].first) + ": only " + std::to_string(cases[i]) + " pairs");
    summary = case_summary(checks, cases);
    return out;
}

Outcome norm_cup_products(std::string& summary) {
    Outcome out;
    auto bq = fixtures::two_cycle();
    std::size_t products = 0, classes = 0;
    for (std::uint32_t p : {0u, 2u}) {
        CochainComplex cx(bq, Field(p));
        const auto& k = cx.field();
        auto omega = at_vertex(bq, {"a", "b"});
        for (std::size_t s1 = 1; s1 <= 3; ++s1)
            for (std::size_t s2 = 1; s2 <= 3; ++s2) {
                Cochain prod = cup(bq, norm_cochain(cx, omega, s1), norm_cochain(cx, omega, s2), k);
                out.require(prod == norm_cochain(cx, omega, s1 + s2),
                            "N(w^" + std::to_string(s1) + ") u N(w^" + std::to_string(s2) + ") over " + k.name());
                ++products;
            }
        for (std::size_t s = 1; 2 * s <= 12; ++s) {
            Cochain c = norm_cochain(cx, omega, s);
            out.require(cx.is_cocycle(c) && !cx.is_zero_class(c),
                        "class of N(w^" + std::to_string(s) + ") vanishes over " + k.name());
            ++classes;
        }
        for (std::size_t s1 = 1; s1 <= 3; ++s1)
            for (std::size_t s2 = 1; s1 + s2 <= 6; ++s2) {
                auto w = verify_witness(cx, WitnessKind::Cup, omega, s1, s2);
                out.require(w.verified(), "cup witness (" + std::to_string(s1) + "," + std::to_string(s2) +
                                              ") over " + k.name() + " not verified");
            }
    }
    summary = std::to_string(products) + " chain products, " + std::to_string(classes) +
              " nonzero classes in degrees 2..12 over Q and GF(2)";
    return out;
}

Outcome psi_brackets(std::string& summary) {
    Outcome out;
    auto bq = fixtures::two_cycle();
    CochainComplex cx(bq, Field(0));
    const auto& k = cx.field();
    auto omega = at_vertex(bq, {"a", "b"});
    for (auto [s1, s2] : {std::pair<std::size_t, std::size_t>{1, 2}, {2, 1}, {1, 3}}) {
        std::string tag = "(" + std::to_string(s1) + "," + std::to_string(s2) + ")";
        Cochain got = bracket(bq, psi(cx, omega, s1), psi(cx, omega, s2), k);
        Scalar coeff = k.from_int(static_cast<long>(s1) - static_cast<long>(s2));
        out.require(got == psi(cx, omega, s1 + s2).scaled(coeff, k), tag + ": bracket is " + describe(bq, got));
        out.require(got.degree() == 2 * (s1 + s2) + 1, tag + ": wrong degree");
        out.require(cx.is_cocycle(got) && !cx.is_zero_class(got), tag + ": class vanishes");
        auto w = verify_witness(cx, WitnessKind::Bracket, omega, s1, s2);
        out.require(w.verified(), tag + ": witness record not verified");
    }
    for (std::size_t s = 1; s <= 3; ++s) {
        Cochain diag = bracket(bq, psi(cx, omega, s), psi(cx, omega, s), k);
        out.require(cx.is_cocycle(diag) && cx.is_zero_class(diag), "diagonal s = " + std::to_string(s) + " is nonzero");
    }
    summary = "(1,2) -> -psi(w^3), (2,1) -> psi(w^3), (1,3) -> -2 psi(w^4); diagonals s = 1..3 vanish";
    return out;
}

bool g_free(const BoundQuiver& bq, std::size_t top) {
    auto P = enumerate_basis_paths(bq);
    for (std::size_t n = 1; n <= top; ++n)
        if (DegreeCensus(bq, P, n).gentle() != 0) return false;
    return true;
}

Outcome negative_controls(std::string& summary) {
    Outcome out;
    const std::size_t top = 5;
    std::size_t members = 0, gentle_members = 0;
    for (const auto& bq : standard_corpus()) {
        if (members == 20) break;
        if (!g_free(bq, top)) continue;
        ++members;
        gentle_members += is_gentle(bq);
        for (std::uint32_t p : {0u, 2u, 3u}) {
            CochainComplex cx(bq, Field(p));
            out.require(!find_cup_witness(cx, top).has_value(), "false cup witness");
            if (p == 0 && is_gentle(bq)) out.require(!find_bracket_witness(cx, top).has_value(), "false bracket witness");
            SuiteOptions o;
            o.max_degree = top;
            auto c = check_cup_vanishing(cx, o);
            out.require(c.passed, "cup vanishing over " + cx.field().name() + ": " + c.detail);
            auto b = check_bracket_vanishing(cx, o);
            out.require(b.passed, "bracket vanishing over " + cx.field().name() + ": " + b.detail);
        }
    }
    out.require(members == 20, "only " + std::to_string(members) + " G-free corpus members");

    // the parity forms across the whole corpus, including members with gentle pairs
    for (const auto& bq : standard_corpus())
        for (std::uint32_t p : {0u, 3u}) {
            CochainComplex cx(bq, Field(p));
            SuiteOptions o;
            o.max_degree = 4;
            auto c = check_cup_vanishing(cx, o);
            out.require(c.passed, "odd cup vanishing over " + cx.field().name() + ": " + c.detail);
            auto b = check_bracket_vanishing(cx, o);
            out.require(b.passed, "gentle bracket vanishing over " + cx.field().name() + ": " + b.detail);
        }

    auto a3 = fixtures::a3();
    for (std::uint32_t p : {0u, 2u, 3u}) {
        CochainComplex cx(a3, Field(p));
        for (std::size_t n = 1; n <= 5; ++n) out.require(cx.hh_dim(n) == 0, "A3 has nonzero HH^" + std::to_string(n));
        out.require(!find_cup_witness(cx, 6).has_value(), "A3 cup witness");
        for (std::size_t n = 1; n <= 3; ++n)
            for (std::size_t m = 1; m <= 3; ++m)
                for (const auto& row : cx.cocycles(n).rows())
                    for (const auto& col : cx.cocycles(m).rows()) {
                        Cochain f = cx.from_vector(n, row), g = cx.from_vector(m, col);
                        out.require(cup_class(cx, f, g).is_zero(), "A3 cup class nonzero");
                        out.require(bracket_class(cx, f, g).is_zero(), "A3 bracket class nonzero");
                    }
    }
    summary = std::to_string(members) + " G-free members (" + std::to_string(gentle_members) + " gentle), A3 in Q, GF(2), GF(3)";
    return out;
}

struct Criterion {
    int id;
    const char* title;
    double limit;  // seconds; 0 when the criterion states none
    std::function<Outcome(std::string&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "loop algebra dimensions", 1.0, loop_dims},
        {2, "2-cycle dimensions", 1.0, two_cycle_dims},
        {3, "A3 dimensions", 0.0, a3_dims},
        {4, "closed form = oracle on the random corpus", 60.0, corpus_equivalence},
        {5, "complex, exactness, injectivity, block and coboundary suites", 0.0, lemma_suites},
        {6, "cup/bracket identities on random cochains", 0.0, gerstenhaber_identities},
        {7, "cup products of norm classes on the 2-cycle", 5.0, norm_cup_products},
        {8, "brackets of psi classes on the 2-cycle", 10.0, psi_brackets},
        {9, "negative controls", 0.0, negative_controls},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        std::string summary;
        auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run(summary);
        } catch (const std::exception& e) {
            out.require(false, std::string("exception: ") + e.what());
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit > 0) time_limit(out, seconds, c.limit);
        failures += !out.pass;
        std::printf("criterion %d %s: %s (%.3f s)\n", c.id, out.pass ? "PASS" : "FAIL", c.title, seconds);
        if (!summary.empty()) std::printf("    %s\n", summary.c_str());
        if (!out.pass) std::printf("    failure: %s\n", out.detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
