#ifndef QUIVERHH_GERSTENHABER_HPP
#define QUIVERHH_GERSTENHABER_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "quiverhh/cochain.hpp"

namespace quiverhh {

/*
 * Chain-level products on parallel-pair cochains. All of them are bilinear
 * extensions of basis-pair formulas; a substitution leaving AP or a product
 * meeting a relation contributes zero.
 */

/// (rho, gamma) u (rho', gamma') = (rho rho', gamma gamma').
Cochain cup(const BoundQuiver& bq, const Cochain& f, const Cochain& g, const Field& field);

/*
 * f o_i g for 1 <= i <= deg f. For deg f >= 2 the cases are: gamma' trivial
 * gives 0; gamma' an arrow equal to alpha_i substitutes rho' at position i;
 * |gamma'| >= 2 only acts at i = 1 (last arrow of gamma' equal to alpha_1) and
 * i = n (first arrow equal to alpha_n). For deg f = 1 every occurrence
 * gamma' = x alpha y of the arrow alpha = rho contributes (rho', x gamma y).
 */
Cochain circ_i(const BoundQuiver& bq, const Cochain& f, const Cochain& g, std::size_t i, const Field& field);
/// sum_i (-1)^{(i-1)(m-1)} f o_i g; requires deg f + deg g >= 1.
Cochain circ(const BoundQuiver& bq, const Cochain& f, const Cochain& g, const Field& field);
/// f o g - (-1)^{(n-1)(m-1)} g o f; requires deg f + deg g >= 1.
Cochain bracket(const BoundQuiver& bq, const Cochain& f, const Cochain& g, const Field& field);

/// A cochain together with the canonical representative of its class, when it is a cocycle.
struct GradedElement {
    Cochain cochain;
    std::optional<Cochain> class_rep;

    static GradedElement of(const CochainComplex& cx, Cochain c);
    std::size_t degree() const { return cochain.degree(); }
};

/// Class of f u g; throws NotCocycleError when f or g is not a cocycle.
Cochain cup_class(const CochainComplex& cx, const Cochain& f, const Cochain& g);
Cochain bracket_class(const CochainComplex& cx, const Cochain& f, const Cochain& g);

/// ((alpha_1...alpha_n)^s, e) for a gentle pair; throws std::invalid_argument otherwise.
ParallelPair omega_power(const BoundQuiver& bq, const ParallelPair& omega, std::size_t s);
/// ((alpha_1...alpha_n)^s alpha_1, alpha_1), checked to be a cocycle.
Cochain psi(const CochainComplex& cx, const ParallelPair& omega, std::size_t s);
/// N(omega^s); checked to be a cocycle whenever sn is even or the characteristic is 2.
Cochain norm_cochain(const CochainComplex& cx, const ParallelPair& omega, std::size_t s);

enum class WitnessKind { Cup, Bracket };
const char* to_string(WitnessKind k);

struct Witness {
    WitnessKind kind = WitnessKind::Cup;
    ParallelPair omega;
    std::size_t n = 0;  // |omega|
    std::size_t k = 0;  // order of omega
    std::size_t s1 = 0, s2 = 0;
    Cochain left, right;  // N(omega^s) for cup, psi(omega^s) for bracket
    Cochain product;      // computed at chain level
    Cochain expected;     // coefficient * N(omega^{s1+s2}) or psi(omega^{s1+s2})
    Scalar coefficient;   // 1 for cup, (n/k)(s1 - s2) for bracket
    bool identity_holds = false;
    bool factors_nonzero = false;  // both inputs are cocycles with nonzero class
    bool class_nonzero = false;    // the product class is nonzero

    bool verified() const { return identity_holds && factors_nonzero && class_nonzero; }
    std::string describe(const BoundQuiver& bq) const;
};

/// Re-runs every check recorded in a witness from scratch.
Witness verify_witness(const CochainComplex& cx, WitnessKind kind, const ParallelPair& omega, std::size_t s1,
                       std::size_t s2);

/*
 * Scans G_n for n <= max_degree and builds the nonvanishing product from the
 * first gentle pair found: s1 = s2 = 1, or s1 = s2 = 2 when n is odd and the
 * characteristic is not 2.
 */
std::optional<Witness> find_cup_witness(const CochainComplex& cx, std::size_t max_degree);
/// Gentle algebras in characteristic 0 only (HypothesisError otherwise); s1 = 1, s2 = 2, doubled when n is odd.
std::optional<Witness> find_bracket_witness(const CochainComplex& cx, std::size_t max_degree);

}  // namespace quiverhh

#endif
