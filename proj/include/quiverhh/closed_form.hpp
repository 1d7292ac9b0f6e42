#ifndef QUIVERHH_CLOSED_FORM_HPP
#define QUIVERHH_CLOSED_FORM_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "quiverhh/field.hpp"
#include "quiverhh/paths.hpp"
#include "quiverhh/quiver.hpp"

namespace quiverhh {

struct Summand {
    std::string name;
    long value;  // signed contribution to the total
};

struct DimensionReport {
    std::size_t degree = 0;
    std::size_t dim = 0;
    std::vector<Summand> breakdown;
    std::string char_case;  // "char != 2" or "char 2"

    long total() const;
    std::string describe() const;
};

/*
 * Counting formulas for dim HH^n of a quadratic string algebra. All inputs
 * must be connected, finite-dimensional string algebras (HypothesisError
 * otherwise); nothing here does linear algebra.
 */
DimensionReport hh0_dim(const BoundQuiver& bq, const Field& field);
DimensionReport hh1_dim(const BoundQuiver& bq, const Field& field);
/// n >= 2.
DimensionReport hhn_dim(const BoundQuiver& bq, std::size_t n, const Field& field);
/// n >= 2; throws HypothesisError on non-gentle input.
DimensionReport hhn_dim_gentle(const BoundQuiver& bq, std::size_t n, const Field& field);
/// Dispatches on n.
DimensionReport hh_dim_formula(const BoundQuiver& bq, std::size_t n, const Field& field);

/// Orbit coefficients (a, b) on orbits(G_n) and orbits(G_{n-1}).
std::pair<int, int> orbit_coefficients(std::size_t n, const Field& field);

/*
 * Predicted kernel and image dimensions of the blocks of F_{n+1}, n >= 1,
 * from set sizes alone. `at_n` and `at_next` are the censuses of degrees n
 * and n + 1.
 */
struct BlockCounts {
    std::size_t ker_f0 = 0, im_f0 = 0;
    std::size_t ker_f1 = 0, im_f1 = 0;
};
BlockCounts block_counts(const DegreeCensus& at_n, const DegreeCensus& at_next, const Field& field);

/// |((1,0)_n + -(0,1)_n) cap (AP_n//Q1)|, the term the gentle form drops.
std::size_t arrow_term(const DegreeCensus& at_n);

}  // namespace quiverhh

#endif
