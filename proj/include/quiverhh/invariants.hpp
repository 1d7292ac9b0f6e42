#ifndef QUIVERHH_INVARIANTS_HPP
#define QUIVERHH_INVARIANTS_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "quiverhh/cochain.hpp"

namespace quiverhh {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;  // individual comparisons made
    std::string detail;     // first failure, if any

    void record(bool ok, const std::string& what);
};

struct SuiteOptions {
    std::size_t max_degree = 5;       // degrees 0..max_degree for dimension and lemma checks
    std::size_t product_degree = 3;   // factor degrees for the product identities
    std::size_t random_pairs = 10;    // random cochain pairs per product identity
    std::size_t random_kernel = 5;    // random kernel elements for the coboundary criterion
    std::uint64_t seed = 1;
};

/*
 * Each check runs against one complex. The set-counting checks use the
 * closed-form module; everything else compares linear-algebra facts computed
 * from the complex with each other.
 */
CheckResult check_partition(const CochainComplex& cx, const SuiteOptions& o);
CheckResult check_complex_property(const CochainComplex& cx, const SuiteOptions& o);
CheckResult check_block_consistency(const CochainComplex& cx, const SuiteOptions& o);
CheckResult check_formula_vs_oracle(const CochainComplex& cx, const SuiteOptions& o);
CheckResult check_gentle_formula(const CochainComplex& cx, const SuiteOptions& o);
CheckResult check_block_propositions(const CochainComplex& cx, const SuiteOptions& o);
CheckResult check_g3_injectivity(const CochainComplex& cx, const SuiteOptions& o);
CheckResult check_norm_exactness(const CochainComplex& cx, const SuiteOptions& o);
CheckResult check_rotation(const CochainComplex& cx, const SuiteOptions& o);
CheckResult check_phi_bijection(const CochainComplex& cx, const SuiteOptions& o);
CheckResult check_coboundary_criterion(const CochainComplex& cx, const SuiteOptions& o);
CheckResult check_derivation_identity(const CochainComplex& cx, const SuiteOptions& o);
CheckResult check_bracket_compatibility(const CochainComplex& cx, const SuiteOptions& o);
CheckResult check_graded_commutativity(const CochainComplex& cx, const SuiteOptions& o);
CheckResult check_well_definedness(const CochainComplex& cx, const SuiteOptions& o);
CheckResult check_orbit_orthogonality(const CochainComplex& cx, const SuiteOptions& o);
CheckResult check_cup_vanishing(const CochainComplex& cx, const SuiteOptions& o);
CheckResult check_bracket_vanishing(const CochainComplex& cx, const SuiteOptions& o);
CheckResult check_jacobi(const CochainComplex& cx, const SuiteOptions& o);

/// Every check above, in declaration order.
std::vector<CheckResult> run_invariants(const CochainComplex& cx, const SuiteOptions& o = {});

/// Random combinations used by the product checks.
Cochain random_cochain(const CochainComplex& cx, std::size_t n, std::mt19937_64& rng, std::size_t terms = 3);
Cochain random_cocycle(const CochainComplex& cx, std::size_t n, std::mt19937_64& rng);

}  // namespace quiverhh

#endif
