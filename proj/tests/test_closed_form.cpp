#include "doctest.h"

#include "fixtures.hpp"
#include "quiverhh/closed_form.hpp"
#include "quiverhh/cochain.hpp"
#include "quiverhh/corpus.hpp"

using namespace quiverhh;

TEST_CASE("formula agrees with the oracle on the corpus") {
    std::size_t mismatches = 0;
    for (std::uint32_t p : {0u, 2u, 3u}) {
        Field k(p);
        for (std::size_t q = 0; q < standard_corpus().size(); ++q) {
            const auto& bq = standard_corpus()[q];
            CochainComplex cx(bq, k);
            for (std::size_t n = 0; n <= 5; ++n) {
                auto r = hh_dim_formula(bq, n, k);
                if (r.dim != cx.hh_dim(n)) {
                    ++mismatches;
                    MESSAGE("quiver " << q << " char " << p << ": oracle " << cx.hh_dim(n) << " vs " << r.describe());
                }
            }
        }
    }
    CHECK(mismatches == 0);
}
