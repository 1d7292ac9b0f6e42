#ifndef QUIVERHH_FIELD_HPP
#define QUIVERHH_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace quiverhh {

/*
 * Scalars are exact rationals. In characteristic p > 0 a scalar is kept as
 * its least nonnegative residue (an integer in [0, p)), so the same value type
 * serves every field and equality is plain equality of canonical forms.
 */
using Scalar = mpq_class;

/// The coefficient field: Q when characteristic is 0, GF(p) otherwise.
class Field {
public:
    /// Throws std::invalid_argument unless `characteristic` is 0 or a prime.
    explicit Field(std::uint32_t characteristic = 0);

    static Field rationals() { return Field(0); }

    std::uint32_t characteristic() const { return p_; }
    bool is_rational() const { return p_ == 0; }

    Scalar zero() const { return Scalar(0); }
    Scalar one() const { return Scalar(1); }
    Scalar from_int(long v) const;
    /// Canonical form of an arbitrary rational (reduced mod p in positive characteristic).
    Scalar canonical(const Scalar& v) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    /// Throws std::domain_error on zero.
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
    /// (-1)^k as a field element.
    Scalar sign(long k) const { return (k % 2 == 0) ? one() : from_int(-1); }

    bool operator==(const Field&) const = default;

    std::string name() const;

private:
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

std::string to_string(const Scalar& s);

}  // namespace quiverhh

#endif
