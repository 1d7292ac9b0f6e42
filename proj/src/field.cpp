#include "quiverhh/field.hpp"

#include <stdexcept>

namespace quiverhh {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field::Field(std::uint32_t characteristic) : p_(characteristic) {
    if (p_ != 0 && !is_prime(p_))
        throw std::invalid_argument("characteristic " + std::to_string(p_) + " is not 0 or a prime");
}

std::string Field::name() const {
    return p_ == 0 ? std::string("Q") : "GF(" + std::to_string(p_) + ")";
}

Scalar Field::from_int(long v) const { return canonical(Scalar(v)); }

Scalar Field::canonical(const Scalar& v) const {
    if (p_ == 0) {
        Scalar r = v;
        r.canonicalize();
        return r;
    }
    mpz_class p = p_;
    mpz_class num = v.get_num() % p;
    if (num < 0) num += p;
    mpz_class den = v.get_den() % p;
    if (den == 0) throw std::domain_error("denominator divisible by the characteristic");
    mpz_class den_inv;
    mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    mpz_class r = (num * den_inv) % p;
    return Scalar(r);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    if (p_ == 0) return a + b;
    mpz_class r = a.get_num() + b.get_num();
    if (r >= p_) r -= p_;
    return Scalar(r);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    if (p_ == 0) return a - b;
    mpz_class r = a.get_num() - b.get_num();
    if (r < 0) r += p_;
    return Scalar(r);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    if (p_ == 0) return a * b;
    mpz_class r = (a.get_num() * b.get_num()) % p_;
    return Scalar(r);
}

Scalar Field::neg(const Scalar& a) const {
    if (p_ == 0) return -a;
    if (a == 0) return a;
    return Scalar(mpz_class(p_) - a.get_num());
}

Scalar Field::inv(const Scalar& a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    if (p_ == 0) return 1 / a;
    mpz_class r;
    mpz_class p = p_;
    mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), p.get_mpz_t());
    return Scalar(r);
}

std::string to_string(const Scalar& s) { return s.get_str(); }

}  // namespace quiverhh
