#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ccs {

// All ring elements are carried as GMP rationals. Over the integers and
// over Z/p they always have denominator one; over Z/p they are kept in the
// canonical range [0, p).
using Scalar = mpq_class;

class Ring {
public:
    enum class Kind { Integers, Rationals, PrimeField };

    static Ring integers();
    static Ring rationals();
    /// Throws InvalidRing unless p is prime.
    static Ring prime_field(const mpz_class& p);
    /// Accepts "Z", "Q" and "Fp:<p>".
    static Ring parse(std::string_view text);

    Kind kind() const { return kind_; }
    const mpz_class& characteristic() const { return p_; }
    bool is_field() const { return kind_ != Kind::Integers; }
    std::string name() const;

    /// Maps a rational into the ring. Throws InvalidScalar when the value has
    /// no image (a proper fraction over Z, or a denominator divisible by p).
    Scalar reduce(const Scalar& x) const;
    bool is_unit(const Scalar& x) const;
    /// Inverse of a unit.
    Scalar inverse(const Scalar& x) const;

    Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
    Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
    Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
    Scalar neg(const Scalar& a) const { return reduce(-a); }

    bool operator==(const Ring& other) const { return kind_ == other.kind_ && p_ == other.p_; }

private:
    Ring(Kind kind, mpz_class p) : kind_(kind), p_(std::move(p)) {}

    Kind kind_;
    mpz_class p_;
};

std::string to_string(const Scalar& x);
std::string to_string(const mpz_class& x);
/// Parses "12", "-3" or "5/7". Throws InvalidScalar on anything else.
Scalar parse_scalar(std::string_view text);

}  // namespace ccs
