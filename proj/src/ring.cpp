#include "ccshell/ring.hpp"

#include "ccshell/error.hpp"

#include <cctype>

namespace ccs {

Ring Ring::integers() { return Ring(Kind::Integers, 0); }

Ring Ring::rationals() { return Ring(Kind::Rationals, 0); }

Ring Ring::prime_field(const mpz_class& p)
{
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
        throw Error(ErrorKind::InvalidRing, "modulus " + p.get_str() + " is not prime");
    return Ring(Kind::PrimeField, p);
}

Ring Ring::parse(std::string_view text)
{
    if (text == "Z")
        return integers();
    if (text == "Q")
        return rationals();
    if (text.substr(0, 3) == "Fp:") {
        std::string digits(text.substr(3));
        bool ok = !digits.empty();
        for (char c : digits)
            ok = ok && std::isdigit(static_cast<unsigned char>(c));
        if (ok)
            return prime_field(mpz_class(digits));
    }
    throw Error(ErrorKind::InvalidRing, "unknown ring '" + std::string(text) + "' (expected Z, Q or Fp:<p>)");
}

std::string Ring::name() const
{
    switch (kind_) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::PrimeField: return "Fp:" + p_.get_str();
    }
    return "?";
}

Scalar Ring::reduce(const Scalar& x) const
{
    switch (kind_) {
    case Kind::Rationals:
        return x;
    case Kind::Integers:
        if (x.get_den() != 1)
            throw Error(ErrorKind::InvalidScalar, to_string(x) + " is not an integer");
        return x;
    case Kind::PrimeField: {
        mpz_class num = x.get_num() % p_;
        if (num < 0)
            num += p_;
        if (x.get_den() == 1)
            return Scalar(num);
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), x.get_den().get_mpz_t(), p_.get_mpz_t()) == 0)
            throw Error(ErrorKind::InvalidScalar, to_string(x) + " has no image modulo " + p_.get_str());
        mpz_class r = (num * inv) % p_;
        return Scalar(r);
    }
    }
    return x;
}

bool Ring::is_unit(const Scalar& x) const
{
    if (kind_ == Kind::Integers)
        return x == 1 || x == -1;
    return x != 0;
}

Scalar Ring::inverse(const Scalar& x) const
{
    if (!is_unit(x))
        throw Error(ErrorKind::InvalidScalar, to_string(x) + " is not a unit in " + name());
    switch (kind_) {
    case Kind::Integers:
        return x;
    case Kind::Rationals:
        return 1 / x;
    case Kind::PrimeField: {
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), x.get_num().get_mpz_t(), p_.get_mpz_t());
        return Scalar(inv);
    }
    }
    return x;
}

std::string to_string(const Scalar& x)
{
    if (x.get_den() == 1)
        return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(const mpz_class& x) { return x.get_str(); }

namespace {

bool is_integer_text(std::string_view s)
{
    if (!s.empty() && (s[0] == '-' || s[0] == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

mpz_class integer_from(std::string_view s)
{
    if (!s.empty() && s[0] == '+')
        s.remove_prefix(1);
    return mpz_class(std::string(s));
}

}  // namespace

Scalar parse_scalar(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer_text(text))
            throw Error(ErrorKind::InvalidScalar, "'" + std::string(text) + "' is not a number");
        return Scalar(integer_from(text));
    }
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+')
        throw Error(ErrorKind::InvalidScalar, "'" + std::string(text) + "' is not a number");
    mpz_class d = integer_from(den);
    if (d == 0)
        throw Error(ErrorKind::InvalidScalar, "zero denominator in '" + std::string(text) + "'");
    Scalar q(integer_from(num), d);
    q.canonicalize();
    return q;
}

}  // namespace ccs
