#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace odot {

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// All scalar values, over every supported ring, are stored as reduced
// rationals.  Invariant per ring: Z and F_p entries have denominator 1,
// F_p entries lie in [0, p).
using Scalar = mpq_class;

// Exact coefficient ring: the integers, the rationals, or a prime field.
class Ring {
public:
    enum class Kind { Z, Q, Fp };

    static Ring integers() { return Ring(Kind::Z, 0); }
    static Ring rationals() { return Ring(Kind::Q, 0); }
    static Ring prime_field(long p);
    // accepts "Z", "Q", "Fp:<prime>"
    static Ring parse(const std::string& text);

    Kind kind() const { return kind_; }
    long characteristic() const { return p_; }
    bool is_field() const { return kind_ != Kind::Z; }
    std::string name() const;

    bool operator==(const Ring& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Ring& o) const { return !(*this == o); }

    // Reduces a raw rational to the canonical representative.
    Scalar canon(const Scalar& s) const;
    Scalar add(const Scalar& a, const Scalar& b) const { return canon(a + b); }
    Scalar sub(const Scalar& a, const Scalar& b) const { return canon(a - b); }
    Scalar mul(const Scalar& a, const Scalar& b) const { return canon(a * b); }
    Scalar neg(const Scalar& a) const { return canon(-a); }

    bool is_zero(const Scalar& a) const { return a == 0; }
    bool is_unit(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;
    // divisibility in the ring; over a field every nonzero element divides
    bool divides(const Scalar& a, const Scalar& b) const;
    Scalar exact_div(const Scalar& b, const Scalar& a) const;

    std::string str(const Scalar& s) const;

private:
    Ring(Kind k, long p) : kind_(k), p_(p) {}
    Kind kind_;
    long p_;
};

// g = s*a + t*b with g = gcd(a,b) >= 0; integer arithmetic
void ext_gcd(const mpz_class& a, const mpz_class& b, mpz_class& g, mpz_class& s, mpz_class& t);

}  // namespace odot
