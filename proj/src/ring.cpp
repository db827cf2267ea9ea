#include "odot/ring.hpp"

namespace odot {

Ring Ring::prime_field(long p) {
    if (p < 2)
        throw error("prime_field: " + std::to_string(p) + " is not prime");
    mpz_class zp(p);
    if (mpz_probab_prime_p(zp.get_mpz_t(), 40) == 0)
        throw error("prime_field: " + std::to_string(p) + " is not prime");
    return Ring(Kind::Fp, p);
}

Ring Ring::parse(const std::string& text) {
    if (text == "Z") return integers();
    if (text == "Q") return rationals();
    if (text.rfind("Fp:", 0) == 0) {
        const std::string tail = text.substr(3);
        if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
            throw error("coeff: bad prime in '" + text + "'");
        return prime_field(std::stol(tail));
    }
    throw error("coeff: expected Z, Q or Fp:<prime>, got '" + text + "'");
}

std::string Ring::name() const {
    switch (kind_) {
        case Kind::Z: return "Z";
        case Kind::Q: return "Q";
        default: return "Fp:" + std::to_string(p_);
    }
}

Scalar Ring::canon(const Scalar& s) const {
    switch (kind_) {
        case Kind::Q:
            return s;
        case Kind::Z:
            if (s.get_den() != 1) throw error("scalar: non-integral value over Z");
            return s;
        default: {
            if (s.get_den() != 1) throw error("scalar: non-integral value over Fp");
            mpz_class r = s.get_num() % p_;
            if (r < 0) r += p_;
            return Scalar(r);
        }
    }
}

bool Ring::is_unit(const Scalar& a) const {
    if (a == 0) return false;
    if (kind_ == Kind::Z) return a == 1 || a == -1;
    return true;
}

Scalar Ring::inv(const Scalar& a) const {
    switch (kind_) {
        case Kind::Z:
            if (a == 1 || a == -1) return a;
            throw error("inv: " + str(a) + " is not a unit in Z");
        case Kind::Q:
            if (a == 0) throw error("inv: zero");
            return Scalar(1) / a;
        default: {
            Scalar c = canon(a);
            if (c == 0) throw error("inv: zero in Fp");
            mpz_class r, zp(p_);
            if (mpz_invert(r.get_mpz_t(), c.get_num().get_mpz_t(), zp.get_mpz_t()) == 0)
                throw error("inv: no inverse mod p");
            return Scalar(r);
        }
    }
}

bool Ring::divides(const Scalar& a, const Scalar& b) const {
    if (kind_ != Kind::Z) return a != 0 || b == 0;
    if (a == 0) return b == 0;
    return mpz_divisible_p(b.get_num().get_mpz_t(), a.get_num().get_mpz_t()) != 0;
}

Scalar Ring::exact_div(const Scalar& b, const Scalar& a) const {
    if (!divides(a, b)) throw error("exact_div: " + str(a) + " does not divide " + str(b));
    if (b == 0) return Scalar(0);
    return canon(b / a);
}

std::string Ring::str(const Scalar& s) const { return s.get_str(); }

void ext_gcd(const mpz_class& a, const mpz_class& b, mpz_class& g, mpz_class& s, mpz_class& t) {
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

}  // namespace odot
