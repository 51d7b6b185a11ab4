#pragma once

// Exact scalar arithmetic over the ground field: Q (arbitrary-precision
// rationals) or F_p (residues mod a prime).  Every scalar in the library is a
// Rat; the Field object decides how arithmetic reduces.  No floating point.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace corings {

using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

namespace detail {

inline bool miller_rabin_witness(std::uint64_t n, std::uint64_t a) {
    if (a % n == 0) return false;
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    auto mulmod = [n](std::uint64_t x, std::uint64_t y) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y) % n);
    };
    std::uint64_t x = 1, base = a % n;
    std::uint64_t e = d;
    while (e) {
        if (e & 1) x = mulmod(x, base);
        base = mulmod(base, base);
        e >>= 1;
    }
    if (x == 1 || x == n - 1) return false;
    for (int i = 0; i < r - 1; ++i) {
        x = mulmod(x, x);
        if (x == n - 1) return false;
    }
    return true;
}

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // deterministic for 64-bit inputs with these bases
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (miller_rabin_witness(n, a)) return false;
    return true;
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    // extended Euclid; p prime, a != 0 mod p
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a % p);
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt; t = newt; newt = tmp;
        tmp = r - q * newr; r = newr; newr = tmp;
    }
    if (r != 1) throw std::domain_error("inv_mod: element not invertible");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

} // namespace detail

class Field {
  public:
    Field() : p_(0) {}

    static Field rationals() { return Field(); }

    static Field prime(std::uint64_t p) {
        if (!detail::is_prime_u64(p)) throw std::invalid_argument("Field::prime: " + std::to_string(p) + " is not prime");
        Field f;
        f.p_ = p;
        return f;
    }

    bool is_rational() const { return p_ == 0; }
    std::uint64_t characteristic() const { return p_; }

    // canonical representative: identity over Q, residue in [0, p) over F_p
    Rat reduce(const Rat& x) const {
        if (p_ == 0) return x;
        Int num = numerator(x), den = denominator(x);
        Int p = p_;
        Int n = num % p;
        if (n < 0) n += p;
        Int d = den % p;
        if (d < 0) d += p;
        if (d == 0) throw std::domain_error("Field::reduce: denominator divisible by " + std::to_string(p_));
        std::uint64_t nd = n.convert_to<std::uint64_t>();
        std::uint64_t dd = d.convert_to<std::uint64_t>();
        if (dd != 1) nd = static_cast<std::uint64_t>((static_cast<unsigned __int128>(nd) * detail::inv_mod(dd, p_)) % p_);
        return Rat(nd);
    }

    Rat add(const Rat& a, const Rat& b) const { return p_ == 0 ? Rat(a + b) : reduce(a + b); }
    Rat sub(const Rat& a, const Rat& b) const { return p_ == 0 ? Rat(a - b) : reduce(a - b); }
    Rat mul(const Rat& a, const Rat& b) const { return p_ == 0 ? Rat(a * b) : reduce(a * b); }
    Rat neg(const Rat& a) const { return p_ == 0 ? Rat(-a) : reduce(-a); }

    Rat inv(const Rat& a) const {
        if (is_zero(a)) throw std::domain_error("Field::inv: division by zero");
        if (p_ == 0) return Rat(1 / a);
        std::uint64_t r = numerator(reduce(a)).convert_to<std::uint64_t>();
        return Rat(detail::inv_mod(r, p_));
    }

    Rat div(const Rat& a, const Rat& b) const { return mul(a, inv(b)); }

    bool is_zero(const Rat& a) const { return p_ == 0 ? a.is_zero() : reduce(a).is_zero(); }
    bool eq(const Rat& a, const Rat& b) const { return is_zero(sub(a, b)); }

    Rat zero() const { return Rat(0); }
    Rat one() const { return Rat(1); }
    Rat from_int(long long v) const { return reduce(Rat(v)); }

    // accepts "a", "-a", "a/b"
    Rat parse(const std::string& s) const {
        try {
            return reduce(Rat(s));
        } catch (const std::exception&) {
            throw std::invalid_argument("Field::parse: bad scalar '" + s + "'");
        }
    }

    std::string str(const Rat& a) const { return reduce(a).str(); }

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

    std::string name() const { return p_ == 0 ? std::string("Q") : "F" + std::to_string(p_); }

  private:
    std::uint64_t p_;
};

} // namespace corings
