#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "gorbetti/integers.hpp"

namespace gorbetti {

// F_q for a word-sized prime q; elements are least non-negative residues.
class PrimeField {
public:
    using Elem = std::int64_t;

    explicit PrimeField(std::uint32_t q) : q_(q) {
        if (!is_prime(q))
            throw std::invalid_argument("PrimeField: modulus " + std::to_string(q) +
                                        " is not prime");
    }

    std::uint32_t modulus() const { return q_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % q_; }
    bool is_zero(Elem a) const { return a == 0; }
    bool is_one(Elem a) const { return a == one(); }

    Elem add(Elem a, Elem b) const { return (a + b) % q_; }
    Elem sub(Elem a, Elem b) const { return (a - b + q_) % q_; }
    Elem mul(Elem a, Elem b) const { return (a * b) % q_; }
    Elem neg(Elem a) const { return a == 0 ? 0 : q_ - a; }

    Elem inv(Elem a) const {
        if (a == 0)
            throw std::domain_error("PrimeField: division by zero");
        // extended Euclid
        std::int64_t t = 0, new_t = 1, r = q_, new_r = a;
        while (new_r != 0) {
            std::int64_t quot = r / new_r;
            t = std::exchange(new_t, t - quot * new_t);
            r = std::exchange(new_r, r - quot * new_r);
        }
        return t < 0 ? t + q_ : t;
    }

    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem from_integer(const Integer& z) const {
        return static_cast<Elem>(mpz_fdiv_ui(z.get_mpz_t(), q_));
    }
    Elem from_long(long v) const { return from_integer(Integer(v)); }

    static constexpr bool has_sign = false;
    bool is_negative(Elem) const { return false; }
    Elem abs_value(Elem a) const { return a; }
    std::string str(Elem a) const { return std::to_string(a); }

    bool operator==(const PrimeField&) const = default;

private:
    static bool is_prime(std::uint32_t q) {
        if (q < 2)
            return false;
        for (std::uint64_t d = 2; d * d <= q; ++d)
            if (q % d == 0)
                return false;
        return true;
    }

    std::uint32_t q_;
};

// Exact rationals.
class RationalField {
public:
    using Elem = Rational;

    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool is_one(const Elem& a) const { return a == 1; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }

    Elem inv(const Elem& a) const {
        if (sgn(a) == 0)
            throw std::domain_error("RationalField: division by zero");
        return 1 / a;
    }

    Elem div(const Elem& a, const Elem& b) const { return a / inv_guard(b); }

    Elem from_integer(const Integer& z) const { return Rational(z); }
    Elem from_long(long v) const { return Rational(v); }

    static constexpr bool has_sign = true;
    bool is_negative(const Elem& a) const { return sgn(a) < 0; }
    Elem abs_value(const Elem& a) const { return abs(a); }
    std::string str(const Elem& a) const { return a.get_str(); }

    bool operator==(const RationalField&) const { return true; }

private:
    const Elem& inv_guard(const Elem& b) const {
        if (sgn(b) == 0)
            throw std::domain_error("RationalField: division by zero");
        return b;
    }
};

} // namespace gorbetti
