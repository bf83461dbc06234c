#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "gorbetti/monomial.hpp"

namespace gorbetti {

template <class K>
struct PolyRing {
    int nvars = 0;
    K field;
    bool operator==(const PolyRing&) const = default;
};

// Exact multivariate polynomial with a fixed canonical term order
// (grevlex, leading term first). Zero coefficients are never stored.
template <class K>
class Polynomial {
public:
    using Elem = typename K::Elem;
    using TermMap = std::map<Monomial, Elem, GrevlexDesc>;

    explicit Polynomial(PolyRing<K> ring) : ring_(std::move(ring)) {}

    static Polynomial zero(const PolyRing<K>& ring) { return Polynomial(ring); }

    static Polynomial term(const PolyRing<K>& ring, Monomial m, Elem c) {
        Polynomial out(ring);
        out.add_term(std::move(m), std::move(c));
        return out;
    }

    static Polynomial constant(const PolyRing<K>& ring, Elem c) {
        return term(ring, Monomial::one(ring.nvars), std::move(c));
    }

    static Polynomial variable(const PolyRing<K>& ring, int index) {
        if (index < 0 || index >= ring.nvars)
            throw std::invalid_argument("Polynomial::variable: index out of range");
        Monomial m = Monomial::one(ring.nvars);
        m.exp[static_cast<std::size_t>(index)] = 1;
        return term(ring, std::move(m), ring.field.one());
    }

    const PolyRing<K>& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }

    void add_term(Monomial m, Elem c) {
        if (m.nvars() != ring_.nvars)
            throw std::invalid_argument("Polynomial::add_term: wrong variable count");
        if (ring_.field.is_zero(c))
            return;
        auto [it, inserted] = terms_.try_emplace(std::move(m), c);
        if (!inserted) {
            it->second = ring_.field.add(it->second, c);
            if (ring_.field.is_zero(it->second))
                terms_.erase(it);
        }
    }

    // degree of the leading term; -1 for the zero polynomial
    int degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

    bool is_homogeneous() const {
        if (terms_.empty())
            return true;
        const int d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d)
                return false;
        return true;
    }

    const Monomial& leading_monomial() const {
        if (terms_.empty())
            throw std::domain_error("Polynomial: zero polynomial has no leading monomial");
        return terms_.begin()->first;
    }

    Polynomial operator-() const {
        Polynomial out(ring_);
        for (const auto& [m, c] : terms_)
            out.terms_.emplace(m, ring_.field.neg(c));
        return out;
    }

    Polynomial operator+(const Polynomial& rhs) const {
        require_same_ring(rhs);
        Polynomial out = *this;
        for (const auto& [m, c] : rhs.terms_)
            out.add_term(m, c);
        return out;
    }

    Polynomial operator-(const Polynomial& rhs) const {
        require_same_ring(rhs);
        Polynomial out = *this;
        for (const auto& [m, c] : rhs.terms_)
            out.add_term(m, ring_.field.neg(c));
        return out;
    }

    Polynomial operator*(const Polynomial& rhs) const {
        require_same_ring(rhs);
        Polynomial out(ring_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : rhs.terms_)
                out.add_term(ma * mb, ring_.field.mul(ca, cb));
        return out;
    }

    Polynomial scaled(const Elem& c) const {
        Polynomial out(ring_);
        if (ring_.field.is_zero(c))
            return out;
        for (const auto& [m, coeff] : terms_)
            out.terms_.emplace(m, ring_.field.mul(coeff, c));
        return out;
    }

    Polynomial times_monomial(const Monomial& m) const {
        Polynomial out(ring_);
        for (const auto& [mon, c] : terms_)
            out.terms_.emplace(mon * m, c);
        return out;
    }

    bool operator==(const Polynomial& rhs) const {
        return ring_ == rhs.ring_ && terms_ == rhs.terms_;
    }

    // Canonical text form: terms grevlex-descending, unit coefficients
    // omitted, prime-field residues printed least-non-negative.
    std::string str() const {
        if (terms_.empty())
            return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Elem mag = c;
            bool neg = false;
            if constexpr (K::has_sign) {
                neg = ring_.field.is_negative(c);
                mag = ring_.field.abs_value(c);
            }
            if (first)
                s += neg ? "-" : "";
            else
                s += neg ? " - " : " + ";
            first = false;
            if (m.is_one())
                s += ring_.field.str(mag);
            else if (ring_.field.is_one(mag))
                s += to_string(m);
            else
                s += ring_.field.str(mag) + "*" + to_string(m);
        }
        return s;
    }

private:
    void require_same_ring(const Polynomial& rhs) const {
        if (!(ring_ == rhs.ring_))
            throw std::invalid_argument("Polynomial: ring mismatch");
    }

    PolyRing<K> ring_;
    TermMap terms_;
};

} // namespace gorbetti
