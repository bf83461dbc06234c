#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace gorbetti {

// Exponent vector over x1..xn.
struct Monomial {
    std::vector<int> exp;

    int nvars() const { return static_cast<int>(exp.size()); }
    int degree() const { return std::accumulate(exp.begin(), exp.end(), 0); }
    bool is_one() const {
        return std::all_of(exp.begin(), exp.end(), [](int e) { return e == 0; });
    }
    static Monomial one(int nvars) { return Monomial{std::vector<int>(nvars, 0)}; }
    bool operator==(const Monomial&) const = default;
};

// Graded reverse lexicographic: compare total degree first; on ties the
// monomial with the larger exponent at the last differing variable is the
// smaller one.
inline bool grevlex_less(const Monomial& a, const Monomial& b) {
    const int da = a.degree(), db = b.degree();
    if (da != db)
        return da < db;
    for (int i = a.nvars() - 1; i >= 0; --i)
        if (a.exp[static_cast<std::size_t>(i)] != b.exp[static_cast<std::size_t>(i)])
            return a.exp[static_cast<std::size_t>(i)] > b.exp[static_cast<std::size_t>(i)];
    return false;
}

// Canonical term order for maps and column labels: leading monomial first.
struct GrevlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(b, a); }
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (std::size_t i = 0; i < out.exp.size(); ++i)
        out.exp[i] += b.exp[i];
    return out;
}

inline bool divides(const Monomial& d, const Monomial& m) {
    for (std::size_t i = 0; i < d.exp.size(); ++i)
        if (d.exp[i] > m.exp[i])
            return false;
    return true;
}

inline Monomial quotient(const Monomial& m, const Monomial& d) {
    Monomial out = m;
    for (std::size_t i = 0; i < out.exp.size(); ++i) {
        out.exp[i] -= d.exp[i];
        if (out.exp[i] < 0)
            throw std::invalid_argument("monomial quotient: not divisible");
    }
    return out;
}

// All monomials of the given degree, grevlex-descending.
inline std::vector<Monomial> monomial_basis(int nvars, int degree) {
    if (nvars < 1 || degree < 0)
        throw std::invalid_argument("monomial_basis: bad arguments");
    std::vector<Monomial> out;
    std::vector<int> exp(static_cast<std::size_t>(nvars), 0);
    // enumerate compositions of degree into nvars parts
    auto rec = [&](auto&& self, int var, int rest) -> void {
        if (var == nvars - 1) {
            exp[static_cast<std::size_t>(var)] = rest;
            out.push_back(Monomial{exp});
            return;
        }
        for (int e = rest; e >= 0; --e) {
            exp[static_cast<std::size_t>(var)] = e;
            self(self, var + 1, rest - e);
        }
        exp[static_cast<std::size_t>(var)] = 0;
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(), GrevlexDesc{});
    return out;
}

inline std::string to_string(const Monomial& m) {
    std::string s;
    for (int i = 0; i < m.nvars(); ++i) {
        const int e = m.exp[static_cast<std::size_t>(i)];
        if (e == 0)
            continue;
        if (!s.empty())
            s += '*';
        s += 'x' + std::to_string(i + 1);
        if (e > 1)
            s += '^' + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

} // namespace gorbetti
