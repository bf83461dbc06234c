#pragma once

#include <map>
#include <type_traits>
#include <vector>

#include "gorbetti/field.hpp"
#include "gorbetti/linalg.hpp"
#include "gorbetti/polynomial.hpp"

namespace gorbetti {

// A graded ideal presented by homogeneous generators.
template <class K>
struct IdealBasis {
    PolyRing<K> ring;
    std::vector<Polynomial<K>> gens;

    IdealBasis(PolyRing<K> r, std::vector<Polynomial<K>> generators)
        : ring(std::move(r)), gens(std::move(generators)) {
        for (const auto& g : gens) {
            if (!(g.ring() == ring))
                throw std::invalid_argument("IdealBasis: generator from a different ring");
            if (g.is_zero())
                throw std::invalid_argument("IdealBasis: zero generator");
            if (!g.is_homogeneous())
                throw std::invalid_argument("IdealBasis: generators must be homogeneous");
            if (g.degree() == 0)
                throw std::invalid_argument("IdealBasis: unit generator defines the whole ring");
        }
    }
};

// Coefficient row of a polynomial over the monomial basis of its degree.
template <class K>
void write_row(Mat<K>& m, int row, const Polynomial<K>& f,
               const std::map<Monomial, int, GrevlexDesc>& col_of) {
    for (const auto& [mon, c] : f.terms())
        m.at(row, col_of.at(mon)) = c;
}

// The degree-d piece I_d as a reduced row space inside R_d.
template <class K>
struct DegreePiece {
    std::vector<Monomial> mons; // column labels, grevlex descending
    Mat<K> reduced;             // reduced echelon rows; the first dim() rows
    std::vector<int> pivot_cols;

    int dim() const { return static_cast<int>(pivot_cols.size()); }
    int ambient_dim() const { return static_cast<int>(mons.size()); }
};

template <class K>
std::map<Monomial, int, GrevlexDesc> column_index(const std::vector<Monomial>& mons) {
    std::map<Monomial, int, GrevlexDesc> col_of;
    for (std::size_t i = 0; i < mons.size(); ++i)
        col_of.emplace(mons[i], static_cast<int>(i));
    return col_of;
}

template <class K>
DegreePiece<K> ideal_piece(const IdealBasis<K>& ideal, int d) {
    DegreePiece<K> piece;
    piece.mons = monomial_basis(ideal.ring.nvars, d);
    const auto col_of = column_index<K>(piece.mons);

    int nrows = 0;
    for (const auto& g : ideal.gens)
        if (g.degree() <= d)
            nrows += static_cast<int>(
                monomial_basis(ideal.ring.nvars, d - g.degree()).size());

    Mat<K> m(nrows, static_cast<int>(piece.mons.size()), ideal.ring.field);
    int row = 0;
    for (const auto& g : ideal.gens) {
        if (g.degree() > d)
            continue;
        for (const auto& u : monomial_basis(ideal.ring.nvars, d - g.degree()))
            write_row(m, row++, g.times_monomial(u), col_of);
    }
    piece.pivot_cols = rref(m, ideal.ring.field);
    piece.reduced = std::move(m);
    return piece;
}

// Scale a coefficient row into canonical output form: primitive integral
// with positive leading coefficient over the rationals, least non-negative
// residues over a prime field (already the case after rref).
template <class K>
Polynomial<K> row_to_polynomial(const Mat<K>& m, int row, const std::vector<Monomial>& mons,
                                const PolyRing<K>& ring) {
    Polynomial<K> f(ring);
    if constexpr (std::is_same_v<K, RationalField>) {
        Integer den_lcm = 1, num_gcd = 0;
        for (int c = 0; c < m.cols; ++c) {
            const Rational& v = m.at(row, c);
            if (sgn(v) != 0)
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den_mpz_t());
        }
        for (int c = 0; c < m.cols; ++c) {
            const Rational& v = m.at(row, c);
            if (sgn(v) == 0)
                continue;
            Integer scaled = Integer(v * den_lcm);
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
        }
        if (num_gcd == 0)
            return f;
        Rational scale(den_lcm, num_gcd);
        scale.canonicalize();
        // positive leading coefficient
        for (int c = 0; c < m.cols; ++c) {
            const Rational& v = m.at(row, c);
            if (sgn(v) != 0) {
                if (sgn(v) < 0)
                    scale = -scale;
                break;
            }
        }
        for (int c = 0; c < m.cols; ++c)
            if (sgn(m.at(row, c)) != 0)
                f.add_term(mons[static_cast<std::size_t>(c)], m.at(row, c) * scale);
    } else {
        for (int c = 0; c < m.cols; ++c)
            if (!ring.field.is_zero(m.at(row, c)))
                f.add_term(mons[static_cast<std::size_t>(c)], m.at(row, c));
    }
    return f;
}

template <class K>
struct DegreeBasis {
    int dim = 0;
    std::vector<Polynomial<K>> basis; // reduced echelon, canonical scaling
};

template <class K>
DegreeBasis<K> degree_basis(const IdealBasis<K>& ideal, int d) {
    auto piece = ideal_piece(ideal, d);
    DegreeBasis<K> out;
    out.dim = piece.dim();
    for (int r = 0; r < piece.dim(); ++r)
        out.basis.push_back(row_to_polynomial(piece.reduced, r, piece.mons, ideal.ring));
    return out;
}

// h_d = dim R_d - dim I_d for d = 0..dmax.
template <class K>
std::vector<long> hilbert_function(const IdealBasis<K>& ideal, int dmax) {
    if (dmax < 0)
        throw std::invalid_argument("hilbert_function: dmax must be non-negative");
    std::vector<long> h;
    for (int d = 0; d <= dmax; ++d) {
        auto piece = ideal_piece(ideal, d);
        h.push_back(piece.ambient_dim() - piece.dim());
    }
    return h;
}

struct ArtinianCheck {
    bool artinian = false;
    bool conclusive = false; // false means the scan hit d_cap before reaching 0
    int socle_degree = -1;   // last degree with a nonzero piece, when artinian
};

template <class K>
ArtinianCheck artinian_check(const IdealBasis<K>& ideal, int d_cap) {
    ArtinianCheck out;
    for (int d = 0; d <= d_cap; ++d) {
        auto piece = ideal_piece(ideal, d);
        if (piece.ambient_dim() == piece.dim()) {
            out.artinian = true;
            out.conclusive = true;
            out.socle_degree = d - 1;
            return out;
        }
    }
    return out;
}

// Reduced basis of (J : f)_d = {g in R_d : g*f in J_{d + deg f}}.
template <class K>
DegreeBasis<K> colon_degreewise(const IdealBasis<K>& ideal, const Polynomial<K>& f, int d) {
    if (f.is_zero() || !f.is_homogeneous())
        throw std::invalid_argument("colon_degreewise: f must be homogeneous and nonzero");
    if (!(f.ring() == ideal.ring))
        throw std::invalid_argument("colon_degreewise: ring mismatch");
    const int big = d + f.degree();
    auto piece = ideal_piece(ideal, big);
    const auto col_of = column_index<K>(piece.mons);
    const auto& field = ideal.ring.field;

    const auto dom_mons = monomial_basis(ideal.ring.nvars, d);
    // residual of u*f modulo J_big, one column per domain monomial
    Mat<K> residual(piece.ambient_dim(), static_cast<int>(dom_mons.size()), field);
    for (std::size_t uc = 0; uc < dom_mons.size(); ++uc) {
        std::vector<typename K::Elem> w(static_cast<std::size_t>(piece.ambient_dim()),
                                        field.zero());
        const auto shifted = f.times_monomial(dom_mons[uc]);
        for (const auto& [mon, c] : shifted.terms())
            w[static_cast<std::size_t>(col_of.at(mon))] = c;
        for (int pr = 0; pr < piece.dim(); ++pr) {
            const auto& coef = w[static_cast<std::size_t>(piece.pivot_cols[pr])];
            if (field.is_zero(coef))
                continue;
            const auto factor = coef;
            for (int c = 0; c < piece.ambient_dim(); ++c)
                w[static_cast<std::size_t>(c)] =
                    field.sub(w[static_cast<std::size_t>(c)],
                              field.mul(factor, piece.reduced.at(pr, c)));
        }
        for (int r = 0; r < piece.ambient_dim(); ++r)
            residual.at(r, static_cast<int>(uc)) = w[static_cast<std::size_t>(r)];
    }

    Mat<K> kernel = nullspace(std::move(residual), field);
    DegreeBasis<K> out;
    for (int r = 0; r < kernel.rows; ++r) {
        auto g = row_to_polynomial(kernel, r, dom_mons, ideal.ring);
        if (!g.is_zero()) {
            out.basis.push_back(std::move(g));
            ++out.dim;
        }
    }
    return out;
}

// nu_d = dim I_d - dim(R_1 * I_{d-1}); the total over all degrees is beta_1.
template <class K>
std::map<int, long> minimal_generators_by_degree(const IdealBasis<K>& ideal, int dmax) {
    std::map<int, long> counts;
    const auto& field = ideal.ring.field;
    DegreePiece<K> prev = ideal_piece(ideal, 0);
    for (int d = 1; d <= dmax; ++d) {
        auto cur = ideal_piece(ideal, d);
        const auto col_of = column_index<K>(cur.mons);
        Mat<K> grown(prev.dim() * ideal.ring.nvars, cur.ambient_dim(), field);
        int row = 0;
        for (int r = 0; r < prev.dim(); ++r) {
            auto b = row_to_polynomial(prev.reduced, r, prev.mons, ideal.ring);
            for (int v = 0; v < ideal.ring.nvars; ++v) {
                Monomial xv = Monomial::one(ideal.ring.nvars);
                xv.exp[static_cast<std::size_t>(v)] = 1;
                write_row(grown, row++, b.times_monomial(xv), col_of);
            }
        }
        const long nu = cur.dim() - rank(std::move(grown), field);
        if (nu > 0)
            counts[d] = nu;
        prev = std::move(cur);
    }
    return counts;
}

} // namespace gorbetti
