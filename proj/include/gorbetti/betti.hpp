#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "gorbetti/binomial.hpp"
#include "gorbetti/ideal.hpp"

namespace gorbetti {

// Graded Betti numbers beta_{i,j} of an artinian quotient R/I, indexed by
// homological degree i (0..n) and internal degree j.
struct BettiTable {
    int nvars = 0;
    int sigma = 0; // socle degree of the quotient
    std::map<std::pair<int, int>, long> beta;

    long at(int i, int j) const {
        auto it = beta.find({i, j});
        return it == beta.end() ? 0 : it->second;
    }
    void set(int i, int j, long value) {
        if (value != 0)
            beta[{i, j}] = value;
    }
    std::vector<long> totals() const {
        std::vector<long> t(static_cast<std::size_t>(nvars) + 1, 0);
        for (const auto& [ij, b] : beta)
            t[static_cast<std::size_t>(ij.first)] += b;
        return t;
    }
    // largest j - i over nonzero entries; the diagram's last row index
    int max_shift() const {
        int shift = 0;
        for (const auto& [ij, b] : beta)
            shift = std::max(shift, ij.second - ij.first);
        return shift;
    }
    bool operator==(const BettiTable&) const = default;
};

// Multiplication structure of the artinian quotient A = R/I: standard
// monomial bases of each graded piece and the matrices of multiplication
// by each variable.
template <class K>
struct ArtinianQuotient {
    PolyRing<K> ring;
    int sigma = -1;
    std::vector<long> h;                          // h_0..h_sigma
    std::vector<std::vector<Monomial>> std_mons;  // per degree
    std::vector<std::vector<Mat<K>>> mult;        // [var][d]: A_d -> A_{d+1}
};

template <class K>
ArtinianQuotient<K> artinian_quotient(const IdealBasis<K>& ideal, int socle_cap) {
    const auto& field = ideal.ring.field;
    const int n = ideal.ring.nvars;

    std::vector<DegreePiece<K>> pieces;
    int sigma = -1;
    for (int d = 0; d <= socle_cap + 1; ++d) {
        pieces.push_back(ideal_piece(ideal, d));
        if (pieces.back().dim() == pieces.back().ambient_dim()) {
            sigma = d - 1;
            break;
        }
    }
    if (sigma < 0)
        throw std::invalid_argument("artinian_quotient: quotient not artinian within the cap");

    ArtinianQuotient<K> q{ideal.ring, sigma, {}, {}, {}};
    std::vector<std::vector<bool>> pivot_flags;
    for (int d = 0; d <= sigma + 1; ++d) {
        const auto& piece = pieces[static_cast<std::size_t>(d)];
        std::vector<bool> flags(static_cast<std::size_t>(piece.ambient_dim()), false);
        for (int c : piece.pivot_cols)
            flags[static_cast<std::size_t>(c)] = true;
        std::vector<Monomial> std_mons;
        for (int c = 0; c < piece.ambient_dim(); ++c)
            if (!flags[static_cast<std::size_t>(c)])
                std_mons.push_back(piece.mons[static_cast<std::size_t>(c)]);
        pivot_flags.push_back(std::move(flags));
        q.h.push_back(static_cast<long>(std_mons.size()));
        q.std_mons.push_back(std::move(std_mons));
    }

    // multiplication by x_v on standard monomials, reduced modulo I_{d+1}
    q.mult.assign(static_cast<std::size_t>(n), {});
    for (int v = 0; v < n; ++v) {
        for (int d = 0; d <= sigma; ++d) {
            const auto& target = pieces[static_cast<std::size_t>(d + 1)];
            const auto col_of = column_index<K>(target.mons);
            // standard-monomial coordinates of the target degree
            std::vector<int> std_coord(static_cast<std::size_t>(target.ambient_dim()), -1);
            {
                int idx = 0;
                for (int c = 0; c < target.ambient_dim(); ++c)
                    if (!pivot_flags[static_cast<std::size_t>(d + 1)][static_cast<std::size_t>(c)])
                        std_coord[static_cast<std::size_t>(c)] = idx++;
            }
            const auto& dom = q.std_mons[static_cast<std::size_t>(d)];
            Mat<K> m(static_cast<int>(q.h[static_cast<std::size_t>(d + 1)]),
                     static_cast<int>(dom.size()), field);
            for (std::size_t uc = 0; uc < dom.size(); ++uc) {
                Monomial xv = Monomial::one(n);
                xv.exp[static_cast<std::size_t>(v)] = 1;
                const Monomial prod = dom[uc] * xv;
                std::vector<typename K::Elem> w(
                    static_cast<std::size_t>(target.ambient_dim()), field.zero());
                w[static_cast<std::size_t>(col_of.at(prod))] = field.one();
                for (int pr = 0; pr < target.dim(); ++pr) {
                    const auto factor = w[static_cast<std::size_t>(target.pivot_cols[pr])];
                    if (field.is_zero(factor))
                        continue;
                    for (int c = 0; c < target.ambient_dim(); ++c)
                        w[static_cast<std::size_t>(c)] =
                            field.sub(w[static_cast<std::size_t>(c)],
                                      field.mul(factor, target.reduced.at(pr, c)));
                }
                for (int c = 0; c < target.ambient_dim(); ++c)
                    if (std_coord[static_cast<std::size_t>(c)] >= 0)
                        m.at(std_coord[static_cast<std::size_t>(c)], static_cast<int>(uc)) =
                            w[static_cast<std::size_t>(c)];
            }
            q.mult[static_cast<std::size_t>(v)].push_back(std::move(m));
        }
    }
    return q;
}

namespace detail {

inline std::vector<std::vector<int>> combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v < n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace detail

inline int default_socle_cap(const std::vector<int>& gen_degrees) {
    // complete-intersection style bound: an artinian quotient's socle degree
    // is at most sum (d_i - 1) over any regular sequence inside the ideal
    int cap = 1;
    for (int d : gen_degrees)
        cap += d - 1;
    return cap;
}

// Graded Betti numbers via Koszul homology: beta_{i,j} is the dimension of
// the degree-j piece of H_i(K(x_1..x_n) tensor R/I), computed as exact
// rank-nullity of the Koszul differentials restricted to each graded piece.
// Requires j_max >= sigma + n so the last syzygy is captured.
template <class K>
BettiTable koszul_betti(const IdealBasis<K>& ideal, std::optional<int> j_max = std::nullopt) {
    const int n = ideal.ring.nvars;
    std::vector<int> gen_degrees;
    for (const auto& g : ideal.gens)
        gen_degrees.push_back(g.degree());
    const int cap = std::max(default_socle_cap(gen_degrees),
                             j_max.value_or(0));
    const auto q = artinian_quotient(ideal, cap);

    if (j_max && *j_max < q.sigma + n)
        throw std::invalid_argument(
            "koszul_betti: j_max must be at least sigma + n = " +
            std::to_string(q.sigma + n));

    const auto& field = ideal.ring.field;
    auto h_of = [&](int d) { return (d < 0 || d > q.sigma) ? 0L : q.h[static_cast<std::size_t>(d)]; };

    // rank of the differential K_i -> K_{i-1} in internal degree j
    auto diff_rank = [&](int i, int j) -> long {
        const int d = j - i; // domain coefficient degree
        if (i < 1 || i > n || h_of(d) == 0)
            return 0;
        const auto dom_sets = detail::combinations(n, i);
        const auto cod_sets = detail::combinations(n, i - 1);
        std::map<std::vector<int>, int> cod_index;
        for (std::size_t s = 0; s < cod_sets.size(); ++s)
            cod_index[cod_sets[s]] = static_cast<int>(s);
        const long hd = h_of(d), hd1 = h_of(d + 1);
        Mat<K> m(static_cast<int>(cod_sets.size()) * static_cast<int>(hd1),
                 static_cast<int>(dom_sets.size()) * static_cast<int>(hd), field);
        for (std::size_t s = 0; s < dom_sets.size(); ++s) {
            const auto& set = dom_sets[s];
            for (std::size_t t = 0; t < set.size(); ++t) {
                auto rest = set;
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(t));
                const int block = cod_index.at(rest);
                const bool negate = (t % 2) != 0;
                if (hd1 == 0)
                    continue;
                const auto& mv = q.mult[static_cast<std::size_t>(set[t])]
                                       [static_cast<std::size_t>(d)];
                for (int r = 0; r < mv.rows; ++r)
                    for (int c = 0; c < mv.cols; ++c) {
                        const auto& val = mv.at(r, c);
                        if (field.is_zero(val))
                            continue;
                        m.at(block * static_cast<int>(hd1) + r,
                             static_cast<int>(s) * static_cast<int>(hd) + c) =
                            negate ? field.neg(val) : val;
                    }
            }
        }
        return rank(std::move(m), field);
    };

    BettiTable table;
    table.nvars = n;
    table.sigma = q.sigma;
    for (int i = 0; i <= n; ++i) {
        for (int d = 0; d <= q.sigma; ++d) {
            const int j = i + d;
            const long dim = binom(n, i).get_si() * h_of(d);
            if (dim == 0)
                continue;
            const long b = dim - diff_rank(i, j) - diff_rank(i + 1, j);
            table.set(i, j, b);
        }
    }
    return table;
}

// The diagram layout: entry (i, j), starting at (0, 0) top left, is the
// rank of R(-i-j) in the j-th term of the resolution; zeros print as '-'.
std::string render_diagram(const BettiTable& table);

struct StructuralReport {
    bool euler_zero = false;
    bool checked_gorenstein = false;
    bool last_betti_one = false;
    bool dual_symmetric = false;
    std::vector<std::string> failures;

    bool all_ok() const { return failures.empty(); }
};

// Euler characteristic and, when expect_gorenstein, beta_n = 1 plus the
// dual-rotation symmetry beta_{i,j} = beta_{n-i, sigma+n-j}.
StructuralReport structural_checks(const BettiTable& table, bool expect_gorenstein);

nlohmann::json betti_to_json(const BettiTable& table);

} // namespace gorbetti
