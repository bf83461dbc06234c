#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "gorbetti/betti.hpp"
#include "gorbetti/ideal.hpp"

namespace gorbetti {

// Skew-symmetric matrix of homogeneous polynomials with degree data
// d_ij = m_i - n_j. Skew symmetry forces m_i + n_i to be constant across
// the index; entries with d_ij <= 0 are identically zero, and every
// nonzero entry is homogeneous of degree exactly d_ij.
template <class K>
struct AlternatingMatrix {
    PolyRing<K> ring;
    int size = 0;
    std::vector<int> row_degrees; // m_i, non-decreasing
    std::vector<int> col_degrees; // n_i, paired so that m_i + n_i is constant
    std::vector<std::vector<Polynomial<K>>> entries;

    int entry_degree(int i, int j) const {
        return row_degrees[static_cast<std::size_t>(i)] -
               col_degrees[static_cast<std::size_t>(j)];
    }

    // Build from the strict upper triangle; the lower triangle is the
    // negation and the diagonal is zero.
    static AlternatingMatrix from_upper(PolyRing<K> ring, std::vector<int> m,
                                        std::vector<int> n,
                                        const std::vector<std::vector<Polynomial<K>>>& upper) {
        AlternatingMatrix out{std::move(ring), static_cast<int>(m.size()), std::move(m),
                              std::move(n), {}};
        out.validate_profile();
        out.entries.assign(static_cast<std::size_t>(out.size),
                           std::vector<Polynomial<K>>(static_cast<std::size_t>(out.size),
                                                      Polynomial<K>::zero(out.ring)));
        for (int i = 0; i < out.size; ++i) {
            for (int j = i + 1; j < out.size; ++j) {
                const auto& e = upper[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (e.is_zero())
                    continue;
                if (out.entry_degree(i, j) <= 0)
                    throw std::invalid_argument(
                        "AlternatingMatrix: entry must vanish where d_ij <= 0");
                if (!e.is_homogeneous() || e.degree() != out.entry_degree(i, j))
                    throw std::invalid_argument(
                        "AlternatingMatrix: entry degree does not match the profile");
                out.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e;
                out.entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -e;
            }
        }
        return out;
    }

    void validate_profile() const {
        if (size < 1)
            throw std::invalid_argument("AlternatingMatrix: empty profile");
        if (row_degrees.size() != static_cast<std::size_t>(size) ||
            col_degrees.size() != static_cast<std::size_t>(size))
            throw std::invalid_argument("AlternatingMatrix: profile length mismatch");
        const int c = row_degrees[0] + col_degrees[0];
        for (int i = 0; i < size; ++i) {
            if (i > 0 && row_degrees[static_cast<std::size_t>(i)] <
                             row_degrees[static_cast<std::size_t>(i - 1)])
                throw std::invalid_argument("AlternatingMatrix: m_i must be non-decreasing");
            if (row_degrees[static_cast<std::size_t>(i)] +
                    col_degrees[static_cast<std::size_t>(i)] !=
                c)
                throw std::invalid_argument(
                    "AlternatingMatrix: skew symmetry needs m_i + n_i constant");
        }
    }
};

namespace detail {

template <class K>
Polynomial<K> pfaffian_masked(const AlternatingMatrix<K>& m, std::uint32_t mask,
                              std::map<std::uint32_t, Polynomial<K>>& memo) {
    if (mask == 0)
        return Polynomial<K>::constant(m.ring, m.ring.field.one());
    auto it = memo.find(mask);
    if (it != memo.end())
        return it->second;

    std::vector<int> idx;
    for (int i = 0; i < m.size; ++i)
        if (mask & (1u << i))
            idx.push_back(i);

    // expand along the first surviving row with alternating signs
    Polynomial<K> acc = Polynomial<K>::zero(m.ring);
    for (std::size_t s = 1; s < idx.size(); ++s) {
        const auto& entry =
            m.entries[static_cast<std::size_t>(idx[0])][static_cast<std::size_t>(idx[s])];
        if (entry.is_zero())
            continue;
        const std::uint32_t rest =
            mask & ~(1u << idx[0]) & ~(1u << static_cast<std::uint32_t>(idx[s]));
        auto sub = pfaffian_masked(m, rest, memo);
        auto term = entry * sub;
        acc = (s % 2 == 1) ? acc + term : acc - term;
    }
    memo.emplace(mask, acc);
    return acc;
}

} // namespace detail

// Pfaffian of an even-size alternating matrix, by Laplace expansion along
// the first row. Pf(M)^2 = det(M).
template <class K>
Polynomial<K> pfaffian(const AlternatingMatrix<K>& m) {
    if (m.size % 2 != 0)
        throw std::invalid_argument("pfaffian: matrix size must be even");
    std::map<std::uint32_t, Polynomial<K>> memo;
    const std::uint32_t mask = (m.size == 32) ? ~0u : ((1u << m.size) - 1);
    return detail::pfaffian_masked(m, mask, memo);
}

// The nu maximal pfaffians of an odd-size alternating matrix: f_t is the
// pfaffian with row and column t deleted, signed alternately so that the
// generic 3x3 case yields (y23, -y13, y12).
template <class K>
std::vector<Polynomial<K>> maximal_pfaffians(const AlternatingMatrix<K>& m) {
    if (m.size % 2 != 1 || m.size < 3)
        throw std::invalid_argument("maximal_pfaffians: size must be odd and at least 3");
    std::map<std::uint32_t, Polynomial<K>> memo;
    const std::uint32_t full = (1u << m.size) - 1;
    std::vector<Polynomial<K>> out;
    for (int t = 0; t < m.size; ++t) {
        auto f = detail::pfaffian_masked(m, full & ~(1u << t), memo);
        out.push_back(t % 2 == 0 ? f : -f);
    }
    return out;
}

// Determinant by Laplace expansion; test-scale sizes only. Used to check
// Pf(M)^2 = det(M).
template <class K>
Polynomial<K> determinant(const std::vector<std::vector<Polynomial<K>>>& a,
                          const PolyRing<K>& ring) {
    const std::size_t n = a.size();
    if (n == 0)
        return Polynomial<K>::constant(ring, ring.field.one());
    std::vector<int> cols(n);
    for (std::size_t c = 0; c < n; ++c)
        cols[c] = static_cast<int>(c);
    auto rec = [&](auto&& self, std::size_t row, std::vector<int>& live) -> Polynomial<K> {
        if (live.empty())
            return Polynomial<K>::constant(ring, ring.field.one());
        Polynomial<K> acc = Polynomial<K>::zero(ring);
        for (std::size_t s = 0; s < live.size(); ++s) {
            const auto& entry = a[row][static_cast<std::size_t>(live[s])];
            if (entry.is_zero())
                continue;
            std::vector<int> rest = live;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(s));
            auto term = entry * self(self, row + 1, rest);
            acc = (s % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    };
    return rec(rec, 0, cols);
}

struct DegreeProfile {
    std::string label;
    int nu = 0;
    std::vector<int> m;
    std::vector<int> n;
};

// Desk-scale profiles for the codimension-3 experiment (nu <= 9, entry
// degrees <= 2, generator degrees <= 4).
std::vector<DegreeProfile> default_profiles();

// Uniformly random homogeneous entries of degree d_ij = m_i - n_j over the
// prime field; zero where d_ij <= 0. Deterministic for a fixed seed.
AlternatingMatrix<PrimeField> random_alternating(const DegreeProfile& profile,
                                                 const PolyRing<PrimeField>& ring,
                                                 std::uint64_t seed);

struct TrialRecord {
    int index = 0;
    std::string profile;
    int p = 0;
    long nu = 0;
    std::vector<long> betti_totals;
    std::string status; // "ok", "violation", or "skipped: <reason>"
};

struct ExperimentReport {
    int trials = 0;
    int completed = 0;
    int skipped = 0;
    int violations = 0;
    std::vector<TrialRecord> records;
};

// For each trial: build the maximal-pfaffian ideal in 3 variables, check it
// is artinian, and record (p, nu(I), betti totals) together with the
// verdicts nu(I) <= 2p+1, beta_2 <= 2p+1, beta_3 = 1. Degenerate draws are
// recorded as skipped, never silently retried.
ExperimentReport codim3_experiment(int trials, const std::vector<DegreeProfile>& profiles,
                                   std::uint64_t seed, std::uint32_t modulus = 32003);

nlohmann::json experiment_to_json(const ExperimentReport& report);

} // namespace gorbetti
