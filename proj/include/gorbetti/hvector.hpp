#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gorbetti/binomial.hpp"
#include "gorbetti/integers.hpp"

namespace gorbetti {

// h-vector of an artinian graded quotient: h_0..h_sigma, all positive, h_0 = 1.
// Trailing zeros are stripped on construction.
struct HVector {
    std::vector<Integer> entries;

    static HVector from_entries(std::vector<Integer> entries);
    int socle_degree() const { return static_cast<int>(entries.size()) - 1; }
    const Integer& at(int d) const; // 0 outside the stored range
    Integer multiplicity() const;   // sum of the entries
    bool operator==(const HVector&) const = default;
};

struct HProfile {
    Integer g;      // codimension, = h_1
    int p;          // initial degree: least d >= 1 with h_d < C(g+d-1, d)
    int sigma;      // socle degree
    Integer nu_p;   // C(g+p-1, g-1) - h_p
    bool symmetric; // h_d = h_{sigma-d} for all d
    bool unimodal;  // no strict descent followed by a strict ascent
};

// Requires a valid O-sequence with sigma >= 1 (otherwise g is undefined).
HProfile profile(const HVector& h);

// C(p+g-1, g-1) - C(p+g-3, g-1): the generator count of the extremal
// Gorenstein algebra of codimension g and initial degree p, and the upper
// bound for nu(I_p) in general.
Integer nu0(int g, int p);

// e(g, p) = C(g+p-1, g) + C(g+p-2, g): the minimal multiplicity.
Integer extremal_multiplicity(int g, int p);

// h_d = C(g-1+d, d) for d <= p-1, mirrored around the socle degree 2p-2.
HVector extremal_hvector(int g, int p);

// Degree sequence 0 = d_0 < d_1 < ... < d_c of a pure resolution; for the
// extremal algebra this is (0, p, p+1, ..., p+g-2, 2p+g-2).
std::vector<int> extremal_degree_sequence(int g, int p);

// Betti numbers of a pure resolution with the given degree sequence:
// beta_0 = 1 and beta_i = prod_{j>=1, j!=i} |d_j / (d_j - d_i)|.
// Throws std::domain_error when some beta_i is not an integer.
std::vector<Integer> pure_resolution_betti(const std::vector<int>& degrees);

struct ForbiddenNuReport {
    Integer nu0;
    std::vector<Integer> forbidden;             // ascending
    std::vector<Integer> nonunimodal_required;  // ascending
};

// Remark-level one-step obstruction: nu is forbidden iff the value
// h = C(g+p-1, g-1) - nu cannot grow to h_{p-1} = C(g+p-2, g-1) at any
// degree j >= p. The extremal nu = nu0 is always allowed (its symmetry
// point sits below degree p). Values with h < h_{p-1} that survive force a
// non-unimodal h-vector.
ForbiddenNuReport forbidden_nu(int g, int p);

// Infeasibility certificate for one growth step h_j -> C(g+p-2, g-1),
// following the exact-rational chain F_0 > F_1 > ... > F_r > 0.
struct Certificate {
    int g = 0, p = 0, j = 0;
    Integer h;
    bool trivial = false; // h <= j: the bound equals h, growth is impossible
    GroupedRep grouped;
    Integer k;                 // top difference a_j - j
    bool k_in_range = false;   // k <= g - 2
    bool ratio_ok = false;     // (g-1)/(p-1) > (k+1)/(j+1), compared exactly
    std::vector<Rational> f;   // F_0..F_r
    Rational f_last_closed;    // ((k_r+1)/(j_r-i_r) - (k_r+1)/(j_r+1)) * C(a_i, i-1)
    std::vector<Rational> a_sums; // A_s for 0 <= s < r
    std::vector<Rational> b_sums; // B_s for 0 <= s < r
    bool chain_strict = false; // F_0 > F_1 > ... > F_r
    bool positive = false;     // F_r > 0
    bool ab_positive = false;  // A_s - B_s > 0 for every s
    bool verdict = false;
};

// Preconditions: g >= 3, p >= 2, j >= p, 1 <= h < C(p+g-2, g-1) (the value
// must lie below the growth target for the question to be live).
// Violations throw std::invalid_argument; a failed chain on admissible
// input is reported through verdict = false, never thrown. When the
// hypothesis flags hold as well, a valid chain contradicts the assumption
// that h can grow to C(g+p-2, g-1) in one step.
Certificate certificate(int g, int p, int j, const Integer& h);

struct NodeLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EnumerateOptions {
    std::uint64_t node_limit = 50'000'000;
};

// Yields every symmetric O-sequence with h_0 = 1, h_1 = g, initial degree
// exactly p and socle degree <= sigma_max. The ascending half is generated
// with growth-bound pruning and mirrored; each candidate is validated in
// full before being yielded. Throws NodeLimitError when the search exceeds
// the configured node budget.
void enumerate_symmetric_osequences(int g, int p, int sigma_max,
                                    const std::function<void(const HVector&)>& yield,
                                    const EnumerateOptions& options = {});

std::vector<HVector> collect_symmetric_osequences(int g, int p, int sigma_max,
                                                  const EnumerateOptions& options = {});

struct MonotonicScanResult {
    bool monotonic = true;
    // first (h, j) with macaulay_bound(h, j+1) > macaulay_bound(h, j)
    std::optional<std::pair<Integer, int>> counterexample;
};

// Scans macaulay_bound(h, j+1) <= macaulay_bound(h, j) for 1 <= h <= h_max
// and j_min <= j < j_max. The monotonicity itself is an unproven
// observation; this op tests it, it never assumes it.
MonotonicScanResult growth_monotonic_scan(const Integer& h_max, int j_min, int j_max);

} // namespace gorbetti
