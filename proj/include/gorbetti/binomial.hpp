#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gorbetti/integers.hpp"

namespace gorbetti {

// Exact C(n, k). Returns 0 when k > n; negative arguments are rejected.
Integer binom(const Integer& n, unsigned long k);
Integer binom(const Integer& n, const Integer& k);
Integer binom(long n, long k);

struct MacaulayTerm {
    Integer top;   // a_l
    int index = 0; // l
    bool operator==(const MacaulayTerm&) const = default;
};

// The unique expansion h = C(a_j, j) + C(a_{j-1}, j-1) + ... + C(a_i, i)
// with a_j > a_{j-1} > ... > a_i >= i >= 1. Terms are ordered from index j
// down to the least index i.
struct MacaulayRep {
    Integer value;
    int degree = 0; // j
    std::vector<MacaulayTerm> terms;

    int min_index() const { return terms.back().index; }
    Integer reconstruct() const;
};

MacaulayRep macaulay_rep(const Integer& h, int degree);

// Maximal admissible successor of h at degree j in an O-sequence:
// sum of C(a_l + 1, l + 1) over the terms of macaulay_rep(h, j).
// macaulay_bound(0, j) = 0.
Integer macaulay_bound(const Integer& h, int degree);

// One maximal run of consecutive indices of a MacaulayRep sharing the same
// difference a_l - l. The run covers indices top_index down to bottom_index.
struct MacaulayGroup {
    Integer diff;     // common a_l - l within the run
    int top_index;    // largest index of the run
    int bottom_index; // smallest index of the run

    int length_minus_one() const { return top_index - bottom_index; }
    // Hockey-stick form of the run's contribution:
    // C(top + diff + 1, top) - C(bottom + diff, bottom - 1).
    Integer contribution() const;
    bool operator==(const MacaulayGroup&) const = default;
};

struct GroupedRep {
    MacaulayRep source;
    std::vector<MacaulayGroup> groups; // diffs strictly decreasing

    Integer reconstruct() const;
};

GroupedRep grouped_rep(const MacaulayRep& rep);

struct OSequenceViolation {
    int position;        // index of the offending entry
    Integer value;       // the entry found there
    Integer max_allowed; // what the growth bound (or the zero tail) permits
};

// A sequence is an O-sequence iff h_0 = 1, entries after a zero stay zero,
// and h_{j+1} <= macaulay_bound(h_j, j) for every j >= 1. The step at j = 0
// is unconstrained. Entries must be non-negative.
std::optional<OSequenceViolation> o_sequence_violation(std::span<const Integer> h);
bool is_o_sequence(std::span<const Integer> h);

} // namespace gorbetti
