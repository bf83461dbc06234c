#include "gorbetti/binomial.hpp"

#include <climits>
#include <stdexcept>

namespace gorbetti {

Integer binom(const Integer& n, unsigned long k) {
    if (n < 0)
        throw std::invalid_argument("binom: n must be non-negative");
    if (n < k)
        return 0;
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

Integer binom(const Integer& n, const Integer& k) {
    if (k < 0)
        throw std::invalid_argument("binom: k must be non-negative");
    if (n >= 0 && k > n)
        return 0;
    if (!k.fits_ulong_p())
        throw std::overflow_error("binom: k out of supported range");
    return binom(n, k.get_ui());
}

Integer binom(long n, long k) {
    if (n < 0 || k < 0)
        throw std::invalid_argument("binom: arguments must be non-negative");
    if (k > n)
        return 0;
    return binom(Integer(n), static_cast<unsigned long>(k));
}

Integer MacaulayRep::reconstruct() const {
    Integer sum = 0;
    for (const auto& t : terms)
        sum += binom(t.top, static_cast<unsigned long>(t.index));
    return sum;
}

namespace {

// Largest a >= idx with C(a, idx) <= target, for target >= 1.
Integer largest_top(const Integer& target, int idx) {
    if (idx == 1)
        return target; // C(a, 1) = a
    const auto l = static_cast<unsigned long>(idx);
    Integer lo = idx; // C(idx, idx) = 1 <= target
    Integer step = 1;
    while (binom(lo + step, l) <= target) {
        lo += step;
        step *= 2;
    }
    Integer hi = lo + step; // C(hi, idx) > target
    while (hi - lo > 1) {
        Integer mid = (lo + hi) / 2;
        if (binom(mid, l) <= target)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

} // namespace

MacaulayRep macaulay_rep(const Integer& h, int degree) {
    if (h < 1)
        throw std::invalid_argument("macaulay_rep: h must be positive");
    if (degree < 1)
        throw std::invalid_argument("macaulay_rep: degree must be positive");
    MacaulayRep rep{h, degree, {}};
    Integer rest = h;
    int l = degree;
    while (rest > 0) {
        // l never reaches 0: at l = 1 the remainder is consumed whole.
        Integer a = largest_top(rest, l);
        rest -= binom(a, static_cast<unsigned long>(l));
        rep.terms.push_back({std::move(a), l});
        --l;
    }
    return rep;
}

Integer macaulay_bound(const Integer& h, int degree) {
    if (h < 0)
        throw std::invalid_argument("macaulay_bound: h must be non-negative");
    if (degree < 1)
        throw std::invalid_argument("macaulay_bound: degree must be positive");
    if (h == 0)
        return 0;
    Integer sum = 0;
    for (const auto& t : macaulay_rep(h, degree).terms)
        sum += binom(t.top + 1, static_cast<unsigned long>(t.index) + 1);
    return sum;
}

Integer MacaulayGroup::contribution() const {
    return binom(Integer(top_index) + diff + 1, static_cast<unsigned long>(top_index)) -
           binom(Integer(bottom_index) + diff, static_cast<unsigned long>(bottom_index - 1));
}

Integer GroupedRep::reconstruct() const {
    Integer sum = 0;
    for (const auto& g : groups)
        sum += g.contribution();
    return sum;
}

GroupedRep grouped_rep(const MacaulayRep& rep) {
    GroupedRep out{rep, {}};
    for (const auto& t : rep.terms) {
        Integer diff = t.top - t.index;
        if (!out.groups.empty() && out.groups.back().diff == diff &&
            out.groups.back().bottom_index == t.index + 1) {
            out.groups.back().bottom_index = t.index;
        } else {
            out.groups.push_back({std::move(diff), t.index, t.index});
        }
    }
    return out;
}

std::optional<OSequenceViolation> o_sequence_violation(std::span<const Integer> h) {
    if (h.empty())
        throw std::invalid_argument("o_sequence_violation: empty sequence");
    for (const auto& v : h)
        if (v < 0)
            throw std::invalid_argument("o_sequence_violation: negative entry");
    if (h[0] != 1)
        return OSequenceViolation{0, h[0], 1};
    for (std::size_t j = 1; j + 1 < h.size(); ++j) {
        if (h[j] == 0) {
            // an artinian Hilbert function stays zero once it vanishes
            if (h[j + 1] != 0)
                return OSequenceViolation{static_cast<int>(j + 1), h[j + 1], 0};
            continue;
        }
        Integer bound = macaulay_bound(h[j], static_cast<int>(j));
        if (h[j + 1] > bound)
            return OSequenceViolation{static_cast<int>(j + 1), h[j + 1], bound};
    }
    return std::nullopt;
}

bool is_o_sequence(std::span<const Integer> h) {
    return !o_sequence_violation(h).has_value();
}

} // namespace gorbetti
