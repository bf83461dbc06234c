#include "gorbetti/hvector.hpp"

#include <algorithm>
#include <stdexcept>

namespace gorbetti {

namespace {

void check_hypotheses(int g, int p, const char* who) {
    if (g < 3)
        throw std::invalid_argument(std::string(who) + ": requires codimension g >= 3");
    if (p < 2)
        throw std::invalid_argument(std::string(who) + ": requires initial degree p >= 2");
}

} // namespace

HVector HVector::from_entries(std::vector<Integer> entries) {
    while (!entries.empty() && entries.back() == 0)
        entries.pop_back();
    if (entries.empty())
        throw std::invalid_argument("HVector: empty h-vector");
    if (entries[0] != 1)
        throw std::invalid_argument("HVector: h_0 must be 1");
    for (const auto& e : entries)
        if (e <= 0)
            throw std::invalid_argument("HVector: entries must be positive");
    return HVector{std::move(entries)};
}

const Integer& HVector::at(int d) const {
    static const Integer zero = 0;
    if (d < 0 || d >= static_cast<int>(entries.size()))
        return zero;
    return entries[static_cast<std::size_t>(d)];
}

Integer HVector::multiplicity() const {
    Integer sum = 0;
    for (const auto& e : entries)
        sum += e;
    return sum;
}

HProfile profile(const HVector& h) {
    const int sigma = h.socle_degree();
    if (sigma < 1)
        throw std::invalid_argument("profile: codimension undefined for h-vector of length 1");
    if (!is_o_sequence(h.entries))
        throw std::invalid_argument("profile: not an O-sequence");
    HProfile out;
    out.g = h.entries[1];
    out.sigma = sigma;

    int p = 1;
    while (h.at(p) >= binom(out.g + p - 1, static_cast<unsigned long>(p)))
        ++p; // terminates: h.at(sigma+1) = 0 < C(g+sigma, sigma+1)
    out.p = p;
    out.nu_p = binom(out.g + p - 1, out.g - 1) - h.at(p);

    out.symmetric = true;
    for (int d = 0; d <= sigma; ++d)
        if (h.at(d) != h.at(sigma - d)) {
            out.symmetric = false;
            break;
        }

    out.unimodal = true;
    bool descended = false;
    for (int d = 0; d < sigma; ++d) {
        if (h.at(d + 1) < h.at(d))
            descended = true;
        else if (h.at(d + 1) > h.at(d) && descended) {
            out.unimodal = false;
            break;
        }
    }
    return out;
}

Integer nu0(int g, int p) {
    check_hypotheses(g, p, "nu0");
    return binom(Integer(p) + g - 1, static_cast<unsigned long>(g - 1)) -
           binom(Integer(p) + g - 3, static_cast<unsigned long>(g - 1));
}

Integer extremal_multiplicity(int g, int p) {
    check_hypotheses(g, p, "extremal_multiplicity");
    return binom(Integer(g) + p - 1, static_cast<unsigned long>(g)) +
           binom(Integer(g) + p - 2, static_cast<unsigned long>(g));
}

HVector extremal_hvector(int g, int p) {
    check_hypotheses(g, p, "extremal_hvector");
    const int sigma = 2 * p - 2;
    std::vector<Integer> entries(static_cast<std::size_t>(sigma) + 1);
    for (int d = 0; d <= p - 1; ++d)
        entries[static_cast<std::size_t>(d)] =
            binom(Integer(g) - 1 + d, static_cast<unsigned long>(d));
    for (int d = p; d <= sigma; ++d)
        entries[static_cast<std::size_t>(d)] = entries[static_cast<std::size_t>(sigma - d)];
    return HVector::from_entries(std::move(entries));
}

std::vector<int> extremal_degree_sequence(int g, int p) {
    check_hypotheses(g, p, "extremal_degree_sequence");
    std::vector<int> degrees;
    degrees.push_back(0);
    for (int i = 0; i <= g - 2; ++i)
        degrees.push_back(p + i);
    degrees.push_back(2 * p + g - 2);
    return degrees;
}

std::vector<Integer> pure_resolution_betti(const std::vector<int>& degrees) {
    if (degrees.size() < 2 || degrees[0] != 0)
        throw std::invalid_argument("pure_resolution_betti: degree sequence must start at 0");
    for (std::size_t i = 1; i < degrees.size(); ++i)
        if (degrees[i] <= degrees[i - 1])
            throw std::invalid_argument("pure_resolution_betti: degrees must strictly increase");
    const std::size_t c = degrees.size() - 1;
    std::vector<Integer> betti;
    betti.emplace_back(1);
    for (std::size_t i = 1; i <= c; ++i) {
        Rational prod = 1;
        for (std::size_t j = 1; j <= c; ++j) {
            if (j == i)
                continue;
            Rational factor(degrees[j], degrees[j] - degrees[i]);
            factor.canonicalize();
            prod *= abs(factor);
        }
        if (prod.get_den() != 1)
            throw std::domain_error(
                "degree sequence admits no pure resolution with integer ranks");
        betti.push_back(prod.get_num());
    }
    return betti;
}

ForbiddenNuReport forbidden_nu(int g, int p) {
    check_hypotheses(g, p, "forbidden_nu");
    ForbiddenNuReport report;
    report.nu0 = nu0(g, p);
    const Integer dim_rp = binom(Integer(p) + g - 1, static_cast<unsigned long>(g - 1));
    const Integer target = binom(Integer(p) + g - 2, static_cast<unsigned long>(g - 1)); // h_{p-1}
    const Integer j_cap = Integer(p) + 2 * dim_rp;

    for (Integer nu = 1; nu <= report.nu0; ++nu) {
        if (nu == report.nu0)
            continue; // extremal case: sigma = 2p-2, no growth step is needed
        const Integer h = dim_rp - nu;
        bool can_grow = false;
        for (Integer j = p; j <= j_cap; ++j) {
            if (!j.fits_sint_p())
                throw std::overflow_error("forbidden_nu: scan degree out of range");
            Integer bound = macaulay_bound(h, static_cast<int>(j.get_si()));
            if (bound >= target) {
                can_grow = true;
                break;
            }
            if (bound <= h)
                break; // collapsed: the scan stops at the first such j
        }
        if (!can_grow)
            report.forbidden.push_back(nu);
        else if (h < target)
            report.nonunimodal_required.push_back(nu);
    }
    return report;
}

Certificate certificate(int g, int p, int j, const Integer& h) {
    check_hypotheses(g, p, "certificate");
    if (j < p)
        throw std::invalid_argument("certificate: requires j >= p");
    if (h < 1)
        throw std::invalid_argument("certificate: requires h >= 1");
    if (h >= binom(Integer(p) + g - 2, static_cast<unsigned long>(g - 1)))
        throw std::invalid_argument(
            "certificate: h must lie below the growth target C(p+g-2, g-1)");

    Certificate cert;
    cert.g = g;
    cert.p = p;
    cert.j = j;
    cert.h = h;

    if (h <= j) {
        // all expansion tops equal their index, so the bound equals h and the
        // required growth to C(g+p-2, g-1) > h is impossible outright
        cert.trivial = true;
        cert.verdict = true;
        return cert;
    }

    cert.grouped = grouped_rep(macaulay_rep(h, j));
    const auto& groups = cert.grouped.groups;
    const std::size_t r = groups.size() - 1;

    cert.k = groups[0].diff;
    cert.k_in_range = cert.k <= g - 2;
    // (g-1)/(p-1) > (k+1)/(j+1) as an exact cross-multiplied comparison
    cert.ratio_ok = Integer(g - 1) * (j + 1) > (cert.k + 1) * (p - 1);

    auto top_binom = [](const MacaulayGroup& grp) {
        return binom(Integer(grp.top_index) + grp.diff + 1,
                     static_cast<unsigned long>(grp.top_index));
    };
    auto bottom_binom = [](const MacaulayGroup& grp) {
        return binom(Integer(grp.bottom_index) + grp.diff,
                     static_cast<unsigned long>(grp.bottom_index - 1));
    };
    auto head_ratio = [](const MacaulayGroup& grp) {
        Rational q(grp.diff + 1, Integer(grp.top_index) + 1);
        q.canonicalize();
        return q;
    };

    for (std::size_t s = 0; s <= r; ++s) {
        const Rational lead = head_ratio(groups[s]);
        Rational fs = 0;
        for (std::size_t n = s; n <= r; ++n) {
            fs += (lead - head_ratio(groups[n])) * Rational(top_binom(groups[n]));
            Rational tail(groups[n].diff + 1, Integer(groups[n].bottom_index));
            tail.canonicalize();
            fs += (tail - lead) * Rational(bottom_binom(groups[n]));
        }
        cert.f.push_back(fs);
    }

    for (std::size_t s = 0; s < r; ++s) {
        Integer a = 0, b = 0;
        for (std::size_t n = s + 1; n <= r; ++n) {
            a += top_binom(groups[n]);
            b += bottom_binom(groups[n]);
        }
        cert.a_sums.emplace_back(a);
        cert.b_sums.emplace_back(b);
    }

    const auto& last = groups[r];
    Rational lo(last.diff + 1, Integer(last.bottom_index));
    lo.canonicalize();
    cert.f_last_closed = (lo - head_ratio(last)) * Rational(bottom_binom(last));

    cert.chain_strict = true;
    for (std::size_t s = 0; s + 1 < cert.f.size(); ++s)
        if (!(cert.f[s] > cert.f[s + 1])) {
            cert.chain_strict = false;
            break;
        }
    cert.positive = cert.f.back() > 0;
    cert.ab_positive = true;
    for (std::size_t s = 0; s < r; ++s)
        if (!(cert.a_sums[s] - cert.b_sums[s] > 0)) {
            cert.ab_positive = false;
            break;
        }

    // the verdict records validity of the chain itself; the hypothesis flags
    // say when the chain contradicts the growth requirement
    cert.verdict = cert.chain_strict && cert.positive && cert.ab_positive &&
                   cert.f.back() == cert.f_last_closed;
    return cert;
}

namespace {

struct Enumerator {
    int g, p, sigma;
    Integer h_p_cap; // exclusive upper bound for h_p (initial degree exactly p)
    const std::function<void(const HVector&)>* yield;
    std::uint64_t* nodes;
    std::uint64_t node_limit;
    std::vector<Integer> half; // entries 0..floor(sigma/2)

    void emit() {
        std::vector<Integer> full(static_cast<std::size_t>(sigma) + 1);
        const int mid = sigma / 2;
        for (int d = 0; d <= mid; ++d) {
            full[static_cast<std::size_t>(d)] = half[static_cast<std::size_t>(d)];
            full[static_cast<std::size_t>(sigma - d)] = half[static_cast<std::size_t>(d)];
        }
        if (!is_o_sequence(full))
            return;
        (*yield)(HVector::from_entries(std::move(full)));
    }

    void extend(int d) {
        const int mid = sigma / 2;
        if (d > mid) {
            emit();
            return;
        }
        const Integer bound = macaulay_bound(half[static_cast<std::size_t>(d - 1)], d - 1);
        Integer hi = bound;
        if (d == p && hi >= h_p_cap)
            hi = h_p_cap - 1;
        for (Integer v = 1; v <= hi; ++v) {
            if (++*nodes > node_limit)
                throw NodeLimitError("enumerate_symmetric_osequences: node limit exceeded");
            half[static_cast<std::size_t>(d)] = v;
            extend(d + 1);
        }
    }
};

} // namespace

void enumerate_symmetric_osequences(int g, int p, int sigma_max,
                                    const std::function<void(const HVector&)>& yield,
                                    const EnumerateOptions& options) {
    check_hypotheses(g, p, "enumerate_symmetric_osequences");
    if (sigma_max < 1)
        throw std::invalid_argument("enumerate_symmetric_osequences: sigma_max must be >= 1");

    std::uint64_t nodes = 0;
    // symmetry plus a forced full head below degree p pins sigma >= 2p-2
    for (int sigma = 2 * p - 2; sigma <= sigma_max; ++sigma) {
        const int mid = sigma / 2;
        Enumerator e;
        e.g = g;
        e.p = p;
        e.sigma = sigma;
        e.h_p_cap = binom(Integer(g) + p - 1, static_cast<unsigned long>(p));
        e.yield = &yield;
        e.nodes = &nodes;
        e.node_limit = options.node_limit;
        e.half.resize(static_cast<std::size_t>(mid) + 1);
        bool head_fits = true;
        for (int d = 0; d <= std::min(mid, p - 1); ++d)
            e.half[static_cast<std::size_t>(d)] =
                binom(Integer(g) - 1 + d, static_cast<unsigned long>(d));
        if (mid < p - 1)
            head_fits = false; // cannot happen for sigma >= 2p-2, kept as a guard
        if (!head_fits)
            continue;
        if (p > mid)
            e.emit(); // no free positions: the mirrored head is the candidate
        else
            e.extend(p);
    }
}

std::vector<HVector> collect_symmetric_osequences(int g, int p, int sigma_max,
                                                  const EnumerateOptions& options) {
    std::vector<HVector> out;
    enumerate_symmetric_osequences(
        g, p, sigma_max, [&](const HVector& h) { out.push_back(h); }, options);
    return out;
}

MonotonicScanResult growth_monotonic_scan(const Integer& h_max, int j_min, int j_max) {
    if (h_max < 1 || j_min < 1 || j_max < j_min)
        throw std::invalid_argument("growth_monotonic_scan: bounds must be positive and ordered");
    MonotonicScanResult result;
    for (Integer h = 1; h <= h_max; ++h) {
        Integer prev = macaulay_bound(h, j_min);
        for (int j = j_min + 1; j <= j_max; ++j) {
            Integer cur = macaulay_bound(h, j);
            if (cur > prev) {
                result.monotonic = false;
                result.counterexample = {h, j - 1};
                return result;
            }
            prev = std::move(cur);
        }
    }
    return result;
}

} // namespace gorbetti
