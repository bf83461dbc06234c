#include "gorbetti/pfaffian.hpp"

#include <random>

namespace gorbetti {

std::vector<DegreeProfile> default_profiles() {
    auto uniform = [](const std::string& label, int nu, int m, int n) {
        return DegreeProfile{label, nu, std::vector<int>(static_cast<std::size_t>(nu), m),
                             std::vector<int>(static_cast<std::size_t>(nu), n)};
    };
    std::vector<DegreeProfile> out;
    out.push_back(uniform("nu3_quadric_entries", 3, 2, 0));
    out.push_back(uniform("nu3_cubic_entries", 3, 3, 0));
    out.push_back(uniform("nu5_linear_entries", 5, 2, 1));
    out.push_back(uniform("nu5_quadric_entries", 5, 4, 2));
    out.push_back(DegreeProfile{"nu5_mixed", 5, {2, 2, 3, 3, 3}, {2, 2, 1, 1, 1}});
    out.push_back(uniform("nu7_linear_entries", 7, 2, 1));
    out.push_back(DegreeProfile{"nu7_mixed", 7, {2, 2, 2, 3, 3, 3, 3}, {2, 2, 2, 1, 1, 1, 1}});
    out.push_back(uniform("nu9_linear_entries", 9, 2, 1));
    return out;
}

AlternatingMatrix<PrimeField> random_alternating(const DegreeProfile& profile,
                                                 const PolyRing<PrimeField>& ring,
                                                 std::uint64_t seed) {
    if (profile.nu < 1 || profile.nu > 31)
        throw std::invalid_argument("random_alternating: unsupported size");
    std::mt19937_64 rng(seed);
    const std::uint32_t q = ring.field.modulus();

    std::vector<std::vector<Polynomial<PrimeField>>> upper(
        static_cast<std::size_t>(profile.nu),
        std::vector<Polynomial<PrimeField>>(static_cast<std::size_t>(profile.nu),
                                            Polynomial<PrimeField>::zero(ring)));
    for (int i = 0; i < profile.nu; ++i) {
        for (int j = i + 1; j < profile.nu; ++j) {
            const int d = profile.m[static_cast<std::size_t>(i)] -
                          profile.n[static_cast<std::size_t>(j)];
            if (d <= 0)
                continue;
            Polynomial<PrimeField> e(ring);
            for (const auto& mon : monomial_basis(ring.nvars, d))
                e.add_term(mon, static_cast<PrimeField::Elem>(rng() % q));
            upper[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(e);
        }
    }
    return AlternatingMatrix<PrimeField>::from_upper(ring, profile.m, profile.n, upper);
}

ExperimentReport codim3_experiment(int trials, const std::vector<DegreeProfile>& profiles,
                                   std::uint64_t seed, std::uint32_t modulus) {
    if (trials < 1)
        throw std::invalid_argument("codim3_experiment: trials must be positive");
    if (profiles.empty())
        throw std::invalid_argument("codim3_experiment: no profiles");
    for (const auto& prof : profiles)
        if (prof.nu % 2 != 1 || prof.nu < 3 || prof.nu > 9)
            throw std::invalid_argument("codim3_experiment: profiles must have odd nu in 3..9");

    const PolyRing<PrimeField> ring{3, PrimeField(modulus)};
    ExperimentReport report;
    report.trials = trials;

    for (int t = 0; t < trials; ++t) {
        const auto& prof = profiles[static_cast<std::size_t>(t) % profiles.size()];
        TrialRecord rec;
        rec.index = t;
        rec.profile = prof.label;

        // independent per-trial streams from the base seed
        const std::uint64_t trial_seed = seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(t);
        auto matrix = random_alternating(prof, ring, trial_seed);
        auto gens = maximal_pfaffians(matrix);

        bool zero_pfaffian = false;
        for (const auto& f : gens)
            if (f.is_zero())
                zero_pfaffian = true;
        if (zero_pfaffian) {
            rec.status = "skipped: vanishing maximal pfaffian";
            ++report.skipped;
            report.records.push_back(std::move(rec));
            continue;
        }

        IdealBasis<PrimeField> ideal(ring, std::move(gens));
        std::vector<int> degs;
        for (const auto& g : ideal.gens)
            degs.push_back(g.degree());
        const int cap = default_socle_cap(degs);
        auto chk = artinian_check(ideal, cap);
        if (!chk.artinian) {
            rec.status = "skipped: quotient not artinian (height < 3)";
            ++report.skipped;
            report.records.push_back(std::move(rec));
            continue;
        }

        auto mingens = minimal_generators_by_degree(ideal, chk.socle_degree + 1);
        rec.p = mingens.empty() ? 0 : mingens.begin()->first;
        for (const auto& [d, c] : mingens)
            rec.nu += c;
        auto table = koszul_betti(ideal);
        rec.betti_totals = table.totals();

        const bool ok = rec.nu <= 2 * rec.p + 1 && rec.betti_totals[2] <= 2 * rec.p + 1 &&
                        rec.betti_totals[3] == 1;
        rec.status = ok ? "ok" : "violation";
        if (ok)
            ++report.completed;
        else
            ++report.violations;
        report.records.push_back(std::move(rec));
    }
    return report;
}

nlohmann::json experiment_to_json(const ExperimentReport& report) {
    nlohmann::json trials = nlohmann::json::array();
    for (const auto& rec : report.records) {
        nlohmann::json t{{"index", rec.index},
                         {"profile", rec.profile},
                         {"status", rec.status}};
        if (rec.status == "ok" || rec.status == "violation") {
            t["p"] = rec.p;
            t["nu"] = rec.nu;
            t["betti_totals"] = rec.betti_totals;
        }
        trials.push_back(std::move(t));
    }
    return {{"trials", trials},
            {"summary",
             {{"trials", report.trials},
              {"completed", report.completed},
              {"skipped", report.skipped},
              {"violations", report.violations}}}};
}

} // namespace gorbetti
