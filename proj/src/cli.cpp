#include "gorbetti/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gorbetti/betti.hpp"
#include "gorbetti/example1_data.hpp"
#include "gorbetti/hvector.hpp"
#include "gorbetti/ideal_io.hpp"
#include "gorbetti/pfaffian.hpp"

namespace gorbetti {

namespace {

using nlohmann::json;

constexpr std::uint32_t kDefaultModulus = 32003;

// reproduction/report failures: exit status 1
struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Integer parse_integer_arg(const std::string& s, const char* what) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(
                         static_cast<unsigned char>(c)); }))
        throw std::invalid_argument(std::string(what) + " must be a non-negative integer, got '" +
                                    s + "'");
    return Integer(s);
}

template <class Range>
std::string join(const Range& values, const char* sep = " ") {
    std::ostringstream out;
    bool first = true;
    for (const auto& v : values) {
        if (!first)
            out << sep;
        first = false;
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Integer>)
            out << v.get_str();
        else
            out << v;
    }
    return out.str();
}

json integers_to_json(const std::vector<Integer>& values) {
    json out = json::array();
    for (const auto& v : values)
        out.push_back(v.get_str());
    return out;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

struct GlobalOptions {
    bool json_output = false;
    std::uint32_t field_char = kDefaultModulus;
    bool field_overridden = false;
};

void emit(std::ostream& out, const GlobalOptions& opts, const json& machine,
          const std::string& human) {
    if (opts.json_output)
        out << machine.dump(2) << '\n';
    else
        out << human;
}

// ---------------------------------------------------------------- macaulay

int cmd_macaulay_rep(std::ostream& out, const GlobalOptions& opts, const std::string& h_arg,
                     int degree) {
    const Integer h = parse_integer_arg(h_arg, "H");
    auto rep = macaulay_rep(h, degree);
    auto grouped = grouped_rep(rep);

    std::ostringstream human;
    human << rep.value.get_str() << " =";
    bool first = true;
    for (const auto& t : rep.terms) {
        human << (first ? " " : " + ") << "C(" << t.top.get_str() << "," << t.index << ")";
        first = false;
    }
    human << '\n' << "groups:";
    for (const auto& g : grouped.groups)
        human << " (k=" << g.diff.get_str() << ", j=" << g.top_index
              << ", i=" << g.length_minus_one() << ")";
    human << '\n';

    json jterms = json::array(), jgroups = json::array();
    for (const auto& t : rep.terms)
        jterms.push_back({{"top", t.top.get_str()}, {"index", t.index}});
    for (const auto& g : grouped.groups)
        jgroups.push_back(
            {{"k", g.diff.get_str()}, {"j", g.top_index}, {"i", g.length_minus_one()}});
    emit(out, opts,
         {{"value", rep.value.get_str()}, {"degree", rep.degree}, {"terms", jterms},
          {"groups", jgroups}},
         human.str());
    return 0;
}

int cmd_macaulay_bound(std::ostream& out, const GlobalOptions& opts, const std::string& h_arg,
                       int degree) {
    const Integer h = parse_integer_arg(h_arg, "H");
    const Integer bound = macaulay_bound(h, degree);
    emit(out, opts,
         {{"h", h.get_str()}, {"degree", degree}, {"bound", bound.get_str()}},
         bound.get_str() + "\n");
    return 0;
}

// --------------------------------------------------------------- osequence

int cmd_osequence_check(std::ostream& out, const GlobalOptions& opts,
                        const std::vector<std::string>& entry_args, const std::string& file) {
    std::vector<Integer> entries;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in.good())
            throw std::invalid_argument("cannot open '" + file + "'");
        std::string tok;
        while (in >> tok)
            entries.push_back(parse_integer_arg(tok, "sequence entry"));
    }
    for (const auto& a : entry_args)
        entries.push_back(parse_integer_arg(a, "sequence entry"));
    if (entries.empty())
        throw std::invalid_argument("osequence check: no entries given");

    auto violation = o_sequence_violation(entries);
    json jv = nullptr;
    std::ostringstream human;
    if (violation) {
        jv = {{"position", violation->position},
              {"value", violation->value.get_str()},
              {"max_allowed", violation->max_allowed.get_str()}};
        human << "false: entry " << violation->value.get_str() << " at position "
              << violation->position << " exceeds " << violation->max_allowed.get_str() << '\n';
    } else {
        human << "true\n";
    }
    emit(out, opts,
         {{"sequence", integers_to_json(entries)}, {"o_sequence", !violation},
          {"violation", jv}},
         human.str());
    return 0;
}

// -------------------------------------------------------------- gorenstein

int cmd_nu0(std::ostream& out, const GlobalOptions& opts, int g, int p) {
    const Integer v = nu0(g, p);
    emit(out, opts, {{"g", g}, {"p", p}, {"nu0", v.get_str()}}, v.get_str() + "\n");
    return 0;
}

int cmd_extremal(std::ostream& out, const GlobalOptions& opts, int g, int p) {
    auto h = extremal_hvector(g, p);
    auto degs = extremal_degree_sequence(g, p);
    auto betti = pure_resolution_betti(degs);
    const Integer mult = extremal_multiplicity(g, p);

    std::ostringstream human;
    human << "h-vector: " << join(h.entries) << '\n'
          << "multiplicity: " << mult.get_str() << '\n'
          << "degree sequence: " << join(degs) << '\n'
          << "betti numbers: " << join(betti) << '\n';
    emit(out, opts,
         {{"g", g},
          {"p", p},
          {"h_vector", integers_to_json(h.entries)},
          {"multiplicity", mult.get_str()},
          {"degree_sequence", degs},
          {"betti", integers_to_json(betti)}},
         human.str());
    return 0;
}

int cmd_forbidden(std::ostream& out, const GlobalOptions& opts, int g, int p) {
    auto rep = forbidden_nu(g, p);
    std::ostringstream human;
    human << "nu0: " << rep.nu0.get_str() << '\n';
    human << "forbidden: " << (rep.forbidden.empty() ? "(none)" : join(rep.forbidden)) << '\n';
    human << "nonunimodal_required: "
          << (rep.nonunimodal_required.empty() ? "(none)" : join(rep.nonunimodal_required))
          << '\n';
    emit(out, opts,
         {{"g", g},
          {"p", p},
          {"nu0", rep.nu0.get_str()},
          {"forbidden", integers_to_json(rep.forbidden)},
          {"nonunimodal_required", integers_to_json(rep.nonunimodal_required)}},
         human.str());
    return 0;
}

int cmd_enumerate(std::ostream& out, const GlobalOptions& opts, int g, int p, int sigma_max,
                  std::uint64_t node_limit) {
    EnumerateOptions eopts;
    if (node_limit > 0)
        eopts.node_limit = node_limit;
    auto vectors = collect_symmetric_osequences(g, p, sigma_max, eopts);

    const Integer bound = nu0(g, p);
    const Integer e_min = extremal_multiplicity(g, p);
    Integer max_nu = 0, min_mult = -1;
    json jvectors = json::array();
    std::ostringstream human;
    for (const auto& h : vectors) {
        auto prof = profile(h);
        max_nu = std::max(max_nu, prof.nu_p);
        Integer mult = h.multiplicity();
        if (min_mult < 0 || mult < min_mult)
            min_mult = mult;
        human << join(h.entries) << '\n';
        jvectors.push_back({{"entries", integers_to_json(h.entries)},
                            {"sigma", prof.sigma},
                            {"nu_p", prof.nu_p.get_str()},
                            {"multiplicity", mult.get_str()},
                            {"unimodal", prof.unimodal}});
    }
    human << "count: " << vectors.size() << '\n'
          << "max nu_p: " << max_nu.get_str() << " (nu0 = " << bound.get_str() << ")\n"
          << "min multiplicity: " << (min_mult < 0 ? std::string("-") : min_mult.get_str())
          << " (e(g,p) = " << e_min.get_str() << ")\n";
    emit(out, opts,
         {{"g", g},
          {"p", p},
          {"sigma_max", sigma_max},
          {"count", vectors.size()},
          {"nu0", bound.get_str()},
          {"extremal_multiplicity", e_min.get_str()},
          {"vectors", jvectors}},
         human.str());
    return 0;
}

int cmd_certificate(std::ostream& out, const GlobalOptions& opts, int g, int p, int j,
                    const std::string& h_arg) {
    const Integer h = parse_integer_arg(h_arg, "H");
    auto cert = certificate(g, p, j, h);

    std::ostringstream human;
    json jcert{{"g", g}, {"p", p}, {"j", j}, {"h", h.get_str()}, {"trivial", cert.trivial},
               {"verdict", cert.verdict}};
    if (cert.trivial) {
        human << "trivial: h <= j, the bound collapses to h and growth is impossible\n";
    } else {
        human << "groups:";
        for (const auto& grp : cert.grouped.groups)
            human << " (k=" << grp.diff.get_str() << ", j=" << grp.top_index
                  << ", i=" << grp.length_minus_one() << ")";
        human << '\n';
        human << "k = " << cert.k.get_str() << ", k <= g-2: " << (cert.k_in_range ? "yes" : "no")
              << '\n';
        human << "(g-1)/(p-1) > (k+1)/(j+1): " << (cert.ratio_ok ? "yes" : "no") << '\n';
        human << "F:";
        for (const auto& f : cert.f)
            human << ' ' << rational_str(f);
        human << '\n';

        json jf = json::array(), ja = json::array(), jb = json::array();
        for (const auto& f : cert.f)
            jf.push_back(rational_str(f));
        for (const auto& a : cert.a_sums)
            ja.push_back(rational_str(a));
        for (const auto& b : cert.b_sums)
            jb.push_back(rational_str(b));
        json jgroups = json::array();
        for (const auto& grp : cert.grouped.groups)
            jgroups.push_back(
                {{"k", grp.diff.get_str()}, {"j", grp.top_index}, {"i", grp.length_minus_one()}});
        jcert["groups"] = jgroups;
        jcert["k"] = cert.k.get_str();
        jcert["k_in_range"] = cert.k_in_range;
        jcert["ratio_ok"] = cert.ratio_ok;
        jcert["f_values"] = jf;
        jcert["f_last_closed"] = rational_str(cert.f_last_closed);
        jcert["a_values"] = ja;
        jcert["b_values"] = jb;
        jcert["chain_strict"] = cert.chain_strict;
    }
    human << "verdict: " << (cert.verdict ? "true" : "false") << '\n';
    emit(out, opts, jcert, human.str());
    return 0;
}

int cmd_monotonic(std::ostream& out, const GlobalOptions& opts, const std::string& hmax_arg,
                  int j_min, int j_max) {
    const Integer h_max = parse_integer_arg(hmax_arg, "HMAX");
    auto res = growth_monotonic_scan(h_max, j_min, j_max);
    std::ostringstream human;
    json jres{{"h_max", h_max.get_str()}, {"j_min", j_min}, {"j_max", j_max},
              {"monotonic", res.monotonic}, {"counterexample", nullptr}};
    if (res.monotonic) {
        human << "monotonic: true\n";
    } else {
        human << "monotonic: false (bound(" << res.counterexample->first.get_str() << ", "
              << res.counterexample->second + 1 << ") > bound("
              << res.counterexample->first.get_str() << ", " << res.counterexample->second
              << "))\n";
        jres["counterexample"] = {{"h", res.counterexample->first.get_str()},
                                  {"j", res.counterexample->second}};
    }
    emit(out, opts, jres, human.str());
    return 0;
}

// ------------------------------------------------------------------- ideal

struct LoadedIdeal {
    IdealFile file;
    bool rational = false;
    std::uint32_t q = 0;
};

LoadedIdeal load_ideal_file(const std::string& path, const GlobalOptions& opts) {
    LoadedIdeal out;
    if (path == "example1") {
        out.file = parse_ideal_file_text(kExample1IdealText);
    } else {
        std::ifstream in(path);
        if (!in.good())
            throw std::invalid_argument("cannot open '" + path + "'");
        out.file = parse_ideal_file(in);
    }
    const std::uint32_t c = opts.field_overridden ? opts.field_char : out.file.characteristic;
    out.rational = c == 0;
    out.q = c;
    return out;
}

template <class Fn>
int with_loaded_ideal(const LoadedIdeal& loaded, Fn&& fn) {
    if (loaded.rational) {
        PolyRing<RationalField> ring{loaded.file.nvars, RationalField()};
        return fn(make_ideal(loaded.file, ring));
    }
    PolyRing<PrimeField> ring{loaded.file.nvars, PrimeField(loaded.q)};
    return fn(make_ideal(loaded.file, ring));
}

template <class K>
int socle_degree_or_throw(const IdealBasis<K>& ideal, const char* need_flag) {
    std::vector<int> degs;
    for (const auto& g : ideal.gens)
        degs.push_back(g.degree());
    auto chk = artinian_check(ideal, default_socle_cap(degs));
    if (!chk.artinian)
        throw std::invalid_argument(std::string("quotient is not artinian; pass ") + need_flag);
    return chk.socle_degree;
}

int cmd_ideal_hf(std::ostream& out, const GlobalOptions& opts, const std::string& path,
                 std::optional<int> dmax) {
    auto loaded = load_ideal_file(path, opts);
    return with_loaded_ideal(loaded, [&](const auto& ideal) {
        const int cap = dmax ? *dmax : socle_degree_or_throw(ideal, "--dmax") + 1;
        auto h = hilbert_function(ideal, cap);
        emit(out, opts,
             {{"nvars", loaded.file.nvars},
              {"char", loaded.rational ? 0 : static_cast<long>(loaded.q)},
              {"dmax", cap},
              {"h", h}},
             join(h) + "\n");
        return 0;
    });
}

int cmd_ideal_betti(std::ostream& out, const GlobalOptions& opts, const std::string& path,
                    std::optional<int> jmax) {
    auto loaded = load_ideal_file(path, opts);
    return with_loaded_ideal(loaded, [&](const auto& ideal) {
        auto table = koszul_betti(ideal, jmax);
        std::ostringstream human;
        human << render_diagram(table) << "totals: " << join(table.totals()) << '\n';
        json machine = betti_to_json(table);
        machine["char"] = loaded.rational ? 0 : static_cast<long>(loaded.q);
        emit(out, opts, machine, human.str());
        return 0;
    });
}

int cmd_ideal_mingens(std::ostream& out, const GlobalOptions& opts, const std::string& path,
                      std::optional<int> dmax) {
    auto loaded = load_ideal_file(path, opts);
    return with_loaded_ideal(loaded, [&](const auto& ideal) {
        const int cap = dmax ? *dmax : socle_degree_or_throw(ideal, "--dmax") + 1;
        auto counts = minimal_generators_by_degree(ideal, cap);
        long total = 0;
        std::ostringstream human;
        json by_degree = json::object();
        for (const auto& [d, c] : counts) {
            human << d << ": " << c << '\n';
            by_degree[std::to_string(d)] = c;
            total += c;
        }
        human << "total: " << total << '\n';
        emit(out, opts, {{"dmax", cap}, {"by_degree", by_degree}, {"total", total}},
             human.str());
        return 0;
    });
}

int cmd_ideal_colon(std::ostream& out, const GlobalOptions& opts, const std::string& path,
                    const std::string& by, std::optional<int> dmax) {
    auto loaded = load_ideal_file(path, opts);
    return with_loaded_ideal(loaded, [&](const auto& ideal) {
        auto f = parse_polynomial(by, ideal.ring);
        const int cap = dmax ? *dmax : socle_degree_or_throw(ideal, "--dmax") + 1;
        std::ostringstream human;
        json degrees = json::array();
        for (int d = 0; d <= cap; ++d) {
            auto basis = colon_degreewise(ideal, f, d);
            human << "degree " << d << " (dim " << basis.dim << ")";
            json jbasis = json::array();
            for (const auto& b : basis.basis) {
                human << "\n  " << b.str();
                jbasis.push_back(b.str());
            }
            human << '\n';
            degrees.push_back({{"d", d}, {"dim", basis.dim}, {"basis", jbasis}});
        }
        emit(out, opts, {{"by", f.str()}, {"dmax", cap}, {"degrees", degrees}}, human.str());
        return 0;
    });
}

// ---------------------------------------------------------------- pfaffian

int cmd_pfaffian_demo(std::ostream& out, const GlobalOptions& opts, int nu,
                      std::uint64_t seed) {
    if (nu < 3 || nu % 2 == 0 || nu > 9)
        throw std::invalid_argument("NU must be odd and between 3 and 9");
    const std::uint32_t q = opts.field_overridden && opts.field_char != 0 ? opts.field_char
                                                                          : kDefaultModulus;
    const PolyRing<PrimeField> ring{3, PrimeField(q)};
    DegreeProfile prof{"demo", nu, std::vector<int>(static_cast<std::size_t>(nu), 2),
                       std::vector<int>(static_cast<std::size_t>(nu), 1)};
    auto matrix = random_alternating(prof, ring, seed);
    auto gens = maximal_pfaffians(matrix);

    std::ostringstream human;
    human << "profile: nu = " << nu << ", m = " << join(prof.m) << ", n = " << join(prof.n)
          << ", entries linear over F_" << q << '\n';
    json jgens = json::array();
    human << "maximal pfaffians:\n";
    for (std::size_t t = 0; t < gens.size(); ++t) {
        human << "  f" << t + 1 << " = " << gens[t].str() << '\n';
        jgens.push_back(gens[t].str());
    }

    IdealBasis<PrimeField> ideal(ring, gens);
    auto chk = artinian_check(ideal, 3 * nu);
    json machine{{"nu", nu}, {"seed", seed}, {"modulus", q}, {"generators", jgens}};
    if (!chk.artinian) {
        human << "quotient not artinian for this draw; rerun with another --seed\n";
        machine["artinian"] = false;
        emit(out, opts, machine, human.str());
        return 0;
    }
    auto h = hilbert_function(ideal, chk.socle_degree + 1);
    auto counts = minimal_generators_by_degree(ideal, chk.socle_degree + 1);
    const int p = counts.empty() ? 0 : counts.begin()->first;
    long nu_total = 0;
    for (const auto& [d, c] : counts)
        nu_total += c;
    auto table = koszul_betti(ideal);

    human << "h-vector: " << join(h) << '\n';
    human << "p = " << p << ", nu(I) = " << nu_total << ", bound 2p+1 = " << 2 * p + 1 << '\n';
    human << "betti totals: " << join(table.totals()) << '\n';
    machine["artinian"] = true;
    machine["h"] = h;
    machine["p"] = p;
    machine["nu_ideal"] = nu_total;
    machine["betti_totals"] = table.totals();
    emit(out, opts, machine, human.str());
    return 0;
}

int cmd_pfaffian_experiment(std::ostream& out, const GlobalOptions& opts, int trials,
                            std::uint64_t seed) {
    const std::uint32_t q = opts.field_overridden && opts.field_char != 0 ? opts.field_char
                                                                          : kDefaultModulus;
    auto report = codim3_experiment(trials, default_profiles(), seed, q);
    std::ostringstream human;
    for (const auto& rec : report.records) {
        human << "trial " << rec.index << " [" << rec.profile << "]: " << rec.status;
        if (rec.status == "ok" || rec.status == "violation")
            human << " p=" << rec.p << " nu=" << rec.nu
                  << " betti = " << join(rec.betti_totals);
        human << '\n';
    }
    human << "trials: " << report.trials << ", completed: " << report.completed
          << ", skipped: " << report.skipped << ", violations: " << report.violations << '\n';
    emit(out, opts, experiment_to_json(report), human.str());
    if (report.violations > 0)
        throw CheckFailure("pfaffian experiment recorded " +
                           std::to_string(report.violations) + " violations");
    return 0;
}

// ----------------------------------------------------------- paper example

int cmd_paper_example1(std::ostream& out, std::ostream& err, const GlobalOptions& opts) {
    auto loaded = load_ideal_file("example1", opts);
    std::vector<std::string> mismatches;
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok)
            mismatches.push_back(what);
    };

    std::ostringstream human;
    json machine;
    with_loaded_ideal(loaded, [&](const auto& ideal) {
        auto h = hilbert_function(ideal, 8);
        const std::vector<long> expected_h{1, 4, 9, 13, 13, 9, 4, 1, 0};
        expect(h == expected_h, "h-vector");

        long mult = 0;
        for (long v : h)
            mult += v;
        expect(mult == 54, "multiplicity 54");

        std::vector<Integer> entries;
        for (long v : h)
            entries.emplace_back(v);
        auto prof = profile(HVector::from_entries(entries));
        expect(prof.g == 4 && prof.p == 2 && prof.sigma == 7, "profile (g, p, sigma)");
        expect(prof.nu_p == 1, "nu(I_2) = 1");
        expect(prof.symmetric, "symmetric h-vector");

        const Integer bound = nu0(4, 2);
        expect(bound == 9, "nu0(4,2) = 9");
        const Integer e_min = extremal_multiplicity(4, 2);
        expect(e_min == 6, "e(4,2) = 6");
        auto extremal = extremal_hvector(4, 2);
        auto extremal_betti = pure_resolution_betti(extremal_degree_sequence(4, 2));
        expect(extremal_betti == std::vector<Integer>({1, 9, 16, 9, 1}),
               "extremal betti (1,9,16,9,1)");

        auto counts = minimal_generators_by_degree(ideal, 8);
        const std::map<int, long> expected_counts{{2, 1}, {3, 3}, {4, 4}, {5, 1}, {6, 1}};
        expect(counts == expected_counts, "minimal generator degrees");

        auto table = koszul_betti(ideal);
        expect(table.totals() == std::vector<long>({1, 10, 18, 10, 1}),
               "betti totals (1,10,18,10,1)");

        BettiTable golden;
        golden.nvars = 4;
        golden.sigma = 7;
        const std::tuple<int, int, long> graded[] = {
            {0, 0, 1},  {1, 2, 1}, {1, 3, 3}, {1, 4, 4}, {1, 5, 1}, {1, 6, 1},
            {2, 4, 4},  {2, 5, 5}, {2, 6, 5}, {2, 7, 4}, {3, 5, 1}, {3, 6, 1},
            {3, 7, 4},  {3, 8, 3}, {3, 9, 1}, {4, 11, 1}};
        for (auto [i, jj, b] : graded)
            golden.set(i, jj, b);
        expect(table.beta == golden.beta, "graded betti diagram");

        const std::string diagram = render_diagram(table);
        auto checks = structural_checks(table, true);
        expect(checks.all_ok(), "gorenstein structural checks");

        human << "h-vector: " << join(std::vector<long>(h.begin(), h.end() - 1)) << '\n';
        human << "multiplicity: " << mult << '\n';
        human << "profile: g = 4, p = 2, sigma = 7\n";
        human << "nu(I_2) = " << prof.nu_p.get_str() << " <= nu0(4,2) = " << bound.get_str()
              << '\n';
        human << "e(R/I) = " << mult << " >= e(4,2) = " << e_min.get_str() << '\n';
        human << "extremal h-vector: " << join(extremal.entries) << '\n';
        human << "extremal betti: " << join(extremal_betti) << '\n';
        human << "minimal generators:";
        for (const auto& [d, c] : counts)
            human << ' ' << d << ':' << c;
        human << '\n';
        human << "betti totals: " << join(table.totals()) << '\n';
        human << "diagram:\n" << diagram;

        machine = {{"char", loaded.rational ? 0 : static_cast<long>(loaded.q)},
                   {"h_vector", h},
                   {"multiplicity", mult},
                   {"nu_p", prof.nu_p.get_str()},
                   {"nu0", bound.get_str()},
                   {"extremal_multiplicity", e_min.get_str()},
                   {"extremal_h_vector", integers_to_json(extremal.entries)},
                   {"extremal_betti", integers_to_json(extremal_betti)},
                   {"betti", betti_to_json(table)},
                   {"diagram", diagram}};
        return 0;
    });

    machine["match"] = mismatches.empty();
    human << "golden reproduction: " << (mismatches.empty() ? "PASS" : "FAIL") << '\n';
    emit(out, opts, machine, human.str());
    if (!mismatches.empty()) {
        for (const auto& m : mismatches)
            err << "error[E_CHECK]: mismatch in " << m << '\n';
        return 1;
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    GlobalOptions opts;
    int exit_code = 0;

    CLI::App app{"exact Macaulay growth bounds, Gorenstein h-vectors and graded Betti numbers"};
    app.name("gorbetti");
    app.require_subcommand(1);
    app.add_flag("--json", opts.json_output, "machine-readable JSON output");
    auto* char_opt =
        app.add_option("--char", opts.field_char,
                       "coefficient field: a prime modulus, or 0 for exact rationals")
            ->envname("GORBETTI_MODULUS");

    // macaulay
    auto* macaulay = app.add_subcommand("macaulay", "binomial expansions and growth bounds");
    macaulay->require_subcommand(1);
    std::string mac_h;
    int mac_j = 0;
    auto* mac_rep = macaulay->add_subcommand("rep", "Macaulay representation of H at degree J");
    mac_rep->add_option("H", mac_h)->required();
    mac_rep->add_option("J", mac_j)->required()->check(CLI::PositiveNumber);
    auto* mac_bound =
        macaulay->add_subcommand("bound", "maximal next value of an O-sequence after H at J");
    mac_bound->add_option("H", mac_h)->required();
    mac_bound->add_option("J", mac_j)->required()->check(CLI::PositiveNumber);

    // osequence
    auto* oseq = app.add_subcommand("osequence", "O-sequence validation");
    oseq->require_subcommand(1);
    std::vector<std::string> oseq_entries;
    std::string oseq_file;
    auto* oseq_check = oseq->add_subcommand("check", "check the Macaulay growth condition");
    oseq_check->add_option("entries", oseq_entries, "sequence entries");
    oseq_check->add_option("--file", oseq_file, "read whitespace-separated entries from a file");

    // gorenstein
    auto* gor = app.add_subcommand("gorenstein", "Gorenstein h-vector analysis");
    gor->require_subcommand(1);
    int gor_g = 0, gor_p = 0, gor_j = 0, gor_smax = 0, gor_jmin = 0, gor_jmax = 0;
    std::string gor_h;
    std::uint64_t gor_nodes = 0;
    auto* gor_nu0 = gor->add_subcommand("nu0", "generator bound nu0(g, p)");
    gor_nu0->add_option("G", gor_g)->required();
    gor_nu0->add_option("P", gor_p)->required();
    auto* gor_ext = gor->add_subcommand("extremal", "extremal h-vector, multiplicity and betti");
    gor_ext->add_option("G", gor_g)->required();
    gor_ext->add_option("P", gor_p)->required();
    auto* gor_forb = gor->add_subcommand("forbidden", "forbidden nu(I_p) values");
    gor_forb->add_option("G", gor_g)->required();
    gor_forb->add_option("P", gor_p)->required();
    auto* gor_enum = gor->add_subcommand("enumerate", "symmetric O-sequences up to SMAX");
    gor_enum->add_option("G", gor_g)->required();
    gor_enum->add_option("P", gor_p)->required();
    gor_enum->add_option("SMAX", gor_smax)->required();
    gor_enum->add_option("--node-limit", gor_nodes, "search node budget");
    auto* gor_cert = gor->add_subcommand("certificate", "growth infeasibility certificate");
    gor_cert->add_option("G", gor_g)->required();
    gor_cert->add_option("P", gor_p)->required();
    gor_cert->add_option("J", gor_j)->required();
    gor_cert->add_option("H", gor_h)->required();
    auto* gor_mono = gor->add_subcommand("monotonic", "scan bound(h, j+1) <= bound(h, j)");
    gor_mono->add_option("HMAX", gor_h)->required();
    gor_mono->add_option("JMIN", gor_jmin)->required()->check(CLI::PositiveNumber);
    gor_mono->add_option("JMAX", gor_jmax)->required()->check(CLI::PositiveNumber);

    // ideal
    auto* ideal = app.add_subcommand("ideal", "degreewise linear algebra on graded ideals");
    ideal->require_subcommand(1);
    std::string ideal_file, ideal_by;
    int ideal_dmax = -1, ideal_jmax = -1;
    auto* ideal_hf = ideal->add_subcommand("hf", "Hilbert function");
    ideal_hf->add_option("FILE", ideal_file, "ideal file, or 'example1'")->required();
    ideal_hf->add_option("--dmax", ideal_dmax, "last degree to report");
    auto* ideal_betti = ideal->add_subcommand("betti", "graded Betti numbers via Koszul homology");
    ideal_betti->add_option("FILE", ideal_file, "ideal file, or 'example1'")->required();
    ideal_betti->add_option("--jmax", ideal_jmax, "internal degree cap (>= sigma + n)");
    auto* ideal_mg = ideal->add_subcommand("mingens", "minimal generator counts by degree");
    ideal_mg->add_option("FILE", ideal_file, "ideal file, or 'example1'")->required();
    ideal_mg->add_option("--dmax", ideal_dmax, "last degree to report");
    auto* ideal_colon = ideal->add_subcommand("colon", "degreewise ideal quotient (J : f)");
    ideal_colon->add_option("FILE", ideal_file, "ideal file, or 'example1'")->required();
    ideal_colon->add_option("--by", ideal_by, "the polynomial f")->required();
    ideal_colon->add_option("--dmax", ideal_dmax, "last degree to report");

    // pfaffian
    auto* pf = app.add_subcommand("pfaffian", "codimension-3 pfaffian experiments");
    pf->require_subcommand(1);
    int pf_nu = 5, pf_trials = 100;
    std::uint64_t pf_seed = 1;
    auto* pf_demo = pf->add_subcommand("demo", "one linear-profile instance, end to end");
    pf_demo->add_option("NU", pf_nu)->required();
    pf_demo->add_option("--seed", pf_seed, "random seed");
    auto* pf_exp = pf->add_subcommand("experiment", "random maximal-pfaffian ideals");
    pf_exp->add_option("--trials", pf_trials, "number of trials");
    pf_exp->add_option("--seed", pf_seed, "random seed");

    // paper
    auto* paper = app.add_subcommand("paper", "golden reproductions");
    paper->require_subcommand(1);
    auto* ex1 = paper->add_subcommand("example1", "reproduce the bundled worked example");

    // let --json / --char appear after the subcommand words
    for (CLI::App* group : {macaulay, oseq, gor, ideal, pf, paper}) {
        group->fallthrough();
        for (CLI::App* leaf : group->get_subcommands([](CLI::App*) { return true; }))
            leaf->fallthrough();
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        opts.field_overridden = char_opt->count() > 0;

        std::optional<int> dmax_opt =
            ideal_dmax >= 0 ? std::optional<int>(ideal_dmax) : std::nullopt;
        std::optional<int> jmax_opt =
            ideal_jmax >= 0 ? std::optional<int>(ideal_jmax) : std::nullopt;

        if (mac_rep->parsed())
            exit_code = cmd_macaulay_rep(out, opts, mac_h, mac_j);
        else if (mac_bound->parsed())
            exit_code = cmd_macaulay_bound(out, opts, mac_h, mac_j);
        else if (oseq_check->parsed())
            exit_code = cmd_osequence_check(out, opts, oseq_entries, oseq_file);
        else if (gor_nu0->parsed())
            exit_code = cmd_nu0(out, opts, gor_g, gor_p);
        else if (gor_ext->parsed())
            exit_code = cmd_extremal(out, opts, gor_g, gor_p);
        else if (gor_forb->parsed())
            exit_code = cmd_forbidden(out, opts, gor_g, gor_p);
        else if (gor_enum->parsed())
            exit_code = cmd_enumerate(out, opts, gor_g, gor_p, gor_smax, gor_nodes);
        else if (gor_cert->parsed())
            exit_code = cmd_certificate(out, opts, gor_g, gor_p, gor_j, gor_h);
        else if (gor_mono->parsed())
            exit_code = cmd_monotonic(out, opts, gor_h, gor_jmin, gor_jmax);
        else if (ideal_hf->parsed())
            exit_code = cmd_ideal_hf(out, opts, ideal_file, dmax_opt);
        else if (ideal_betti->parsed())
            exit_code = cmd_ideal_betti(out, opts, ideal_file, jmax_opt);
        else if (ideal_mg->parsed())
            exit_code = cmd_ideal_mingens(out, opts, ideal_file, dmax_opt);
        else if (ideal_colon->parsed())
            exit_code = cmd_ideal_colon(out, opts, ideal_file, ideal_by, dmax_opt);
        else if (pf_demo->parsed())
            exit_code = cmd_pfaffian_demo(out, opts, pf_nu, pf_seed);
        else if (pf_exp->parsed())
            exit_code = cmd_pfaffian_experiment(out, opts, pf_trials, pf_seed);
        else if (ex1->parsed())
            exit_code = cmd_paper_example1(out, err, opts);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error[E_USAGE]: " << e.what() << '\n';
        return 2;
    } catch (const NodeLimitError& e) {
        err << "error[E_LIMIT]: " << e.what() << '\n';
        return 2;
    } catch (const CheckFailure& e) {
        err << "error[E_CHECK]: " << e.what() << '\n';
        return 1;
    } catch (const ParseError& e) {
        err << "error[E_INPUT]: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error[E_INPUT]: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        err << "error[E_INPUT]: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}

} // namespace gorbetti
