#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "gorbetti/ideal.hpp"

namespace gorbetti {

// Field-independent parse tree of the plain-text ideal format:
//   ring n <n> char <q|0>
//   one polynomial per line, variables x1..xn, '^' powers, optional '*',
//   integer coefficients, '+'/'-'; '#' comments and blank lines ignored.
struct RawTerm {
    Integer coeff;
    std::vector<int> exps;
};

struct RawPoly {
    std::vector<RawTerm> terms;
};

struct IdealFile {
    int nvars = 0;
    std::uint32_t characteristic = 0; // 0 means exact rationals
    std::vector<RawPoly> polys;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

RawPoly parse_raw_poly(const std::string& text, int nvars);
IdealFile parse_ideal_file(std::istream& in);
IdealFile parse_ideal_file_text(const std::string& text);

template <class K>
Polynomial<K> make_polynomial(const RawPoly& raw, const PolyRing<K>& ring) {
    Polynomial<K> f(ring);
    for (const auto& t : raw.terms)
        f.add_term(Monomial{t.exps}, ring.field.from_integer(t.coeff));
    return f;
}

template <class K>
Polynomial<K> parse_polynomial(const std::string& text, const PolyRing<K>& ring) {
    return make_polynomial(parse_raw_poly(text, ring.nvars), ring);
}

template <class K>
IdealBasis<K> make_ideal(const IdealFile& file, const PolyRing<K>& ring) {
    if (ring.nvars != file.nvars)
        throw std::invalid_argument("make_ideal: variable count mismatch");
    std::vector<Polynomial<K>> gens;
    gens.reserve(file.polys.size());
    for (const auto& raw : file.polys)
        gens.push_back(make_polynomial(raw, ring));
    return IdealBasis<K>(ring, std::move(gens));
}

} // namespace gorbetti
