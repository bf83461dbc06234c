#include "gorbetti/ideal_io.hpp"

#include <cctype>
#include <sstream>

namespace gorbetti {

namespace {

bool is_blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#')
            return true;
        if (!std::isspace(static_cast<unsigned char>(c)))
            return false;
    }
    return true;
}

struct Scanner {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size() || s[pos] == '#';
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("polynomial syntax error at column " + std::to_string(pos + 1) + ": " +
                         what);
    }
    Integer read_integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos == start)
            fail("expected an integer");
        return Integer(s.substr(start, pos - start));
    }
    int read_small_int(const char* what) {
        Integer v = read_integer();
        if (!v.fits_sint_p())
            fail(std::string(what) + " out of range");
        return static_cast<int>(v.get_si());
    }
};

} // namespace

RawPoly parse_raw_poly(const std::string& text, int nvars) {
    RawPoly poly;
    Scanner sc{text};
    bool expect_term = true;
    int sign = 1;

    if (sc.done())
        sc.fail("empty polynomial");
    while (!sc.done()) {
        char c = sc.peek();
        if (c == '+' || c == '-') {
            if (expect_term && !poly.terms.empty())
                sc.fail("consecutive signs");
            sign = (c == '-') ? -sign : sign;
            ++sc.pos;
            expect_term = true;
            continue;
        }
        if (!expect_term)
            sc.fail("expected '+' or '-' between terms");

        // one term: optional coefficient and variable powers joined by
        // optional '*'
        RawTerm term{Integer(1), std::vector<int>(static_cast<std::size_t>(nvars), 0)};
        bool saw_factor = false;
        while (true) {
            char f = sc.peek();
            if (std::isdigit(static_cast<unsigned char>(f))) {
                term.coeff *= sc.read_integer();
                saw_factor = true;
            } else if (f == 'x') {
                ++sc.pos;
                int var = sc.read_small_int("variable index");
                if (var < 1 || var > nvars)
                    sc.fail("variable x" + std::to_string(var) + " outside x1..x" +
                            std::to_string(nvars));
                int e = 1;
                if (sc.peek() == '^') {
                    ++sc.pos;
                    e = sc.read_small_int("exponent");
                    if (e < 0)
                        sc.fail("negative exponent");
                }
                term.exps[static_cast<std::size_t>(var - 1)] += e;
                saw_factor = true;
            } else {
                break;
            }
            if (sc.peek() == '*') {
                ++sc.pos;
                continue;
            }
        }
        if (!saw_factor)
            sc.fail("expected a term");
        term.coeff *= sign;
        poly.terms.push_back(std::move(term));
        sign = 1;
        expect_term = false;
    }
    if (expect_term)
        sc.fail("dangling sign");
    return poly;
}

IdealFile parse_ideal_file(std::istream& in) {
    IdealFile file;
    std::string line;
    bool header_seen = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_blank_or_comment(line))
            continue;
        if (!header_seen) {
            std::istringstream hs(line);
            std::string kw_ring, kw_n, kw_char;
            long nvars = -1, q = -1;
            hs >> kw_ring >> kw_n >> nvars >> kw_char >> q;
            if (hs.fail() || kw_ring != "ring" || kw_n != "n" || kw_char != "char")
                throw ParseError("line " + std::to_string(lineno) +
                                 ": expected header 'ring n <n> char <q|0>'");
            if (nvars < 1 || nvars > 64)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": variable count out of range");
            if (q < 0 || q > 0xffffffffL)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": characteristic out of range");
            file.nvars = static_cast<int>(nvars);
            file.characteristic = static_cast<std::uint32_t>(q);
            header_seen = true;
            continue;
        }
        try {
            file.polys.push_back(parse_raw_poly(line, file.nvars));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (!header_seen)
        throw ParseError("missing 'ring n <n> char <q|0>' header");
    return file;
}

IdealFile parse_ideal_file_text(const std::string& text) {
    std::istringstream in(text);
    return parse_ideal_file(in);
}

} // namespace gorbetti
