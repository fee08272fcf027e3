#pragma once

// Coefficient files and CSV output.
//
// Coefficient file: UTF-8 text, one term per line as `n m a` separated by
// whitespace; blank lines and lines starting with `#` are ignored. A mode
// flag selects whether `a` is a Taylor or a monomial coefficient.
//
// CSV: header row, LF line endings, floats printed with 17 significant
// digits so output is byte-stable and round-trip safe.

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "fracrot/poly.hpp"

namespace fracrot {

enum class CoeffMode { taylor, monomial };

inline CoeffMode parse_coeff_mode(const std::string& s) {
    if (s == "taylor") return CoeffMode::taylor;
    if (s == "monomial") return CoeffMode::monomial;
    throw std::invalid_argument("coefficient mode must be 'taylor' or 'monomial', got '" + s + "'");
}

/// Parse a coefficient stream. Malformed lines report their 1-based line
/// number; `name` labels the source in error messages.
inline PolySeries read_coeff_stream(std::istream& in, CoeffMode mode, const std::string& name) {
    std::vector<Term> terms;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        Term t;
        if (!(ls >> t.n >> t.m >> t.value)) {
            throw std::runtime_error(name + ":" + std::to_string(lineno) +
                                     ": expected 'n m a', got '" + line + "'");
        }
        std::string rest;
        if (ls >> rest)
            throw std::runtime_error(name + ":" + std::to_string(lineno) +
                                     ": trailing content '" + rest + "'");
        if (t.n < 0 || t.m < 0)
            throw std::runtime_error(name + ":" + std::to_string(lineno) + ": negative index");
        terms.push_back(t);
    }
    try {
        return mode == CoeffMode::taylor ? PolySeries::from_taylor(terms)
                                         : PolySeries::from_monomials(terms);
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(name + ": " + e.what());
    }
}

inline PolySeries read_coeff_file(const std::string& path, CoeffMode mode) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open coefficient file '" + path + "'");
    return read_coeff_stream(in, mode, path);
}

/// 17 significant digits: enough to round-trip any double exactly.
inline std::string fmt_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// Write the series in canonical term order; readable back with the
/// matching mode flag.
inline void write_coeff_stream(std::ostream& out, const PolySeries& s, CoeffMode mode) {
    out << "# n m a  (" << (mode == CoeffMode::taylor ? "taylor" : "monomial") << " coefficients)\n";
    for (const auto& [k, a] : s.coeffs()) {
        const double v = mode == CoeffMode::taylor ? a : s.monomial_coeff(k);
        out << k.n << ' ' << k.m << ' ' << fmt_g17(v) << '\n';
    }
}

class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    void header(std::initializer_list<const char*> cols) { emit_strings(cols); }

    template <typename... Fields>
    void row(const Fields&... fields) {
        bool first = true;
        (emit_one(fields, first), ...);
        out_ << '\n';
    }

private:
    void emit_strings(std::initializer_list<const char*> cols) {
        bool first = true;
        for (const char* c : cols) {
            if (!first) out_ << ',';
            out_ << c;
            first = false;
        }
        out_ << '\n';
    }

    void emit_one(double v, bool& first) {
        if (!first) out_ << ',';
        out_ << fmt_g17(v);
        first = false;
    }
    void emit_one(int v, bool& first) {
        if (!first) out_ << ',';
        out_ << v;
        first = false;
    }
    void emit_one(const std::string& v, bool& first) {
        if (!first) out_ << ',';
        out_ << v;
        first = false;
    }
    void emit_one(const char* v, bool& first) {
        if (!first) out_ << ',';
        out_ << v;
        first = false;
    }

    std::ostream& out_;
};

} // namespace fracrot
