#pragma once

#include <cctype>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "discordium/density.hpp"
#include "discordium/sun.hpp"

namespace discordium {
namespace statefile {

// Plain text state files:
//
//   # comment
//   dims 2 3
//   matrix
//   0.5+0i 0-0.5i ...
//   ...
//
// or sparse Fano coefficients (block generator ordering):
//
//   dims 2 2
//   fano
//   alpha.3 0.2
//   gamma.3.3 0.1

namespace detail {

/// Parses `a`, `bi`, `a+bi`, `a-bi` (also accepts `j` as the unit).
inline complexd parse_complex(const std::string& tok, std::size_t line, std::size_t col) {
    const auto fail = [&] { throw parse_error("bad complex entry '" + tok + "'", line, col); };
    std::string s = tok;
    bool imag_tail = false;
    if (!s.empty() && (s.back() == 'i' || s.back() == 'j')) {
        imag_tail = true;
        s.pop_back();
    }
    if (s.empty()) fail();

    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') split = i;
    }

    try {
        std::size_t used = 0;
        if (split == std::string::npos) {
            const double v = std::stod(s, &used);
            if (used != s.size()) fail();
            return imag_tail ? complexd(0.0, v) : complexd(v, 0.0);
        }
        if (!imag_tail) fail();
        const std::string re = s.substr(0, split);
        std::string im = s.substr(split);
        const double rv = std::stod(re, &used);
        if (used != re.size()) fail();
        if (im == "+" || im == "-") im += "1";
        const double iv = std::stod(im, &used);
        if (used != im.size()) fail();
        return complexd(rv, iv);
    } catch (const std::invalid_argument&) {
        fail();
    } catch (const std::out_of_range&) {
        fail();
    }
    return {};
}

struct Token {
    std::string text;
    std::size_t line;
    std::size_t col;
};

inline std::vector<std::vector<Token>> tokenize(std::istream& in) {
    std::vector<std::vector<Token>> lines;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::vector<Token> toks;
        std::size_t i = 0;
        while (i < raw.size()) {
            if (std::isspace(static_cast<unsigned char>(raw[i]))) {
                ++i;
                continue;
            }
            if (raw[i] == '#') break;
            std::size_t start = i;
            while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            toks.push_back({raw.substr(start, i - start), lineno, start + 1});
        }
        if (!toks.empty()) lines.push_back(std::move(toks));
    }
    return lines;
}

inline std::size_t parse_count(const Token& t) {
    try {
        std::size_t used = 0;
        const long v = std::stol(t.text, &used);
        if (used != t.text.size() || v < 1) throw std::invalid_argument("");
        return static_cast<std::size_t>(v);
    } catch (...) {
        throw parse_error("expected a positive integer, got '" + t.text + "'", t.line, t.col);
    }
}

}  // namespace detail

/// Parses and validates a state file. Throws parse_error on malformed
/// input and the usual validation errors on bad states.
inline DensityMatrix read(std::istream& in, const Tolerances& tol = {}) {
    using detail::Token;
    const auto lines = detail::tokenize(in);
    if (lines.empty()) throw parse_error("empty state file", 1, 1);

    std::size_t li = 0;
    const auto& dims_line = lines[li++];
    if (dims_line[0].text != "dims" || dims_line.size() != 3) {
        throw parse_error("expected 'dims <dA> <dB>'", dims_line[0].line, dims_line[0].col);
    }
    const std::size_t dA = detail::parse_count(dims_line[1]);
    const std::size_t dB = detail::parse_count(dims_line[2]);
    const std::size_t n = dA * dB;

    if (li >= lines.size()) {
        throw parse_error("missing payload section", dims_line[0].line + 1, 1);
    }
    const auto& tag = lines[li++][0];

    if (tag.text == "matrix") {
        ComplexMatrix m(n, n);
        for (std::size_t r = 0; r < n; ++r) {
            if (li >= lines.size()) {
                throw parse_error("matrix row " + std::to_string(r + 1) + " missing",
                                  tag.line + r + 1, 1);
            }
            const auto& row = lines[li++];
            if (row.size() != n) {
                throw parse_error("expected " + std::to_string(n) + " entries, got " +
                                      std::to_string(row.size()),
                                  row[0].line, row[0].col);
            }
            for (std::size_t c = 0; c < n; ++c) {
                m(r, c) = detail::parse_complex(row[c].text, row[c].line, row[c].col);
            }
        }
        return validate_density(m, dA, dB, tol);
    }

    if (tag.text == "fano") {
        FanoCoefficients c = FanoCoefficients::zeros(dA, dB);
        for (; li < lines.size(); ++li) {
            const auto& kv = lines[li];
            if (kv.size() != 2) {
                throw parse_error("expected '<key> <value>'", kv[0].line, kv[0].col);
            }
            const std::string& key = kv[0].text;
            double val;
            try {
                std::size_t used = 0;
                val = std::stod(kv[1].text, &used);
                if (used != kv[1].text.size()) throw std::invalid_argument("");
            } catch (...) {
                throw parse_error("bad coefficient value '" + kv[1].text + "'", kv[1].line,
                                  kv[1].col);
            }
            std::size_t i = 0, j = 0;
            if (std::sscanf(key.c_str(), "alpha.%zu", &i) == 1 && key.find('.') != std::string::npos &&
                key.rfind("alpha.", 0) == 0) {
                if (i < 1 || i > c.alpha.size())
                    throw parse_error("alpha index out of range", kv[0].line, kv[0].col);
                c.alpha[i - 1] = val;
            } else if (std::sscanf(key.c_str(), "beta.%zu", &j) == 1 && key.rfind("beta.", 0) == 0) {
                if (j < 1 || j > c.beta.size())
                    throw parse_error("beta index out of range", kv[0].line, kv[0].col);
                c.beta[j - 1] = val;
            } else if (std::sscanf(key.c_str(), "gamma.%zu.%zu", &i, &j) == 2) {
                if (i < 1 || i > c.alpha.size() || j < 1 || j > c.beta.size())
                    throw parse_error("gamma index out of range", kv[0].line, kv[0].col);
                c.gamma_at(i - 1, j - 1) = val;
            } else {
                throw parse_error("unknown coefficient key '" + key + "'", kv[0].line, kv[0].col);
            }
        }
        return fano_compose(c, tol);
    }

    throw parse_error("unknown payload tag '" + tag.text + "'", tag.line, tag.col);
}

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string format_complex(complexd z) {
    std::string s = format_double(z.real());
    s += (z.imag() < 0.0 ? "-" : "+");
    s += format_double(std::abs(z.imag()));
    s += "i";
    return s;
}

inline void write_matrix(std::ostream& out, const DensityMatrix& rho) {
    out << "dims " << rho.dimA() << " " << rho.dimB() << "\n";
    out << "matrix\n";
    const auto& m = rho.matrix();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out << " ";
            out << format_complex(m(r, c));
        }
        out << "\n";
    }
}

/// Sparse Fano dump; zero coefficients are omitted.
inline void write_fano(std::ostream& out, const DensityMatrix& rho) {
    const FanoCoefficients c = fano_decompose(rho);
    out << "dims " << rho.dimA() << " " << rho.dimB() << "\n";
    out << "fano\n";
    for (std::size_t i = 0; i < c.alpha.size(); ++i) {
        if (c.alpha[i] != 0.0) out << "alpha." << i + 1 << " " << format_double(c.alpha[i]) << "\n";
    }
    for (std::size_t j = 0; j < c.beta.size(); ++j) {
        if (c.beta[j] != 0.0) out << "beta." << j + 1 << " " << format_double(c.beta[j]) << "\n";
    }
    for (std::size_t i = 0; i < c.alpha.size(); ++i)
        for (std::size_t j = 0; j < c.beta.size(); ++j) {
            if (c.gamma_at(i, j) != 0.0) {
                out << "gamma." << i + 1 << "." << j + 1 << " "
                    << format_double(c.gamma_at(i, j)) << "\n";
            }
        }
}

}  // namespace statefile
}  // namespace discordium
