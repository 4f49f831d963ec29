#include "qutrit/matrix_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

namespace qutrit {

namespace {

struct Token {
    std::string text;
    int line;
    int column;  // 1-based character offset of the token start
};

// Entry tokens with comments stripped, in reading order.
std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        ++line_no;
        std::string_view line = text.substr(pos, eol - pos);
        if (const size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            if (i >= line.size()) break;
            const size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            tokens.push_back(Token{std::string(line.substr(start, i - start)), line_no,
                                   static_cast<int>(start) + 1});
        }
        if (eol == text.size()) break;
        pos = eol + 1;
    }
    return tokens;
}

double parse_component(const std::string& s, const Token& tok) {
    if (s.empty()) throw BadNumber("empty number", tok.line, tok.column);
    const char* begin = s.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end != begin + s.size())
        throw BadNumber("not a number: '" + s + "'", tok.line, tok.column);
    if (!std::isfinite(v))
        throw BadNumber("non-finite value: '" + s + "'", tok.line, tok.column);
    return v;
}

Complex parse_entry(const Token& tok) {
    const std::string& s = tok.text;
    // Split on the re:im separator; ':' cannot appear inside a decimal.
    const size_t colon = s.find(':');
    if (colon == std::string::npos) return Complex(parse_component(s, tok), 0.0);
    const double re = parse_component(s.substr(0, colon), tok);
    const double im = parse_component(s.substr(colon + 1), tok);
    return Complex(re, im);
}

std::string format_component(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

ComplexMatrix parse_matrix_text(std::string_view text) {
    const std::vector<Token> tokens = tokenize(text);
    if (tokens.empty()) throw BadHeader("missing dimension header", 1, 1);

    const Token& head = tokens[0];
    char* end = nullptr;
    const long dim = std::strtol(head.text.c_str(), &end, 10);
    if (end != head.text.c_str() + head.text.size())
        throw BadHeader("dimension header must be an integer, got '" + head.text + "'",
                        head.line, head.column);
    if (dim < 1 || dim > kMaxDim)
        throw BadHeader("dimension must be in [1, 8], got " + std::to_string(dim),
                        head.line, head.column);

    const size_t need = static_cast<size_t>(dim) * static_cast<size_t>(dim);
    if (tokens.size() - 1 < need) {
        const Token& last = tokens.back();
        throw BadEntryCount("expected " + std::to_string(need) + " entries for a " +
                                std::to_string(dim) + "x" + std::to_string(dim) +
                                " matrix, found " + std::to_string(tokens.size() - 1),
                            last.line, last.column);
    }
    if (tokens.size() - 1 > need) {
        const Token& extra = tokens[need + 1];
        throw BadEntryCount("unexpected extra entry '" + extra.text + "'", extra.line,
                            extra.column);
    }

    ComplexMatrix m(static_cast<int>(dim));
    for (size_t k = 0; k < need; ++k) {
        const Token& tok = tokens[k + 1];
        // Entries must stay in row order: token k belongs on line rows start.
        m(static_cast<int>(k / dim), static_cast<int>(k % dim)) = parse_entry(tok);
    }
    return m;
}

std::string format_matrix_text(const ComplexMatrix& m) {
    std::string out = std::to_string(m.dim());
    out += '\n';
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            if (j > 0) out += ' ';
            const Complex v = m(i, j);
            out += format_component(v.real());
            if (v.imag() != 0.0) {
                out += ':';
                out += format_component(v.imag());
            }
        }
        out += '\n';
    }
    return out;
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix_text(buf.str());
}

void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << format_matrix_text(m);
    if (!out) throw IoError("write failed: " + path.string());
}

std::string format_double(double v, int significant_digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, v);
    return buf;
}

}  // namespace qutrit
