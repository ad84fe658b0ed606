#include "algent/parse.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <optional>
#include <utility>

namespace algent {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// integer or p/q, q unsigned; returns nothing on any other shape
std::optional<Rational> rational_token(const std::string& tok) {
    size_t i = 0;
    if (i < tok.size() && (tok[i] == '+' || tok[i] == '-')) ++i;
    size_t num_begin = i;
    while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
    if (i == num_begin) return std::nullopt;
    std::string num = tok.substr(0, i);
    std::string den = "1";
    if (i < tok.size()) {
        if (tok[i] != '/') return std::nullopt;
        size_t den_begin = ++i;
        while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
        if (i == den_begin || i != tok.size()) return std::nullopt;
        den = tok.substr(den_begin);
    }
    Integer d(den);
    if (d == 0) return std::nullopt;
    Rational q(Integer(num), d);
    q.canonicalize();
    return q;
}

struct Token {
    std::string text;
    size_t column;  // 1-based
};

std::vector<Token> split_tokens(const std::string& line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        size_t b = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        out.push_back({line.substr(b, i - b), b + 1});
    }
    return out;
}

// the single content-bearing line of a polynomial file
std::string the_one_line(const std::string& text) {
    std::string found;
    size_t pos = 0;
    int line_no = 0, found_at = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string line = text.substr(pos, nl == std::string::npos ? nl : nl - pos);
        ++line_no;
        if (!trim(line).empty()) {
            if (!found.empty())
                throw ParseError("line " + std::to_string(line_no) +
                                 ": polynomial input must be a single line of coefficients "
                                 "(first content on line " + std::to_string(found_at) + ")");
            found = line;
            found_at = line_no;
        }
        if (nl == std::string::npos) break;
        pos = nl + 1;
    }
    return found;
}

}  // namespace

RatPolynomial parse_polynomial(const std::string& text) {
    std::vector<Token> toks = split_tokens(the_one_line(text));
    if (toks.empty()) throw ParseError("column 1: no coefficients found");
    RatPolynomial f;
    f.c.reserve(toks.size());
    for (const Token& t : toks) {
        std::optional<Rational> q = rational_token(t.text);
        if (!q)
            throw ParseError("column " + std::to_string(t.column) +
                             ": malformed coefficient '" + t.text +
                             "' (expected an integer or p/q with q > 0)");
        f.c.push_back(std::move(*q));
    }
    while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
    if (f.c.empty())
        throw ParseError("column " + std::to_string(toks[0].column) +
                         ": the zero polynomial is not a valid input");
    return f;
}

IntPolynomial parse_int_polynomial(const std::string& text) {
    std::vector<Token> toks = split_tokens(the_one_line(text));
    if (toks.empty()) throw ParseError("column 1: no coefficients found");
    IntPolynomial f;
    f.c.reserve(toks.size());
    for (const Token& t : toks) {
        std::optional<Rational> q = rational_token(t.text);
        if (!q || q->get_den() != 1)
            throw ParseError("column " + std::to_string(t.column) +
                             ": malformed coefficient '" + t.text + "' (expected an integer)");
        f.c.push_back(q->get_num());
    }
    f.trim();
    if (f.is_zero())
        throw ParseError("column " + std::to_string(toks[0].column) +
                         ": the zero polynomial is not a valid input");
    return f;
}

RatMatrix parse_matrix(const std::string& text) {
    std::vector<std::vector<Rational>> rows;
    std::vector<int> row_lines;
    size_t pos = 0;
    int line_no = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string line = text.substr(pos, nl == std::string::npos ? nl : nl - pos);
        ++line_no;
        std::vector<Token> toks = split_tokens(line);
        if (!toks.empty()) {
            std::vector<Rational> row;
            row.reserve(toks.size());
            for (const Token& t : toks) {
                std::optional<Rational> q = rational_token(t.text);
                if (!q)
                    throw ParseError("line " + std::to_string(line_no) + ": malformed entry '" +
                                     t.text + "'");
                row.push_back(std::move(*q));
            }
            rows.push_back(std::move(row));
            row_lines.push_back(line_no);
        }
        if (nl == std::string::npos) break;
        pos = nl + 1;
    }
    if (rows.empty()) throw ParseError("line 1: no matrix rows found");
    size_t n = rows.size();
    for (size_t i = 0; i < n; ++i)
        if (rows[i].size() != rows[0].size())
            throw ParseError("line " + std::to_string(row_lines[i]) + ": row has " +
                             std::to_string(rows[i].size()) + " entries, expected " +
                             std::to_string(rows[0].size()));
    if (rows[0].size() != n)
        throw ParseError("line " + std::to_string(row_lines[0]) + ": " + std::to_string(n) +
                         " rows of " + std::to_string(rows[0].size()) +
                         " entries each, but the matrix must be square");
    RatMatrix a(static_cast<int>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    return a;
}

namespace {

struct ActionParser {
    const std::string& s;
    const std::function<std::string(const std::string&)>& read_file;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("column " + std::to_string(pos + 1) + ": " + what);
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    void expect(char c) {
        skip_ws();
        if (pos >= s.size() || s[pos] != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }

    std::string ident() {
        skip_ws();
        size_t b = pos;
        while (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (pos == b) fail("expected an action name");
        return s.substr(b, pos - b);
    }

    // raw text up to the next top-level occurrence of one of the stop chars
    std::string raw_until(const char* stops) {
        skip_ws();
        size_t b = pos;
        int depth = 0;
        while (pos < s.size()) {
            char c = s[pos];
            if (depth == 0 && std::strchr(stops, c)) break;
            if (c == '(') ++depth;
            if (c == ')') {
                if (depth == 0) break;
                --depth;
            }
            ++pos;
        }
        return trim(s.substr(b, pos - b));
    }

    long integer_arg(const char* what) {
        std::string t = raw_until(",)");
        if (t.empty()) fail(std::string("expected ") + what);
        char* end = nullptr;
        long v = std::strtol(t.c_str(), &end, 10);
        if (end == t.c_str() || *end != '\0') fail("'" + t + "' is not an integer " + what);
        return v;
    }

    EndoAction parse() {
        std::string name = ident();
        expect('(');
        EndoAction a;
        if (name == "scalar") {
            std::string rt = raw_until(",)");
            std::optional<Rational> r = rational_token(rt);
            if (!r) fail("'" + rt + "' is not a rational scalar");
            expect(',');
            long d = integer_arg("dimension");
            if (d < 1 || d > 64) fail("scalar dimension must be in 1..64");
            a = EndoAction::scalar_mul(std::move(*r), static_cast<int>(d));
        } else if (name == "shift") {
            long m = integer_arg("modulus");
            if (m < 2) fail("shift modulus must be at least 2");
            a = EndoAction::shift(m);
        } else if (name == "matrix") {
            skip_ws();
            if (pos < s.size() && s[pos] == '@') {
                ++pos;
                std::string path = raw_until(")");
                if (path.empty()) fail("expected a file path after '@'");
                a = EndoAction::matrix(parse_matrix(read_file(path)));
            } else {
                std::string body = raw_until(")");
                if (body.empty()) fail("expected matrix rows separated by ';'");
                for (char& c : body)
                    if (c == ';') c = '\n';
                a = EndoAction::matrix(parse_matrix(body));
            }
        } else if (name == "product") {
            EndoAction left = parse();
            expect(',');
            EndoAction right = parse();
            skip_ws();
            try {
                a = product_action(left, right);
            } catch (const std::domain_error& e) {
                fail(e.what());
            }
        } else {
            fail("unknown action '" + name + "' (expected scalar, shift, matrix, or product)");
        }
        expect(')');
        return a;
    }
};

Element parse_vector_element(const std::string& spec, int dim) {
    std::string t = trim(spec);
    if (t == "0") return IntVec{std::vector<Rational>(static_cast<size_t>(dim))};
    std::vector<std::string> parts;
    if (t.size() >= 2 && t.front() == '(' && t.back() == ')') {
        std::string inner = t.substr(1, t.size() - 2);
        size_t b = 0;
        for (;;) {
            size_t comma = inner.find(',', b);
            parts.push_back(trim(inner.substr(b, comma == std::string::npos ? comma : comma - b)));
            if (comma == std::string::npos) break;
            b = comma + 1;
        }
    } else if (dim == 1) {
        parts.push_back(t);
    } else {
        throw ParseError("element '" + t + "': expected '(a, b, ...)' with " +
                         std::to_string(dim) + " entries");
    }
    if (static_cast<int>(parts.size()) != dim)
        throw ParseError("element '" + t + "' has " + std::to_string(parts.size()) +
                         " entries, the action expects " + std::to_string(dim));
    IntVec v;
    v.v.reserve(parts.size());
    for (const std::string& p : parts) {
        std::optional<Rational> q = rational_token(p);
        if (!q) throw ParseError("element '" + t + "': malformed entry '" + p + "'");
        v.v.push_back(std::move(*q));
    }
    return v;
}

Element parse_seq_element(const std::string& spec, long modulus) {
    std::string t = trim(spec);
    if (t == "0") return SparseSeq{modulus, {}};
    SparseSeq s{modulus, {}};
    size_t b = 0;
    for (;;) {  // '+'-separated terms, each 'eI' or 'eI:V'
        size_t plus = t.find('+', b);
        std::string term = trim(t.substr(b, plus == std::string::npos ? plus : plus - b));
        if (term.empty() || term[0] != 'e')
            throw ParseError("element '" + t + "': expected '0' or '+'-joined 'eI' / 'eI:V' terms");
        size_t colon = term.find(':');
        std::string idx = term.substr(1, colon == std::string::npos ? colon : colon - 1);
        char* end = nullptr;
        long i = std::strtol(idx.c_str(), &end, 10);
        if (idx.empty() || end == idx.c_str() || *end != '\0' || i < 0)
            throw ParseError("element '" + t + "': index must be a non-negative integer");
        long v = 1;
        if (colon != std::string::npos) {
            std::string val = term.substr(colon + 1);
            v = std::strtol(val.c_str(), &end, 10);
            if (val.empty() || end == val.c_str() || *end != '\0')
                throw ParseError("element '" + t + "': malformed value after ':'");
        }
        v %= modulus;
        if (v < 0) v += modulus;
        for (const auto& [j, w] : s.entries)
            if (j == i)
                throw ParseError("element '" + t + "': index " + std::to_string(i) +
                                 " appears twice");
        if (v != 0) s.entries.emplace_back(i, v);
        if (plus == std::string::npos) break;
        b = plus + 1;
    }
    std::sort(s.entries.begin(), s.entries.end());
    return s;
}

void append_box(std::vector<Element>& out, int dim, long k) {
    if (k < 1) throw ParseError("box radius must be at least 1");
    double count = std::pow(2.0 * static_cast<double>(k) + 1.0, dim);
    if (count > 2e6)
        throw ParseError("box:" + std::to_string(k) + " spans " + std::to_string(count) +
                         " elements, refusing sets over 2000000");
    std::vector<long> digit(static_cast<size_t>(dim), -k);
    for (;;) {
        IntVec v;
        v.v.reserve(digit.size());
        for (long d : digit) v.v.emplace_back(d);
        out.push_back(std::move(v));
        int i = 0;
        while (i < dim && digit[i] == k) digit[i++] = -k;
        if (i == dim) break;
        ++digit[i];
    }
}

}  // namespace

EndoAction parse_action(const std::string& text,
                        const std::function<std::string(const std::string&)>& read_file) {
    ActionParser p{text, read_file};
    EndoAction a = p.parse();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("unexpected trailing input");
    return a;
}

std::vector<Element> parse_element_set(const std::string& text, const EndoAction& action) {
    int dim = action_dim(action);
    std::vector<Element> out;
    size_t b = 0;
    for (;;) {
        size_t semi = text.find(';', b);
        std::string spec = trim(text.substr(b, semi == std::string::npos ? semi : semi - b));
        if (!spec.empty()) {
            if (spec.rfind("box:", 0) == 0) {
                if (dim < 0)
                    throw ParseError("box sets are only defined for vector-shaped actions");
                char* end = nullptr;
                std::string num = spec.substr(4);
                long k = std::strtol(num.c_str(), &end, 10);
                if (num.empty() || end == num.c_str() || *end != '\0')
                    throw ParseError("element '" + spec + "': malformed box radius");
                append_box(out, dim, k);
            } else if (dim >= 0) {
                out.push_back(parse_vector_element(spec, dim));
            } else {
                out.push_back(parse_seq_element(spec, action.modulus));
            }
        }
        if (semi == std::string::npos) break;
        b = semi + 1;
    }
    if (out.empty()) throw ParseError("the element set is empty");
    return out;
}

std::string format_polynomial(const IntPolynomial& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (i) s += ' ';
        s += f.c[i].get_str();
    }
    return s;
}

std::string format_polynomial(const RatPolynomial& f) {
    if (f.c.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (i) s += ' ';
        s += to_string(f.c[i]);
    }
    return s;
}

std::string format_matrix(const RatMatrix& a) {
    std::string s;
    for (int i = 0; i < a.n; ++i) {
        if (i) s += '\n';
        for (int j = 0; j < a.n; ++j) {
            if (j) s += ' ';
            s += to_string(a.at(i, j));
        }
    }
    return s;
}

}  // namespace algent
