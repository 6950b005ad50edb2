#include "concordance/matrix.hpp"

#include <sstream>

namespace concordance {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

Integer parse_integer(std::string_view tok) {
    tok = trim(tok);
    if (tok.empty()) throw DomainError("empty matrix entry");
    std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (i == tok.size()) throw DomainError("malformed integer '" + std::string(tok) + "'");
    for (std::size_t k = i; k < tok.size(); ++k)
        if (tok[k] < '0' || tok[k] > '9') throw DomainError("malformed integer '" + std::string(tok) + "'");
    std::string str(tok[0] == '+' ? tok.substr(1) : tok);
    return Integer(str);
}

}  // namespace

RatMatrix to_rational(const IntMatrix& m) {
    return m.map([](const Integer& x) { return Rational(x); });
}

IntMatrix parse_int_matrix(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw DomainError("empty matrix text");
    auto rows = split(text, ';');
    std::vector<std::vector<Integer>> entries;
    for (auto row : rows) {
        std::vector<Integer> r;
        for (auto tok : split(row, ',')) r.push_back(parse_integer(tok));
        entries.push_back(std::move(r));
    }
    IntMatrix m(entries.size(), entries[0].size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].size() != m.cols()) throw DomainError("ragged matrix text");
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entries[i][j];
    }
    return m;
}

std::string format_matrix(const IntMatrix& m) {
    std::ostringstream out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) out << ';';
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ',';
            out << m(i, j);
        }
    }
    return out.str();
}

std::string format_matrix(const RatMatrix& m) {
    std::ostringstream out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) out << ';';
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ',';
            out << m(i, j);
        }
    }
    return out.str();
}

Integer determinant(const IntMatrix& input) {
    if (!input.square()) throw DomainError("determinant of a non-square matrix");
    const std::size_t n = input.rows();
    if (n == 0) return 1;
    IntMatrix m = input;
    Integer prev = 1;
    int sgn_flip = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
            sgn_flip = -sgn_flip;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = v;
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sgn_flip * m(n - 1, n - 1);
}

Rational determinant(const RatMatrix& input) {
    if (!input.square()) throw DomainError("determinant of a non-square matrix");
    RatMatrix m = input;
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
            det = -det;
        }
        det *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k) == 0) continue;
            Rational f = m(i, k) / m(k, k);
            for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

RatMatrix inverse(const RatMatrix& input) {
    if (!input.square()) throw DomainError("inverse of a non-square matrix");
    const std::size_t n = input.rows();
    RatMatrix m = input;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) throw DomainError("matrix is singular");
        if (p != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(p, j), m(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        Rational s = 1 / m(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            m(c, j) *= s;
            inv(c, j) *= s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) -= f * m(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

int signature(const RatMatrix& m) {
    return symmetric_signature<Rational>(m, [](const Rational& x) { return sgn(x); });
}

int signature(const IntMatrix& m) { return signature(to_rational(m)); }

}  // namespace concordance
