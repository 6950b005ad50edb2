#include "concordance/snf.hpp"

#include <utility>

namespace concordance {

std::vector<Integer> SmithForm::diagonal() const {
    std::vector<Integer> d;
    for (std::size_t i = 0; i < D.rows() && i < D.cols(); ++i) d.push_back(D(i, i));
    return d;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row a -= q * row b
void add_row(IntMatrix& m, std::size_t a, std::size_t b, const Integer& q) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) -= q * m(b, j);
}

void add_col(IntMatrix& m, std::size_t a, std::size_t b, const Integer& q) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, a) -= q * m(i, b);
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& A) {
    const std::size_t rows = A.rows(), cols = A.cols();
    SmithForm s{IntMatrix::identity(rows), A, IntMatrix::identity(cols)};
    IntMatrix& D = s.D;
    for (std::size_t k = 0; k < rows && k < cols; ++k) {
        while (true) {
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = k; i < rows; ++i)
                for (std::size_t j = k; j < cols; ++j)
                    if (D(i, j) != 0 && (pi == rows || abs(D(i, j)) < abs(D(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == rows) return s;
            swap_rows(D, k, pi);
            swap_rows(s.U, k, pi);
            swap_cols(D, k, pj);
            swap_cols(s.W, k, pj);

            bool clean = true;
            for (std::size_t i = k + 1; i < rows; ++i) {
                if (D(i, k) == 0) continue;
                Integer q = floor_div(D(i, k), D(k, k));
                add_row(D, i, k, q);
                add_row(s.U, i, k, q);
                if (D(i, k) != 0) clean = false;
            }
            for (std::size_t j = k + 1; j < cols; ++j) {
                if (D(k, j) == 0) continue;
                Integer q = floor_div(D(k, j), D(k, k));
                add_col(D, j, k, q);
                add_col(s.W, j, k, q);
                if (D(k, j) != 0) clean = false;
            }
            if (!clean) continue;

            // The pivot must divide the rest of the block; otherwise fold the
            // offending row into row k and start over.
            std::size_t bad = rows;
            for (std::size_t i = k + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = k + 1; j < cols; ++j)
                    if (D(i, j) % D(k, k) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows) break;
            add_row(D, k, bad, Integer(-1));
            add_row(s.U, k, bad, Integer(-1));
        }
        if (D(k, k) < 0) {
            for (std::size_t j = 0; j < cols; ++j) D(k, j) = -D(k, j);
            for (std::size_t j = 0; j < rows; ++j) s.U(k, j) = -s.U(k, j);
        }
    }
    return s;
}

IntMatrix unimodular_inverse(const IntMatrix& U) {
    RatMatrix inv = inverse(to_rational(U));
    IntMatrix out(U.rows(), U.cols());
    for (std::size_t i = 0; i < U.rows(); ++i)
        for (std::size_t j = 0; j < U.cols(); ++j) {
            if (inv(i, j).get_den() != 1) throw DomainError("matrix is not unimodular");
            out(i, j) = inv(i, j).get_num();
        }
    return out;
}

}  // namespace concordance
