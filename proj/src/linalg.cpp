#include "dqw/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace dqw {

namespace {

using boost::multiprecision::cpp_int;

struct Echelon {
    std::vector<std::vector<cpp_int>> m; // integer echelon form
    std::vector<std::size_t> pivot_cols; // pivot column of row r
};

// Clear denominators row by row (rank, kernel, and solution sets are
// unchanged), then run fraction-free Bareiss elimination. Pivots are chosen
// deterministically: first usable column, first row with a nonzero entry.
// `pivot_limit` restricts pivot columns (used for augmented systems).
Echelon bareiss(const QMatrix& qm, std::size_t pivot_limit) {
    std::size_t rows = qm.rows(), cols = qm.cols();
    std::vector<std::vector<cpp_int>> m(rows, std::vector<cpp_int>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        cpp_int l = 1;
        for (std::size_t j = 0; j < cols; ++j)
            l = lcm(l, cpp_int(qm.at(i, j).denominator()));
        for (std::size_t j = 0; j < cols; ++j) {
            const Rational& q = qm.at(i, j);
            m[i][j] = cpp_int(q.numerator()) * (l / cpp_int(q.denominator()));
        }
    }

    Echelon e;
    cpp_int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_limit && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        e.pivot_cols.push_back(c);
        ++r;
    }
    e.m = std::move(m);
    return e;
}

// Back-substitute the echelon system E x = 0 (or = rhs column) rationally.
// Free variables are assigned from `free_assign` (indexed by column).
QVec back_substitute(const Echelon& e, std::size_t ncols,
                     const std::vector<Rational>& free_assign,
                     const std::vector<Rational>* rhs) {
    QVec x(ncols, Rational(0));
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
    for (std::size_t c = 0; c < ncols; ++c)
        if (!is_pivot[c]) x[c] = free_assign[c];
    for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
        std::size_t pc = e.pivot_cols[k];
        Rational acc = rhs ? (*rhs)[k] : Rational(0);
        for (std::size_t j = pc + 1; j < ncols; ++j) {
            const cpp_int& v = e.m[k][j];
            if (v == 0) continue;
            acc -= Rational(BigInt(v)) * x[j];
        }
        x[pc] = acc / Rational(BigInt(e.m[k][pc]));
    }
    return x;
}

} // namespace

std::size_t rank(const QMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return bareiss(m, m.cols()).pivot_cols.size();
}

std::vector<QVec> nullspace(const QMatrix& m) {
    std::size_t n = m.cols();
    std::vector<QVec> basis;
    if (n == 0) return basis;
    Echelon e = bareiss(m, n);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> assign(n, Rational(0));
        assign[f] = Rational(1);
        basis.push_back(back_substitute(e, n, assign, nullptr));
    }
    return basis;
}

std::optional<QVec> solve(const QMatrix& a, const QVec& b) {
    std::size_t rows = a.rows(), n = a.cols();
    QMatrix aug(rows, n + 1);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n) = b[i];
    }
    Echelon e = bareiss(aug, n);
    // Inconsistent iff a non-pivot row keeps a nonzero entry in the b column.
    for (std::size_t i = e.pivot_cols.size(); i < rows; ++i)
        if (e.m[i][n] != 0) return std::nullopt;
    std::vector<Rational> rhs(e.pivot_cols.size());
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) rhs[k] = Rational(BigInt(e.m[k][n]));
    std::vector<Rational> assign(n, Rational(0));
    return back_substitute(e, n, assign, &rhs);
}

bool in_row_space(const QMatrix& m, const QVec& v) {
    // v in rowspace(M) iff rank([M; v]) == rank(M).
    QMatrix ext(m.rows() + 1, m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) ext.at(i, j) = m.at(i, j);
    for (std::size_t j = 0; j < m.cols(); ++j) ext.at(m.rows(), j) = v[j];
    return rank(ext) == rank(m);
}

} // namespace dqw
