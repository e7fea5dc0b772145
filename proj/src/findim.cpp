#include "dqw/findim.hpp"

#include <stdexcept>

namespace dqw {

FinDimAlgebra::FinDimAlgebra(std::vector<std::string> labels,
                             std::vector<std::vector<std::vector<Rational>>> structure,
                             std::vector<Rational> unit)
    : labels_(std::move(labels)), structure_(std::move(structure)), unit_(std::move(unit)) {
    std::size_t n = labels_.size();
    if (structure_.size() != n || unit_.size() != n)
        throw std::invalid_argument("FinDimAlgebra: shape mismatch");
    for (const auto& row : structure_) {
        if (row.size() != n) throw std::invalid_argument("FinDimAlgebra: shape mismatch");
        for (const auto& cell : row)
            if (cell.size() != n) throw std::invalid_argument("FinDimAlgebra: shape mismatch");
    }
    // associativity: (e_i e_j) e_k = e_i (e_j e_k)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    Rational lhs(0), rhs(0);
                    for (std::size_t m = 0; m < n; ++m) {
                        lhs += structure_[i][j][m] * structure_[m][k][l];
                        rhs += structure_[j][k][m] * structure_[i][m][l];
                    }
                    if (lhs != rhs)
                        throw std::invalid_argument(
                            "FinDimAlgebra: structure constants not associative");
                }
    // unit law
    for (std::size_t i = 0; i < n; ++i) {
        QVec ei(n, Rational(0));
        ei[i] = Rational(1);
        if (multiply(unit_, ei) != ei || multiply(ei, unit_) != ei)
            throw std::invalid_argument("FinDimAlgebra: unit does not act as identity");
    }
}

QVec FinDimAlgebra::multiply(const QVec& x, const QVec& y) const {
    std::size_t n = dim();
    QVec r(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            for (std::size_t k = 0; k < n; ++k) r[k] += x[i] * y[j] * structure_[i][j][k];
        }
    }
    return r;
}

QMatrix FinDimAlgebra::left_matrix(std::size_t i) const {
    std::size_t n = dim();
    QMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) m.at(k, j) = structure_[i][j][k];
    return m;
}

QMatrix FinDimAlgebra::right_matrix(std::size_t i) const {
    std::size_t n = dim();
    QMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) m.at(k, j) = structure_[j][i][k];
    return m;
}

std::vector<QVec> FinDimAlgebra::center() const {
    // x central iff L_i x = R_i x for all i
    std::size_t n = dim();
    QMatrix sys(n * n, n);
    for (std::size_t i = 0; i < n; ++i) {
        QMatrix l = left_matrix(i), r = right_matrix(i);
        for (std::size_t row = 0; row < n; ++row)
            for (std::size_t col = 0; col < n; ++col)
                sys.at(i * n + row, col) = l.at(row, col) - r.at(row, col);
    }
    return nullspace(sys);
}

FinDimAlgebra FinDimAlgebra::ground_field() {
    return FinDimAlgebra({"1"}, {{{Rational(1)}}}, {Rational(1)});
}

FinDimAlgebra FinDimAlgebra::product_kk() {
    std::vector<std::vector<std::vector<Rational>>> c(
        2, std::vector<std::vector<Rational>>(2, std::vector<Rational>(2, Rational(0))));
    c[0][0][0] = Rational(1);
    c[1][1][1] = Rational(1);
    return FinDimAlgebra({"u", "v"}, std::move(c), {Rational(1), Rational(1)});
}

FinDimAlgebra FinDimAlgebra::truncated_polynomial(std::size_t n) {
    std::vector<std::vector<std::vector<Rational>>> c(
        n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0))));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i + j < n) c[i][j][i + j] = Rational(1);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("x^" + std::to_string(i));
    QVec unit(n, Rational(0));
    unit[0] = Rational(1);
    return FinDimAlgebra(std::move(labels), std::move(c), std::move(unit));
}

namespace {

QMatrix mat_mul(const QMatrix& a, const QMatrix& b) {
    QMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

bool mat_eq(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != b.at(i, j)) return false;
    return true;
}

QMatrix combine(const std::vector<QMatrix>& ms, const QVec& coeffs) {
    QMatrix r(ms[0].rows(), ms[0].cols());
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t r1 = 0; r1 < r.rows(); ++r1)
            for (std::size_t c1 = 0; c1 < r.cols(); ++c1)
                r.at(r1, c1) += coeffs[i] * ms[i].at(r1, c1);
    return r;
}

} // namespace

Bimodule::Bimodule(const FinDimAlgebra& a, std::vector<QMatrix> left, std::vector<QMatrix> right)
    : left_(std::move(left)), right_(std::move(right)) {
    std::size_t n = a.dim();
    if (left_.size() != n || right_.size() != n)
        throw std::invalid_argument("Bimodule: need one action matrix per basis element");
    dim_ = left_[0].rows();
    for (const auto& m : left_)
        if (m.rows() != dim_ || m.cols() != dim_) throw std::invalid_argument("Bimodule: shape");
    for (const auto& m : right_)
        if (m.rows() != dim_ || m.cols() != dim_) throw std::invalid_argument("Bimodule: shape");

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            QVec cij(n, Rational(0));
            for (std::size_t k = 0; k < n; ++k) cij[k] = a.c(i, j, k);
            if (!mat_eq(mat_mul(left_[i], left_[j]), combine(left_, cij)))
                throw std::invalid_argument("Bimodule: left action is not a homomorphism");
            if (!mat_eq(mat_mul(right_[j], right_[i]), combine(right_, cij)))
                throw std::invalid_argument("Bimodule: right action is not an anti-homomorphism");
            if (!mat_eq(mat_mul(left_[i], right_[j]), mat_mul(right_[j], left_[i])))
                throw std::invalid_argument("Bimodule: left and right actions do not commute");
        }
    QMatrix lu = combine(left_, a.unit()), ru = combine(right_, a.unit());
    QMatrix id(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) id.at(i, i) = Rational(1);
    if (!mat_eq(lu, id) || !mat_eq(ru, id))
        throw std::invalid_argument("Bimodule: unit does not act as identity");
}

Bimodule Bimodule::regular(const FinDimAlgebra& a) {
    std::vector<QMatrix> l, r;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        l.push_back(a.left_matrix(i));
        r.push_back(a.right_matrix(i));
    }
    return Bimodule(a, std::move(l), std::move(r));
}

Bimodule Bimodule::endomorphisms(const FinDimAlgebra& a, const std::vector<QMatrix>& rho) {
    std::size_t m = rho.at(0).rows();
    std::size_t n = a.dim();
    // phi is an m x m matrix flattened row-major; a.phi = rho_a phi, phi.a = phi rho_a
    std::vector<QMatrix> left(n, QMatrix(m * m, m * m)), right(n, QMatrix(m * m, m * m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t r1 = 0; r1 < m; ++r1)
            for (std::size_t c1 = 0; c1 < m; ++c1)
                for (std::size_t r2 = 0; r2 < m; ++r2)
                    for (std::size_t c2 = 0; c2 < m; ++c2) {
                        if (c1 == c2) left[i].at(r1 * m + c1, r2 * m + c2) += rho[i].at(r1, r2);
                        if (r1 == r2) right[i].at(r1 * m + c1, r2 * m + c2) += rho[i].at(c2, c1);
                    }
    return Bimodule(a, std::move(left), std::move(right));
}

FinDimLieAlgebra::FinDimLieAlgebra(std::vector<std::string> labels,
                                   std::vector<std::vector<std::vector<Rational>>> brackets)
    : labels_(std::move(labels)), brackets_(std::move(brackets)) {
    std::size_t n = labels_.size();
    if (brackets_.size() != n) throw std::invalid_argument("FinDimLieAlgebra: shape mismatch");
    for (const auto& row : brackets_) {
        if (row.size() != n) throw std::invalid_argument("FinDimLieAlgebra: shape mismatch");
        for (const auto& cell : row)
            if (cell.size() != n) throw std::invalid_argument("FinDimLieAlgebra: shape mismatch");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (brackets_[i][j][k] != -brackets_[j][i][k])
                    throw std::invalid_argument("FinDimLieAlgebra: brackets not antisymmetric");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t m = 0; m < n; ++m) {
                    Rational s(0);
                    for (std::size_t l = 0; l < n; ++l)
                        s += brackets_[i][j][l] * brackets_[l][k][m] +
                             brackets_[j][k][l] * brackets_[l][i][m] +
                             brackets_[k][i][l] * brackets_[l][j][m];
                    if (!s.is_zero())
                        throw std::invalid_argument("FinDimLieAlgebra: Jacobi identity fails");
                }
}

QMatrix FinDimLieAlgebra::ad(const QVec& x) const {
    std::size_t n = dim();
    QMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            Rational s(0);
            for (std::size_t i = 0; i < n; ++i) s += x[i] * brackets_[i][j][k];
            m.at(k, j) = s;
        }
    return m;
}

FinDimLieAlgebra FinDimLieAlgebra::sl2() {
    std::vector<std::vector<std::vector<Rational>>> f(
        3, std::vector<std::vector<Rational>>(3, std::vector<Rational>(3, Rational(0))));
    auto set = [&](int i, int j, int k, long long v) {
        f[i][j][k] = Rational(v);
        f[j][i][k] = Rational(-v);
    };
    // basis e, f, h: [e,f] = h, [h,e] = 2e, [h,f] = -2f
    set(0, 1, 2, 1);
    set(2, 0, 0, 2);
    set(2, 1, 1, -2);
    return FinDimLieAlgebra({"e", "f", "h"}, std::move(f));
}

FinDimLieAlgebra FinDimLieAlgebra::heisenberg() {
    std::vector<std::vector<std::vector<Rational>>> f(
        3, std::vector<std::vector<Rational>>(3, std::vector<Rational>(3, Rational(0))));
    f[0][1][2] = Rational(1);
    f[1][0][2] = Rational(-1);
    return FinDimLieAlgebra({"x", "y", "z"}, std::move(f));
}

FinDimLieAlgebra FinDimLieAlgebra::abelian(std::size_t n) {
    std::vector<std::vector<std::vector<Rational>>> f(
        n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0))));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i + 1));
    return FinDimLieAlgebra(std::move(labels), std::move(f));
}

} // namespace dqw
