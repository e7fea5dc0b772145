#ifndef DQW_LINALG_HPP
#define DQW_LINALG_HPP

#include "dqw/rational.hpp"

#include <optional>
#include <vector>

namespace dqw {

/// Dense matrix of exact rationals, row-major.
class QMatrix {
  public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

using QVec = std::vector<Rational>;

/// Rank via fraction-free (Bareiss) elimination.
std::size_t rank(const QMatrix& m);

/// Basis of the right kernel {x : Mx = 0}.
std::vector<QVec> nullspace(const QMatrix& m);

/// One solution of Ax = b (free variables pinned to zero), or nullopt if
/// inconsistent.
std::optional<QVec> solve(const QMatrix& a, const QVec& b);

/// True if v lies in the row space spanned by the rows of m.
bool in_row_space(const QMatrix& m, const QVec& v);

} // namespace dqw

#endif
