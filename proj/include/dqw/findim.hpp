#ifndef DQW_FINDIM_HPP
#define DQW_FINDIM_HPP

#include "dqw/linalg.hpp"
#include "dqw/rational.hpp"

#include <string>
#include <vector>

namespace dqw {

/// Finite-dimensional associative unital algebra given by structure
/// constants c_{ij}^k. Associativity and the unit law are checked at
/// construction.
class FinDimAlgebra {
  public:
    FinDimAlgebra(std::vector<std::string> labels,
                  std::vector<std::vector<std::vector<Rational>>> structure,
                  std::vector<Rational> unit);

    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<Rational>& unit() const { return unit_; }

    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
        return structure_[i][j][k];
    }

    /// Product of coefficient vectors.
    QVec multiply(const QVec& x, const QVec& y) const;

    /// Matrix of left (right) multiplication by basis element i.
    QMatrix left_matrix(std::size_t i) const;
    QMatrix right_matrix(std::size_t i) const;

    /// Basis of the center, computed directly from ax = xa.
    std::vector<QVec> center() const;

    /// k as a 1-dimensional algebra.
    static FinDimAlgebra ground_field();
    /// k x k with the idempotent basis.
    static FinDimAlgebra product_kk();
    /// k[x]/(x^n) in the basis 1, x, ..., x^{n-1}.
    static FinDimAlgebra truncated_polynomial(std::size_t n);

  private:
    std::vector<std::string> labels_;
    std::vector<std::vector<std::vector<Rational>>> structure_;
    std::vector<Rational> unit_;
};

/// Bimodule over a FinDimAlgebra, as left/right action matrices per basis
/// element. L must be a homomorphism, R an anti-homomorphism, the two
/// actions commute, and the unit acts as the identity on both sides.
class Bimodule {
  public:
    Bimodule(const FinDimAlgebra& a, std::vector<QMatrix> left, std::vector<QMatrix> right);

    std::size_t dim() const { return dim_; }
    const QMatrix& left(std::size_t i) const { return left_[i]; }
    const QMatrix& right(std::size_t i) const { return right_[i]; }

    /// The regular bimodule M = A.
    static Bimodule regular(const FinDimAlgebra& a);

    /// End_k(M) for a left module given by action matrices rho_i, with
    /// a.phi = rho(a) phi and phi.a = phi rho(a).
    static Bimodule endomorphisms(const FinDimAlgebra& a, const std::vector<QMatrix>& rho);

  private:
    std::size_t dim_;
    std::vector<QMatrix> left_, right_;
};

/// Finite-dimensional Lie algebra by structure constants f_{ij}^k;
/// antisymmetry and the Jacobi identity are checked at construction.
class FinDimLieAlgebra {
  public:
    FinDimLieAlgebra(std::vector<std::string> labels,
                     std::vector<std::vector<std::vector<Rational>>> brackets);

    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const Rational& f(std::size_t i, std::size_t j, std::size_t k) const {
        return brackets_[i][j][k];
    }
    const std::vector<std::vector<std::vector<Rational>>>& brackets() const { return brackets_; }

    /// ad(x) for x a coefficient vector.
    QMatrix ad(const QVec& x) const;

    static FinDimLieAlgebra sl2();      // e, f, h
    static FinDimLieAlgebra heisenberg(); // x, y, z with [x,y] = z central
    static FinDimLieAlgebra abelian(std::size_t n);

  private:
    std::vector<std::string> labels_;
    std::vector<std::vector<std::vector<Rational>>> brackets_;
};

} // namespace dqw

#endif
