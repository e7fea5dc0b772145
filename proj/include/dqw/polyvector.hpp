#ifndef DQW_POLYVECTOR_HPP
#define DQW_POLYVECTOR_HPP

#include "dqw/commpoly.hpp"

#include <optional>

namespace dqw {

/// Polyvector field on affine n-space with polynomial coefficients.
/// Components are keyed by strictly increasing index tuples, so antisymmetry
/// is implicit in the normal form. Arity 0 is a function, arity 1 a vector
/// field.
class PolyVectorField {
  public:
    using Index = std::vector<std::size_t>; // strictly increasing

    PolyVectorField(std::size_t nvars, int arity) : nvars_(nvars), arity_(arity) {
        if (arity < 0) throw std::invalid_argument("PolyVectorField: negative arity");
    }

    static PolyVectorField function(const CommPoly& f) {
        PolyVectorField v(f.nvars(), 0);
        v.add_component({}, f);
        return v;
    }

    std::size_t nvars() const { return nvars_; }
    int arity() const { return arity_; }
    const std::map<Index, CommPoly>& components() const { return comps_; }
    bool is_zero() const { return comps_.empty(); }

    /// Accumulate into the component of a (not necessarily sorted, but
    /// duplicate-free) index tuple; the sign of the sorting permutation is
    /// applied. Duplicate indices contribute nothing.
    void add_term(std::vector<std::size_t> idx, const CommPoly& c);

    /// Accumulate into an already strictly increasing tuple.
    void add_component(const Index& idx, const CommPoly& c);

    /// Component lookup with antisymmetric sign for arbitrary tuples.
    CommPoly component(const std::vector<std::size_t>& idx) const;

    PolyVectorField& operator+=(const PolyVectorField& o);
    friend PolyVectorField operator+(PolyVectorField a, const PolyVectorField& b) { return a += b; }
    friend PolyVectorField operator-(const PolyVectorField& a) {
        PolyVectorField r(a.nvars_, a.arity_);
        for (const auto& [i, c] : a.comps_) r.add_component(i, -c);
        return r;
    }
    friend PolyVectorField operator-(PolyVectorField a, const PolyVectorField& b) { return a += -b; }
    PolyVectorField& operator*=(const Rational& s) {
        if (s.is_zero()) { comps_.clear(); return *this; }
        for (auto& [i, c] : comps_) c *= s;
        return *this;
    }
    friend PolyVectorField operator*(const Rational& s, PolyVectorField a) { return a *= s; }

    friend bool operator==(const PolyVectorField& a, const PolyVectorField& b) {
        return a.nvars_ == b.nvars_ && a.arity_ == b.arity_ && a.comps_ == b.comps_;
    }

    std::string str(const std::vector<std::string>& names) const;

  private:
    std::size_t nvars_;
    int arity_;
    std::map<Index, CommPoly> comps_;
};

/// Schouten-Nijenhuis bracket, the extension of the Lie bracket of vector
/// fields to polyvector fields. Graded antisymmetric with shifted degrees:
/// schouten(a,b) = -(-1)^{(|a|-1)(|b|-1)} schouten(b,a).
PolyVectorField schouten(const PolyVectorField& a, const PolyVectorField& b);

struct JacobiResult {
    bool ok;
    PolyVectorField witness; // schouten(pi, pi); zero iff ok
};

/// pi is Poisson iff [pi, pi] = 0.
JacobiResult jacobi_check(const PolyVectorField& pi);

/// pi_f = f_x dy^dz + f_y dz^dx + f_z dx^dy on affine 3-space.
PolyVectorField surface_bivector(const CommPoly& f);

/// True iff {g, x_i} = 0 for every coordinate.
bool poisson_central_check(const CommPoly& g, const PolyVectorField& pi);

/// Divergence test against the standard volume form: sum_i d_i pi^{ij} = 0
/// for all j.
bool unimodularity_check(const PolyVectorField& pi);

/// Linear bivector on g* from structure constants: pi^{ij} = sum_k f[i][j][k] x_k.
PolyVectorField linear_bivector(const std::vector<std::vector<std::vector<Rational>>>& f);

} // namespace dqw

#endif
