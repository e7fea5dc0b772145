#ifndef DQW_COMMPOLY_HPP
#define DQW_COMMPOLY_HPP

#include "dqw/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace dqw {

/// Commutative polynomial over a fixed number of variables, keyed by
/// exponent vectors. Distinct from NcPoly on purpose: derivative-heavy
/// workloads want this shape.
class CommPoly {
  public:
    using Exps = std::vector<int>;

    explicit CommPoly(std::size_t nvars) : nvars_(nvars) {}

    static CommPoly zero(std::size_t nvars) { return CommPoly(nvars); }
    static CommPoly constant(std::size_t nvars, const Rational& c) {
        CommPoly p(nvars);
        p.add_term(Exps(nvars, 0), c);
        return p;
    }
    static CommPoly variable(std::size_t nvars, std::size_t i) {
        CommPoly p(nvars);
        Exps e(nvars, 0);
        e.at(i) = 1;
        p.add_term(e, Rational(1));
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    const std::map<Exps, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exps& e, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    CommPoly& operator+=(const CommPoly& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    CommPoly& operator-=(const CommPoly& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    CommPoly& operator*=(const Rational& s) {
        if (s.is_zero()) { terms_.clear(); return *this; }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
    friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
    friend CommPoly operator*(CommPoly a, const Rational& s) { return a *= s; }
    friend CommPoly operator*(const Rational& s, CommPoly a) { return a *= s; }
    friend CommPoly operator-(const CommPoly& a) { return a * Rational(-1); }

    friend CommPoly operator*(const CommPoly& a, const CommPoly& b) {
        a.check(b);
        CommPoly r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exps e(a.nvars_);
                for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    friend bool operator==(const CommPoly& a, const CommPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const CommPoly& a, const CommPoly& b) { return !(a == b); }

    CommPoly derivative(std::size_t var) const {
        CommPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exps d = e;
            --d[var];
            r.add_term(d, c * Rational(e[var]));
        }
        return r;
    }

    long long total_degree() const {
        long long d = -1;
        for (const auto& [e, c] : terms_) {
            long long s = 0;
            for (int x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    /// Coefficient extraction (zero if absent).
    Rational coeff(const Exps& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    std::string str(const std::vector<std::string>& names) const;

  private:
    void check(const CommPoly& o) const {
        if (nvars_ != o.nvars_)
            throw std::invalid_argument("CommPoly: variable-set mismatch");
    }

    std::size_t nvars_;
    std::map<Exps, Rational> terms_;
};

/// Parse a commutative polynomial from the shared expression grammar over
/// the given variable names (no cyc, everything commutes).
CommPoly parse_commpoly(const std::string& text, const std::vector<std::string>& names,
                        const std::map<std::string, Rational>& params = {});

} // namespace dqw

#endif
