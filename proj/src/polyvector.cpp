#include "dqw/polyvector.hpp"

#include <algorithm>
#include <sstream>

namespace dqw {

namespace {

// Sort a duplicate-free index tuple, returning the permutation sign, or
// nullopt when an index repeats (the term vanishes).
std::optional<int> sort_sign(std::vector<std::size_t>& idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i)
        for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
            if (idx[j - 1] == idx[j]) return std::nullopt;
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    return sign;
}

} // namespace

void PolyVectorField::add_term(std::vector<std::size_t> idx, const CommPoly& c) {
    if (static_cast<int>(idx.size()) != arity_)
        throw std::invalid_argument("PolyVectorField: tuple arity mismatch");
    auto sign = sort_sign(idx);
    if (!sign) return;
    add_component(idx, *sign == 1 ? c : -c);
}

void PolyVectorField::add_component(const Index& idx, const CommPoly& c) {
    if (static_cast<int>(idx.size()) != arity_)
        throw std::invalid_argument("PolyVectorField: tuple arity mismatch");
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] >= nvars_) throw std::out_of_range("PolyVectorField: index out of range");
        if (i && idx[i - 1] >= idx[i])
            throw std::invalid_argument("PolyVectorField: tuple not strictly increasing");
    }
    if (c.is_zero()) return;
    auto it = comps_.find(idx);
    if (it == comps_.end()) {
        comps_.emplace(idx, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

CommPoly PolyVectorField::component(const std::vector<std::size_t>& idx) const {
    std::vector<std::size_t> s = idx;
    auto sign = sort_sign(s);
    if (!sign) return CommPoly::zero(nvars_);
    auto it = comps_.find(s);
    if (it == comps_.end()) return CommPoly::zero(nvars_);
    return *sign == 1 ? it->second : -it->second;
}

PolyVectorField& PolyVectorField::operator+=(const PolyVectorField& o) {
    if (nvars_ != o.nvars_ || arity_ != o.arity_)
        throw std::invalid_argument("PolyVectorField: shape mismatch");
    for (const auto& [i, c] : o.comps_) add_component(i, c);
    return *this;
}

std::string PolyVectorField::str(const std::vector<std::string>& names) const {
    if (comps_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : comps_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str(names) << ")";
        for (std::size_t i : idx) os << " d" << names.at(i);
    }
    return os.str();
}

namespace {

// Odd partial derivative acting from the right: for a component containing
// i at position r (0-based) out of p indices, contribute (-1)^{p-1-r} times
// the component with i removed. The right-derivative sign is what makes the
// bracket below satisfy the graded Jacobi identity.
PolyVectorField theta_derivative(const PolyVectorField& a, std::size_t i) {
    PolyVectorField r(a.nvars(), a.arity() - 1);
    for (const auto& [idx, c] : a.components()) {
        auto pos = std::find(idx.begin(), idx.end(), i);
        if (pos == idx.end()) continue;
        int rpos = static_cast<int>(pos - idx.begin());
        int sign = (a.arity() - 1 - rpos) % 2 == 0 ? 1 : -1;
        PolyVectorField::Index rest;
        rest.reserve(idx.size() - 1);
        for (std::size_t k : idx)
            if (k != i) rest.push_back(k);
        r.add_component(rest, sign == 1 ? c : -c);
    }
    return r;
}

PolyVectorField x_derivative(const PolyVectorField& a, std::size_t i) {
    PolyVectorField r(a.nvars(), a.arity());
    for (const auto& [idx, c] : a.components()) r.add_component(idx, c.derivative(i));
    return r;
}

// Exterior product of polyvector fields.
PolyVectorField wedge(const PolyVectorField& a, const PolyVectorField& b) {
    PolyVectorField r(a.nvars(), a.arity() + b.arity());
    for (const auto& [ia, ca] : a.components())
        for (const auto& [ib, cb] : b.components()) {
            std::vector<std::size_t> idx;
            idx.reserve(ia.size() + ib.size());
            idx.insert(idx.end(), ia.begin(), ia.end());
            idx.insert(idx.end(), ib.begin(), ib.end());
            r.add_term(std::move(idx), ca * cb);
        }
    return r;
}

} // namespace

PolyVectorField schouten(const PolyVectorField& a, const PolyVectorField& b) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("schouten: variable-set mismatch");
    int p = a.arity(), q = b.arity();
    if (p + q == 0) return PolyVectorField(a.nvars(), 0); // [function, function] = 0
    PolyVectorField r(a.nvars(), p + q - 1);
    // [a,b] = sum_i (da/dtheta_i)(db/dx_i) - (-1)^{(p-1)(q-1)} sum_i (db/dtheta_i)(da/dx_i)
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        if (p > 0) r += wedge(theta_derivative(a, i), x_derivative(b, i));
        if (q > 0) {
            PolyVectorField t = wedge(theta_derivative(b, i), x_derivative(a, i));
            bool flip = ((p - 1) * (q - 1)) % 2 != 0;
            r += flip ? t : -t;
        }
    }
    return r;
}

JacobiResult jacobi_check(const PolyVectorField& pi) {
    if (pi.arity() != 2) throw std::invalid_argument("jacobi_check: expected a bivector");
    PolyVectorField s = schouten(pi, pi);
    return {s.is_zero(), s};
}

PolyVectorField surface_bivector(const CommPoly& f) {
    if (f.nvars() != 3) throw std::invalid_argument("surface_bivector: expected 3 variables");
    PolyVectorField pi(3, 2);
    pi.add_component({1, 2}, f.derivative(0)); // f_x dy^dz
    pi.add_component({0, 2}, -f.derivative(1)); // f_y dz^dx
    pi.add_component({0, 1}, f.derivative(2)); // f_z dx^dy
    return pi;
}

bool poisson_central_check(const CommPoly& g, const PolyVectorField& pi) {
    if (pi.arity() != 2) throw std::invalid_argument("poisson_central_check: expected a bivector");
    if (g.nvars() != pi.nvars())
        throw std::invalid_argument("poisson_central_check: variable-set mismatch");
    // {g, x_j} = sum_i pi^{ij} d_i g
    for (std::size_t j = 0; j < pi.nvars(); ++j) {
        CommPoly acc(pi.nvars());
        for (std::size_t i = 0; i < pi.nvars(); ++i) {
            if (i == j) continue;
            acc += pi.component({i, j}) * g.derivative(i);
        }
        if (!acc.is_zero()) return false;
    }
    return true;
}

bool unimodularity_check(const PolyVectorField& pi) {
    if (pi.arity() != 2) throw std::invalid_argument("unimodularity_check: expected a bivector");
    for (std::size_t j = 0; j < pi.nvars(); ++j) {
        CommPoly acc(pi.nvars());
        for (std::size_t i = 0; i < pi.nvars(); ++i) {
            if (i == j) continue;
            acc += pi.component({i, j}).derivative(i);
        }
        if (!acc.is_zero()) return false;
    }
    return true;
}

PolyVectorField linear_bivector(const std::vector<std::vector<std::vector<Rational>>>& f) {
    std::size_t n = f.size();
    PolyVectorField pi(n, 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            CommPoly c(n);
            for (std::size_t k = 0; k < n; ++k) {
                CommPoly::Exps e(n, 0);
                e[k] = 1;
                c.add_term(e, f.at(i).at(j).at(k));
            }
            pi.add_component({i, j}, c);
        }
    return pi;
}

} // namespace dqw
