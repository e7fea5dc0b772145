#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dqw/polyvector.hpp"

#include <functional>
#include <random>

using namespace dqw;

namespace {

const std::vector<std::string> XYZ{"x", "y", "z"};

CommPoly C(const std::string& s) { return parse_commpoly(s, XYZ); }

PolyVectorField vf(std::size_t var, const CommPoly& coeff) {
    PolyVectorField v(coeff.nvars(), 1);
    v.add_component({var}, coeff);
    return v;
}

// Full antisymmetric structure-constant table for sl2 in the basis (e, f, h):
// [e,f] = h, [e,h] = -2e, [f,h] = 2f.
std::vector<std::vector<std::vector<Rational>>> sl2_constants() {
    std::vector<std::vector<std::vector<Rational>>> f(
        3, std::vector<std::vector<Rational>>(3, std::vector<Rational>(3, Rational(0))));
    auto set = [&](int i, int j, int k, long long v) {
        f[i][j][k] = Rational(v);
        f[j][i][k] = Rational(-v);
    };
    set(0, 1, 2, 1);
    set(0, 2, 0, -2);
    set(1, 2, 1, 2);
    return f;
}

// Poisson bracket of two polynomials under a bivector.
CommPoly bracket(const PolyVectorField& pi, const CommPoly& f, const CommPoly& g) {
    CommPoly r(pi.nvars());
    for (std::size_t i = 0; i < pi.nvars(); ++i)
        for (std::size_t j = 0; j < pi.nvars(); ++j) {
            if (i == j) continue;
            r += pi.component({i, j}) * f.derivative(i) * g.derivative(j);
        }
    return r;
}

// Independent Jacobi oracle: the Jacobiator of a biderivation is a
// triderivation, so it vanishes identically iff it vanishes on all
// coordinate triples.
bool jacobi_by_bracket(const PolyVectorField& pi) {
    std::size_t n = pi.nvars();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                CommPoly xi = CommPoly::variable(n, i), xj = CommPoly::variable(n, j),
                         xk = CommPoly::variable(n, k);
                CommPoly jac = bracket(pi, bracket(pi, xi, xj), xk) +
                               bracket(pi, bracket(pi, xj, xk), xi) +
                               bracket(pi, bracket(pi, xk, xi), xj);
                if (!jac.is_zero()) return false;
            }
    return true;
}

CommPoly random_poly(std::mt19937_64& rng, std::size_t nvars, int maxdeg, int nterms) {
    std::uniform_int_distribution<int> coeff(-3, 3), deg(0, maxdeg);
    CommPoly p(nvars);
    for (int t = 0; t < nterms; ++t) {
        CommPoly::Exps e(nvars, 0);
        int budget = deg(rng);
        std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
        for (int d = 0; d < budget; ++d) ++e[var(rng)];
        p.add_term(e, Rational(coeff(rng)));
    }
    return p;
}

PolyVectorField random_pvf(std::mt19937_64& rng, std::size_t nvars, int arity) {
    PolyVectorField v(nvars, arity);
    std::vector<std::size_t> idx(static_cast<std::size_t>(arity));
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
        if (pos == idx.size()) {
            v.add_component(idx, random_poly(rng, nvars, 3, 2));
            return;
        }
        for (std::size_t i = from; i < nvars; ++i) {
            idx[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
    return v;
}

} // namespace

TEST_CASE("schouten on vector fields is the Lie bracket") {
    CHECK(schouten(vf(0, C("1")), vf(1, C("1"))).is_zero()); // [dx, dy] = 0
    // [x dy, y dx] = x dx - y dy
    PolyVectorField lhs = schouten(vf(1, C("x")), vf(0, C("y")));
    PolyVectorField expect = vf(0, C("x")) - vf(1, C("y"));
    CHECK(lhs == expect);
}

TEST_CASE("constant bivectors are Poisson") {
    PolyVectorField pi(2, 2);
    pi.add_component({0, 1}, CommPoly::constant(2, Rational(5)));
    CHECK(schouten(pi, pi).is_zero());
    CHECK(jacobi_check(pi).ok);
}

TEST_CASE("schouten is graded antisymmetric on random inputs") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        for (int p = 0; p <= 3; ++p)
            for (int q = 0; q <= 3; ++q) {
                PolyVectorField a = random_pvf(rng, 3, p);
                PolyVectorField b = random_pvf(rng, 3, q);
                PolyVectorField ab = schouten(a, b);
                PolyVectorField ba = schouten(b, a);
                bool flip = ((p - 1) * (q - 1)) % 2 != 0;
                CHECK(ab == (flip ? ba : -ba));
            }
    }
}

TEST_CASE("schouten satisfies the graded Leibniz/Jacobi rule on random triples") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 25; ++trial) {
        int p = 1 + static_cast<int>(rng() % 2);
        int q = 1 + static_cast<int>(rng() % 2);
        int r = 1 + static_cast<int>(rng() % 2);
        PolyVectorField a = random_pvf(rng, 3, p);
        PolyVectorField b = random_pvf(rng, 3, q);
        PolyVectorField c = random_pvf(rng, 3, r);
        // [a,[b,c]] = [[a,b],c] + (-1)^{(p-1)(q-1)} [b,[a,c]]
        PolyVectorField lhs = schouten(a, schouten(b, c));
        PolyVectorField rhs = schouten(schouten(a, b), c);
        PolyVectorField mid = schouten(b, schouten(a, c));
        bool flip = ((p - 1) * (q - 1)) % 2 != 0;
        rhs += flip ? -mid : mid;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("jacobi_check agrees with the bracket oracle") {
    // linear bivector from sl2 structure constants: Poisson
    PolyVectorField sl2 = linear_bivector(sl2_constants());
    CHECK(jacobi_check(sl2).ok);
    CHECK(jacobi_by_bracket(sl2));

    // pi = x dx^dy + dy^dz + y dz^dx: decided exactly, either way both
    // routes must agree
    PolyVectorField pi(3, 2);
    pi.add_component({0, 1}, C("x"));
    pi.add_component({1, 2}, C("1"));
    pi.add_component({0, 2}, -C("y"));
    JacobiResult res = jacobi_check(pi);
    CHECK(res.ok == jacobi_by_bracket(pi));
    CHECK(!res.ok); // computed: the Jacobiator does not vanish
    CHECK(!res.witness.is_zero());
    CHECK(res.witness.arity() == 3);

    // random bivectors: verdicts agree with the oracle
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        PolyVectorField q = random_pvf(rng, 3, 2);
        CHECK(jacobi_check(q).ok == jacobi_by_bracket(q));
    }
}

TEST_CASE("linear bivector is Poisson iff the constants satisfy Lie Jacobi") {
    auto f = sl2_constants();
    CHECK(jacobi_check(linear_bivector(f)).ok);
    // break Jacobi: [x,y] = z, [y,z] = x, [z,x] = x
    std::vector<std::vector<std::vector<Rational>>> g(
        3, std::vector<std::vector<Rational>>(3, std::vector<Rational>(3, Rational(0))));
    g[0][1][2] = Rational(1); g[1][0][2] = Rational(-1);
    g[1][2][0] = Rational(1); g[2][1][0] = Rational(-1);
    g[2][0][0] = Rational(1); g[0][2][0] = Rational(-1);
    // direct structure-constant Jacobi test
    auto ad = [&](int i, int j, int k) { return g[i][j][k]; };
    bool lie_jacobi = true;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int m = 0; m < 3; ++m) {
                    Rational s(0);
                    for (int l = 0; l < 3; ++l)
                        s += ad(i, j, l) * ad(l, k, m) + ad(j, k, l) * ad(l, i, m) +
                             ad(k, i, l) * ad(l, j, m);
                    if (!s.is_zero()) lie_jacobi = false;
                }
    CHECK(!lie_jacobi);
    CHECK(!jacobi_check(linear_bivector(g)).ok);
}

TEST_CASE("surface bivectors match the contraction formula") {
    PolyVectorField pf = surface_bivector(C("x*y*z"));
    PolyVectorField expect(3, 2);
    expect.add_component({1, 2}, C("y*z"));
    expect.add_component({0, 2}, -C("x*z"));
    expect.add_component({0, 1}, C("x*y"));
    CHECK(pf == expect);

    CHECK(surface_bivector(C("5")).is_zero());

    PolyVectorField pq = surface_bivector(C("x^2 + y^2 + z^2"));
    PolyVectorField expect2(3, 2);
    expect2.add_component({1, 2}, C("2*x"));
    expect2.add_component({0, 2}, -C("2*y"));
    expect2.add_component({0, 1}, C("2*z"));
    CHECK(pq == expect2);
}

TEST_CASE("f is Poisson central for pi_f; constants are always central") {
    CommPoly f = C("x*y*z");
    CHECK(poisson_central_check(f, surface_bivector(f)));
    PolyVectorField symp(2, 2);
    symp.add_component({0, 1}, CommPoly::constant(2, Rational(1)));
    CHECK(poisson_central_check(CommPoly::constant(2, Rational(1)), symp));
    CHECK(!poisson_central_check(CommPoly::variable(2, 0), symp));
}

TEST_CASE("unimodularity: pi_f yes, constants yes, x dx^dy no") {
    CHECK(unimodularity_check(surface_bivector(C("x^3 - y*z"))));
    PolyVectorField symp(2, 2);
    symp.add_component({0, 1}, CommPoly::constant(2, Rational(3)));
    CHECK(unimodularity_check(symp));
    PolyVectorField bad(2, 2);
    bad.add_component({0, 1}, CommPoly::variable(2, 0));
    CHECK(!unimodularity_check(bad));
}

TEST_CASE("50 random surface bivectors are Poisson, central, and unimodular") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 50; ++trial) {
        CommPoly f = random_poly(rng, 3, 4, 4);
        PolyVectorField pi = surface_bivector(f);
        CHECK(jacobi_check(pi).ok);
        CHECK(unimodularity_check(pi));
        CHECK(poisson_central_check(f, pi));
    }
}

TEST_CASE("shape errors are rejected") {
    std::mt19937_64 rng(1);
    PolyVectorField on3 = random_pvf(rng, 3, 1);
    PolyVectorField on2 = random_pvf(rng, 2, 1);
    CHECK_THROWS_AS(schouten(on3, on2), std::invalid_argument);
    CHECK_THROWS_AS(surface_bivector(CommPoly::variable(2, 0)), std::invalid_argument);
}
