#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dqw/expr.hpp"
#include "dqw/linalg.hpp"
#include "dqw/ncgb.hpp"

#include <functional>
#include <random>

using namespace dqw;

namespace {

NcPoly P(const AlphabetPtr& a, const std::string& s) { return ExprParser(a).parse_poly(s); }

std::vector<NcPoly> parse_all(const AlphabetPtr& a, const std::vector<std::string>& ss) {
    std::vector<NcPoly> out;
    for (const auto& s : ss) out.push_back(P(a, s));
    return out;
}

GbOptions opts(long long maxdeg) {
    GbOptions o;
    o.max_degree = maxdeg;
    return o;
}

std::vector<NcPoly> usl2_relations(const AlphabetPtr& a) {
    return parse_all(a, {"e*f - f*e - h", "h*e - e*h - 2*e", "h*f - f*h + 2*f"});
}

// Independent dense-linear-algebra census: dimensions of the filtered pieces
// of TV/(gens) certified by cofactor products of weight <= maxdeg.
// Returns dims of gr_d for d = 0..maxdeg.
std::vector<long long> rank_census(const AlphabetPtr& a, const std::vector<NcPoly>& gens,
                                   long long maxdeg) {
    std::vector<Word> words;
    Word cur;
    std::function<void(long long)> dfs = [&](long long w) {
        words.push_back(cur);
        for (std::size_t g = 0; g < a->size(); ++g) {
            long long nw = w + a->weight(g);
            if (nw > maxdeg) continue;
            cur.push_back(static_cast<Letter>(g));
            dfs(nw);
            cur.pop_back();
        }
    };
    dfs(0);
    // coordinates ordered by descending weight so ranks of column blocks
    // isolate the intersection with each filtration piece
    std::stable_sort(words.begin(), words.end(), [&](const Word& u, const Word& v) {
        return word_weight(u, *a) > word_weight(v, *a);
    });
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = i;

    std::vector<QVec> rows;
    for (const auto& g : gens) {
        for (const auto& aw : words) {
            long long wa = word_weight(aw, *a);
            if (wa + g.degree() > maxdeg) continue;
            for (const auto& bw : words) {
                if (wa + g.degree() + word_weight(bw, *a) > maxdeg) continue;
                QVec row(words.size(), Rational(0));
                for (const auto& [w, c] : g.terms()) row[index.at(concat(aw, concat(w, bw)))] += c;
                rows.push_back(std::move(row));
            }
        }
    }

    auto dims_upto = [&](long long d) {
        long long nwords = 0;
        for (const auto& w : words)
            if (word_weight(w, *a) <= d) ++nwords;
        if (rows.empty()) return nwords;
        QMatrix m(rows.size(), words.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < words.size(); ++j) m.at(i, j) = rows[i][j];
        std::size_t full = rank(m);
        std::size_t nhigh = 0;
        for (const auto& w : words)
            if (word_weight(w, *a) > d) ++nhigh;
        QMatrix high(rows.size(), nhigh);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < nhigh; ++j) high.at(i, j) = rows[i][j];
        // dim(span ∩ {weight <= d}) = rank(full) − rank(high-weight block)
        long long killed = static_cast<long long>(full - rank(high));
        return nwords - killed;
    };

    std::vector<long long> gr;
    long long prev = 0;
    for (long long d = 0; d <= maxdeg; ++d) {
        long long cum = dims_upto(d);
        gr.push_back(cum - prev);
        prev = cum;
    }
    return gr;
}

std::vector<long long> gb_census(const TruncatedGB& gb) {
    std::vector<long long> out;
    for (long long d = 0; d <= gb.max_degree(); ++d)
        out.push_back(static_cast<long long>(gb.normal_words_of_weight(d).size()));
    return out;
}

} // namespace

TEST_CASE("Weyl algebra: basis stays a single relation, normal words y^a x^b") {
    auto a = Alphabet::make({"x", "y"});
    TruncatedGB gb = groebner(a, parse_all(a, {"x*y - y*x - 1"}), opts(4));
    REQUIRE(gb.basis().size() == 1);
    CHECK(gb.basis()[0].poly == P(a, "x*y - y*x - 1"));
    // normal words avoid the subword xy, i.e. are y^a x^b
    for (long long d = 0; d <= 4; ++d) {
        auto nw = gb.normal_words_of_weight(d);
        CHECK(nw.size() == static_cast<std::size_t>(d + 1));
        for (const auto& w : nw) {
            bool seen_x = false;
            for (Letter l : w) {
                if (l == 0) seen_x = true;
                if (l == 1) CHECK(!seen_x); // no y after an x
            }
        }
    }
    CHECK(gb_census(gb) == rank_census(a, gb.generators(), 4));
}

TEST_CASE("commutative pair gives the polynomial-ring census") {
    auto a = Alphabet::make({"x", "y"});
    TruncatedGB gb = groebner(a, parse_all(a, {"x*y - y*x"}), opts(5));
    CHECK(gb_census(gb) == std::vector<long long>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("U(sl2) dimension census is 1,3,6,10 through degree 3") {
    auto a = Alphabet::make({"e", "f", "h"});
    TruncatedGB gb = groebner(a, usl2_relations(a), opts(3));
    CHECK(gb_census(gb) == std::vector<long long>{1, 3, 6, 10});
}

TEST_CASE("normal_form: single rewrite, generators vanish, idempotent") {
    auto a = Alphabet::make({"x", "y"});
    auto gens = parse_all(a, {"x*y - y*x - 1"});
    TruncatedGB gb = groebner(a, gens, opts(6));
    CHECK(gb.normal_form(P(a, "x*y")) == P(a, "y*x + 1"));
    for (const auto& g : gens) CHECK(gb.normal_form(g).is_zero());

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> len(0, 5), letter(0, 1), coeff(-3, 3);
    for (int t = 0; t < 50; ++t) {
        NcPoly p(a);
        for (int i = 0; i < 4; ++i) {
            Word w(static_cast<std::size_t>(len(rng)));
            for (auto& l : w) l = static_cast<Letter>(letter(rng));
            p.add_term(w, Rational(coeff(rng)));
        }
        NcPoly nf = gb.normal_form(p);
        CHECK(gb.normal_form(nf) == nf);
        CHECK(gb.normal_form(p - nf).is_zero());
    }
}

TEST_CASE("normal_form refuses inputs beyond the certified degree") {
    auto a = Alphabet::make({"x", "y"});
    TruncatedGB gb = groebner(a, parse_all(a, {"x*y - y*x - 1"}), opts(3));
    CHECK_THROWS_AS(gb.normal_form(P(a, "x^2*y^2")), TruncationError);
}

TEST_CASE("hilbert: free algebra with weights (1,1,2) counted by word census") {
    auto a = Alphabet::make_weighted({{"x", 1}, {"y", 1}, {"z", 2}});
    TruncatedGB gb = groebner(a, {}, opts(5));
    // independent exhaustive enumeration
    std::vector<long long> expect(6, 0);
    std::function<void(long long)> dfs = [&](long long w) {
        ++expect[static_cast<std::size_t>(w)];
        for (int g = 0; g < 3; ++g) {
            long long nw = w + (g == 2 ? 2 : 1);
            if (nw <= 5) dfs(nw);
        }
    };
    dfs(0);
    CHECK(hilbert(gb).coefficients == expect);
    CHECK(hilbert(gb).coefficients == std::vector<long long>{1, 2, 5, 12, 29, 70});
}

TEST_CASE("hilbert: polynomial ring in three variables") {
    auto a = Alphabet::make({"x", "y", "z"});
    auto gens = parse_all(a, {"x*y - y*x", "y*z - z*y", "x*z - z*x"});
    TruncatedGB gb = groebner(a, gens, opts(5));
    CHECK(hilbert(gb).coefficients == std::vector<long long>{1, 3, 6, 10, 15, 21});
}

TEST_CASE("U(sl2) hilbert matches the symmetric algebra through degree 3") {
    auto a = Alphabet::make({"e", "f", "h"});
    TruncatedGB gb = groebner(a, usl2_relations(a), opts(3));
    CHECK(hilbert(gb).coefficients == std::vector<long long>{1, 3, 6, 10});
}

TEST_CASE("traces reproduce every basis element from the generators") {
    auto a = Alphabet::make({"e", "f", "h"});
    auto gens = usl2_relations(a);
    TruncatedGB gb = groebner(a, gens, opts(4));
    CHECK(!gb.basis().empty());
    for (const auto& e : gb.basis())
        CHECK(evaluate_trace(e.trace, gens, a) == e.poly);

    auto b = Alphabet::make({"x", "y", "z"});
    auto broken = parse_all(b, {"x*y - y*x - z", "y*z - z*y - x", "z*x - x*z - x"});
    TruncatedGB gbb = groebner(b, broken, opts(3));
    for (const auto& e : gbb.basis())
        CHECK(evaluate_trace(e.trace, broken, b) == e.poly);
}

TEST_CASE("pbw_check: U(sl2) is flat through degree 3") {
    auto a = Alphabet::make({"e", "f", "h"});
    FlatnessReport rep = pbw_check(usl2_relations(a), 3, false);
    CHECK(rep.flat);
    CHECK(rep.dims_gr_a == std::vector<long long>{1, 3, 6, 10});
    CHECK(rep.dims_b == std::vector<long long>{1, 3, 6, 10});
}

TEST_CASE("pbw_check: symplectic reflection relations are flat in koszul mode") {
    auto a = Alphabet::make({"x", "y", "z"});
    for (int lambda : {0, 1, 2}) {
        auto rels = parse_all(a, {"x*y - y*x - 1 - " + std::to_string(lambda) + "*z",
                                  "z^2 - 1", "x*z + z*x", "y*z + z*y"});
        FlatnessReport rep = pbw_check(rels, 3, true);
        CHECK(rep.flat);
        CHECK(rep.koszul_mode);
        CHECK(rep.dims_b == std::vector<long long>{1, 3, 5, 7});
    }
}

TEST_CASE("pbw_check: a bracket failing Jacobi is caught with a verified witness") {
    auto a = Alphabet::make({"x", "y", "z"});
    auto broken = parse_all(a, {"x*y - y*x - z", "y*z - z*y - x", "z*x - x*z - x"});
    FlatnessReport rep = pbw_check(broken, 3, false);
    CHECK(!rep.flat);
    REQUIRE(rep.violation_degree.has_value());
    CHECK(*rep.violation_degree <= 3);
    REQUIRE(rep.witness.has_value());
    // the witness is an honest ideal element: its trace reproduces it
    CHECK(evaluate_trace(rep.witness_trace, broken, a) == *rep.witness);
    // and its leading word survives in B (here B is the polynomial ring)
    TruncatedGB gb_b = groebner(a, parse_all(a, {"x*y - y*x", "y*z - z*y", "z*x - x*z"}), opts(3));
    CHECK(gb_b.is_normal_word(rep.witness->leading_word()));
}

TEST_CASE("pbw_check rejects non-quadratic input in koszul mode") {
    auto a = Alphabet::make({"x", "y"});
    auto rels = parse_all(a, {"x*y*x - y"});
    CHECK_THROWS_AS(pbw_check(rels, 3, true), std::invalid_argument);
}

TEST_CASE("census equals the dense rank census for random quadratic ideals") {
    auto a = Alphabet::make({"x", "y"});
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> coeff(-2, 2);
    auto random_quadratic = [&]() {
        NcPoly p(a);
        for (Word w : {Word{0, 0}, Word{0, 1}, Word{1, 0}, Word{1, 1}})
            p.add_term(w, Rational(coeff(rng)));
        p.add_term(Word{0}, Rational(coeff(rng)));
        p.add_term(Word{}, Rational(coeff(rng)));
        return p;
    };
    int done = 0;
    while (done < 12) {
        std::vector<NcPoly> gens;
        for (int i = 0; i < 2; ++i) {
            NcPoly p = random_quadratic();
            if (!p.is_zero() && p.degree() == 2) gens.push_back(p);
        }
        if (gens.size() != 2) continue;
        ++done;
        TruncatedGB gb = groebner(a, gens, opts(5));
        CHECK(gb_census(gb) == rank_census(a, gens, 5));
    }
}

TEST_CASE("completion is deterministic") {
    auto a = Alphabet::make({"e", "f", "h"});
    TruncatedGB g1 = groebner(a, usl2_relations(a), opts(4));
    TruncatedGB g2 = groebner(a, usl2_relations(a), opts(4));
    REQUIRE(g1.basis().size() == g2.basis().size());
    for (std::size_t i = 0; i < g1.basis().size(); ++i)
        CHECK(g1.basis()[i].poly.str() == g2.basis()[i].poly.str());
}

TEST_CASE("resource guard raises instead of returning a wrong answer") {
    auto a = Alphabet::make({"x", "y", "z"});
    GbOptions o = opts(3);
    o.max_basis = 1;
    auto broken = parse_all(a, {"x*y - y*x - z", "y*z - z*y - x", "z*x - x*z - x"});
    CHECK_THROWS_AS(groebner(a, broken, o), ResourceError);
}
