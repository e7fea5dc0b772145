#ifndef DQW_NCPOLY_HPP
#define DQW_NCPOLY_HPP

#include "dqw/alphabet.hpp"
#include "dqw/rational.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dqw {

struct AlphabetMismatch : std::invalid_argument {
    AlphabetMismatch() : std::invalid_argument("operands live over different alphabets") {}
};

/// Noncommutative polynomial: exact-rational linear combination of words.
/// Terms are kept in ascending monomial order and never store zero
/// coefficients; the leading term is the last one.
class NcPoly {
  public:
    using TermMap = std::map<Word, Rational, WordLess>;

    explicit NcPoly(AlphabetPtr alphabet)
        : alphabet_(std::move(alphabet)), terms_(WordLess{alphabet_.get()}) {}

    static NcPoly zero(AlphabetPtr a) { return NcPoly(std::move(a)); }
    static NcPoly one(AlphabetPtr a) { return monomial(std::move(a), Word{}, Rational(1)); }
    static NcPoly generator(AlphabetPtr a, std::size_t i) {
        return monomial(std::move(a), Word{static_cast<Letter>(i)}, Rational(1));
    }
    static NcPoly monomial(AlphabetPtr a, Word w, Rational c) {
        NcPoly p(std::move(a));
        if (!c.is_zero()) p.terms_.emplace(std::move(w), std::move(c));
        return p;
    }

    const AlphabetPtr& alphabet() const { return alphabet_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Max term weight; degree of the zero polynomial is -1 by convention.
    long long degree() const {
        if (terms_.empty()) return -1;
        return word_weight(terms_.rbegin()->first, *alphabet_);
    }

    const Word& leading_word() const { return require_nonzero().first; }
    const Rational& leading_coeff() const { return require_nonzero().second; }

    void add_term(const Word& w, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    NcPoly& operator+=(const NcPoly& o) {
        check_alphabet(o);
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    NcPoly& operator-=(const NcPoly& o) {
        check_alphabet(o);
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    NcPoly& operator*=(const Rational& s) {
        if (s.is_zero()) { terms_.clear(); return *this; }
        for (auto& [w, c] : terms_) c *= s;
        return *this;
    }

    friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
    friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
    friend NcPoly operator*(NcPoly a, const Rational& s) { return a *= s; }
    friend NcPoly operator*(const Rational& s, NcPoly a) { return a *= s; }
    friend NcPoly operator-(const NcPoly& a) { return a * Rational(-1); }

    /// Free-algebra concatenation product. Bilinear, associative, unit = empty word.
    friend NcPoly operator*(const NcPoly& a, const NcPoly& b) {
        a.check_alphabet(b);
        NcPoly r(a.alphabet_);
        for (const auto& [u, cu] : a.terms_)
            for (const auto& [v, cv] : b.terms_)
                r.add_term(concat(u, v), cu * cv);
        return r;
    }

    friend bool operator==(const NcPoly& a, const NcPoly& b) {
        return *a.alphabet_ == *b.alphabet_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const NcPoly& a, const NcPoly& b) { return !(a == b); }

    /// `a * this * b` for words a, b.
    NcPoly sandwich(const Word& left, const Word& right) const {
        NcPoly r(alphabet_);
        for (const auto& [w, c] : terms_) r.add_term(concat(left, concat(w, right)), c);
        return r;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        long long d = degree();
        for (const auto& [w, c] : terms_)
            if (word_weight(w, *alphabet_) != d) return false;
        return true;
    }

    /// Sum of the terms of maximal weight (the image in the associated graded).
    NcPoly top_part() const {
        NcPoly r(alphabet_);
        if (terms_.empty()) return r;
        long long d = degree();
        for (const auto& [w, c] : terms_)
            if (word_weight(w, *alphabet_) == d) r.add_term(w, c);
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        // print leading term first
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Rational& c = it->second;
            if (first) {
                if (c.sign() < 0) os << "-";
            } else {
                os << (c.sign() < 0 ? " - " : " + ");
            }
            first = false;
            Rational ac = c.sign() < 0 ? -c : c;
            bool unit_word = it->first.empty();
            if (!ac.is_one() || unit_word) {
                os << ac.str();
                if (!unit_word) os << "*";
            }
            for (std::size_t i = 0; i < it->first.size(); ++i) {
                if (i) os << "*";
                std::size_t run = i;
                while (run + 1 < it->first.size() && it->first[run + 1] == it->first[i]) ++run;
                os << alphabet_->name(it->first[i]);
                if (run > i) os << "^" << (run - i + 1);
                i = run;
            }
        }
        return os.str();
    }

    void check_alphabet(const NcPoly& o) const {
        if (alphabet_.get() != o.alphabet_.get() && !(*alphabet_ == *o.alphabet_))
            throw AlphabetMismatch();
    }

  private:
    const std::pair<const Word, Rational>& require_nonzero() const {
        if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
        return *terms_.rbegin();
    }

    AlphabetPtr alphabet_;
    TermMap terms_;
};

/// Canonical representative of a word modulo rotation: the rotation that is
/// lexicographically minimal in plain letter-index order (ties impossible:
/// equal rotations are equal words).
inline Word minimal_rotation(const Word& w) {
    if (w.size() < 2) return w;
    Word best = w;
    Word cur = w;
    for (std::size_t r = 1; r < w.size(); ++r) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (std::lexicographical_compare(cur.begin(), cur.end(), best.begin(), best.end()))
            best = cur;
    }
    return best;
}

/// Word modulo cyclic rotation, stored as its minimal rotation.
class CyclicWord {
  public:
    CyclicWord() = default;
    explicit CyclicWord(const Word& w) : rep_(minimal_rotation(w)) {}

    const Word& representative() const { return rep_; }
    std::size_t size() const { return rep_.size(); }

    friend bool operator==(const CyclicWord& a, const CyclicWord& b) { return a.rep_ == b.rep_; }
    friend bool operator<(const CyclicWord& a, const CyclicWord& b) {
        if (a.rep_.size() != b.rep_.size()) return a.rep_.size() < b.rep_.size();
        return a.rep_ < b.rep_;
    }

  private:
    Word rep_;
};

/// Element of TV/[TV,TV]: exact-rational combination of cyclic words.
class Potential {
  public:
    explicit Potential(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

    const AlphabetPtr& alphabet() const { return alphabet_; }
    const std::map<CyclicWord, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const CyclicWord& cw, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(cw);
        if (it == terms_.end()) {
            terms_.emplace(cw, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Potential& operator+=(const Potential& o) {
        if (!(*alphabet_ == *o.alphabet_)) throw AlphabetMismatch();
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    friend Potential operator+(Potential a, const Potential& b) { return a += b; }
    Potential& operator*=(const Rational& s) {
        if (s.is_zero()) { terms_.clear(); return *this; }
        for (auto& [w, c] : terms_) c *= s;
        return *this;
    }
    friend Potential operator*(const Rational& s, Potential a) { return a *= s; }
    friend Potential operator-(const Potential& a) { Potential r = a; return r *= Rational(-1); }
    friend Potential operator-(Potential a, const Potential& b) { return a += -b; }

    friend bool operator==(const Potential& a, const Potential& b) {
        return *a.alphabet_ == *b.alphabet_ && a.terms_ == b.terms_;
    }

    long long degree() const {
        long long d = 0;
        for (const auto& [w, c] : terms_)
            d = std::max(d, word_weight(w.representative(), *alphabet_));
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        long long d = degree();
        for (const auto& [w, c] : terms_)
            if (word_weight(w.representative(), *alphabet_) != d) return false;
        return true;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [w, c] : terms_) {
            if (first) {
                if (c.sign() < 0) os << "-";
            } else {
                os << (c.sign() < 0 ? " - " : " + ");
            }
            first = false;
            Rational ac = c.sign() < 0 ? -c : c;
            if (!ac.is_one()) os << ac.str() << "*";
            NcPoly body = NcPoly::monomial(alphabet_, w.representative(), Rational(1));
            os << "cyc(" << body.str() << ")";
        }
        return os.str();
    }

  private:
    AlphabetPtr alphabet_;
    std::map<CyclicWord, Rational> terms_;
};

/// Image of p in TV/[TV,TV]; kills commutators of words.
inline Potential cyclify(const NcPoly& p) {
    Potential phi(p.alphabet());
    for (const auto& [w, c] : p.terms()) phi.add_term(CyclicWord(w), c);
    return phi;
}

/// Cyclic derivative: for a cyclic word [v_1...v_m],
///   d_i [v_1...v_m] = sum over positions j with v_j = x_i of v_{j+1}...v_m v_1...v_{j-1},
/// extended linearly.
inline NcPoly cyclic_derivative(const Potential& phi, std::size_t gen) {
    if (gen >= phi.alphabet()->size()) throw std::out_of_range("cyclic_derivative: bad generator index");
    NcPoly r(phi.alphabet());
    for (const auto& [cw, c] : phi.terms()) {
        const Word& w = cw.representative();
        for (std::size_t j = 0; j < w.size(); ++j) {
            if (w[j] != gen) continue;
            Word rot;
            rot.reserve(w.size() - 1);
            rot.insert(rot.end(), w.begin() + j + 1, w.end());
            rot.insert(rot.end(), w.begin(), w.begin() + j);
            r.add_term(rot, c);
        }
    }
    return r;
}

} // namespace dqw

#endif
