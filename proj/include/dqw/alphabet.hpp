#ifndef DQW_ALPHABET_HPP
#define DQW_ALPHABET_HPP

#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace dqw {

/// Weighted generator set of a free algebra. The declaration order is fixed at
/// construction and underlies the monomial order: the *earlier* a generator is
/// declared, the *larger* it is as a letter.
class Alphabet {
  public:
    struct Generator {
        std::string name;
        int weight; // > 0
    };

    explicit Alphabet(std::vector<Generator> gens) : gens_(std::move(gens)) {
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            const auto& g = gens_[i];
            if (g.weight <= 0) throw std::invalid_argument("Alphabet: weight must be positive: " + g.name);
            if (g.name.empty()) throw std::invalid_argument("Alphabet: empty generator name");
            if (g.name == "hbar") throw std::invalid_argument("Alphabet: 'hbar' is reserved");
            for (std::size_t j = 0; j < i; ++j)
                if (gens_[j].name == g.name)
                    throw std::invalid_argument("Alphabet: duplicate generator: " + g.name);
        }
    }

    static std::shared_ptr<const Alphabet> make_weighted(std::vector<Generator> gens) {
        return std::make_shared<const Alphabet>(std::move(gens));
    }
    /// All weights 1, names given.
    static std::shared_ptr<const Alphabet> make(const std::vector<std::string>& names) {
        std::vector<Generator> gs;
        gs.reserve(names.size());
        for (const auto& n : names) gs.push_back({n, 1});
        return make_weighted(std::move(gs));
    }

    std::size_t size() const { return gens_.size(); }
    const std::string& name(std::size_t i) const { return gens_.at(i).name; }
    int weight(std::size_t i) const { return gens_.at(i).weight; }

    /// Index of a generator by name, or npos.
    std::size_t find(const std::string& name) const {
        for (std::size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i].name == name) return i;
        return npos;
    }
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    bool operator==(const Alphabet& o) const {
        if (gens_.size() != o.gens_.size()) return false;
        for (std::size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i].name != o.gens_[i].name || gens_[i].weight != o.gens_[i].weight) return false;
        return true;
    }

  private:
    std::vector<Generator> gens_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

using Letter = std::uint16_t;

/// Word in the free monoid on an Alphabet; the empty word is the unit.
using Word = std::vector<Letter>;

inline long long word_weight(const Word& w, const Alphabet& a) {
    long long s = 0;
    for (Letter l : w) s += a.weight(l);
    return s;
}

/// Weighted-degree-then-lexicographic monomial order. Higher weight wins; on
/// equal weight, compare letters left to right with earlier-declared
/// generators larger. Total, multiplicative, and a well-order on each degree.
struct MonomialOrder {
    const Alphabet* alphabet = nullptr;

    // strict "u < v"
    bool less(const Word& u, const Word& v) const {
        long long wu = word_weight(u, *alphabet), wv = word_weight(v, *alphabet);
        if (wu != wv) return wu < wv;
        // Equal weight: neither is a strict prefix of the other (weights > 0),
        // so the first differing letter decides. Smaller index = larger letter.
        std::size_t n = std::min(u.size(), v.size());
        for (std::size_t i = 0; i < n; ++i)
            if (u[i] != v[i]) return u[i] > v[i];
        return false;
    }
};

/// Comparator for ordered term maps (ascending in the monomial order).
struct WordLess {
    const Alphabet* alphabet = nullptr;
    bool operator()(const Word& u, const Word& v) const {
        return MonomialOrder{alphabet}.less(u, v);
    }
};

inline Word concat(const Word& a, const Word& b) {
    Word r;
    r.reserve(a.size() + b.size());
    r.insert(r.end(), a.begin(), a.end());
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

/// True if `pat` occurs in `w` starting at position `pos`.
inline bool occurs_at(const Word& w, const Word& pat, std::size_t pos) {
    if (pos + pat.size() > w.size()) return false;
    for (std::size_t i = 0; i < pat.size(); ++i)
        if (w[pos + i] != pat[i]) return false;
    return true;
}

/// Leftmost occurrence of `pat` as a subword of `w`, or npos.
inline std::size_t find_subword(const Word& w, const Word& pat) {
    if (pat.empty() || pat.size() > w.size()) return Alphabet::npos;
    for (std::size_t pos = 0; pos + pat.size() <= w.size(); ++pos)
        if (occurs_at(w, pat, pos)) return pos;
    return Alphabet::npos;
}

} // namespace dqw

#endif
