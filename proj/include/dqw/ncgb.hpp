#ifndef DQW_NCGB_HPP
#define DQW_NCGB_HPP

#include "dqw/ncpoly.hpp"

#include <optional>
#include <vector>

namespace dqw {

/// Completion/reduction budgets were exceeded. Raising a hard error is always
/// preferred over returning an uncertified basis.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An input's degree exceeds the basis truncation, so reduction against it
/// would be unsound.
struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GbOptions {
    long long max_degree = 0;
    std::size_t max_basis = 4096;        // alive basis elements
    std::size_t max_poly_terms = 200000; // terms in any single polynomial
    bool keep_traces = true;
};

/// One summand of a cofactor representation: coeff * left * gen_k * right,
/// where gen_k is the k-th *input* generator.
struct TraceTerm {
    Rational coeff;
    Word left;
    std::size_t gen;
    Word right;
};
using Trace = std::vector<TraceTerm>;

/// Evaluate a trace against the generators it refers to (soundness oracle:
/// the result must reproduce the traced polynomial exactly).
NcPoly evaluate_trace(const Trace& t, const std::vector<NcPoly>& gens, const AlphabetPtr& a);

struct GbElement {
    NcPoly poly; // monic, fully reduced against the rest of the basis
    Trace trace; // cofactor representation over the input generators
};

/// Degree-truncated two-sided Groebner basis in the weighted-deglex order.
///
/// Certification semantics: after completion, every overlap ambiguity of
/// weight <= max_degree resolves to zero, so every ideal element that admits
/// a representation with cofactor products of weight <= max_degree reduces
/// to zero. Homogeneous ideals always admit such representations degree by
/// degree, so their census is exact through max_degree; for filtered ideals
/// this is the certificate "complete through max_degree" and nothing
/// stronger is claimed.
class TruncatedGB {
  public:
    const std::vector<GbElement>& basis() const { return basis_; }
    long long max_degree() const { return opts_.max_degree; }
    const AlphabetPtr& alphabet() const { return alphabet_; }
    const std::vector<NcPoly>& generators() const { return gens_; }

    /// Fully reduced normal form. p - normal_form(p) lies in the ideal;
    /// the result contains no leading word of the basis as a subword;
    /// idempotent. Throws TruncationError if degree(p) > max_degree.
    NcPoly normal_form(const NcPoly& p) const;

    /// As above, also accumulating the cofactor trace of p - normal_form(p).
    NcPoly normal_form(const NcPoly& p, Trace* used) const;

    bool is_normal_word(const Word& w) const;

    /// All normal words of the given weighted degree, ascending.
    std::vector<Word> normal_words_of_weight(long long d) const;

    std::vector<Word> leading_words() const;

  private:
    friend TruncatedGB groebner(AlphabetPtr alphabet, std::vector<NcPoly> gens,
                                const GbOptions& opts);

    AlphabetPtr alphabet_;
    GbOptions opts_;
    std::vector<NcPoly> gens_;
    std::vector<GbElement> basis_; // sorted by leading word
};

/// Degree-truncated overlap completion (Mora-style) with deterministic
/// pair processing: smallest overlap word in the monomial order first,
/// then discovery order. Generators must be nonzero and of degree
/// <= opts.max_degree; an empty generator list yields the free algebra.
TruncatedGB groebner(AlphabetPtr alphabet, std::vector<NcPoly> gens, const GbOptions& opts);

struct HilbertSeries {
    /// coefficients[d] = number of normal words of weighted degree d,
    /// for d = 0..max_degree.
    std::vector<long long> coefficients;
};

HilbertSeries hilbert(const TruncatedGB& gb);

struct FlatnessReport {
    long long max_degree = 0;
    bool koszul_mode = false;
    std::vector<long long> dims_gr_a; // degree 0..max_degree
    std::vector<long long> dims_b;
    bool flat = false;
    std::optional<long long> violation_degree;
    std::optional<NcPoly> witness; // ideal element whose leading word is B-normal
    Trace witness_trace;
};

/// Flatness/PBW certification: compares the census of the filtered ideal's
/// associated graded against the homogeneous top-part algebra B, degree by
/// degree. In koszul_mode (generators of weight 1, relations of degree
/// exactly 2) only degrees <= 3 are checked and the verdict certifies full
/// flatness under the caller's assertion that B is Koszul.
FlatnessReport pbw_check(const std::vector<NcPoly>& filtered, long long max_degree,
                         bool koszul_mode, const GbOptions* opts = nullptr);

} // namespace dqw

#endif
