#include "dqw/ncgb.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <tuple>

namespace dqw {

NcPoly evaluate_trace(const Trace& t, const std::vector<NcPoly>& gens, const AlphabetPtr& a) {
    NcPoly r(a);
    for (const auto& term : t)
        r += term.coeff * gens.at(term.gen).sandwich(term.left, term.right);
    return r;
}

namespace {

void append_scaled(Trace& dst, const Trace& src, const Rational& c,
                   const Word& left, const Word& right) {
    for (const auto& t : src)
        dst.push_back({c * t.coeff, concat(left, t.left), t.gen, concat(t.right, right)});
}

void scale_trace(Trace& t, const Rational& c) {
    for (auto& term : t) term.coeff *= c;
}

// Sum coefficients of identical (left, gen, right) summands; drop zeros.
// Keeps traces small during long reductions.
void compress_trace(Trace& t) {
    std::map<std::tuple<Word, std::size_t, Word>, Rational> acc;
    for (auto& term : t) {
        auto key = std::make_tuple(term.left, term.gen, term.right);
        acc[key] += term.coeff;
    }
    Trace out;
    out.reserve(acc.size());
    for (auto& [key, c] : acc)
        if (!c.is_zero()) out.push_back({c, std::get<0>(key), std::get<1>(key), std::get<2>(key)});
    t = std::move(out);
}

struct Reducer {
    const AlphabetPtr& alphabet;
    const std::vector<GbElement>& basis;
    const std::vector<bool>* alive = nullptr; // null: everything alive
    const GbOptions& opts;

    bool is_alive(std::size_t i) const { return !alive || (*alive)[i]; }

    // Full reduction; every term of the result avoids all alive leading
    // words. Deterministic: reduce the current leading term first, choosing
    // the lowest-index reducer at its leftmost occurrence.
    NcPoly reduce(const NcPoly& p, Trace* used) const {
        NcPoly rem(alphabet);
        NcPoly work = p;
        while (!work.is_zero()) {
            const Word w = work.leading_word();
            const Rational c = work.leading_coeff();
            bool hit = false;
            for (std::size_t i = 0; i < basis.size() && !hit; ++i) {
                if (!is_alive(i)) continue;
                std::size_t pos = find_subword(w, basis[i].poly.leading_word());
                if (pos == Alphabet::npos) continue;
                Word left(w.begin(), w.begin() + pos);
                Word right(w.begin() + pos + basis[i].poly.leading_word().size(), w.end());
                work -= c * basis[i].poly.sandwich(left, right);
                if (used) append_scaled(*used, basis[i].trace, c, left, right);
                hit = true;
            }
            if (!hit) {
                rem.add_term(w, c);
                NcPoly lead = NcPoly::monomial(alphabet, w, c);
                work -= lead;
            }
            if (work.term_count() > opts.max_poly_terms)
                throw ResourceError("ncgb: term budget exceeded during reduction");
        }
        if (used) compress_trace(*used);
        return rem;
    }
};

struct PairTask {
    Word overlap_word;
    std::size_t i = 0, j = 0; // basis indices; lead(i) = a.c, lead(j) = c.b
    std::size_t shared = 0;   // |c|
    std::uint64_t seq = 0;    // discovery order tie-break
};

struct PairLess {
    const Alphabet* alphabet;
    bool operator()(const PairTask& a, const PairTask& b) const {
        MonomialOrder ord{alphabet};
        if (a.overlap_word != b.overlap_word) {
            if (ord.less(a.overlap_word, b.overlap_word)) return true;
            if (ord.less(b.overlap_word, a.overlap_word)) return false;
        }
        return std::tie(a.seq, a.i, a.j, a.shared) < std::tie(b.seq, b.i, b.j, b.shared);
    }
};

class Completion {
  public:
    Completion(AlphabetPtr alphabet, std::vector<NcPoly> gens, const GbOptions& opts)
        : opts_(opts), gens_(std::move(gens)), alphabet_(std::move(alphabet)) {
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (!(*gens_[i].alphabet() == *alphabet_))
                throw AlphabetMismatch();
            if (gens_[i].is_zero()) throw std::invalid_argument("ncgb: zero generator");
            if (gens_[i].degree() > opts_.max_degree)
                throw TruncationError("ncgb: generator degree exceeds max_degree");
        }
        pairs_ = std::set<PairTask, PairLess>(PairLess{alphabet_.get()});
    }

    std::vector<GbElement> run() {
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            Trace t{{Rational(1), Word{}, i, Word{}}};
            pending_.push_back({gens_[i], std::move(t)});
        }
        while (true) {
            drain_pending();
            if (pairs_.empty()) break;
            PairTask task = *pairs_.begin();
            pairs_.erase(pairs_.begin());
            if (!alive_[task.i] || !alive_[task.j]) continue;
            pending_.push_back(make_spoly(task));
        }

        std::vector<GbElement> out;
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (alive_[i]) out.push_back(basis_[i]);
        std::sort(out.begin(), out.end(), [&](const GbElement& x, const GbElement& y) {
            return MonomialOrder{alphabet_.get()}.less(x.poly.leading_word(), y.poly.leading_word());
        });
        return out;
    }

    const AlphabetPtr& alphabet() const { return alphabet_; }
    const std::vector<NcPoly>& gens() const { return gens_; }

  private:
    void drain_pending() {
        while (!pending_.empty()) {
            GbElement cand = std::move(pending_.front());
            pending_.pop_front();
            Reducer red{alphabet_, basis_, &alive_, opts_};
            Trace used;
            NcPoly nf = red.reduce(cand.poly, opts_.keep_traces ? &used : nullptr);
            if (nf.is_zero()) continue;
            Trace trace = std::move(cand.trace);
            if (opts_.keep_traces) {
                // cand.poly = nf + used  =>  nf = trace - used
                scale_trace(used, Rational(-1));
                trace.insert(trace.end(), used.begin(), used.end());
            }
            Rational lc = nf.leading_coeff();
            nf *= Rational(1) / lc;
            scale_trace(trace, Rational(1) / lc);
            compress_trace(trace);
            insert_element({std::move(nf), std::move(trace)});
        }
    }

    void insert_element(GbElement e) {
        const Word& lead = e.poly.leading_word();
        // Keep alive leads an antichain in the subword order: retire any
        // element whose lead contains the new lead, and re-process it.
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            if (!alive_[i]) continue;
            if (find_subword(basis_[i].poly.leading_word(), lead) != Alphabet::npos) {
                alive_[i] = false;
                pending_.push_back(std::move(basis_[i]));
            }
        }
        std::size_t idx = basis_.size();
        basis_.push_back(std::move(e));
        alive_.push_back(true);
        if (alive_count() > opts_.max_basis)
            throw ResourceError("ncgb: basis size budget exceeded");
        for (std::size_t j = 0; j < basis_.size(); ++j) {
            if (!alive_[j]) continue;
            enqueue_overlaps(idx, j);
            if (j != idx) enqueue_overlaps(j, idx);
        }
    }

    std::size_t alive_count() const {
        std::size_t n = 0;
        for (bool b : alive_) n += b;
        return n;
    }

    // Overlaps where a proper suffix of lead(i) equals a proper prefix of
    // lead(j): lead(i) = a.c, lead(j) = c.b, overlap word a.c.b.
    void enqueue_overlaps(std::size_t i, std::size_t j) {
        const Word& u = basis_[i].poly.leading_word();
        const Word& v = basis_[j].poly.leading_word();
        std::size_t kmax = std::min(u.size(), v.size()) - 1;
        for (std::size_t k = 1; k <= kmax; ++k) {
            bool match = true;
            for (std::size_t t = 0; t < k && match; ++t)
                if (u[u.size() - k + t] != v[t]) match = false;
            if (!match) continue;
            Word w(u.begin(), u.end());
            w.insert(w.end(), v.begin() + k, v.end());
            if (word_weight(w, *alphabet_) > opts_.max_degree) continue;
            pairs_.insert(PairTask{std::move(w), i, j, k, seq_++});
        }
    }

    GbElement make_spoly(const PairTask& task) {
        const GbElement& gi = basis_[task.i];
        const GbElement& gj = basis_[task.j];
        const Word& u = gi.poly.leading_word();
        const Word& v = gj.poly.leading_word();
        Word a(u.begin(), u.end() - task.shared);
        Word b(v.begin() + task.shared, v.end());
        NcPoly s = gi.poly.sandwich(Word{}, b) - gj.poly.sandwich(a, Word{});
        Trace t;
        if (opts_.keep_traces) {
            append_scaled(t, gi.trace, Rational(1), Word{}, b);
            append_scaled(t, gj.trace, Rational(-1), a, Word{});
            compress_trace(t);
        }
        return {std::move(s), std::move(t)};
    }

    GbOptions opts_;
    std::vector<NcPoly> gens_;
    AlphabetPtr alphabet_;
    std::vector<GbElement> basis_;
    std::vector<bool> alive_;
    std::deque<GbElement> pending_;
    std::set<PairTask, PairLess> pairs_;
    std::uint64_t seq_ = 0;
};

} // namespace

TruncatedGB groebner(AlphabetPtr alphabet, std::vector<NcPoly> gens, const GbOptions& opts) {
    Completion c(std::move(alphabet), std::move(gens), opts);
    std::vector<GbElement> basis = c.run();
    TruncatedGB gb;
    gb.alphabet_ = c.alphabet();
    gb.opts_ = opts;
    gb.gens_ = c.gens();
    gb.basis_ = std::move(basis);
    return gb;
}

NcPoly TruncatedGB::normal_form(const NcPoly& p) const { return normal_form(p, nullptr); }

NcPoly TruncatedGB::normal_form(const NcPoly& p, Trace* used) const {
    if (p.degree() > opts_.max_degree)
        throw TruncationError("ncgb: normal_form input exceeds certified degree");
    Reducer red{alphabet_, basis_, nullptr, opts_};
    return red.reduce(p, used);
}

bool TruncatedGB::is_normal_word(const Word& w) const {
    for (const auto& e : basis_)
        if (find_subword(w, e.poly.leading_word()) != Alphabet::npos) return false;
    return true;
}

std::vector<Word> TruncatedGB::normal_words_of_weight(long long d) const {
    std::vector<Word> out;
    Word cur;
    // Prefixes stay normal, so a forbidden subword in cur + letter must end
    // at the new letter.
    auto ends_with_lead = [&](const Word& w) {
        for (const auto& e : basis_) {
            const Word& lw = e.poly.leading_word();
            if (lw.size() > w.size()) continue;
            if (occurs_at(w, lw, w.size() - lw.size())) return true;
        }
        return false;
    };
    std::function<void(long long)> dfs = [&](long long weight) {
        if (weight == d) {
            out.push_back(cur);
            return;
        }
        for (std::size_t g = 0; g < alphabet_->size(); ++g) {
            long long nw = weight + alphabet_->weight(g);
            if (nw > d) continue;
            cur.push_back(static_cast<Letter>(g));
            if (!ends_with_lead(cur)) dfs(nw);
            cur.pop_back();
        }
    };
    dfs(0);
    return out;
}

std::vector<Word> TruncatedGB::leading_words() const {
    std::vector<Word> out;
    out.reserve(basis_.size());
    for (const auto& e : basis_) out.push_back(e.poly.leading_word());
    return out;
}

HilbertSeries hilbert(const TruncatedGB& gb) {
    HilbertSeries h;
    h.coefficients.resize(static_cast<std::size_t>(gb.max_degree()) + 1);
    for (long long d = 0; d <= gb.max_degree(); ++d)
        h.coefficients[static_cast<std::size_t>(d)] =
            static_cast<long long>(gb.normal_words_of_weight(d).size());
    return h;
}

FlatnessReport pbw_check(const std::vector<NcPoly>& filtered, long long max_degree,
                         bool koszul_mode, const GbOptions* opts_in) {
    if (filtered.empty()) throw std::invalid_argument("pbw_check: no relations");
    const AlphabetPtr& a = filtered.front().alphabet();

    std::vector<NcPoly> tops;
    tops.reserve(filtered.size());
    for (const auto& r : filtered) {
        if (r.is_zero()) throw std::invalid_argument("pbw_check: zero relation");
        tops.push_back(r.top_part());
    }
    long long check_to = max_degree;
    if (koszul_mode) {
        for (std::size_t g = 0; g < a->size(); ++g)
            if (a->weight(g) != 1)
                throw std::invalid_argument("pbw_check: koszul mode needs weight-1 generators");
        for (const auto& r : filtered)
            if (r.degree() != 2)
                throw std::invalid_argument(
                    "pbw_check: koszul mode needs quadratic top parts (degree-2 relations)");
        if (max_degree < 3)
            throw std::invalid_argument("pbw_check: koszul mode needs max_degree >= 3");
        check_to = 3;
    }

    GbOptions opts = opts_in ? *opts_in : GbOptions{};
    opts.max_degree = check_to;
    opts.keep_traces = true;

    TruncatedGB gb_e = groebner(a, filtered, opts);
    TruncatedGB gb_b = groebner(a, tops, opts);

    FlatnessReport rep;
    rep.max_degree = check_to;
    rep.koszul_mode = koszul_mode;
    for (long long d = 0; d <= check_to; ++d) {
        rep.dims_gr_a.push_back(static_cast<long long>(gb_e.normal_words_of_weight(d).size()));
        rep.dims_b.push_back(static_cast<long long>(gb_b.normal_words_of_weight(d).size()));
        if (rep.dims_gr_a.back() > rep.dims_b.back())
            throw std::logic_error("pbw_check: census violates the surjection bound");
    }

    rep.flat = rep.dims_gr_a == rep.dims_b;
    if (!rep.flat) {
        for (long long d = 0; d <= check_to && !rep.violation_degree; ++d)
            if (rep.dims_gr_a[static_cast<std::size_t>(d)] != rep.dims_b[static_cast<std::size_t>(d)])
                rep.violation_degree = d;
        // Witness: the smallest-lead basis element of E whose leading word is
        // normal for B; it exhibits a B-normal word killed in gr A.
        const GbElement* w = nullptr;
        for (const auto& e : gb_e.basis()) {
            if (!gb_b.is_normal_word(e.poly.leading_word())) continue;
            if (!w || MonomialOrder{a.get()}.less(e.poly.leading_word(), w->poly.leading_word()))
                w = &e;
        }
        if (w) {
            rep.witness = w->poly;
            rep.witness_trace = w->trace;
        }
    }
    return rep;
}

} // namespace dqw
