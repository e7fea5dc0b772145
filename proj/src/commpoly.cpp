#include "dqw/commpoly.hpp"

#include "dqw/expr.hpp"

#include <algorithm>
#include <sstream>

namespace dqw {

std::string CommPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    // print highest total degree first, then reverse-lex on exponents
    std::vector<std::pair<Exps, Rational>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        long long da = 0, db = 0;
        for (int x : a.first) da += x;
        for (int x : b.first) db += x;
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : ts) {
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        Rational ac = c.sign() < 0 ? -c : c;
        bool has_var = false;
        for (int x : e) has_var = has_var || x > 0;
        if (!ac.is_one() || !has_var) os << ac.str() << (has_var ? "*" : "");
        bool started = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (started) os << "*";
            started = true;
            os << names.at(i);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

CommPoly parse_commpoly(const std::string& text, const std::vector<std::string>& names,
                        const std::map<std::string, Rational>& params) {
    // Reuse the shared grammar over a weight-1 alphabet, then abelianize.
    AlphabetPtr a = Alphabet::make(names);
    NcPoly p = ExprParser(a, params).parse_poly(text);
    CommPoly r(names.size());
    for (const auto& [w, c] : p.terms()) {
        CommPoly::Exps e(names.size(), 0);
        for (Letter l : w) ++e[l];
        r.add_term(e, c);
    }
    return r;
}

} // namespace dqw
