#include "poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace adend {

unsigned total_degree(const Exponents& e) {
    unsigned d = 0;
    for (unsigned x : e) d += x;
    return d;
}

bool grevlex_greater(const Exponents& a, const Exponents& b) {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

static bool tables_match(const VarTablePtr& a, const VarTablePtr& b) {
    if (!a || !b || a == b) return true;
    return *a == *b;
}

MultiPoly MultiPoly::constant(VarTablePtr vars, const Rational& c) {
    MultiPoly p(std::move(vars));
    if (c != 0) p.terms_.emplace(Exponents(p.vars_ ? p.vars_->size() : 0, 0u), c);
    return p;
}

MultiPoly MultiPoly::variable(VarTablePtr vars, std::size_t index) {
    if (!vars || index >= vars->size()) throw Error("variable index out of range");
    MultiPoly p(std::move(vars));
    Exponents e(p.vars_->size(), 0u);
    e[index] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

const Exponents& MultiPoly::leading_monomial() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.begin()->first;
}

const Rational& MultiPoly::leading_coefficient() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.begin()->second;
}

unsigned MultiPoly::degree() const {
    return terms_.empty() ? 0 : total_degree(terms_.begin()->first);
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void MultiPoly::unify(const MultiPoly& o) {
    if (!tables_match(vars_, o.vars_)) throw Error("mismatched variable lists");
    if (!vars_) vars_ = o.vars_;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p = *this;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    unify(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    unify(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly p(vars_ ? vars_ : o.vars_);
    if (!tables_match(vars_, o.vars_)) throw Error("mismatched variable lists");
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            p.add_term(e, ca * cb);
        }
    return p;
}

MultiPoly MultiPoly::operator*(const Rational& s) const {
    MultiPoly p(vars_);
    if (s == 0) return p;
    p.terms_ = terms_;
    for (auto& [e, c] : p.terms_) c *= s;
    return p;
}

MultiPoly MultiPoly::monic() const {
    if (terms_.empty()) return *this;
    return *this * (Rational(1) / leading_coefficient());
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
    if (vars_ && point.size() != vars_->size()) throw Error("evaluation point has wrong arity");
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::substitute(const std::map<std::size_t, Rational>& values) const {
    MultiPoly p(vars_);
    for (const auto& [e, c] : terms_) {
        Rational coef = c;
        Exponents ne = e;
        for (const auto& [idx, val] : values) {
            for (unsigned k = 0; k < e[idx]; ++k) coef *= val;
            ne[idx] = 0;
        }
        p.add_term(ne, coef);
    }
    return p;
}

MultiPoly MultiPoly::lift(const VarTablePtr& new_vars, const std::vector<std::size_t>& index_map) const {
    MultiPoly p(new_vars);
    for (const auto& [e, c] : terms_) {
        Exponents ne(new_vars->size(), 0u);
        for (std::size_t i = 0; i < e.size(); ++i) ne[index_map[i]] = e[i];
        p.add_term(ne, c);
    }
    return p;
}

std::string monomial_str(const VarTable& vars, const Exponents& e) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) os << "*";
        os << vars[i];
        if (e[i] > 1) os << "^" << e[i];
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = c < 0 ? Rational(-c) : c;
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        bool is_const = total_degree(e) == 0;
        if (is_const) {
            os << rat_to_string(mag);
        } else {
            if (mag != 1) os << rat_to_string(mag) << "*";
            os << monomial_str(*vars_, e);
        }
        first = false;
    }
    return os.str();
}

static bool divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

static Exponents quotient(const Exponents& b, const Exponents& a) {
    Exponents q(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) q[i] = b[i] - a[i];
    return q;
}

static Exponents lcm_mono(const Exponents& a, const Exponents& b) {
    Exponents m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
    return m;
}

static MultiPoly mono_times(const MultiPoly& g, const Exponents& m, const Rational& c) {
    MultiPoly p(g.vars());
    for (const auto& [e, gc] : g.terms()) {
        Exponents ne = e;
        for (std::size_t i = 0; i < ne.size(); ++i) ne[i] += m[i];
        p.add_term(ne, gc * c);
    }
    return p;
}

MultiPoly poly_reduce(const MultiPoly& p, const std::vector<MultiPoly>& basis) {
    for (const auto& g : basis)
        if (!tables_match(p.vars(), g.vars())) throw Error("mismatched variable lists");
    MultiPoly h = p, rem(p.vars());
    while (!h.is_zero()) {
        bool divided = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            if (divides(g.leading_monomial(), h.leading_monomial())) {
                Rational c = h.leading_coefficient() / g.leading_coefficient();
                h -= mono_times(g, quotient(h.leading_monomial(), g.leading_monomial()), c);
                divided = true;
                break;
            }
        }
        if (!divided) {
            rem.add_term(h.leading_monomial(), h.leading_coefficient());
            MultiPoly lt(p.vars());
            lt.add_term(h.leading_monomial(), h.leading_coefficient());
            h -= lt;
        }
    }
    return rem;
}

static MultiPoly s_poly(const MultiPoly& f, const MultiPoly& g) {
    Exponents L = lcm_mono(f.leading_monomial(), g.leading_monomial());
    MultiPoly a = mono_times(f, quotient(L, f.leading_monomial()), Rational(1) / f.leading_coefficient());
    MultiPoly b = mono_times(g, quotient(L, g.leading_monomial()), Rational(1) / g.leading_coefficient());
    return a - b;
}

bool GroebnerBasis::is_trivial_unit() const {
    return gens.size() == 1 && gens[0].is_constant() && !gens[0].is_zero();
}

bool GroebnerBasis::contains(const MultiPoly& p) const {
    return poly_reduce(p, gens).is_zero();
}

bool GroebnerBasis::operator==(const GroebnerBasis& o) const {
    return gens == o.gens;
}

GroebnerBasis buchberger(VarTablePtr vars, std::vector<MultiPoly> gens) {
    GroebnerBasis out;
    out.vars = vars;

    std::vector<MultiPoly> G;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        G.push_back(g.monic());
    }

    // pair queue: normal strategy (lowest lcm degree first, then indices)
    struct Pair {
        unsigned deg;
        std::size_t i, j;
        bool operator<(const Pair& o) const {
            if (deg != o.deg) return deg < o.deg;
            if (i != o.i) return i < o.i;
            return j < o.j;
        }
    };
    std::set<Pair> queue;
    std::set<std::pair<std::size_t, std::size_t>> handled;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            queue.insert({total_degree(lcm_mono(G[i].leading_monomial(), G[j].leading_monomial())), i, j});
    };
    for (std::size_t j = 0; j < G.size(); ++j) push_pairs(j);

    auto coprime = [](const Exponents& a, const Exponents& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] > 0 && b[i] > 0) return false;
        return true;
    };

    while (!queue.empty()) {
        Pair pr = *queue.begin();
        queue.erase(queue.begin());
        handled.insert({pr.i, pr.j});

        const Exponents& lti = G[pr.i].leading_monomial();
        const Exponents& ltj = G[pr.j].leading_monomial();
        if (coprime(lti, ltj)) continue; // Buchberger criterion 1

        // chain criterion: some k with LT(k) | lcm and both pairs handled
        Exponents L = lcm_mono(lti, ltj);
        bool skip = false;
        for (std::size_t k = 0; k < G.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!divides(G[k].leading_monomial(), L)) continue;
            auto key = [&](std::size_t a, std::size_t b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (handled.count(key(pr.i, k)) && handled.count(key(pr.j, k))) skip = true;
        }
        if (skip) continue;

        MultiPoly s = poly_reduce(s_poly(G[pr.i], G[pr.j]), G);
        if (s.is_zero()) continue;
        G.push_back(s.monic());
        push_pairs(G.size() - 1);
    }

    // inter-reduce to the unique reduced basis
    std::vector<MultiPoly> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            const auto& li = G[i].leading_monomial();
            const auto& lj = G[j].leading_monomial();
            if (divides(lj, li) && !(li == lj && j > i)) redundant = true;
        }
        if (!redundant) minimal.push_back(G[i]);
    }
    std::vector<MultiPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MultiPoly r = poly_reduce(minimal[i], others);
        if (!r.is_zero()) reduced.push_back(r.monic());
    }
    std::sort(reduced.begin(), reduced.end(), [](const MultiPoly& a, const MultiPoly& b) {
        return grevlex_greater(a.leading_monomial(), b.leading_monomial());
    });

    // unit ideal collapses to {1}
    for (const auto& g : reduced) {
        if (g.is_constant() && !g.is_zero()) {
            out.gens = {MultiPoly::constant(vars, Rational(1))};
            return out;
        }
    }
    out.gens = std::move(reduced);
    return out;
}

bool ideal_equal(const GroebnerBasis& a, const GroebnerBasis& b) {
    if (a.vars && b.vars && *a.vars != *b.vars) throw Error("mismatched variable lists or orders");
    return a.gens == b.gens;
}

bool radical_member(const GroebnerBasis& gb, std::size_t var_index) {
    if (!gb.vars || var_index >= gb.vars->size()) throw Error("variable index out of range");
    std::string tname = "_t";
    while (std::find(gb.vars->begin(), gb.vars->end(), tname) != gb.vars->end()) tname += "_";
    auto ext = std::make_shared<VarTable>(*gb.vars);
    ext->push_back(tname);
    VarTablePtr extp = ext;
    std::vector<std::size_t> imap(gb.vars->size());
    for (std::size_t i = 0; i < imap.size(); ++i) imap[i] = i;

    std::vector<MultiPoly> gens;
    for (const auto& g : gb.gens) gens.push_back(g.lift(extp, imap));
    // 1 - t*v
    MultiPoly tv = MultiPoly::variable(extp, ext->size() - 1) * MultiPoly::variable(extp, var_index);
    gens.push_back(MultiPoly::constant(extp, Rational(1)) - tv);
    return buchberger(extp, std::move(gens)).is_trivial_unit();
}

GroebnerBasis radical_variable_closure(const GroebnerBasis& gb) {
    if (!gb.vars || gb.gens.empty() || gb.is_trivial_unit()) return gb;
    std::vector<MultiPoly> gens = gb.gens;
    bool added = false;
    for (std::size_t v = 0; v < gb.vars->size(); ++v) {
        MultiPoly xv = MultiPoly::variable(gb.vars, v);
        if (gb.contains(xv)) continue;
        if (radical_member(gb, v)) {
            gens.push_back(xv);
            added = true;
        }
    }
    if (!added) return gb;
    return buchberger(gb.vars, std::move(gens));
}

std::vector<std::string> free_variables(const GroebnerBasis& gb) {
    std::vector<std::string> out;
    if (!gb.vars) return out;
    std::vector<bool> bound(gb.vars->size(), false);
    for (const auto& g : gb.gens) {
        const Exponents& lt = g.leading_monomial();
        for (std::size_t i = 0; i < lt.size(); ++i)
            if (lt[i] > 0) bound[i] = true;
    }
    for (std::size_t i = 0; i < bound.size(); ++i)
        if (!bound[i]) out.push_back((*gb.vars)[i]);
    return out;
}

bool point_on_variety(const GroebnerBasis& gb, const std::vector<Rational>& point) {
    for (const auto& g : gb.gens)
        if (g.eval(point) != 0) return false;
    return true;
}

} // namespace adend
