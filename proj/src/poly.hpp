#ifndef ADEND_POLY_HPP
#define ADEND_POLY_HPP

#include "rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace adend {

// Ordered list of indeterminate names, shared between all polynomials of one
// system.  Variable significance for the monomial order is declaration order.
using VarTable = std::vector<std::string>;
using VarTablePtr = std::shared_ptr<const VarTable>;

using Exponents = std::vector<unsigned>;

unsigned total_degree(const Exponents& e);

// Graded reverse lexicographic: higher total degree wins; on ties the
// monomial with the smaller exponent at the last differing position wins.
bool grevlex_greater(const Exponents& a, const Exponents& b);

struct GrevlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const { return grevlex_greater(a, b); }
};

// Multivariate polynomial over Q.  Terms are kept in descending grevlex
// order, so begin() is the leading term.  A default-constructed poly (null
// variable table) is the zero polynomial over any table.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rational, GrevlexGreater>;

    MultiPoly() = default;
    explicit MultiPoly(VarTablePtr vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(VarTablePtr vars, const Rational& c);
    static MultiPoly variable(VarTablePtr vars, std::size_t index);

    const VarTablePtr& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;

    const Exponents& leading_monomial() const;
    const Rational& leading_coefficient() const;
    unsigned degree() const;

    void add_term(const Exponents& e, const Rational& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rational& s) const;

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

    MultiPoly monic() const;

    Rational eval(const std::vector<Rational>& point) const;

    // Substitutes values for a subset of variables, staying in the same ring.
    MultiPoly substitute(const std::map<std::size_t, Rational>& values) const;

    // Re-embeds into a larger variable table; index_map[i] is the position of
    // old variable i in the new table.
    MultiPoly lift(const VarTablePtr& new_vars, const std::vector<std::size_t>& index_map) const;

    std::string str() const;

private:
    void unify(const MultiPoly& o);

    VarTablePtr vars_;
    TermMap terms_;
};

std::string monomial_str(const VarTable& vars, const Exponents& e);

// Normal form of p modulo the (not necessarily Groebner) basis: no term of
// the result is divisible by any basis leading term.
MultiPoly poly_reduce(const MultiPoly& p, const std::vector<MultiPoly>& basis);

struct GroebnerBasis {
    VarTablePtr vars;
    std::vector<MultiPoly> gens; // reduced, monic, descending leading terms

    bool is_trivial_unit() const; // basis == {1}
    bool contains(const MultiPoly& p) const;
    bool operator==(const GroebnerBasis& o) const;
};

// Reduced Groebner basis under grevlex.  The empty generator list yields the
// zero ideal (empty basis); inconsistent systems yield {1}.
GroebnerBasis buchberger(VarTablePtr vars, std::vector<MultiPoly> gens);

bool ideal_equal(const GroebnerBasis& a, const GroebnerBasis& b);

// Rabinowitsch test: v lies in the radical of I iff I + (1 - t*v) is the
// unit ideal.
bool radical_member(const GroebnerBasis& gb, std::size_t var_index);

// Adds every variable that lies in the radical of the ideal and recomputes
// the reduced basis.  The variety is unchanged; generated coordinate ideals
// come out in their canonical {v1,...,vk} form.
GroebnerBasis radical_variable_closure(const GroebnerBasis& gb);

// Variables absent from every leading term of the reduced basis.
std::vector<std::string> free_variables(const GroebnerBasis& gb);

bool point_on_variety(const GroebnerBasis& gb, const std::vector<Rational>& point);

} // namespace adend

#endif
