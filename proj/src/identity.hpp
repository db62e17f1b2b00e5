#ifndef ADEND_IDENTITY_HPP
#define ADEND_IDENTITY_HPP

#include "algebra.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace adend {

// AST of a multilinear identity.  The whole identity is the assertion
// "ast = 0"; an empty Sum is the zero expression.
struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    enum class Kind { Var, Apply, Scale, Sum, Neg };
    Kind kind;

    std::size_t var_index = 0;      // Var
    std::string name;               // Var: variable name, Apply: op name
    ExprPtr left, right;            // Apply
    Rational scalar;                // Scale (child in left)
    std::vector<ExprPtr> children;  // Sum

    static ExprPtr var(std::size_t idx, std::string n);
    static ExprPtr apply(std::string op, ExprPtr l, ExprPtr r);
    static ExprPtr scale(Rational s, ExprPtr c);
    static ExprPtr sum(std::vector<ExprPtr> cs);
    static ExprPtr neg(ExprPtr c);
    static ExprPtr zero();
};

bool expr_equal(const ExprPtr& a, const ExprPtr& b);

struct IdentityExpr {
    std::vector<std::string> vars; // formal variables, in declaration order
    ExprPtr ast;                   // lhs - rhs, asserted zero
    std::string label;             // optional display name

    std::set<std::string> op_names() const;
};

// Grammar: "x,y,z: <expr> = <expr>".  Ops are plain binary infix with
// mandatory parentheses for nesting; identifiers, the symbols > < . * and
// double-quoted names are all valid op tokens.  Rational scalar prefixes
// ("2/3*") and the literal 0 are the only numerics.  Multilinearity (every
// declared variable exactly once per expanded monomial) is enforced here.
IdentityExpr parse_identity(const std::string& src);

// "x,y: <expr>" without an equals sign; used for derived-op definitions.
IdentityExpr parse_expression(const std::string& src);

std::string print_identity(const IdentityExpr& id);
std::string print_expr(const ExprPtr& e);

// Substitutes every Apply node whose op name has a definition; definitions
// are binary expressions over formal parameters.
ExprPtr expand_ops(const ExprPtr& e,
                   const std::function<const IdentityExpr*(const std::string&)>& lookup);

// Renames op symbols (slot -> algebra op).
ExprPtr bind_ops(const ExprPtr& e, const std::map<std::string, std::string>& binding);

template <class T>
std::vector<T> eval_expr(const ExprNode& n,
                         const std::function<const Tensor3T<T>&(const std::string&)>& op_lookup,
                         const std::vector<std::vector<T>>& assignment, std::size_t dim) {
    switch (n.kind) {
    case ExprNode::Kind::Var:
        return assignment[n.var_index];
    case ExprNode::Kind::Apply: {
        auto l = eval_expr(*n.left, op_lookup, assignment, dim);
        auto r = eval_expr(*n.right, op_lookup, assignment, dim);
        return eval_tensor(op_lookup(n.name), l, r);
    }
    case ExprNode::Kind::Scale: {
        auto c = eval_expr(*n.left, op_lookup, assignment, dim);
        for (auto& x : c) x = x * n.scalar;
        return c;
    }
    case ExprNode::Kind::Neg: {
        auto c = eval_expr(*n.left, op_lookup, assignment, dim);
        for (auto& x : c) x = -x;
        return c;
    }
    case ExprNode::Kind::Sum: {
        std::vector<T> acc(dim);
        for (const auto& ch : n.children) {
            auto c = eval_expr(*ch, op_lookup, assignment, dim);
            for (std::size_t i = 0; i < dim; ++i) acc[i] += c[i];
        }
        return acc;
    }
    }
    throw Error("corrupt expression node");
}

struct Verdict {
    bool holds = true;
    std::optional<std::vector<std::size_t>> witness; // basis indices, one per variable
    std::string detail;                              // failing identity label etc.
};

// Evaluates the identity on every basis tuple (sound and complete thanks to
// multilinearity); binding maps op symbols used in the AST to algebra ops.
Verdict check_identity(const IdentityExpr& id, const AlgebraSpace& alg,
                       const std::map<std::string, std::string>& binding = {});

// Evaluates on one arbitrary rational assignment (vectors per variable).
Vec eval_identity_at(const IdentityExpr& id, const AlgebraSpace& alg,
                     const std::vector<Vec>& assignment,
                     const std::map<std::string, std::string>& binding = {});

} // namespace adend

#endif
