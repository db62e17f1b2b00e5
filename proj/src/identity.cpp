#include "identity.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace adend {

ExprPtr ExprNode::var(std::size_t idx, std::string n) {
    auto e = std::make_shared<ExprNode>();
    e->kind = Kind::Var;
    e->var_index = idx;
    e->name = std::move(n);
    return e;
}

ExprPtr ExprNode::apply(std::string op, ExprPtr l, ExprPtr r) {
    auto e = std::make_shared<ExprNode>();
    e->kind = Kind::Apply;
    e->name = std::move(op);
    e->left = std::move(l);
    e->right = std::move(r);
    return e;
}

ExprPtr ExprNode::scale(Rational s, ExprPtr c) {
    auto e = std::make_shared<ExprNode>();
    e->kind = Kind::Scale;
    e->scalar = std::move(s);
    e->left = std::move(c);
    return e;
}

ExprPtr ExprNode::sum(std::vector<ExprPtr> cs) {
    if (cs.size() == 1) return cs[0];
    auto e = std::make_shared<ExprNode>();
    e->kind = Kind::Sum;
    e->children = std::move(cs);
    return e;
}

ExprPtr ExprNode::neg(ExprPtr c) {
    auto e = std::make_shared<ExprNode>();
    e->kind = Kind::Neg;
    e->left = std::move(c);
    return e;
}

ExprPtr ExprNode::zero() { return sum({}); }

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind) return false;
    switch (a->kind) {
    case ExprNode::Kind::Var:
        return a->var_index == b->var_index && a->name == b->name;
    case ExprNode::Kind::Apply:
        return a->name == b->name && expr_equal(a->left, b->left) && expr_equal(a->right, b->right);
    case ExprNode::Kind::Scale:
        return a->scalar == b->scalar && expr_equal(a->left, b->left);
    case ExprNode::Kind::Neg:
        return expr_equal(a->left, b->left);
    case ExprNode::Kind::Sum:
        if (a->children.size() != b->children.size()) return false;
        for (std::size_t i = 0; i < a->children.size(); ++i)
            if (!expr_equal(a->children[i], b->children[i])) return false;
        return true;
    }
    return false;
}

static void collect_ops(const ExprPtr& e, std::set<std::string>& out) {
    if (!e) return;
    if (e->kind == ExprNode::Kind::Apply) {
        out.insert(e->name);
        collect_ops(e->left, out);
        collect_ops(e->right, out);
    } else {
        collect_ops(e->left, out);
        for (const auto& c : e->children) collect_ops(c, out);
    }
}

std::set<std::string> IdentityExpr::op_names() const {
    std::set<std::string> out;
    collect_ops(ast, out);
    return out;
}

// ---------------------------------------------------------------- tokenizer

namespace {

struct Token {
    enum class Kind { Ident, Int, Quoted, Sym, End };
    Kind kind;
    std::string text;
    std::size_t pos; // byte offset, for diagnostics
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& msg, std::size_t pos) const {
        std::ostringstream os;
        os << "identity syntax error at offset " << pos << ": " << msg;
        throw Error(os.str());
    }
    [[noreturn]] void fail(const std::string& msg) const { fail(msg, tok_.pos); }

private:
    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        tok_.pos = i_;
        if (i_ >= src_.size()) {
            tok_ = {Token::Kind::End, "", i_};
            return;
        }
        char ch = src_[i_];
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t j = i_;
            while (j < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_' || src_[j] == '\''))
                ++j;
            tok_ = {Token::Kind::Ident, src_.substr(i_, j - i_), i_};
            i_ = j;
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i_;
            while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
            tok_ = {Token::Kind::Int, src_.substr(i_, j - i_), i_};
            i_ = j;
            return;
        }
        if (ch == '"') {
            std::size_t j = i_ + 1;
            while (j < src_.size() && src_[j] != '"') ++j;
            if (j >= src_.size()) fail("unterminated quoted op name", i_);
            tok_ = {Token::Kind::Quoted, src_.substr(i_ + 1, j - i_ - 1), i_};
            i_ = j + 1;
            return;
        }
        static const std::string syms = ",:=+-*/()<>.";
        if (syms.find(ch) != std::string::npos) {
            tok_ = {Token::Kind::Sym, std::string(1, ch), i_};
            ++i_;
            return;
        }
        fail(std::string("unexpected character '") + ch + "'", i_);
    }

    const std::string& src_;
    std::size_t i_ = 0;
    Token tok_{Token::Kind::End, "", 0};
};

class Parser {
public:
    Parser(const std::string& src, bool with_equals) : lex_(src), with_equals_(with_equals) {}

    IdentityExpr run() {
        IdentityExpr id;
        id.vars = parse_var_list();
        for (std::size_t i = 0; i < id.vars.size(); ++i) var_index_[id.vars[i]] = i;
        ExprPtr lhs = parse_expr();
        if (with_equals_) {
            expect_sym("=");
            ExprPtr rhs = parse_expr();
            if (is_zero(rhs))
                id.ast = lhs;
            else if (is_zero(lhs))
                id.ast = ExprNode::neg(rhs);
            else
                id.ast = ExprNode::sum({lhs, ExprNode::neg(rhs)});
        } else {
            id.ast = lhs;
        }
        if (lex_.peek().kind != Token::Kind::End) lex_.fail("trailing input after identity");
        check_multilinear(id);
        return id;
    }

private:
    static bool is_zero(const ExprPtr& e) {
        return e->kind == ExprNode::Kind::Sum && e->children.empty();
    }

    std::vector<std::string> parse_var_list() {
        std::vector<std::string> vars;
        for (;;) {
            Token t = lex_.next();
            if (t.kind != Token::Kind::Ident) lex_.fail("expected variable name", t.pos);
            if (std::find(vars.begin(), vars.end(), t.text) != vars.end())
                lex_.fail("duplicate variable '" + t.text + "'", t.pos);
            vars.push_back(t.text);
            Token sep = lex_.next();
            if (sep.kind == Token::Kind::Sym && sep.text == ",") continue;
            if (sep.kind == Token::Kind::Sym && sep.text == ":") break;
            lex_.fail("expected ',' or ':' after variable name", sep.pos);
        }
        return vars;
    }

    void expect_sym(const std::string& s) {
        Token t = lex_.next();
        if (t.kind != Token::Kind::Sym || t.text != s) lex_.fail("expected '" + s + "'", t.pos);
    }

    bool peek_sym(const std::string& s) const {
        return lex_.peek().kind == Token::Kind::Sym && lex_.peek().text == s;
    }

    ExprPtr parse_expr() {
        std::vector<ExprPtr> terms;
        terms.push_back(parse_term());
        for (;;) {
            if (peek_sym("+")) {
                lex_.next();
                terms.push_back(parse_term());
            } else if (peek_sym("-")) {
                lex_.next();
                terms.push_back(ExprNode::neg(parse_term()));
            } else {
                break;
            }
        }
        return ExprNode::sum(std::move(terms));
    }

    // true when the lookahead can act as an infix op token
    bool at_op_token() const {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::Quoted) return true;
        if (t.kind == Token::Kind::Ident) return true; // resolved by position
        if (t.kind == Token::Kind::Sym)
            return t.text == ">" || t.text == "<" || t.text == "." || t.text == "*";
        return false;
    }

    ExprPtr parse_term() {
        ExprPtr a = parse_primary();
        if (!at_op_token()) return a;
        Token op = lex_.next();
        ExprPtr b = parse_primary();
        if (at_op_token())
            lex_.fail("chained infix operations are ambiguous; add parentheses");
        return ExprNode::apply(op.text, std::move(a), std::move(b));
    }

    ExprPtr parse_primary() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::Sym && t.text == "-") {
            lex_.next();
            return ExprNode::neg(parse_primary());
        }
        if (t.kind == Token::Kind::Sym && t.text == "(") {
            lex_.next();
            ExprPtr e = parse_expr();
            expect_sym(")");
            return e;
        }
        if (t.kind == Token::Kind::Int) {
            Token num = lex_.next();
            Rational r(BigInt(num.text));
            if (peek_sym("/")) {
                lex_.next();
                Token den = lex_.next();
                if (den.kind != Token::Kind::Int) lex_.fail("expected denominator", den.pos);
                if (BigInt(den.text) == 0) lex_.fail("zero denominator", den.pos);
                r /= Rational(BigInt(den.text));
            }
            if (peek_sym("*")) {
                lex_.next();
                return ExprNode::scale(r, parse_primary());
            }
            if (r != 0)
                lex_.fail("bare scalar literal (only 0 or a 'r*expr' prefix is allowed)", num.pos);
            return ExprNode::zero();
        }
        if (t.kind == Token::Kind::Ident) {
            Token name = lex_.next();
            auto it = var_index_.find(name.text);
            if (it == var_index_.end())
                lex_.fail("unknown variable '" + name.text + "'", name.pos);
            return ExprNode::var(it->second, name.text);
        }
        lex_.fail("expected expression");
    }

    // Every expanded monomial must contain each declared variable exactly once.
    void check_multilinear(const IdentityExpr& id) const {
        struct Monomial {
            Rational coef;
            std::vector<unsigned> counts;
        };
        std::function<std::vector<Monomial>(const ExprPtr&)> expand =
            [&](const ExprPtr& e) -> std::vector<Monomial> {
            switch (e->kind) {
            case ExprNode::Kind::Var: {
                Monomial m{Rational(1), std::vector<unsigned>(id.vars.size(), 0u)};
                m.counts[e->var_index] = 1;
                return {m};
            }
            case ExprNode::Kind::Apply: {
                auto ls = expand(e->left), rs = expand(e->right);
                std::vector<Monomial> out;
                for (const auto& l : ls)
                    for (const auto& r : rs) {
                        Monomial m{l.coef * r.coef, l.counts};
                        for (std::size_t i = 0; i < m.counts.size(); ++i) m.counts[i] += r.counts[i];
                        out.push_back(std::move(m));
                    }
                return out;
            }
            case ExprNode::Kind::Scale: {
                if (e->scalar == 0) return {};
                auto cs = expand(e->left);
                for (auto& m : cs) m.coef *= e->scalar;
                return cs;
            }
            case ExprNode::Kind::Neg: {
                auto cs = expand(e->left);
                for (auto& m : cs) m.coef = -m.coef;
                return cs;
            }
            case ExprNode::Kind::Sum: {
                std::vector<Monomial> out;
                for (const auto& c : e->children) {
                    auto cs = expand(c);
                    out.insert(out.end(), cs.begin(), cs.end());
                }
                return out;
            }
            }
            return {};
        };
        for (const auto& m : expand(id.ast)) {
            for (std::size_t i = 0; i < id.vars.size(); ++i) {
                if (m.counts[i] == 1) continue;
                std::ostringstream os;
                os << "expression is not multilinear: variable '" << id.vars[i] << "' occurs "
                   << m.counts[i] << " times in a monomial";
                throw Error(os.str());
            }
        }
    }

    Lexer lex_;
    bool with_equals_;
    std::map<std::string, std::size_t> var_index_;
};

} // namespace

IdentityExpr parse_identity(const std::string& src) { return Parser(src, true).run(); }
IdentityExpr parse_expression(const std::string& src) { return Parser(src, false).run(); }

// ------------------------------------------------------------------ printer

static bool op_token_needs_quotes(const std::string& op) {
    if (op.size() == 1 && (op == ">" || op == "<" || op == "." || op == "*")) return false;
    if (op.empty()) return true;
    if (!std::isalpha(static_cast<unsigned char>(op[0])) && op[0] != '_') return true;
    for (char c : op)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '\'') return true;
    return false;
}

std::string print_expr(const ExprPtr& e) {
    switch (e->kind) {
    case ExprNode::Kind::Var:
        return e->name;
    case ExprNode::Kind::Apply: {
        std::string op = op_token_needs_quotes(e->name) ? "\"" + e->name + "\"" : e->name;
        auto operand = [](const ExprPtr& c) {
            std::string s = print_expr(c);
            if (c->kind == ExprNode::Kind::Sum && !c->children.empty()) s = "(" + s + ")";
            return s;
        };
        return "(" + operand(e->left) + " " + op + " " + operand(e->right) + ")";
    }
    case ExprNode::Kind::Scale: {
        std::string inner = print_expr(e->left);
        if (e->left->kind == ExprNode::Kind::Sum && !e->left->children.empty())
            inner = "(" + inner + ")";
        if (e->scalar < 0) return "-" + rat_to_string(-e->scalar) + "*" + inner;
        return rat_to_string(e->scalar) + "*" + inner;
    }
    case ExprNode::Kind::Neg: {
        std::string inner = print_expr(e->left);
        if (e->left->kind == ExprNode::Kind::Sum && !e->left->children.empty())
            inner = "(" + inner + ")";
        return "-" + inner;
    }
    case ExprNode::Kind::Sum: {
        if (e->children.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < e->children.size(); ++i) {
            const ExprPtr& c = e->children[i];
            if (i == 0) {
                out += print_expr(c);
            } else if (c->kind == ExprNode::Kind::Neg) {
                std::string inner = print_expr(c->left);
                if (c->left->kind == ExprNode::Kind::Sum && !c->left->children.empty())
                    inner = "(" + inner + ")";
                out += " - " + inner;
            } else {
                out += " + " + print_expr(c);
            }
        }
        return out;
    }
    }
    throw Error("corrupt expression node");
}

std::string print_identity(const IdentityExpr& id) {
    std::string out;
    for (std::size_t i = 0; i < id.vars.size(); ++i) {
        if (i) out += ",";
        out += id.vars[i];
    }
    out += ": " + print_expr(id.ast) + " = 0";
    return out;
}

// ------------------------------------------------------- derived-op support

static ExprPtr substitute_params(const ExprPtr& body, const std::vector<ExprPtr>& args) {
    switch (body->kind) {
    case ExprNode::Kind::Var:
        return args.at(body->var_index);
    case ExprNode::Kind::Apply:
        return ExprNode::apply(body->name, substitute_params(body->left, args),
                               substitute_params(body->right, args));
    case ExprNode::Kind::Scale:
        return ExprNode::scale(body->scalar, substitute_params(body->left, args));
    case ExprNode::Kind::Neg:
        return ExprNode::neg(substitute_params(body->left, args));
    case ExprNode::Kind::Sum: {
        std::vector<ExprPtr> cs;
        for (const auto& c : body->children) cs.push_back(substitute_params(c, args));
        return ExprNode::sum(std::move(cs));
    }
    }
    throw Error("corrupt expression node");
}

static ExprPtr expand_ops_once(const ExprPtr& e,
                               const std::function<const IdentityExpr*(const std::string&)>& lookup,
                               bool& changed) {
    switch (e->kind) {
    case ExprNode::Kind::Var:
        return e;
    case ExprNode::Kind::Apply: {
        ExprPtr l = expand_ops_once(e->left, lookup, changed);
        ExprPtr r = expand_ops_once(e->right, lookup, changed);
        if (const IdentityExpr* def = lookup(e->name)) {
            if (def->vars.size() != 2) throw Error("derived op '" + e->name + "' must be binary");
            changed = true;
            return substitute_params(def->ast, {l, r});
        }
        return ExprNode::apply(e->name, std::move(l), std::move(r));
    }
    case ExprNode::Kind::Scale:
        return ExprNode::scale(e->scalar, expand_ops_once(e->left, lookup, changed));
    case ExprNode::Kind::Neg:
        return ExprNode::neg(expand_ops_once(e->left, lookup, changed));
    case ExprNode::Kind::Sum: {
        std::vector<ExprPtr> cs;
        for (const auto& c : e->children) cs.push_back(expand_ops_once(c, lookup, changed));
        return ExprNode::sum(std::move(cs));
    }
    }
    throw Error("corrupt expression node");
}

ExprPtr expand_ops(const ExprPtr& e,
                   const std::function<const IdentityExpr*(const std::string&)>& lookup) {
    ExprPtr cur = e;
    for (int depth = 0; depth < 16; ++depth) {
        bool changed = false;
        cur = expand_ops_once(cur, lookup, changed);
        if (!changed) return cur;
    }
    throw Error("derived-op definitions expand without terminating (cycle?)");
}

ExprPtr bind_ops(const ExprPtr& e, const std::map<std::string, std::string>& binding) {
    switch (e->kind) {
    case ExprNode::Kind::Var:
        return e;
    case ExprNode::Kind::Apply: {
        auto it = binding.find(e->name);
        std::string op = it == binding.end() ? e->name : it->second;
        return ExprNode::apply(op, bind_ops(e->left, binding), bind_ops(e->right, binding));
    }
    case ExprNode::Kind::Scale:
        return ExprNode::scale(e->scalar, bind_ops(e->left, binding));
    case ExprNode::Kind::Neg:
        return ExprNode::neg(bind_ops(e->left, binding));
    case ExprNode::Kind::Sum: {
        std::vector<ExprPtr> cs;
        for (const auto& c : e->children) cs.push_back(bind_ops(c, binding));
        return ExprNode::sum(std::move(cs));
    }
    }
    throw Error("corrupt expression node");
}

// ---------------------------------------------------------------- checking

Verdict check_identity(const IdentityExpr& id, const AlgebraSpace& alg,
                       const std::map<std::string, std::string>& binding) {
    ExprPtr bound = bind_ops(id.ast, binding);
    for (const auto& op : IdentityExpr{id.vars, bound}.op_names())
        if (!alg.has_op(op)) throw Error("unknown operation '" + op + "'");

    std::function<const Tensor3&(const std::string&)> lookup =
        [&](const std::string& op) -> const Tensor3& { return alg.op(op); };

    std::size_t k = id.vars.size();
    Verdict v;
    v.detail = id.label;
    if (alg.dim == 0) return v;

    std::vector<std::size_t> tuple(k, 0);
    std::vector<Vec> assignment(k);
    for (;;) {
        for (std::size_t i = 0; i < k; ++i) assignment[i] = basis_vector(alg.dim, tuple[i]);
        Vec r = eval_expr<Rational>(*bound, lookup, assignment, alg.dim);
        if (!is_zero(r)) {
            v.holds = false;
            v.witness = tuple;
            return v;
        }
        // lexicographic increment
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (++tuple[i] < alg.dim) break;
            tuple[i] = 0;
            if (i == 0) return v;
        }
        if (k == 0) return v;
    }
}

Vec eval_identity_at(const IdentityExpr& id, const AlgebraSpace& alg,
                     const std::vector<Vec>& assignment,
                     const std::map<std::string, std::string>& binding) {
    if (assignment.size() != id.vars.size()) throw Error("assignment arity mismatch");
    ExprPtr bound = bind_ops(id.ast, binding);
    std::function<const Tensor3&(const std::string&)> lookup =
        [&](const std::string& op) -> const Tensor3& { return alg.op(op); };
    return eval_expr<Rational>(*bound, lookup, assignment, alg.dim);
}

} // namespace adend
