#include "transforms.hpp"

namespace adend {

namespace {

Tensor3 flip(const Tensor3& t) {
    Tensor3 f(t.dim);
    for (std::size_t i = 0; i < t.dim; ++i)
        for (std::size_t j = 0; j < t.dim; ++j)
            for (std::size_t k = 0; k < t.dim; ++k)
                f.at(i, j, k) = t.at(j, i, k);
    return f;
}

Tensor3 lin(const Rational& a, const Tensor3& x, const Rational& b, const Tensor3& y) {
    Tensor3 z(x.dim);
    for (std::size_t i = 0; i < z.c.size(); ++i) z.c[i] = a * x.c[i] + b * y.c[i];
    return z;
}

void warn_degenerate_q(const Rational& q, std::vector<std::string>& warnings) {
    if (q == 0)
        warnings.push_back("q = 0 is the identity transform; nothing is recombined");
    else if (q == 1 || q == -1)
        warnings.push_back("q = " + rat_to_string(q) +
                           " is not invertible: the source ops cannot be recovered");
}

} // namespace

TransformResult op_sum(const AlgebraSpace& alg, const std::string& op1, const std::string& op2,
                       const std::string& out) {
    TransformResult r{alg, {}};
    r.algebra.add_op(out, lin(1, alg.op(op1), 1, alg.op(op2)));
    return r;
}

TransformResult commutator(const AlgebraSpace& alg, const std::string& op,
                           const std::string& out) {
    TransformResult r{alg, {}};
    const Tensor3& t = alg.op(op);
    r.algebra.add_op(out, lin(1, t, -1, flip(t)));
    return r;
}

TransformResult assoc_pre_lie(const AlgebraSpace& alg, const std::string& succ,
                              const std::string& prec, const std::string& out) {
    TransformResult r{alg, {}};
    r.algebra.add_op(out, lin(1, alg.op(succ), -1, flip(alg.op(prec))));
    return r;
}

TransformResult assoc_anti_pre_lie(const AlgebraSpace& alg, const std::string& tri_r,
                                   const std::string& tri_l, const std::string& out) {
    TransformResult r{alg, {}};
    r.algebra.add_op(out, lin(1, alg.op(tri_r), -1, flip(alg.op(tri_l))));
    return r;
}

TransformResult q_pair(const AlgebraSpace& alg, const std::string& succ, const std::string& prec,
                       const Rational& q, const std::string& out_r, const std::string& out_l) {
    TransformResult r{alg, {}};
    warn_degenerate_q(q, r.warnings);
    r.algebra.add_op(out_r, lin(1, alg.op(succ), q, alg.op(prec)));
    r.algebra.add_op(out_l, lin(1, alg.op(prec), q, alg.op(succ)));
    return r;
}

TransformResult q_pair_alt(const AlgebraSpace& alg, const std::string& succ,
                           const std::string& prec, const Rational& q, const std::string& out_r,
                           const std::string& out_l) {
    TransformResult r{alg, {}};
    warn_degenerate_q(q, r.warnings);
    r.algebra.add_op(out_r, lin(1, alg.op(succ), q, flip(alg.op(succ))));
    r.algebra.add_op(out_l, lin(1, alg.op(prec), q, flip(alg.op(prec))));
    return r;
}

TransformResult q_single(const AlgebraSpace& alg, const std::string& op, const Rational& q,
                         const std::string& out) {
    TransformResult r{alg, {}};
    warn_degenerate_q(q, r.warnings);
    const Tensor3& t = alg.op(op);
    r.algebra.add_op(out, lin(1, t, q, flip(t)));
    return r;
}

} // namespace adend
