#include "forms.hpp"

namespace adend {

namespace {

Rational form_at(const Mat& B, const Vec& u, const Vec& v) {
    Rational acc = 0;
    for (std::size_t p = 0; p < B.rows; ++p) {
        if (u[p] == 0) continue;
        for (std::size_t q = 0; q < B.cols; ++q)
            if (B.at(p, q) != 0 && v[q] != 0) acc += u[p] * B.at(p, q) * v[q];
    }
    return acc;
}

bool cyclic_vanishes(const Mat& B, const AlgebraSpace& alg, const Tensor3& t) {
    std::size_t n = alg.dim;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec ei = basis_vector(n, i), ej = basis_vector(n, j), ek = basis_vector(n, k);
                Rational s = form_at(B, eval_tensor(t, ei, ej), ek) +
                             form_at(B, eval_tensor(t, ej, ek), ei) +
                             form_at(B, eval_tensor(t, ek, ei), ej);
                if (s != 0) return false;
            }
    return true;
}

Tensor3 commutator_tensor(const Tensor3& t) {
    Tensor3 b(t.dim);
    for (std::size_t i = 0; i < t.dim; ++i)
        for (std::size_t j = 0; j < t.dim; ++j)
            for (std::size_t k = 0; k < t.dim; ++k)
                b.at(i, j, k) = t.at(i, j, k) - t.at(j, i, k);
    return b;
}

Tensor3 sum_tensor(const Tensor3& a, const Tensor3& b) {
    Tensor3 s(a.dim);
    for (std::size_t i = 0; i < s.c.size(); ++i) s.c[i] = a.c[i] + b.c[i];
    return s;
}

// Solves B(w, e_k) = rhs_k for every pair through one Gram inverse.
Tensor3 solve_through_gram(const Mat& Ginv_T, std::size_t n,
                           const std::function<Rational(std::size_t, std::size_t, std::size_t)>& rhs) {
    Tensor3 t(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec b(n);
            for (std::size_t k = 0; k < n; ++k) b[k] = rhs(i, j, k);
            Vec w = Ginv_T * b;
            for (std::size_t k = 0; k < n; ++k) t.at(i, j, k) = w[k];
        }
    return t;
}

} // namespace

FormReport classify_form(const Mat& B, const AlgebraSpace& alg, const std::string& op) {
    if (B.rows != alg.dim || B.cols != alg.dim) throw Error("Gram matrix shape mismatch");
    const Tensor3& t = alg.op(op);

    FormReport rep;
    rep.symmetric = B == B.transpose();
    Mat neg = Rational(-1) * B;
    rep.antisymmetric = neg == B.transpose();
    rep.nondegenerate = alg.dim == 0 || det(B) != 0;
    rep.connes = cyclic_vanishes(B, alg, t);
    rep.commutative_connes = rep.symmetric && rep.connes;
    rep.commutative_2cocycle = rep.symmetric && cyclic_vanishes(B, alg, commutator_tensor(t));
    return rep;
}

InvarianceVerdict check_invariance_anti_dendriform(const Mat& B, const AlgebraSpace& alg,
                                                   const std::string& tri_r,
                                                   const std::string& tri_l) {
    if (B.rows != alg.dim || B.cols != alg.dim) throw Error("Gram matrix shape mismatch");
    const Tensor3& cr = alg.op(tri_r);
    const Tensor3& cl = alg.op(tri_l);
    Tensor3 dot = sum_tensor(cr, cl);
    std::size_t n = alg.dim;

    InvarianceVerdict out;
    for (std::size_t i = 0; i < n && out.invariant; ++i)
        for (std::size_t j = 0; j < n && out.invariant; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec ei = basis_vector(n, i), ej = basis_vector(n, j), ek = basis_vector(n, k);
                Rational a = form_at(B, eval_tensor(cr, ei, ej), ek) +
                             form_at(B, ej, eval_tensor(dot, ek, ei));
                if (a != 0) {
                    out.invariant = false;
                    out.family = "tri_r";
                    out.witness = {{i, j, k}};
                    break;
                }
                Rational b = form_at(B, eval_tensor(cl, ei, ej), ek) +
                             form_at(B, ei, eval_tensor(dot, ej, ek));
                if (b != 0) {
                    out.invariant = false;
                    out.family = "tri_l";
                    out.witness = {{i, j, k}};
                    break;
                }
            }

    for (std::size_t i = 0; i < n && out.lemma_consequence; ++i)
        for (std::size_t j = 0; j < n && out.lemma_consequence; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec ei = basis_vector(n, i), ej = basis_vector(n, j), ek = basis_vector(n, k);
                if (form_at(B, eval_tensor(cl, ei, ej), ek) !=
                    form_at(B, eval_tensor(cr, ek, ei), ej)) {
                    out.lemma_consequence = false;
                    break;
                }
            }
    return out;
}

Verdict check_invariance_anti_pre_lie(const Mat& B, const AlgebraSpace& alg,
                                      const std::string& circ) {
    if (B.rows != alg.dim || B.cols != alg.dim) throw Error("Gram matrix shape mismatch");
    const Tensor3& t = alg.op(circ);
    Tensor3 br = commutator_tensor(t);
    std::size_t n = alg.dim;
    Verdict v;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec ei = basis_vector(n, i), ej = basis_vector(n, j), ek = basis_vector(n, k);
                if (form_at(B, eval_tensor(t, ei, ej), ek) !=
                    form_at(B, ej, eval_tensor(br, ei, ek))) {
                    v.holds = false;
                    v.witness = {{i, j, k}};
                    return v;
                }
            }
    return v;
}

ReconstructReport reconstruct_anti_dendriform(const Mat& B, const AlgebraSpace& alg,
                                              const std::string& op, const std::string& out_r,
                                              const std::string& out_l) {
    FormReport rep = classify_form(B, alg, op);
    if (!rep.nondegenerate) throw Error("reconstruction requires a nondegenerate form");
    if (!rep.commutative_connes)
        throw Error("reconstruction requires a commutative Connes cocycle");

    const Tensor3& c = alg.op(op);
    std::size_t n = alg.dim;
    auto ginv = inverse(B.transpose());
    Mat Ginv_T = *ginv; // nondegenerate by the check above

    Tensor3 cr = solve_through_gram(Ginv_T, n, [&](std::size_t i, std::size_t j, std::size_t k) {
        Rational acc = 0; // -B(e_j, e_k . e_i)
        for (std::size_t q = 0; q < n; ++q) acc += B.at(j, q) * c.at(k, i, q);
        return -acc;
    });
    Tensor3 cl = solve_through_gram(Ginv_T, n, [&](std::size_t i, std::size_t j, std::size_t k) {
        Rational acc = 0; // -B(e_i, e_j . e_k)
        for (std::size_t q = 0; q < n; ++q) acc += B.at(i, q) * c.at(j, k, q);
        return -acc;
    });

    ReconstructReport out{alg, false, false, false};
    out.algebra.add_op(out_r, cr);
    out.algebra.add_op(out_l, cl);
    out.anti_dendriform =
        check_structure(out.algebra, "anti-dendriform", {{"tri_r", out_r}, {"tri_l", out_l}}).holds;
    out.sums_to_product = sum_tensor(cr, cl) == c;
    out.invariant = check_invariance_anti_dendriform(B, out.algebra, out_r, out_l).invariant;
    return out;
}

AlgebraSpace anti_pre_lie_from_form(const Mat& B, const AlgebraSpace& alg, const std::string& op,
                                    const std::string& out) {
    if (B.rows != alg.dim || B.cols != alg.dim) throw Error("Gram matrix shape mismatch");
    if (alg.dim > 0 && det(B) == 0) throw Error("compatible anti-pre-Lie needs a nondegenerate form");
    const Tensor3& c = alg.op(op);
    Tensor3 br = commutator_tensor(c);
    std::size_t n = alg.dim;
    Mat Ginv_T = *inverse(B.transpose());

    Tensor3 t = solve_through_gram(Ginv_T, n, [&](std::size_t i, std::size_t j, std::size_t k) {
        Rational acc = 0; // B(e_j, [e_i, e_k])
        for (std::size_t q = 0; q < n; ++q) acc += B.at(j, q) * br.at(i, k, q);
        return acc;
    });
    AlgebraSpace out_alg = alg;
    out_alg.add_op(out, t);
    return out_alg;
}

AlgebraSpace form_on_semidirect(const AlgebraSpace& alg, const std::string& tri_r,
                                const std::string& tri_l) {
    StructureVerdict sv =
        check_structure(alg, "anti-dendriform", {{"tri_r", tri_r}, {"tri_l", tri_l}});
    if (!sv.holds)
        throw Error("form_on_semidirect requires an anti-dendriform pair (failed " +
                    sv.failed_identity + ")");

    Bimodule md = dual_bimodule(neg_mult_bimodule(alg, tri_r, tri_l));
    AlgebraSpace s = semidirect(md);

    std::size_t n = alg.dim;
    Mat G(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        G.at(i, n + i) = 1;
        G.at(n + i, i) = 1;
    }
    s.forms.emplace("B", std::move(G));
    return s;
}

FormEquivalenceReport form_equivalence_check(const Mat& B, const AlgebraSpace& alg,
                                             const std::string& tri_r, const std::string& tri_l) {
    if (B.rows != alg.dim || B.cols != alg.dim) throw Error("Gram matrix shape mismatch");
    std::size_t n = alg.dim;
    Tensor3 dot = sum_tensor(alg.op(tri_r), alg.op(tri_l));
    AlgebraSpace sum_alg;
    sum_alg.dim = n;
    sum_alg.basis = alg.basis;
    sum_alg.ops.emplace("mul", dot);

    Mat psi = B.transpose();
    bool invertible = n == 0 || det(B) != 0;
    bool intertwines = true;
    for (std::size_t i = 0; i < n && intertwines; ++i) {
        Vec ei = basis_vector(n, i);
        Mat negL = Rational(-1) * mult_operator(alg, tri_r, Side::Left, ei);
        Mat negR = Rational(-1) * mult_operator(alg, tri_l, Side::Right, ei);
        Mat Rdual = mult_operator(sum_alg, "mul", Side::Right, ei).transpose();
        Mat Ldual = mult_operator(sum_alg, "mul", Side::Left, ei).transpose();
        if (!(psi * negL == Rdual * psi) || !(psi * negR == Ldual * psi)) intertwines = false;
    }

    FormEquivalenceReport rep;
    rep.equivalent = invertible && intertwines;
    rep.nondegenerate_invariant =
        invertible && check_invariance_anti_dendriform(B, alg, tri_r, tri_l).invariant;
    rep.agree = rep.equivalent == rep.nondegenerate_invariant;
    return rep;
}

} // namespace adend
