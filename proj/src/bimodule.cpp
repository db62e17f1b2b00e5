#include "bimodule.hpp"

#include <algorithm>
#include <set>

namespace adend {

namespace {

// action of a base element with coordinates x through per-basis matrices
Mat action(const std::vector<Mat>& mats, const Vec& x, std::size_t space_dim) {
    Mat m(space_dim, space_dim);
    for (std::size_t p = 0; p < x.size(); ++p) {
        if (x[p] == 0) continue;
        for (std::size_t i = 0; i < m.a.size(); ++i) m.a[i] += x[p] * mats[p].a[i];
    }
    return m;
}

std::vector<std::string> disjoint_names(const std::vector<std::string>& taken,
                                        std::vector<std::string> names) {
    std::set<std::string> used(taken.begin(), taken.end());
    for (auto& n : names) {
        while (used.count(n)) n += "'";
        used.insert(n);
    }
    return names;
}

} // namespace

void Bimodule::validate_shapes() const {
    base.validate();
    if (!base.has_op(op)) throw Error("bimodule base lacks op '" + op + "'");
    if (l.size() != base.dim || r.size() != base.dim)
        throw Error("bimodule needs one l- and one r-matrix per base basis vector");
    for (const auto& m : l)
        if (m.rows != space_dim || m.cols != space_dim) throw Error("bimodule l-matrix shape mismatch");
    for (const auto& m : r)
        if (m.rows != space_dim || m.cols != space_dim) throw Error("bimodule r-matrix shape mismatch");
    if (space_names.size() != space_dim) throw Error("bimodule space names mismatch");
}

Bimodule regular_bimodule(const AlgebraSpace& alg, const std::string& op) {
    Bimodule m;
    m.base = alg;
    m.op = op;
    m.space_dim = alg.dim;
    m.space_names = alg.basis;
    for (std::size_t i = 0; i < alg.dim; ++i) {
        Vec ei = basis_vector(alg.dim, i);
        m.l.push_back(mult_operator(alg, op, Side::Left, ei));
        m.r.push_back(mult_operator(alg, op, Side::Right, ei));
    }
    m.validate_shapes();
    return m;
}

Bimodule neg_mult_bimodule(const AlgebraSpace& alg, const std::string& tri_r,
                           const std::string& tri_l) {
    const Tensor3& cr = alg.op(tri_r);
    const Tensor3& cl = alg.op(tri_l);
    Tensor3 sum(alg.dim);
    for (std::size_t i = 0; i < sum.c.size(); ++i) sum.c[i] = cr.c[i] + cl.c[i];

    Bimodule m;
    m.base.dim = alg.dim;
    m.base.basis = alg.basis;
    m.base.ops.emplace("mul", std::move(sum));
    m.op = "mul";
    m.space_dim = alg.dim;
    m.space_names = alg.basis;
    for (std::size_t i = 0; i < alg.dim; ++i) {
        Vec ei = basis_vector(alg.dim, i);
        m.l.push_back(Rational(-1) * mult_operator(alg, tri_r, Side::Left, ei));
        m.r.push_back(Rational(-1) * mult_operator(alg, tri_l, Side::Right, ei));
    }
    m.validate_shapes();
    return m;
}

BimoduleVerdict check_bimodule(const Bimodule& m) {
    m.validate_shapes();
    BimoduleVerdict out;
    std::size_t n = m.base.dim;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec prod = eval_op(m.base, m.op, basis_vector(n, i), basis_vector(n, j));
            Mat lp = action(m.l, prod, m.space_dim);
            Mat rp = action(m.r, prod, m.space_dim);
            if (!(lp == m.l[i] * m.l[j])) {
                out = {false, "left", {{i, j}}};
                return out;
            }
            if (!(rp == m.r[j] * m.r[i])) {
                out = {false, "right", {{i, j}}};
                return out;
            }
            if (!(m.l[i] * m.r[j] == m.r[j] * m.l[i])) {
                out = {false, "commute", {{i, j}}};
                return out;
            }
        }
    return out;
}

Bimodule dual_bimodule(const Bimodule& m) {
    m.validate_shapes();
    Bimodule d = m;
    d.space_names.clear();
    for (const auto& n : m.space_names) d.space_names.push_back(n + "*");
    for (std::size_t i = 0; i < m.base.dim; ++i) {
        d.l[i] = m.r[i].transpose();
        d.r[i] = m.l[i].transpose();
    }
    return d;
}

AlgebraSpace semidirect(const Bimodule& m) {
    BimoduleVerdict v = check_bimodule(m);
    if (!v.holds) throw Error("semidirect product requires a valid bimodule (failed " + v.equation + " axiom)");

    std::size_t n = m.base.dim, k = m.space_dim;
    AlgebraSpace out;
    out.dim = n + k;
    out.basis = m.base.basis;
    for (const auto& nm : disjoint_names(m.base.basis, m.space_names)) out.basis.push_back(nm);

    Tensor3 t(out.dim);
    const Tensor3& cb = m.base.op(m.op);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t p = 0; p < n; ++p) t.at(i, j, p) = cb.at(i, j, p);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t p = 0; p < k; ++p) t.at(i, n + j, n + p) = m.l[i].at(p, j);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t p = 0; p < k; ++p) t.at(n + i, j, n + p) = m.r[j].at(p, i);
    out.ops.emplace(m.op, std::move(t));
    out.validate();
    return out;
}

AlgebraSpace double_space(const AlgebraSpace& alg, const std::string& tri_r,
                          const std::string& tri_l, const std::string& out_op) {
    const Tensor3& cr = alg.op(tri_r);
    const Tensor3& cl = alg.op(tri_l);
    std::size_t n = alg.dim;

    AlgebraSpace out;
    out.dim = 2 * n;
    out.basis = alg.basis;
    for (const auto& nm : disjoint_names(alg.basis, alg.basis)) out.basis.push_back(nm);

    Tensor3 t(2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t p = 0; p < n; ++p) {
                t.at(i, j, p) = cr.at(i, j, p) + cl.at(i, j, p);
                t.at(i, n + j, n + p) = -cr.at(i, j, p);
                t.at(n + i, j, n + p) = -cl.at(i, j, p);
            }
    out.ops.emplace(out_op, std::move(t));
    out.validate();
    return out;
}

OperatorCheckReport check_anti_O(const Mat& T, const Bimodule& m) {
    m.validate_shapes();
    if (T.rows != m.base.dim || T.cols != m.space_dim)
        throw Error("anti-O-operator must map the module space to the base");

    OperatorCheckReport rep;
    rep.is_operator = true;
    std::size_t k = m.space_dim;

    std::vector<Vec> Tu(k);
    for (std::size_t i = 0; i < k; ++i) Tu[i] = T * basis_vector(k, i);

    for (std::size_t i = 0; i < k && rep.is_operator; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Vec lhs = eval_op(m.base, m.op, Tu[i], Tu[j]);
            Vec inner = action(m.l, Tu[i], k) * basis_vector(k, j);
            Vec rv = action(m.r, Tu[j], k) * basis_vector(k, i);
            for (std::size_t p = 0; p < k; ++p) inner[p] += rv[p];
            Vec rhs = T * inner;
            for (std::size_t p = 0; p < m.base.dim; ++p) lhs[p] += rhs[p];
            if (!is_zero(lhs)) {
                rep.is_operator = false;
                rep.first_failure = {{"operator", {i, j}}};
                break;
            }
        }

    // strongness is a refinement of being an operator
    rep.is_strong = rep.is_operator;
    for (std::size_t i = 0; i < k && rep.is_strong; ++i)
        for (std::size_t j = 0; j < k && rep.is_strong; ++j) {
            Vec tij = eval_op(m.base, m.op, Tu[i], Tu[j]);
            Mat lij = action(m.l, tij, k);
            for (std::size_t w = 0; w < k; ++w) {
                Vec lhs = lij * basis_vector(k, w);
                Vec tjw = eval_op(m.base, m.op, Tu[j], Tu[w]);
                Vec rhs = action(m.r, tjw, k) * basis_vector(k, i);
                for (std::size_t p = 0; p < k; ++p) lhs[p] -= rhs[p];
                if (!is_zero(lhs)) {
                    rep.is_strong = false;
                    if (!rep.first_failure) rep.first_failure = {{"strong", {i, j, w}}};
                    break;
                }
            }
        }
    return rep;
}

OperatorCheckReport check_anti_rb(const Mat& P, const AlgebraSpace& alg, const std::string& op) {
    if (P.rows != alg.dim || P.cols != alg.dim)
        throw Error("anti-Rota-Baxter operator must be square on the algebra");
    if (!check_structure(alg, "associative", {{"op", op}}).holds)
        throw Error("anti-Rota-Baxter check requires an associative op (strongness drops parentheses)");

    OperatorCheckReport rep;
    rep.is_operator = true;
    std::size_t n = alg.dim;

    std::vector<Vec> Pe(n);
    for (std::size_t i = 0; i < n; ++i) Pe[i] = P * basis_vector(n, i);

    for (std::size_t i = 0; i < n && rep.is_operator; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec lhs = eval_op(alg, op, Pe[i], Pe[j]);
            Vec inner = eval_op(alg, op, Pe[i], basis_vector(n, j));
            Vec inner2 = eval_op(alg, op, basis_vector(n, i), Pe[j]);
            for (std::size_t p = 0; p < n; ++p) inner[p] += inner2[p];
            Vec rhs = P * inner;
            for (std::size_t p = 0; p < n; ++p) lhs[p] += rhs[p];
            if (!is_zero(lhs)) {
                rep.is_operator = false;
                rep.first_failure = {{"operator", {i, j}}};
                break;
            }
        }

    rep.is_strong = rep.is_operator;
    for (std::size_t i = 0; i < n && rep.is_strong; ++i)
        for (std::size_t j = 0; j < n && rep.is_strong; ++j) {
            Vec pij = eval_op(alg, op, Pe[i], Pe[j]);
            for (std::size_t w = 0; w < n; ++w) {
                Vec lhs = eval_op(alg, op, pij, basis_vector(n, w));
                Vec pjw = eval_op(alg, op, Pe[j], Pe[w]);
                Vec rhs = eval_op(alg, op, basis_vector(n, i), pjw);
                for (std::size_t p = 0; p < n; ++p) lhs[p] -= rhs[p];
                if (!is_zero(lhs)) {
                    rep.is_strong = false;
                    if (!rep.first_failure) rep.first_failure = {{"strong", {i, j, w}}};
                    break;
                }
            }
        }
    return rep;
}

Verdict check_anti_1_cocycle(const Mat& D, const Bimodule& m) {
    m.validate_shapes();
    if (D.rows != m.space_dim || D.cols != m.base.dim)
        throw Error("anti-1-cocycle must map the base to the module space");
    Verdict v;
    std::size_t n = m.base.dim;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec prod = eval_op(m.base, m.op, basis_vector(n, i), basis_vector(n, j));
            Vec lhs = D * prod;
            Vec a = m.l[i] * (D * basis_vector(n, j));
            Vec b = m.r[j] * (D * basis_vector(n, i));
            for (std::size_t p = 0; p < m.space_dim; ++p) lhs[p] += a[p] + b[p];
            if (!is_zero(lhs)) {
                v.holds = false;
                v.witness = {{i, j}};
                return v;
            }
        }
    return v;
}

AlgebraSpace induced_ops_on_module(const Mat& T, const Bimodule& m, const std::string& out_r,
                                   const std::string& out_l) {
    OperatorCheckReport rep = check_anti_O(T, m);
    if (!rep.is_operator) throw Error("map is not an anti-O-operator; induced ops are undefined");

    std::size_t k = m.space_dim;
    AlgebraSpace out;
    out.dim = k;
    out.basis = m.space_names;
    Tensor3 cr(k), cl(k);
    for (std::size_t i = 0; i < k; ++i) {
        Vec Ti = T * basis_vector(k, i);
        Mat li = action(m.l, Ti, k);
        Mat ri = action(m.r, Ti, k);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t p = 0; p < k; ++p) {
                cr.at(i, j, p) = -li.at(p, j); // u_i |> u_j = -l(T(u_i)) u_j
                cl.at(j, i, p) = -ri.at(p, j); // u_j <| u_i = -r(T(u_i)) u_j
            }
    }
    out.ops.emplace(out_r, std::move(cr));
    out.ops.emplace(out_l, std::move(cl));
    out.validate();
    return out;
}

EmbedHat embed_hat(const Mat& T, const Bimodule& m) {
    if (T.rows != m.base.dim || T.cols != m.space_dim)
        throw Error("hat embedding expects T : V -> A");
    EmbedHat out{semidirect(m), Mat(m.base.dim + m.space_dim, m.base.dim + m.space_dim)};
    for (std::size_t i = 0; i < m.base.dim; ++i)
        for (std::size_t j = 0; j < m.space_dim; ++j)
            out.hat.at(i, m.base.dim + j) = T.at(i, j);
    return out;
}

ThreeWayVerdict anti_dendriform_three_way(const AlgebraSpace& alg, const std::string& tri_r,
                                          const std::string& tri_l) {
    std::map<std::string, std::string> binding{{"tri_r", tri_r}, {"tri_l", tri_l}};
    ThreeWayVerdict out;
    out.bundle = check_structure(alg, "anti-dendriform", binding).holds;

    bool admissible = check_structure(alg, "associative-admissible", binding).holds;

    static const StructureDef reduced_eqs = [] {
        StructureDef d;
        d.name = "anti-dendriform-reduced";
        d.slots = {"tri_r", "tri_l"};
        std::map<std::string, std::string> sym{{">", "tri_r"}, {"<", "tri_l"}};
        auto mk = [&](const std::string& label, const std::string& src) {
            IdentityExpr id = parse_identity(src);
            id.ast = bind_ops(id.ast, sym);
            id.label = label;
            return id;
        };
        d.identities = {mk("eq-a", "x,y,z: x>(y>z) + (x.y)>z = 0"),
                        mk("eq-b", "x,y,z: (x<y)<z + x<(y.z) = 0"),
                        mk("eq-c", "x,y,z: (x>y)<z - x>(y<z) = 0")};
        IdentityExpr dot = parse_expression("x,y: x>y + x<y");
        dot.ast = bind_ops(dot.ast, sym);
        d.derived = {{".", dot}};
        return d;
    }();
    out.equations = admissible && check_structure(alg, reduced_eqs, binding).holds;
    out.bimodule = admissible && check_bimodule(neg_mult_bimodule(alg, tri_r, tri_l)).holds;
    return out;
}

} // namespace adend
