#include "solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

namespace adend {

namespace {

std::string idx3(std::size_t i, std::size_t j, std::size_t k) {
    std::ostringstream os;
    os << i + 1 << j + 1 << k + 1;
    return os.str();
}

Tensor3T<MultiPoly> lift_tensor(const Tensor3& t, const VarTablePtr& vars) {
    Tensor3T<MultiPoly> s(t.dim);
    for (std::size_t i = 0; i < t.c.size(); ++i)
        if (t.c[i] != 0) s.c[i] = MultiPoly::constant(vars, t.c[i]);
    return s;
}

std::vector<MultiPoly> symbolic_basis_vector(const VarTablePtr& vars, std::size_t dim,
                                             std::size_t i) {
    std::vector<MultiPoly> v(dim);
    v[i] = MultiPoly::constant(vars, 1);
    return v;
}

MultiPoly symbolic_det(const std::vector<std::vector<MultiPoly>>& m, std::vector<std::size_t> rows,
                       std::vector<std::size_t> cols, const VarTablePtr& vars) {
    if (rows.empty()) return MultiPoly::constant(vars, 1);
    MultiPoly acc(vars);
    std::size_t r = rows[0];
    std::vector<std::size_t> rest(rows.begin() + 1, rows.end());
    for (std::size_t ci = 0; ci < cols.size(); ++ci) {
        std::vector<std::size_t> sub = cols;
        sub.erase(sub.begin() + ci);
        MultiPoly minor = symbolic_det(m, rest, sub, vars);
        MultiPoly term = m[r][cols[ci]] * minor;
        if (ci % 2) acc -= term;
        else acc += term;
    }
    return acc;
}

} // namespace

std::size_t solver_dim_cap() {
    if (const char* env = std::getenv("ADEND_MAX_DIM")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return 3;
}

std::vector<MultiPoly> extract_system(const SymbolicAlgebra& salg, const StructureDef& def,
                                      const std::map<std::string, std::string>& binding,
                                      const std::optional<Rational>& q) {
    for (const auto& slot : def.slots) {
        auto it = binding.find(slot);
        if (it == binding.end()) throw Error("incomplete binding: slot '" + slot + "' unbound");
        if (!salg.ops.count(it->second))
            throw Error("binding for slot '" + slot + "' names unknown op '" + it->second + "'");
    }
    auto lookup_derived = [&](const std::string& op) -> const IdentityExpr* {
        auto it = def.derived.find(op);
        return it == def.derived.end() ? nullptr : &it->second;
    };
    std::function<const Tensor3T<MultiPoly>&(const std::string&)> lookup_op =
        [&](const std::string& op) -> const Tensor3T<MultiPoly>& {
        auto it = salg.ops.find(op);
        if (it == salg.ops.end()) throw Error("unknown operation '" + op + "'");
        return it->second;
    };

    std::vector<MultiPoly> system;
    std::set<std::string> seen;
    for (const auto& raw : def.instantiate(q)) {
        ExprPtr bound = bind_ops(expand_ops(raw.ast, lookup_derived), binding);
        std::size_t k = raw.vars.size();
        if (salg.dim == 0) continue;
        std::vector<std::size_t> tuple(k, 0);
        std::vector<std::vector<MultiPoly>> assignment(k);
        for (;;) {
            for (std::size_t i = 0; i < k; ++i)
                assignment[i] = symbolic_basis_vector(salg.vars, salg.dim, tuple[i]);
            auto coords = eval_expr<MultiPoly>(*bound, lookup_op, assignment, salg.dim);
            for (auto& p : coords) {
                if (p.is_zero()) continue;
                if (seen.insert(p.monic().str()).second) system.push_back(std::move(p));
            }
            std::size_t i = k;
            bool done = true;
            while (i > 0) {
                --i;
                if (++tuple[i] < salg.dim) {
                    done = false;
                    break;
                }
                tuple[i] = 0;
            }
            if (done) break;
        }
    }
    return system;
}

std::vector<std::string> SolutionIdeal::gens_str() const {
    std::vector<std::string> out;
    for (const auto& g : basis.gens) out.push_back(g.str());
    return out;
}

SolutionIdeal make_solution_ideal(GroebnerBasis gb) {
    SolutionIdeal s;
    s.basis = radical_variable_closure(gb);
    s.free_vars = free_variables(s.basis);
    s.consistent = !s.basis.is_trivial_unit();
    if (!s.consistent) s.free_vars.clear();
    return s;
}

SolutionIdeal solve_compatible_anti_dendriform(const AlgebraSpace& alg, const std::string& op) {
    if (!check_structure(alg, "associative", {{"op", op}}).holds)
        throw Error("compatible-structure solving requires an associative op");

    std::size_t n = alg.dim;
    auto table = std::make_shared<VarTable>();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) table->push_back("r_" + idx3(i, j, k));
    VarTablePtr vars = table;

    SymbolicAlgebra salg;
    salg.dim = n;
    salg.basis = alg.basis;
    salg.vars = vars;
    Tensor3T<MultiPoly> tri_r(n), tri_l(n);
    const Tensor3& c = alg.op(op);
    std::size_t v = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k, ++v) {
                tri_r.at(i, j, k) = MultiPoly::variable(vars, v);
                tri_l.at(i, j, k) =
                    MultiPoly::constant(vars, c.at(i, j, k)) - MultiPoly::variable(vars, v);
            }
    salg.ops.emplace("tri_r", std::move(tri_r));
    salg.ops.emplace("tri_l", std::move(tri_l));

    auto system = extract_system(salg, registry().at("anti-dendriform"),
                                 {{"tri_r", "tri_r"}, {"tri_l", "tri_l"}});
    return make_solution_ideal(buchberger(vars, std::move(system)));
}

SolutionIdeal solve_anti_rb(const AlgebraSpace& alg, const std::string& op) {
    if (!check_structure(alg, "associative", {{"op", op}}).holds)
        throw Error("anti-Rota-Baxter solving requires an associative op");

    std::size_t n = alg.dim;
    auto table = std::make_shared<VarTable>();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::ostringstream os;
            os << "a" << i + 1 << j + 1;
            table->push_back(os.str());
        }
    VarTablePtr vars = table;

    Tensor3T<MultiPoly> ct = lift_tensor(alg.op(op), vars);
    // column j of the unknown matrix
    auto P = [&](const std::vector<MultiPoly>& x) {
        std::vector<MultiPoly> y(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                y[i] += MultiPoly::variable(vars, i * n + j) * x[j];
        return y;
    };

    std::vector<MultiPoly> system;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto ei = symbolic_basis_vector(vars, n, i);
            auto ej = symbolic_basis_vector(vars, n, j);
            auto Pi = P(ei), Pj = P(ej);
            auto lhs = eval_tensor(ct, Pi, Pj);
            auto inner = eval_tensor(ct, Pi, ej);
            auto inner2 = eval_tensor(ct, ei, Pj);
            for (std::size_t p = 0; p < n; ++p) inner[p] += inner2[p];
            auto rhs = P(inner);
            for (std::size_t p = 0; p < n; ++p) {
                MultiPoly g = lhs[p] + rhs[p];
                if (g.is_zero()) continue;
                if (seen.insert(g.monic().str()).second) system.push_back(std::move(g));
            }
        }
    return make_solution_ideal(buchberger(vars, std::move(system)));
}

SolutionIdeal solve_anti_dendriform_free(std::size_t dim,
                                         const std::map<std::string, Rational>& pins) {
    if (dim > solver_dim_cap())
        throw Error("free search dimension exceeds the cap (set ADEND_MAX_DIM to raise it)");

    auto table = std::make_shared<VarTable>();
    std::map<std::string, Rational> pinned = pins;
    auto entry_name = [&](char letter, std::size_t i, std::size_t j, std::size_t k) {
        return std::string(1, letter) + "_" + idx3(i, j, k);
    };
    std::set<std::string> valid;
    for (char letter : {'r', 'l'})
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                for (std::size_t k = 0; k < dim; ++k) {
                    std::string nm = entry_name(letter, i, j, k);
                    valid.insert(nm);
                    if (!pinned.count(nm)) table->push_back(nm);
                }
    for (const auto& [nm, val] : pins)
        if (!valid.count(nm)) throw Error("unknown pinned entry '" + nm + "'");
    VarTablePtr vars = table;
    auto var_index = [&](const std::string& nm) {
        return std::distance(table->begin(), std::find(table->begin(), table->end(), nm));
    };

    SymbolicAlgebra salg;
    salg.dim = dim;
    for (std::size_t i = 0; i < dim; ++i) salg.basis.push_back("e" + std::to_string(i + 1));
    salg.vars = vars;
    for (char letter : {'r', 'l'}) {
        Tensor3T<MultiPoly> t(dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                for (std::size_t k = 0; k < dim; ++k) {
                    std::string nm = entry_name(letter, i, j, k);
                    auto it = pinned.find(nm);
                    if (it != pinned.end())
                        t.at(i, j, k) = MultiPoly::constant(vars, it->second);
                    else
                        t.at(i, j, k) = MultiPoly::variable(vars, var_index(nm));
                }
        salg.ops.emplace(letter == 'r' ? "tri_r" : "tri_l", std::move(t));
    }

    auto system = extract_system(salg, registry().at("anti-dendriform"),
                                 {{"tri_r", "tri_r"}, {"tri_l", "tri_l"}});
    return make_solution_ideal(buchberger(vars, std::move(system)));
}

InvariantVector iso_invariants(const AlgebraSpace& alg, const std::vector<std::string>& ops) {
    InvariantVector out;
    out.dim = alg.dim;
    std::size_t n = alg.dim;

    Tensor3 sum(n);
    for (const auto& op : ops) {
        out.per_op.emplace(op, annihilator_dims(alg, op));
        const Tensor3& t = alg.op(op);
        for (std::size_t i = 0; i < sum.c.size(); ++i) sum.c[i] += t.c[i];
    }

    if (n > 0 && !ops.empty()) {
        Mat prod(n, ops.size() * n * n);
        std::size_t col = 0;
        for (const auto& op : ops) {
            const Tensor3& t = alg.op(op);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j, ++col)
                    for (std::size_t k = 0; k < n; ++k) prod.at(k, col) = t.at(i, j, k);
        }
        out.product_span = rank(prod);

        std::vector<Vec> triples;
        for (const auto& opa : ops)
            for (const auto& opb : ops)
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        for (std::size_t k = 0; k < n; ++k) {
                            Vec ei = basis_vector(n, i), ej = basis_vector(n, j),
                                ek = basis_vector(n, k);
                            Vec ab = eval_op(alg, opa, ei, ej);
                            triples.push_back(eval_op(alg, opb, ab, ek));
                            Vec bc = eval_op(alg, opb, ej, ek);
                            triples.push_back(eval_op(alg, opa, ei, bc));
                        }
        Mat tm(n, triples.size());
        for (std::size_t c2 = 0; c2 < triples.size(); ++c2)
            for (std::size_t k = 0; k < n; ++k) tm.at(k, c2) = triples[c2][k];
        out.triple_span = rank(tm);

        out.sum_commutative = true;
        for (std::size_t i = 0; i < n && out.sum_commutative; ++i)
            for (std::size_t j = 0; j < n && out.sum_commutative; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (sum.at(i, j, k) != sum.at(j, i, k)) {
                        out.sum_commutative = false;
                        break;
                    }
    }
    return out;
}

IsoResult iso_search(const AlgebraSpace& a, const AlgebraSpace& b,
                     const std::vector<std::string>& ops) {
    if (a.dim != b.dim) throw Error("isomorphism search needs equal dimensions");
    if (a.dim > solver_dim_cap())
        throw Error("isomorphism search dimension exceeds the cap (set ADEND_MAX_DIM)");
    for (const auto& op : ops) {
        a.op(op);
        b.op(op);
    }

    std::size_t n = a.dim;
    auto table = std::make_shared<VarTable>();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::ostringstream os;
            os << "g" << i + 1 << j + 1;
            table->push_back(os.str());
        }
    table->push_back("t");
    VarTablePtr vars = table;
    auto G = [&](std::size_t i, std::size_t j) { return MultiPoly::variable(vars, i * n + j); };

    std::vector<MultiPoly> system;
    std::set<std::string> seen;
    for (const auto& op : ops) {
        const Tensor3& ca = a.op(op);
        const Tensor3& cb = b.op(op);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    MultiPoly g(vars);
                    for (std::size_t m = 0; m < n; ++m)
                        if (ca.at(i, j, m) != 0)
                            g += G(k, m) * MultiPoly::constant(vars, ca.at(i, j, m));
                    for (std::size_t p = 0; p < n; ++p)
                        for (std::size_t q = 0; q < n; ++q)
                            if (cb.at(p, q, k) != 0)
                                g -= G(p, i) * G(q, j) * MultiPoly::constant(vars, cb.at(p, q, k));
                    if (g.is_zero()) continue;
                    if (seen.insert(g.monic().str()).second) system.push_back(std::move(g));
                }
    }
    // Rabinowitsch: det(g) t - 1
    std::vector<std::vector<MultiPoly>> gm(n, std::vector<MultiPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gm[i][j] = G(i, j);
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    MultiPoly detp = symbolic_det(gm, all, all, vars);
    system.push_back(detp * MultiPoly::variable(vars, n * n) - MultiPoly::constant(vars, 1));

    IsoResult out;
    SolutionIdeal ideal;
    ideal.basis = buchberger(vars, std::move(system));
    ideal.free_vars = free_variables(ideal.basis);
    ideal.consistent = !ideal.basis.is_trivial_unit();
    out.ideal = std::move(ideal);

    if (out.ideal.consistent) {
        auto is_iso = [&](const Mat& g) {
            if (det(g) == 0) return false;
            for (const auto& op : ops) {
                const Tensor3& ca = a.op(op);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) {
                        Vec prod(n);
                        for (std::size_t m = 0; m < n; ++m) prod[m] = ca.at(i, j, m);
                        Vec lhs = g * prod;
                        Vec gi = g * basis_vector(n, i);
                        Vec gj = g * basis_vector(n, j);
                        Vec rhs = eval_op(b, op, gi, gj);
                        for (std::size_t m = 0; m < n; ++m)
                            if (lhs[m] != rhs[m]) return false;
                    }
            }
            return true;
        };
        // candidate scan: basis permutations composed with small diagonal scalings
        std::vector<Rational> scal{1, -1, 2, Rational(1, 2), -2};
        std::vector<std::size_t> perm(n);
        for (std::size_t i = 0; i < n; ++i) perm[i] = i;
        std::vector<std::vector<std::size_t>> perms;
        do perms.push_back(perm);
        while (std::next_permutation(perm.begin(), perm.end()));

        std::vector<std::size_t> diag(n, 0);
        for (const auto& pm : perms) {
            std::fill(diag.begin(), diag.end(), 0);
            for (;;) {
                Mat g(n, n);
                for (std::size_t j = 0; j < n; ++j) g.at(pm[j], j) = scal[diag[j]];
                if (is_iso(g)) {
                    out.witness = g;
                    return out;
                }
                std::size_t i = n;
                bool done = true;
                while (i > 0) {
                    --i;
                    if (++diag[i] < scal.size()) {
                        done = false;
                        break;
                    }
                    diag[i] = 0;
                }
                if (done) break;
            }
            if (out.witness) break;
        }
    }
    return out;
}

std::vector<std::map<std::string, Rational>> sample_points(const SolutionIdeal& ideal,
                                                           const std::vector<Rational>& grid,
                                                           std::size_t max_points) {
    std::vector<std::map<std::string, Rational>> out;
    if (!ideal.consistent || !ideal.basis.vars) return out;
    const VarTable& vars = *ideal.basis.vars;

    std::vector<std::size_t> free_idx;
    for (const auto& fv : ideal.free_vars)
        free_idx.push_back(std::distance(
            vars.begin(), std::find(vars.begin(), vars.end(), fv)));

    std::vector<std::size_t> counter(free_idx.size(), 0);
    for (;;) {
        std::map<std::size_t, Rational> assign;
        for (std::size_t i = 0; i < free_idx.size(); ++i) assign[free_idx[i]] = grid[counter[i]];

        // substitute, then repeatedly peel univariate-linear generators
        std::vector<MultiPoly> residue;
        for (const auto& g : ideal.basis.gens) residue.push_back(g.substitute(assign));
        bool ok = true, progress = true;
        while (progress && ok) {
            progress = false;
            for (auto& g : residue) {
                g = g.substitute(assign);
                if (g.is_zero()) continue;
                if (g.is_constant()) {
                    ok = false;
                    break;
                }
                if (g.degree() == 1 && g.terms().size() <= 2) {
                    const Exponents& lm = g.leading_monomial();
                    std::size_t vi = 0;
                    for (std::size_t i = 0; i < lm.size(); ++i)
                        if (lm[i] == 1) vi = i;
                    Rational cst = 0;
                    for (const auto& [e, c] : g.terms())
                        if (total_degree(e) == 0) cst = c;
                    if (!assign.count(vi)) {
                        assign[vi] = -cst / g.leading_coefficient();
                        progress = true;
                    }
                }
            }
        }
        if (ok) {
            bool residual_clear = true;
            for (auto& g : residue)
                if (!g.substitute(assign).is_zero()) residual_clear = false;
            if (residual_clear) {
                // unassigned variables (not free, not solved) default to 0 if valid
                std::map<std::size_t, Rational> full = assign;
                for (std::size_t i = 0; i < vars.size(); ++i)
                    if (!full.count(i)) full[i] = 0;
                std::vector<Rational> pt(vars.size());
                for (const auto& [i, v] : full) pt[i] = v;
                if (point_on_variety(ideal.basis, pt)) {
                    std::map<std::string, Rational> named;
                    for (std::size_t i = 0; i < vars.size(); ++i) named[vars[i]] = pt[i];
                    out.push_back(std::move(named));
                    if (out.size() >= max_points) return out;
                }
            }
        }

        if (free_idx.empty()) break;
        std::size_t i = free_idx.size();
        bool done = true;
        while (i > 0) {
            --i;
            if (++counter[i] < grid.size()) {
                done = false;
                break;
            }
            counter[i] = 0;
        }
        if (done) break;
    }
    return out;
}

bool anti_dendriform_tensors(const Tensor3& cr, const Tensor3& cl) {
    std::size_t n = cr.dim;
    Tensor3 dot(n);
    for (std::size_t i = 0; i < dot.c.size(); ++i) dot.c[i] = cr.c[i] + cl.c[i];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec ei = basis_vector(n, i), ej = basis_vector(n, j);
            Vec rij = eval_tensor(cr, ei, ej);
            Vec lij = eval_tensor(cl, ei, ej);
            Vec dij = eval_tensor(dot, ei, ej);
            for (std::size_t k = 0; k < n; ++k) {
                Vec ek = basis_vector(n, k);
                Vec rjk = eval_tensor(cr, ej, ek);
                Vec ljk = eval_tensor(cl, ej, ek);
                Vec djk = eval_tensor(dot, ej, ek);
                Vec A = eval_tensor(cr, ei, rjk); // x|>(y|>z)
                Vec t1 = eval_tensor(cr, dij, ek);
                Vec t2 = eval_tensor(cl, ei, djk);
                Vec t3 = eval_tensor(cl, lij, ek);
                Vec e2a = eval_tensor(cl, rij, ek);
                Vec e2b = eval_tensor(cr, ei, ljk);
                for (std::size_t p = 0; p < n; ++p) {
                    if (A[p] + t1[p] != 0) return false;
                    if (A[p] + t2[p] != 0) return false;
                    if (A[p] - t3[p] != 0) return false;
                    if (e2a[p] != e2b[p]) return false;
                }
            }
        }
    return true;
}

} // namespace adend
