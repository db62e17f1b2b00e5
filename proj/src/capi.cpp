#include "adend/adend.h"

#include "jsonio.hpp"
#include "transforms.hpp"

#include <cstring>
#include <random>

using namespace adend;

struct adend_algebra {
    AlgebraSpace alg;
};

struct adend_bimodule {
    Bimodule mod;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

adend_status fail(adend_status st, const std::string& msg) {
    g_last_error = msg;
    return st;
}

template <class F>
adend_status guarded(F&& f) {
    try {
        return f();
    } catch (const Json::exception& e) {
        return fail(ADEND_ERR_PARSE, e.what());
    } catch (const Error& e) {
        return fail(ADEND_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(ADEND_ERR_INTERNAL, e.what());
    }
}

Json parse_json(const char* text, const char* what) {
    if (!text) throw Error(std::string(what) + " must not be null");
    return Json::parse(text);
}

std::map<std::string, std::string> binding_from(const char* binding_json) {
    std::map<std::string, std::string> binding;
    if (!binding_json || !*binding_json) return binding;
    Json j = Json::parse(binding_json);
    for (const auto& [k, v] : j.items()) binding[k] = v.get<std::string>();
    return binding;
}

std::optional<Rational> q_from(const char* q) {
    if (!q || !*q) return std::nullopt;
    return rat_from_string(q);
}

std::vector<std::string> strings_from(const char* json, const char* what) {
    std::vector<std::string> out;
    Json j = parse_json(json, what);
    if (!j.is_array()) throw Error(std::string(what) + " must be a JSON array of strings");
    for (const auto& s : j) out.push_back(s.get<std::string>());
    return out;
}

const AlgebraSpace& need(const adend_algebra* a) {
    if (!a) throw Error("null algebra handle");
    return a->alg;
}

const Bimodule& need(const adend_bimodule* m) {
    if (!m) throw Error("null bimodule handle");
    return m->mod;
}

StructureDef resolve_bundle(const std::string& name_or_json) {
    if (!name_or_json.empty() && name_or_json.front() == '{')
        return bundle_from_json(Json::parse(name_or_json));
    auto it = registry().find(name_or_json);
    if (it == registry().end()) throw Error("unknown bundle '" + name_or_json + "'");
    return it->second;
}

AlgebraSpace random_two_op_algebra(std::mt19937_64& rng, std::size_t dim) {
    std::uniform_int_distribution<int> coef(-2, 2);
    AlgebraSpace a;
    a.dim = dim;
    for (std::size_t i = 0; i < dim; ++i) a.basis.push_back("e" + std::to_string(i + 1));
    for (const char* name : {"succ", "prec"}) {
        Tensor3 t(dim);
        for (auto& c : t.c) c = coef(rng);
        a.ops.emplace(name, std::move(t));
    }
    return a;
}

} // namespace

extern "C" {

const char* adend_version(void) { return "1.0.0"; }

const char* adend_last_error(void) { return g_last_error.c_str(); }

void adend_string_free(char* s) { std::free(s); }
void adend_algebra_free(adend_algebra* a) { delete a; }
void adend_bimodule_free(adend_bimodule* m) { delete m; }

adend_status adend_algebra_parse(const char* json, adend_algebra** out) {
    return guarded([&] {
        *out = new adend_algebra{algebra_from_json(parse_json(json, "algebra json"))};
        return ADEND_OK;
    });
}

adend_status adend_algebra_to_json(const adend_algebra* a, char** out_json) {
    return guarded([&] {
        *out_json = dup_string(algebra_to_json(need(a)).dump(2));
        return ADEND_OK;
    });
}

adend_status adend_algebra_validate(const char* json, char** report_json) {
    return guarded([&] {
        Json rep;
        try {
            Json j = Json::parse(json ? json : "");
            if (j.is_array()) {
                matrix_from_json(j);
                rep["kind"] = "matrix";
            } else if (j.is_object() && j.contains("space_dim")) {
                bimodule_from_json(j);
                rep["kind"] = "bimodule";
            } else if (j.is_object() && j.contains("slots")) {
                bundle_from_json(j);
                rep["kind"] = "bundle";
            } else {
                algebra_from_json(j);
                rep["kind"] = "algebra";
            }
            rep["valid"] = true;
        } catch (const std::exception& e) {
            rep["valid"] = false;
            rep["error"] = e.what();
        }
        *report_json = dup_string(rep.dump(2));
        return ADEND_OK;
    });
}

adend_status adend_catalog_list(char** out_json) {
    return guarded([&] {
        Json arr = Json::array();
        for (const auto& e : catalog_entries()) {
            Json params = Json::object();
            for (const auto& [k, v] : e.params) params[k] = rat_to_string(v);
            arr.push_back({{"id", e.id}, {"description", e.description}, {"params", params}});
        }
        *out_json = dup_string(arr.dump(2));
        return ADEND_OK;
    });
}

adend_status adend_catalog_load(const char* id, const char* params_json, adend_algebra** out) {
    return guarded([&] {
        if (!id) throw Error("catalog id must not be null");
        std::map<std::string, Rational> params;
        if (params_json && *params_json) {
            Json j = Json::parse(params_json);
            for (const auto& [k, v] : j.items()) params[k] = rational_from_json(v);
        }
        *out = new adend_algebra{catalog_load(id, params)};
        return ADEND_OK;
    });
}

adend_status adend_catalog_self_test(char** report_json) {
    return guarded([&] {
        *report_json = dup_string(self_test_to_json(catalog_self_test()).dump(2));
        return ADEND_OK;
    });
}

adend_status adend_check_identity(const adend_algebra* a, const char* identity_src,
                                  const char* binding_json, char** report_json) {
    return guarded([&] {
        if (!identity_src) throw Error("identity source must not be null");
        IdentityExpr id = parse_identity(identity_src);
        Verdict v = check_identity(id, need(a), binding_from(binding_json));
        Json rep = verdict_to_json(v, need(a), id.vars);
        rep["identity"] = print_identity(id);
        *report_json = dup_string(rep.dump(2));
        return ADEND_OK;
    });
}

adend_status adend_check_structure(const adend_algebra* a, const char* bundle,
                                   const char* binding_json, const char* q, char** report_json) {
    return guarded([&] {
        if (!bundle) throw Error("bundle must not be null");
        StructureDef def = resolve_bundle(bundle);
        StructureVerdict v = check_structure(need(a), def, binding_from(binding_json), q_from(q));
        Json rep = structure_verdict_to_json(v, need(a));
        rep["bundle"] = def.name;
        *report_json = dup_string(rep.dump(2));
        return ADEND_OK;
    });
}

adend_status adend_registry_list(char** out_json) {
    return guarded([&] {
        Json arr = Json::array();
        for (const auto& [name, def] : registry()) {
            arr.push_back({{"name", name},
                           {"slots", def.slots},
                           {"q_parameterized", def.q_parameterized},
                           {"identities", def.q_parameterized
                                              ? Json(nullptr)
                                              : Json(def.identities.size())}});
        }
        *out_json = dup_string(arr.dump(2));
        return ADEND_OK;
    });
}

adend_status adend_check_equiv(const adend_algebra* a, const char* bundle_a, const char* bundle_b,
                               const char* binding_json, const char* q, char** report_json) {
    return guarded([&] {
        auto binding = binding_from(binding_json);
        auto qq = q_from(q);
        StructureVerdict va = check_structure(need(a), resolve_bundle(bundle_a), binding, qq);
        StructureVerdict vb = check_structure(need(a), resolve_bundle(bundle_b), binding, qq);
        Json rep{{"agree", va.holds == vb.holds},
                 {"first", va.holds},
                 {"second", vb.holds}};
        *report_json = dup_string(rep.dump(2));
        return ADEND_OK;
    });
}

adend_status adend_check_equiv_random(const char* bundle_a, const char* bundle_b, unsigned dim,
                                      unsigned count, unsigned long long seed,
                                      char** report_json) {
    return guarded([&] {
        StructureDef da = resolve_bundle(bundle_a);
        StructureDef db = resolve_bundle(bundle_b);
        if (da.slots != db.slots) throw Error("bundles must share slots for agreement testing");
        std::mt19937_64 rng(seed);
        unsigned disagreements = 0, holds_both = 0;
        for (unsigned i = 0; i < count; ++i) {
            AlgebraSpace alg = random_two_op_algebra(rng, dim);
            std::map<std::string, std::string> binding;
            for (std::size_t s = 0; s < da.slots.size(); ++s)
                binding[da.slots[s]] = s == 0 ? "succ" : "prec";
            bool va = check_structure(alg, da, binding).holds;
            bool vb = check_structure(alg, db, binding).holds;
            if (va != vb) ++disagreements;
            if (va && vb) ++holds_both;
        }
        Json rep{{"count", count},
                 {"disagreements", disagreements},
                 {"holds_both", holds_both},
                 {"agree", disagreements == 0}};
        *report_json = dup_string(rep.dump(2));
        return ADEND_OK;
    });
}

adend_status adend_transform(const adend_algebra* a, const char* kind, const char* ops_json,
                             const char* q, const char* out_json, adend_algebra** out) {
    return guarded([&] {
        if (!kind) throw Error("transform kind must not be null");
        std::vector<std::string> ops = strings_from(ops_json, "ops");
        std::vector<std::string> outs;
        if (out_json && *out_json) outs = strings_from(out_json, "out");
        auto outname = [&](std::size_t i, const char* dflt) {
            return i < outs.size() ? outs[i] : std::string(dflt);
        };
        std::string k = kind;
        auto qq = q_from(q);
        auto need_q = [&]() -> const Rational& {
            if (!qq) throw Error("transform '" + k + "' requires --q");
            return *qq;
        };
        auto need_ops = [&](std::size_t n) {
            if (ops.size() != n)
                throw Error("transform '" + k + "' takes " + std::to_string(n) + " op name(s)");
        };
        TransformResult r;
        if (k == "sum") {
            need_ops(2);
            r = op_sum(need(a), ops[0], ops[1], outname(0, "dot"));
        } else if (k == "commutator") {
            need_ops(1);
            r = commutator(need(a), ops[0], outname(0, "bracket"));
        } else if (k == "pre-lie") {
            need_ops(2);
            r = assoc_pre_lie(need(a), ops[0], ops[1], outname(0, "star"));
        } else if (k == "anti-pre-lie") {
            need_ops(2);
            r = assoc_anti_pre_lie(need(a), ops[0], ops[1], outname(0, "circ"));
        } else if (k == "q-pair") {
            need_ops(2);
            r = q_pair(need(a), ops[0], ops[1], need_q(), outname(0, "q_r"), outname(1, "q_l"));
        } else if (k == "q-pair-alt") {
            need_ops(2);
            r = q_pair_alt(need(a), ops[0], ops[1], need_q(), outname(0, "q_r_alt"),
                           outname(1, "q_l_alt"));
        } else if (k == "q-single") {
            need_ops(1);
            r = q_single(need(a), ops[0], need_q(), outname(0, "diamond"));
        } else {
            throw Error("unknown transform kind '" + k + "'");
        }
        *out = new adend_algebra{std::move(r.algebra)};
        return ADEND_OK;
    });
}

adend_status adend_construct_double(const adend_algebra* a, const char* op_r, const char* op_l,
                                    adend_algebra** out) {
    return guarded([&] {
        *out = new adend_algebra{double_space(need(a), op_r, op_l)};
        return ADEND_OK;
    });
}

adend_status adend_bimodule_parse(const char* json, adend_bimodule** out) {
    return guarded([&] {
        *out = new adend_bimodule{bimodule_from_json(parse_json(json, "bimodule json"))};
        return ADEND_OK;
    });
}

adend_status adend_bimodule_to_json(const adend_bimodule* m, char** out_json) {
    return guarded([&] {
        *out_json = dup_string(bimodule_to_json(need(m)).dump(2));
        return ADEND_OK;
    });
}

adend_status adend_bimodule_regular(const adend_algebra* a, const char* op,
                                    adend_bimodule** out) {
    return guarded([&] {
        *out = new adend_bimodule{regular_bimodule(need(a), op)};
        return ADEND_OK;
    });
}

adend_status adend_bimodule_neg_mult(const adend_algebra* a, const char* op_r, const char* op_l,
                                     adend_bimodule** out) {
    return guarded([&] {
        *out = new adend_bimodule{neg_mult_bimodule(need(a), op_r, op_l)};
        return ADEND_OK;
    });
}

adend_status adend_bimodule_check(const adend_bimodule* m, char** report_json) {
    return guarded([&] {
        BimoduleVerdict v = check_bimodule(need(m));
        Json rep{{"holds", v.holds}};
        if (!v.holds) {
            rep["equation"] = v.equation;
            rep["witness"] = {need(m).base.basis[v.witness->first],
                              need(m).base.basis[v.witness->second]};
        }
        *report_json = dup_string(rep.dump(2));
        return ADEND_OK;
    });
}

adend_status adend_bimodule_dual(const adend_bimodule* m, adend_bimodule** out) {
    return guarded([&] {
        *out = new adend_bimodule{dual_bimodule(need(m))};
        return ADEND_OK;
    });
}

adend_status adend_bimodule_semidirect(const adend_bimodule* m, adend_algebra** out) {
    return guarded([&] {
        *out = new adend_algebra{semidirect(need(m))};
        return ADEND_OK;
    });
}

adend_status adend_check_anti_o(const adend_bimodule* m, const char* T_matrix_json,
                                char** report_json) {
    return guarded([&] {
        Mat T = matrix_from_json(parse_json(T_matrix_json, "matrix"));
        *report_json = dup_string(operator_report_to_json(check_anti_O(T, need(m))).dump(2));
        return ADEND_OK;
    });
}

adend_status adend_check_anti_rb(const adend_algebra* a, const char* op,
                                 const char* P_matrix_json, char** report_json) {
    return guarded([&] {
        Mat P = matrix_from_json(parse_json(P_matrix_json, "matrix"));
        *report_json = dup_string(operator_report_to_json(check_anti_rb(P, need(a), op)).dump(2));
        return ADEND_OK;
    });
}

adend_status adend_check_anti_cocycle(const adend_bimodule* m, const char* D_matrix_json,
                                      char** report_json) {
    return guarded([&] {
        Mat D = matrix_from_json(parse_json(D_matrix_json, "matrix"));
        Verdict v = check_anti_1_cocycle(D, need(m));
        Json rep{{"holds", v.holds}};
        if (v.witness) {
            rep["witness"] = {need(m).base.basis[(*v.witness)[0]],
                              need(m).base.basis[(*v.witness)[1]]};
        }
        *report_json = dup_string(rep.dump(2));
        return ADEND_OK;
    });
}

adend_status adend_induced_ops(const adend_bimodule* m, const char* T_matrix_json,
                               adend_algebra** out) {
    return guarded([&] {
        Mat T = matrix_from_json(parse_json(T_matrix_json, "matrix"));
        *out = new adend_algebra{induced_ops_on_module(T, need(m))};
        return ADEND_OK;
    });
}

adend_status adend_embed_hat(const adend_bimodule* m, const char* T_matrix_json,
                             adend_algebra** out_alg, char** hat_matrix_json) {
    return guarded([&] {
        Mat T = matrix_from_json(parse_json(T_matrix_json, "matrix"));
        EmbedHat eh = embed_hat(T, need(m));
        *out_alg = new adend_algebra{std::move(eh.algebra)};
        *hat_matrix_json = dup_string(matrix_to_json(eh.hat).dump());
        return ADEND_OK;
    });
}

adend_status adend_annihilators(const adend_algebra* a, const char* op, char** report_json) {
    return guarded([&] {
        AnnihilatorDims d = annihilator_dims(need(a), op);
        Json rep{{"ann_left", d.left}, {"ann_right", d.right}, {"product_span", d.product_span}};
        *report_json = dup_string(rep.dump(2));
        return ADEND_OK;
    });
}

adend_status adend_invariants(const adend_algebra* a, const char* ops_json, char** report_json) {
    return guarded([&] {
        auto ops = strings_from(ops_json, "ops");
        *report_json = dup_string(invariants_to_json(iso_invariants(need(a), ops)).dump(2));
        return ADEND_OK;
    });
}

adend_status adend_mult_operator(const adend_algebra* a, const char* op, const char* side,
                                 const char* vector_json, char** matrix_json) {
    return guarded([&] {
        Json vj = parse_json(vector_json, "vector");
        Vec x;
        for (const auto& c : vj) x.push_back(rational_from_json(c));
        std::string s = side ? side : "left";
        Mat m = mult_operator(need(a), op, s == "right" ? Side::Right : Side::Left, x);
        *matrix_json = dup_string(matrix_to_json(m).dump());
        return ADEND_OK;
    });
}

adend_status adend_form_classify(const adend_algebra* a, const char* form, const char* op,
                                 char** report_json) {
    return guarded([&] {
        FormReport r = classify_form(need(a).form(form), need(a), op);
        *report_json = dup_string(form_report_to_json(r).dump(2));
        return ADEND_OK;
    });
}

adend_status adend_form_invariance(const adend_algebra* a, const char* form, const char* op_r,
                                   const char* op_l, char** report_json) {
    return guarded([&] {
        auto v = check_invariance_anti_dendriform(need(a).form(form), need(a), op_r, op_l);
        *report_json = dup_string(invariance_to_json(v, need(a)).dump(2));
        return ADEND_OK;
    });
}

adend_status adend_form_invariance_apl(const adend_algebra* a, const char* form,
                                       const char* circ_op, char** report_json) {
    return guarded([&] {
        Verdict v = check_invariance_anti_pre_lie(need(a).form(form), need(a), circ_op);
        *report_json = dup_string(verdict_to_json(v, need(a), {"x", "y", "z"}).dump(2));
        return ADEND_OK;
    });
}

adend_status adend_form_reconstruct(const adend_algebra* a, const char* form, const char* op,
                                    adend_algebra** out, char** report_json) {
    return guarded([&] {
        ReconstructReport r = reconstruct_anti_dendriform(need(a).form(form), need(a), op);
        Json rep{{"anti_dendriform", r.anti_dendriform},
                 {"sums_to_product", r.sums_to_product},
                 {"invariant", r.invariant}};
        *out = new adend_algebra{std::move(r.algebra)};
        *report_json = dup_string(rep.dump(2));
        return ADEND_OK;
    });
}

adend_status adend_form_semidirect(const adend_algebra* a, const char* op_r, const char* op_l,
                                   adend_algebra** out) {
    return guarded([&] {
        *out = new adend_algebra{form_on_semidirect(need(a), op_r, op_l)};
        return ADEND_OK;
    });
}

adend_status adend_form_equivalence(const adend_algebra* a, const char* form, const char* op_r,
                                    const char* op_l, char** report_json) {
    return guarded([&] {
        FormEquivalenceReport r = form_equivalence_check(need(a).form(form), need(a), op_r, op_l);
        Json rep{{"equivalent", r.equivalent},
                 {"nondegenerate_invariant", r.nondegenerate_invariant},
                 {"agree", r.agree}};
        *report_json = dup_string(rep.dump(2));
        return ADEND_OK;
    });
}

adend_status adend_form_anti_pre_lie(const adend_algebra* a, const char* form, const char* op,
                                     adend_algebra** out) {
    return guarded([&] {
        *out = new adend_algebra{anti_pre_lie_from_form(need(a).form(form), need(a), op)};
        return ADEND_OK;
    });
}

adend_status adend_solve_compatible(const adend_algebra* a, const char* op, char** report_json) {
    return guarded([&] {
        SolutionIdeal s = solve_compatible_anti_dendriform(need(a), op);
        *report_json = dup_string(solution_to_json(s).dump(2));
        return ADEND_OK;
    });
}

adend_status adend_solve_anti_rb(const adend_algebra* a, const char* op, char** report_json) {
    return guarded([&] {
        SolutionIdeal s = solve_anti_rb(need(a), op);
        *report_json = dup_string(solution_to_json(s).dump(2));
        return ADEND_OK;
    });
}

adend_status adend_solve_free(unsigned dim, const char* pins_json, char** report_json) {
    return guarded([&] {
        std::map<std::string, Rational> pins;
        if (pins_json && *pins_json) {
            Json j = Json::parse(pins_json);
            for (const auto& [k, v] : j.items()) pins[k] = rational_from_json(v);
        }
        SolutionIdeal s = solve_anti_dendriform_free(dim, pins);
        *report_json = dup_string(solution_to_json(s).dump(2));
        return ADEND_OK;
    });
}

adend_status adend_solve_iso(const adend_algebra* a, const adend_algebra* b,
                             const char* ops_json, char** report_json) {
    return guarded([&] {
        auto ops = strings_from(ops_json, "ops");
        IsoResult r = iso_search(need(a), need(b), ops);
        Json rep = solution_to_json(r.ideal, false);
        rep["isomorphic_over_closure"] = r.ideal.consistent;
        if (r.witness) rep["witness"] = matrix_to_json(*r.witness);
        *report_json = dup_string(rep.dump(2));
        return ADEND_OK;
    });
}

} // extern "C"
