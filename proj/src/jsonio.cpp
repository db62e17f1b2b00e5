#include "jsonio.hpp"

#include <algorithm>

namespace adend {

namespace {

std::size_t basis_index(const AlgebraSpace& alg, const std::string& name) {
    auto it = std::find(alg.basis.begin(), alg.basis.end(), name);
    if (it == alg.basis.end()) throw Error("unknown basis name '" + name + "'");
    return std::distance(alg.basis.begin(), it);
}

std::pair<std::string, std::string> split_pair(const std::string& key) {
    auto comma = key.find(',');
    if (comma == std::string::npos)
        throw Error("expected 'ei,ej' key, got '" + key + "'");
    return {key.substr(0, comma), key.substr(comma + 1)};
}

} // namespace

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw Error("rationals must be strings like \"p/q\" or integers");
}

AlgebraSpace algebra_from_json(const Json& j) {
    if (!j.is_object()) throw Error("algebra file must be a JSON object");
    if (!j.contains("dim") || !j["dim"].is_number_unsigned())
        throw Error("algebra file needs a nonnegative integer field 'dim'");
    AlgebraSpace alg;
    alg.dim = j["dim"].get<std::size_t>();
    if (j.contains("basis")) {
        for (const auto& b : j["basis"]) alg.basis.push_back(b.get<std::string>());
    } else {
        for (std::size_t i = 0; i < alg.dim; ++i) alg.basis.push_back("e" + std::to_string(i + 1));
    }
    if (alg.basis.size() != alg.dim) throw Error("field 'basis' must list dim names");

    if (j.contains("ops")) {
        if (!j["ops"].is_object()) throw Error("field 'ops' must be an object");
        for (const auto& [opname, table] : j["ops"].items()) {
            Tensor3 t(alg.dim);
            if (!table.is_object())
                throw Error("op '" + opname + "' must map 'ei,ej' to coefficient objects");
            for (const auto& [key, entry] : table.items()) {
                auto [ni, nj] = split_pair(key);
                std::size_t i = basis_index(alg, ni), jj = basis_index(alg, nj);
                for (const auto& [nk, coef] : entry.items())
                    t.at(i, jj, basis_index(alg, nk)) = rational_from_json(coef);
            }
            alg.ops.emplace(opname, std::move(t));
        }
    }
    if (j.contains("forms")) {
        for (const auto& [fname, table] : j["forms"].items()) {
            Mat g(alg.dim, alg.dim);
            for (const auto& [key, coef] : table.items()) {
                auto [ni, nj] = split_pair(key);
                g.at(basis_index(alg, ni), basis_index(alg, nj)) = rational_from_json(coef);
            }
            alg.forms.emplace(fname, std::move(g));
        }
    }
    alg.validate();
    return alg;
}

Json algebra_to_json(const AlgebraSpace& alg) {
    Json j;
    j["dim"] = alg.dim;
    j["basis"] = alg.basis;
    Json ops = Json::object();
    for (const auto& [name, t] : alg.ops) {
        Json table = Json::object();
        for (std::size_t i = 0; i < alg.dim; ++i)
            for (std::size_t jj = 0; jj < alg.dim; ++jj) {
                Json entry = Json::object();
                for (std::size_t k = 0; k < alg.dim; ++k)
                    if (t.at(i, jj, k) != 0)
                        entry[alg.basis[k]] = rat_to_string(t.at(i, jj, k));
                if (!entry.empty()) table[alg.basis[i] + "," + alg.basis[jj]] = entry;
            }
        ops[name] = table;
    }
    j["ops"] = ops;
    if (!alg.forms.empty()) {
        Json forms = Json::object();
        for (const auto& [name, g] : alg.forms) {
            Json table = Json::object();
            for (std::size_t i = 0; i < alg.dim; ++i)
                for (std::size_t jj = 0; jj < alg.dim; ++jj)
                    if (g.at(i, jj) != 0)
                        table[alg.basis[i] + "," + alg.basis[jj]] = rat_to_string(g.at(i, jj));
            forms[name] = table;
        }
        j["forms"] = forms;
    }
    return j;
}

Mat matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw Error("matrix must be a nonempty array of rows");
    std::size_t rows = j.size(), cols = j[0].size();
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw Error("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = rational_from_json(j[i][c]);
    }
    return m;
}

Json matrix_to_json(const Mat& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols; ++c) row.push_back(rat_to_string(m.at(i, c)));
        rows.push_back(row);
    }
    return rows;
}

Bimodule bimodule_from_json(const Json& j) {
    if (!j.is_object()) throw Error("bimodule file must be a JSON object");
    Bimodule m;
    if (!j.contains("base") || !j["base"].is_object())
        throw Error("bimodule needs an inline 'base' algebra object");
    m.base = algebra_from_json(j["base"]);
    m.op = j.value("op", std::string("mul"));
    if (!j.contains("space_dim")) throw Error("bimodule needs 'space_dim'");
    m.space_dim = j["space_dim"].get<std::size_t>();
    for (std::size_t i = 0; i < m.space_dim; ++i) m.space_names.push_back("v" + std::to_string(i + 1));

    m.l.assign(m.base.dim, Mat(m.space_dim, m.space_dim));
    m.r.assign(m.base.dim, Mat(m.space_dim, m.space_dim));
    for (const char* field : {"l", "r"}) {
        if (!j.contains(field)) continue;
        for (const auto& [name, mat] : j[field].items()) {
            std::size_t i = basis_index(m.base, name);
            Mat mm = matrix_from_json(mat);
            if (mm.rows != m.space_dim || mm.cols != m.space_dim)
                throw Error("bimodule action matrix must be space_dim x space_dim");
            (field[0] == 'l' ? m.l : m.r)[i] = std::move(mm);
        }
    }
    m.validate_shapes();
    return m;
}

Json bimodule_to_json(const Bimodule& m) {
    Json j;
    j["base"] = algebra_to_json(m.base);
    j["op"] = m.op;
    j["space_dim"] = m.space_dim;
    Json l = Json::object(), r = Json::object();
    for (std::size_t i = 0; i < m.base.dim; ++i) {
        l[m.base.basis[i]] = matrix_to_json(m.l[i]);
        r[m.base.basis[i]] = matrix_to_json(m.r[i]);
    }
    j["l"] = l;
    j["r"] = r;
    return j;
}

StructureDef bundle_from_json(const Json& j) {
    StructureDef d;
    d.name = j.at("name").get<std::string>();
    for (const auto& s : j.at("slots")) d.slots.push_back(s.get<std::string>());
    for (const auto& src : j.at("identities")) {
        IdentityExpr id = parse_identity(src.get<std::string>());
        id.label = "identity-" + std::to_string(d.identities.size() + 1);
        d.identities.push_back(std::move(id));
    }
    if (j.contains("derived"))
        for (const auto& [name, src] : j["derived"].items())
            d.derived.emplace(name, parse_expression(src.get<std::string>()));
    return d;
}

Json poly_to_json(const MultiPoly& p) {
    Json j = Json::object();
    if (!p.vars()) return j;
    for (const auto& [e, c] : p.terms()) j[monomial_str(*p.vars(), e)] = rat_to_string(c);
    return j;
}

MultiPoly poly_from_json(const Json& j, const VarTablePtr& vars) {
    MultiPoly p(vars);
    for (const auto& [mono, coef] : j.items()) {
        Exponents e(vars->size(), 0u);
        if (mono != "1") {
            std::size_t pos = 0;
            while (pos < mono.size()) {
                auto star = mono.find('*', pos);
                std::string factor = mono.substr(pos, star == std::string::npos ? star : star - pos);
                pos = star == std::string::npos ? mono.size() : star + 1;
                auto caret = factor.find('^');
                std::string name = factor.substr(0, caret);
                unsigned exp = caret == std::string::npos
                                   ? 1u
                                   : static_cast<unsigned>(std::stoul(factor.substr(caret + 1)));
                auto it = std::find(vars->begin(), vars->end(), name);
                if (it == vars->end()) throw Error("unknown variable '" + name + "' in monomial");
                e[std::distance(vars->begin(), it)] += exp;
            }
        }
        p.add_term(e, rational_from_json(coef));
    }
    return p;
}

static Json witness_names(const std::vector<std::size_t>& tuple, const AlgebraSpace& alg) {
    Json w = Json::array();
    for (std::size_t t : tuple) w.push_back(alg.basis.at(t));
    return w;
}

Json verdict_to_json(const Verdict& v, const AlgebraSpace& alg,
                     const std::vector<std::string>& vars) {
    Json j;
    j["holds"] = v.holds;
    if (!v.detail.empty()) j["identity"] = v.detail;
    if (v.witness) {
        j["witness"] = witness_names(*v.witness, alg);
        Json m = Json::object();
        for (std::size_t i = 0; i < vars.size() && i < v.witness->size(); ++i)
            m[vars[i]] = alg.basis.at((*v.witness)[i]);
        j["witness_assignment"] = m;
    }
    return j;
}

Json structure_verdict_to_json(const StructureVerdict& v, const AlgebraSpace& alg) {
    Json j;
    j["holds"] = v.holds;
    if (!v.holds) {
        j["failed_identity"] = v.failed_identity;
        if (v.witness) j["witness"] = witness_names(*v.witness, alg);
    }
    return j;
}

Json operator_report_to_json(const OperatorCheckReport& r) {
    Json j;
    j["is_operator"] = r.is_operator;
    j["is_strong"] = r.is_strong;
    if (r.first_failure) {
        j["first_failure"] = {{"equation", r.first_failure->first},
                              {"tuple", r.first_failure->second}};
    }
    return j;
}

Json form_report_to_json(const FormReport& r) {
    return Json{{"symmetric", r.symmetric},
                {"antisymmetric", r.antisymmetric},
                {"nondegenerate", r.nondegenerate},
                {"connes", r.connes},
                {"commutative_connes", r.commutative_connes},
                {"commutative_2cocycle", r.commutative_2cocycle}};
}

Json invariance_to_json(const InvarianceVerdict& v, const AlgebraSpace& alg) {
    Json j;
    j["invariant"] = v.invariant;
    j["lemma_consequence"] = v.lemma_consequence;
    if (!v.invariant && v.witness) {
        j["family"] = v.family;
        j["witness"] = witness_names(*v.witness, alg);
    }
    return j;
}

Json solution_to_json(const SolutionIdeal& s, bool with_samples) {
    Json j;
    j["consistent"] = s.consistent;
    j["groebner"] = s.gens_str();
    j["free_vars"] = s.free_vars;
    if (with_samples) {
        Json pts = Json::array();
        for (const auto& pt : sample_points(s, {Rational(-1), Rational(0), Rational(1)}, 5)) {
            Json p = Json::object();
            for (const auto& [k, v] : pt) p[k] = rat_to_string(v);
            pts.push_back(p);
        }
        j["sample_points"] = pts;
    }
    return j;
}

Json invariants_to_json(const InvariantVector& v) {
    Json per = Json::object();
    for (const auto& [op, d] : v.per_op)
        per[op] = {{"ann_left", d.left}, {"ann_right", d.right}, {"product_span", d.product_span}};
    return Json{{"dim", v.dim},
                {"per_op", per},
                {"product_span", v.product_span},
                {"triple_span", v.triple_span},
                {"sum_commutative", v.sum_commutative}};
}

Json self_test_to_json(const SelfTestReport& r) {
    Json items = Json::array();
    for (const auto& it : r.items)
        items.push_back({{"entry", it.entry},
                         {"bundle", it.bundle},
                         {"expected", it.expected},
                         {"actual", it.actual},
                         {"pass", it.pass()}});
    return Json{{"all_pass", r.all_pass}, {"items", items}};
}

} // namespace adend
