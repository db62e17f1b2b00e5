#include "catalog.hpp"

namespace adend {

namespace {

AlgebraSpace base_algebra(std::size_t dim) {
    AlgebraSpace a;
    a.dim = dim;
    for (std::size_t i = 0; i < dim; ++i) a.basis.push_back("e" + std::to_string(i + 1));
    return a;
}

Tensor3 tensor(std::size_t dim,
               std::initializer_list<std::tuple<int, int, int, Rational>> entries) {
    Tensor3 t(dim);
    for (const auto& [i, j, k, c] : entries) t.at(i - 1, j - 1, k - 1) = c;
    return t;
}

const std::map<std::string, std::string> kPairBind{{"tri_r", "tri_r"}, {"tri_l", "tri_l"}};
const std::map<std::string, std::string> kDenBind{{"succ", "succ"}, {"prec", "prec"}};
const std::map<std::string, std::string> kMulBind{{"op", "mul"}};

std::vector<CatalogEntry> build() {
    std::vector<CatalogEntry> out;

    out.push_back({"A1",
                   "trivial 2-dimensional associative algebra (all products zero)",
                   {},
                   [](const auto&) {
                       AlgebraSpace a = base_algebra(2);
                       a.ops.emplace("mul", Tensor3(2));
                       return a;
                   },
                   {{"associative", kMulBind, {}, true},
                    {"two-nilpotent", kMulBind, {}, true}}});

    out.push_back({"A2",
                   "2-dimensional nilpotent associative algebra, e1*e1 = e2",
                   {},
                   [](const auto&) {
                       AlgebraSpace a = base_algebra(2);
                       a.ops.emplace("mul", tensor(2, {{1, 1, 2, 1}}));
                       return a;
                   },
                   {{"associative", kMulBind, {}, true},
                    {"two-nilpotent", kMulBind, {}, true},
                    {"novikov", kMulBind, {}, true}}});

    out.push_back({"B1",
                   "trivial 2-dimensional anti-dendriform algebra",
                   {},
                   [](const auto&) {
                       AlgebraSpace a = base_algebra(2);
                       a.ops.emplace("tri_r", Tensor3(2));
                       a.ops.emplace("tri_l", Tensor3(2));
                       a.ops.emplace("mul", Tensor3(2));
                       return a;
                   },
                   {{"anti-dendriform", kPairBind, {}, true},
                    {"admissible-ntd", kPairBind, {}, true},
                    {"two-nilpotent", kMulBind, {}, true}}});

    out.push_back({"B2",
                   "2-dimensional anti-dendriform algebra, e1<|e1 = e2",
                   {},
                   [](const auto&) {
                       AlgebraSpace a = base_algebra(2);
                       a.ops.emplace("tri_r", Tensor3(2));
                       a.ops.emplace("tri_l", tensor(2, {{1, 1, 2, 1}}));
                       a.ops.emplace("mul", tensor(2, {{1, 1, 2, 1}}));
                       return a;
                   },
                   {{"anti-dendriform", kPairBind, {}, true},
                    {"admissible-ntd", kPairBind, {}, true},
                    {"associative", kMulBind, {}, true}}});

    out.push_back({"B3",
                   "2-dimensional anti-dendriform family, e1|>e1 = e2, e1<|e1 = lambda e2 "
                   "(lambda = -1 makes the two ops opposite, so the sum product is zero)",
                   {{"lambda", Rational(0)}},
                   [](const std::map<std::string, Rational>& p) {
                       Rational lam = p.at("lambda");
                       AlgebraSpace a = base_algebra(2);
                       a.ops.emplace("tri_r", tensor(2, {{1, 1, 2, 1}}));
                       a.ops.emplace("tri_l", tensor(2, {{1, 1, 2, lam}}));
                       a.ops.emplace("mul", tensor(2, {{1, 1, 2, 1 + lam}}));
                       return a;
                   },
                   {{"anti-dendriform", kPairBind, {}, true},
                    {"admissible-ntd", kPairBind, {}, true},
                    {"associative", kMulBind, {}, true}}});

    out.push_back({"EX3D",
                   "3-dimensional anti-dendriform family over e1*e1=e2, e1*e2=e2*e1=e3; "
                   "not 2-nilpotent",
                   {{"gamma", Rational(1)}},
                   [](const std::map<std::string, Rational>& p) {
                       Rational g = p.at("gamma");
                       AlgebraSpace a = base_algebra(3);
                       a.ops.emplace("tri_r", tensor(3, {{1, 1, 2, Rational(1, 2)},
                                                         {1, 1, 3, g},
                                                         {1, 2, 3, 2},
                                                         {2, 1, 3, -1}}));
                       a.ops.emplace("tri_l", tensor(3, {{1, 1, 2, Rational(1, 2)},
                                                         {1, 1, 3, -g},
                                                         {2, 1, 3, 2},
                                                         {1, 2, 3, -1}}));
                       a.ops.emplace("mul", tensor(3, {{1, 1, 2, 1}, {1, 2, 3, 1}, {2, 1, 3, 1}}));
                       return a;
                   },
                   {{"anti-dendriform", kPairBind, {}, true},
                    {"associative", kMulBind, {}, true},
                    {"admissible-ntd", kPairBind, {}, false},
                    {"two-nilpotent", kMulBind, {}, false}}});

    out.push_back({"EX224",
                   "2-dimensional associative algebra with idempotent, e1*e1 = e1, e1*e2 = e2",
                   {},
                   [](const auto&) {
                       AlgebraSpace a = base_algebra(2);
                       a.ops.emplace("mul", tensor(2, {{1, 1, 1, 1}, {1, 2, 2, 1}}));
                       return a;
                   },
                   {{"associative", kMulBind, {}, true},
                    {"two-nilpotent", kMulBind, {}, false}}});

    out.push_back({"NTD1",
                   "Novikov-type dendriform algebra from A2: succ = mul, prec = 0",
                   {},
                   [](const auto&) {
                       AlgebraSpace a = base_algebra(2);
                       a.ops.emplace("succ", tensor(2, {{1, 1, 2, 1}}));
                       a.ops.emplace("prec", Tensor3(2));
                       a.ops.emplace("mul", tensor(2, {{1, 1, 2, 1}}));
                       return a;
                   },
                   {{"dendriform", kDenBind, {}, true},
                    {"novikov-type-dendriform", kDenBind, {}, true},
                    {"novikov-type-dendriform-equiv", kDenBind, {}, true}}});

    out.push_back({"NTD2",
                   "Novikov-type dendriform algebra from A2: succ = 0, prec = mul",
                   {},
                   [](const auto&) {
                       AlgebraSpace a = base_algebra(2);
                       a.ops.emplace("succ", Tensor3(2));
                       a.ops.emplace("prec", tensor(2, {{1, 1, 2, 1}}));
                       a.ops.emplace("mul", tensor(2, {{1, 1, 2, 1}}));
                       return a;
                   },
                   {{"dendriform", kDenBind, {}, true},
                    {"novikov-type-dendriform", kDenBind, {}, true},
                    {"novikov-type-dendriform-equiv", kDenBind, {}, true}}});

    return out;
}

} // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = build();
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& id) {
    for (const auto& e : catalog_entries())
        if (e.id == id) return e;
    throw Error("unknown catalog id '" + id + "'");
}

AlgebraSpace catalog_load(const std::string& id, const std::map<std::string, Rational>& params) {
    const CatalogEntry& e = catalog_entry(id);
    std::map<std::string, Rational> merged = e.params;
    for (const auto& [k, v] : params) {
        if (!merged.count(k)) throw Error("entry '" + id + "' has no parameter '" + k + "'");
        merged[k] = v;
    }
    AlgebraSpace a = e.build(merged);
    a.validate();
    return a;
}

SelfTestReport catalog_self_test() {
    SelfTestReport rep;
    for (const auto& e : catalog_entries()) {
        AlgebraSpace a = catalog_load(e.id);
        for (const auto& exp : e.expected) {
            SelfTestReport::Item item;
            item.entry = e.id;
            item.bundle = exp.bundle;
            item.expected = exp.holds;
            item.actual = check_structure(a, exp.bundle, exp.binding, exp.q).holds;
            rep.all_pass = rep.all_pass && item.pass();
            rep.items.push_back(std::move(item));
        }
    }
    return rep;
}

} // namespace adend
