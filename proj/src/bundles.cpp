#include "bundles.hpp"

#include <sstream>

namespace adend {

namespace {

// Parses a DSL identity whose op symbols are then renamed to slot names, so
// registry definitions can be written in the compact > < . * o notation.
IdentityExpr ident(const std::string& label, const std::string& src,
                   const std::map<std::string, std::string>& symtab) {
    IdentityExpr id = parse_identity(src);
    id.ast = bind_ops(id.ast, symtab);
    id.label = label;
    return id;
}

IdentityExpr expr2(const std::string& src, const std::map<std::string, std::string>& symtab) {
    IdentityExpr id = parse_expression(src);
    id.ast = bind_ops(id.ast, symtab);
    return id;
}

const std::map<std::string, std::string> kPair{{">", "tri_r"}, {"<", "tri_l"}};
const std::map<std::string, std::string> kDen{{">", "succ"}, {"<", "prec"}};
const std::map<std::string, std::string> kDot{{".", "op"}};
const std::map<std::string, std::string> kStar{{"*", "op"}};
const std::map<std::string, std::string> kCirc{{"o", "op"}};

std::string coeff(const Rational& c) { return rat_to_string(c); }

Registry build_registry() {
    Registry reg;
    auto put = [&](StructureDef def) { reg.emplace(def.name, std::move(def)); };

    // single-op bundles ----------------------------------------------------
    put({.name = "associative",
         .slots = {"op"},
         .identities = {ident("assoc", "x,y,z: (x.y).z - x.(y.z) = 0", kDot)}});

    put({.name = "two-nilpotent",
         .slots = {"op"},
         .identities = {ident("left-triple", "x,y,z: (x.y).z = 0", kDot),
                        ident("right-triple", "x,y,z: x.(y.z) = 0", kDot)}});

    put({.name = "lie",
         .slots = {"op"},
         .identities = {ident("antisymmetry", "x,y: x.y + y.x = 0", kDot),
                        ident("jacobi", "x,y,z: (x.y).z + (y.z).x + (z.x).y = 0", kDot)}});

    put({.name = "lie-admissible",
         .slots = {"op"},
         .identities = {ident("jacobi-commutator",
                              "x,y,z: (x br y) br z + (y br z) br x + (z br x) br y = 0", kDot)},
         .derived = {{"br", expr2("x,y: x.y - y.x", kDot)}}});

    put({.name = "pre-lie",
         .slots = {"op"},
         .identities = {ident("pre-lie", "x,y,z: (x*y)*z - x*(y*z) - (y*x)*z + y*(x*z) = 0",
                              kStar)}});

    put({.name = "novikov",
         .slots = {"op"},
         .identities = {ident("pre-lie", "x,y,z: (x*y)*z - x*(y*z) - (y*x)*z + y*(x*z) = 0",
                              kStar),
                        ident("right-commute", "x,y,z: (x*y)*z - (x*z)*y = 0", kStar)}});

    put({.name = "anti-pre-lie",
         .slots = {"op"},
         .identities = {ident("left-anti", "x,y,z: x o (y o z) - y o (x o z) - (y br x) o z = 0",
                              kCirc),
                        ident("cyclic", "x,y,z: (x br y) o z + (y br z) o x + (z br x) o y = 0",
                              kCirc)},
         .derived = {{"br", expr2("x,y: x o y - y o x", kCirc)}}});

    put({.name = "admissible-novikov",
         .slots = {"op"},
         .identities = {ident("left-anti", "x,y,z: x o (y o z) - y o (x o z) - (y br x) o z = 0",
                              kCirc),
                        ident("admissible", "x,y,z: 2*(x o (y br z)) - (x o y) o z + (x o z) o y = 0",
                              kCirc)},
         .derived = {{"br", expr2("x,y: x o y - y o x", kCirc)}}});

    // dendriform side -------------------------------------------------------
    put({.name = "dendriform",
         .slots = {"succ", "prec"},
         .identities = {ident("left", "x,y,z: x>(y>z) - (x.y)>z = 0", kDen),
                        ident("right", "x,y,z: (x<y)<z - x<(y.z) = 0", kDen),
                        ident("middle", "x,y,z: (x>y)<z - x>(y<z) = 0", kDen)},
         .derived = {{".", expr2("x,y: x>y + x<y", kDen)}}});

    put({.name = "novikov-type-dendriform",
         .slots = {"succ", "prec"},
         .identities = {ident("left", "x,y,z: x>(y>z) - (x.y)>z = 0", kDen),
                        ident("right", "x,y,z: (x<y)<z - x<(y.z) = 0", kDen),
                        ident("middle", "x,y,z: (x>y)<z - x>(y<z) = 0", kDen),
                        ident("s1", "x,y,z: x>(y>z) - (x<y)<z = 0", kDen),
                        ident("s2", "x,y,z: (x<y)>z - x<(y>z) = 0", kDen),
                        ident("ntd", "x,y,z: x<(y<z) = 0", kDen)},
         .derived = {{".", expr2("x,y: x>y + x<y", kDen)}}});

    put({.name = "novikov-type-dendriform-equiv",
         .slots = {"succ", "prec"},
         .identities = {ident("nd1a", "x,y,z: x>(y>z) - (x<y)<z = 0", kDen),
                        ident("nd1b", "x,y,z: x>(y>z) - x<(y>z) = 0", kDen),
                        ident("nd1c", "x,y,z: x>(y>z) - (x<y)>z = 0", kDen),
                        ident("nd2", "x,y,z: x>(y<z) - (x>y)<z = 0", kDen),
                        ident("nd3a", "x,y,z: (x>y)>z - x<(y<z) = 0", kDen),
                        ident("nd3b", "x,y,z: (x>y)>z = 0", kDen)}});

    // anti-dendriform side ---------------------------------------------------
    put({.name = "anti-dendriform",
         .slots = {"tri_r", "tri_l"},
         .identities = {ident("chain-a", "x,y,z: x>(y>z) + (x.y)>z = 0", kPair),
                        ident("chain-b", "x,y,z: x>(y>z) + x<(y.z) = 0", kPair),
                        ident("chain-c", "x,y,z: x>(y>z) - (x<y)<z = 0", kPair),
                        ident("middle", "x,y,z: (x>y)<z - x>(y<z) = 0", kPair)},
         .derived = {{".", expr2("x,y: x>y + x<y", kPair)}}});

    put({.name = "associative-admissible",
         .slots = {"tri_r", "tri_l"},
         .identities = {ident("sum-assoc", "x,y,z: (x.y).z - x.(y.z) = 0", kPair)},
         .derived = {{".", expr2("x,y: x>y + x<y", kPair)}}});

    put({.name = "admissible-ntd",
         .slots = {"tri_r", "tri_l"},
         .identities = {ident("chain-a", "x,y,z: x>(y>z) + (x.y)>z = 0", kPair),
                        ident("chain-b", "x,y,z: x>(y>z) + x<(y.z) = 0", kPair),
                        ident("chain-c", "x,y,z: x>(y>z) - (x<y)<z = 0", kPair),
                        ident("middle", "x,y,z: (x>y)<z - x>(y<z) = 0", kPair),
                        ident("anti-s1", "x,y,z: (x<y)>z - x<(y>z) = 0", kPair),
                        ident("ntad", "x,y,z: x<(y<z) - 2*((x.y)<z) = 0", kPair)},
         .derived = {{".", expr2("x,y: x>y + x<y", kPair)}}});

    put({.name = "admissible-ntd-equiv",
         .slots = {"tri_r", "tri_l"},
         .identities = {ident("and1a", "x,y,z: (x>y)>z - x<(y<z) = 0", kPair),
                        ident("and1b",
                              "x,y,z: (x>y)>z - 2/3*((x>y)<z) + 2/3*((x<y)>z) = 0", kPair),
                        ident("and2a", "x,y,z: x>(y>z) - (x<y)<z = 0", kPair),
                        ident("and2b",
                              "x,y,z: x>(y>z) + 2/3*((x>y)<z) + 1/3*((x<y)>z) = 0", kPair),
                        ident("and3", "x,y,z: x>(y<z) - (x>y)<z = 0", kPair),
                        ident("and4", "x,y,z: x<(y>z) - (x<y)>z = 0", kPair)}});

    // q-parameterized condition bundles --------------------------------------
    {
        StructureDef d;
        d.name = "dendri-q-cond";
        d.slots = {"succ", "prec"};
        d.q_parameterized = true;
        d.q_identities = [](const Rational& q) {
            Rational c1 = q * q + 3 * q + 2, c2 = q * q + 2 * q, c3 = q * q - q;
            std::ostringstream os;
            os << "x,y,z: " << coeff(c1) << "*((x<y)<z) + " << coeff(c2) << "*(x>(y<z)) + "
               << coeff(c3) << "*(x<(y<z)) = 0";
            return std::vector<IdentityExpr>{
                ident("s1", "x,y,z: x>(y>z) - (x<y)<z = 0", kDen),
                ident("s2", "x,y,z: (x<y)>z - x<(y>z) = 0", kDen),
                ident("q-cond", os.str(), kDen)};
        };
        put(std::move(d));
    }
    {
        StructureDef d;
        d.name = "anti-dendri-q-cond";
        d.slots = {"tri_r", "tri_l"};
        d.q_parameterized = true;
        d.q_identities = [](const Rational& q) {
            Rational c1 = -q * q + q + 2, c2 = -q * q, c3 = q * q + q;
            std::ostringstream os;
            os << "x,y,z: " << coeff(c1) << "*((x<y)<z) + " << coeff(c2) << "*((x>y)<z) + "
               << coeff(c3) << "*(x<(y<z)) = 0";
            return std::vector<IdentityExpr>{
                ident("anti-s1", "x,y,z: (x<y)>z - x<(y>z) = 0", kPair),
                ident("q-cond", os.str(), kPair)};
        };
        put(std::move(d));
    }
    {
        StructureDef d;
        d.name = "pre-lie-q-cond";
        d.slots = {"op"};
        d.q_parameterized = true;
        d.derived = {{"br", expr2("x,y: x*y - y*x", kStar)}};
        d.q_identities = [](const Rational& q) {
            Rational a = 2 + q, b = -q * q - 2 * q, c = q * q - q;
            std::ostringstream os;
            os << "x,y,z: " << coeff(a) << "*((x br y)*z) + " << coeff(b) << "*(z*(x br y)) + "
               << coeff(c) << "*((z*y)*x) - " << coeff(c) << "*((z*x)*y) = 0";
            return std::vector<IdentityExpr>{ident("q-cond", os.str(), kStar)};
        };
        put(std::move(d));
    }
    {
        StructureDef d;
        d.name = "anti-pre-lie-q-cond";
        d.slots = {"op"};
        d.q_parameterized = true;
        d.derived = {{"br", expr2("x,y: x o y - y o x", kCirc)}};
        d.q_identities = [](const Rational& q) {
            Rational a = 2 + q, b = -q * q, c = q * q + q;
            std::ostringstream os;
            os << "x,y,z: " << coeff(a) << "*((x br y) o z) + " << coeff(b) << "*(z o (x br y)) + "
               << coeff(c) << "*((z o x) o y) - " << coeff(c) << "*((z o y) o x) = 0";
            return std::vector<IdentityExpr>{ident("q-cond", os.str(), kCirc)};
        };
        put(std::move(d));
    }
    return reg;
}

} // namespace

std::vector<IdentityExpr> StructureDef::instantiate(const std::optional<Rational>& q) const {
    if (q_parameterized) {
        if (!q) throw Error("bundle '" + name + "' requires a rational q");
        if (*q == 0 || *q == 1 || *q == -1)
            throw Error("bundle '" + name + "' rejects q in {0, 1, -1}");
        return q_identities(*q);
    }
    if (q) throw Error("bundle '" + name + "' is not q-parameterized");
    return identities;
}

const Registry& registry() {
    static const Registry reg = build_registry();
    return reg;
}

StructureVerdict check_structure(const AlgebraSpace& alg, const StructureDef& def,
                                 const std::map<std::string, std::string>& binding,
                                 const std::optional<Rational>& q) {
    for (const auto& slot : def.slots) {
        auto it = binding.find(slot);
        if (it == binding.end())
            throw Error("incomplete binding: slot '" + slot + "' of bundle '" + def.name +
                        "' is unbound");
        if (!alg.has_op(it->second))
            throw Error("binding for slot '" + slot + "' names unknown op '" + it->second + "'");
    }

    auto lookup_derived = [&](const std::string& op) -> const IdentityExpr* {
        auto it = def.derived.find(op);
        return it == def.derived.end() ? nullptr : &it->second;
    };

    StructureVerdict out;
    for (const auto& raw : def.instantiate(q)) {
        IdentityExpr id = raw;
        id.ast = bind_ops(expand_ops(raw.ast, lookup_derived), binding);
        Verdict v = check_identity(id, alg);
        if (!v.holds) {
            out.holds = false;
            out.failed_identity = raw.label;
            out.witness = v.witness;
            return out;
        }
    }
    return out;
}

StructureVerdict check_structure(const AlgebraSpace& alg, const std::string& def_name,
                                 const std::map<std::string, std::string>& binding,
                                 const std::optional<Rational>& q) {
    auto it = registry().find(def_name);
    if (it == registry().end()) throw Error("unknown bundle '" + def_name + "'");
    return check_structure(alg, it->second, binding, q);
}

bool check_equiv_characterizations(const AlgebraSpace& alg, const std::string& def_a,
                                   const std::string& def_b,
                                   const std::map<std::string, std::string>& binding,
                                   const std::optional<Rational>& q) {
    return check_structure(alg, def_a, binding, q).holds ==
           check_structure(alg, def_b, binding, q).holds;
}

} // namespace adend
