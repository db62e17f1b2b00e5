#ifndef ADEND_BUNDLES_HPP
#define ADEND_BUNDLES_HPP

#include "identity.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace adend {

// A named axiom bundle: identity set over declared binary op slots, with
// optional derived operations usable inside the identities (e.g. "." for the
// sum of the two slots, "br" for the commutator of a single slot).
struct StructureDef {
    std::string name;
    std::vector<std::string> slots;
    std::vector<IdentityExpr> identities;        // empty for q-parameterized bundles
    std::map<std::string, IdentityExpr> derived; // binary expressions over slots
    bool q_parameterized = false;
    std::function<std::vector<IdentityExpr>(const Rational&)> q_identities;

    std::vector<IdentityExpr> instantiate(const std::optional<Rational>& q) const;
};

using Registry = std::map<std::string, StructureDef>;

// Built-in bundles: associative, lie, lie-admissible, dendriform,
// anti-dendriform, associative-admissible, pre-lie, anti-pre-lie, novikov,
// admissible-novikov, novikov-type-dendriform(-equiv), admissible-ntd(-equiv),
// two-nilpotent, and the q-parameterized condition bundles.
const Registry& registry();

struct StructureVerdict {
    bool holds = true;
    std::string failed_identity;                     // label of first failure
    std::optional<std::vector<std::size_t>> witness; // basis tuple
};

// Binds an algebra's ops to the bundle's slots and checks every identity.
StructureVerdict check_structure(const AlgebraSpace& alg, const StructureDef& def,
                                 const std::map<std::string, std::string>& binding,
                                 const std::optional<Rational>& q = std::nullopt);

StructureVerdict check_structure(const AlgebraSpace& alg, const std::string& def_name,
                                 const std::map<std::string, std::string>& binding,
                                 const std::optional<Rational>& q = std::nullopt);

// Instance-level agreement of two bundles over the same slots.
bool check_equiv_characterizations(const AlgebraSpace& alg, const std::string& def_a,
                                   const std::string& def_b,
                                   const std::map<std::string, std::string>& binding,
                                   const std::optional<Rational>& q = std::nullopt);

} // namespace adend

#endif
