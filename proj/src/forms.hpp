#ifndef ADEND_FORMS_HPP
#define ADEND_FORMS_HPP

#include "bimodule.hpp"

namespace adend {

struct FormReport {
    bool symmetric = false;
    bool antisymmetric = false;
    bool nondegenerate = false;
    bool connes = false;                // cyclic sum over the product vanishes
    bool commutative_connes = false;    // symmetric && connes
    bool commutative_2cocycle = false;  // symmetric && cyclic over the commutator
};

FormReport classify_form(const Mat& B, const AlgebraSpace& alg, const std::string& op);

struct InvarianceVerdict {
    bool invariant = true;
    bool lemma_consequence = true; // B(x <| y, z) == B(z |> x, y)
    std::string family;            // "tri_r" or "tri_l" on failure
    std::optional<std::vector<std::size_t>> witness;
};

// B(x |> y, z) = -B(y, z.x) and B(x <| y, z) = -B(x, y.z), with . the sum op.
InvarianceVerdict check_invariance_anti_dendriform(const Mat& B, const AlgebraSpace& alg,
                                                   const std::string& tri_r,
                                                   const std::string& tri_l);

// B(x o y, z) = B(y, [x,z]) with [,] the commutator of circ.
Verdict check_invariance_anti_pre_lie(const Mat& B, const AlgebraSpace& alg,
                                      const std::string& circ);

struct ReconstructReport {
    AlgebraSpace algebra; // input extended with tri_r, tri_l
    bool anti_dendriform = false;
    bool sums_to_product = false;
    bool invariant = false;
};

// Solves B(x |> y, z) = -B(y, z.x), B(x <| y, z) = -B(x, y.z) through the
// inverse Gram matrix.  B must be a nondegenerate commutative Connes cocycle
// on (alg, op).
ReconstructReport reconstruct_anti_dendriform(const Mat& B, const AlgebraSpace& alg,
                                              const std::string& op,
                                              const std::string& out_r = "tri_r",
                                              const std::string& out_l = "tri_l");

// Compatible anti-pre-Lie op from a nondegenerate form: solves
// B(x o y, z) = B(y, [x,z]) with [,] the commutator of op.
AlgebraSpace anti_pre_lie_from_form(const Mat& B, const AlgebraSpace& alg, const std::string& op,
                                    const std::string& out = "circ");

// A x|_{-R*_<|, -L*_|>} A* with the canonical pairing form, attached to the
// result under the form name "B".  Requires (alg, tri_r, tri_l) to pass
// anti-dendriform.
AlgebraSpace form_on_semidirect(const AlgebraSpace& alg, const std::string& tri_r,
                                const std::string& tri_l);

struct FormEquivalenceReport {
    bool equivalent = false;        // psi invertible and intertwines both actions
    bool nondegenerate_invariant = false;
    bool agree = false;
};

// psi(x) = B(x, .) intertwines (A, -L, -R) with (A*, R.*, L.*) exactly when
// B is nondegenerate and invariant.
FormEquivalenceReport form_equivalence_check(const Mat& B, const AlgebraSpace& alg,
                                             const std::string& tri_r, const std::string& tri_l);

} // namespace adend

#endif
