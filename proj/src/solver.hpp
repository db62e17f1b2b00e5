#ifndef ADEND_SOLVER_HPP
#define ADEND_SOLVER_HPP

#include "bundles.hpp"
#include "poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace adend {

// Algebra whose structure constants are polynomials in unknowns.
struct SymbolicAlgebra {
    std::size_t dim = 0;
    std::vector<std::string> basis;
    VarTablePtr vars;
    std::map<std::string, Tensor3T<MultiPoly>> ops;
};

// One polynomial per (identity, basis tuple, output coordinate); zeros
// dropped, duplicates collapsed.
std::vector<MultiPoly> extract_system(const SymbolicAlgebra& salg, const StructureDef& def,
                                      const std::map<std::string, std::string>& binding,
                                      const std::optional<Rational>& q = std::nullopt);

struct SolutionIdeal {
    GroebnerBasis basis;                // reduced basis, after radical variable closure
    std::vector<std::string> free_vars; // absent from all leading terms
    bool consistent = true;             // basis != {1}

    std::vector<std::string> gens_str() const;
};

SolutionIdeal make_solution_ideal(GroebnerBasis gb);

// Unknown full tri_r tensor (variables "r_<ijk>"); tri_l is eliminated as
// op - tri_r.  The designated op must be associative.
SolutionIdeal solve_compatible_anti_dendriform(const AlgebraSpace& alg, const std::string& op);

// Unknown operator matrix entries "a<i><j>" (column j = image of e_j).
SolutionIdeal solve_anti_rb(const AlgebraSpace& alg, const std::string& op);

// Both tensors unknown ("r_<ijk>", "l_<ijk>"); pins substitute chosen
// entries with rationals before solving.  dim is capped (default 3,
// ADEND_MAX_DIM overrides).
SolutionIdeal solve_anti_dendriform_free(std::size_t dim,
                                         const std::map<std::string, Rational>& pins = {});

struct InvariantVector {
    std::size_t dim = 0;
    std::map<std::string, AnnihilatorDims> per_op;
    std::size_t product_span = 0; // span of all pairwise products, all ops
    std::size_t triple_span = 0;  // span of all mixed triple products
    bool sum_commutative = false; // the sum of all listed ops
    bool operator==(const InvariantVector&) const = default;
};

InvariantVector iso_invariants(const AlgebraSpace& alg, const std::vector<std::string>& ops);

struct IsoResult {
    SolutionIdeal ideal;          // unknown change of basis, Rabinowitsch determinant
    std::optional<Mat> witness;   // rational isomorphism found by scanning, if any
};

// g(x op_a y) = g(x) op_b g(y) with invertibility encoded as det(g) t = 1.
// Consistency decides isomorphism over the algebraic closure; a rational
// witness is searched over a small candidate grid.
IsoResult iso_search(const AlgebraSpace& a, const AlgebraSpace& b,
                     const std::vector<std::string>& ops);

// Substitutes each free-variable combination from `grid` and back-solves the
// remaining triangular-linear generators; gives up on non-linear residue.
std::vector<std::map<std::string, Rational>> sample_points(const SolutionIdeal& ideal,
                                                           const std::vector<Rational>& grid,
                                                           std::size_t max_points = 16);

std::size_t solver_dim_cap();

// Lean tensor-level anti-dendriform test (the four axiom families evaluated
// directly); used by grid soundness sweeps where the DSL path is too slow.
bool anti_dendriform_tensors(const Tensor3& cr, const Tensor3& cl);

} // namespace adend

#endif
