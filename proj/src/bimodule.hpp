#ifndef ADEND_BIMODULE_HPP
#define ADEND_BIMODULE_HPP

#include "bundles.hpp"

#include <optional>
#include <string>
#include <vector>

namespace adend {

// Bimodule (V, l, r) of an associative algebra: one l- and one r-matrix per
// base basis vector, all space_dim x space_dim.
struct Bimodule {
    AlgebraSpace base;
    std::string op; // designated associative op on base
    std::size_t space_dim = 0;
    std::vector<std::string> space_names;
    std::vector<Mat> l, r;

    void validate_shapes() const;
};

Bimodule regular_bimodule(const AlgebraSpace& alg, const std::string& op);

// (A, -L_{tri_r}, -R_{tri_l}) over the sum algebra; base carries the sum op
// under the name "mul".
Bimodule neg_mult_bimodule(const AlgebraSpace& alg, const std::string& tri_r,
                           const std::string& tri_l);

struct BimoduleVerdict {
    bool holds = true;
    std::string equation; // "left", "right", "commute"
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

// The three bimodule axioms as matrix identities over all basis pairs.
BimoduleVerdict check_bimodule(const Bimodule& m);

// (V*, r*, l*): actions transpose and swap sides.
Bimodule dual_bimodule(const Bimodule& m);

// Associative algebra on A (+) V with (x,u)(y,v) = (x.y, l(x)v + r(y)u).
AlgebraSpace semidirect(const Bimodule& m);

// 2n-dim algebra with (x,a)(y,b) = (x|>y + x<|y, -x|>b - a<|y); associative
// iff (tri_r, tri_l) is anti-dendriform.
AlgebraSpace double_space(const AlgebraSpace& alg, const std::string& tri_r,
                          const std::string& tri_l, const std::string& out_op = "mul");

struct OperatorCheckReport {
    bool is_operator = false;
    bool is_strong = false;
    std::optional<std::pair<std::string, std::vector<std::size_t>>> first_failure;
};

// T : V -> A;  T(u).T(v) = -T(l(T(u))v + r(T(v))u), strongness on triples.
OperatorCheckReport check_anti_O(const Mat& T, const Bimodule& m);

// P : A -> A anti-Rota-Baxter for the regular bimodule; the designated op
// must be associative (strongness drops parentheses).
OperatorCheckReport check_anti_rb(const Mat& P, const AlgebraSpace& alg, const std::string& op);

// D : A -> V;  D(x.y) = -(l(x)D(y) + r(y)D(x)).
Verdict check_anti_1_cocycle(const Mat& D, const Bimodule& m);

// u |> v = -l(T(u))v, u <| v = -r(T(v))u on the module space; T must pass
// the operator check.
AlgebraSpace induced_ops_on_module(const Mat& T, const Bimodule& m,
                                   const std::string& out_r = "tri_r",
                                   const std::string& out_l = "tri_l");

struct EmbedHat {
    AlgebraSpace algebra; // semidirect(m)
    Mat hat;              // (x,u) -> (T(u), 0)
};

EmbedHat embed_hat(const Mat& T, const Bimodule& m);

// The three equivalent characterizations of anti-dendriform: the bundle
// itself; associative sum plus the three reduced equations; associative sum
// plus (A, -L, -R) being a bimodule.
struct ThreeWayVerdict {
    bool bundle = false;
    bool equations = false;
    bool bimodule = false;
    bool agree() const { return bundle == equations && equations == bimodule; }
};

ThreeWayVerdict anti_dendriform_three_way(const AlgebraSpace& alg, const std::string& tri_r,
                                          const std::string& tri_l);

} // namespace adend

#endif
