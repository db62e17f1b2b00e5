#ifndef ADEND_TRANSFORMS_HPP
#define ADEND_TRANSFORMS_HPP

#include "algebra.hpp"

#include <string>
#include <vector>

namespace adend {

// Derived-structure constructions.  Every transform returns a copy of the
// input algebra extended with the new op(s) under the given names, so source
// and target operations coexist for diagram tests.
struct TransformResult {
    AlgebraSpace algebra;
    std::vector<std::string> warnings;
};

TransformResult op_sum(const AlgebraSpace& alg, const std::string& op1, const std::string& op2,
                       const std::string& out = "dot");

TransformResult commutator(const AlgebraSpace& alg, const std::string& op,
                           const std::string& out = "bracket");

// x*y = x succ y - y prec x
TransformResult assoc_pre_lie(const AlgebraSpace& alg, const std::string& succ,
                              const std::string& prec, const std::string& out = "star");

// x o y = x tri_r y - y tri_l x
TransformResult assoc_anti_pre_lie(const AlgebraSpace& alg, const std::string& tri_r,
                                   const std::string& tri_l, const std::string& out = "circ");

// x |> y = x succ y + q x prec y ; x <| y = x prec y + q x succ y
TransformResult q_pair(const AlgebraSpace& alg, const std::string& succ, const std::string& prec,
                       const Rational& q, const std::string& out_r = "q_r",
                       const std::string& out_l = "q_l");

// x |>' y = x succ y + q y succ x ; x <|' y = x prec y + q y prec x
TransformResult q_pair_alt(const AlgebraSpace& alg, const std::string& succ,
                           const std::string& prec, const Rational& q,
                           const std::string& out_r = "q_r_alt",
                           const std::string& out_l = "q_l_alt");

// x <> y = x op y + q y op x
TransformResult q_single(const AlgebraSpace& alg, const std::string& op, const Rational& q,
                         const std::string& out = "diamond");

} // namespace adend

#endif
