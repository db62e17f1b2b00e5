#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catalog.hpp"
#include "forms.hpp"
#include "transforms.hpp"

#include <random>

using namespace adend;

namespace {

const std::map<std::string, std::string> kPair{{"tri_r", "tri_r"}, {"tri_l", "tri_l"}};

Mat random_invertible(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> coef(-2, 2);
    for (;;) {
        Mat g(n, n);
        for (auto& c : g.a) c = coef(rng);
        if (det(g) != 0) return g;
    }
}

Bimodule conjugate(const Bimodule& m, const Mat& g) {
    Bimodule out = m;
    Mat ginv = *inverse(g);
    for (std::size_t i = 0; i < m.base.dim; ++i) {
        out.l[i] = ginv * m.l[i] * g;
        out.r[i] = ginv * m.r[i] * g;
    }
    return out;
}

} // namespace

TEST_CASE("bimodule axioms") {
    AlgebraSpace a2 = catalog_load("A2");
    CHECK(check_bimodule(regular_bimodule(a2, "mul")).holds);

    // zero actions on any associative algebra
    Bimodule zero;
    zero.base = catalog_load("EX224");
    zero.op = "mul";
    zero.space_dim = 3;
    zero.space_names = {"v1", "v2", "v3"};
    zero.l.assign(2, Mat(3, 3));
    zero.r.assign(2, Mat(3, 3));
    CHECK(check_bimodule(zero).holds);

    // (A, -L, -R) of an anti-dendriform algebra is a bimodule of the sum
    CHECK(check_bimodule(neg_mult_bimodule(catalog_load("B3"), "tri_r", "tri_l")).holds);

    // and fails when the pair is not anti-dendriform
    AlgebraSpace bad = catalog_load("EX224");
    bad.ops.emplace("zero", Tensor3(2));
    CHECK_FALSE(check_bimodule(neg_mult_bimodule(bad, "mul", "zero")).holds);
}

TEST_CASE("dual bimodule") {
    Bimodule reg = regular_bimodule(catalog_load("A2"), "mul");
    Bimodule dual = dual_bimodule(reg);
    CHECK(check_bimodule(dual).holds);
    CHECK(dual.space_names == std::vector<std::string>{"e1*", "e2*"});

    Bimodule dd = dual_bimodule(dual);
    for (std::size_t i = 0; i < reg.base.dim; ++i) {
        CHECK(dd.l[i] == reg.l[i]);
        CHECK(dd.r[i] == reg.r[i]);
    }

    Bimodule zero;
    zero.base = catalog_load("A1");
    zero.op = "mul";
    zero.space_dim = 1;
    zero.space_names = {"v1"};
    zero.l.assign(2, Mat(1, 1));
    zero.r.assign(2, Mat(1, 1));
    Bimodule dz = dual_bimodule(zero);
    CHECK(dz.l[0].is_zero());
    CHECK(dz.r[1].is_zero());
}

TEST_CASE("semidirect products") {
    // zero bimodule on A2 with a 1-dim module: only e1.e1 = e2 survives
    Bimodule zero;
    zero.base = catalog_load("A2");
    zero.op = "mul";
    zero.space_dim = 1;
    zero.space_names = {"v1"};
    zero.l.assign(2, Mat(1, 1));
    zero.r.assign(2, Mat(1, 1));
    AlgebraSpace s = semidirect(zero);
    CHECK(s.dim == 3);
    Tensor3 want(3);
    want.at(0, 0, 1) = 1;
    CHECK(s.op("mul") == want);

    // A x| A* for (A1)_2 = B3_{-1}: products f1.f4 = f3 and f4.f1 = -f3
    AlgebraSpace a12 = catalog_load("B3", {{"lambda", Rational(-1)}});
    Bimodule md = dual_bimodule(neg_mult_bimodule(a12, "tri_r", "tri_l"));
    AlgebraSpace sd = semidirect(md);
    CHECK(sd.dim == 4);
    Tensor3 expect(4);
    expect.at(0, 3, 2) = 1;  // f1 f4 = f3
    expect.at(3, 0, 2) = -1; // f4 f1 = -f3
    CHECK(sd.op("mul") == expect);
    CHECK(check_structure(sd, "associative", {{"op", "mul"}}).holds);

    // semidirect of any valid bimodule is associative
    Bimodule reg = regular_bimodule(catalog_load("EX224"), "mul");
    CHECK(check_structure(semidirect(reg), "associative", {{"op", "mul"}}).holds);

    // invalid bimodule is rejected
    AlgebraSpace bad = catalog_load("EX224");
    bad.ops.emplace("zero", Tensor3(2));
    CHECK_THROWS_AS(semidirect(neg_mult_bimodule(bad, "mul", "zero")), Error);
}

TEST_CASE("double space characterization") {
    AlgebraSpace b2 = catalog_load("B2");
    AlgebraSpace dbl = double_space(b2, "tri_r", "tri_l");
    CHECK(dbl.dim == 4);
    CHECK(check_structure(dbl, "associative", {{"op", "mul"}}).holds);

    AlgebraSpace trivial = double_space(catalog_load("B1"), "tri_r", "tri_l");
    CHECK(trivial.op("mul") == Tensor3(4));

    // (|> = mul, <| = 0) over EX224 is NOT anti-dendriform: double fails
    AlgebraSpace bad = catalog_load("EX224");
    bad.ops.emplace("zero", Tensor3(2));
    AlgebraSpace dbad = double_space(bad, "mul", "zero");
    StructureVerdict v = check_structure(dbad, "associative", {{"op", "mul"}});
    CHECK_FALSE(v.holds);
    CHECK(v.witness);

    // double space coincides with the semidirect product over (A, -L, -R)
    AlgebraSpace b3 = catalog_load("B3", {{"lambda", Rational(2)}});
    CHECK(double_space(b3, "tri_r", "tri_l").op("mul") ==
          semidirect(neg_mult_bimodule(b3, "tri_r", "tri_l")).op("mul"));
}

TEST_CASE("anti-O-operators") {
    AlgebraSpace b2 = catalog_load("B2");
    Bimodule m = neg_mult_bimodule(b2, "tri_r", "tri_l");
    OperatorCheckReport rep = check_anti_O(Mat::identity(2), m);
    CHECK(rep.is_operator);
    CHECK(rep.is_strong);

    OperatorCheckReport zero = check_anti_O(Mat(2, 2), m);
    CHECK(zero.is_operator);
    CHECK(zero.is_strong);

    CHECK_THROWS_AS(check_anti_O(Mat(3, 2), m), Error);

    // invertible anti-O-operators are automatically strong: conjugated instances
    std::mt19937_64 rng(21);
    for (int it = 0; it < 30; ++it) {
        std::uniform_int_distribution<int> pick(0, 2);
        AlgebraSpace alg;
        switch (pick(rng)) {
        case 0: alg = catalog_load("B3", {{"lambda", Rational(pick(rng) - 1)}}); break;
        case 1: alg = catalog_load("B2"); break;
        default: alg = catalog_load("EX3D", {{"gamma", Rational(pick(rng), 2)}}); break;
        }
        Bimodule base = neg_mult_bimodule(alg, "tri_r", "tri_l");
        Mat g = random_invertible(rng, alg.dim);
        OperatorCheckReport r = check_anti_O(g, conjugate(base, g));
        CHECK(r.is_operator);
        CHECK(r.is_strong);
    }
}

TEST_CASE("anti-Rota-Baxter operators on EX224") {
    AlgebraSpace ex = catalog_load("EX224");
    Mat p(2, 2);
    p.at(1, 0) = 1; // P e1 = e2, P e2 = 0
    OperatorCheckReport rep = check_anti_rb(p, ex, "mul");
    CHECK(rep.is_operator);
    CHECK(rep.is_strong);

    OperatorCheckReport zero = check_anti_rb(Mat(2, 2), ex, "mul");
    CHECK(zero.is_operator);
    CHECK(zero.is_strong);

    OperatorCheckReport id = check_anti_rb(Mat::identity(2), ex, "mul");
    CHECK_FALSE(id.is_operator); // e1.e1 = e1 but -P(2 e1) = -2 e1

    // non-associative designated op is rejected up front
    AlgebraSpace ex3d = catalog_load("EX3D");
    CHECK_THROWS_AS(check_anti_rb(Mat(3, 3), ex3d, "tri_r"), Error);
}

TEST_CASE("anti-1-cocycles") {
    AlgebraSpace a2 = catalog_load("A2");
    Bimodule reg = regular_bimodule(a2, "mul");
    CHECK(check_anti_1_cocycle(Mat(2, 2), reg).holds);

    Verdict id = check_anti_1_cocycle(Mat::identity(2), reg);
    CHECK_FALSE(id.holds); // D(e2) = e2 but -(e1 D(e1) + D(e1) e1) = -2 e2

    // T invertible anti-O  <=>  T^{-1} anti-1-cocycle, on a conjugated instance
    std::mt19937_64 rng(31);
    AlgebraSpace b3 = catalog_load("B3", {{"lambda", Rational(3)}});
    Bimodule base = neg_mult_bimodule(b3, "tri_r", "tri_l");
    Mat g = random_invertible(rng, 2);
    Bimodule conj = conjugate(base, g);
    REQUIRE(check_anti_O(g, conj).is_operator);
    CHECK(check_anti_1_cocycle(*inverse(g), conj).holds);
}

TEST_CASE("induced ops on the module") {
    AlgebraSpace b2 = catalog_load("B2");
    Bimodule m = neg_mult_bimodule(b2, "tri_r", "tri_l");
    AlgebraSpace induced = induced_ops_on_module(Mat::identity(2), m);
    CHECK(induced.op("tri_r") == b2.op("tri_r"));
    CHECK(induced.op("tri_l") == b2.op("tri_l"));
    CHECK(check_structure(induced, "anti-dendriform", kPair).holds);

    AlgebraSpace from_zero = induced_ops_on_module(Mat(2, 2), m);
    CHECK(from_zero.op("tri_r") == Tensor3(2));
    CHECK(from_zero.op("tri_l") == Tensor3(2));

    AlgebraSpace ex = catalog_load("EX224");
    Bimodule reg = regular_bimodule(ex, "mul");
    CHECK_THROWS_AS(induced_ops_on_module(Mat::identity(2), reg), Error);

    // strong anti-RB operator on EX224 reproduces e1 <| e1 = -gamma e2
    Mat p(2, 2);
    p.at(1, 0) = Rational(5);
    REQUIRE(check_anti_rb(p, ex, "mul").is_strong);
    AlgebraSpace via_rb = induced_ops_on_module(p, reg);
    Tensor3 want(2);
    want.at(0, 0, 1) = -5;
    CHECK(via_rb.op("tri_l") == want);
    CHECK(via_rb.op("tri_r") == Tensor3(2));
    CHECK(check_structure(via_rb, "anti-dendriform", kPair).holds);
}

TEST_CASE("hat embedding") {
    AlgebraSpace b3 = catalog_load("B3", {{"lambda", Rational(-1)}});
    Bimodule m = neg_mult_bimodule(b3, "tri_r", "tri_l");
    EmbedHat eh = embed_hat(Mat::identity(2), m);
    CHECK(eh.algebra.op("mul") == double_space(b3, "tri_r", "tri_l").op("mul"));

    // hat matrix sends (x, u) to (u, 0)
    Mat want(4, 4);
    want.at(0, 2) = 1;
    want.at(1, 3) = 1;
    CHECK(eh.hat == want);

    OperatorCheckReport rep = check_anti_rb(eh.hat, eh.algebra, "mul");
    CHECK(rep.is_operator == check_anti_O(Mat::identity(2), m).is_operator);
    CHECK(rep.is_operator);
    // on this 2-nilpotent double the image products vanish, so strongness holds
    CHECK(rep.is_strong);

    // the hat of Id is not strong in general: on the double of EX3D it is an
    // anti-Rota-Baxter operator that fails the triple condition
    AlgebraSpace ex3d = catalog_load("EX3D", {{"gamma", Rational(1)}});
    Bimodule m3 = neg_mult_bimodule(ex3d, "tri_r", "tri_l");
    EmbedHat eh3 = embed_hat(Mat::identity(3), m3);
    OperatorCheckReport rep3 = check_anti_rb(eh3.hat, eh3.algebra, "mul");
    CHECK(rep3.is_operator);
    CHECK_FALSE(rep3.is_strong);

    // zero operator embeds to the zero anti-RB operator
    EmbedHat ez = embed_hat(Mat(2, 2), m);
    CHECK(check_anti_rb(ez.hat, ez.algebra, "mul").is_operator);

    // the equivalence also holds in the negative: a map that is not an
    // anti-O-operator embeds to a non-anti-Rota-Baxter hat
    Bimodule reg = regular_bimodule(catalog_load("EX224"), "mul");
    Mat not_op = Mat::identity(2);
    REQUIRE_FALSE(check_anti_O(not_op, reg).is_operator);
    EmbedHat bad = embed_hat(not_op, reg);
    CHECK_FALSE(check_anti_rb(bad.hat, bad.algebra, "mul").is_operator);
}

TEST_CASE("hat operator induces the original ops on the module half of the double") {
    // on A' = {(0,x)}: -hat(0,x).(0,y) = (0, x|>y) and -(0,x).hat(0,y) = (0, x<|y)
    for (const auto& alg : {catalog_load("B3", {{"lambda", Rational(2)}}),
                            catalog_load("EX3D", {{"gamma", Rational(1)}})}) {
        std::size_t n = alg.dim;
        Bimodule m = neg_mult_bimodule(alg, "tri_r", "tri_l");
        EmbedHat eh = embed_hat(Mat::identity(n), m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Vec u = basis_vector(2 * n, n + i), v = basis_vector(2 * n, n + j);
                Vec left = eval_op(eh.algebra, "mul", eh.hat * u, v);
                Vec right = eval_op(eh.algebra, "mul", u, eh.hat * v);
                Vec want_r = eval_op(alg, "tri_r", basis_vector(n, i), basis_vector(n, j));
                Vec want_l = eval_op(alg, "tri_l", basis_vector(n, i), basis_vector(n, j));
                for (std::size_t k = 0; k < n; ++k) {
                    CHECK(-left[n + k] == want_r[k]);
                    CHECK(left[k] == 0);
                    CHECK(-right[n + k] == want_l[k]);
                    CHECK(right[k] == 0);
                }
            }
    }
}

TEST_CASE("three-way anti-dendriform characterization") {
    std::mt19937_64 rng(51);
    std::uniform_int_distribution<int> coef(-2, 2);
    int holds_count = 0;
    for (int it = 0; it < 60; ++it) {
        AlgebraSpace a;
        a.dim = 2;
        a.basis = {"e1", "e2"};
        Tensor3 r(2), l(2);
        if (it % 2 == 0) { // structured: products land in span{e2}
            r.at(0, 0, 1) = coef(rng);
            l.at(0, 0, 1) = coef(rng);
        } else {
            for (auto& c : r.c) c = coef(rng);
            for (auto& c : l.c) c = coef(rng);
        }
        a.ops.emplace("tri_r", r);
        a.ops.emplace("tri_l", l);
        ThreeWayVerdict v = anti_dendriform_three_way(a, "tri_r", "tri_l");
        CHECK(v.agree());
        if (v.bundle) ++holds_count;
    }
    CHECK(holds_count > 5);
}

TEST_CASE("classify_form") {
    AlgebraSpace a1 = catalog_load("A1");
    FormReport r = classify_form(Mat::identity(2), a1, "mul");
    CHECK(r.symmetric);
    CHECK(r.nondegenerate);
    CHECK(r.connes);
    CHECK(r.commutative_connes);
    CHECK(r.commutative_2cocycle);
    CHECK_FALSE(r.antisymmetric);

    Mat degenerate(2, 2);
    degenerate.at(0, 0) = 1; // zero row below
    CHECK_FALSE(classify_form(degenerate, a1, "mul").nondegenerate);

    // canonical pairing on the 4-dim semidirect algebra
    AlgebraSpace a12 = catalog_load("B3", {{"lambda", Rational(-1)}});
    AlgebraSpace sd = form_on_semidirect(a12, "tri_r", "tri_l");
    FormReport rep = classify_form(sd.form("B"), sd, "mul");
    CHECK(rep.symmetric);
    CHECK(rep.nondegenerate);
    CHECK(rep.commutative_connes);
}

TEST_CASE("anti-dendriform invariance of forms") {
    AlgebraSpace b2 = catalog_load("B2");
    InvarianceVerdict v = check_invariance_anti_dendriform(Mat::identity(2), b2, "tri_r", "tri_l");
    CHECK_FALSE(v.invariant);
    REQUIRE(v.witness);
    // first failing triple lexicographically: B(e1<|e1, e2) = 1 vs -B(e1, e1.e2) = 0
    CHECK(*v.witness == std::vector<std::size_t>{0, 0, 1});
    CHECK(v.family == "tri_l");

    CHECK(check_invariance_anti_dendriform(Mat(2, 2), b2, "tri_r", "tri_l").invariant);

    // reconstructed structures are invariant by construction (Theorem route)
    AlgebraSpace sd = form_on_semidirect(b2, "tri_r", "tri_l");
    ReconstructReport rec = reconstruct_anti_dendriform(sd.form("B"), sd, "mul");
    CHECK(rec.anti_dendriform);
    CHECK(rec.sums_to_product);
    CHECK(rec.invariant);
    InvarianceVerdict iv =
        check_invariance_anti_dendriform(sd.form("B"), rec.algebra, "tri_r", "tri_l");
    CHECK(iv.invariant);
    CHECK(iv.lemma_consequence); // B(x <| y, z) = B(z |> x, y)
}

TEST_CASE("reconstruction on the worked 4-dim instance") {
    AlgebraSpace a12 = catalog_load("B3", {{"lambda", Rational(-1)}});
    AlgebraSpace sd = form_on_semidirect(a12, "tri_r", "tri_l");
    ReconstructReport rec = reconstruct_anti_dendriform(sd.form("B"), sd, "mul");

    // hand-solved from B(x|>y,z) = -B(y,z.x), B(x<|y,z) = -B(x,y.z) with the
    // hyperbolic Gram matrix: four nonzero entries in total
    Tensor3 want_r(4), want_l(4);
    want_r.at(0, 0, 1) = 1;  // f1 |> f1 = f2
    want_r.at(3, 0, 2) = -1; // f4 |> f1 = -f3
    want_l.at(0, 0, 1) = -1; // f1 <| f1 = -f2
    want_l.at(0, 3, 2) = 1;  // f1 <| f4 = f3
    CHECK(rec.algebra.op("tri_r") == want_r);
    CHECK(rec.algebra.op("tri_l") == want_l);
    // in particular f1 |> f4 = 0
    CHECK(is_zero(eval_op(rec.algebra, "tri_r", basis_vector(4, 0), basis_vector(4, 3))));
    CHECK(rec.anti_dendriform);
    CHECK(rec.sums_to_product);
    CHECK(rec.invariant);

    // trivial algebra with the identity Gram matrix reconstructs trivially
    AlgebraSpace triv = catalog_load("A1");
    ReconstructReport rt = reconstruct_anti_dendriform(Mat::identity(2), triv, "mul");
    CHECK(rt.algebra.op("tri_r") == Tensor3(2));
    CHECK(rt.algebra.op("tri_l") == Tensor3(2));

    // degenerate or non-cocycle forms are rejected
    CHECK_THROWS_AS(reconstruct_anti_dendriform(Mat(2, 2), triv, "mul"), Error);
    AlgebraSpace ex = catalog_load("EX224");
    CHECK_THROWS_AS(reconstruct_anti_dendriform(Mat::identity(2), ex, "mul"), Error);
}

TEST_CASE("anti-pre-Lie invariance and the form-defined circ op") {
    AlgebraSpace b3 = catalog_load("B3", {{"lambda", Rational(2)}});
    CHECK(check_invariance_anti_pre_lie(Mat(2, 2), b3, "tri_r").holds);

    // pipeline form is invariant on the associated anti-pre-Lie algebra
    AlgebraSpace sd = form_on_semidirect(b3, "tri_r", "tri_l");
    ReconstructReport rec = reconstruct_anti_dendriform(sd.form("B"), sd, "mul");
    AlgebraSpace circ = assoc_anti_pre_lie(rec.algebra, "tri_r", "tri_l").algebra;
    CHECK(check_invariance_anti_pre_lie(sd.form("B"), circ, "circ").holds);

    // and coincides with the op solved directly from the form (diagram)
    AlgebraSpace from_form = anti_pre_lie_from_form(sd.form("B"), sd, "mul");
    CHECK(from_form.op("circ") == circ.op("circ"));

    // a random symmetric form on EX3D is not invariant
    AlgebraSpace ex3d = catalog_load("EX3D");
    AlgebraSpace ex_circ = assoc_anti_pre_lie(ex3d, "tri_r", "tri_l").algebra;
    Mat g = Mat::identity(3);
    g.at(0, 1) = g.at(1, 0) = 1;
    Verdict v = check_invariance_anti_pre_lie(g, ex_circ, "circ");
    CHECK_FALSE(v.holds);
    CHECK(v.witness);
}

TEST_CASE("semidirect form on the trivial 1-dim pair is hyperbolic") {
    AlgebraSpace one;
    one.dim = 1;
    one.basis = {"e"};
    one.ops.emplace("tri_r", Tensor3(1));
    one.ops.emplace("tri_l", Tensor3(1));
    AlgebraSpace sd = form_on_semidirect(one, "tri_r", "tri_l");
    CHECK(sd.dim == 2);
    CHECK(sd.op("mul") == Tensor3(2));
    Mat want(2, 2);
    want.at(0, 1) = want.at(1, 0) = 1;
    CHECK(sd.form("B") == want);
    CHECK(classify_form(sd.form("B"), sd, "mul").commutative_connes);
}

TEST_CASE("anti-O-operators are homomorphisms onto their image") {
    // T(u .V v) = T(u) . T(v) where .V is the sum of the induced ops
    std::mt19937_64 rng(71);
    AlgebraSpace b3 = catalog_load("B3", {{"lambda", Rational(4)}});
    Bimodule base = neg_mult_bimodule(b3, "tri_r", "tri_l");
    Mat g = random_invertible(rng, 2);
    Bimodule conj = conjugate(base, g);
    REQUIRE(check_anti_O(g, conj).is_strong);
    AlgebraSpace induced = induced_ops_on_module(g, conj);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            Vec uv = eval_op(induced, "tri_r", basis_vector(2, i), basis_vector(2, j));
            Vec uv2 = eval_op(induced, "tri_l", basis_vector(2, i), basis_vector(2, j));
            for (std::size_t k = 0; k < 2; ++k) uv[k] += uv2[k];
            Vec lhs = g * uv;
            Vec rhs = eval_op(conj.base, "mul", g * basis_vector(2, i), g * basis_vector(2, j));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("symmetric invariant forms are commutative Connes cocycles") {
    AlgebraSpace b3 = catalog_load("B3", {{"lambda", Rational(-1)}});
    AlgebraSpace sd = form_on_semidirect(b3, "tri_r", "tri_l");
    ReconstructReport rec = reconstruct_anti_dendriform(sd.form("B"), sd, "mul");
    REQUIRE(rec.invariant);
    FormReport fr = classify_form(sd.form("B"), sd, "mul");
    CHECK(fr.commutative_connes);
    // Lemma: commutative Connes cocycle is a commutative 2-cocycle on the commutator
    CHECK(fr.commutative_2cocycle);
}

TEST_CASE("canonical pairing is no Connes cocycle over an idempotent base") {
    // e1.e1 = e1 admits no compatible anti-dendriform structure, so the
    // pairing form on A x| A* (regular dual actions) cannot be a commutative
    // Connes cocycle there -- while it is one over a nilpotent base
    AlgebraSpace ex = catalog_load("EX224");
    AlgebraSpace sd = semidirect(dual_bimodule(regular_bimodule(ex, "mul")));
    Mat g(4, 4);
    for (std::size_t i = 0; i < 2; ++i) g.at(i, 2 + i) = g.at(2 + i, i) = 1;
    FormReport rep = classify_form(g, sd, "mul");
    CHECK(rep.symmetric);
    CHECK(rep.nondegenerate);
    CHECK_FALSE(rep.connes);
    CHECK_FALSE(rep.commutative_connes);

    // even over nilpotent A2 the REGULAR dual actions do not work: the
    // converse direction would force -R*_<| = R* and -L*_|> = L*, i.e.
    // 3 mul = 0; the right actions are the anti-dendriform duals used by
    // form_on_semidirect (tested elsewhere)
    AlgebraSpace a2 = catalog_load("A2");
    AlgebraSpace sd2 = semidirect(dual_bimodule(regular_bimodule(a2, "mul")));
    CHECK_FALSE(classify_form(g, sd2, "mul").commutative_connes);
}

TEST_CASE("form equivalence characterization") {
    // reconstructed structures: both sides true
    AlgebraSpace b2 = catalog_load("B2");
    AlgebraSpace sd = form_on_semidirect(b2, "tri_r", "tri_l");
    ReconstructReport rec = reconstruct_anti_dendriform(sd.form("B"), sd, "mul");
    FormEquivalenceReport fe =
        form_equivalence_check(sd.form("B"), rec.algebra, "tri_r", "tri_l");
    CHECK(fe.equivalent);
    CHECK(fe.nondegenerate_invariant);
    CHECK(fe.agree);

    // zero form: invariant but degenerate; both sides false
    FormEquivalenceReport fz = form_equivalence_check(Mat(2, 2), b2, "tri_r", "tri_l");
    CHECK_FALSE(fz.equivalent);
    CHECK_FALSE(fz.nondegenerate_invariant);
    CHECK(fz.agree);

    // randomized agreement of the two predicates
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int it = 0; it < 200; ++it) {
        AlgebraSpace a;
        a.dim = 2;
        a.basis = {"e1", "e2"};
        Tensor3 r(2), l(2);
        r.at(0, 0, 1) = coef(rng);
        l.at(0, 0, 1) = coef(rng);
        if (it % 3 == 0) r.at(0, 1, 0) = coef(rng); // occasionally break the structure
        a.ops.emplace("tri_r", r);
        a.ops.emplace("tri_l", l);
        Mat B(2, 2);
        for (auto& c : B.a) c = coef(rng);
        CHECK(form_equivalence_check(B, a, "tri_r", "tri_l").agree);
    }
}
