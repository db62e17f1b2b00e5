#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jsonio.hpp"
#include "poly.hpp"

#include <fstream>
#include <random>

using namespace adend;

namespace {

VarTablePtr table(std::initializer_list<std::string> names) {
    return std::make_shared<VarTable>(names);
}

MultiPoly var(const VarTablePtr& t, std::size_t i) { return MultiPoly::variable(t, i); }
MultiPoly cst(const VarTablePtr& t, long v) { return MultiPoly::constant(t, Rational(v)); }

std::vector<std::string> strs(const GroebnerBasis& gb) {
    std::vector<std::string> out;
    for (const auto& g : gb.gens) out.push_back(g.str());
    return out;
}

} // namespace

TEST_CASE("rational parsing and canonical form") {
    CHECK(rat_to_string(rat_from_string("4/6")) == "2/3");
    CHECK(rat_to_string(rat_from_string("-4/6")) == "-2/3");
    CHECK(rat_to_string(rat_from_string("7")) == "7");
    CHECK(rat_to_string(Rational(0)) == "0");
    CHECK_THROWS_AS(rat_from_string("1/0"), Error);
    CHECK_THROWS_AS(rat_from_string("x"), Error);
}

TEST_CASE("rational arithmetic properties on random values") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
    for (int it = 0; it < 200; ++it) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (a != 0) CHECK(a * (Rational(1) / a) == 1);
    }
}

TEST_CASE("grevlex order") {
    // x > y > z; degree first, then smaller exponent at the last difference
    CHECK(grevlex_greater({2, 0, 0}, {1, 1, 0}));  // x^2 > xy
    CHECK(grevlex_greater({1, 1, 0}, {0, 2, 0}));  // xy > y^2
    CHECK(grevlex_greater({0, 2, 0}, {1, 0, 1}));  // y^2 > xz  (z beats)
    CHECK(grevlex_greater({1, 0, 1}, {0, 1, 1}));  // xz > yz
    CHECK(grevlex_greater({1, 0, 0}, {0, 0, 0}));
    CHECK_FALSE(grevlex_greater({1, 0, 0}, {1, 0, 0}));
}

TEST_CASE("polynomial string form") {
    auto t = table({"a11", "b12"});
    MultiPoly p = var(t, 0) * var(t, 0) * var(t, 1) - var(t, 0) * cst(t, 2);
    CHECK(p.str() == "a11^2*b12 - 2*a11");
    CHECK(MultiPoly(t).str() == "0");
    CHECK(cst(t, -3).str() == "-3");
}

TEST_CASE("poly_reduce examples") {
    auto t = table({"x", "y"});
    MultiPoly x = var(t, 0), y = var(t, 1);

    CHECK(poly_reduce(x * x, {x}).is_zero());
    CHECK(poly_reduce(x * x + y, {x}) == y);

    auto t2 = table({"a11", "a12"});
    MultiPoly a11 = var(t2, 0), a12 = var(t2, 1);
    CHECK(poly_reduce(a11 * a11 + a11 * a12, {a11}).is_zero());

    CHECK_THROWS_AS(poly_reduce(x, {a11}), Error);
}

TEST_CASE("buchberger: linear elimination and containment") {
    auto t = table({"x", "y"});
    MultiPoly x = var(t, 0), y = var(t, 1);

    GroebnerBasis g1 = buchberger(t, {x + y, x - y});
    CHECK(strs(g1) == std::vector<std::string>{"x", "y"});

    GroebnerBasis g2 = buchberger(t, {x * x - x, x});
    CHECK(strs(g2) == std::vector<std::string>{"x"});

    GroebnerBasis g0 = buchberger(t, {});
    CHECK(g0.gens.empty());
    CHECK_FALSE(g0.is_trivial_unit());
}

TEST_CASE("buchberger: one-dim anti-dendriform constraint ideal") {
    // members a^2, -a^2-ab, -b^2-ab, b^2 differenced against the first;
    // the ideal is homogeneous quadratic, so its reduced basis has no
    // linear part (frozen from an independent computer-algebra run)
    auto t = table({"a", "b"});
    MultiPoly a = var(t, 0), b = var(t, 1);
    MultiPoly m1 = a * a, m2 = MultiPoly(t) - a * a - a * b, m3 = MultiPoly(t) - b * b - a * b,
              m4 = b * b;
    GroebnerBasis gb = buchberger(t, {m1 - m2, m1 - m3, m1 - m4});
    CHECK(strs(gb) == std::vector<std::string>{"b^3", "a^2 - b^2", "a*b + 2*b^2"});

    SUBCASE("every input generator reduces to zero") {
        CHECK(gb.contains(m1 - m2));
        CHECK(gb.contains(m1 - m3));
        CHECK(gb.contains(m1 - m4));
    }
    SUBCASE("reduced basis is a fixed point of buchberger") {
        CHECK(buchberger(t, gb.gens) == gb);
    }
    SUBCASE("both variables lie in the radical; closure is the full point") {
        CHECK(radical_member(gb, 0));
        CHECK(radical_member(gb, 1));
        GroebnerBasis closed = radical_variable_closure(gb);
        CHECK(strs(closed) == std::vector<std::string>{"a", "b"});
        CHECK(free_variables(closed).empty());
    }
}

TEST_CASE("buchberger: cyclic-3 (frozen from an independent run)") {
    auto t = table({"x", "y", "z"});
    MultiPoly x = var(t, 0), y = var(t, 1), z = var(t, 2);
    GroebnerBasis gb = buchberger(t, {x + y + z, x * y + y * z + z * x, x * y * z - cst(t, 1)});
    CHECK(strs(gb) ==
          std::vector<std::string>{"z^3 - 1", "y^2 + y*z + z^2", "x + y + z"});
}

TEST_CASE("buchberger output is independent of generator presentation") {
    auto t = table({"x", "y", "z"});
    MultiPoly x = var(t, 0), y = var(t, 1), z = var(t, 2);
    std::vector<MultiPoly> gens = {x * x + y - cst(t, 3), x * y + z * z - cst(t, 1),
                                   y * z - x * cst(t, 2) + cst(t, 1)};
    GroebnerBasis a = buchberger(t, gens);
    CHECK(a.gens.size() == 6); // matches an independent computer-algebra run

    std::vector<MultiPoly> shuffled = {gens[2] * Rational(-7, 3), gens[0], gens[1] * Rational(2)};
    GroebnerBasis b = buchberger(t, shuffled);
    CHECK(a == b);
    for (const auto& g : gens) CHECK(b.contains(g));
    CHECK(buchberger(t, a.gens) == a);
}

TEST_CASE("inconsistent systems collapse to {1}") {
    auto t = table({"r"});
    MultiPoly r = var(t, 0);
    // r^2 + r, r^2 - r + 1 (difference forces r = 1/2, then 3/4 = 0)
    GroebnerBasis gb = buchberger(t, {r * r + r, r * r - r + cst(t, 1)});
    CHECK(gb.is_trivial_unit());
}

TEST_CASE("ideal_equal is an equivalence on reduced bases") {
    auto t = table({"x", "y"});
    MultiPoly x = var(t, 0), y = var(t, 1);
    GroebnerBasis a = buchberger(t, {x + y, x - y});
    GroebnerBasis b = buchberger(t, {x, y});
    GroebnerBasis c = buchberger(t, {x * x});
    CHECK(ideal_equal(a, a));
    CHECK(ideal_equal(a, b));
    CHECK(ideal_equal(b, a));
    CHECK_FALSE(ideal_equal(a, c));

    GroebnerBasis other{table({"z"}), {}};
    CHECK_THROWS_AS(ideal_equal(a, other), Error);
}

TEST_CASE("buchberger idempotence on random small systems") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<int> coef(-3, 3);
    auto t = table({"x", "y", "z"});
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<MultiPoly> gens;
        for (int g = 0; g < 3; ++g) {
            MultiPoly p(t);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = i; j < 3; ++j) {
                    int c = coef(rng);
                    if (c) p += var(t, i) * var(t, j) * MultiPoly::constant(t, c);
                }
            int c = coef(rng);
            if (c) p += cst(t, c);
            if (!p.is_zero()) gens.push_back(p);
        }
        GroebnerBasis gb = buchberger(t, gens);
        CHECK(buchberger(t, gb.gens) == gb);
        for (const auto& g : gens) CHECK(gb.contains(g));
    }
}

TEST_CASE("reduced bases match an independent engine on recorded systems") {
    std::ifstream in(std::string(ADEND_DATA_DIR) + "/groebner_cases.json");
    REQUIRE(in.good());
    Json cases = Json::parse(in);
    REQUIRE(cases.size() >= 15);
    for (std::size_t ci = 0; ci < cases.size(); ++ci) {
        const Json& c = cases[ci];
        auto t = std::make_shared<VarTable>();
        for (const auto& v : c["vars"]) t->push_back(v.get<std::string>());
        VarTablePtr tp = t;
        std::vector<MultiPoly> gens;
        for (const auto& g : c["gens"]) gens.push_back(poly_from_json(g, tp));
        GroebnerBasis gb = buchberger(tp, gens);
        CAPTURE(ci);
        REQUIRE(gb.gens.size() == c["expected"].size());
        // both sides sorted by descending leading monomial, so compare in order
        std::vector<MultiPoly> expect;
        for (const auto& e : c["expected"]) expect.push_back(poly_from_json(e, tp));
        std::sort(expect.begin(), expect.end(), [](const MultiPoly& a, const MultiPoly& b) {
            return grevlex_greater(a.leading_monomial(), b.leading_monomial());
        });
        for (std::size_t i = 0; i < expect.size(); ++i) CHECK(gb.gens[i] == expect[i]);
    }
}

TEST_CASE("substitution and evaluation") {
    auto t = table({"x", "y"});
    MultiPoly p = var(t, 0) * var(t, 0) + var(t, 1) * cst(t, 3);
    CHECK(p.eval({Rational(2), Rational(-1)}) == Rational(1));
    MultiPoly q = p.substitute({{0, Rational(2)}});
    CHECK(q.eval({Rational(0), Rational(-1)}) == Rational(1));
}
