#include <doctest.h>

#include "hopfact/hopf.hpp"
#include "hopfact/verify.hpp"

using namespace hopfact;

namespace {
const HopfDescriptor TV2{HopfKind::TensorAlgebra, 2, 8};
const HopfDescriptor U2{HopfKind::EnvelopingNil2, 2, 8};

AlgebraElement word_el(const HopfDescriptor& d, const std::vector<int>& letters) {
    AlgebraElement a(d);
    BasisWord w;
    w.data = letters;
    a.add_term(w, Rational(1));
    return a;
}
} // namespace

TEST_CASE("tensor algebra multiplication concatenates") {
    auto v1 = generator(TV2, 0), v2 = generator(TV2, 1);
    CHECK(mul(v1, v2) == word_el(TV2, {0, 1}));
    CHECK(mul(unit(TV2), v1) == v1);
    CHECK(mul(v1, unit(TV2)) == v1);
}

TEST_CASE("U(L2) straightening: x2 x1 = x1 x2 - z12") {
    auto x1 = generator(U2, 0), x2 = generator(U2, 1);
    AlgebraElement expect(U2);
    expect.add_term(BasisWord{{1, 1, 0}}, Rational(1));
    expect.add_term(BasisWord{{0, 0, 1}}, Rational(-1));
    CHECK(mul(x2, x1) == expect);
    CHECK(lie_bracket(x1, x2) == z_generator(U2, 0, 1));
    CHECK(lie_bracket(x1, x1).is_zero());
}

TEST_CASE("z generators are central") {
    auto z = z_generator(U2, 0, 1);
    for (int i = 0; i < 2; ++i) {
        auto x = generator(U2, i);
        CHECK(mul(z, x) == mul(x, z));
    }
}

TEST_CASE("coproduct of a primitive") {
    auto v = generator(TV2, 0);
    TensorElement expect(TV2, 2);
    expect.add_term({BasisWord{{0}}, BasisWord{}}, Rational(1));
    expect.add_term({BasisWord{}, BasisWord{{0}}}, Rational(1));
    CHECK(coproduct_iter(v, 1) == expect);
}

TEST_CASE("coproduct of a length-2 word") {
    auto w = word_el(TV2, {0, 1});
    TensorElement d = coproduct_iter(w, 1);
    TensorElement expect(TV2, 2);
    expect.add_term({BasisWord{{0, 1}}, BasisWord{}}, Rational(1));
    expect.add_term({BasisWord{{0}}, BasisWord{{1}}}, Rational(1));
    expect.add_term({BasisWord{{1}}, BasisWord{{0}}}, Rational(1));
    expect.add_term({BasisWord{}, BasisWord{{0, 1}}}, Rational(1));
    CHECK(d == expect);
}

TEST_CASE("iterated coproduct of a primitive") {
    auto v = generator(TV2, 0);
    TensorElement expect(TV2, 3);
    expect.add_term({BasisWord{{0}}, BasisWord{}, BasisWord{}}, Rational(1));
    expect.add_term({BasisWord{}, BasisWord{{0}}, BasisWord{}}, Rational(1));
    expect.add_term({BasisWord{}, BasisWord{}, BasisWord{{0}}}, Rational(1));
    CHECK(coproduct_iter(v, 2) == expect);
}

TEST_CASE("antipode") {
    auto v = generator(TV2, 0);
    CHECK(antipode(v) == scale(v, Rational(-1)));
    CHECK(antipode(word_el(TV2, {0, 1})) == word_el(TV2, {1, 0}));
    // S(x1 x2) in U: reversal straightens to x1 x2 - z12
    auto x1 = generator(U2, 0), x2 = generator(U2, 1);
    CHECK(antipode(mul(x1, x2)) == mul(x2, x1));
    CHECK(antipode(unit(U2)) == unit(U2));
}

TEST_CASE("counit") {
    CHECK(counit(unit(TV2)) == 1);
    CHECK(counit(generator(TV2, 0)) == 0);
    CHECK(counit(add(unit(TV2, Rational(3)), word_el(TV2, {0, 1}))) == 3);
}

TEST_CASE("U coproduct is multiplicative") {
    auto x1 = generator(U2, 0), x2 = generator(U2, 1);
    auto prod = mul(x2, x1);
    CHECK(coproduct_iter(prod, 1) ==
          tensor_mul(coproduct_iter(x2, 1), coproduct_iter(x1, 1)));
}

TEST_CASE("degree bookkeeping and truncation") {
    HopfDescriptor small{HopfKind::TensorAlgebra, 2, 2};
    auto v = generator(small, 0);
    auto v2 = mul(v, v);
    CHECK(homogeneous_degree(v2) == 2);
    CHECK(mul(v2, v).is_zero()); // degree 3 dropped at truncation 2
}

TEST_CASE("word enumeration dimensions") {
    CHECK(words_of_degree(TV2, 3).size() == 8);
    CHECK(words_of_degree(TV2, 0).size() == 1);
    // U(L2) dim 2 degree 4: x^a y^b z^c with a+b+2c = 4
    CHECK(words_of_degree(U2, 4).size() == 5 + 3 + 1);
}

TEST_CASE("descriptor mismatch and bad iteration are rejected") {
    HopfDescriptor other{HopfKind::TensorAlgebra, 3, 8};
    CHECK_THROWS_AS(mul(generator(TV2, 0), generator(other, 0)), std::invalid_argument);
    CHECK_THROWS_AS(lie_bracket(unit(TV2), unit(U2)), std::invalid_argument);
    CHECK_THROWS_AS(coproduct_iter(unit(TV2), -1), std::invalid_argument);
    CHECK_THROWS_AS(generator(TV2, 5), std::invalid_argument);
    CHECK_THROWS_AS(z_generator(TV2, 0, 1), std::invalid_argument);
}

TEST_CASE("JSON round trip") {
    auto a = add(scale(mul(generator(U2, 0), generator(U2, 1)), Rational(3, 7)), unit(U2));
    CHECK(algebra_from_json(to_json(a)) == a);
    TensorElement t = coproduct_iter(word_el(TV2, {0, 1, 0}), 1);
    CHECK(tensor_from_json(to_json(t)) == t);
}

TEST_CASE("hopf axiom suite") {
    VerifyOptions opt;
    opt.dim = 2;
    opt.max_degree = 4; // degree 5 covered by the acceptance run
    auto rep = run_suite("hopf-axioms", opt);
    for (const auto& c : rep.checks) {
        INFO(c.name, " ", c.detail);
        CHECK(c.pass);
    }
}
