#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "braidcert/laurent.hpp"

using namespace braidcert;

TEST_CASE("one variable arithmetic") {
    Laurent1 a = Laurent1::mono(2, 3);
    Laurent1 b = Laurent1::mono(-1, 1);
    CHECK((a * b).coeff(1) == 3);
    CHECK((a + a).coeff(2) == 6);
    CHECK((a - a).is_zero());
    CHECK((-a).coeff(2) == -3);
    Laurent1 one = Laurent1::constant(1);
    CHECK(one.is_one());
    CHECK((a * one) == a);
}

TEST_CASE("one variable printing") {
    Laurent1 p;
    p.add_term(4, -1);
    p.add_term(3, 1);
    p.add_term(1, 1);
    CHECK(p.str("t") == "-t^4 + t^3 + t");
    CHECK(Laurent1().str("t") == "0");
    CHECK(Laurent1::constant(-2).str("t") == "-2");
}

TEST_CASE("cancellation removes terms") {
    Laurent1 p;
    p.add_term(5, 2);
    p.add_term(5, -2);
    CHECK(p.is_zero());
}

TEST_CASE("two variable arithmetic and degrees") {
    Laurent2 p;
    p.add_term(4, 0, -1);
    p.add_term(2, 0, 2);
    p.add_term(2, 2, 1);
    CHECK(p.maxdeg_v() == 4);
    CHECK(p.mindeg_v() == 2);
    CHECK(p.str() == "-v^4 + 2v^2 + v^2 z^2");
    Laurent2 q = p.mul_mono(-2, 0, 1);
    CHECK(q.maxdeg_v() == 2);
    CHECK(q.mindeg_v() == 0);
}

TEST_CASE("jones specialization of the trefoil homfly") {
    // -v^4 + 2v^2 + v^2 z^2 at v = t, z = sqrt(t) - 1/sqrt(t) is -t^4 + t^3 + t
    Laurent2 p;
    p.add_term(4, 0, -1);
    p.add_term(2, 0, 2);
    p.add_term(2, 2, 1);
    Laurent1 j = p.specialize_jones();
    Laurent1 expect(Var::sqrt_t);
    expect.add_term(8, -1); // t^4 => x^8
    expect.add_term(6, 1);
    expect.add_term(2, 1);
    CHECK(j == expect);
}

TEST_CASE("jones specialization with negative z exponents") {
    // delta = (1/v - v)/z specializes to -x - 1/x  (unknot pair value)
    Laurent2 delta;
    delta.add_term(-1, -1, 1);
    delta.add_term(1, -1, -1);
    Laurent1 j = delta.specialize_jones();
    Laurent1 expect(Var::sqrt_t);
    expect.add_term(1, -1);
    expect.add_term(-1, -1);
    CHECK(j == expect);
}
