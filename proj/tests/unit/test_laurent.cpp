#include <doctest.h>

#include "samples.hpp"
#include "bnring/laurent.hpp"

using namespace bnring;
using bnring::testing::random_laurent;
using bnring::testing::random_palindromic;

namespace {

const LaurentPoly u = LaurentPoly::monomial(1);
const LaurentPoly u_inv = LaurentPoly::monomial(-1);

LaurentPoly c_elem() { return u + u_inv; }

} // namespace

TEST_CASE("basic arithmetic and printing")
{
    const LaurentPoly p = pow(u, 3) + 4 * u + 4 * u_inv + pow(u_inv, 3);
    CHECK(p.to_string() == "u^3 + 4*u + 4*u^-1 + u^-3");
    CHECK(LaurentPoly().to_string() == "0");
    CHECK(LaurentPoly(-5).to_string() == "-5");
    CHECK((u - u).is_zero());
    CHECK((u - u).coefficients().empty());
    CHECK(p.max_degree() == 3);
    CHECK(p.min_degree() == -3);
    CHECK(!LaurentPoly().max_degree());
    CHECK(u.flipped() == u_inv);
    CHECK(pow(u + 1, 2) == u * u + 2 * u + 1);
}

TEST_CASE("quantum integers")
{
    CHECK(quantum_integer(0).is_zero());
    CHECK(quantum_integer(1) == LaurentPoly(1));
    CHECK(quantum_integer(2) == u + u_inv);
    CHECK(quantum_integer(4) == pow(u, 3) + u + u_inv + pow(u_inv, 3));
    for (int n = 1; n <= 8; ++n) {
        CHECK(evaluate(quantum_integer(n), 1) == n);
        CHECK(evaluate(quantum_integer(n), -1) == (n % 2 == 1 ? n : -n));
        // (u - u^-1) [n] = u^n - u^-n
        CHECK((u - u_inv) * quantum_integer(n) == pow(u, n) - pow(u_inv, n));
    }
}

TEST_CASE("palindromes and the c-basis")
{
    CHECK(is_palindromic(u + u_inv));
    CHECK(is_palindromic(pow(u, 2) + 3 + pow(u_inv, 2)));
    CHECK(!is_palindromic(u));
    CHECK(to_c_basis(u + u_inv) == std::vector<Integer>{0, 1});
    CHECK(to_c_basis(pow(u, 2) + 2 + pow(u_inv, 2)) == std::vector<Integer>{2, 0, 1});
    CHECK(to_c_basis(5) == std::vector<Integer>{5});
    CHECK_THROWS_AS(to_c_basis(u), InvalidArgument);
    for (int i = 0; i < 50; ++i) {
        const LaurentPoly p = random_palindromic();
        CHECK(from_c_basis(to_c_basis(p)) == p);
    }
}

TEST_CASE("ring laws on random samples")
{
    for (int i = 0; i < 40; ++i) {
        const LaurentPoly a = random_laurent(), b = random_laurent(), c = random_laurent();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero() && !b.is_zero()) {
            CHECK((a * b).max_degree() == *a.max_degree() + *b.max_degree());
            CHECK((a * b).min_degree() == *a.min_degree() + *b.min_degree());
        }
    }
}

TEST_CASE("constant sheaf polynomial")
{
    const CurveContext g2(2, false);
    CHECK(betti_constant_sheaf(g2) == pow(u, 2) + 4 * u + 6 + 4 * u_inv + pow(u_inv, 2));
    for (int g = 2; g <= 6; ++g) {
        const CurveContext ctx(g, false);
        const LaurentPoly hx = betti_constant_sheaf(ctx);
        CHECK(hx == pow(2 + c_elem(), g));
        CHECK(evaluate(hx, 1) == Rational(Integer(1) << (2 * g)));
        CHECK(evaluate(hx, -1) == 0);
    }
}

TEST_CASE("evaluate")
{
    CHECK(evaluate(u_inv, 2) == Rational(1, 2));
    CHECK(evaluate(3 * pow(u, 2) - u_inv, -2) == Rational(25, 2));
    CHECK_THROWS_AS(evaluate(u, 0), InvalidArgument);
}

TEST_CASE("reduce_mod_ideal")
{
    for (int g = 2; g <= 5; ++g) {
        const CurveContext ctx(g, false);
        const LaurentPoly gen = pow(u + 2 + u_inv, g);
        CHECK(reduce_mod_ideal(gen, ctx).is_zero());
        CHECK(reduce_mod_ideal(1, ctx) == Residue(g, {1}));
        CHECK(!reduce_mod_ideal(pow(u + 2 + u_inv, g - 1), ctx).is_zero());
        for (int i = 0; i < 20; ++i) {
            const LaurentPoly a = random_laurent(), b = random_laurent();
            CHECK(reduce_mod_ideal(a * gen, ctx).is_zero());
            CHECK(reduce_mod_ideal(a + b, ctx) == reduce_mod_ideal(a, ctx) + reduce_mod_ideal(b, ctx));
            CHECK(reduce_mod_ideal(a * b, ctx) == reduce_mod_ideal(a, ctx) * reduce_mod_ideal(b, ctx));
        }
    }
}

TEST_CASE("division by the constant sheaf polynomial")
{
    const CurveContext g3(3, false);
    const LaurentPoly hx = betti_constant_sheaf(g3);
    Division d = divide_by_hX(hx, g3);
    CHECK(d.quotient == LaurentPoly(1));
    CHECK(d.remainder.is_zero());

    const LaurentPoly small = u + 5 + u_inv;
    d = divide_by_hX(small, g3);
    CHECK(d.quotient.is_zero());
    CHECK(d.remainder == small);

    d = divide_by_hX(quantum_integer(2) * hx + small, g3);
    CHECK(d.quotient == quantum_integer(2));
    CHECK(d.remainder == small);

    CHECK_THROWS_AS(divide_by_hX(u, g3), InvalidArgument);

    for (int g = 2; g <= 5; ++g) {
        const CurveContext ctx(g, false);
        for (int i = 0; i < 25; ++i) {
            const LaurentPoly p = random_palindromic(2 * g + 3);
            const Division r = divide_by_hX(p, ctx);
            CHECK(r.quotient * betti_constant_sheaf(ctx) + r.remainder == p);
            CHECK(is_palindromic(r.quotient));
            CHECK(is_palindromic(r.remainder));
            if (!r.remainder.is_zero()) CHECK(*r.remainder.max_degree() <= g - 1);
        }
    }
}

TEST_CASE("curve context")
{
    CHECK_THROWS_AS(CurveContext(1, false), InvalidArgument);
    const CurveContext ctx(4, true);
    CHECK(ctx.chi() == 6);
    CHECK(ctx.sl_rank() == 6);
    CHECK(ctx.sp_rank() == 3);
}
