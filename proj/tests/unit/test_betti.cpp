#include <doctest.h>

#include "brute_force.hpp"
#include "samples.hpp"
#include "bnring/betti.hpp"
#include "bnring/kring.hpp"
#include "bnring/lr.hpp"

using namespace bnring;
using bnring::testing::count_ssyt;
using bnring::testing::random_partition;

namespace {

const LaurentPoly u = LaurentPoly::monomial(1);
const LaurentPoly u_inv = LaurentPoly::monomial(-1);

Integer binomial(int n, int k)
{
    if (k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Partition with_leading(int part, const Partition& rest)
{
    std::vector<int> parts{part};
    parts.insert(parts.end(), rest.parts().begin(), rest.parts().end());
    return Partition(parts);
}

} // namespace

TEST_CASE("schur_eval_two")
{
    for (int i = 0; i <= 6; ++i) CHECK(schur_eval_two(Partition{i}) == quantum_integer(i + 1));
    CHECK(schur_eval_two({1, 1}) == LaurentPoly(1));
    CHECK(schur_eval_two({1, 1, 1}).is_zero());
    CHECK(schur_eval_two({3, 1}) == quantum_integer(3));
}

TEST_CASE("schur_dim against tableau counts")
{
    CHECK(schur_dim({1}, 7) == 7);
    CHECK(schur_dim({1, 1, 1}, 4) == 4);
    CHECK(count_ssyt({2, 2}, 4) == 20);
    CHECK(schur_dim({2, 2}, 4) == 20);
    CHECK(schur_dim({1, 1, 1}, 2) == 0);
    for (int n = 1; n <= 5; ++n)
        for (const Partition& p : partitions_up_to(5)) CHECK(schur_dim(p, n) == count_ssyt(p, n));
}

TEST_CASE("betti_polynomial closed forms")
{
    for (int g = 2; g <= 5; ++g) {
        const CurveContext ctx(g, false);
        CHECK(betti_polynomial({}, ctx) == LaurentPoly(1));
        CHECK(betti_polynomial({1}, ctx) == u + 2 * g + u_inv);
        for (int r = 0; r <= 8; ++r) {
            LaurentPoly expected;
            for (int i = 0; i <= r; ++i) expected += quantum_integer(i + 1) * binomial(2 * g, r - i);
            CHECK(betti_polynomial(Partition{r}, ctx) == expected);
        }
    }
    const CurveContext g2(2, false);
    const LaurentPoly h3 = betti_polynomial({3}, g2);
    CHECK(h3 == pow(u, 3) + 4 * pow(u, 2) + 7 * u + 8 + 7 * u_inv + 4 * pow(u_inv, 2) +
                    pow(u_inv, 3));
    CHECK(h3 == quantum_integer(2) * betti_constant_sheaf(g2));
}

TEST_CASE("Kunneth identity for small degrees")
{
    for (int g = 2; g <= 4; ++g) {
        const CurveContext ctx(g, false);
        for (const Partition& a : partitions_up_to(3))
            for (const Partition& b : partitions_up_to(3)) {
                LaurentPoly rhs;
                for (const auto& [gamma, m] : lr_expand_product(a, b))
                    rhs += m * betti_polynomial(gamma, ctx);
                CHECK(betti_polynomial(a, ctx) * betti_polynomial(b, ctx) == rhs);
            }
    }
}

TEST_CASE("Riemann-Roch and large degree")
{
    for (int g = 2; g <= 5; ++g) {
        const CurveContext ctx(g, false);
        const LaurentPoly hx = betti_constant_sheaf(ctx);
        for (int tau = 1; tau <= g - 1; ++tau)
            CHECK(betti_polynomial(Partition{g - 1 + tau}, ctx) ==
                  betti_polynomial(Partition{g - 1 - tau}, ctx) + quantum_integer(tau) * hx);
        for (int d = 2 * g - 1; d <= 2 * g + 3; ++d)
            CHECK(betti_polynomial(Partition{d}, ctx) == quantum_integer(d - g + 1) * hx);
    }
}

TEST_CASE("top degree equals the first part")
{
    for (int g = 2; g <= 3; ++g) {
        const CurveContext ctx(g, false);
        for (const Partition& gamma : partitions_up_to(7, 2 * g)) {
            const LaurentPoly h = betti_polynomial(gamma, ctx);
            CHECK(h.max_degree() == gamma.first());
            CHECK(is_palindromic(h));
        }
    }
}

TEST_CASE("quotient ring identities")
{
    for (int g = 2; g <= 4; ++g) {
        const CurveContext ctx(g, false);
        const int chi = ctx.chi();
        for (const Partition& a : partitions_up_to(6, chi - 1)) {
            const LaurentPoly diff =
                betti_polynomial(dual_partition(a, ctx), ctx) - betti_polynomial(a, ctx);
            CHECK(reduce_mod_ideal(diff, ctx).is_zero());
            if (a.degree() + chi <= 8) {
                const LaurentPoly strip =
                    betti_polynomial(with_leading(chi, a), ctx) - betti_polynomial(a, ctx);
                CHECK(reduce_mod_ideal(strip, ctx).is_zero());
            }
        }
        for (int i = 0; i < 30; ++i) {
            const Partition rest = random_partition(8 - chi - 1, chi + 1);
            const Partition gamma = with_leading(chi + 1, rest);
            CHECK(reduce_mod_ideal(betti_polynomial(gamma, ctx), ctx).is_zero());
        }
    }
}

TEST_CASE("euler characteristic")
{
    const CurveContext g3(3, false);
    CHECK(euler_characteristic({2}, g3) == 6);
    CHECK(euler_characteristic({5}, g3) == 0);
    for (int g = 3; g <= 4; ++g) {
        const CurveContext ctx(g, false);
        for (int r = 0; r <= 8; ++r)
            CHECK(euler_characteristic(Partition{r}, ctx) == binomial(2 * g - 2, r));
        for (const Partition& a : partitions_up_to(6))
            CHECK(euler_characteristic(a, ctx) == schur_dim(conjugate(a), 2 * g - 2));
    }
}

TEST_CASE("perverse decomposition")
{
    for (int g = 3; g <= 5; ++g) {
        const CurveContext ctx(g, false);
        CHECK(perverse_decomposition(Partition{g}, ctx).P == LaurentPoly(1));
        CHECK(perverse_decomposition(Partition{g, 1}, ctx).P == LaurentPoly(2 * g));
        for (const Partition& a : partitions_up_to(6)) {
            const BettiReport r = perverse_decomposition(a, ctx);
            CHECK(r.h == betti_polynomial(a, ctx));
            CHECK(r.h == r.h_perverse + r.P * betti_constant_sheaf(ctx));
            CHECK(r.euler == euler_characteristic(a, ctx));
            if (a.first() <= g - 1) {
                CHECK(r.P.is_zero());
                CHECK(r.h_perverse == r.h);
            }
            if (!r.P.is_zero()) CHECK(*r.P.max_degree() <= a.first() - g);
            CHECK(evaluate(r.h_perverse, 1) >= 0);
            if (a.first() <= ctx.chi() - 1 && a.degree() >= 1) CHECK(!r.h_perverse.is_zero());
        }
    }
}

TEST_CASE("locus names")
{
    CHECK(parse_locus("theta") == Locus::Theta);
    CHECK(parse_locus("Theta") == Locus::Theta);
    CHECK(parse_locus("w") == Locus::W_d);
    CHECK(parse_locus("W_d") == Locus::W_d);
    CHECK(parse_locus("w-w") == Locus::W_r_minus_W_r);
    CHECK_THROWS_AS(parse_locus("x"), InvalidArgument);
    for (Locus l : {Locus::W_d, Locus::Theta, Locus::W_r_minus_W_r})
        CHECK(parse_locus(to_string(l)) == l);
}

TEST_CASE("intersection cohomology")
{
    for (int g = 3; g <= 5; ++g)
        for (bool hyper : {false, true}) {
            const CurveContext ctx(g, hyper);
            CHECK(ih_betti(Locus::W_d, 1, ctx) == u + 2 * g + u_inv);
            CHECK(ih_betti(Locus::Theta, 0, ctx).coeff(2 - g) == 2 * g);
            if (!hyper) CHECK(ih_betti(Locus::Theta, 0, ctx) == betti_polynomial({g - 1}, ctx));
            CHECK_THROWS_AS(ih_betti(Locus::W_d, 0, ctx), InvalidArgument);
            CHECK_THROWS_AS(ih_betti(Locus::W_d, g, ctx), InvalidArgument);
        }
    const CurveContext g3h(3, true);
    CHECK(ih_betti(Locus::W_d, 2, g3h) ==
          betti_polynomial({2}, g3h) - betti_polynomial({}, g3h));
    CHECK_THROWS_AS(ih_betti(Locus::W_r_minus_W_r, 1, CurveContext(5, true)), Unsupported);
    CHECK_THROWS_AS(ih_betti(Locus::W_r_minus_W_r, 3, CurveContext(5, false)), InvalidArgument);
    const CurveContext g5(5, false);
    CHECK(ih_betti(Locus::W_r_minus_W_r, 1, g5) == perverse_decomposition({7, 1}, g5).h_perverse);
}
