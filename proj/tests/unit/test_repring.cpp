#include <doctest.h>

#include "brute_force.hpp"
#include "bnring/betti.hpp"
#include "bnring/kring.hpp"
#include "bnring/repring.hpp"

using namespace bnring;

namespace {

RepElement rep(Group g, int rank, std::initializer_list<std::pair<Partition, int>> terms)
{
    RepElement r(g, rank);
    for (const auto& [label, m] : terms) r.add(label, m);
    return r;
}

// Exterior power of the standard representation: label (1^i).
Partition column(int i) { return Partition(std::vector<int>(static_cast<std::size_t>(i), 1)); }

} // namespace

TEST_CASE("sl_reduce")
{
    CHECK(sl_reduce(column(4), 4) == Partition{});
    CHECK(sl_reduce({2, 1, 1, 1}, 4) == Partition{1});
    CHECK(sl_reduce({3, 2}, 4) == Partition{3, 2});
    CHECK(!sl_reduce(column(5), 4));
}

TEST_CASE("sl_dim")
{
    CHECK(sl_dim({1}, 4) == 4);
    CHECK(bnring::testing::count_ssyt({2, 1}, 4) == 20);
    CHECK(sl_dim({2, 1}, 4) == 20);
    CHECK(sl_dim({}, 4) == 1);
    for (int n = 2; n <= 5; ++n)
        for (const Partition& p : partitions_up_to(5, -1, n - 1))
            CHECK(sl_dim(p, n) == bnring::testing::count_ssyt(p, n));
}

TEST_CASE("sl_tensor")
{
    CHECK(sl_tensor({1}, {1}, 4) == rep(Group::SL, 4, {{{2}, 1}, {{1, 1}, 1}}));
    CHECK(sl_tensor({1, 1, 1}, {1}, 4) == rep(Group::SL, 4, {{{2, 1, 1}, 1}, {{}, 1}}));
    CHECK(sl_tensor({3, 1}, {}, 4) == rep(Group::SL, 4, {{{3, 1}, 1}}));
    for (const Partition& a : partitions_up_to(3, -1, 3))
        for (const Partition& b : partitions_up_to(3, -1, 3))
            CHECK(sl_tensor(a, b, 4).dimension() == sl_dim(a, 4) * sl_dim(b, 4));
}

TEST_CASE("sp_dim")
{
    CHECK(sp_dim({1}, 2) == 4);
    CHECK(sp_dim({1, 1}, 2) == 5);
    CHECK(sp_dim({2}, 2) == 10);
    CHECK(sp_dim({}, 3) == 1);
    for (int m = 1; m <= 3; ++m)
        for (const Partition& p : partitions_up_to(4, -1, m))
            CHECK(sp_dim(p, m) == SpCharacter::irreducible(p, m).dimension());
}

TEST_CASE("symplectic branching")
{
    CHECK(sp_branch_from_gl({1, 1}, 2) == rep(Group::Sp, 2, {{{1, 1}, 1}, {{}, 1}}));
    CHECK(sp_branch_from_gl({2}, 2) == rep(Group::Sp, 2, {{{2}, 1}}));
    for (int m = 1; m <= 4; ++m) CHECK(sp_branch_from_gl({1}, m) == rep(Group::Sp, m, {{{1}, 1}}));
    // exterior square holds the invariant form, symmetric square does not
    CHECK(sp_branch_from_gl({1, 1}, 3).contains_trivial());
    CHECK(!sp_branch_from_gl({2}, 3).contains_trivial());
    CHECK_THROWS_AS(sp_branch_from_gl({1, 1, 1}, 2), Unsupported);
    for (int m = 1; m <= 3; ++m)
        for (const Partition& p : partitions_up_to(6, -1, m)) {
            const RepElement b = sp_branch_from_gl(p, m);
            CHECK(b.dimension() == sl_dim(p, 2 * m));
            CHECK(b == sp_restrict_oracle(p, m));
        }
}

TEST_CASE("restriction oracle outside the stable range")
{
    CHECK(sp_restrict_oracle({1, 1, 1}, 2) == rep(Group::Sp, 2, {{{1}, 1}}));
    CHECK(sp_restrict_oracle(column(4), 2) == rep(Group::Sp, 2, {{{}, 1}}));
    CHECK(sp_restrict_oracle({2, 1}, 2) == rep(Group::Sp, 2, {{{2, 1}, 1}, {{1}, 1}}));
    CHECK(sp_restrict_oracle({3}, 2) == rep(Group::Sp, 2, {{{3}, 1}}));
    CHECK_THROWS_AS(sp_restrict_oracle({1}, 4), Unsupported);
}

TEST_CASE("Newell-Littlewood numbers")
{
    for (const Partition& nu : partitions_up_to(4))
        for (const Partition& lambda : partitions_up_to(4))
            CHECK(newell_littlewood({}, nu, lambda) == (nu == lambda ? 1 : 0));
    for (const Partition& lambda : partitions_up_to(4)) {
        const bool expected = lambda == Partition{2} || lambda == Partition{1, 1} || lambda.empty();
        CHECK(newell_littlewood({1}, {1}, lambda) == (expected ? 1 : 0));
    }
    CHECK(newell_littlewood({1}, {1, 1}, {1}) == 1);
}

TEST_CASE("sp_tensor_oracle")
{
    const RepElement ww = sp_tensor_oracle({1}, {1}, 2);
    CHECK(ww == rep(Group::Sp, 2, {{{2}, 1}, {{1, 1}, 1}, {{}, 1}}));
    CHECK(ww.dimension() == 16);
    const RepElement w2w = sp_tensor_oracle({1, 1}, {1}, 2);
    CHECK(w2w == rep(Group::Sp, 2, {{{2, 1}, 1}, {{1}, 1}}));
    CHECK(sp_dim({2, 1}, 2) == 16);
    CHECK(w2w.dimension() == 20);
    CHECK(sp_tensor_oracle({2, 1}, {}, 3) == rep(Group::Sp, 3, {{{2, 1}, 1}}));
    CHECK_THROWS_AS(sp_tensor_oracle({1}, {1}, 4), Unsupported);
}

TEST_CASE("stable Newell-Littlewood agrees with the oracle")
{
    for (int m = 1; m <= 3; ++m)
        for (const Partition& mu : partitions_up_to(6, -1, m))
            for (const Partition& nu : partitions_up_to(6 - mu.degree(), -1, m - mu.length())) {
                const RepElement t = sp_tensor_oracle(mu, nu, m);
                CHECK(t.dimension() == sp_dim(mu, m) * sp_dim(nu, m));
                for (const Partition& lambda : partitions_up_to(mu.degree() + nu.degree(), -1, m))
                    CHECK(newell_littlewood(mu, nu, lambda) == t.multiplicity(lambda));
            }
}

TEST_CASE("Weyl symmetry of characters")
{
    for (int m = 1; m <= 3; ++m)
        for (const Partition& p : partitions_up_to(4, -1, m)) {
            CHECK(SpCharacter::irreducible(p, m).is_weyl_symmetric());
            CHECK(SpCharacter::from_gl(p, m).is_weyl_symmetric());
        }
    SpCharacter lopsided(2);
    lopsided.add({1, 0}, 1);
    CHECK(!lopsided.is_weyl_symmetric());
}

TEST_CASE("bn_to_rep")
{
    for (int g = 3; g <= 5; ++g) {
        const CurveContext ctx(g, false);
        for (int i = 0; i <= 2 * g - 3; ++i)
            CHECK(bn_to_rep(Partition{i}, ctx) == rep(Group::SL, 2 * g - 2, {{column(i), 1}}));
    }
    const CurveContext g3h(3, true);
    const RepElement eps3 = bn_to_rep({1, 1, 1}, g3h);
    CHECK(eps3 == rep(Group::Sp, 2, {{{3}, 1}}));
    CHECK(eps3.dimension() == 20);
    CHECK(bn_to_rep({2, 1}, g3h) == rep(Group::Sp, 2, {{{2, 1}, 1}, {{1}, 1}}));
    CHECK_THROWS_AS(bn_to_rep({1}, CurveContext(2, false)), Unsupported);
    CHECK_THROWS_AS(bn_to_rep({5}, CurveContext(5, true)), Unsupported);
}

TEST_CASE("branching agrees with Euler characteristic")
{
    for (int g = 3; g <= 4; ++g) {
        const CurveContext ctx(g, false);
        for (const Partition& a : partitions_up_to(8, ctx.chi() - 1)) {
            const auto reduced = sl_reduce(conjugate(a), ctx.sl_rank());
            const Integer dim = reduced ? sl_dim(*reduced, ctx.sl_rank()) : Integer(0);
            CHECK(dim == euler_characteristic(a, ctx));
        }
    }
}

TEST_CASE("convolution matches tensor product")
{
    const CurveContext g3(3, false);
    ComparisonReport r = compare_convolution_to_tensor({1}, {1}, g3);
    CHECK(r.equal);
    CHECK(r.left == rep(Group::SL, 4, {{{2}, 1}, {{1, 1}, 1}}));
    CHECK(r.left.constituent_count() == 2);

    const CurveContext g3h(3, true);
    r = compare_convolution_to_tensor({1}, {1}, g3h);
    CHECK(r.equal);
    CHECK(r.left == rep(Group::Sp, 2, {{{2}, 1}, {{1, 1}, 1}, {{}, 1}}));

    r = compare_convolution_to_tensor({1}, {1, 1}, g3h);
    CHECK(r.equal);
    CHECK(r.left_dim == r.right_dim);

    CHECK_THROWS_AS(compare_convolution_to_tensor({1}, {1}, CurveContext(2, false)), Unsupported);

    for (bool hyper : {false, true}) {
        const CurveContext ctx(3, hyper);
        for (const Partition& a : partitions_up_to(2))
            for (const Partition& b : partitions_up_to(2)) {
                const ComparisonReport c = compare_convolution_to_tensor(a, b, ctx);
                CHECK(c.equal);
                CHECK(c.left_dim == c.right_dim);
            }
    }
}

TEST_CASE("representation axioms")
{
    for (int g = 3; g <= 4; ++g) {
        const int n = 2 * g - 2;
        const RepElement ww = sl_tensor({1}, {1}, n);
        CHECK(ww.constituent_count() == 2);
        CHECK(!sl_tensor({1, 1, 1}, {}, n).contains_trivial());
        CHECK(sl_reduce(column(n), n) == Partition{});
        RepElement www(Group::SL, n);
        for (const auto& [label, m] : ww.terms()) {
            RepElement piece = sl_tensor(label, {1}, n);
            for (const auto& [l2, m2] : piece.terms()) www.add(l2, m * m2);
        }
        CHECK(www.constituent_count() <= 7);
    }
}
