#include "bnring/acceptance.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "bnring/betti.hpp"
#include "bnring/kring.hpp"
#include "bnring/lr.hpp"
#include "bnring/repring.hpp"

namespace bnring {

namespace {

class Tally {
public:
    void expect(bool ok, const std::function<std::string()>& what)
    {
        ++checks_;
        if (!ok && failure_.empty()) failure_ = what();
    }
    [[nodiscard]] bool ok() const { return failure_.empty(); }
    [[nodiscard]] std::uint64_t checks() const { return checks_; }
    [[nodiscard]] const std::string& failure() const { return failure_; }

private:
    std::uint64_t checks_ = 0;
    std::string failure_;
};

std::string ctx_str(const CurveContext& ctx)
{
    return "g=" + std::to_string(ctx.g) + (ctx.hyperelliptic ? " hyperelliptic" : "");
}

Integer binomial(int n, int k)
{
    if (k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Partition prepend(int part, const Partition& rest)
{
    std::vector<int> parts{part};
    parts.insert(parts.end(), rest.parts().begin(), rest.parts().end());
    return Partition(parts);
}

void a1_lr(Tally& t, Budget b)
{
    const int max_deg = b == Budget::Full ? 8 : 6;
    for (int n = 0; n <= max_deg; ++n)
        for (const Partition& gamma : partitions_of(n))
            for (int k = 0; k <= n; ++k)
                for (const Partition& alpha : partitions_of(k))
                    for (const Partition& beta : partitions_of(n - k)) {
                        const Integer c = lr_coefficient(alpha, beta, gamma);
                        const Integer o = lr_oracle(alpha, beta, gamma);
                        t.expect(c == o, [&] {
                            return "m(" + alpha.to_string() + "," + beta.to_string() + ";" +
                                   gamma.to_string() + ") = " + c.get_str() + " but oracle gives " +
                                   o.get_str();
                        });
                        const Integer cc =
                            lr_coefficient(conjugate(alpha), conjugate(beta), conjugate(gamma));
                        t.expect(c == cc, [&] {
                            return "conjugation symmetry fails at " + alpha.to_string() + "," +
                                   beta.to_string() + ";" + gamma.to_string();
                        });
                    }
}

void a2_homomorphism(Tally& t, Budget b)
{
    const int max_deg = b == Budget::Full ? 5 : 3;
    for (int g = 2; g <= 4; ++g) {
        const CurveContext ctx(g, false);
        for (const Partition& alpha : partitions_up_to(max_deg))
            for (const Partition& beta : partitions_up_to(max_deg)) {
                if (beta < alpha) continue;
                LaurentPoly rhs;
                for (const auto& [gamma, m] : lr_expand_product(alpha, beta))
                    rhs += m * betti_polynomial(gamma, ctx);
                const LaurentPoly lhs = betti_polynomial(alpha, ctx) * betti_polynomial(beta, ctx);
                t.expect(lhs == rhs, [&] {
                    return "h(" + alpha.to_string() + ")h(" + beta.to_string() + ") = " +
                           lhs.to_string() + " but the LR sum is " + rhs.to_string() + " at " +
                           ctx_str(ctx);
                });
            }
    }
}

void a3_euler(Tally& t, Budget b)
{
    const int max_deg = b == Budget::Full ? 8 : 6;
    for (int g = 3; g <= 4; ++g) {
        const CurveContext ctx(g, false);
        for (const Partition& alpha : partitions_up_to(max_deg, ctx.chi() - 1)) {
            const Integer e = euler_characteristic(alpha, ctx);
            const Integer d = schur_dim(conjugate(alpha), 2 * g - 2);
            t.expect(e == d, [&] {
                return "euler(" + alpha.to_string() + ") = " + e.get_str() + " but dim = " +
                       d.get_str() + " at " + ctx_str(ctx);
            });
        }
        for (int r = 0; r <= 2 * g; ++r) {
            const Integer e = euler_characteristic(Partition{r}, ctx);
            t.expect(e == binomial(2 * g - 2, r), [&] {
                return "euler((" + std::to_string(r) + ")) = " + e.get_str() + " at " + ctx_str(ctx);
            });
        }
    }
    const CurveContext g3(3, false);
    const long row[] = {1, 4, 6, 4, 1, 0, 0};
    for (int r = 0; r <= 6; ++r) {
        const Integer e = euler_characteristic(Partition{r}, g3);
        t.expect(e == row[r], [&] {
            return "g=3 binomial row: d1((" + std::to_string(r) + ")) = " + e.get_str() +
                   ", expected " + std::to_string(row[r]);
        });
    }
}

void a4_riemann_roch(Tally& t, Budget)
{
    for (int g = 2; g <= 5; ++g) {
        const CurveContext ctx(g, false);
        const LaurentPoly hx = betti_constant_sheaf(ctx);
        for (int tau = 1; tau <= g - 1; ++tau) {
            const LaurentPoly lhs = betti_polynomial(Partition{g - 1 + tau}, ctx);
            const LaurentPoly rhs =
                betti_polynomial(Partition{g - 1 - tau}, ctx) + quantum_integer(tau) * hx;
            t.expect(lhs == rhs, [&] {
                return "Riemann-Roch fails at " + ctx_str(ctx) + " tau=" + std::to_string(tau);
            });
        }
        for (int d = 2 * g - 1; d <= 2 * g + 3; ++d) {
            const LaurentPoly h = betti_polynomial(Partition{d}, ctx);
            t.expect(h == quantum_integer(d - g + 1) * hx, [&] {
                return "large-degree identity fails at " + ctx_str(ctx) + " d=" + std::to_string(d);
            });
        }
    }
}

void a5_perverse(Tally& t, Budget b)
{
    const int max_deg = b == Budget::Full ? 8 : 6;
    for (int g = 3; g <= 5; ++g) {
        const CurveContext ctx(g, false);
        for (const Partition& alpha : partitions_up_to(max_deg)) {
            const BettiReport r = perverse_decomposition(alpha, ctx);
            const std::string where = alpha.to_string() + " at " + ctx_str(ctx);
            if (alpha.first() <= g - 1)
                t.expect(r.P.is_zero(), [&] { return "P nonzero for " + where; });
            if (!r.P.is_zero())
                t.expect(*r.P.max_degree() <= alpha.first() - g,
                         [&] { return "deg P too large for " + where + ": " + r.P.to_string(); });
            t.expect(is_palindromic(r.P) && r.P.has_nonnegative_coefficients(),
                     [&] { return "P not palindromic/nonnegative for " + where; });
            t.expect(r.h == r.h_perverse + r.P * betti_constant_sheaf(ctx),
                     [&] { return "decomposition does not add up for " + where; });
        }
        const LaurentPoly p_g = perverse_decomposition(Partition{g}, ctx).P;
        t.expect(p_g == LaurentPoly(1), [&] { return "P_(g) = " + p_g.to_string() + " at " + ctx_str(ctx); });
        const LaurentPoly p_g1 = perverse_decomposition(Partition{g, 1}, ctx).P;
        t.expect(p_g1 == LaurentPoly(2 * g),
                 [&] { return "P_(g,1) = " + p_g1.to_string() + " at " + ctx_str(ctx); });
    }
}

void a6_duality(Tally& t, Budget b)
{
    const int samples = b == Budget::Full ? 200 : 40;
    std::mt19937 rng(6u);
    for (int g = 2; g <= 4; ++g) {
        const CurveContext ctx(g, false);
        const int chi = ctx.chi();
        for (const Partition& alpha : partitions_up_to(6, chi - 1)) {
            const Partition dual = dual_partition(alpha, ctx);
            const LaurentPoly diff = betti_polynomial(dual, ctx) - betti_polynomial(alpha, ctx);
            t.expect(reduce_mod_ideal(diff, ctx).is_zero(), [&] {
                return "h(dual) - h differs from zero mod ideal for " + alpha.to_string() + " at " +
                       ctx_str(ctx);
            });
            t.expect(dual_partition(dual, ctx) == alpha,
                     [&] { return "dual_partition not an involution at " + alpha.to_string(); });
        }
        std::vector<Partition> pool;
        for (int first = chi + 1; first <= 10; ++first)
            for (const Partition& rest : partitions_up_to(10 - first, first))
                pool.push_back(prepend(first, rest));
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        for (int i = 0; i < samples; ++i) {
            const Partition& gamma = pool[pick(rng)];
            t.expect(reduce_mod_ideal(betti_polynomial(gamma, ctx), ctx).is_zero(), [&] {
                return "h(" + gamma.to_string() + ") not zero mod ideal at " + ctx_str(ctx);
            });
        }
    }
}

void compare_range(Tally& t, const CurveContext& ctx, int max_total)
{
    for (const Partition& alpha : partitions_up_to(max_total))
        for (const Partition& beta : partitions_up_to(max_total - alpha.degree())) {
            const ComparisonReport r = compare_convolution_to_tensor(alpha, beta, ctx);
            t.expect(r.equal, [&] {
                return "convolution " + r.left.to_string() + " vs tensor " + r.right.to_string() +
                       " for " + alpha.to_string() + "*" + beta.to_string() + " at " + ctx_str(ctx);
            });
        }
}

void a7_sl(Tally& t, Budget b)
{
    const int max_total = b == Budget::Full ? 6 : 4;
    for (int g = 3; g <= 4; ++g) compare_range(t, CurveContext(g, false), max_total);
}

void a8_sp(Tally& t, Budget b)
{
    const int max_total = b == Budget::Full ? 6 : 4;
    for (int g = 3; g <= 4; ++g) {
        const CurveContext ctx(g, true);
        compare_range(t, ctx, max_total);

        const RepElement w = bn_to_rep({1}, ctx);
        const RepElement ww = tensor(w, w);
        t.expect(ww.constituent_count() == 3,
                 [&] { return "W*W = " + ww.to_string() + " at " + ctx_str(ctx); });
        const RepElement ext2 = bn_to_rep({2}, ctx);
        t.expect(ext2.contains_trivial(),
                 [&] { return "Lambda^2 W = " + ext2.to_string() + " lacks the trivial rep"; });
        const RepElement ext3 = bn_to_rep({3}, ctx);
        t.expect(!ext3.contains_trivial(),
                 [&] { return "Lambda^3 W = " + ext3.to_string() + " contains the trivial rep"; });
        const RepElement www = tensor(ww, w);
        t.expect(www.constituent_count() <= 7,
                 [&] { return "W^3 has " + www.constituent_count().get_str() + " constituents"; });
    }
    // delta_C^{*3} at g = 3: the constant summand delta_X is invisible, leaving 6.
    const CurveContext g3(3, true);
    RepElement image(Group::Sp, g3.sp_rank());
    const KClass cube_class = power_of_curve_class(3, g3);
    for (const auto& [gamma, coeff] : cube_class.terms()) {
        const RepElement piece = bn_to_rep(gamma, g3);
        for (const auto& [label, m] : piece.terms()) image.add(label, m * coeff.coeff(0));
    }
    t.expect(image.constituent_count() == 6,
             [&] { return "delta_C^3 image has " + image.constituent_count().get_str() + " constituents"; });
    const RepElement w = bn_to_rep({1}, g3);
    const RepElement cube = tensor(tensor(w, w), w);
    t.expect(image == cube,
             [&] { return "delta_C^3 image " + image.to_string() + " differs from " + cube.to_string(); });
}

void a9_ih(Tally& t, Budget)
{
    for (int g = 3; g <= 5; ++g)
        for (bool hyper : {false, true}) {
            const CurveContext ctx(g, hyper);
            const LaurentPoly theta = ih_betti(Locus::Theta, 0, ctx);
            t.expect(theta.coeff(2 - g) == 2 * g,
                     [&] { return "IH(Theta) = " + theta.to_string() + " at " + ctx_str(ctx); });
        }
    for (int g = 3; g <= 6; ++g) {
        const CurveContext ctx(g, true);
        for (int d = 1; d <= g - 1; ++d) {
            const LaurentPoly h = ih_betti(Locus::W_d, d, ctx);
            t.expect(h.has_nonnegative_coefficients() && is_palindromic(h), [&] {
                return "hyperelliptic IH(W_" + std::to_string(d) + ") = " + h.to_string() + " at " +
                       ctx_str(ctx);
            });
        }
    }
    for (int g = 5; g <= 6; ++g) {
        const CurveContext ctx(g, false);
        for (int r = 1; 2 * r < g; ++r) {
            const LaurentPoly h = ih_betti(Locus::W_r_minus_W_r, r, ctx);
            const bool ok = is_palindromic(h) && h.has_nonnegative_coefficients() &&
                            (h.is_zero() || *h.max_degree() <= g - 1);
            t.expect(ok, [&] {
                return "IH(W_" + std::to_string(r) + " - W_" + std::to_string(r) + ") = " +
                       h.to_string() + " at " + ctx_str(ctx);
            });
        }
    }
}

void a10_degree(Tally& t, Budget)
{
    for (int g = 2; g <= 3; ++g) {
        const CurveContext ctx(g, false);
        for (const Partition& gamma : partitions_up_to(8, 2 * g)) {
            const LaurentPoly h = betti_polynomial(gamma, ctx);
            t.expect(h.max_degree() == gamma.first(), [&] {
                return "deg h(" + gamma.to_string() + ") = " + std::to_string(h.max_degree().value_or(-1)) +
                       " at " + ctx_str(ctx);
            });
        }
    }
}

struct Criterion {
    const char* id;
    const char* title;
    double limit;
    void (*run)(Tally&, Budget);
};

const Criterion kCriteria[] = {
    {"A1", "LR coefficients match the oracle and conjugation symmetry", 30, a1_lr},
    {"A2", "Betti polynomial is a ring homomorphism", 60, a2_homomorphism},
    {"A3", "Euler characteristic equals SL dimension", 30, a3_euler},
    {"A4", "Riemann-Roch and large-degree identities", 10, a4_riemann_roch},
    {"A5", "perverse decomposition properties", 30, a5_perverse},
    {"A6", "duality and triviality in the quotient ring", 30, a6_duality},
    {"A7", "convolution equals tensor product, SL side", 60, a7_sl},
    {"A8", "convolution equals tensor product, Sp side, and axiom replay", 60, a8_sp},
    {"A9", "intersection cohomology of Brill-Noether loci", 30, a9_ih},
    {"A10", "top degree of the Betti polynomial", 10, a10_degree},
};

} // namespace

std::vector<std::string> criterion_ids()
{
    std::vector<std::string> ids;
    for (const Criterion& c : kCriteria) ids.emplace_back(c.id);
    return ids;
}

CriterionResult run_criterion(const std::string& id, Budget budget)
{
    for (const Criterion& c : kCriteria) {
        if (id != c.id) continue;
        CriterionResult r{c.id, c.title, false, 0, "", 0.0, c.limit};
        Tally t;
        const auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            c.run(t, budget);
        } catch (const std::exception& e) {
            error = e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        r.checks = t.checks();
        if (!error.empty()) {
            r.detail = "exception: " + error;
        } else if (!t.ok()) {
            r.detail = t.failure();
        } else if (r.seconds >= r.limit_seconds) {
            r.detail = "time limit exceeded";
        } else {
            r.passed = true;
        }
        return r;
    }
    throw InvalidArgument("unknown acceptance criterion: " + id);
}

std::vector<CriterionResult> run_acceptance(Budget budget)
{
    std::vector<CriterionResult> out;
    for (const Criterion& c : kCriteria) out.push_back(run_criterion(c.id, budget));
    return out;
}

std::string format_result(const CriterionResult& r, bool timing)
{
    std::ostringstream os;
    os << (r.passed ? "PASS " : "FAIL ") << r.id << (r.id.size() == 2 ? "  " : " ") << r.title
       << " (" << r.checks << " checks";
    if (timing) {
        os.setf(std::ios::fixed);
        os.precision(2);
        os << ", " << r.seconds << " s";
    }
    os << ")";
    if (!r.passed) os << ": " << r.detail;
    return os.str();
}

} // namespace bnring
