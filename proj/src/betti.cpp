#include "bnring/betti.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>

#include "bnring/lr.hpp"

namespace bnring {

LaurentPoly schur_eval_two(const Partition& alpha)
{
    if (alpha.length() > 2) return {};
    return quantum_integer(alpha[0] - alpha[1] + 1);
}

Integer schur_dim(const Partition& beta, int n)
{
    require(n >= 1, "schur_dim: n must be positive");
    if (beta.length() > n) return 0;
    const Partition conj = conjugate(beta);
    Integer num = 1;
    Integer den = 1;
    for (int i = 0; i < beta.length(); ++i) {
        for (int j = 0; j < beta[i]; ++j) {
            num *= n + j - i;
            den *= (beta[i] - j - 1) + (conj[j] - i - 1) + 1;
        }
    }
    return num / den;
}

namespace {

std::mutex betti_mutex;
std::map<std::pair<Partition, int>, LaurentPoly> betti_cache;

} // namespace

LaurentPoly betti_polynomial(const Partition& gamma, const CurveContext& ctx)
{
    auto key = std::make_pair(gamma, ctx.g);
    {
        std::lock_guard lock(betti_mutex);
        if (auto it = betti_cache.find(key); it != betti_cache.end()) return it->second;
    }
    const int r = gamma.degree();
    const int h_minus_dim = 2 * ctx.g;
    LaurentPoly h;
    for (int a = 0; a <= r; ++a) {
        for (const Partition& alpha : partitions_of(a, gamma.first(), 2)) {
            if (!alpha.fits_in(gamma)) continue;
            const LaurentPoly plus = schur_eval_two(alpha);
            // beta_conj plays the role of beta* in m_{alpha beta*}^gamma.
            for (const Partition& beta_conj : partitions_of(r - a, gamma.first(), gamma.length())) {
                if (!beta_conj.fits_in(gamma)) continue;
                const Integer dim = schur_dim(conjugate(beta_conj), h_minus_dim);
                if (dim == 0) continue;
                const Integer m = lr_coefficient(alpha, beta_conj, gamma);
                if (m == 0) continue;
                h += plus * Integer(m * dim);
            }
        }
    }
    std::lock_guard lock(betti_mutex);
    betti_cache.emplace(std::move(key), h);
    return h;
}

BettiReport perverse_decomposition(const Partition& alpha, const CurveContext& ctx)
{
    BettiReport rep{alpha, ctx, betti_polynomial(alpha, ctx), {}, {}, 0};
    const std::string where = "perverse_decomposition" + alpha.to_string() + " g=" +
                              std::to_string(ctx.g) + ": ";
    ensure(is_palindromic(rep.h), where + "h is not palindromic");
    ensure(rep.h.has_nonnegative_coefficients(), where + "h has a negative coefficient");

    Division d = divide_by_hX(rep.h, ctx);
    rep.P = std::move(d.quotient);
    rep.h_perverse = std::move(d.remainder);
    rep.euler = evaluate(rep.h, -1).get_num();

    ensure(rep.h == rep.h_perverse + rep.P * betti_constant_sheaf(ctx), where + "h != hp + P*hX");
    ensure(is_palindromic(rep.P) && is_palindromic(rep.h_perverse), where + "not palindromic");
    ensure(rep.P.has_nonnegative_coefficients(), where + "P has a negative coefficient");
    ensure(rep.h_perverse.has_nonnegative_coefficients(),
           where + "h_perverse has a negative coefficient");
    if (!rep.h_perverse.is_zero())
        ensure(*rep.h_perverse.max_degree() <= ctx.g - 1 &&
                   *rep.h_perverse.min_degree() >= -(ctx.g - 1),
               where + "h_perverse degree exceeds g-1");
    if (!rep.P.is_zero())
        ensure(*rep.P.max_degree() <= alpha.first() - ctx.g, where + "deg P > alpha_1 - g");
    return rep;
}

Integer euler_characteristic(const Partition& alpha, const CurveContext& ctx)
{
    return evaluate(betti_polynomial(alpha, ctx), -1).get_num();
}

Locus parse_locus(const std::string& text)
{
    std::string t;
    for (char ch : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (t == "w" || t == "wd" || t == "w_d") return Locus::W_d;
    if (t == "theta") return Locus::Theta;
    if (t == "w-w" || t == "wr-wr" || t == "w_r-w_r" || t == "w_r_minus_w_r") return Locus::W_r_minus_W_r;
    throw InvalidArgument("unknown locus '" + text + "' (expected w, theta or w-w)");
}

std::string to_string(Locus locus)
{
    switch (locus) {
    case Locus::W_d: return "W_d";
    case Locus::Theta: return "Theta";
    case Locus::W_r_minus_W_r: return "W_r-W_r";
    }
    return "?";
}

LaurentPoly ih_betti(Locus locus, int param, const CurveContext& ctx)
{
    const int g = ctx.g;
    if (locus == Locus::Theta) {
        locus = Locus::W_d;
        param = g - 1;
    }
    if (locus == Locus::W_d) {
        require(param >= 1 && param <= g - 1,
                "ih_betti: W_d needs 1 <= d <= g-1, got d = " + std::to_string(param));
        LaurentPoly h = betti_polynomial(Partition{param}, ctx);
        if (ctx.hyperelliptic && param >= 2)
            h -= betti_polynomial(param == 2 ? Partition{} : Partition{param - 2}, ctx);
        return h;
    }
    if (ctx.hyperelliptic)
        throw Unsupported("ih_betti: W_r - W_r is only described for non-hyperelliptic curves");
    require(param >= 1 && 2 * param < g,
            "ih_betti: W_r - W_r needs 1 <= r < g/2, got r = " + std::to_string(param));
    return perverse_decomposition(Partition{ctx.chi() - param, param}, ctx).h_perverse;
}

} // namespace bnring
