#pragma once

#include <string>

#include "bnring/laurent.hpp"
#include "bnring/partition.hpp"

namespace bnring {

/// Betti data of delta_gamma split into its perverse part and the multiple
/// P(t) of the constant sheaf:  h = h_perverse + P * h(delta_X).
struct BettiReport {
    Partition gamma;
    CurveContext ctx;
    LaurentPoly h;
    LaurentPoly P;
    LaurentPoly h_perverse;
    Integer euler;

    friend bool operator==(const BettiReport&, const BettiReport&) = default;
};

/// s_alpha(u, u^-1): [a1 - a2 + 1]_t for at most two rows, 0 otherwise.
LaurentPoly schur_eval_two(const Partition& alpha);

/// s_beta(1,...,1) with n ones, by the hook-content formula.
Integer schur_dim(const Partition& beta, int n);

/// h(delta_gamma, t) = sum m_{alpha beta*}^gamma s_alpha(u,u^-1) s_beta(1^{2g}),
/// alpha over partitions with at most two rows.  Memoized per (gamma, g).
LaurentPoly betti_polynomial(const Partition& gamma, const CurveContext& ctx);

/// Throws ConsistencyError if any invariant of BettiReport fails.
BettiReport perverse_decomposition(const Partition& alpha, const CurveContext& ctx);

/// h(delta_alpha) at u = -1.
Integer euler_characteristic(const Partition& alpha, const CurveContext& ctx);

enum class Locus { W_d, Theta, W_r_minus_W_r };

/// Accepts "w", "wd", "w_d", "theta", "w-w", "wr-wr", "w_r-w_r", "w_r_minus_w_r"
/// (case-insensitive).
Locus parse_locus(const std::string& text);
std::string to_string(Locus locus);

/// Intersection-cohomology Betti polynomial of a Brill-Noether locus.
/// W_d needs 1 <= d <= g-1; Theta ignores `param` (it is W_{g-1});
/// W_r - W_r needs a non-hyperelliptic curve and 1 <= r < g/2.
LaurentPoly ih_betti(Locus locus, int param, const CurveContext& ctx);

} // namespace bnring
