#pragma once

#include <map>
#include <optional>
#include <string>

#include "bnring/laurent.hpp"
#include "bnring/partition.hpp"

namespace bnring {

/// Element of the convolution Grothendieck ring modulo the constant class:
/// a finite sum of normal-form partitions (first part <= chi-1) with
/// Laurent-polynomial coefficients.
class KClass {
public:
    explicit KClass(CurveContext ctx) : ctx_(ctx) {}

    static KClass zero(const CurveContext& ctx) { return KClass(ctx); }
    static KClass unit(const CurveContext& ctx);

    [[nodiscard]] const CurveContext& context() const noexcept { return ctx_; }
    [[nodiscard]] const std::map<Partition, LaurentPoly>& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] LaurentPoly coeff(const Partition& key) const;

    /// Adds coeff * [key]; `key` must already be in normal form.
    void add(const Partition& key, const LaurentPoly& coeff);

    KClass& operator+=(const KClass& o);
    friend KClass operator+(KClass a, const KClass& b) { return a += b; }
    friend KClass operator*(const LaurentPoly& c, const KClass& a);
    friend bool operator==(const KClass&, const KClass&) = default;

    /// "(2):1 (1,1):1"; non-constant coefficients are bracketed.
    [[nodiscard]] std::string to_string() const;

private:
    CurveContext ctx_;
    std::map<Partition, LaurentPoly> terms_;
};

/// nullopt if some part exceeds chi (the class vanishes); otherwise gamma
/// with every part equal to chi removed.
std::optional<Partition> normal_form(const Partition& gamma, const CurveContext& ctx);

/// Singleton class of normal_form(gamma), or zero.
KClass class_of(const Partition& gamma, const CurveContext& ctx);

/// Bilinear extension of [a][b] = sum_gamma m_{ab}^gamma [normal_form(gamma)].
KClass convolve(const KClass& a, const KClass& b);

/// (chi - a_r, ..., chi - a_1), normal-formed.  Requires a normal-form input.
Partition dual_partition(const Partition& alpha, const CurveContext& ctx);

/// dual_partition on keys, u <-> u^-1 on coefficients.
KClass dual_class(const KClass& a);

/// sum over deg(alpha) = r of syt_count(alpha) * class_of(alpha).
KClass power_of_curve_class(int r, const CurveContext& ctx);

} // namespace bnring
