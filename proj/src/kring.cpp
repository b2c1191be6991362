#include "bnring/kring.hpp"

#include <sstream>

#include "bnring/lr.hpp"

namespace bnring {

KClass KClass::unit(const CurveContext& ctx)
{
    KClass k(ctx);
    k.add(Partition{}, 1);
    return k;
}

LaurentPoly KClass::coeff(const Partition& key) const
{
    auto it = terms_.find(key);
    return it == terms_.end() ? LaurentPoly{} : it->second;
}

void KClass::add(const Partition& key, const LaurentPoly& coeff)
{
    require(key.first() <= ctx_.chi() - 1, "KClass key not in normal form: " + key.to_string());
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

KClass& KClass::operator+=(const KClass& o)
{
    require(ctx_ == o.ctx_, "KClass context mismatch");
    for (const auto& [key, c] : o.terms_) add(key, c);
    return *this;
}

KClass operator*(const LaurentPoly& c, const KClass& a)
{
    KClass out(a.ctx_);
    for (const auto& [key, v] : a.terms_) out.add(key, c * v);
    return out;
}

std::string KClass::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) os << ' ';
        first = false;
        os << key.to_string() << ':';
        if (c.is_constant())
            os << c.to_string();
        else
            os << '[' << c.to_string() << ']';
    }
    return os.str();
}

std::optional<Partition> normal_form(const Partition& gamma, const CurveContext& ctx)
{
    const int chi = ctx.chi();
    if (gamma.first() > chi) return std::nullopt;
    std::vector<int> kept;
    for (int p : gamma.parts())
        if (p != chi) kept.push_back(p);
    return Partition(std::move(kept));
}

KClass class_of(const Partition& gamma, const CurveContext& ctx)
{
    KClass k(ctx);
    if (auto nf = normal_form(gamma, ctx)) k.add(*nf, 1);
    return k;
}

KClass convolve(const KClass& a, const KClass& b)
{
    require(a.context() == b.context(), "convolve: curve context mismatch");
    KClass out(a.context());
    for (const auto& [alpha, ca] : a.terms()) {
        for (const auto& [beta, cb] : b.terms()) {
            const LaurentPoly coeff = ca * cb;
            for (const auto& [gamma, m] : lr_expand_product(alpha, beta)) {
                if (auto nf = normal_form(gamma, a.context())) out.add(*nf, coeff * m);
            }
        }
    }
    return out;
}

Partition dual_partition(const Partition& alpha, const CurveContext& ctx)
{
    const int chi = ctx.chi();
    require(alpha.first() <= chi - 1,
            "dual_partition: " + alpha.to_string() + " is not in normal form for g = " +
                std::to_string(ctx.g));
    std::vector<int> parts;
    for (int i = alpha.length() - 1; i >= 0; --i) parts.push_back(chi - alpha[i]);
    return *normal_form(Partition(std::move(parts)), ctx);
}

KClass dual_class(const KClass& a)
{
    KClass out(a.context());
    for (const auto& [key, c] : a.terms()) out.add(dual_partition(key, a.context()), c.flipped());
    return out;
}

KClass power_of_curve_class(int r, const CurveContext& ctx)
{
    require(r >= 0, "power_of_curve_class: r must be nonnegative");
    KClass out(ctx);
    for (const Partition& alpha : partitions_of(r)) {
        if (auto nf = normal_form(alpha, ctx)) out.add(*nf, LaurentPoly(syt_count(alpha)));
    }
    return out;
}

} // namespace bnring
