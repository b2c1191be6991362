#include "bnring/repring.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

#include "bnring/betti.hpp"
#include "bnring/lr.hpp"

namespace bnring {

RepElement::RepElement(Group group, int rank) : group_(group), rank_(rank)
{
    if (group == Group::SL)
        require(rank >= 2, "SL(N) needs N >= 2");
    else
        require(rank >= 1, "Sp(2m) needs m >= 1");
}

void RepElement::add(const Partition& label, const Integer& mult)
{
    const int max_len = group_ == Group::SL ? rank_ - 1 : rank_;
    ensure(label.length() <= max_len,
           "label " + label.to_string() + " is not reduced for " + bnring::to_string(group_));
    ensure(mult >= 0, "negative multiplicity in a representation");
    if (mult == 0) return;
    terms_[label] += mult;
}

Integer RepElement::multiplicity(const Partition& label) const
{
    auto it = terms_.find(label);
    return it == terms_.end() ? Integer(0) : it->second;
}

Integer RepElement::constituent_count() const
{
    Integer n = 0;
    for (const auto& [label, mult] : terms_) n += mult;
    return n;
}

Integer RepElement::dimension() const
{
    Integer d = 0;
    for (const auto& [label, mult] : terms_)
        d += mult * (group_ == Group::SL ? sl_dim(label, rank_) : sp_dim(label, rank_));
    return d;
}

RepElement& RepElement::operator+=(const RepElement& o)
{
    require(group_ == o.group_ && rank_ == o.rank_, "representation group mismatch");
    for (const auto& [label, mult] : o.terms_) add(label, mult);
    return *this;
}

std::string RepElement::to_string() const
{
    std::ostringstream os;
    if (group_ == Group::SL)
        os << "SL(" << rank_ << "):";
    else
        os << "Sp(" << 2 * rank_ << "):";
    if (terms_.empty()) os << " 0";
    for (const auto& [label, mult] : terms_) os << ' ' << label.to_string() << ':' << mult.get_str();
    return os.str();
}

std::string to_string(Group group) { return group == Group::SL ? "SL" : "Sp"; }

namespace {

RepElement scaled(const RepElement& r, const Integer& c)
{
    RepElement out(r.group(), r.rank());
    for (const auto& [label, mult] : r.terms()) out.add(label, mult * c);
    return out;
}

} // namespace

// ---- SL(N) ----

std::optional<Partition> sl_reduce(const Partition& lambda, int N)
{
    require(N >= 2, "sl_reduce: N must be at least 2");
    if (lambda.length() > N) return std::nullopt;
    const int strip = lambda[N - 1];
    std::vector<int> parts;
    for (int p : lambda.parts()) parts.push_back(p - strip);
    return Partition(std::move(parts));
}

RepElement sl_tensor(const Partition& lambda, const Partition& mu, int N)
{
    RepElement out(Group::SL, N);
    for (const auto& [gamma, m] : lr_expand_product(lambda, mu)) {
        if (auto red = sl_reduce(gamma, N)) out.add(*red, m);
    }
    return out;
}

Integer sl_dim(const Partition& lambda, int N) { return schur_dim(lambda, N); }

// ---- Sp(2m) ----

Integer sp_dim(const Partition& lambda, int m)
{
    require(m >= 1, "sp_dim: m must be positive");
    require(lambda.length() <= m, "sp_dim: label " + lambda.to_string() + " too long for Sp(" +
                                      std::to_string(2 * m) + ")");
    // l = lambda + rho with rho = (m, m-1, ..., 1).
    std::vector<long> l(static_cast<std::size_t>(m));
    std::vector<long> rho(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        rho[static_cast<std::size_t>(i)] = m - i;
        l[static_cast<std::size_t>(i)] = lambda[i] + m - i;
    }
    Integer num = 1;
    Integer den = 1;
    for (std::size_t i = 0; i < l.size(); ++i) {
        num *= l[i];
        den *= rho[i];
        for (std::size_t j = i + 1; j < l.size(); ++j) {
            num *= (l[i] - l[j]) * (l[i] + l[j]);
            den *= (rho[i] - rho[j]) * (rho[i] + rho[j]);
        }
    }
    ensure(num % den == 0, "sp_dim: non-integral dimension");
    return num / den;
}

RepElement sp_branch_from_gl(const Partition& lambda, int m)
{
    if (lambda.length() > m)
        throw Unsupported("sp_branch_from_gl: " + lambda.to_string() +
                          " is outside the stable range for Sp(" + std::to_string(2 * m) +
                          "); use the character oracle (sp_restrict_oracle, m <= 3)");
    RepElement out(Group::Sp, m);
    // Even column heights: rows come in equal pairs.
    for (int size = 0; size <= lambda.degree(); size += 2) {
        for (const Partition& beta : partitions_of(size, lambda.first(), lambda.length())) {
            if (!beta.fits_in(lambda)) continue;
            bool even_columns = true;
            for (int i = 0; i < beta.length(); i += 2)
                if (beta[i] != beta[i + 1]) even_columns = false;
            if (!even_columns) continue;
            for (const Partition& mu :
                 partitions_of(lambda.degree() - size, lambda.first(), lambda.length())) {
                if (!mu.fits_in(lambda)) continue;
                out.add(mu, lr_coefficient(mu, beta, lambda));
            }
        }
    }
    ensure(out.dimension() == schur_dim(lambda, 2 * m), "sp_branch_from_gl: dimension mismatch");
    return out;
}

Integer newell_littlewood(const Partition& mu, const Partition& nu, const Partition& lambda)
{
    Integer total = 0;
    const int amax = std::min(mu.degree(), nu.degree());
    for (const Partition& a : partitions_up_to(amax)) {
        if (!a.fits_in(mu) || !a.fits_in(nu)) continue;
        const int bdeg = mu.degree() - a.degree();
        const int cdeg = nu.degree() - a.degree();
        if (bdeg + cdeg != lambda.degree()) continue;
        for (const Partition& b : partitions_of(bdeg)) {
            if (!b.fits_in(mu) || !b.fits_in(lambda)) continue;
            const Integer c1 = lr_coefficient(a, b, mu);
            if (c1 == 0) continue;
            for (const Partition& c : partitions_of(cdeg)) {
                if (!c.fits_in(nu) || !c.fits_in(lambda)) continue;
                const Integer c2 = lr_coefficient(a, c, nu);
                if (c2 == 0) continue;
                total += c1 * c2 * lr_coefficient(b, c, lambda);
            }
        }
    }
    return total;
}

// ---- characters ----

void SpCharacter::add(const Weight& w, const Integer& c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SpCharacter operator*(const SpCharacter& a, const SpCharacter& b)
{
    require(a.m_ == b.m_, "character rank mismatch");
    SpCharacter out(a.m_);
    SpCharacter::Weight w(static_cast<std::size_t>(a.m_));
    for (const auto& [wa, ca] : a.terms_) {
        for (const auto& [wb, cb] : b.terms_) {
            for (std::size_t i = 0; i < w.size(); ++i) w[i] = wa[i] + wb[i];
            out.add(w, ca * cb);
        }
    }
    return out;
}

SpCharacter& SpCharacter::operator+=(const SpCharacter& o)
{
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

SpCharacter& SpCharacter::operator-=(const SpCharacter& o)
{
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

SpCharacter operator*(const Integer& c, SpCharacter a)
{
    if (c == 0) a.terms_.clear();
    for (auto& [w, v] : a.terms_) v *= c;
    return a;
}

Integer SpCharacter::dimension() const
{
    Integer d = 0;
    for (const auto& [w, c] : terms_) d += c;
    return d;
}

bool SpCharacter::is_weyl_symmetric() const
{
    for (const auto& [w, c] : terms_) {
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            Weight s = w;
            std::swap(s[i], s[i + 1]);
            auto it = terms_.find(s);
            if (it == terms_.end() || it->second != c) return false;
        }
        Weight s = w;
        s.back() = -s.back();
        auto it = terms_.find(s);
        if (it == terms_.end() || it->second != c) return false;
    }
    return true;
}

namespace {

// det[x_j^{l_i} - x_j^{-l_i}] expanded over permutations and sign choices.
SpCharacter alternant(const std::vector<int>& l)
{
    const int m = static_cast<int>(l.size());
    SpCharacter out(m);
    std::vector<int> perm(l.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inversions;
        const int sign = inversions % 2 ? -1 : 1;
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            SpCharacter::Weight w(l.size());
            int s = sign;
            for (int j = 0; j < m; ++j) {
                const int e = l[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
                if (mask & (1u << j)) {
                    w[static_cast<std::size_t>(j)] = -e;
                    s = -s;
                } else {
                    w[static_cast<std::size_t>(j)] = e;
                }
            }
            out.add(w, s);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Exact division in the Laurent ring Z[x_1^{+-1}, ..., x_m^{+-1}] using the
// lexicographic order on exponents, which is compatible with multiplication.
SpCharacter exact_divide(SpCharacter num, const SpCharacter& den)
{
    ensure(!den.is_zero(), "exact_divide: zero divisor");
    SpCharacter quot(num.rank());
    const auto& [dw, dc] = *den.terms().rbegin();
    std::size_t guard = 0;
    while (!num.is_zero()) {
        ensure(++guard < 10'000'000, "exact_divide: no termination");
        const auto [nw, nc] = *num.terms().rbegin();
        ensure(nc % dc == 0, "exact_divide: inexact coefficient");
        SpCharacter::Weight qw(nw.size());
        for (std::size_t i = 0; i < qw.size(); ++i) qw[i] = nw[i] - dw[i];
        const Integer qc = nc / dc;
        SpCharacter term(num.rank());
        term.add(qw, qc);
        quot.add(qw, qc);
        num -= term * den;
    }
    return quot;
}

std::mutex char_mutex;
std::map<std::pair<Partition, int>, SpCharacter> irr_cache;

} // namespace

SpCharacter SpCharacter::irreducible(const Partition& lambda, int m)
{
    require(m >= 1, "SpCharacter: m must be positive");
    require(lambda.length() <= m, "SpCharacter: label " + lambda.to_string() + " too long");
    auto key = std::make_pair(lambda, m);
    {
        std::lock_guard lock(char_mutex);
        if (auto it = irr_cache.find(key); it != irr_cache.end()) return it->second;
    }
    std::vector<int> rho(static_cast<std::size_t>(m));
    std::vector<int> shifted(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        rho[static_cast<std::size_t>(i)] = m - i;
        shifted[static_cast<std::size_t>(i)] = lambda[i] + m - i;
    }
    SpCharacter chi = exact_divide(alternant(shifted), alternant(rho));
    ensure(chi.dimension() == sp_dim(lambda, m), "SpCharacter: dimension mismatch");
    std::lock_guard lock(char_mutex);
    irr_cache.emplace(std::move(key), chi);
    return chi;
}

SpCharacter SpCharacter::from_gl(const Partition& lambda, int m)
{
    require(m >= 1, "SpCharacter: m must be positive");
    SpCharacter out(m);
    const int n = 2 * m;
    if (lambda.length() > n) return out;
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int i, int remaining) -> void {
        if (i == n - 1) {
            c[static_cast<std::size_t>(i)] = remaining;
            const Partition content = Partition::from_unsorted(c);
            const Integer k = kostka(lambda, content.parts());
            if (k == 0) return;
            Weight w(static_cast<std::size_t>(m));
            for (int j = 0; j < m; ++j)
                w[static_cast<std::size_t>(j)] =
                    c[static_cast<std::size_t>(j)] - c[static_cast<std::size_t>(m + j)];
            out.add(w, k);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            c[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, remaining - v);
        }
    };
    rec(rec, 0, lambda.degree());
    return out;
}

RepElement SpCharacter::decompose() const
{
    RepElement out(Group::Sp, m_);
    SpCharacter rest = *this;
    std::size_t guard = 0;
    while (!rest.is_zero()) {
        ensure(++guard < 100'000, "decompose: no termination");
        const auto [w, c] = *rest.terms().rbegin();
        bool dominant = w.back() >= 0;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) dominant = dominant && w[i] >= w[i + 1];
        ensure(dominant, "decompose: highest surviving weight is not dominant");
        ensure(c > 0, "decompose: negative multiplicity, not a genuine character");
        const Partition lambda(w);
        out.add(lambda, c);
        rest -= c * irreducible(lambda, m_);
    }
    return out;
}

RepElement sp_tensor_oracle(const Partition& lambda, const Partition& mu, int m)
{
    if (m < 1 || m > kSpOracleMaxRank)
        throw Unsupported("sp_tensor_oracle: oracle out of range (m = " + std::to_string(m) +
                          ", supported 1.." + std::to_string(kSpOracleMaxRank) + ")");
    RepElement out = (SpCharacter::irreducible(lambda, m) * SpCharacter::irreducible(mu, m)).decompose();
    ensure(out.dimension() == sp_dim(lambda, m) * sp_dim(mu, m),
           "sp_tensor_oracle: dimension mismatch");
    return out;
}

RepElement sp_restrict_oracle(const Partition& lambda, int m)
{
    if (m < 1 || m > kSpOracleMaxRank)
        throw Unsupported("sp_restrict_oracle: oracle out of range (m = " + std::to_string(m) +
                          ", supported 1.." + std::to_string(kSpOracleMaxRank) + ")");
    RepElement out = SpCharacter::from_gl(lambda, m).decompose();
    ensure(out.dimension() == schur_dim(lambda, 2 * m), "sp_restrict_oracle: dimension mismatch");
    return out;
}

RepElement bn_to_rep(const Partition& alpha, const CurveContext& ctx)
{
    if (ctx.g < 3)
        throw Unsupported("representation-ring comparison needs genus >= 3, got " +
                          std::to_string(ctx.g));
    require(alpha.first() <= ctx.chi() - 1,
            "bn_to_rep: " + alpha.to_string() + " is not in normal form");
    const Partition conj = conjugate(alpha);
    if (!ctx.hyperelliptic) {
        RepElement out(Group::SL, ctx.sl_rank());
        out.add(*sl_reduce(conj, ctx.sl_rank()), 1);
        return out;
    }
    const int m = ctx.sp_rank();
    if (conj.length() <= m) return sp_branch_from_gl(conj, m);
    if (m <= kSpOracleMaxRank) return sp_restrict_oracle(conj, m);
    throw Unsupported("bn_to_rep: " + alpha.to_string() +
                      " is outside the stable branching range and the Sp oracle range");
}

RepElement tensor(const RepElement& a, const RepElement& b)
{
    require(a.group() == b.group() && a.rank() == b.rank(), "tensor: group mismatch");
    RepElement out(a.group(), a.rank());
    const int rank = a.rank();
    for (const auto& [la, ma] : a.terms()) {
        for (const auto& [lb, mb] : b.terms()) {
            const Integer mult = ma * mb;
            if (a.group() == Group::SL) {
                out += scaled(sl_tensor(la, lb, rank), mult);
            } else if (rank <= kSpOracleMaxRank) {
                out += scaled(sp_tensor_oracle(la, lb, rank), mult);
            } else if (la.length() + lb.length() <= rank) {
                for (const Partition& lambda : partitions_up_to(la.degree() + lb.degree(), -1, rank))
                    out.add(lambda, mult * newell_littlewood(la, lb, lambda));
            } else {
                throw Unsupported("tensor: Sp(" + std::to_string(2 * rank) +
                                  ") product outside stable range and oracle range");
            }
        }
    }
    ensure(out.dimension() == a.dimension() * b.dimension(), "tensor: dimension mismatch");
    return out;
}

ComparisonReport compare_convolution_to_tensor(const Partition& alpha, const Partition& beta,
                                               const CurveContext& ctx)
{
    if (ctx.g < 3)
        throw Unsupported("representation-ring comparison needs genus >= 3, got " +
                          std::to_string(ctx.g));
    if (ctx.hyperelliptic && ctx.g > kSpOracleMaxRank + 1)
        throw Unsupported("hyperelliptic comparison is supported for g in {3, 4} only");

    const Group group = ctx.hyperelliptic ? Group::Sp : Group::SL;
    const int rank = ctx.hyperelliptic ? ctx.sp_rank() : ctx.sl_rank();
    ComparisonReport rep{alpha, beta, ctx, RepElement(group, rank), RepElement(group, rank),
                         false, 0, 0};

    const KClass product = convolve(class_of(alpha, ctx), class_of(beta, ctx));
    for (const auto& [gamma, coeff] : product.terms()) {
        ensure(coeff.is_constant(), "compare: convolution coefficient is not an integer");
        rep.left += scaled(bn_to_rep(gamma, ctx), coeff.coeff(0));
    }
    // Inputs outside normal form are reduced first; a vanishing class maps to zero.
    auto image = [&](const Partition& p) {
        const auto nf = normal_form(p, ctx);
        return nf ? bn_to_rep(*nf, ctx) : RepElement(group, rank);
    };
    rep.right = tensor(image(alpha), image(beta));
    rep.left_dim = rep.left.dimension();
    rep.right_dim = rep.right.dimension();
    rep.equal = rep.left == rep.right;
    return rep;
}

} // namespace bnring
