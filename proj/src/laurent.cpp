#include "bnring/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace bnring {

LaurentPoly::LaurentPoly(long c)
{
    if (c != 0) coeffs_.emplace(0, Integer(c));
}

LaurentPoly::LaurentPoly(const Integer& c)
{
    if (c != 0) coeffs_.emplace(0, c);
}

LaurentPoly::LaurentPoly(std::map<int, Integer> coeffs) : coeffs_(std::move(coeffs))
{
    std::erase_if(coeffs_, [](const auto& kv) { return kv.second == 0; });
}

LaurentPoly LaurentPoly::monomial(int k, const Integer& c)
{
    LaurentPoly p;
    p.add_term(k, c);
    return p;
}

Integer LaurentPoly::coeff(int k) const
{
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? Integer(0) : it->second;
}

std::optional<int> LaurentPoly::max_degree() const
{
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.rbegin()->first;
}

std::optional<int> LaurentPoly::min_degree() const
{
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.begin()->first;
}

bool LaurentPoly::has_nonnegative_coefficients() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return kv.second > 0; });
}

LaurentPoly LaurentPoly::flipped() const
{
    LaurentPoly out;
    for (const auto& [k, c] : coeffs_) out.coeffs_.emplace(-k, c);
    return out;
}

void LaurentPoly::add_term(int k, const Integer& c)
{
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    for (const auto& [k, c] : o.coeffs_) add_term(k, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
    for (const auto& [k, c] : o.coeffs_) add_term(k, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    LaurentPoly out;
    for (const auto& [ka, ca] : a.coeffs_)
        for (const auto& [kb, cb] : b.coeffs_) out.add_term(ka + kb, ca * cb);
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o)
{
    *this = *this * o;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Integer& c)
{
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [k, v] : coeffs_) v *= c;
    return *this;
}

LaurentPoly operator-(LaurentPoly a)
{
    for (auto& [k, v] : a.coeffs_) v = -v;
    return a;
}

std::string LaurentPoly::to_string() const
{
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const int k = it->first;
        Integer c = it->second;
        if (first) {
            if (c < 0) {
                os << '-';
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (k == 0) {
            os << c.get_str();
            continue;
        }
        if (c != 1) os << c.get_str() << '*';
        os << 'u';
        if (k != 1) os << '^' << k;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly pow(const LaurentPoly& p, int n)
{
    require(n >= 0, "negative exponent");
    LaurentPoly result = 1;
    LaurentPoly base = p;
    while (n > 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return result;
}

LaurentPoly quantum_integer(int n)
{
    require(n >= 0, "quantum_integer: n must be nonnegative");
    LaurentPoly p;
    for (int k = 1 - n; k <= n - 1; k += 2) p += LaurentPoly::monomial(k);
    return p;
}

bool is_palindromic(const LaurentPoly& p)
{
    for (const auto& [k, c] : p.coefficients())
        if (p.coeff(-k) != c) return false;
    return true;
}

std::vector<Integer> to_c_basis(const LaurentPoly& p)
{
    require(is_palindromic(p), "to_c_basis: polynomial is not palindromic: " + p.to_string());
    if (p.is_zero()) return {};
    const int d = *p.max_degree();
    std::vector<Integer> a(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) a[static_cast<std::size_t>(k)] = p.coeff(k);
    return a;
}

LaurentPoly from_c_basis(const std::vector<Integer>& a)
{
    LaurentPoly p;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const int e = static_cast<int>(k);
        p += LaurentPoly::monomial(e, a[k]);
        if (e != 0) p += LaurentPoly::monomial(-e, a[k]);
    }
    return p;
}

namespace {

const LaurentPoly& c_variable()
{
    static const LaurentPoly c = LaurentPoly::monomial(1) + LaurentPoly::monomial(-1);
    return c;
}

// Coefficients of p in powers of c = u + u^-1 (p palindromic).
std::vector<Integer> to_c_powers(LaurentPoly p)
{
    if (p.is_zero()) return {};
    const int d = *p.max_degree();
    std::vector<Integer> out(static_cast<std::size_t>(d) + 1);
    for (int k = d; k >= 0; --k) {
        const Integer lead = p.coeff(k);
        out[static_cast<std::size_t>(k)] = lead;
        if (lead != 0) p -= pow(c_variable(), k) * lead;
    }
    ensure(p.is_zero(), "to_c_powers: residue after conversion");
    return out;
}

LaurentPoly from_c_powers(const std::vector<Integer>& a)
{
    LaurentPoly p;
    for (auto it = a.rbegin(); it != a.rend(); ++it) p = p * c_variable() + LaurentPoly(*it);
    return p;
}

using Series = std::vector<Integer>;

Series series_mul(const Series& a, const Series& b, std::size_t n)
{
    Series out(n, 0);
    for (std::size_t i = 0; i < a.size() && i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j < n; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

} // namespace

Residue::Residue(int g, std::vector<Integer> eps) : g_(g), eps_(std::move(eps))
{
    if (eps_.size() > static_cast<std::size_t>(2 * g_)) eps_.resize(static_cast<std::size_t>(2 * g_));
    while (!eps_.empty() && eps_.back() == 0) eps_.pop_back();
}

Residue operator+(const Residue& a, const Residue& b)
{
    require(a.g_ == b.g_, "residue genus mismatch");
    std::vector<Integer> out(std::max(a.eps_.size(), b.eps_.size()), 0);
    for (std::size_t i = 0; i < a.eps_.size(); ++i) out[i] += a.eps_[i];
    for (std::size_t i = 0; i < b.eps_.size(); ++i) out[i] += b.eps_[i];
    return Residue(a.g_, std::move(out));
}

Residue operator*(const Residue& a, const Residue& b)
{
    require(a.g_ == b.g_, "residue genus mismatch");
    return Residue(a.g_, series_mul(a.eps_, b.eps_, static_cast<std::size_t>(2 * a.g_)));
}

Residue reduce_mod_ideal(const LaurentPoly& p, const CurveContext& ctx)
{
    const std::size_t n = static_cast<std::size_t>(2 * ctx.g);
    // u = eps - 1 and u^-1 = -(1 + eps + eps^2 + ...) modulo eps^{2g}.
    Series u(n, 0);
    u[0] = -1;
    if (n > 1) u[1] = 1;
    Series u_inv(n, -1);

    Series total(n, 0);
    for (const auto& [k, c] : p.coefficients()) {
        Series term(n, 0);
        term[0] = 1;
        const Series& step = k >= 0 ? u : u_inv;
        for (int i = 0; i < std::abs(k); ++i) term = series_mul(term, step, n);
        for (std::size_t i = 0; i < n; ++i) total[i] += c * term[i];
    }
    return Residue(ctx.g, std::move(total));
}

LaurentPoly betti_constant_sheaf(const CurveContext& ctx)
{
    LaurentPoly one_plus_u = LaurentPoly(1) + LaurentPoly::monomial(1);
    return LaurentPoly::monomial(-ctx.g) * pow(one_plus_u, 2 * ctx.g);
}

Division divide_by_hX(const LaurentPoly& p, const CurveContext& ctx)
{
    require(is_palindromic(p), "divide_by_hX: polynomial is not palindromic: " + p.to_string());
    const std::size_t g = static_cast<std::size_t>(ctx.g);
    std::vector<Integer> rem = to_c_powers(p);
    // (2+c)^g as a monic polynomial in c.
    std::vector<Integer> divisor(g + 1);
    for (std::size_t k = 0; k <= g; ++k) {
        Integer binom;
        mpz_bin_uiui(binom.get_mpz_t(), g, k);
        Integer two_pow;
        mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, g - k);
        divisor[k] = binom * two_pow;
    }
    std::vector<Integer> quot;
    if (rem.size() > g) {
        quot.assign(rem.size() - g, 0);
        for (std::size_t k = rem.size(); k-- > g;) {
            const Integer lead = rem[k];
            if (lead == 0) continue;
            quot[k - g] = lead;
            for (std::size_t j = 0; j <= g; ++j) rem[k - g + j] -= lead * divisor[j];
        }
        rem.resize(g);
    }
    Division out{from_c_powers(quot), from_c_powers(rem)};
    ensure(out.quotient * betti_constant_sheaf(ctx) + out.remainder == p,
           "divide_by_hX: reconstruction failed");
    return out;
}

Rational evaluate(const LaurentPoly& p, long u0)
{
    require(u0 != 0, "evaluate: u0 must be nonzero");
    Rational sum = 0;
    for (const auto& [k, c] : p.coefficients()) {
        Integer power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(std::labs(u0)),
                      static_cast<unsigned long>(std::abs(k)));
        if (u0 < 0 && (std::abs(k) % 2 == 1)) power = -power;
        Rational term = k >= 0 ? Rational(c * power) : Rational(c) / Rational(power);
        sum += term;
    }
    sum.canonicalize();
    return sum;
}

} // namespace bnring
