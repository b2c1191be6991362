#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "bnring/errors.hpp"

namespace bnring {

/// Genus data of the curve.  chi = N = 2g-2 and m = g-1.
struct CurveContext {
    int g = 2;
    bool hyperelliptic = false;

    CurveContext() = default;
    CurveContext(int genus, bool hyper) : g(genus), hyperelliptic(hyper)
    {
        require(genus >= 2, "genus must be at least 2, got " + std::to_string(genus));
    }

    [[nodiscard]] int chi() const noexcept { return 2 * g - 2; }
    [[nodiscard]] int sl_rank() const noexcept { return 2 * g - 2; }
    [[nodiscard]] int sp_rank() const noexcept { return g - 1; }

    friend bool operator==(const CurveContext&, const CurveContext&) = default;
};

/// Laurent polynomial in u = t^{1/2} with exact integer coefficients.
/// No zero coefficient is ever stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c);  // NOLINT: constants convert implicitly
    LaurentPoly(const Integer& c);  // NOLINT
    explicit LaurentPoly(std::map<int, Integer> coeffs);

    /// c * u^k
    static LaurentPoly monomial(int k, const Integer& c = 1);

    [[nodiscard]] const std::map<int, Integer>& coefficients() const noexcept { return coeffs_; }
    [[nodiscard]] Integer coeff(int k) const;
    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Highest exponent; nullopt for the zero polynomial.
    [[nodiscard]] std::optional<int> max_degree() const;
    /// Lowest exponent; nullopt for the zero polynomial.
    [[nodiscard]] std::optional<int> min_degree() const;
    [[nodiscard]] bool is_constant() const noexcept
    {
        return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
    }
    [[nodiscard]] bool has_nonnegative_coefficients() const;

    /// u -> u^{-1}
    [[nodiscard]] LaurentPoly flipped() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Integer& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Integer& c) { return a *= c; }
    friend LaurentPoly operator*(const Integer& c, LaurentPoly a) { return a *= c; }
    friend LaurentPoly operator*(long c, LaurentPoly a) { return a *= Integer(c); }
    friend LaurentPoly operator*(LaurentPoly a, long c) { return a *= Integer(c); }
    friend LaurentPoly operator-(LaurentPoly a);
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// "u^3 + 4*u + 4*u^-1 + u^-3"; the zero polynomial prints as "0".
    [[nodiscard]] std::string to_string() const;

private:
    void add_term(int k, const Integer& c);

    std::map<int, Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

LaurentPoly pow(const LaurentPoly& p, int n);

/// [n]_t = u^{n-1} + u^{n-3} + ... + u^{1-n}.
LaurentPoly quantum_integer(int n);

bool is_palindromic(const LaurentPoly& p);

/// Coefficients a_k with p = sum a_k P_k(c), P_0 = 1, P_k = u^k + u^-k.
/// Throws InvalidArgument for a non-palindromic p.
std::vector<Integer> to_c_basis(const LaurentPoly& p);
LaurentPoly from_c_basis(const std::vector<Integer>& a);

/// Residue class in Z[u,u^-1]/((u+2+u^-1)^g) ~= Z[eps]/eps^{2g}, u = eps - 1.
/// Stored as the eps-coefficient vector with trailing zeros removed.
class Residue {
public:
    Residue(int g, std::vector<Integer> eps);

    [[nodiscard]] int genus() const noexcept { return g_; }
    [[nodiscard]] const std::vector<Integer>& eps_coefficients() const noexcept { return eps_; }
    [[nodiscard]] bool is_zero() const noexcept { return eps_.empty(); }

    friend Residue operator+(const Residue& a, const Residue& b);
    friend Residue operator*(const Residue& a, const Residue& b);
    friend bool operator==(const Residue&, const Residue&) = default;

private:
    int g_;
    std::vector<Integer> eps_;
};

Residue reduce_mod_ideal(const LaurentPoly& p, const CurveContext& ctx);

/// u^{-g}(1+u)^{2g} = (2+c)^g, the Betti polynomial of the constant sheaf.
LaurentPoly betti_constant_sheaf(const CurveContext& ctx);

struct Division {
    LaurentPoly quotient;
    LaurentPoly remainder;
};

/// p = quotient * (2+c)^g + remainder with remainder of u-degree <= g-1,
/// computed by Euclidean division in the palindromic subring Z[c].
Division divide_by_hX(const LaurentPoly& p, const CurveContext& ctx);

/// Exact value at u = u0; throws InvalidArgument for u0 = 0.
Rational evaluate(const LaurentPoly& p, long u0);

} // namespace bnring
