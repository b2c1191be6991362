#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bnring/kring.hpp"
#include "bnring/laurent.hpp"
#include "bnring/partition.hpp"

namespace bnring {

enum class Group { SL, Sp };

/// Virtual-free element of a representation ring: irreducible labels of
/// SL(N) (rank = N) or Sp(2m) (rank = m) with positive multiplicities.
class RepElement {
public:
    RepElement(Group group, int rank);

    [[nodiscard]] Group group() const noexcept { return group_; }
    [[nodiscard]] int rank() const noexcept { return rank_; }
    [[nodiscard]] const std::map<Partition, Integer>& terms() const noexcept { return terms_; }

    /// Adds mult copies of the irreducible with label `label`, which must be
    /// reduced for the group (length <= N-1 for SL, <= m for Sp).
    void add(const Partition& label, const Integer& mult);

    [[nodiscard]] Integer multiplicity(const Partition& label) const;
    /// Irreducible constituents counted with multiplicity.
    [[nodiscard]] Integer constituent_count() const;
    [[nodiscard]] Integer dimension() const;
    [[nodiscard]] bool contains_trivial() const { return multiplicity(Partition{}) > 0; }

    RepElement& operator+=(const RepElement& o);
    friend bool operator==(const RepElement&, const RepElement&) = default;

    /// "SL(4): (2):1 (1,1):1"
    [[nodiscard]] std::string to_string() const;

private:
    Group group_;
    int rank_;
    std::map<Partition, Integer> terms_;
};

std::string to_string(Group group);

// ---- SL(N) ----

/// nullopt if length > N; otherwise full columns of height N are removed.
std::optional<Partition> sl_reduce(const Partition& lambda, int N);
RepElement sl_tensor(const Partition& lambda, const Partition& mu, int N);
Integer sl_dim(const Partition& lambda, int N);

// ---- Sp(2m) ----

/// Weyl dimension formula of type C.
Integer sp_dim(const Partition& lambda, int m);

/// Littlewood restriction GL(2m) -> Sp(2m) in the stable range
/// length(lambda) <= m: the multiplicity of mu is sum_beta c^lambda_{mu beta}
/// over beta whose columns all have even height.  Throws Unsupported outside.
RepElement sp_branch_from_gl(const Partition& lambda, int m);

/// sum_{a,b,c} c^mu_{ab} c^nu_{ac} c^lambda_{bc}.
Integer newell_littlewood(const Partition& mu, const Partition& nu, const Partition& lambda);

/// Weyl-group symmetric Laurent polynomial on the weight lattice Z^m.
class SpCharacter {
public:
    using Weight = std::vector<int>;

    explicit SpCharacter(int m) : m_(m) {}

    /// Irreducible character via the type-C alternant quotient.
    static SpCharacter irreducible(const Partition& lambda, int m);
    /// s_lambda(x_1..x_m, x_1^-1..x_m^-1), the restriction of a GL(2m) character.
    static SpCharacter from_gl(const Partition& lambda, int m);

    [[nodiscard]] int rank() const noexcept { return m_; }
    [[nodiscard]] const std::map<Weight, Integer>& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] Integer dimension() const;
    /// Invariance under coordinate permutations and sign changes.
    [[nodiscard]] bool is_weyl_symmetric() const;

    void add(const Weight& w, const Integer& c);

    friend SpCharacter operator*(const SpCharacter& a, const SpCharacter& b);
    SpCharacter& operator+=(const SpCharacter& o);
    SpCharacter& operator-=(const SpCharacter& o);
    friend SpCharacter operator*(const Integer& c, SpCharacter a);
    friend bool operator==(const SpCharacter&, const SpCharacter&) = default;

    /// Greedy decomposition: repeatedly subtract the irreducible character
    /// of the highest surviving dominant weight.
    [[nodiscard]] RepElement decompose() const;

private:
    int m_;
    std::map<Weight, Integer> terms_;
};

/// Largest symplectic rank handled by the character oracle.
inline constexpr int kSpOracleMaxRank = 3;

/// Tensor product of Sp(2m) irreducibles by character multiplication, m <= 3.
RepElement sp_tensor_oracle(const Partition& lambda, const Partition& mu, int m);

/// Restriction of the GL(2m) irreducible S^lambda to Sp(2m) through the
/// character oracle; works outside the stable range for m <= 3.
RepElement sp_restrict_oracle(const Partition& lambda, int m);

/// Image of delta_alpha in Rep(SL(2g-2)) or Rep(Sp(2g-2)): the label alpha*,
/// reduced (SL) or branched from GL(2g-2) (Sp).
RepElement bn_to_rep(const Partition& alpha, const CurveContext& ctx);

/// Tensor product of two representation-ring elements, expanded bilinearly.
RepElement tensor(const RepElement& a, const RepElement& b);

struct ComparisonReport {
    Partition alpha;
    Partition beta;
    CurveContext ctx;
    RepElement left;   // image of the convolution
    RepElement right;  // tensor product of the images
    bool equal = false;
    Integer left_dim;
    Integer right_dim;
};

/// Checks that bn_to_rep turns convolution into tensor product for the pair.
ComparisonReport compare_convolution_to_tensor(const Partition& alpha, const Partition& beta,
                                               const CurveContext& ctx);

} // namespace bnring
