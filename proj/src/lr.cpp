#include "bnring/lr.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

namespace bnring {

namespace {

// Row-by-row filling of gamma/alpha.  Row i holds the letters 1..i+1 in
// weakly increasing order; a letter k placed in row i must exceed the entry
// directly above it, and the reverse reading word stays a lattice word, which
// row-wise reads: (#k up to row i) <= (#(k-1) before row i).
class LrFiller {
public:
    LrFiller(const Partition& alpha, const Partition& beta, const Partition& gamma)
        : alpha_(alpha), beta_(beta), gamma_(gamma),
          grid_(static_cast<std::size_t>(gamma.length()),
                std::vector<int>(static_cast<std::size_t>(gamma.first()), 0)),
          count_(static_cast<std::size_t>(beta.length()) + 1, 0)
    {
    }

    Integer run()
    {
        total_ = 0;
        row(0);
        return total_;
    }

private:
    void row(int i)
    {
        if (i == gamma_.length()) {
            for (int k = 1; k <= beta_.length(); ++k)
                if (count_[static_cast<std::size_t>(k)] != beta_[k - 1]) return;
            total_ += 1;
            return;
        }
        std::vector<int> before = count_;
        letter(i, 1, alpha_[i], before);
    }

    void letter(int i, int k, int pos, const std::vector<int>& before)
    {
        const int end = gamma_[i];
        const int max_letter = std::min(i + 1, beta_.length());
        if (k > max_letter) {
            if (pos == end) row(i + 1);
            return;
        }
        const auto ku = static_cast<std::size_t>(k);
        int max_a = std::min(end - pos, beta_[k - 1] - count_[ku]);
        if (k >= 2) max_a = std::min(max_a, before[ku - 1] - count_[ku]);
        // Column strictness against the row above; it is weakly increasing,
        // so the rightmost new cell is the binding one.
        for (int a = 0; a <= max_a; ++a) {
            if (a > 0 && i > 0) {
                const int col = pos + a - 1;
                if (col >= alpha_[i - 1] &&
                    grid_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(col)] >= k)
                    break;
            }
            if (a > 0) grid_[static_cast<std::size_t>(i)][static_cast<std::size_t>(pos + a - 1)] = k;
            count_[ku] += a;
            letter(i, k + 1, pos + a, before);
            count_[ku] -= a;
        }
    }

    const Partition& alpha_;
    const Partition& beta_;
    const Partition& gamma_;
    std::vector<std::vector<int>> grid_;
    std::vector<int> count_;
    Integer total_;
};

using Key = std::tuple<Partition, Partition, Partition>;

std::mutex lr_mutex;
std::map<Key, Integer> lr_cache;

std::mutex oracle_mutex;
std::map<std::pair<Partition, Partition>, std::map<Partition, Integer>> oracle_cache;

// Coefficient of x^lambda in s_alpha * s_beta.  Monomial coefficients of a
// Schur polynomial are Kostka numbers of the sorted exponent.
Integer product_monomial_coefficient(const Partition& alpha, const Partition& beta,
                                     const Partition& lambda)
{
    const int len = lambda.length();
    std::vector<int> a(static_cast<std::size_t>(len), 0);
    Integer sum = 0;
    auto rec = [&](auto&& self, int i, int remaining) -> void {
        if (i == len) {
            if (remaining != 0) return;
            std::vector<int> b(static_cast<std::size_t>(len));
            for (int j = 0; j < len; ++j)
                b[static_cast<std::size_t>(j)] = lambda[j] - a[static_cast<std::size_t>(j)];
            Partition pa = Partition::from_unsorted(a);
            Partition pb = Partition::from_unsorted(b);
            Integer ka = kostka(alpha, pa.parts());
            if (ka == 0) return;
            sum += ka * kostka(beta, pb.parts());
            return;
        }
        for (int v = std::min(remaining, lambda[i]); v >= 0; --v) {
            a[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, remaining - v);
        }
    };
    rec(rec, 0, alpha.degree());
    return sum;
}

std::map<Partition, Integer> oracle_expansion(const Partition& alpha, const Partition& beta)
{
    auto key = std::make_pair(alpha, beta);
    {
        std::lock_guard lock(oracle_mutex);
        if (auto it = oracle_cache.find(key); it != oracle_cache.end()) return it->second;
    }
    const int n = alpha.degree() + beta.degree();
    // Decreasing lexicographic order: the leading monomial of s_mu is x^mu and
    // every other monomial of s_mu is lexicographically smaller.
    const std::vector<Partition> lambdas = partitions_of(n);
    std::map<Partition, Integer> coeff;
    std::vector<std::pair<Partition, Integer>> found;
    for (const Partition& lambda : lambdas) {
        Integer c = product_monomial_coefficient(alpha, beta, lambda);
        for (const auto& [mu, cm] : found) c -= cm * kostka(mu, lambda.parts());
        ensure(c >= 0, "lr_oracle: negative Schur coefficient");
        if (c != 0) found.emplace_back(lambda, c);
        coeff.emplace(lambda, c);
    }
    std::lock_guard lock(oracle_mutex);
    return oracle_cache.emplace(std::move(key), std::move(coeff)).first->second;
}

} // namespace

Integer lr_coefficient(const Partition& alpha, const Partition& beta, const Partition& gamma)
{
    if (alpha.degree() + beta.degree() != gamma.degree()) return 0;
    if (!alpha.fits_in(gamma) || !beta.fits_in(gamma)) return 0;
    if (alpha.empty()) return beta == gamma ? 1 : 0;
    if (beta.empty()) return alpha == gamma ? 1 : 0;

    Key key{alpha, beta, gamma};
    {
        std::lock_guard lock(lr_mutex);
        if (auto it = lr_cache.find(key); it != lr_cache.end()) return it->second;
    }
    Integer value = LrFiller(alpha, beta, gamma).run();
    std::lock_guard lock(lr_mutex);
    lr_cache.emplace(std::move(key), value);
    return value;
}

std::map<Partition, Integer> lr_expand_product(const Partition& alpha, const Partition& beta)
{
    std::map<Partition, Integer> out;
    const int n = alpha.degree() + beta.degree();
    for (const Partition& gamma :
         partitions_of(n, alpha.first() + beta.first(), alpha.length() + beta.length())) {
        if (!alpha.fits_in(gamma) || !beta.fits_in(gamma)) continue;
        Integer c = lr_coefficient(alpha, beta, gamma);
        if (c != 0) out.emplace(gamma, std::move(c));
    }
    return out;
}

Integer lr_oracle(const Partition& alpha, const Partition& beta, const Partition& gamma, int bound)
{
    if (gamma.degree() > bound)
        throw Unsupported("oracle out of range: deg" + gamma.to_string() + " = " +
                          std::to_string(gamma.degree()) + " exceeds bound " +
                          std::to_string(bound));
    if (alpha.degree() + beta.degree() != gamma.degree()) return 0;
    const auto expansion = oracle_expansion(alpha, beta);
    auto it = expansion.find(gamma);
    return it == expansion.end() ? Integer(0) : it->second;
}

void clear_lr_cache()
{
    {
        std::lock_guard lock(lr_mutex);
        lr_cache.clear();
    }
    std::lock_guard lock(oracle_mutex);
    oracle_cache.clear();
}

} // namespace bnring
