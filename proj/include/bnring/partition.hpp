#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bnring/errors.hpp"

namespace bnring {

/// Integer partition with weakly decreasing positive parts.  Trailing zeros
/// given on construction are dropped; a negative part or an increase throws.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    /// Sorts arbitrary nonnegative parts into a partition.
    static Partition from_unsorted(std::vector<int> parts);

    /// Parses "3,1", "0", "[]" or "" (empty).  Throws InvalidArgument.
    static Partition parse(std::string_view text);

    [[nodiscard]] std::span<const int> parts() const noexcept { return parts_; }
    [[nodiscard]] int length() const noexcept { return static_cast<int>(parts_.size()); }
    [[nodiscard]] int degree() const noexcept { return degree_; }
    [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }

    /// Part i (0-based), zero past the length.
    [[nodiscard]] int operator[](int i) const noexcept
    {
        return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
    }
    [[nodiscard]] int first() const noexcept { return (*this)[0]; }

    /// Young diagram of this partition lies inside the one of `outer`.
    [[nodiscard]] bool fits_in(const Partition& outer) const noexcept;

    /// "(3,1)"; the empty partition prints as "()".
    [[nodiscard]] std::string to_string() const;
    /// "3,1"; the empty partition prints as "0".  Inverse of parse().
    [[nodiscard]] std::string to_cli() const;

    friend bool operator==(const Partition& a, const Partition& b) noexcept
    {
        return a.parts_ == b.parts_;
    }
    /// Graded order: by degree, then larger parts first, so (2) < (1,1).
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept;

private:
    std::vector<int> parts_;
    int degree_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Transposed Young diagram.
Partition conjugate(const Partition& p);

/// All partitions of n, optionally bounded in part size and length,
/// ordered by the graded order (largest first part first).
std::vector<Partition> partitions_of(int n, int max_part = -1, int max_length = -1);

/// All partitions of every degree 0..max_degree.
std::vector<Partition> partitions_up_to(int max_degree, int max_part = -1, int max_length = -1);

/// Number of standard Young tableaux of shape p (hook length formula);
/// equals the dimension of the symmetric-group irreducible.
Integer syt_count(const Partition& p);

/// Number of semistandard tableaux of shape `shape` and content `content`
/// (Kostka number).  The content may be any weak composition.
Integer kostka(const Partition& shape, std::span<const int> content);

} // namespace bnring
