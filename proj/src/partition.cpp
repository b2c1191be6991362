#include "bnring/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <utility>

namespace bnring {

namespace {

void strip_trailing_zeros(std::vector<int>& parts)
{
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
}

} // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    strip_trailing_zeros(parts_);
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        require(parts_[i] > 0, "partition parts must be positive: " + to_string());
        require(i == 0 || parts_[i - 1] >= parts_[i],
                "partition parts must be weakly decreasing: " + to_string());
    }
    degree_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts)
{
    for (int p : parts) require(p >= 0, "negative part");
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.size() >= 2 && ((text.front() == '[' && text.back() == ']') ||
                             (text.front() == '(' && text.back() == ')'))) {
        text = trim(text.substr(1, text.size() - 2));
    }
    std::vector<int> parts;
    if (text.empty()) return Partition{};
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view tok = trim(text.substr(pos, comma - pos));
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || value < 0)
            throw InvalidArgument("malformed partition: '" + std::string(text) + "'");
        parts.push_back(value);
        pos = comma + 1;
    }
    if (parts.size() == 1 && parts[0] == 0) return Partition{};
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        if (parts[i] == 0 && parts[i + 1] != 0)
            throw InvalidArgument("malformed partition: '" + std::string(text) + "'");
    }
    return Partition(std::move(parts));
}

bool Partition::fits_in(const Partition& outer) const noexcept
{
    if (length() > outer.length()) return false;
    for (int i = 0; i < length(); ++i)
        if ((*this)[i] > outer[i]) return false;
    return true;
}

std::string Partition::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
}

std::string Partition::to_cli() const
{
    if (parts_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    return os.str();
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept
{
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    // Reverse lexicographic inside a degree.
    return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(),
                                                  a.parts_.begin(), a.parts_.end());
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

Partition conjugate(const Partition& p)
{
    std::vector<int> out(static_cast<std::size_t>(p.first()), 0);
    for (int row : p.parts())
        for (int j = 0; j < row; ++j) ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

namespace {

void gen_partitions(int remaining, int max_part, int max_length, std::vector<int>& cur,
                    std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (max_length == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, max_length - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n, int max_part, int max_length)
{
    std::vector<Partition> out;
    if (n < 0) return out;
    if (max_part < 0) max_part = n;
    if (max_length < 0) max_length = n;
    std::vector<int> cur;
    gen_partitions(n, max_part, max_length, cur, out);
    return out;
}

std::vector<Partition> partitions_up_to(int max_degree, int max_part, int max_length)
{
    std::vector<Partition> out;
    for (int n = 0; n <= max_degree; ++n) {
        auto ps = partitions_of(n, max_part, max_length);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

Integer syt_count(const Partition& p)
{
    const Partition conj = conjugate(p);
    Integer num = 1;
    for (int k = 2; k <= p.degree(); ++k) num *= k;
    Integer hooks = 1;
    for (int i = 0; i < p.length(); ++i)
        for (int j = 0; j < p[i]; ++j) hooks *= (p[i] - j - 1) + (conj[j] - i - 1) + 1;
    return num / hooks;
}

namespace {

using KostkaKey = std::pair<std::vector<int>, std::vector<int>>;

std::mutex kostka_mutex;
std::map<KostkaKey, Integer> kostka_cache;

// Removes a horizontal strip of `size` boxes from `shape` in every possible way.
void horizontal_strips(const std::vector<int>& shape, std::size_t row, int size,
                       std::vector<int>& inner, const std::function<void()>& visit)
{
    if (row == shape.size()) {
        if (size == 0) visit();
        return;
    }
    const int below = row + 1 < shape.size() ? shape[row + 1] : 0;
    const int max_take = std::min(size, shape[row] - below);
    for (int take = 0; take <= max_take; ++take) {
        inner[row] = shape[row] - take;
        horizontal_strips(shape, row + 1, size - take, inner, visit);
    }
    inner[row] = shape[row];
}

Integer kostka_rec(const std::vector<int>& shape, std::vector<int> content)
{
    while (!content.empty() && content.back() == 0) content.pop_back();
    int total = std::accumulate(shape.begin(), shape.end(), 0);
    int wanted = std::accumulate(content.begin(), content.end(), 0);
    if (total != wanted) return 0;
    if (content.empty()) return 1;

    KostkaKey key{shape, content};
    {
        std::lock_guard lock(kostka_mutex);
        if (auto it = kostka_cache.find(key); it != kostka_cache.end()) return it->second;
    }

    const int last = content.back();
    std::vector<int> rest(content.begin(), content.end() - 1);
    Integer sum = 0;
    std::vector<int> inner = shape;
    horizontal_strips(shape, 0, last, inner, [&] {
        std::vector<int> trimmed = inner;
        while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
        sum += kostka_rec(trimmed, rest);
    });

    std::lock_guard lock(kostka_mutex);
    kostka_cache.emplace(std::move(key), sum);
    return sum;
}

} // namespace

Integer kostka(const Partition& shape, std::span<const int> content)
{
    for (int c : content) require(c >= 0, "kostka: negative content");
    return kostka_rec(std::vector<int>(shape.parts().begin(), shape.parts().end()),
                      std::vector<int>(content.begin(), content.end()));
}

} // namespace bnring
