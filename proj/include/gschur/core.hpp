#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gschur {

/// A composition: a finite ordered list of positive integers. The empty
/// composition is the unique composition of size and length 0.
class Composition {
public:
    Composition() = default;

    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_) {
            if (p < 1) throw std::invalid_argument("composition parts must be positive");
        }
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const noexcept { return parts_.empty(); }

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition& a, const Composition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

/// A partition: a composition with weakly decreasing parts.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i - 1] < parts_[i])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const noexcept { return parts_.empty(); }

    Composition as_composition() const { return Composition(parts_); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

/// A partition with exactly two rows, lambda1 >= lambda2 >= 1.
struct TwoRowPartition {
    int row1 = 1;
    int row2 = 1;

    TwoRowPartition(int r1, int r2) : row1(r1), row2(r2) {
        if (r2 < 1 || r1 < r2)
            throw std::invalid_argument("two-row partition requires row1 >= row2 >= 1");
    }

    int n() const noexcept { return row1 + row2; }
    Partition to_partition() const { return Partition({row1, row2}); }

    friend bool operator==(const TwoRowPartition&, const TwoRowPartition&) = default;
};

/// A box (i, j) of a Young diagram: row i, column j, both 1-based; row 1 is
/// the top row.
struct Box {
    int row = 1;
    int col = 1;

    friend bool operator==(const Box&, const Box&) = default;
    friend auto operator<=>(const Box&, const Box&) = default;
};

/// set(alpha) = {a1, a1+a2, ..., a1+...+a_{l-1}}, a subset of [1, n-1].
inline std::set<int> set_of(const Composition& alpha) {
    std::set<int> out;
    int acc = 0;
    for (int i = 0; i + 1 < alpha.length(); ++i) {
        acc += alpha.parts()[i];
        out.insert(acc);
    }
    return out;
}

/// comp(I) for I = {i1 < i2 < ... < il} in [1, n-1]: the composition
/// (i1, i2-i1, ..., n-il) of n. Inverse of set_of.
inline Composition comp_of(const std::set<int>& boundaries, int n) {
    if (n < 0) throw std::invalid_argument("comp_of: n must be nonnegative");
    if (n == 0) {
        if (!boundaries.empty()) throw std::invalid_argument("comp_of: boundary out of range");
        return Composition{};
    }
    std::vector<int> parts;
    int prev = 0;
    for (int b : boundaries) {
        if (b < 1 || b > n - 1) throw std::invalid_argument("comp_of: boundary out of range");
        parts.push_back(b - prev);
        prev = b;
    }
    parts.push_back(n - prev);
    return Composition(std::move(parts));
}

namespace detail {
inline void compositions_rec(int remaining, std::vector<int>& prefix,
                             std::vector<Composition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int first = 1; first <= remaining; ++first) {
        prefix.push_back(first);
        compositions_rec(remaining - first, prefix, out);
        prefix.pop_back();
    }
}
}  // namespace detail

/// All compositions of n, in lexicographic order on part lists.
inline std::vector<Composition> compositions(int n) {
    if (n < 0) throw std::invalid_argument("compositions: n must be nonnegative");
    std::vector<Composition> out;
    std::vector<int> prefix;
    detail::compositions_rec(n, prefix, out);
    return out;
}

/// l_lambda = max{lambda1, lambda2 + 1}, the least max-entry for which an
/// increasing gapless filling of the two-row shape exists.
inline int l_lambda(TwoRowPartition lambda) {
    return std::max(lambda.row1, lambda.row2 + 1);
}

namespace detail {
inline void check_variant_range(TwoRowPartition lambda, int m) {
    if (m < l_lambda(lambda) || m > lambda.n())
        throw std::invalid_argument("m must lie in [l_lambda, n]");
}
}  // namespace detail

/// The candidate shape lambda_m^(x) for x = 1, 2: with k = n - m,
/// (l1-k, l2-k, 1^k) resp. (l1-k, l2-k+1, 1^{k-1}). Returns nullopt when the
/// constructed tuple is not a valid nonempty partition of m.
inline std::optional<Partition> lambda_variant(TwoRowPartition lambda, int m, int x) {
    detail::check_variant_range(lambda, m);
    if (x != 1 && x != 2) throw std::invalid_argument("variant index must be 1 or 2");
    const int k = lambda.n() - m;
    std::vector<int> parts;
    if (x == 1) {
        parts = {lambda.row1 - k, lambda.row2 - k};
        parts.insert(parts.end(), k, 1);
    } else {
        if (k < 1) return std::nullopt;
        parts = {lambda.row1 - k, lambda.row2 - k + 1};
        parts.insert(parts.end(), k - 1, 1);
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) return std::nullopt;
        if (i > 0 && parts[i - 1] < parts[i]) return std::nullopt;
    }
    return Partition(parts);
}

/// The stricter nonemptiness guard (lambda2 > k+1 for x=1, lambda2 > k for
/// x=2, with the m = n case admitting only x = 1). Evaluated alongside
/// lambda_variant so verification reports can show both readings.
inline bool lambda_variant_strict_guard(TwoRowPartition lambda, int m, int x) {
    detail::check_variant_range(lambda, m);
    if (x != 1 && x != 2) throw std::invalid_argument("variant index must be 1 or 2");
    const int k = lambda.n() - m;
    if (m == lambda.n()) return x == 1;
    return x == 1 ? lambda.row2 > k + 1 : lambda.row2 > k;
}

/// Par(lambda; m): {lambda_m^(1)} when m = n or lambda1 = lambda2, otherwise
/// {lambda_m^(1), lambda_m^(2)}, dropping empty variants.
inline std::vector<Partition> par_candidates(TwoRowPartition lambda, int m) {
    detail::check_variant_range(lambda, m);
    std::vector<Partition> out;
    if (auto v1 = lambda_variant(lambda, m, 1)) out.push_back(*v1);
    if (m < lambda.n() && lambda.row1 > lambda.row2) {
        if (auto v2 = lambda_variant(lambda, m, 2)) out.push_back(*v2);
    }
    return out;
}

/// Parses "3,2" into a composition; the empty string is the empty composition.
inline Composition parse_composition(std::string_view text) {
    std::vector<int> parts;
    if (text.empty()) return Composition{};
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        if (tok.empty()) throw std::invalid_argument("empty part in composition");
        int value = 0;
        for (char ch : tok) {
            if (ch < '0' || ch > '9') throw std::invalid_argument("invalid composition syntax");
            value = value * 10 + (ch - '0');
            if (value > 1'000'000) throw std::invalid_argument("composition part too large");
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Composition(std::move(parts));
}

inline Partition parse_partition(std::string_view text) {
    return Partition(parse_composition(text).parts());
}

inline std::string to_string(const Composition& alpha) {
    std::string out;
    for (int i = 0; i < alpha.length(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(alpha.parts()[i]);
    }
    return out;
}

inline std::string to_string(const Partition& mu) { return to_string(mu.as_composition()); }

}  // namespace gschur
