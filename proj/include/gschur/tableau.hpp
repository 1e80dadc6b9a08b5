#pragma once

#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gschur/core.hpp"

namespace gschur {

/// Sentinels for the extended filling on Z^2: +infinity inside the positive
/// quadrant beyond the shape, -infinity outside the positive quadrant.
inline constexpr int pos_infinity = std::numeric_limits<int>::max();
inline constexpr int neg_infinity = std::numeric_limits<int>::min();

/// A filling of a Young diagram with positive integers. Rows are stored
/// top-to-bottom; lookups outside the shape follow the extended convention.
class Tableau {
public:
    explicit Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
        if (rows_.empty()) throw std::invalid_argument("tableau must have at least one row");
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (rows_[r].empty()) throw std::invalid_argument("tableau rows must be nonempty");
            if (r > 0 && rows_[r - 1].size() < rows_[r].size())
                throw std::invalid_argument("tableau row lengths must be weakly decreasing");
            for (int v : rows_[r]) {
                if (v < 1) throw std::invalid_argument("tableau entries must be positive");
            }
        }
    }

    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    int row_count() const noexcept { return static_cast<int>(rows_.size()); }

    int size() const noexcept {
        int total = 0;
        for (const auto& row : rows_) total += static_cast<int>(row.size());
        return total;
    }

    int max_entry() const noexcept {
        int mx = 0;
        for (const auto& row : rows_)
            for (int v : row) mx = std::max(mx, v);
        return mx;
    }

    Partition shape() const {
        std::vector<int> parts;
        parts.reserve(rows_.size());
        for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
        return Partition(std::move(parts));
    }

    /// Extended lookup at 1-based (row, col).
    int at(int row, int col) const noexcept {
        if (row < 1 || col < 1) return neg_infinity;
        if (row > row_count() || col > static_cast<int>(rows_[row - 1].size()))
            return pos_infinity;
        return rows_[row - 1][col - 1];
    }

    bool contains(Box b) const noexcept {
        return b.row >= 1 && b.row <= row_count() && b.col >= 1 &&
               b.col <= static_cast<int>(rows_[b.row - 1].size());
    }

    friend bool operator==(const Tableau&, const Tableau&) = default;
    /// Orders by rows, i.e. lexicographically by row-reading word for a
    /// fixed shape.
    friend auto operator<=>(const Tableau& a, const Tableau& b) { return a.rows_ <=> b.rows_; }

private:
    std::vector<std::vector<int>> rows_;
};

/// Topmost and bottommost boxes carrying one value.
struct OccurrenceCoords {
    int value = 0;
    Box top;
    Box bottom;
};

struct DescentData {
    std::set<int> descents;
    std::set<int> attacking;  // subset of descents
};

/// Canonical text form: rows separated by " / ", entries by single spaces.
inline std::string to_string(const Tableau& t) {
    std::string out;
    for (int r = 0; r < t.row_count(); ++r) {
        if (r > 0) out += " / ";
        const auto& row = t.rows()[r];
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) out += ' ';
            out += std::to_string(row[c]);
        }
    }
    return out;
}

inline Tableau parse_tableau(std::string_view text) {
    std::vector<std::vector<int>> rows(1);
    int value = -1;
    for (char ch : text) {
        if (ch >= '0' && ch <= '9') {
            value = (value < 0 ? 0 : value) * 10 + (ch - '0');
        } else if (ch == '/' || ch == ' ' || ch == '\t') {
            if (value >= 0) rows.back().push_back(value);
            value = -1;
            if (ch == '/') rows.emplace_back();
        } else {
            throw std::invalid_argument("invalid tableau syntax");
        }
    }
    if (value >= 0) rows.back().push_back(value);
    return Tableau(std::move(rows));
}

/// Rows strictly increase left to right and columns strictly increase top to
/// bottom.
inline bool is_increasing(const Tableau& t) {
    for (int r = 1; r <= t.row_count(); ++r) {
        const int len = static_cast<int>(t.rows()[r - 1].size());
        for (int c = 1; c <= len; ++c) {
            if (c > 1 && t.at(r, c - 1) >= t.at(r, c)) return false;
            if (r > 1 && t.at(r - 1, c) >= t.at(r, c)) return false;
        }
    }
    return true;
}

/// Increasing filling whose value set is exactly [1, max(T)].
inline bool is_increasing_gapless(const Tableau& t) {
    if (!is_increasing(t)) return false;
    std::set<int> values;
    for (const auto& row : t.rows()) values.insert(row.begin(), row.end());
    return static_cast<int>(values.size()) == t.max_entry();
}

/// Bijective increasing filling with [1, n].
inline bool is_standard(const Tableau& t) {
    return is_increasing_gapless(t) && t.max_entry() == t.size();
}

inline OccurrenceCoords occurrences(const Tableau& t, int value) {
    OccurrenceCoords out;
    out.value = value;
    bool found = false;
    for (int r = 1; r <= t.row_count(); ++r) {
        const auto& row = t.rows()[r - 1];
        for (int c = 1; c <= static_cast<int>(row.size()); ++c) {
            if (row[c - 1] != value) continue;
            if (!found) {
                out.top = out.bottom = Box{r, c};
                found = true;
            } else {
                out.bottom = Box{r, c};  // rows scanned top to bottom
            }
        }
    }
    if (!found) throw std::invalid_argument("value does not occur in tableau");
    return out;
}

/// Values occurring more than once, ascending.
inline std::vector<int> repeated_values(const Tableau& t) {
    std::map<int, int> counts;
    for (const auto& row : t.rows())
        for (int v : row) ++counts[v];
    std::vector<int> out;
    for (auto [v, c] : counts)
        if (c > 1) out.push_back(v);
    return out;
}

/// Descents i (topmost i strictly above bottommost i+1) and the attacking
/// subset: i+1 directly below an i, or some i+1 in a row weakly above the
/// bottommost i.
inline DescentData descent_data(const Tableau& t) {
    DescentData out;
    const int m = t.max_entry();
    std::vector<OccurrenceCoords> occ;
    occ.reserve(m);
    for (int v = 1; v <= m; ++v) occ.push_back(occurrences(t, v));
    for (int i = 1; i < m; ++i) {
        const auto& lo = occ[i - 1];
        const auto& hi = occ[i];
        if (lo.top.row >= hi.bottom.row) continue;
        out.descents.insert(i);
        bool attacking = false;
        for (int r = 1; r <= t.row_count() && !attacking; ++r) {
            const auto& row = t.rows()[r - 1];
            for (int c = 1; c <= static_cast<int>(row.size()); ++c) {
                if (row[c - 1] == i && t.at(r + 1, c) == i + 1) {
                    attacking = true;  // condition (a)
                    break;
                }
                if (row[c - 1] == i + 1 && r <= lo.bottom.row) {
                    attacking = true;  // condition (b)
                    break;
                }
            }
        }
        if (attacking) out.attacking.insert(i);
    }
    return out;
}

namespace detail {

inline void enumerate_syt_rec(const std::vector<int>& shape, std::vector<std::vector<int>>& rows,
                              std::vector<bool>& used, int filled, int total,
                              std::vector<Tableau>& out) {
    if (filled == total) {
        out.emplace_back(rows);
        return;
    }
    // next box in row-major order
    int r = 0;
    int c = 0;
    int seen = 0;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (filled < seen + shape[i]) {
            r = static_cast<int>(i);
            c = filled - seen;
            break;
        }
        seen += shape[i];
    }
    const int left = c > 0 ? rows[r][c - 1] : 0;
    const int above = r > 0 ? rows[r - 1][c] : 0;
    for (int v = std::max(left, above) + 1; v <= total; ++v) {
        if (used[v]) continue;
        used[v] = true;
        rows[r].push_back(v);
        enumerate_syt_rec(shape, rows, used, filled + 1, total, out);
        rows[r].pop_back();
        used[v] = false;
    }
}

inline void enumerate_iglt_rec(int row1, int row2, int max_entry,
                               std::vector<std::vector<int>>& rows, int filled,
                               std::vector<int>& counts, int distinct,
                               std::vector<Tableau>& out) {
    const int total = row1 + row2;
    if (filled == total) {
        if (distinct == max_entry && counts[max_entry] > 0) out.emplace_back(rows);
        return;
    }
    const bool in_row1 = filled < row1;
    const int r = in_row1 ? 0 : 1;
    const int c = in_row1 ? filled : filled - row1;
    const int left = c > 0 ? rows[r][c - 1] : 0;
    const int above = r > 0 && c < static_cast<int>(rows[0].size()) ? rows[0][c] : 0;
    const int remaining = total - filled;
    for (int v = std::max(left, above) + 1; v <= max_entry; ++v) {
        const int new_distinct = distinct + (counts[v] == 0 ? 1 : 0);
        if (max_entry - new_distinct > remaining - 1) continue;  // cannot reach gaplessness
        ++counts[v];
        rows[r].push_back(v);
        enumerate_iglt_rec(row1, row2, max_entry, rows, filled + 1, counts, new_distinct, out);
        rows[r].pop_back();
        --counts[v];
    }
}

}  // namespace detail

/// All standard Young tableaux of shape mu, in lexicographic order of the
/// row-reading word.
inline std::vector<Tableau> enumerate_syt(const Partition& mu) {
    if (mu.empty()) throw std::invalid_argument("enumerate_syt: shape must be nonempty");
    const int n = mu.size();
    std::vector<std::vector<int>> rows(mu.length());
    for (int r = 0; r < mu.length(); ++r) rows[r].reserve(mu.parts()[r]);
    std::vector<bool> used(n + 1, false);
    std::vector<Tableau> out;
    detail::enumerate_syt_rec(mu.parts(), rows, used, 0, n, out);
    return out;
}

/// All increasing gapless tableaux of the two-row shape with max entry
/// exactly max_entry, in lexicographic order of the row-reading word. Empty
/// iff max_entry < l_lambda or max_entry > n.
inline std::vector<Tableau> enumerate_iglt(TwoRowPartition lambda, int max_entry) {
    if (max_entry < 1) throw std::invalid_argument("enumerate_iglt: max entry must be positive");
    std::vector<Tableau> out;
    if (max_entry < l_lambda(lambda) || max_entry > lambda.n()) return out;
    std::vector<std::vector<int>> rows(2);
    rows[0].reserve(lambda.row1);
    rows[1].reserve(lambda.row2);
    std::vector<int> counts(max_entry + 1, 0);
    detail::enumerate_iglt_rec(lambda.row1, lambda.row2, max_entry, rows, 0, counts, 0, out);
    return out;
}

}  // namespace gschur
