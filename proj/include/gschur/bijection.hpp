#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "gschur/core.hpp"
#include "gschur/tableau.hpp"

namespace gschur {

/// Full record of one application of the collapse map from a two-row
/// increasing gapless tableau to a standard Young tableau: the repeated
/// values removed from row 1 and the row-2 entries displaced into column 1,
/// alongside input and output.
struct PhiTrace {
    std::vector<int> removed;    // deleted from row 1; equals the repeated values
    std::vector<int> displaced;  // deleted from row 2 and inserted into column 1
    Tableau input;
    Tableau output;
};

namespace detail {

inline std::vector<int> erase_values(const std::vector<int>& row, const std::set<int>& values) {
    std::vector<int> out;
    out.reserve(row.size());
    for (int v : row)
        if (!values.count(v)) out.push_back(v);
    return out;
}

/// Merges sorted strictly increasing sequences; duplicates are a bug.
inline std::vector<int> merge_increasing(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i - 1] >= out[i]) throw std::logic_error("merge produced a repeated entry");
    return out;
}

}  // namespace detail

/// Collapses a two-row increasing gapless tableau to a standard Young
/// tableau: remove the repeated values from row 1, remove each row-2 entry
/// immediately right of a repeated value, and rethread the latter into the
/// first column.
inline PhiTrace phi(const Tableau& t) {
    if (t.row_count() != 2 || !is_increasing_gapless(t))
        throw std::invalid_argument("phi expects a two-row increasing gapless tableau");
    const std::vector<int> removed = repeated_values(t);
    const std::set<int> removed_set(removed.begin(), removed.end());
    const auto& row1 = t.rows()[0];
    const auto& row2 = t.rows()[1];

    std::vector<int> displaced;
    for (std::size_t c = 0; c + 1 < row2.size(); ++c)
        if (removed_set.count(row2[c])) displaced.push_back(row2[c + 1]);

    std::vector<std::vector<int>> rows;
    rows.push_back(detail::erase_values(row1, removed_set));
    rows.push_back(detail::erase_values(row2, std::set<int>(displaced.begin(), displaced.end())));
    if (rows[0].empty() || rows[1].empty())
        throw std::logic_error("collapse emptied a row: " + to_string(t));
    for (int b : displaced) {
        if (b <= rows[1][0])
            throw std::logic_error("displaced entry does not extend the first column");
        rows.push_back({b});
    }

    PhiTrace trace{removed, displaced, t, Tableau(std::move(rows))};
    if (!is_standard(trace.output))
        throw std::logic_error("collapse output is not standard: " + to_string(t));
    return trace;
}

/// Inverse of phi: rebuild the two-row tableau of shape lambda with max entry
/// m from a standard tableau whose shape lies in Par(lambda; m).
inline Tableau phi_inverse(const Tableau& s, TwoRowPartition lambda, int m) {
    const std::vector<Partition> par = par_candidates(lambda, m);
    if (std::find(par.begin(), par.end(), s.shape()) == par.end())
        throw std::invalid_argument("shape is not in Par(lambda; m)");
    if (!is_standard(s)) throw std::invalid_argument("phi_inverse expects a standard tableau");

    const int k = lambda.n() - m;
    std::vector<int> row1 = s.rows()[0];
    std::vector<int> row2 = s.rows()[1];
    std::vector<int> below;
    for (int r = 2; r < s.row_count(); ++r)
        below.insert(below.end(), s.rows()[r].begin(), s.rows()[r].end());
    std::sort(below.begin(), below.end());

    row2 = detail::merge_increasing(row2, below);
    const std::set<int> below_set(below.begin(), below.end());
    std::set<int> reinsert;
    for (std::size_t p = 1; p < row2.size(); ++p)
        if (below_set.count(row2[p])) reinsert.insert(row2[p - 1]);
    if (static_cast<int>(reinsert.size()) < k) reinsert.insert(row2.back());
    if (static_cast<int>(reinsert.size()) != k)
        throw std::logic_error("reinsertion set has wrong size for " + to_string(s));

    row1 = detail::merge_increasing(row1, {reinsert.begin(), reinsert.end()});
    Tableau out({std::move(row1), std::move(row2)});
    if (out.shape() != lambda.to_partition() || !is_increasing_gapless(out) ||
        out.max_entry() != m)
        throw std::logic_error("rebuilt tableau is invalid for " + to_string(s));
    return out;
}

/// Position of the collapse image inside the canonical SYT enumeration of its
/// shape.
struct SytPosition {
    Partition shape;
    int index = -1;
};

inline SytPosition psi_image_index(const Tableau& t) {
    const Tableau image = phi(t).output;
    SytPosition out;
    out.shape = image.shape();
    const std::vector<Tableau> all = enumerate_syt(out.shape);
    const auto it = std::find(all.begin(), all.end(), image);
    if (it == all.end()) throw std::logic_error("collapse image missing from enumeration");
    out.index = static_cast<int>(it - all.begin());
    return out;
}

}  // namespace gschur
