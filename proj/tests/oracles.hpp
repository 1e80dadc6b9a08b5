#pragma once

// Independent brute-force oracles for the test suite. These deliberately use
// different algorithms than the library (permutation filters, raw
// function-space filters, subset combinations, hook lengths, exhaustive
// lattice-path search) so that agreement is meaningful.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "gschur/core.hpp"
#include "gschur/genome.hpp"
#include "gschur/tableau.hpp"

namespace oracles {

using gschur::Box;
using gschur::LatticePath;
using gschur::LatticePoint;
using gschur::Partition;
using gschur::Tableau;
using gschur::TwoRowPartition;

inline std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(parts);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

inline Tableau from_flat(const Partition& shape, const std::vector<int>& flat) {
    std::vector<std::vector<int>> rows;
    std::size_t pos = 0;
    for (int len : shape.parts()) {
        rows.emplace_back(flat.begin() + pos, flat.begin() + pos + len);
        pos += len;
    }
    return Tableau(std::move(rows));
}

/// All SYT of a shape by filtering every permutation of [1, n].
inline std::vector<Tableau> syt_by_permutations(const Partition& shape) {
    const int n = shape.size();
    std::vector<int> flat(n);
    std::iota(flat.begin(), flat.end(), 1);
    std::vector<Tableau> out;
    do {
        Tableau t = from_flat(shape, flat);
        if (gschur::is_standard(t)) out.push_back(std::move(t));
    } while (std::next_permutation(flat.begin(), flat.end()));
    std::sort(out.begin(), out.end());
    return out;
}

/// All IGLT with the given max entry by filtering every function from the
/// boxes to [1, max]. Exponential; keep n small.
inline std::vector<Tableau> iglt_by_functions(TwoRowPartition lambda, int max_entry) {
    const int n = lambda.n();
    const Partition shape = lambda.to_partition();
    std::vector<int> flat(n, 1);
    std::vector<Tableau> out;
    while (true) {
        Tableau t = from_flat(shape, flat);
        if (gschur::is_increasing_gapless(t) && t.max_entry() == max_entry)
            out.push_back(std::move(t));
        int pos = n - 1;
        while (pos >= 0 && flat[pos] == max_entry) flat[pos--] = 1;
        if (pos < 0) break;
        ++flat[pos];
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// All IGLT with the given max entry by choosing the two row value sets as
/// subsets of [1, max] and filtering.
inline std::vector<Tableau> iglt_by_subsets(TwoRowPartition lambda, int max_entry) {
    auto subsets_of_size = [max_entry](int size) {
        std::vector<std::vector<int>> out;
        std::vector<int> mask(max_entry, 0);
        std::fill(mask.begin(), mask.begin() + size, 1);
        std::sort(mask.begin(), mask.end());
        do {
            std::vector<int> chosen;
            for (int v = 1; v <= max_entry; ++v)
                if (mask[v - 1]) chosen.push_back(v);
            out.push_back(std::move(chosen));
        } while (std::next_permutation(mask.begin(), mask.end()));
        return out;
    };
    std::vector<Tableau> out;
    if (lambda.row1 > max_entry || lambda.row2 > max_entry) return out;
    for (const auto& row1 : subsets_of_size(lambda.row1)) {
        for (const auto& row2 : subsets_of_size(lambda.row2)) {
            std::set<int> values(row1.begin(), row1.end());
            values.insert(row2.begin(), row2.end());
            if (static_cast<int>(values.size()) != max_entry) continue;
            bool columns_ok = true;
            for (int c = 0; c < lambda.row2 && columns_ok; ++c)
                columns_ok = row1[c] < row2[c];
            if (columns_ok) out.emplace_back(std::vector<std::vector<int>>{row1, row2});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::int64_t hook_length_count(const Partition& shape) {
    const auto& rows = shape.parts();
    std::vector<int> cols;  // conjugate
    for (int c = 1; c <= rows[0]; ++c) {
        int h = 0;
        for (int r : rows)
            if (r >= c) ++h;
        cols.push_back(h);
    }
    std::int64_t numerator = 1;
    for (int v = 1; v <= shape.size(); ++v) numerator *= v;
    std::int64_t denom = 1;
    for (int r = 1; r <= shape.length(); ++r)
        for (int c = 1; c <= rows[r - 1]; ++c)
            denom *= (rows[r - 1] - c) + (cols[c - 1] - r) + 1;
    return numerator / denom;
}

/// SYT descent set by the direct rule: i is a descent when i sits in a
/// strictly higher row than i+1.
inline std::set<int> syt_descents_strictly_above(const Tableau& t) {
    std::set<int> out;
    const int n = t.size();
    std::vector<int> row_of(n + 1, 0);
    for (int r = 1; r <= t.row_count(); ++r)
        for (int v : t.rows()[r - 1]) row_of[v] = r;
    for (int i = 1; i < n; ++i)
        if (row_of[i] < row_of[i + 1]) out.insert(i);
    return out;
}

/// Independent re-statement of the path crossing conditions.
inline bool crossing_ok(const Tableau& t, int v, LatticePoint a, LatticePoint b) {
    if (b.i == a.i && b.j == a.j + 1)
        return t.at(a.i, b.j) < v && t.at(a.i + 1, b.j) >= v;
    if (b.j == a.j && b.i == a.i - 1)
        return t.at(a.i, a.j) < v && t.at(a.i, a.j + 1) >= v;
    return false;
}

/// Every monotone up/right path between the endpoints whose crossings all
/// satisfy the separating conditions, found by exhaustive search.
inline std::vector<LatticePath> valid_paths_exhaustive(const Tableau& t, int v,
                                                       LatticePoint start, LatticePoint end) {
    std::vector<LatticePath> out;
    LatticePath current{start};
    auto rec = [&](auto&& self) -> void {
        const LatticePoint here = current.back();
        if (here == end) {
            out.push_back(current);
            return;
        }
        const LatticePoint up{here.i - 1, here.j};
        if (here.i > end.i && crossing_ok(t, v, here, up)) {
            current.push_back(up);
            self(self);
            current.pop_back();
        }
        const LatticePoint right{here.i, here.j + 1};
        if (here.j < end.j && crossing_ok(t, v, here, right)) {
            current.push_back(right);
            self(self);
            current.pop_back();
        }
    };
    rec(rec);
    return out;
}

}  // namespace oracles
