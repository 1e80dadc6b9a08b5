#pragma once

#include <atomic>
#include <map>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "gschur/bijection.hpp"
#include "gschur/hecke.hpp"
#include "gschur/qsym.hpp"
#include "gschur/tableau.hpp"

namespace gschur {

/// Grid point <i, j>: on the (i+1)st horizontal line from the top and the
/// (j+1)st vertical line from the left.
struct LatticePoint {
    int i = 0;
    int j = 0;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

using LatticePath = std::vector<LatticePoint>;

namespace detail {

/// Checks the separating conditions for one unit step of a path through the
/// extended filling: every horizontal crossing has above-entry < v <=
/// below-entry, every vertical crossing has left-entry < v <= right-entry.
inline bool crossing_valid(const Tableau& t, int v, LatticePoint from, LatticePoint to) {
    if (to.i == from.i && to.j == from.j + 1)  // rightward
        return t.at(from.i, to.j) < v && t.at(from.i + 1, to.j) >= v;
    if (to.j == from.j && to.i == from.i - 1)  // upward
        return t.at(from.i, from.j) < v && t.at(from.i, from.j + 1) >= v;
    return false;
}

inline bool path_valid(const Tableau& t, int v, const LatticePath& path) {
    for (std::size_t s = 0; s + 1 < path.size(); ++s)
        if (!crossing_valid(t, v, path[s], path[s + 1])) return false;
    return true;
}

}  // namespace detail

/// The unique monotone up/right lattice path from the bottom-left corner of
/// the bottommost box of v to the top-right corner of the topmost box,
/// separating entries < v from entries >= v. The frontier walk below is
/// validated crossing by crossing; a violation means the input was not a
/// valid increasing tableau.
inline LatticePath gamma_path(const Tableau& t, int v) {
    if (t.row_count() != 2)
        throw std::invalid_argument("gamma_path expects a two-row tableau");
    const OccurrenceCoords occ = occurrences(t, v);
    if (occ.top == occ.bottom) throw std::invalid_argument("value is not repeated");
    const int cb = occ.bottom.col;
    const int ct = occ.top.col;
    LatticePath path;
    path.push_back({2, cb - 1});
    path.push_back({1, cb - 1});
    for (int j = cb; j <= ct - 1; ++j) path.push_back({1, j});
    path.push_back({0, ct - 1});
    path.push_back({0, ct});
    if (!detail::path_valid(t, v, path))
        throw std::logic_error("no separating path for value " + std::to_string(v) + " in " +
                               to_string(t));
    return path;
}

/// One repeated value's contribution to the genome: its separating path and
/// its occupied boxes.
struct Gene {
    LatticePath path;
    std::vector<Box> boxes;  // sorted

    friend bool operator==(const Gene&, const Gene&) = default;
    friend auto operator<=>(const Gene&, const Gene&) = default;
};

/// The class invariant: genes of all repeated values, sorted by bottom-box
/// column (strictly increasing for two-row shapes). The carried values
/// themselves are deliberately forgotten.
struct GenomeKey {
    std::vector<Gene> genes;

    friend bool operator==(const GenomeKey&, const GenomeKey&) = default;
    friend auto operator<=>(const GenomeKey&, const GenomeKey&) = default;

    std::vector<int> bottom_columns() const {
        std::vector<int> out;
        for (const Gene& g : genes) out.push_back(g.boxes.back().col);
        return out;
    }

    std::vector<int> top_columns() const {
        std::vector<int> out;
        for (const Gene& g : genes) out.push_back(g.boxes.front().col);
        return out;
    }
};

inline GenomeKey genome_key(const Tableau& t) {
    GenomeKey key;
    for (int v : repeated_values(t)) {
        const OccurrenceCoords occ = occurrences(t, v);
        Gene gene{gamma_path(t, v), {occ.top, occ.bottom}};
        key.genes.push_back(std::move(gene));
    }
    std::sort(key.genes.begin(), key.genes.end(), [](const Gene& a, const Gene& b) {
        return a.boxes.back().col < b.boxes.back().col;
    });
    for (std::size_t i = 1; i < key.genes.size(); ++i)
        if (key.genes[i - 1].boxes.back().col >= key.genes[i].boxes.back().col)
            throw std::logic_error("gene bottom columns are not strictly increasing");
    return key;
}

/// An equivalence class of IGLT(lambda)_m under equality of genome keys.
struct EquivClass {
    TwoRowPartition lambda{1, 1};
    int m = 0;
    GenomeKey key;
    std::vector<Tableau> members;  // enumeration order
    int family = 1;                // 1 or 2
};

/// Family of a class: 2 iff a gene occupies the last box (2, lambda2) of the
/// second row. Cross-checked against the member criterion (that box carries a
/// repeated value) and against the collapse-image shapes of every member.
inline int class_family(const EquivClass& cls) {
    const Box corner{2, cls.lambda.row2};
    bool by_key = false;
    for (const Gene& g : cls.key.genes)
        for (const Box& b : g.boxes)
            if (b == corner) by_key = true;
    const int family = by_key ? 2 : 1;

    const auto variant = lambda_variant(cls.lambda, cls.m, family);
    if (!variant)
        throw std::logic_error("family shape is empty for a nonempty class");
    for (const Tableau& t : cls.members) {
        const int corner_value = t.at(corner.row, corner.col);
        const auto reps = repeated_values(t);
        const bool by_member =
            std::find(reps.begin(), reps.end(), corner_value) != reps.end();
        if (by_member != by_key)
            throw std::logic_error("family criteria disagree on " + to_string(t));
        if (phi(t).output.shape() != *variant)
            throw std::logic_error("collapse image shape mismatch for " + to_string(t));
    }
    return family;
}

/// Partitions IGLT(lambda)_m into genome classes, in order of first
/// appearance within the canonical enumeration.
inline std::vector<EquivClass> equivalence_classes(TwoRowPartition lambda, int m) {
    if (m < l_lambda(lambda) || m > lambda.n())
        throw std::invalid_argument("equivalence_classes: m must lie in [l_lambda, n]");
    std::vector<EquivClass> out;
    std::map<GenomeKey, std::size_t> index;
    for (Tableau& t : enumerate_iglt(lambda, m)) {
        GenomeKey key = genome_key(t);
        auto it = index.find(key);
        if (it == index.end()) {
            it = index.emplace(std::move(key), out.size()).first;
            out.push_back(EquivClass{lambda, m, it->first, {}, 1});
        }
        out[it->second].members.push_back(std::move(t));
    }
    for (EquivClass& cls : out) cls.family = class_family(cls);
    return out;
}

namespace detail {
inline std::vector<int> concat_order_vector(const EquivClass& e) {
    std::vector<int> v = e.key.bottom_columns();
    const std::vector<int> tops = e.key.top_columns();
    v.insert(v.end(), tops.begin(), tops.end());
    return v;
}
}  // namespace detail

/// Refined preorder: componentwise on bottom columns AND top columns, genes
/// aligned by sorted bottom column. Strengthens the bottom-column-only order
/// so that every quotient transition strictly decreases.
inline bool order_leq(const EquivClass& a, const EquivClass& b) {
    if (a.key.genes.size() != b.key.genes.size())
        throw std::invalid_argument("classes have different gene counts");
    const auto cb_a = a.key.bottom_columns(), cb_b = b.key.bottom_columns();
    const auto ct_a = a.key.top_columns(), ct_b = b.key.top_columns();
    for (std::size_t k = 0; k < cb_a.size(); ++k)
        if (cb_a[k] > cb_b[k] || ct_a[k] > ct_b[k]) return false;
    return true;
}

/// The coarser preorder on bottom columns only. Kept for
/// reporting; distinct classes can tie under it.
inline bool coarse_order_leq(const EquivClass& a, const EquivClass& b) {
    if (a.key.genes.size() != b.key.genes.size())
        throw std::invalid_argument("classes have different gene counts");
    const auto cb_a = a.key.bottom_columns(), cb_b = b.key.bottom_columns();
    for (std::size_t k = 0; k < cb_a.size(); ++k)
        if (cb_a[k] > cb_b[k]) return false;
    return true;
}

/// Deterministic linear extension of order_leq: ascending lexicographic order
/// on the concatenated (bottom columns, top columns) vector. Returns indices
/// into the input.
inline std::vector<int> linear_extension(const std::vector<EquivClass>& classes) {
    std::vector<int> order(classes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return detail::concat_order_vector(classes[a]) < detail::concat_order_vector(classes[b]);
    });
    return order;
}

struct VerifyWitness {
    std::string check;  // "closure" or "quotient"
    int stage = -1;     // 1-based position in the filtration
    int generator = -1;
    std::string tableau;
};

struct ExtensionSearch {
    long long total = 0;
    long long passing = 0;
};

struct VariantGuardRecord {
    int x = 1;
    bool strict_guard = false;  // the stricter strict-inequality rule
    bool nonempty = false;      // constructed-partition rule actually used
};

struct FamilyReport {
    int x = 1;
    Partition shape;
    std::vector<EquivClass> classes;  // discovery order
    std::vector<int> order;           // linear extension, indices into classes
    std::vector<std::pair<int, int>> coarse_order_ties;
    bool closure_ok = true;
    bool quotient_iso_ok = true;
    bool c1_ok = true;
    bool relations_ok = true;
    std::optional<VerifyWitness> witness;
    std::optional<ExtensionSearch> extensions;

    bool ok() const { return closure_ok && quotient_iso_ok && c1_ok && relations_ok; }
};

struct FiltrationReport {
    TwoRowPartition lambda{1, 1};
    int m = 0;
    std::vector<FamilyReport> families;
    std::vector<VariantGuardRecord> guards;
    bool g_relations_ok = true;
    bool coverage_ok = true;  // classes partition into families matching SYT counts
    bool schur_expansion_ok = true;
    bool verified = false;
};

struct VerifyOptions {
    bool all_extensions = false;  // exhaust all linear extensions of the coarse order
    bool reverse_order = false;   // diagnostic: deliberately reverse the extension
};

namespace detail {

struct FamilyMember {
    int g_index = -1;  // index in the IGLT basis
    int x_index = -1;  // index of the collapse image in the SYT basis
};

struct FiltrationOutcome {
    bool closure_ok = true;
    bool quotient_ok = true;
    std::optional<VerifyWitness> witness;
};

/// Runs the per-stage closure and quotient-isomorphism checks for one family
/// under the given class order.
inline FiltrationOutcome run_filtration_checks(
    const HeckeModule& g_mod, const HeckeModule& x_mod,
    const std::vector<std::vector<FamilyMember>>& class_members,
    const std::vector<int>& order, const std::vector<int>& image_index) {
    FiltrationOutcome out;
    std::vector<char> in_prefix(x_mod.dimension(), 0);
    auto record = [&](const char* check, int stage, int gen, int g_index, bool& flag) {
        flag = false;
        if (!out.witness)
            out.witness =
                VerifyWitness{check, stage, gen, to_string(g_mod.basis[g_index])};
    };
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        const int stage = static_cast<int>(pos) + 1;
        const auto& members = class_members[order[pos]];
        std::vector<char> in_stage(x_mod.dimension(), 0);
        for (const FamilyMember& mr : members) in_stage[mr.x_index] = 1;
        for (const FamilyMember& mr : members) {
            for (int gen = 1; gen < g_mod.strands; ++gen) {
                const int px = x_mod.apply(gen, mr.x_index);
                if (px != -1 && !in_prefix[px] && !in_stage[px])
                    record("closure", stage, gen, mr.g_index, out.closure_ok);
                const int pg = g_mod.apply(gen, mr.g_index);
                bool quotient_ok = true;
                if (pg == mr.g_index)
                    quotient_ok = px == mr.x_index;
                else if (pg >= 0)
                    quotient_ok = px == image_index[pg];
                else
                    quotient_ok = px == -1 || in_prefix[px];
                if (!quotient_ok)
                    record("quotient", stage, gen, mr.g_index, out.quotient_ok);
            }
        }
        for (const FamilyMember& mr : members) in_prefix[mr.x_index] = 1;
    }
    return out;
}

/// Enumerates every linear extension of the coarse (bottom-column) order and
/// counts how many pass the filtration checks.
inline void extensions_rec(const std::vector<EquivClass>& classes,
                           const std::vector<std::vector<FamilyMember>>& class_members,
                           const HeckeModule& g_mod, const HeckeModule& x_mod,
                           const std::vector<int>& image_index, std::vector<int>& current,
                           std::vector<char>& used, ExtensionSearch& search) {
    if (current.size() == classes.size()) {
        ++search.total;
        const FiltrationOutcome o =
            run_filtration_checks(g_mod, x_mod, class_members, current, image_index);
        if (o.closure_ok && o.quotient_ok) ++search.passing;
        return;
    }
    for (std::size_t c = 0; c < classes.size(); ++c) {
        if (used[c]) continue;
        bool minimal = true;
        for (std::size_t d = 0; d < classes.size() && minimal; ++d) {
            if (d == c || used[d]) continue;
            if (coarse_order_leq(classes[d], classes[c]) &&
                !coarse_order_leq(classes[c], classes[d]))
                minimal = false;  // d must come first
        }
        if (!minimal) continue;
        used[c] = 1;
        current.push_back(static_cast<int>(c));
        extensions_rec(classes, class_members, g_mod, x_mod, image_index, current, used, search);
        current.pop_back();
        used[c] = 0;
    }
}

}  // namespace detail

/// Checks the filtration theorem for one (lambda, m): per family, the staged
/// closure of the SYT module under the linear extension, the stagewise
/// quotient isomorphism with the genome-class modules, and the characteristic
/// identity; plus relation checks and the Schur-expansion equality. Never
/// throws on mathematical failure; the report carries witnesses instead.
inline FiltrationReport verify_theorem(TwoRowPartition lambda, int m,
                                       const VerifyOptions& opts = {}) {
    if (m < l_lambda(lambda) || m > lambda.n())
        throw std::invalid_argument("verify_theorem: m must lie in [l_lambda, n]");
    FiltrationReport rep;
    rep.lambda = lambda;
    rep.m = m;

    const HeckeModule g_mod = g_module(lambda, m);
    rep.g_relations_ok = check_relations(g_mod).ok;
    const auto g_index = detail::index_basis(g_mod.basis);
    std::vector<EquivClass> classes = equivalence_classes(lambda, m);

    for (int x = 1; x <= 2; ++x)
        rep.guards.push_back(
            {x, lambda_variant_strict_guard(lambda, m, x), lambda_variant(lambda, m, x).has_value()});

    // Collapse image index per IGLT basis element, filled per family below.
    std::vector<int> image_index(g_mod.basis.size(), -1);

    for (int x = 1; x <= 2; ++x) {
        std::vector<EquivClass> fam;
        for (const EquivClass& cls : classes)
            if (cls.family == x) fam.push_back(cls);
        const auto variant = lambda_variant(lambda, m, x);
        if (!variant) {
            if (!fam.empty()) rep.coverage_ok = false;
            continue;
        }

        FamilyReport fr;
        fr.x = x;
        fr.shape = *variant;
        fr.classes = fam;

        const HeckeModule x_mod = x_module(*variant);
        fr.relations_ok = check_relations(x_mod).ok;
        const auto x_index = detail::index_basis(x_mod.basis);

        std::vector<std::vector<detail::FamilyMember>> class_members(fam.size());
        std::vector<char> image_seen(x_mod.dimension(), 0);
        int total_members = 0;
        for (std::size_t c = 0; c < fam.size(); ++c) {
            for (const Tableau& t : fam[c].members) {
                detail::FamilyMember mr;
                mr.g_index = detail::lookup_or_throw(g_index, t);
                mr.x_index = detail::lookup_or_throw(x_index, phi(t).output);
                if (image_seen[mr.x_index]) rep.coverage_ok = false;  // injectivity
                image_seen[mr.x_index] = 1;
                image_index[mr.g_index] = mr.x_index;
                class_members[c].push_back(mr);
                ++total_members;
            }
        }
        if (total_members != x_mod.dimension()) rep.coverage_ok = false;  // surjectivity

        fr.order = linear_extension(fam);
        if (opts.reverse_order) std::reverse(fr.order.begin(), fr.order.end());
        for (std::size_t a = 0; a < fam.size(); ++a)
            for (std::size_t b = a + 1; b < fam.size(); ++b)
                if (coarse_order_leq(fam[a], fam[b]) && coarse_order_leq(fam[b], fam[a]))
                    fr.coarse_order_ties.emplace_back(static_cast<int>(a),
                                                       static_cast<int>(b));

        const detail::FiltrationOutcome outcome =
            detail::run_filtration_checks(g_mod, x_mod, class_members, fr.order, image_index);
        fr.closure_ok = outcome.closure_ok;
        fr.quotient_iso_ok = outcome.quotient_ok;
        fr.witness = outcome.witness;

        QSymExpr family_characteristic;
        for (const EquivClass& cls : fam)
            for (const Tableau& t : cls.members)
                family_characteristic += fundamental(comp_of(descent_data(t).descents, m));
        fr.c1_ok = family_characteristic == schur_via_syt(*variant);

        if (opts.all_extensions) {
            ExtensionSearch search;
            std::vector<int> current;
            std::vector<char> used(fam.size(), 0);
            detail::extensions_rec(fam, class_members, g_mod, x_mod, image_index, current,
                                   used, search);
            fr.extensions = search;
        }

        rep.families.push_back(std::move(fr));
    }

    rep.schur_expansion_ok = check_schur_expansion_at(lambda, m).ok;

    rep.verified = rep.g_relations_ok && rep.coverage_ok && rep.schur_expansion_ok;
    for (const FamilyReport& fr : rep.families) rep.verified = rep.verified && fr.ok();
    return rep;
}

/// All (lambda, m) verification cases for two-row shapes with n <= n_max, in
/// canonical order: n ascending, first row descending, m ascending.
inline std::vector<std::pair<TwoRowPartition, int>> sweep_cases(int n_max) {
    std::vector<std::pair<TwoRowPartition, int>> out;
    for (int n = 2; n <= n_max; ++n)
        for (int r1 = n - 1; r1 >= (n + 1) / 2; --r1) {
            const TwoRowPartition lambda{r1, n - r1};
            for (int m = l_lambda(lambda); m <= n; ++m) out.emplace_back(lambda, m);
        }
    return out;
}

/// Runs verify_theorem over all cases up to n_max, distributing cases over a
/// worker pool. Report order is canonical regardless of the job count.
inline std::vector<FiltrationReport> sweep(int n_max, int jobs = 1,
                                           const VerifyOptions& opts = {}) {
    if (n_max < 2) throw std::invalid_argument("sweep: n_max must be at least 2");
    if (jobs < 1) throw std::invalid_argument("sweep: jobs must be at least 1");
    const auto cases = sweep_cases(n_max);
    std::vector<FiltrationReport> reports(cases.size());
    if (jobs == 1) {
        for (std::size_t i = 0; i < cases.size(); ++i)
            reports[i] = verify_theorem(cases[i].first, cases[i].second, opts);
        return reports;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    const int width = static_cast<int>(std::min<std::size_t>(jobs, cases.size()));
    workers.reserve(width);
    for (int w = 0; w < width; ++w) {
        workers.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < cases.size(); i = next.fetch_add(1))
                reports[i] = verify_theorem(cases[i].first, cases[i].second, opts);
        });
    }
    for (std::thread& t : workers) t.join();
    return reports;
}

}  // namespace gschur
