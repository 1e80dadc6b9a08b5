#pragma once

#include <string>
#include <vector>

#include "gschur/qsym.hpp"
#include "gschur/tableau.hpp"

namespace gschur {

/// Effect of one 0-Hecke generator on one basis element: annihilate, fix, or
/// send to a different basis element. General linear combinations never occur
/// for the actions modeled here.
struct GeneratorAction {
    enum class Kind : unsigned char { zero, fixed, image };

    Kind kind = Kind::fixed;
    int target = -1;  // basis index, only for Kind::image

    static GeneratorAction zero() { return {Kind::zero, -1}; }
    static GeneratorAction fixed() { return {Kind::fixed, -1}; }
    static GeneratorAction image(int t) { return {Kind::image, t}; }

    friend bool operator==(const GeneratorAction&, const GeneratorAction&) = default;
};

/// A 0-Hecke module with a combinatorial basis of tableaux and a total action
/// table for generators 1..strands-1.
struct HeckeModule {
    int strands = 0;
    std::vector<Tableau> basis;
    std::vector<std::vector<GeneratorAction>> action;  // [generator-1][basis index]

    int dimension() const noexcept { return static_cast<int>(basis.size()); }

    const GeneratorAction& at(int generator, int index) const {
        if (generator < 1 || generator >= strands)
            throw std::invalid_argument("generator index out of range");
        return action[generator - 1][index];
    }

    /// Applies one generator as a map on basis indices; -1 encodes zero.
    int apply(int generator, int index) const {
        if (index < 0) return -1;
        const GeneratorAction& a = at(generator, index);
        switch (a.kind) {
            case GeneratorAction::Kind::zero: return -1;
            case GeneratorAction::Kind::fixed: return index;
            case GeneratorAction::Kind::image: return a.target;
        }
        return -1;
    }
};

namespace detail {

inline std::map<Tableau, int> index_basis(const std::vector<Tableau>& basis) {
    std::map<Tableau, int> out;
    for (std::size_t i = 0; i < basis.size(); ++i) out.emplace(basis[i], static_cast<int>(i));
    return out;
}

inline int lookup_or_throw(const std::map<Tableau, int>& index, const Tableau& t) {
    auto it = index.find(t);
    if (it == index.end())
        throw std::logic_error("generator action left the basis: " + to_string(t));
    return it->second;
}

}  // namespace detail

/// The module on SYT(mu): pi_i fixes S when i is strictly left of i+1, kills
/// S when they share a column, and otherwise swaps i and i+1.
inline HeckeModule x_module(const Partition& mu) {
    HeckeModule out;
    out.strands = mu.size();
    out.basis = enumerate_syt(mu);
    const auto index = detail::index_basis(out.basis);
    out.action.assign(std::max(out.strands - 1, 0), {});
    for (int i = 1; i < out.strands; ++i) {
        auto& row = out.action[i - 1];
        row.reserve(out.basis.size());
        for (const Tableau& s : out.basis) {
            const Box lo = occurrences(s, i).top;
            const Box hi = occurrences(s, i + 1).top;
            if (lo.col < hi.col) {
                row.push_back(GeneratorAction::fixed());
            } else if (lo.col == hi.col) {
                row.push_back(GeneratorAction::zero());
            } else {
                auto rows = s.rows();
                rows[lo.row - 1][lo.col - 1] = i + 1;
                rows[hi.row - 1][hi.col - 1] = i;
                row.push_back(
                    GeneratorAction::image(detail::lookup_or_throw(index, Tableau(rows))));
            }
        }
    }
    return out;
}

namespace detail {

/// Swaps every occurrence of v and v+1.
inline Tableau swap_all(const Tableau& t, int v) {
    auto rows = t.rows();
    for (auto& row : rows)
        for (int& entry : row) {
            if (entry == v)
                entry = v + 1;
            else if (entry == v + 1)
                entry = v;
        }
    return Tableau(std::move(rows));
}

}  // namespace detail

/// The module on IGLT(lambda)_m: pi_i fixes T when i is not a descent, kills
/// T on attacking descents, and otherwise swaps all i's and (i+1)'s. Swap
/// results must land back in the basis; anything else signals a wrong
/// attacking classification.
inline HeckeModule g_module(TwoRowPartition lambda, int m) {
    if (m < l_lambda(lambda) || m > lambda.n())
        throw std::invalid_argument("g_module: m must lie in [l_lambda, n]");
    HeckeModule out;
    out.strands = m;
    out.basis = enumerate_iglt(lambda, m);
    const auto index = detail::index_basis(out.basis);
    out.action.assign(std::max(out.strands - 1, 0), {});
    std::vector<DescentData> descents;
    descents.reserve(out.basis.size());
    for (const Tableau& t : out.basis) descents.push_back(descent_data(t));
    for (int i = 1; i < out.strands; ++i) {
        auto& row = out.action[i - 1];
        row.reserve(out.basis.size());
        for (std::size_t b = 0; b < out.basis.size(); ++b) {
            const DescentData& d = descents[b];
            if (!d.descents.count(i)) {
                row.push_back(GeneratorAction::fixed());
            } else if (d.attacking.count(i)) {
                row.push_back(GeneratorAction::zero());
            } else {
                const Tableau swapped = detail::swap_all(out.basis[b], i);
                if (!is_increasing_gapless(swapped))
                    throw std::logic_error("non-attacking swap produced an invalid tableau: " +
                                           to_string(out.basis[b]));
                row.push_back(
                    GeneratorAction::image(detail::lookup_or_throw(index, swapped)));
            }
        }
    }
    return out;
}

/// Outcome of checking the defining relations on a module's action table.
struct RelationCheck {
    bool ok = true;
    std::string relation;  // first violated relation, e.g. "pi_2 braid"
    int basis_index = -1;
};

/// Verifies idempotence, the braid relation, and far commutation by composing
/// the action table as maps on basis indices (with zero absorbing).
inline RelationCheck check_relations(const HeckeModule& mod) {
    const int dim = mod.dimension();
    for (int i = 1; i < mod.strands; ++i) {
        for (int b = 0; b < dim; ++b) {
            if (mod.apply(i, mod.apply(i, b)) != mod.apply(i, b))
                return {false, "pi_" + std::to_string(i) + " idempotence", b};
        }
    }
    for (int i = 1; i + 1 < mod.strands; ++i) {
        for (int b = 0; b < dim; ++b) {
            const int lhs = mod.apply(i, mod.apply(i + 1, mod.apply(i, b)));
            const int rhs = mod.apply(i + 1, mod.apply(i, mod.apply(i + 1, b)));
            if (lhs != rhs)
                return {false,
                        "pi_" + std::to_string(i) + " pi_" + std::to_string(i + 1) + " braid", b};
        }
    }
    for (int i = 1; i < mod.strands; ++i) {
        for (int j = i + 2; j < mod.strands; ++j) {
            for (int b = 0; b < dim; ++b) {
                if (mod.apply(i, mod.apply(j, b)) != mod.apply(j, mod.apply(i, b)))
                    return {false,
                            "pi_" + std::to_string(i) + " pi_" + std::to_string(j) +
                                " commutation",
                            b};
            }
        }
    }
    return {};
}

/// Sum of F over the descent compositions of the basis. For the modules built
/// here this realizes the quasisymmetric characteristic.
inline QSymExpr characteristic_by_descents(const HeckeModule& mod) {
    QSymExpr out;
    for (const Tableau& t : mod.basis)
        out += fundamental(comp_of(descent_data(t).descents, mod.strands));
    return out;
}

}  // namespace gschur
