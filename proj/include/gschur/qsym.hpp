#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "gschur/core.hpp"
#include "gschur/tableau.hpp"

namespace gschur {

/// Exact integer linear combination of fundamental quasisymmetric basis
/// elements, keyed by index composition. Zero coefficients are never stored.
class QSymExpr {
public:
    QSymExpr() = default;

    const std::map<Composition, std::int64_t>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    std::int64_t coeff(const Composition& alpha) const {
        auto it = terms_.find(alpha);
        return it == terms_.end() ? 0 : it->second;
    }

    void add(const Composition& alpha, std::int64_t c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(alpha, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    QSymExpr& operator+=(const QSymExpr& other) {
        for (const auto& [alpha, c] : other.terms_) add(alpha, c);
        return *this;
    }

    QSymExpr& operator-=(const QSymExpr& other) {
        for (const auto& [alpha, c] : other.terms_) add(alpha, -c);
        return *this;
    }

    friend QSymExpr operator+(QSymExpr a, const QSymExpr& b) { return a += b; }
    friend QSymExpr operator-(QSymExpr a, const QSymExpr& b) { return a -= b; }
    friend bool operator==(const QSymExpr&, const QSymExpr&) = default;

    /// Degrees carrying at least one term, ascending.
    std::set<int> degrees() const {
        std::set<int> out;
        for (const auto& [alpha, c] : terms_) out.insert(alpha.size());
        return out;
    }

    /// The homogeneous component of the given degree.
    QSymExpr component(int degree) const {
        QSymExpr out;
        for (const auto& [alpha, c] : terms_)
            if (alpha.size() == degree) out.add(alpha, c);
        return out;
    }

private:
    std::map<Composition, std::int64_t> terms_;
};

/// The basis element F_alpha; F of the empty composition is the unit.
inline QSymExpr fundamental(const Composition& alpha) {
    QSymExpr out;
    out.add(alpha, 1);
    return out;
}

/// Schur function as the descent-composition sum over SYT(mu).
inline QSymExpr schur_via_syt(const Partition& mu) {
    QSymExpr out;
    const int n = mu.size();
    for (const Tableau& s : enumerate_syt(mu))
        out += fundamental(comp_of(descent_data(s).descents, n));
    return out;
}

/// The degree-m homogeneous component of the genomic Schur function: sum of
/// F over descent compositions of IGLT(lambda)_m. Zero when that set is empty.
inline QSymExpr genomic_component(TwoRowPartition lambda, int m) {
    QSymExpr out;
    for (const Tableau& t : enumerate_iglt(lambda, m))
        out += fundamental(comp_of(descent_data(t).descents, m));
    return out;
}

/// All nonzero homogeneous components (m, U_{lambda;m}); these occur exactly
/// for m in [l_lambda, n].
inline std::vector<std::pair<int, QSymExpr>> genomic_schur(TwoRowPartition lambda) {
    std::vector<std::pair<int, QSymExpr>> out;
    for (int m = 1; m <= lambda.n(); ++m) {
        QSymExpr comp = genomic_component(lambda, m);
        if (!comp.is_zero()) out.emplace_back(m, std::move(comp));
    }
    return out;
}

/// Outcome of comparing the genomic components against the Schur-side sums
/// over Par(lambda; m). On failure carries the first differing coefficient.
struct SchurExpansionCheck {
    bool ok = true;
    int m = 0;
    Composition comp;
    std::int64_t genomic_coeff = 0;
    std::int64_t schur_coeff = 0;
};

inline SchurExpansionCheck check_schur_expansion_at(TwoRowPartition lambda, int m) {
    SchurExpansionCheck out;
    QSymExpr lhs = genomic_component(lambda, m);
    QSymExpr rhs;
    for (const Partition& mu : par_candidates(lambda, m)) rhs += schur_via_syt(mu);
    if (lhs == rhs) return out;
    out.ok = false;
    out.m = m;
    QSymExpr diff = lhs - rhs;
    const Composition& alpha = diff.terms().begin()->first;
    out.comp = alpha;
    out.genomic_coeff = lhs.coeff(alpha);
    out.schur_coeff = rhs.coeff(alpha);
    return out;
}

/// Checks U_{lambda;m} = sum over Par(lambda;m) of s_mu for every m in
/// [l_lambda, n].
inline SchurExpansionCheck check_schur_expansion(TwoRowPartition lambda) {
    for (int m = l_lambda(lambda); m <= lambda.n(); ++m) {
        SchurExpansionCheck at = check_schur_expansion_at(lambda, m);
        if (!at.ok) return at;
    }
    return SchurExpansionCheck{};
}

/// Exact polynomial in a fixed number of variables, keyed by exponent vector.
class MonomialPoly {
public:
    explicit MonomialPoly(int num_vars) : num_vars_(num_vars) {
        if (num_vars < 1) throw std::invalid_argument("monomial poly needs at least one variable");
    }

    int num_vars() const noexcept { return num_vars_; }
    const std::map<std::vector<int>, std::int64_t>& terms() const noexcept { return terms_; }

    void add(const std::vector<int>& exponents, std::int64_t c) {
        if (static_cast<int>(exponents.size()) != num_vars_)
            throw std::invalid_argument("exponent vector length mismatch");
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(exponents, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// The polynomial with variables j and j+1 exchanged (1-based).
    MonomialPoly swap_adjacent(int j) const {
        if (j < 1 || j >= num_vars_) throw std::invalid_argument("variable index out of range");
        MonomialPoly out(num_vars_);
        for (const auto& [exps, c] : terms_) {
            std::vector<int> swapped = exps;
            std::swap(swapped[j - 1], swapped[j]);
            out.add(swapped, c);
        }
        return out;
    }

    friend bool operator==(const MonomialPoly&, const MonomialPoly&) = default;

private:
    int num_vars_;
    std::map<std::vector<int>, std::int64_t> terms_;
};

namespace detail {
inline void expand_fundamental_rec(const std::set<int>& strict_after, int pos, int degree,
                                   int min_var, int num_vars, std::vector<int>& exps,
                                   std::int64_t coeff, MonomialPoly& out) {
    if (pos == degree) {
        out.add(exps, coeff);
        return;
    }
    for (int var = min_var; var <= num_vars; ++var) {
        ++exps[var - 1];
        const int next_min = strict_after.count(pos + 1) ? var + 1 : var;
        expand_fundamental_rec(strict_after, pos + 1, degree, next_min, num_vars, exps, coeff,
                               out);
        --exps[var - 1];
    }
}
}  // namespace detail

/// Expands into monomials in variables x_1..x_N, substituting 0 for all
/// higher-indexed variables.
inline MonomialPoly expand_monomials(const QSymExpr& expr, int num_vars) {
    MonomialPoly out(num_vars);
    for (const auto& [alpha, c] : expr.terms()) {
        const std::set<int> strict = set_of(alpha);
        std::vector<int> exps(num_vars, 0);
        detail::expand_fundamental_rec(strict, 0, alpha.size(), 1, num_vars, exps, c, out);
    }
    return out;
}

/// Human-readable rendering, e.g. "F(1,2) + 2*F(2,1)". Zero renders as "0".
inline std::string to_string(const QSymExpr& expr) {
    if (expr.is_zero()) return "0";
    std::string out;
    for (const auto& [alpha, c] : expr.terms()) {
        if (!out.empty()) out += " + ";
        if (c != 1) out += std::to_string(c) + "*";
        out += "F(" + to_string(alpha) + ")";
    }
    return out;
}

}  // namespace gschur
