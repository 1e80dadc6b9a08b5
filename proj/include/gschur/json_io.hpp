#pragma once

#include <json.hpp>

#include "gschur/genome.hpp"
#include "gschur/hecke.hpp"
#include "gschur/qsym.hpp"

namespace gschur {

using json = nlohmann::ordered_json;

/// [{"comp":[...],"coeff":c}, ...] sorted lexicographically by comp.
inline json qsym_json(const QSymExpr& expr) {
    json out = json::array();
    for (const auto& [alpha, c] : expr.terms())
        out.push_back({{"comp", alpha.parts()}, {"coeff", c}});
    return out;
}

/// {"m":int,"basis":[...],"action":{"i":{"b":"zero"|"fixed"|target}}}.
inline json module_json(const HeckeModule& mod) {
    json out;
    out["m"] = mod.strands;
    json basis = json::array();
    for (const Tableau& t : mod.basis) basis.push_back(to_string(t));
    out["basis"] = std::move(basis);
    json action = json::object();
    for (int i = 1; i < mod.strands; ++i) {
        json row = json::object();
        for (int b = 0; b < mod.dimension(); ++b) {
            const GeneratorAction& a = mod.at(i, b);
            switch (a.kind) {
                case GeneratorAction::Kind::zero: row[std::to_string(b)] = "zero"; break;
                case GeneratorAction::Kind::fixed: row[std::to_string(b)] = "fixed"; break;
                case GeneratorAction::Kind::image: row[std::to_string(b)] = a.target; break;
            }
        }
        action[std::to_string(i)] = std::move(row);
    }
    out["action"] = std::move(action);
    return out;
}

inline json gene_json(const Gene& gene) {
    json boxes = json::array();
    for (const Box& b : gene.boxes) boxes.push_back({b.row, b.col});
    json path = json::array();
    for (const LatticePoint& p : gene.path) path.push_back({p.i, p.j});
    return {{"boxes", std::move(boxes)}, {"path", std::move(path)}};
}

/// {"members":[...],"key":[{"boxes":...,"path":...}]}.
inline json class_json(const EquivClass& cls) {
    json members = json::array();
    for (const Tableau& t : cls.members) members.push_back(to_string(t));
    json key = json::array();
    for (const Gene& g : cls.key.genes) key.push_back(gene_json(g));
    return {{"members", std::move(members)}, {"key", std::move(key)}};
}

inline json witness_json(const VerifyWitness& w) {
    return {{"check", w.check}, {"stage", w.stage}, {"generator", w.generator},
            {"tableau", w.tableau}};
}

inline json report_json(const FiltrationReport& rep) {
    json out;
    out["lambda"] = {rep.lambda.row1, rep.lambda.row2};
    out["m"] = rep.m;
    json families = json::array();
    for (const FamilyReport& fr : rep.families) {
        json fj;
        fj["x"] = fr.x;
        fj["shape"] = fr.shape.parts();
        json classes = json::array();
        for (const EquivClass& cls : fr.classes) classes.push_back(class_json(cls));
        fj["classes"] = std::move(classes);
        fj["order"] = fr.order;
        fj["closure_ok"] = fr.closure_ok;
        fj["quotient_iso_ok"] = fr.quotient_iso_ok;
        fj["c1_ok"] = fr.c1_ok;
        fj["relations_ok"] = fr.relations_ok;
        json ties = json::array();
        for (const auto& [a, b] : fr.coarse_order_ties) ties.push_back({a, b});
        fj["coarse_order_ties"] = std::move(ties);
        if (fr.witness) fj["witness"] = witness_json(*fr.witness);
        if (fr.extensions)
            fj["extensions"] = {{"total", fr.extensions->total},
                                {"passing", fr.extensions->passing}};
        families.push_back(std::move(fj));
    }
    out["families"] = std::move(families);
    out["schur_expansion_ok"] = rep.schur_expansion_ok;
    out["verified"] = rep.verified;
    json guards = json::array();
    for (const VariantGuardRecord& g : rep.guards)
        guards.push_back(
            {{"x", g.x}, {"strict_guard", g.strict_guard}, {"nonempty", g.nonempty}});
    out["guards"] = std::move(guards);
    out["g_relations_ok"] = rep.g_relations_ok;
    out["coverage_ok"] = rep.coverage_ok;
    return out;
}

}  // namespace gschur
