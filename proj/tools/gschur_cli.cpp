// Command-line front end: enumeration, quasisymmetric expansions, genome
// classes, and the filtration verifier. Exit codes: 0 success/verified,
// 1 mathematical counterexample, 2 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "gschur/gschur.hpp"

namespace {

using namespace gschur;

constexpr int exit_ok = 0;
constexpr int exit_counterexample = 1;
constexpr int exit_usage = 2;

int default_jobs() {
    if (const char* env = std::getenv("GSCHUR_JOBS")) {
        const int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

constexpr int max_cli_size = 64;

TwoRowPartition parse_two_row(const std::string& text) {
    const Partition p = parse_partition(text);
    if (p.length() != 2) throw std::invalid_argument("shape must have exactly two rows");
    if (p.size() > max_cli_size) throw std::invalid_argument("shape too large for the CLI");
    return {p.parts()[0], p.parts()[1]};
}

struct CliConfig {
    std::string shape;
    int max_entry = 0;
    int degree = 0;
    int n_max = 0;
    int jobs = default_jobs();
    bool json_output = false;
    bool show_schur = false;
    bool all_extensions = false;
    bool reverse_order = false;
};

int cmd_enumerate_syt(const CliConfig& cfg) {
    const Partition mu = parse_partition(cfg.shape);
    if (mu.empty()) throw std::invalid_argument("shape must be nonempty");
    if (mu.size() > max_cli_size) throw std::invalid_argument("shape too large for the CLI");
    for (const Tableau& t : enumerate_syt(mu)) std::cout << to_string(t) << "\n";
    return exit_ok;
}

int cmd_enumerate_iglt(const CliConfig& cfg) {
    const TwoRowPartition lambda = parse_two_row(cfg.shape);
    if (cfg.max_entry < 1) throw std::invalid_argument("--max must be at least 1");
    for (const Tableau& t : enumerate_iglt(lambda, cfg.max_entry))
        std::cout << to_string(t) << "\n";
    return exit_ok;
}

int cmd_expand(const CliConfig& cfg) {
    const TwoRowPartition lambda = parse_two_row(cfg.shape);
    if (cfg.degree != 0 && (cfg.degree < 1 || cfg.degree > lambda.n()))
        throw std::invalid_argument("--degree must lie in [1, n]");

    std::vector<int> degrees;
    if (cfg.degree != 0) {
        degrees.push_back(cfg.degree);
    } else {
        for (int m = l_lambda(lambda); m <= lambda.n(); ++m) degrees.push_back(m);
    }

    if (cfg.json_output) {
        json out;
        out["lambda"] = {lambda.row1, lambda.row2};
        json comps = json::array();
        for (int m : degrees) {
            json cj;
            cj["m"] = m;
            cj["terms"] = qsym_json(genomic_component(lambda, m));
            if (cfg.show_schur) {
                json par = json::array();
                QSymExpr schur_side;
                for (const Partition& mu : par_candidates(lambda, m)) {
                    par.push_back(mu.parts());
                    schur_side += schur_via_syt(mu);
                }
                cj["par"] = std::move(par);
                cj["schur_terms"] = qsym_json(schur_side);
                cj["matches"] = schur_side == genomic_component(lambda, m);
            }
            comps.push_back(std::move(cj));
        }
        out["components"] = std::move(comps);
        std::cout << out.dump(2) << "\n";
        return exit_ok;
    }

    for (int m : degrees) {
        const QSymExpr comp = genomic_component(lambda, m);
        std::cout << "degree " << m << ": " << to_string(comp) << "\n";
        if (cfg.show_schur && m >= l_lambda(lambda)) {
            QSymExpr schur_side;
            std::string par_text;
            for (const Partition& mu : par_candidates(lambda, m)) {
                if (!par_text.empty()) par_text += " ";
                par_text += "(" + to_string(mu) + ")";
                schur_side += schur_via_syt(mu);
            }
            std::cout << "  Par: " << par_text
                      << "  matches: " << (schur_side == comp ? "yes" : "NO") << "\n";
        }
    }
    return exit_ok;
}

int cmd_classes(const CliConfig& cfg) {
    const TwoRowPartition lambda = parse_two_row(cfg.shape);
    if (cfg.max_entry < l_lambda(lambda) || cfg.max_entry > lambda.n())
        throw std::invalid_argument("--max must lie in [l_lambda, n]");
    const auto classes = equivalence_classes(lambda, cfg.max_entry);

    if (cfg.json_output) {
        json out;
        out["lambda"] = {lambda.row1, lambda.row2};
        out["m"] = cfg.max_entry;
        json arr = json::array();
        for (const EquivClass& cls : classes) {
            json cj = class_json(cls);
            cj["family"] = cls.family;
            arr.push_back(std::move(cj));
        }
        out["classes"] = std::move(arr);
        std::cout << out.dump(2) << "\n";
        return exit_ok;
    }

    for (std::size_t i = 0; i < classes.size(); ++i) {
        const EquivClass& cls = classes[i];
        std::cout << "class " << i << " [family " << cls.family << "]";
        std::string key_text;
        for (const Gene& g : cls.key.genes) {
            if (!key_text.empty()) key_text += "; ";
            key_text += "(cb=" + std::to_string(g.boxes.back().col) +
                        ",ct=" + std::to_string(g.boxes.front().col) + ")";
        }
        std::cout << " key: " << (key_text.empty() ? "-" : key_text) << "\n";
        for (const Tableau& t : cls.members) std::cout << "  " << to_string(t) << "\n";
    }
    return exit_ok;
}

void render_report_text(const FiltrationReport& rep) {
    std::cout << "lambda=(" << rep.lambda.row1 << "," << rep.lambda.row2 << ") m=" << rep.m
              << ": " << (rep.verified ? "verified" : "FAILED") << "\n";
    for (const FamilyReport& fr : rep.families) {
        std::cout << "  family " << fr.x << " shape (" << to_string(fr.shape)
                  << "): classes=" << fr.classes.size()
                  << " closure=" << (fr.closure_ok ? "ok" : "FAIL")
                  << " quotient=" << (fr.quotient_iso_ok ? "ok" : "FAIL")
                  << " c1=" << (fr.c1_ok ? "ok" : "FAIL")
                  << " relations=" << (fr.relations_ok ? "ok" : "FAIL");
        if (!fr.coarse_order_ties.empty())
            std::cout << " coarse-order-ties=" << fr.coarse_order_ties.size();
        if (fr.extensions)
            std::cout << " extensions=" << fr.extensions->passing << "/"
                      << fr.extensions->total << " pass";
        std::cout << "\n";
        if (fr.witness)
            std::cout << "    counterexample: " << fr.witness->check << " at stage "
                      << fr.witness->stage << ", generator " << fr.witness->generator
                      << ", tableau " << fr.witness->tableau << "\n";
    }
    std::cout << "  schur-expansion=" << (rep.schur_expansion_ok ? "ok" : "FAIL")
              << " relations(G)=" << (rep.g_relations_ok ? "ok" : "FAIL")
              << " coverage=" << (rep.coverage_ok ? "ok" : "FAIL") << "\n";
}

int cmd_verify(const CliConfig& cfg) {
    VerifyOptions opts;
    opts.all_extensions = cfg.all_extensions;
    opts.reverse_order = cfg.reverse_order;

    if (cfg.n_max > 0) {
        if (cfg.n_max < 2) throw std::invalid_argument("--nmax must be at least 2");
        if (cfg.jobs < 1) throw std::invalid_argument("--jobs must be at least 1");
        const auto reports = sweep(cfg.n_max, cfg.jobs, opts);
        bool all_ok = true;
        for (const FiltrationReport& rep : reports) all_ok = all_ok && rep.verified;
        if (cfg.json_output) {
            json out;
            out["nmax"] = cfg.n_max;
            json arr = json::array();
            for (const FiltrationReport& rep : reports) arr.push_back(report_json(rep));
            out["cases"] = std::move(arr);
            out["all_verified"] = all_ok;
            std::cout << out.dump(2) << "\n";
        } else {
            int ok_count = 0;
            for (const FiltrationReport& rep : reports) {
                render_report_text(rep);
                if (rep.verified) ++ok_count;
            }
            std::cout << "verified " << ok_count << "/" << reports.size() << " cases\n";
        }
        return all_ok ? exit_ok : exit_counterexample;
    }

    const TwoRowPartition lambda = parse_two_row(cfg.shape);
    if (cfg.max_entry < l_lambda(lambda) || cfg.max_entry > lambda.n())
        throw std::invalid_argument("--max must lie in [l_lambda, n]");
    const FiltrationReport rep = verify_theorem(lambda, cfg.max_entry, opts);
    if (cfg.json_output)
        std::cout << report_json(rep).dump(2) << "\n";
    else
        render_report_text(rep);
    return rep.verified ? exit_ok : exit_counterexample;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact combinatorics of genomic Schur functions: tableau enumeration, "
                 "0-Hecke module actions, the IGLT-to-SYT bijection, and a machine "
                 "verifier for the genome filtration of two-row Schur expansions"};
    app.require_subcommand(1);
    CliConfig cfg;

    auto* syt = app.add_subcommand("enumerate-syt", "List standard Young tableaux of a shape");
    syt->add_option("--shape", cfg.shape, "partition, e.g. 3,2")->required();

    auto* iglt = app.add_subcommand("enumerate-iglt",
                                    "List increasing gapless tableaux of a two-row shape");
    iglt->add_option("--shape", cfg.shape, "two-row partition, e.g. 3,2")->required();
    iglt->add_option("--max", cfg.max_entry, "maximum entry")->required();

    auto* expand = app.add_subcommand(
        "expand", "Fundamental-basis expansion of the genomic Schur function");
    expand->add_option("--shape", cfg.shape, "two-row partition")->required();
    expand->add_option("--degree", cfg.degree, "restrict to one homogeneous degree");
    expand->add_flag("--schur", cfg.show_schur, "also show the Schur-side expansion");
    expand->add_flag("--json", cfg.json_output, "machine-readable output");

    auto* classes = app.add_subcommand("classes", "Genome equivalence classes of IGLT");
    classes->add_option("--shape", cfg.shape, "two-row partition")->required();
    classes->add_option("--max", cfg.max_entry, "maximum entry")->required();
    classes->add_flag("--json", cfg.json_output, "machine-readable output");

    auto* verify = app.add_subcommand("verify", "Check the genome filtration of the "
                                                "Schur expansion");
    verify->add_option("--shape", cfg.shape, "two-row partition");
    verify->add_option("--max", cfg.max_entry, "maximum entry");
    verify->add_option("--nmax", cfg.n_max, "sweep all two-row shapes with n <= nmax");
    verify->add_option("--jobs", cfg.jobs, "parallel workers for the sweep");
    verify->add_flag("--json", cfg.json_output, "machine-readable output");
    verify->add_flag("--all-extensions", cfg.all_extensions,
                     "exhaust every linear extension of the coarse class order "
                     "(factorial cost; meant for small n)");
    verify->add_flag("--reverse-order", cfg.reverse_order,
                     "diagnostic: reverse the linear extension (negative control)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (syt->parsed()) return cmd_enumerate_syt(cfg);
        if (iglt->parsed()) return cmd_enumerate_iglt(cfg);
        if (expand->parsed()) return cmd_expand(cfg);
        if (classes->parsed()) return cmd_classes(cfg);
        if (verify->parsed()) {
            if (cfg.n_max == 0 && (cfg.shape.empty() || cfg.max_entry == 0))
                throw std::invalid_argument("verify needs --shape with --max, or --nmax");
            return cmd_verify(cfg);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
