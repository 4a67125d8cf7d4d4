#include "eqindex/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "eqindex/engine.hpp"
#include "eqindex/sun.hpp"

namespace eqindex::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitAuditFailure = 3;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

struct CommonOpts {
    std::string format = "table";
    std::string model_file;
};

std::vector<ModelManifold> extra_models(const CommonOpts& opts) {
    if (opts.model_file.empty()) return {};
    return load_models_file(opts.model_file);
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_model_file = true) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
    if (with_model_file)
        cmd->add_option("--model-file", opts.model_file,
                        "Load additional models from a table file");
}

int cmd_models(const CommonOpts& opts, std::ostream& out) {
    auto extra = extra_models(opts);
    std::vector<const ModelManifold*> all;
    for (const auto& m : catalog()) all.push_back(&m);
    for (const auto& m : extra) all.push_back(&m);
    if (opts.format == "json") {
        json rows = json::array();
        for (const auto* m : all) {
            json row;
            row["name"] = m->name;
            row["dim"] = m->n;
            row["volume"] = m->volume.str();
            row["signature"] = m->signature ? json(*m->signature) : json(nullptr);
            row["euler"] = m->euler ? json(*m->euler) : json(nullptr);
            rows.push_back(row);
        }
        out << dump(json{{"models", rows}});
    } else {
        out << std::left << std::setw(10) << "name" << std::setw(5) << "dim" << std::setw(12)
            << "volume" << std::setw(11) << "signature" << "euler\n";
        for (const auto* m : all) {
            out << std::left << std::setw(10) << m->name << std::setw(5) << m->n
                << std::setw(12) << m->volume.str() << std::setw(11)
                << (m->signature ? std::to_string(*m->signature) : "-")
                << (m->euler ? std::to_string(*m->euler) : "-") << "\n";
        }
    }
    return kExitOk;
}

int cmd_frac_index(const std::string& model, const CommonOpts& opts, std::ostream& out) {
    const ModelManifold& m = find_model(model, extra_models(opts));
    Rational v = fractional_index(m);
    if (opts.format == "json") {
        out << dump(json{{"model", m.name}, {"fractional_index", rational_str(v)}});
    } else {
        out << rational_str(v) << "\n";
    }
    return kExitOk;
}

int cmd_index_char(const std::string& model, const std::string& rep, int max_boxes,
                   const CommonOpts& opts, std::ostream& out, std::ostream& err) {
    const ModelManifold& m = find_model(model, extra_models(opts));
    Partition p = parse_partition(rep);
    const int N = 1 << (m.n / 2);
    if (!is_reduced(p, N))
        throw std::invalid_argument("partition " + p.str() + " is not reduced for SU(" +
                                    std::to_string(N) + ")");
    std::string diagnostic;
    Rational v = index_character(m, p, max_boxes, &diagnostic);
    if (opts.format == "json") {
        json j{{"model", m.name},
               {"partition", p.csv()},
               {"dim", weyl_dim(p, N)},
               {"index", rational_str(v)}};
        if (!diagnostic.empty()) j["note"] = diagnostic;
        out << dump(j);
    } else {
        out << rational_str(v) << "\n";
        if (!diagnostic.empty()) err << "note: " << diagnostic << "\n";
    }
    return kExitOk;
}

json report_to_json(const IndexReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        json integrals = json::array();
        for (const auto& v : row.integrals) integrals.push_back(rational_str(v));
        json jr{{"partition", row.partition.csv()},
                {"dim", row.dim},
                {"integrals", integrals},
                {"total", rational_str(row.total)},
                {"integer", row.integral_total},
                {"weight_oracle", row.weight_oracle_ok}};
        if (!row.note.empty()) jr["note"] = row.note;
        rows.push_back(jr);
    }
    return json{{"model", r.model},
                {"dim", r.n},
                {"N", r.N},
                {"max_boxes", r.max_boxes},
                {"fractional_index", rational_str(r.fractional)},
                {"rows", rows},
                {"all_integral", r.all_integral},
                {"theorem_distribution_consistent", r.theorem_distribution_consistent},
                {"bump_matches_fractional", r.bump_matches_fractional},
                {"weight_oracle_all_ok", r.weight_oracle_all_ok},
                {"reportable_all_ok", r.reportable_all_ok},
                {"corollary_as_printed_matches_theorem", r.as_printed_matches_theorem},
                {"passed", r.passed()}};
}

int cmd_audit(const std::string& model, int max_boxes, bool parallel, bool as_printed,
              const CommonOpts& opts, std::ostream& out) {
    const ModelManifold& m = find_model(model, extra_models(opts));
    IndexReport r = integrality_audit(m, max_boxes, parallel);
    if (opts.format == "json") {
        json j = report_to_json(r);
        if (as_printed) {
            json printed = json::array();
            for (const auto& row : r.rows)
                printed.push_back(json{
                    {"partition", row.partition.csv()},
                    {"value",
                     rational_str(corollary_as_printed_character(m, row.partition, max_boxes))}});
            j["corollary_as_printed"] = printed;
        }
        out << dump(j);
    } else {
        out << "model " << r.model << "  (dim " << r.n << ", SU(" << r.N << "), max boxes "
            << r.max_boxes << ")\n";
        out << "fractional index: " << rational_str(r.fractional) << "\n\n";
        out << std::left << std::setw(12) << "partition" << std::setw(7) << "dim";
        for (int j = 0; j <= r.n / 2; ++j)
            out << std::setw(10) << ("I_" + std::to_string(j));
        out << std::setw(10) << "total" << std::setw(9) << "integer" << "oracle\n";
        for (const auto& row : r.rows) {
            out << std::left << std::setw(12) << row.partition.str() << std::setw(7) << row.dim;
            for (const auto& v : row.integrals) out << std::setw(10) << rational_str(v);
            out << std::setw(10) << rational_str(row.total) << std::setw(9)
                << (row.integral_total ? "yes" : "NO")
                << (row.weight_oracle_ok ? "ok" : "FAIL") << "\n";
            if (!row.note.empty()) out << "    note: " << row.note << "\n";
        }
        if (as_printed) {
            out << "\ncorollary evaluated as printed (bare central sum):\n";
            for (const auto& row : r.rows)
                out << "    " << std::left << std::setw(12) << row.partition.str()
                    << rational_str(
                           corollary_as_printed_character(m, row.partition, max_boxes))
                    << "\n";
        }
        out << "\nall integral: " << (r.all_integral ? "yes" : "NO")
            << "\ntheorem/distribution consistent: "
            << (r.theorem_distribution_consistent ? "yes" : "NO")
            << "\nbump pairing = fractional index: "
            << (r.bump_matches_fractional ? "yes" : "NO")
            << "\nweight oracle: " << (r.weight_oracle_all_ok ? "yes" : "NO")
            << "\ncorollary-as-printed matches theorem: "
            << (r.as_printed_matches_theorem ? "yes" : "no (expected: printed form drops the "
                                               "central weights)")
            << "\n"
            << (r.passed() ? "PASSED" : "FAILED") << "\n";
    }
    return r.passed() ? kExitOk : kExitAuditFailure;
}

int cmd_reps(int N, int max_boxes, const CommonOpts& opts, std::ostream& out) {
    if (N != 2 && N != 4) throw std::invalid_argument("reps: N must be 2 or 4");
    auto parts = enumerate_nat_class(N, max_boxes);
    if (opts.format == "json") {
        json rows = json::array();
        for (const auto& p : parts)
            rows.push_back(json{{"partition", p.csv()},
                                {"boxes", p.boxes()},
                                {"dim", weyl_dim(p, N)}});
        out << dump(json{{"N", N}, {"max_boxes", max_boxes}, {"partitions", rows}});
    } else {
        out << std::left << std::setw(12) << "partition" << std::setw(8) << "boxes" << "dim\n";
        for (const auto& p : parts)
            out << std::left << std::setw(12) << p.str() << std::setw(8) << p.boxes()
                << weyl_dim(p, N) << "\n";
    }
    return kExitOk;
}

int cmd_lemma_check(int N, int samples, int max_boxes, unsigned long seed,
                    const CommonOpts& opts, std::ostream& out) {
    if (N != 2 && N != 4) throw std::invalid_argument("lemma-check: N must be 2 or 4");
    const size_t basis_size = su_basis(N).size();

    std::vector<std::pair<std::string, EnvElement>> elements;
    elements.push_back({"1", EnvElement::one()});
    for (size_t a = 0; a < basis_size; ++a)
        elements.push_back({"X" + std::to_string(a + 1), EnvElement::generator(int(a))});
    elements.push_back({"casimir", EnvElement::casimir(N)});
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, int(basis_size) - 1);
    std::uniform_int_distribution<long> coeff(-4, 4);
    for (int s = 0; s < samples; ++s) {
        int a = pick(rng), b = pick(rng);
        GRational c(coeff(rng), 1);
        if (c.is_zero()) c = GRational(1);
        elements.push_back({"X" + std::to_string(a + 1) + "X" + std::to_string(b + 1) + "*" +
                                c.str(),
                            EnvElement::word({a, b}, c)});
    }

    auto parts = enumerate_nat_class(N, max_boxes);
    bool all_equal = true;
    json rows = json::array();
    std::ostringstream table;
    for (const auto& [label, a] : elements) {
        for (const auto& p : parts) {
            for (int g = 0; g < N; ++g) {
                TestFunction phi = TestFunction::character(N, p, g);
                auto [lhs, rhs] = lemma_both_sides(a, phi, N, max_boxes);
                bool equal = (lhs == rhs);
                all_equal = all_equal && equal;
                if (opts.format == "json") {
                    rows.push_back(json{{"a", label},
                                        {"phi", "lambda_g^" + std::to_string(g) + " chi^" +
                                                    p.str()},
                                        {"lhs", lhs.str()},
                                        {"rhs", rhs.str()},
                                        {"equal", equal}});
                } else if (!equal) {
                    table << "MISMATCH a=" << label << " phi=chi^" << p.str() << " g=" << g
                          << " lhs=" << lhs.str() << " rhs=" << rhs.str() << "\n";
                }
            }
        }
    }
    if (opts.format == "json") {
        out << dump(json{{"N", N},
                         {"samples", samples},
                         {"max_boxes", max_boxes},
                         {"checks", rows},
                         {"all_equal", all_equal}});
    } else {
        out << table.str();
        out << "lemma checks: " << (all_equal ? "all equal" : "MISMATCHES FOUND") << " ("
            << elements.size() * parts.size() * size_t(N) << " pairings)\n";
    }
    return all_equal ? kExitOk : kExitAuditFailure;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact equivariant index characters of Dirac-type operators on model "
                 "manifolds"};
    app.require_subcommand(1);

    CommonOpts models_opts;
    auto* models_cmd = app.add_subcommand("models", "List the model catalog");
    add_common(models_cmd, models_opts);

    CommonOpts frac_opts;
    std::string frac_model;
    auto* frac_cmd = app.add_subcommand("frac-index", "Integral of the A-hat form");
    frac_cmd->add_option("model", frac_model, "Model name")->required();
    add_common(frac_cmd, frac_opts);

    CommonOpts ic_opts;
    std::string ic_model, ic_rep;
    int ic_max_boxes = 6;
    auto* ic_cmd = app.add_subcommand("index-char", "Index paired with one character");
    ic_cmd->add_option("model", ic_model, "Model name")->required();
    ic_cmd->add_option("--rep", ic_rep, "Partition, comma separated")->required();
    ic_cmd->add_option("--max-boxes", ic_max_boxes, "Irrep box cutoff")->capture_default_str();
    add_common(ic_cmd, ic_opts);

    CommonOpts audit_opts;
    std::string audit_model;
    int audit_max_boxes = 5;
    bool audit_parallel = false;
    bool audit_as_printed = false;
    auto* audit_cmd = app.add_subcommand("audit", "Integrality and consistency audit");
    audit_cmd->add_option("model", audit_model, "Model name")->required();
    audit_cmd->add_option("--max-boxes", audit_max_boxes, "Audit box cutoff")
        ->capture_default_str();
    audit_cmd->add_flag("--parallel", audit_parallel, "Evaluate rows in parallel");
    audit_cmd->add_flag("--corollary-as-printed", audit_as_printed,
                        "Also evaluate the bare central-sum pairing per row");
    add_common(audit_cmd, audit_opts);

    CommonOpts reps_opts;
    int reps_n = 0, reps_max_boxes = 5;
    auto* reps_cmd = app.add_subcommand("reps", "List the natural central class");
    reps_cmd->add_option("--N", reps_n, "Rank of SU(N)")->required();
    reps_cmd->add_option("--max-boxes", reps_max_boxes, "Box cutoff")->capture_default_str();
    add_common(reps_cmd, reps_opts, false);

    CommonOpts lemma_opts;
    int lemma_n = 0, lemma_samples = 20, lemma_max_boxes = 5;
    unsigned long lemma_seed = 20240915;
    auto* lemma_cmd = app.add_subcommand("lemma-check", "Central decomposition identity");
    lemma_cmd->add_option("--N", lemma_n, "Rank of SU(N)")->required();
    lemma_cmd->add_option("--samples", lemma_samples, "Random quadratic words")
        ->capture_default_str();
    lemma_cmd->add_option("--max-boxes", lemma_max_boxes, "Box cutoff")->capture_default_str();
    lemma_cmd->add_option("--seed", lemma_seed, "Random seed")->capture_default_str();
    add_common(lemma_cmd, lemma_opts, false);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));

        if (models_cmd->parsed()) return cmd_models(models_opts, out);
        if (frac_cmd->parsed()) return cmd_frac_index(frac_model, frac_opts, out);
        if (ic_cmd->parsed())
            return cmd_index_char(ic_model, ic_rep, ic_max_boxes, ic_opts, out, err);
        if (audit_cmd->parsed())
            return cmd_audit(audit_model, audit_max_boxes, audit_parallel, audit_as_printed,
                             audit_opts, out);
        if (reps_cmd->parsed()) return cmd_reps(reps_n, reps_max_boxes, reps_opts, out);
        if (lemma_cmd->parsed())
            return cmd_lemma_check(lemma_n, lemma_samples, lemma_max_boxes, lemma_seed,
                                   lemma_opts, out);
        err << "no command given\n";
        return kExitValidation;
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitValidation;
    }
}

}  // namespace eqindex::cli
