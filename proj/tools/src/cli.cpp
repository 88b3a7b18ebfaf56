#include "supercodim_cli/cli.hpp"

#include <cstdint>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "supercodim/codimension.hpp"
#include "supercodim/combinatorics.hpp"
#include "supercodim/errors.hpp"
#include "supercodim/exponent.hpp"
#include "supercodim/report.hpp"
#include "supercodim/superalgebra.hpp"

namespace supercodim::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kSchema = "supercodim/report/v1";

struct Options {
    std::string algebra;
    std::optional<unsigned> n;
    std::optional<unsigned> n_max;
    std::optional<unsigned> k;
    unsigned q_max = 2;
    unsigned max_degree = 16;
    unsigned precision = 128;
    std::optional<std::uint64_t> max_entries;
    unsigned workers = 1;
    std::string format = "table";
    std::uint64_t seed = 1;
    std::size_t trials = 16;
    std::string poly = "[y1,y2]";
    std::string lemma = "all";
    unsigned max_weight = 25;
    std::optional<std::size_t> max_height;
    std::vector<unsigned> weights{100, 101};
    unsigned stirling_n_max = 300;

    bool machine() const { return format == "machine"; }

    ComputeOptions compute() const {
        ComputeOptions c;
        if (max_entries) c.max_entries = *max_entries;
        c.workers = workers;
        return c;
    }

    ExponentOptions exponent() const {
        ExponentOptions e;
        e.compute = compute();
        e.precision_bits = precision;
        e.simplicity_trials = trials;
        e.seed = seed;
        return e;
    }

    std::pair<unsigned, unsigned> range() const {
        if (n) return {*n, *n};
        if (n_max) return {1, *n_max};
        throw PreconditionError("give --n or --n-max");
    }
};

std::string vector_string(const SuperAlgebra& a, const Vector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (v[i] != 1) out += to_string(v[i]) + " ";
        out += a.label(i);
    }
    return out.empty() ? "0" : out;
}

std::string substitution_string(const SuperAlgebra& a, const Substitution& sub) {
    std::string out;
    for (const auto& [slot, v] : sub) {
        if (!out.empty()) out += ", ";
        out += slot.to_string() + " -> " + vector_string(a, v);
    }
    return out;
}

json vector_json(const Vector& v) {
    json out = json::array();
    for (const auto& c : v) out.push_back(to_string(c));
    return out;
}

json substitution_json(const Substitution& sub) {
    json out = json::object();
    for (const auto& [slot, v] : sub) out[slot.to_string()] = vector_json(v);
    return out;
}

json header(const char* kind) { return json{{"schema", kSchema}, {"kind", kind}}; }

const char* violation_kind(Violation::Kind k) {
    switch (k) {
        case Violation::Kind::Grading:
            return "grading";
        case Violation::Kind::SkewSymmetry:
            return "skew_symmetry";
        case Violation::Kind::Jacobi:
            return "jacobi";
    }
    return "unknown";
}

int cmd_validate(const Options& o, std::ostream& out) {
    std::optional<SuperAlgebra> a;
    ValidationReport report;
    try {
        a = resolve_algebra(o.algebra);
        report = validate(*a);
    } catch (const InvalidAlgebraError& e) {
        report = e.report();
    }
    if (o.machine()) {
        json violations = json::array();
        for (const auto& v : report.violations) {
            violations.push_back(json{{"kind", violation_kind(v.kind)},
                                      {"i", v.i},
                                      {"j", v.j},
                                      {"l", v.l},
                                      {"description", v.description}});
        }
        json doc = header("validation");
        doc["algebra"] = o.algebra;
        doc["valid"] = report.valid();
        if (a) {
            doc["even_dim"] = a->even_dim();
            doc["odd_dim"] = a->odd_dim();
        }
        doc["violations"] = std::move(violations);
        out << doc.dump(2) << "\n";
    } else {
        out << "algebra " << o.algebra;
        if (a) out << "  (dim " << a->dim() << " = " << a->even_dim() << " even + " << a->odd_dim() << " odd)";
        out << "\n";
        if (report.valid()) {
            out << "valid\n";
        } else {
            for (const auto& v : report.violations) out << v.description << "\n";
            out << report.violations.size() << " violations\n";
        }
    }
    return report.valid() ? kExitOk : kExitUsage;
}

int report_invariants(const std::vector<std::string>& failures, std::ostream& err) {
    for (const auto& f : failures) err << "integrity: " << f << "\n";
    return failures.empty() ? kExitOk : kExitIntegrity;
}

int cmd_codim(const Options& o, bool with_lines, std::ostream& out, std::ostream& err) {
    const auto a = resolve_algebra(o.algebra);
    const auto [lo, hi] = o.range();
    auto table = codimension_table(a, lo, hi, with_lines, o.compute());
    auto failures = check_table_invariants(table);
    if (with_lines) {
        for (const auto& row : table.rows) {
            for (const auto& e : row.partials) {
                if (weighted_dimension(*e.lines) != Integer(e.codimension)) {
                    failures.push_back("character sum differs from c_{" + std::to_string(e.k) + "," +
                                       std::to_string(e.n_minus_k) + "}");
                }
            }
        }
    }
    if (o.k) {
        for (auto& row : table.rows) {
            std::erase_if(row.partials, [&](const PartialEntry& e) { return e.k != *o.k; });
        }
    }
    if (o.machine()) {
        out << to_machine(table);
    } else {
        out << to_table(table);
        if (with_lines) {
            out << "character check (Σ m d_λ d_μ = c_{k,n-k}): " << (failures.empty() ? "holds" : "FAILS") << "\n";
        }
    }
    return report_invariants(failures, err);
}

int cmd_exponent(const Options& o, std::ostream& out, std::ostream& err) {
    const auto a = resolve_algebra(o.algebra);
    const unsigned n_max = o.n_max ? *o.n_max : o.n ? *o.n : 4;
    auto report = exponent_report(a, n_max, o.exponent());
    out << (o.machine() ? to_machine(report) : to_table(report));
    return report_invariants(report.invariant_failures, err);
}

int cmd_amplify(const Options& o, std::ostream& out, std::ostream& err) {
    const auto a = resolve_algebra(o.algebra);
    const auto f = normalize(parse_bracket_tree(o.poly));
    const auto sub = first_nonzero_substitution(a, f);
    if (!sub) throw PreconditionError(o.poly + " is an identity of " + a.name());
    const auto opts = o.exponent();
    const auto first = amplify(a, f, *sub, opts);
    const auto chain = iterate_amplification(a, f, *sub, o.q_max, o.max_degree, opts);
    const bool alarm = first.integrity_alarm || chain.integrity_alarm;

    if (o.machine()) {
        json doc = header("amplification");
        doc["algebra"] = a.name();
        doc["polynomial"] = o.poly;
        doc["seed"] = o.seed;
        doc["substitution"] = substitution_json(*sub);
        json w = nullptr;
        if (first.witness) {
            json second = json::object();
            for (const auto& [slot, b] : first.witness->second_choice) second[slot.to_string()] = b;
            w = json{{"connectors", first.witness->connectors},
                     {"second_substitution", second},
                     {"value", vector_json(first.witness->value)}};
        }
        doc["witness"] = std::move(w);
        json steps = json::array();
        for (const auto& s : chain.steps) {
            steps.push_back(json{{"degree", s.degree},
                                 {"terms", s.polynomial.terms().size()},
                                 {"connectors", s.connectors},
                                 {"gap_ok", s.gap_ok},
                                 {"substitution", substitution_json(s.witness)},
                                 {"value", vector_json(s.value)}});
        }
        doc["q_max"] = o.q_max;
        doc["degrees"] = chain.degrees;
        doc["steps"] = std::move(steps);
        doc["complete"] = chain.complete;
        doc["integrity_alarm"] = alarm;
        doc["outside_hypothesis"] = first.outside_hypothesis || chain.outside_hypothesis;
        doc["message"] = chain.message;
        out << doc.dump(2) << "\n";
    } else {
        out << "algebra " << a.name() << "  f = " << o.poly << "  seed " << o.seed << "\n";
        out << "f is nonzero on " << substitution_string(a, *sub) << "\n";
        if (first.witness) {
            const auto& w = *first.witness;
            out << "witness: t = " << w.connectors.size() << ", connectors";
            if (w.connectors.empty()) out << " (none)";
            for (auto c : w.connectors) out << " " << a.label(c);
            out << ", second substitution";
            const char* sep = " ";
            for (const auto& [slot, b] : w.second_choice) {
                out << sep << slot.to_string() << " -> " << a.label(b);
                sep = ", ";
            }
            out << ", value " << vector_string(a, w.value) << "\n";
        } else {
            out << "no witness found\n";
        }
        if (first.outside_hypothesis) out << "the algebra is not simple; existence is not guaranteed\n";
        out << "chain (q_max = " << o.q_max << "): degrees";
        for (auto d : chain.degrees) out << " " << d;
        out << "\n";
        for (std::size_t q = 0; q < chain.steps.size(); ++q) {
            const auto& s = chain.steps[q];
            out << "  g_" << q + 1 << ": degree " << s.degree << ", " << s.polynomial.terms().size()
                << " terms, value " << vector_string(a, s.value) << (q > 0 && !s.gap_ok ? "  GAP TOO LARGE" : "")
                << "\n";
        }
        if (!chain.message.empty()) out << chain.message << "\n";
    }
    if (alarm) {
        err << "integrity: amplification search exhausted on an algebra not certified non-simple\n";
        return kExitIntegrity;
    }
    return kExitOk;
}

int cmd_lemmas(const Options& o, std::ostream& out) {
    const bool all = o.lemma == "all";
    std::vector<std::pair<std::string, SweepResult>> results;
    if (all || o.lemma == "1") {
        results.emplace_back("lemma 1", sweep_lemma1(o.weights, o.max_height.value_or(3), o.workers));
    }
    if (all || o.lemma == "2") {
        results.emplace_back("lemma 2", sweep_lemma2(o.max_weight, o.max_height.value_or(6), o.workers));
    }
    if (all || o.lemma == "stirling") {
        results.emplace_back("stirling", sweep_stirling(o.stirling_n_max, o.workers));
    }
    bool passed = true;
    for (const auto& [name, r] : results) passed = passed && r.passed();
    if (o.machine()) {
        json doc = header("lemmas");
        json checks = json::array();
        for (const auto& [name, r] : results) {
            checks.push_back(json{{"name", name}, {"checked", r.checked}, {"failures", r.failures}});
        }
        doc["checks"] = std::move(checks);
        doc["passed"] = passed;
        out << doc.dump(2) << "\n";
    } else {
        for (const auto& [name, r] : results) {
            out << name << ": " << r.checked << " cases, " << r.failures.size() << " failures\n";
            for (const auto& f : r.failures) out << "  " << f << "\n";
        }
        out << (passed ? "all checks passed" : "CHECKS FAILED") << "\n";
    }
    return passed ? kExitOk : kExitIntegrity;
}

int cmd_builtins(const Options& o, std::ostream& out) {
    const auto names = builtin_names();
    if (o.machine()) {
        json doc = header("builtins");
        doc["names"] = names;
        out << doc.dump(2) << "\n";
    } else {
        for (const auto& n : names) out << "builtin:" << n << "\n";
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Graded codimensions, cocharacters and exponent estimates of Lie superalgebras", "supercodim"};
    app.require_subcommand(1, 1);

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "table or machine")->check(CLI::IsMember({"table", "machine"}));
        sub->add_option("--workers", o.workers, "worker threads")->check(CLI::Range(1u, 256u));
        sub->add_option("--max-entries", o.max_entries,
                        std::string("evaluation matrix entry ceiling (default from ") + kMaxEntriesEnv + ")");
    };
    auto with_algebra = [&](CLI::App* sub) {
        sub->add_option("--algebra", o.algebra, "builtin:NAME or a YAML/JSON file")->required();
        common(sub);
    };

    auto* validate_cmd = app.add_subcommand("validate", "check the superalgebra axioms");
    with_algebra(validate_cmd);

    auto* codim_cmd = app.add_subcommand("codim", "partial and total graded codimensions");
    auto* cochar_cmd = app.add_subcommand("cocharacter", "cocharacter lines and colengths");
    for (auto* sub : {codim_cmd, cochar_cmd}) {
        with_algebra(sub);
        sub->add_option("--n", o.n, "degree")->check(CLI::PositiveNumber);
        sub->add_option("--n-max", o.n_max, "degrees 1..n-max")->check(CLI::PositiveNumber);
        sub->add_option("--k", o.k, "report only this even degree");
    }

    auto* exponent_cmd = app.add_subcommand("exponent", "n-th roots and Φ estimates");
    with_algebra(exponent_cmd);
    exponent_cmd->add_option("--n-max", o.n_max, "largest degree (default 4)")->check(CLI::PositiveNumber);
    exponent_cmd->add_option("--n", o.n, "alias of --n-max")->check(CLI::PositiveNumber);

    auto* amplify_cmd = app.add_subcommand("amplify", "nonzero brackets of values of a polynomial");
    with_algebra(amplify_cmd);
    amplify_cmd->add_option("--poly", o.poly, "bracket tree, e.g. [y1,y2]");
    amplify_cmd->add_option("--q-max", o.q_max, "number of amplification steps");
    amplify_cmd->add_option("--max-degree", o.max_degree, "degree ceiling of the chain");

    for (auto* sub : {exponent_cmd, amplify_cmd}) {
        sub->add_option("--precision", o.precision, "MPFR precision in bits")->check(CLI::Range(16u, 100000u));
        sub->add_option("--seed", o.seed, "seed of the simplicity probes");
        sub->add_option("--trials", o.trials, "random simplicity probes");
    }

    auto* lemmas_cmd = app.add_subcommand("lemmas", "exhaustive checks of the partition lemmas");
    common(lemmas_cmd);
    lemmas_cmd->add_option("--lemma", o.lemma, "1, 2, stirling or all")
        ->check(CLI::IsMember({"1", "2", "stirling", "all"}));
    lemmas_cmd->add_option("--weights", o.weights, "lemma 1 weights (each >= 100)")->delimiter(',');
    lemmas_cmd->add_option("--max-weight", o.max_weight, "lemma 2 largest weight");
    lemmas_cmd->add_option("--max-height", o.max_height, "height bound (lemma 1 default 3, lemma 2 default 6)");
    lemmas_cmd->add_option("--stirling-n-max", o.stirling_n_max, "largest n of the binomial bounds")
        ->check(CLI::Range(2u, 100000u));

    auto* builtins_cmd = app.add_subcommand("builtins", "list built-in algebras");
    builtins_cmd->add_option("--format", o.format, "table or machine")->check(CLI::IsMember({"table", "machine"}));

    std::vector<std::string> argv_store{"supercodim"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_store) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (validate_cmd->parsed()) return cmd_validate(o, out);
        if (codim_cmd->parsed()) return cmd_codim(o, false, out, err);
        if (cochar_cmd->parsed()) return cmd_codim(o, true, out, err);
        if (exponent_cmd->parsed()) return cmd_exponent(o, out, err);
        if (amplify_cmd->parsed()) return cmd_amplify(o, out, err);
        if (lemmas_cmd->parsed()) return cmd_lemmas(o, out);
        if (builtins_cmd->parsed()) return cmd_builtins(o, out);
    } catch (const IntegrityError& e) {
        err << "integrity error: " << e.what() << "\n";
        return kExitIntegrity;
    } catch (const InvalidAlgebraError& e) {
        err << "invalid algebra: " << e.what() << "\n";
        for (const auto& v : e.report().violations) err << "  " << v.description << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace supercodim::cli
