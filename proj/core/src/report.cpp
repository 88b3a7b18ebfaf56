#include "supercodim/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace supercodim {

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "supercodim/report/v1";
constexpr int kRealDigits = 30;

json real_to_json(const Real& r) {
    return json{{"value", r.to_string(kRealDigits)},
                {"precision_bits", r.precision()},
                {"error_log2", r.error_exponent()}};
}

Real real_from_json(const json& j) {
    return parse_real(j.at("value").get<std::string>(), j.at("precision_bits").get<unsigned>(),
                      j.at("error_log2").get<long>());
}

json lines_to_json(const std::vector<CocharacterLine>& lines) {
    json out = json::array();
    for (const auto& line : lines) {
        out.push_back(json{{"lambda", std::vector<unsigned>(line.lambda.parts().begin(), line.lambda.parts().end())},
                           {"mu", std::vector<unsigned>(line.mu.parts().begin(), line.mu.parts().end())},
                           {"multiplicity", line.multiplicity.get_str()}});
    }
    return out;
}

std::vector<CocharacterLine> lines_from_json(const json& j) {
    std::vector<CocharacterLine> out;
    for (const auto& line : j) {
        out.push_back({Partition(line.at("lambda").get<std::vector<unsigned>>()),
                       Partition(line.at("mu").get<std::vector<unsigned>>()),
                       Integer(line.at("multiplicity").get<std::string>())});
    }
    return out;
}

json table_rows(const CodimensionTable& table) {
    json rows = json::array();
    for (const auto& row : table.rows) {
        json partials = json::array();
        for (const auto& e : row.partials) {
            json p{{"k", e.k}, {"n_minus_k", e.n_minus_k}, {"codimension", std::to_string(e.codimension)}};
            if (e.lines) {
                p["colength"] = e.colength()->get_str();
                p["lines"] = lines_to_json(*e.lines);
            }
            partials.push_back(std::move(p));
        }
        json r{{"n", row.n}, {"total", row.total.get_str()}};
        if (row.total_colength) r["total_colength"] = row.total_colength->get_str();
        r["partials"] = std::move(partials);
        rows.push_back(std::move(r));
    }
    return rows;
}

template <typename F>
auto guarded(std::string_view text, F&& body) {
    try {
        return body(json::parse(text));
    } catch (const json::parse_error& e) {
        throw ParseError(e.what(), 1, e.byte, "");
    } catch (const json::exception& e) {
        throw ParseError(e.what(), 0, 0, "report");
    }
}

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

}  // namespace

Real parse_real(std::string_view decimal, unsigned precision_bits, long error_log2) {
    Real out(precision_bits);
    // Real has no public setter; round-trip through a rational is exact for
    // finite decimal strings.
    std::string text(decimal);
    Rational q;
    const auto e = text.find_first_of("eE");
    std::string mantissa = text.substr(0, e);
    long exponent = e == std::string::npos ? 0 : std::stol(text.substr(e + 1));
    const auto dot = mantissa.find('.');
    if (dot != std::string::npos) {
        exponent -= static_cast<long>(mantissa.size() - dot - 1);
        mantissa.erase(dot, 1);
    }
    if (!parse_rational(mantissa, q)) throw ParseError("malformed real '" + text + "'", 0, 0, "value");
    Integer scale = pow(Integer(10), static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    if (exponent < 0) {
        q /= scale;
    } else {
        q *= scale;
    }
    out = Real(q, precision_bits);
    out.set_error_exponent(error_log2);
    return out;
}

std::string to_machine(const CodimensionTable& table) {
    json doc{{"schema", kSchema},
             {"kind", "codimension"},
             {"algebra", table.algebra},
             {"even_dim", table.even_dim},
             {"odd_dim", table.odd_dim},
             {"rows", table_rows(table)}};
    return doc.dump(2) + "\n";
}

CodimensionTable codimension_table_from_machine(std::string_view text) {
    return guarded(text, [](const json& doc) {
        if (doc.at("kind") != "codimension") throw ParseError("not a codimension report", 0, 0, "kind");
        CodimensionTable table;
        table.algebra = doc.at("algebra").get<std::string>();
        table.even_dim = doc.at("even_dim").get<std::size_t>();
        table.odd_dim = doc.at("odd_dim").get<std::size_t>();
        for (const auto& r : doc.at("rows")) {
            CodimensionRow row;
            row.n = r.at("n").get<unsigned>();
            row.total = Integer(r.at("total").get<std::string>());
            if (r.contains("total_colength")) row.total_colength = Integer(r.at("total_colength").get<std::string>());
            for (const auto& p : r.at("partials")) {
                PartialEntry e;
                e.k = p.at("k").get<unsigned>();
                e.n_minus_k = p.at("n_minus_k").get<unsigned>();
                e.codimension = std::stoull(p.at("codimension").get<std::string>());
                if (p.contains("lines")) e.lines = lines_from_json(p.at("lines"));
                row.partials.push_back(std::move(e));
            }
            table.rows.push_back(std::move(row));
        }
        return table;
    });
}

std::string to_machine(const ExponentReport& report) {
    json rows = json::array();
    for (const auto& r : report.rows) {
        rows.push_back(json{{"n", r.n},
                            {"codimension", r.codimension.get_str()},
                            {"colength", r.colength.get_str()},
                            {"root", real_to_json(r.root)},
                            {"phi_lower", real_to_json(r.phi_lower)},
                            {"envelope_low", real_to_json(r.envelope_low)},
                            {"envelope_high", real_to_json(r.envelope_high)}});
    }
    json doc{{"schema", kSchema},
             {"kind", "exponent"},
             {"algebra", report.algebra},
             {"dim", report.dim},
             {"even_dim", report.even_dim},
             {"odd_dim", report.odd_dim},
             {"upper_bound", std::to_string(report.dim)},
             {"precision_bits", report.precision_bits},
             {"even_part_solvable", report.even_part_solvable},
             {"expect_exponent_at_least_two", report.expect_exponent_at_least_two},
             {"simplicity", json{{"not_simple", report.simplicity_not_simple},
                                 {"reason", report.simplicity_reason},
                                 {"seed", report.seed},
                                 {"trials", report.simplicity_trials}}},
             {"rows", std::move(rows)},
             {"invariant_failures", report.invariant_failures}};
    return doc.dump(2) + "\n";
}

ExponentReport exponent_report_from_machine(std::string_view text) {
    return guarded(text, [](const json& doc) {
        if (doc.at("kind") != "exponent") throw ParseError("not an exponent report", 0, 0, "kind");
        ExponentReport report;
        report.algebra = doc.at("algebra").get<std::string>();
        report.dim = doc.at("dim").get<std::size_t>();
        report.even_dim = doc.at("even_dim").get<std::size_t>();
        report.odd_dim = doc.at("odd_dim").get<std::size_t>();
        report.precision_bits = doc.at("precision_bits").get<unsigned>();
        report.even_part_solvable = doc.at("even_part_solvable").get<bool>();
        report.expect_exponent_at_least_two = doc.at("expect_exponent_at_least_two").get<bool>();
        const auto& s = doc.at("simplicity");
        report.simplicity_not_simple = s.at("not_simple").get<bool>();
        report.simplicity_reason = s.at("reason").get<std::string>();
        report.seed = s.at("seed").get<std::uint64_t>();
        report.simplicity_trials = s.at("trials").get<std::size_t>();
        for (const auto& r : doc.at("rows")) {
            report.rows.push_back(ExponentRow{r.at("n").get<unsigned>(),
                                              Integer(r.at("codimension").get<std::string>()),
                                              real_from_json(r.at("root")),
                                              real_from_json(r.at("phi_lower")),
                                              real_from_json(r.at("envelope_low")),
                                              real_from_json(r.at("envelope_high")),
                                              Integer(r.at("colength").get<std::string>())});
        }
        report.invariant_failures = doc.at("invariant_failures").get<std::vector<std::string>>();
        return report;
    });
}

std::string to_table(const CodimensionTable& table) {
    std::ostringstream out;
    out << "algebra " << table.algebra << "  (dim " << table.dim() << " = " << table.even_dim << " even + "
        << table.odd_dim << " odd)\n";
    for (const auto& row : table.rows) {
        out << "n = " << row.n << "\n";
        out << "     k   n-k   c_{k,n-k}";
        const bool with_lines = !row.partials.empty() && row.partials.front().lines.has_value();
        if (with_lines) out << "   colength   Σ m d_λ d_μ";
        out << "\n";
        for (const auto& e : row.partials) {
            out << pad(std::to_string(e.k), 6) << pad(std::to_string(e.n_minus_k), 6)
                << pad(std::to_string(e.codimension), 12);
            if (e.lines) {
                out << pad(e.colength()->get_str(), 11) << pad(weighted_dimension(*e.lines).get_str(), 14);
            }
            out << "\n";
            if (e.lines) {
                for (const auto& line : *e.lines) {
                    out << "          " << line.lambda.to_string() << " x " << line.mu.to_string()
                        << "  m = " << line.multiplicity.get_str() << "\n";
                }
            }
        }
        out << "  c_" << row.n << "^gr = " << row.total.get_str();
        if (row.total_colength) out << "   l_" << row.n << "^gr = " << row.total_colength->get_str();
        out << "\n";
    }
    return out.str();
}

std::string to_table(const ExponentReport& report) {
    std::ostringstream out;
    out << "algebra " << report.algebra << "  (dim d = " << report.dim << ")\n";
    out << "upper bound: c_n^gr <= d^n, so every root is at most d = " << report.dim << "\n";
    out << "even part solvable: " << (report.even_part_solvable ? "yes" : "no");
    if (report.expect_exponent_at_least_two) out << "  (non-solvable even part: exponent expected >= 2)";
    out << "\n";
    out << "simplicity: " << (report.simplicity_not_simple ? "not simple" : "heuristically simple") << " ("
        << report.simplicity_reason << "; seed " << report.seed << ", " << report.simplicity_trials << " trials)\n";
    out << "   n     c_n^gr   l_n^gr   root_n                phi_lower             envelope\n";
    for (const auto& r : report.rows) {
        out << pad(std::to_string(r.n), 4) << pad(r.codimension.get_str(), 11) << pad(r.colength.get_str(), 9) << "   "
            << std::left << std::setw(22) << r.root.to_string(15) << std::setw(22) << r.phi_lower.to_string(15)
            << "[" << r.envelope_low.to_string(8) << ", " << r.envelope_high.to_string(8) << "]" << std::right
            << "\n";
    }
    for (const auto& f : report.invariant_failures) out << "INVARIANT FAILURE: " << f << "\n";
    return out.str();
}

}  // namespace supercodim
