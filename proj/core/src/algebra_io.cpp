#include <yaml-cpp/yaml.h>

#include <fstream>
#include <map>
#include <sstream>

#include "supercodim/superalgebra.hpp"

namespace supercodim {

namespace {

[[noreturn]] void fail(const YAML::Node& node, const std::string& field, const std::string& message) {
    const auto mark = node.Mark();
    const std::size_t line = mark.line >= 0 ? static_cast<std::size_t>(mark.line) + 1 : 0;
    const std::size_t column = mark.column >= 0 ? static_cast<std::size_t>(mark.column) + 1 : 0;
    throw ParseError(message, line, column, field);
}

std::string scalar(const YAML::Node& node, const std::string& field) {
    if (!node) fail(node, field, "missing field");
    if (!node.IsScalar()) fail(node, field, "expected a scalar");
    return node.Scalar();
}

std::vector<std::string> labels(const YAML::Node& root, const std::string& field) {
    const YAML::Node node = root[field];
    if (!node) return {};
    if (!node.IsSequence()) fail(node, field, "expected a list of basis labels");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < node.size(); ++i) {
        out.push_back(scalar(node[i], field + "[" + std::to_string(i) + "]"));
    }
    return out;
}

}  // namespace

SuperAlgebra parse_algebra(std::string_view text) {
    YAML::Node root;
    try {
        root = YAML::Load(std::string(text));
    } catch (const YAML::ParserException& e) {
        throw ParseError(e.msg, static_cast<std::size_t>(e.mark.line + 1),
                         static_cast<std::size_t>(e.mark.column + 1), "");
    }
    if (!root.IsMap()) fail(root, "", "expected a mapping at the top level");

    const std::string name = root["name"] ? scalar(root["name"], "name") : std::string("unnamed");
    auto even = labels(root, "even_basis");
    auto odd = labels(root, "odd_basis");
    std::vector<std::string> all(even);
    all.insert(all.end(), odd.begin(), odd.end());
    const std::size_t d = all.size();
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < d; ++i) {
        if (!index.emplace(all[i], i).second) {
            fail(root[i < even.size() ? "even_basis" : "odd_basis"], "basis", "duplicate label '" + all[i] + "'");
        }
    }
    auto parity = [&](std::size_t i) { return i < even.size() ? Parity::Even : Parity::Odd; };

    std::vector<Rational> constants(d * d * d);
    std::vector<std::optional<YAML::Node>> given(d * d);
    const YAML::Node brackets = root["brackets"];
    if (brackets && !brackets.IsSequence()) fail(brackets, "brackets", "expected a list of bracket entries");
    for (std::size_t e = 0; brackets && e < brackets.size(); ++e) {
        const YAML::Node entry = brackets[e];
        const std::string path = "brackets[" + std::to_string(e) + "]";
        if (!entry.IsMap()) fail(entry, path, "expected a mapping with left, right, result");
        auto lookup = [&](const char* key) {
            const std::string label = scalar(entry[key], path + "." + key);
            auto it = index.find(label);
            if (it == index.end()) fail(entry[key], path + "." + key, "unknown basis label '" + label + "'");
            return it->second;
        };
        const std::size_t i = lookup("left");
        const std::size_t j = lookup("right");
        if (given[i * d + j]) fail(entry, path, "bracket [" + all[i] + "," + all[j] + "] given twice");
        given[i * d + j] = entry;

        const YAML::Node result = entry["result"];
        if (!result) fail(entry, path + ".result", "missing field");
        if (!result.IsSequence()) fail(result, path + ".result", "expected a list of {basis, coeff}");
        for (std::size_t t = 0; t < result.size(); ++t) {
            const YAML::Node term = result[t];
            const std::string tpath = path + ".result[" + std::to_string(t) + "]";
            if (!term.IsMap()) fail(term, tpath, "expected {basis, coeff}");
            const std::string label = scalar(term["basis"], tpath + ".basis");
            auto it = index.find(label);
            if (it == index.end()) fail(term["basis"], tpath + ".basis", "unknown basis label '" + label + "'");
            Rational coeff;
            const std::string text_coeff = scalar(term["coeff"], tpath + ".coeff");
            if (!parse_rational(text_coeff, coeff)) {
                fail(term["coeff"], tpath + ".coeff", "'" + text_coeff + "' is not a rational p/q");
            }
            constants[(i * d + j) * d + it->second] += coeff;
        }
    }

    // Complete by super skew-symmetry; where both orders are given they must agree.
    auto at = [&](std::size_t i, std::size_t j, std::size_t l) -> Rational& { return constants[(i * d + j) * d + l]; };
    for (std::size_t i = 0; i < d; ++i) {
        if (given[i * d + i] && parity(i) == Parity::Even) {
            for (std::size_t l = 0; l < d; ++l) {
                if (at(i, i, l) != 0) {
                    fail(*given[i * d + i], "brackets", "even self-bracket [" + all[i] + "," + all[i] + "] must vanish");
                }
            }
        }
        for (std::size_t j = i + 1; j < d; ++j) {
            const int s = koszul_sign(parity(i), parity(j));
            const bool forward = given[i * d + j].has_value();
            const bool backward = given[j * d + i].has_value();
            for (std::size_t l = 0; l < d; ++l) {
                if (forward && backward) {
                    if (at(i, j, l) + s * at(j, i, l) != 0) {
                        fail(*given[j * d + i], "brackets",
                             "[" + all[j] + "," + all[i] + "] contradicts [" + all[i] + "," + all[j] +
                                 "] under super skew-symmetry");
                    }
                } else if (forward) {
                    at(j, i, l) = -s * at(i, j, l);
                } else if (backward) {
                    at(i, j, l) = -s * at(j, i, l);
                }
            }
        }
    }

    SuperAlgebra algebra(name, std::move(even), std::move(odd), std::move(constants));
    auto report = validate(algebra);
    if (!report.valid()) {
        const std::string message =
            "algebra '" + name + "' violates the superalgebra axioms:\n" + report.to_string(algebra);
        throw InvalidAlgebraError(message, std::move(report));
    }
    return algebra;
}

SuperAlgebra load_algebra(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open algebra file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_algebra(buffer.str());
}

SuperAlgebra resolve_algebra(std::string_view source) {
    if (source.starts_with("builtin:")) {
        auto algebra = builtin(source.substr(8));
        auto report = validate(algebra);
        if (!report.valid()) {
            throw IntegrityError("builtin " + algebra.name() + " fails validation:\n" + report.to_string(algebra));
        }
        return algebra;
    }
    return load_algebra(std::filesystem::path(source));
}

}  // namespace supercodim
