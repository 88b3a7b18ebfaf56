#include "supercodim/exponent.hpp"

#include <algorithm>
#include <functional>

namespace supercodim {

namespace {

Real max_real(const Real& a, const Real& b, unsigned tie_bits) { return compare(b, a, tie_bits) > 0 ? b : a; }
Real min_real(const Real& a, const Real& b, unsigned tie_bits) { return compare(b, a, tie_bits) < 0 ? b : a; }

Real phi_or_one(const Partition& p, unsigned precision) {
    return p.empty() ? Real::one(precision) : phi_real(p, precision);
}

}  // namespace

Real phi_lower_from_lines(unsigned n, const std::vector<PartialEntry>& partials, const ExponentOptions& options) {
    const unsigned prec = options.precision_bits;
    Real best = Real::zero(prec);
    bool any = false;
    for (const auto& entry : partials) {
        if (!entry.lines) throw PreconditionError("Φ estimate needs cocharacter lines");
        const Real binomial_phi = phi_binomial_real(n, entry.k, prec);
        for (const auto& line : *entry.lines) {
            const Real value = binomial_phi * phi_or_one(line.lambda, prec) * phi_or_one(line.mu, prec);
            best = any ? max_real(best, value, options.tie_bits) : value;
            any = true;
        }
    }
    return best;
}

Real phi_lower_estimate(const SuperAlgebra& a, unsigned n, const ExponentOptions& options) {
    const auto table = codimension_table(a, n, n, true, options.compute);
    return phi_lower_from_lines(n, table.rows.front().partials, options);
}

ExponentReport exponent_report(const SuperAlgebra& a, unsigned n_max, const ExponentOptions& options) {
    ExponentReport report;
    report.algebra = a.name();
    report.dim = a.dim();
    report.even_dim = a.even_dim();
    report.odd_dim = a.odd_dim();
    report.precision_bits = options.precision_bits;
    report.even_part_solvable = derived_series_even(a).solvable;
    report.expect_exponent_at_least_two = !report.even_part_solvable;
    const auto verdict = simplicity_verdict(a, options.simplicity_trials, options.seed);
    report.simplicity_not_simple = verdict.not_simple;
    report.simplicity_reason = verdict.reason;
    report.seed = options.seed;
    report.simplicity_trials = options.simplicity_trials;
    if (n_max == 0) return report;

    const unsigned prec = options.precision_bits;
    const auto table = codimension_table(a, 1, n_max, true, options.compute);
    report.invariant_failures = check_table_invariants(table);
    const Rational d(static_cast<unsigned long>(a.dim()));
    for (const auto& row : table.rows) {
        ExponentRow out{row.n,
                        row.total,
                        Real(Rational(row.total), prec).root(row.n),
                        phi_lower_from_lines(row.n, row.partials, options),
                        Real(prec),
                        Real(prec),
                        row.total_colength.value_or(0)};
        if (report.rows.empty()) {
            out.envelope_low = out.root;
            out.envelope_high = out.root;
        } else {
            out.envelope_low = min_real(report.rows.back().envelope_low, out.root, options.tie_bits);
            out.envelope_high = max_real(report.rows.back().envelope_high, out.root, options.tie_bits);
        }
        if (compare(out.root, d, options.tie_bits) > 0) {
            report.invariant_failures.push_back("n=" + std::to_string(row.n) + ": root exceeds d");
        }
        report.rows.push_back(std::move(out));
    }
    return report;
}

namespace {

// All basis substitutions for `variables`, last variable fastest.
std::vector<std::map<Slot, std::size_t>> basis_substitutions(const SuperAlgebra& a, const std::vector<Slot>& variables) {
    std::vector<std::map<Slot, std::size_t>> out;
    const auto even = a.homogeneous_basis(Parity::Even);
    const auto odd = a.homogeneous_basis(Parity::Odd);
    std::map<Slot, std::size_t> current;
    std::function<void(std::size_t)> fill = [&](std::size_t p) {
        if (p == variables.size()) {
            out.push_back(current);
            return;
        }
        for (auto b : variables[p].kind == Parity::Even ? even : odd) {
            current[variables[p]] = b;
            fill(p + 1);
        }
    };
    fill(0);
    return out;
}

Substitution to_vectors(const SuperAlgebra& a, const std::map<Slot, std::size_t>& choice) {
    Substitution out;
    for (const auto& [s, b] : choice) out.emplace(s, a.basis_vector(b));
    return out;
}

}  // namespace

std::optional<Substitution> first_nonzero_substitution(const SuperAlgebra& a, const Polynomial& f) {
    for (const auto& choice : basis_substitutions(a, f.variables())) {
        auto sub = to_vectors(a, choice);
        if (!is_zero(evaluate(f, sub, a))) return sub;
    }
    return std::nullopt;
}

AmplificationResult amplify_from_value(const SuperAlgebra& a, const Vector& v, const Polynomial& f,
                                       const ExponentOptions& options) {
    if (is_zero(v)) throw PreconditionError("amplification needs a nonzero starting value");
    AmplificationResult result;
    result.outside_hypothesis = simplicity_verdict(a, options.simplicity_trials, options.seed).not_simple;

    std::vector<std::pair<std::map<Slot, std::size_t>, Vector>> seconds;
    for (auto& choice : basis_substitutions(a, f.variables())) {
        Vector value = evaluate(f, to_vectors(a, choice), a);
        if (!is_zero(value)) seconds.emplace_back(std::move(choice), std::move(value));
    }
    if (seconds.empty()) throw PreconditionError("f is a graded identity of " + a.name());

    const std::size_t d = a.dim();
    std::vector<std::size_t> sequence;
    // Depth-first over sequences of exactly `length` connectors in lexicographic order.
    std::function<bool(const Vector&, std::size_t)> search = [&](const Vector& w, std::size_t length) {
        if (sequence.size() == length) {
            for (const auto& [choice, second] : seconds) {
                Vector value = a.bracket(w, second);
                if (!is_zero(value)) {
                    result.witness = AmplificationWitness{sequence, choice, std::move(value)};
                    return true;
                }
            }
            return false;
        }
        for (std::size_t c = 0; c < d; ++c) {
            Vector next = a.bracket_with_basis(w, c);
            if (is_zero(next)) continue;
            sequence.push_back(c);
            if (search(next, length)) return true;
            sequence.pop_back();
        }
        return false;
    };
    for (std::size_t length = 0; length + 1 <= d; ++length) {
        if (search(v, length)) return result;
    }
    result.integrity_alarm = !result.outside_hypothesis;
    return result;
}

AmplificationResult amplify(const SuperAlgebra& a, const Polynomial& f, const Substitution& sub,
                            const ExponentOptions& options) {
    const Vector v = evaluate(f, sub, a);
    if (is_zero(v)) throw PreconditionError("f vanishes on the given substitution");
    return amplify_from_value(a, v, f, options);
}

namespace {

unsigned next_index(const std::vector<Slot>& vars, Parity kind) {
    unsigned out = 0;
    for (const auto& s : vars) {
        if (s.kind == kind) out = std::max(out, s.index);
    }
    return out + 1;
}

// f with x_i -> x_{i + dx}, y_j -> y_{j + dy}.
Polynomial shifted(const Polynomial& f, unsigned dx, unsigned dy) {
    Polynomial out;
    for (const auto& [m, c] : f.terms()) {
        Monomial moved;
        for (const auto& s : m.slots) moved.slots.push_back({s.kind, s.index + (s.kind == Parity::Even ? dx : dy)});
        out.add(moved, c);
    }
    return out;
}

}  // namespace

AmplificationChain iterate_amplification(const SuperAlgebra& a, const Polynomial& f, const Substitution& sub,
                                         unsigned q_max, unsigned max_degree, const ExponentOptions& options) {
    AmplificationChain chain;
    Polynomial current = normalize(f);
    Substitution witness = sub;
    Vector value = evaluate(current, witness, a);
    if (is_zero(value)) throw PreconditionError("f vanishes on the given substitution");
    const unsigned n0 = static_cast<unsigned>(f.variables().size());
    chain.degrees.push_back(n0);
    chain.steps.push_back({current, n0, {}, witness, value, true});

    for (unsigned q = 0; q < q_max; ++q) {
        const auto found = amplify_from_value(a, value, f, options);
        chain.outside_hypothesis = chain.outside_hypothesis || found.outside_hypothesis;
        if (!found.witness) {
            chain.integrity_alarm = found.integrity_alarm;
            chain.message = "no connector sequence of length < d found at step " + std::to_string(q + 1);
            return chain;
        }
        const auto& w = *found.witness;
        const unsigned degree = chain.degrees.back() + static_cast<unsigned>(w.connectors.size()) + n0;
        if (degree > max_degree) {
            chain.message = "degree " + std::to_string(degree) + " exceeds the ceiling " + std::to_string(max_degree);
            return chain;
        }
        Polynomial next = current;
        Substitution next_witness = witness;
        for (auto c : w.connectors) {
            const Slot z{a.parity(c), next_index(next.variables(), a.parity(c))};
            next = bracket(next, Polynomial(Monomial{{z}}));
            next_witness.emplace(z, a.basis_vector(c));
        }
        const unsigned dx = next_index(next.variables(), Parity::Even) - 1;
        const unsigned dy = next_index(next.variables(), Parity::Odd) - 1;
        const Polynomial copy = shifted(f, dx, dy);
        for (const auto& [s, b] : w.second_choice) {
            next_witness.emplace(Slot{s.kind, s.index + (s.kind == Parity::Even ? dx : dy)}, a.basis_vector(b));
        }
        next = bracket(next, copy);
        Vector next_value = evaluate(next, next_witness, a);
        if (is_zero(next_value)) {
            chain.integrity_alarm = true;
            chain.message = "constructed polynomial of degree " + std::to_string(degree) + " vanishes on its witness";
            return chain;
        }
        const bool gap_ok = degree - chain.degrees.back() <= n0 + a.dim();
        chain.degrees.push_back(degree);
        chain.steps.push_back({next, degree, w.connectors, next_witness, next_value, gap_ok});
        current = std::move(next);
        witness = std::move(next_witness);
        value = std::move(next_value);
    }
    chain.complete = true;
    return chain;
}

}  // namespace supercodim
