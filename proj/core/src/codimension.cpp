#include "supercodim/codimension.hpp"

#include <cstdlib>
#include <limits>

#include "supercodim/parallel.hpp"

namespace supercodim {

std::uint64_t default_max_entries() {
    if (const char* env = std::getenv(kMaxEntriesEnv)) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return kDefaultMaxEntries;
}

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > kSaturated / b) return kSaturated;
    return a * b;
}

// Substitution tuples in mixed radix, last variable fastest.
struct TupleSpace {
    std::vector<std::vector<std::size_t>> choices;  // per variable position
    std::vector<std::size_t> strides;
    std::size_t count = 1;

    TupleSpace(const SuperAlgebra& a, unsigned k, unsigned n_minus_k) {
        const auto even = a.homogeneous_basis(Parity::Even);
        const auto odd = a.homogeneous_basis(Parity::Odd);
        for (unsigned i = 0; i < k; ++i) choices.push_back(even);
        for (unsigned i = 0; i < n_minus_k; ++i) choices.push_back(odd);
        strides.assign(choices.size(), 1);
        for (std::size_t p = choices.size(); p-- > 0;) {
            strides[p] = count;
            count *= choices[p].size();
        }
    }

    std::vector<std::size_t> digits(std::size_t index) const {
        std::vector<std::size_t> out(choices.size());
        for (std::size_t p = 0; p < choices.size(); ++p) {
            out[p] = index / strides[p] % choices[p].size();
        }
        return out;
    }

    std::size_t index(const std::vector<std::size_t>& digits) const {
        std::size_t out = 0;
        for (std::size_t p = 0; p < digits.size(); ++p) out += digits[p] * strides[p];
        return out;
    }
};

std::size_t position(const Slot& s, unsigned k) { return s.kind == Parity::Even ? s.index - 1 : k + s.index - 1; }

}  // namespace

std::uint64_t evaluation_matrix_entries(const SuperAlgebra& a, unsigned k, unsigned n_minus_k) {
    std::uint64_t rows = 1;
    for (unsigned i = 2; i < k + n_minus_k; ++i) rows = saturating_mul(rows, i);
    std::uint64_t cols = a.dim();
    for (unsigned i = 0; i < k; ++i) cols = saturating_mul(cols, a.even_dim());
    for (unsigned i = 0; i < n_minus_k; ++i) cols = saturating_mul(cols, a.odd_dim());
    return saturating_mul(rows, cols);
}

EvaluationMatrix evaluation_matrix(const SuperAlgebra& a, unsigned k, unsigned n_minus_k,
                                   const ComputeOptions& options) {
    const std::uint64_t entries = evaluation_matrix_entries(a, k, n_minus_k);
    if (entries > options.max_entries) {
        throw ResourceError("evaluation matrix for P_{" + std::to_string(k) + "," + std::to_string(n_minus_k) +
                            "} of " + a.name() + " needs about " +
                            (entries == kSaturated ? std::string("more than 1.8e19") : std::to_string(entries)) +
                            " rational entries, above the ceiling of " + std::to_string(options.max_entries) +
                            " (raise it with --max-entries or " + kMaxEntriesEnv + ")");
    }
    EvaluationMatrix out;
    out.k = k;
    out.n_minus_k = n_minus_k;
    out.dim = a.dim();
    out.monomials = spanning_monomials(k, n_minus_k);
    const TupleSpace space(a, k, n_minus_k);
    out.tuples.resize(space.count);
    for (std::size_t t = 0; t < space.count; ++t) {
        const auto digits = space.digits(t);
        auto& tuple = out.tuples[t];
        for (std::size_t p = 0; p < digits.size(); ++p) tuple.push_back(space.choices[p][digits[p]]);
    }
    const std::size_t d = a.dim();
    out.values = RationalMatrix(out.monomials.size(), space.count * d);

    // Each worker owns whole tuples, hence disjoint column blocks.
    std::vector<std::vector<std::size_t>> positions;
    for (const auto& m : out.monomials) {
        std::vector<std::size_t> pos;
        for (const auto& s : m.slots) pos.push_back(position(s, k));
        positions.push_back(std::move(pos));
    }
    parallel_for(space.count, options.workers, [&](std::size_t t) {
        const auto& tuple = out.tuples[t];
        for (std::size_t r = 0; r < positions.size(); ++r) {
            const auto& pos = positions[r];
            Vector v = a.basis_vector(tuple[pos[0]]);
            for (std::size_t i = 1; i < pos.size() && !is_zero(v); ++i) v = a.bracket_with_basis(v, tuple[pos[i]]);
            for (std::size_t l = 0; l < d; ++l) out.values(r, t * d + l) = v[l];
        }
    });
    return out;
}

std::size_t rank_exact(const EvaluationMatrix& m, const ComputeOptions& options) {
    return rank_exact(m.values, RankOptions{options.modular_check});
}

std::size_t partial_codimension(const SuperAlgebra& a, unsigned k, unsigned n_minus_k, const ComputeOptions& options) {
    return rank_exact(evaluation_matrix(a, k, n_minus_k, options), options);
}

Integer total_codimension(const SuperAlgebra& a, unsigned n, const ComputeOptions& options) {
    Integer total = 0;
    for (unsigned k = 0; k <= n; ++k) total += binomial(n, k) * partial_codimension(a, k, n - k, options);
    return total;
}

namespace {

// Trace of g = (σ, τ) on the row space: (g·f)(t) = f(t∘g), read off at the
// pivots of the reduced echelon basis.
Rational trace_of(const RowEchelon& basis, const Subspace& space, const EvaluationMatrix& m, const TupleSpace& tuples,
                  const Permutation& sigma, const Permutation& tau, bool verify) {
    const std::size_t d = m.dim;
    const std::size_t columns = m.values.cols();
    const unsigned k = m.k;
    const std::size_t vars = static_cast<std::size_t>(m.k) + m.n_minus_k;
    // Column c of g·v is column image[c] of v.
    std::vector<std::size_t> image(columns);
    for (std::size_t t = 0; t < m.tuples.size(); ++t) {
        const auto digits = tuples.digits(t);
        std::vector<std::size_t> moved(vars);
        for (std::size_t p = 0; p < vars; ++p) {
            moved[p] = p < k ? digits[sigma(static_cast<unsigned>(p))]
                             : digits[k + tau(static_cast<unsigned>(p - k))];
        }
        const std::size_t target = tuples.index(moved);
        for (std::size_t l = 0; l < d; ++l) image[t * d + l] = target * d + l;
    }
    Rational trace = 0;
    for (std::size_t i = 0; i < basis.rows.size(); ++i) {
        const auto& row = basis.rows[i];
        trace += row[image[basis.pivots[i]]];
        if (verify) {
            Vector moved(columns);
            for (std::size_t c = 0; c < columns; ++c) moved[c] = row[image[c]];
            if (!space.contains(moved)) {
                throw IntegrityError("permuted evaluation leaves the row space for (" + sigma.to_string() + ", " +
                                     tau.to_string() + ")");
            }
        }
    }
    return trace;
}

// A conjugate of g by the cyclic shift, or g itself if that is fixed.
Permutation other_representative(const Permutation& g) {
    const std::size_t n = g.degree();
    if (n < 2) return g;
    std::vector<unsigned> shift(n);
    for (std::size_t i = 0; i < n; ++i) shift[i] = static_cast<unsigned>((i + 1) % n);
    const Permutation h(shift);
    return h.compose(g).compose(h.inverse());
}

}  // namespace

TraceFunction trace_on_quotient(const SuperAlgebra& a, unsigned k, unsigned n_minus_k, const ComputeOptions& options) {
    const EvaluationMatrix m = evaluation_matrix(a, k, n_minus_k, options);
    std::vector<Vector> rows;
    for (std::size_t r = 0; r < m.values.rows(); ++r) rows.push_back(m.values.row(r));
    const Subspace space(m.values.cols(), rows);
    const RowEchelon basis{space.basis(), space.pivots()};
    const TupleSpace tuples(a, k, n_minus_k);

    const auto classes_k = conjugacy_classes(k);
    const auto classes_j = conjugacy_classes(n_minus_k);
    std::vector<std::pair<const CycleType*, const CycleType*>> pairs;
    for (const auto& ck : classes_k) {
        for (const auto& cj : classes_j) pairs.emplace_back(&ck, &cj);
    }
    std::vector<Rational> values(pairs.size());
    parallel_for(pairs.size(), options.workers, [&](std::size_t p) {
        const auto sigma = pairs[p].first->representative();
        const auto tau = pairs[p].second->representative();
        values[p] = basis.rows.empty() ? Rational(0) : trace_of(basis, space, m, tuples, sigma, tau, true);
        const auto sigma2 = other_representative(sigma);
        const auto tau2 = other_representative(tau);
        if (!basis.rows.empty() && (sigma2 != sigma || tau2 != tau)) {
            const Rational again = trace_of(basis, space, m, tuples, sigma2, tau2, false);
            if (again != values[p]) {
                throw IntegrityError("trace differs between two representatives of class " +
                                     pairs[p].first->cycles().to_string() + " x " +
                                     pairs[p].second->cycles().to_string());
            }
        }
    });
    TraceFunction out;
    for (std::size_t p = 0; p < pairs.size(); ++p) out.emplace(std::make_pair(*pairs[p].first, *pairs[p].second), values[p]);
    return out;
}

std::vector<CocharacterLine> cocharacter(const SuperAlgebra& a, unsigned k, unsigned n_minus_k,
                                         const ComputeOptions& options) {
    return decompose(trace_on_quotient(a, k, n_minus_k, options), k, n_minus_k, a.dim());
}

Integer weighted_dimension(const std::vector<CocharacterLine>& lines) {
    Integer out = 0;
    for (const auto& line : lines) out += line.multiplicity * hook_dimension(line.lambda) * hook_dimension(line.mu);
    return out;
}

Integer colength(const SuperAlgebra& a, unsigned n, const ComputeOptions& options) {
    Integer out = 0;
    for (unsigned k = 0; k <= n; ++k) {
        for (const auto& line : cocharacter(a, k, n - k, options)) out += line.multiplicity;
    }
    return out;
}

Eq3Check verify_eq3(const SuperAlgebra& a, unsigned k, unsigned n_minus_k, const ComputeOptions& options) {
    Eq3Check out;
    out.codimension = partial_codimension(a, k, n_minus_k, options);
    out.character_sum = weighted_dimension(cocharacter(a, k, n_minus_k, options));
    out.holds = out.character_sum == out.codimension;
    return out;
}

MonotonicityCheck verify_monotonicity(const SuperAlgebra& a, unsigned n_max, const ComputeOptions& options) {
    MonotonicityCheck out;
    out.outside_hypothesis = simplicity_verdict(a).not_simple;
    std::vector<std::vector<std::size_t>> c(n_max + 1);
    std::vector<Integer> total(n_max + 1);
    for (unsigned n = 1; n <= n_max; ++n) {
        for (unsigned k = 0; k <= n; ++k) {
            c[n].push_back(partial_codimension(a, k, n - k, options));
            total[n] += binomial(n, k) * c[n][k];
        }
    }
    for (unsigned n = 1; n < n_max; ++n) {
        for (unsigned k = 0; k <= n; ++k) {
            // c_{k, n-k+1} lives at degree n+1.
            if (c[n + 1][k] < c[n][k]) {
                out.failures.push_back("c_{" + std::to_string(k) + "," + std::to_string(n - k + 1) + "} = " +
                                       std::to_string(c[n + 1][k]) + " < c_{" + std::to_string(k) + "," +
                                       std::to_string(n - k) + "} = " + std::to_string(c[n][k]));
            }
        }
    }
    for (unsigned n = 2; n <= n_max; ++n) {
        for (unsigned m = 1; m < n; ++m) {
            if (total[n] < total[m]) {
                out.failures.push_back("c_" + std::to_string(n) + "^gr = " + total[n].get_str() + " < c_" +
                                       std::to_string(m) + "^gr = " + total[m].get_str());
            }
        }
    }
    out.holds = out.failures.empty();
    return out;
}

std::optional<Integer> PartialEntry::colength() const {
    if (!lines) return std::nullopt;
    Integer out = 0;
    for (const auto& line : *lines) out += line.multiplicity;
    return out;
}

const CodimensionRow* CodimensionTable::row(unsigned n) const {
    for (const auto& r : rows) {
        if (r.n == n) return &r;
    }
    return nullptr;
}

CodimensionTable codimension_table(const SuperAlgebra& a, unsigned n_min, unsigned n_max, bool with_cocharacters,
                                   const ComputeOptions& options) {
    if (n_min == 0) throw PreconditionError("degrees start at n = 1");
    CodimensionTable table;
    table.algebra = a.name();
    table.even_dim = a.even_dim();
    table.odd_dim = a.odd_dim();
    for (unsigned n = n_min; n <= n_max; ++n) {
        CodimensionRow row;
        row.n = n;
        Integer colength_sum = 0;
        for (unsigned k = 0; k <= n; ++k) {
            PartialEntry entry;
            entry.k = k;
            entry.n_minus_k = n - k;
            entry.codimension = partial_codimension(a, k, n - k, options);
            if (with_cocharacters) {
                entry.lines = cocharacter(a, k, n - k, options);
                colength_sum += *entry.colength();
            }
            row.total += binomial(n, k) * entry.codimension;
            row.partials.push_back(std::move(entry));
        }
        if (with_cocharacters) row.total_colength = colength_sum;
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::vector<std::string> check_table_invariants(const CodimensionTable& table) {
    std::vector<std::string> out;
    const std::size_t d = table.dim();
    for (const auto& row : table.rows) {
        const unsigned n = row.n;
        Integer sum = 0;
        for (const auto& e : row.partials) sum += binomial(n, e.k) * e.codimension;
        if (sum != row.total) out.push_back("n=" + std::to_string(n) + ": total differs from Σ C(n,k) c_{k,n-k}");
        if (row.total > pow(Integer(static_cast<unsigned long>(d)), n)) {
            out.push_back("n=" + std::to_string(n) + ": c_n^gr = " + row.total.get_str() + " exceeds d^n");
        }
        for (const auto& e : row.partials) {
            if (!e.lines) continue;
            if (weighted_dimension(*e.lines) != e.codimension) {
                out.push_back("(" + std::to_string(e.k) + "," + std::to_string(e.n_minus_k) +
                              "): Σ m d_λ d_μ differs from the codimension");
            }
            for (const auto& line : *e.lines) {
                if (line.lambda.height() > d || line.mu.height() > d) {
                    out.push_back("line " + line.lambda.to_string() + " x " + line.mu.to_string() + " exceeds height d");
                }
                if (binomial(n, e.k) * hook_dimension(line.lambda) * hook_dimension(line.mu) > row.total) {
                    out.push_back("line " + line.lambda.to_string() + " x " + line.mu.to_string() +
                                  ": C(n,k) d_λ d_μ exceeds c_n^gr");
                }
            }
        }
    }
    return out;
}

}  // namespace supercodim
