#ifndef SUPERCODIM_EXPONENT_HPP
#define SUPERCODIM_EXPONENT_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "supercodim/codimension.hpp"
#include "supercodim/real.hpp"

namespace supercodim {

struct ExponentOptions {
    ComputeOptions compute;
    unsigned precision_bits = 128;
    /// Relative differences below 2^-tie_bits compare as equal.
    unsigned tie_bits = 64;
    std::size_t simplicity_trials = 16;
    std::uint64_t seed = 1;
};

struct ExponentRow {
    unsigned n = 0;
    Integer codimension;  ///< c_n^gr
    Real root;            ///< (c_n^gr)^{1/n}
    Real phi_lower;       ///< max Φ(k/n,(n-k)/n) Φ(λ) Φ(μ); 0 without lines
    Real envelope_low;    ///< min of root_m for m <= n
    Real envelope_high;   ///< max of root_m for m <= n
    Integer colength;     ///< l_n^gr
};

struct ExponentReport {
    std::string algebra;
    std::size_t dim = 0;
    std::size_t even_dim = 0;
    std::size_t odd_dim = 0;
    unsigned precision_bits = 128;
    bool even_part_solvable = false;
    /// Set when the even part is not solvable: the exponent is then expected
    /// to be at least 2 (asymptotically; reported, not asserted).
    bool expect_exponent_at_least_two = false;
    bool simplicity_not_simple = false;
    std::string simplicity_reason;
    std::uint64_t seed = 0;
    std::size_t simplicity_trials = 0;
    std::vector<ExponentRow> rows;
    /// Violated finite checks (root_n <= d, C(n,k) d_λ d_μ <= c_n^gr, ...).
    std::vector<std::string> invariant_failures;
};

/// Codimensions, n-th roots, Φ-product estimates and structural flags for
/// n = 1..n_max.
ExponentReport exponent_report(const SuperAlgebra& a, unsigned n_max, const ExponentOptions& options = {});

/// max over k and over cocharacter lines of Φ(k/n,(n-k)/n) Φ(λ) Φ(μ), with
/// Φ of an empty partition and of a degenerate split taken as 1.
/// Zero when there are no lines.
Real phi_lower_estimate(const SuperAlgebra& a, unsigned n, const ExponentOptions& options = {});
Real phi_lower_from_lines(unsigned n, const std::vector<PartialEntry>& partials, const ExponentOptions& options);

/// A nonzero bracket [v, c_1, ..., c_t, v'] with v the value of f on the given
/// substitution, c_i basis elements and v' a value of f on a basis substitution.
struct AmplificationWitness {
    std::vector<std::size_t> connectors;          ///< c_1..c_t as basis indices
    std::map<Slot, std::size_t> second_choice;    ///< basis substitution giving v'
    Vector value;                                 ///< the nonzero bracket
};

struct AmplificationResult {
    std::optional<AmplificationWitness> witness;
    /// Search exhausted lengths 0..d-1 on an algebra not certified non-simple.
    bool integrity_alarm = false;
    /// The algebra was certified not simple; existence is then not guaranteed.
    bool outside_hypothesis = false;
};

/// Breadth-first search over connector sequences of length 0..d-1, then
/// lexicographic over basis indices, then over second substitutions in
/// evaluation-matrix tuple order. Throws PreconditionError if f vanishes on
/// `sub`.
AmplificationResult amplify(const SuperAlgebra& a, const Polynomial& f, const Substitution& sub,
                            const ExponentOptions& options = {});

/// Same search starting from an arbitrary nonzero element v.
AmplificationResult amplify_from_value(const SuperAlgebra& a, const Vector& v, const Polynomial& f,
                                       const ExponentOptions& options = {});

struct AmplificationStep {
    Polynomial polynomial;            ///< g_q in normal form
    unsigned degree = 0;
    std::vector<std::size_t> connectors;
    Substitution witness;             ///< substitution on which g_q is nonzero
    Vector value;                     ///< re-evaluated value of g_q on `witness`
    bool gap_ok = false;              ///< degree - previous degree <= n_0 + d
};

struct AmplificationChain {
    std::vector<unsigned> degrees;    ///< n_0 < n_1 < ...
    std::vector<AmplificationStep> steps;
    bool complete = false;
    bool integrity_alarm = false;
    bool outside_hypothesis = false;
    std::string message;
};

/// Builds g_{q+1} = [g_q, z_1, ..., z_t, f_{q+1}] for q_max steps (g_1 = f),
/// each a verified non-identity. Stops early, with `message` set, when the
/// search fails or the degree would exceed max_degree.
AmplificationChain iterate_amplification(const SuperAlgebra& a, const Polynomial& f, const Substitution& sub,
                                         unsigned q_max, unsigned max_degree = 16,
                                         const ExponentOptions& options = {});

/// The first basis substitution (tuple order) on which f is nonzero.
std::optional<Substitution> first_nonzero_substitution(const SuperAlgebra& a, const Polynomial& f);

}  // namespace supercodim

#endif
