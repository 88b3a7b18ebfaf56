#ifndef SUPERCODIM_CODIMENSION_HPP
#define SUPERCODIM_CODIMENSION_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "supercodim/characters.hpp"
#include "supercodim/linalg.hpp"
#include "supercodim/multilinear.hpp"
#include "supercodim/superalgebra.hpp"

namespace supercodim {

/// Default ceiling on evaluation-matrix entries (rows x columns).
inline constexpr std::uint64_t kDefaultMaxEntries = 100'000'000;

/// Environment variable that overrides kDefaultMaxEntries.
inline constexpr const char* kMaxEntriesEnv = "SUPERCODIM_MAX_ENTRIES";

/// kDefaultMaxEntries unless the environment override is set to a positive
/// integer.
std::uint64_t default_max_entries();

struct ComputeOptions {
    std::uint64_t max_entries = default_max_entries();
    unsigned workers = 1;
    /// Cross-check exact ranks modulo three word-size primes.
    bool modular_check = true;
};

/// Values of the spanning monomials of P_{k,n-k} on every basis substitution.
///
/// Row r belongs to monomials[r]. Substitution tuples assign a basis index to
/// each variable in the order x_1..x_k, y_1..y_{n-k}; even variables range
/// over the even basis, odd over the odd basis, in increasing index order,
/// the last variable varying fastest. Column t * dim + l holds coordinate l
/// of the value on tuple t.
struct EvaluationMatrix {
    unsigned k = 0;
    unsigned n_minus_k = 0;
    std::size_t dim = 0;
    std::vector<Monomial> monomials;
    std::vector<std::vector<std::size_t>> tuples;
    RationalMatrix values;
};

/// Throws ResourceError when rows x columns exceeds options.max_entries.
EvaluationMatrix evaluation_matrix(const SuperAlgebra& a, unsigned k, unsigned n_minus_k,
                                   const ComputeOptions& options = {});

/// Number of matrix entries evaluation_matrix would allocate (saturating).
std::uint64_t evaluation_matrix_entries(const SuperAlgebra& a, unsigned k, unsigned n_minus_k);

std::size_t rank_exact(const EvaluationMatrix& m, const ComputeOptions& options = {});

/// c_{k,n-k}(A) = dim P_{k,n-k}(A).
std::size_t partial_codimension(const SuperAlgebra& a, unsigned k, unsigned n_minus_k,
                                const ComputeOptions& options = {});

/// c_n^gr(A) = Σ_k C(n,k) c_{k,n-k}(A).
Integer total_codimension(const SuperAlgebra& a, unsigned n, const ComputeOptions& options = {});

/// The character of S_k x S_{n-k} acting on P_{k,n-k}(A), realized as the
/// row space of the evaluation matrix with the group permuting substitution
/// tuples. Throws IntegrityError if an image leaves the row space or two
/// representatives of a class disagree.
TraceFunction trace_on_quotient(const SuperAlgebra& a, unsigned k, unsigned n_minus_k,
                                const ComputeOptions& options = {});

/// Decomposition of the (k, n-k) cocharacter; every line has heights <= dim A.
std::vector<CocharacterLine> cocharacter(const SuperAlgebra& a, unsigned k, unsigned n_minus_k,
                                         const ComputeOptions& options = {});

/// l_n^gr(A) = Σ_k Σ m_{λ,μ}.
Integer colength(const SuperAlgebra& a, unsigned n, const ComputeOptions& options = {});

/// Σ m_{λ,μ} d_λ d_μ, with d by the hook length formula.
Integer weighted_dimension(const std::vector<CocharacterLine>& lines);

struct Eq3Check {
    std::size_t codimension = 0;  ///< rank route
    Integer character_sum;        ///< Σ m d_λ d_μ
    bool holds = false;
};

/// Compares c_{k,n-k} from the rank with Σ m_{λ,μ} d_λ d_μ from the traces.
Eq3Check verify_eq3(const SuperAlgebra& a, unsigned k, unsigned n_minus_k, const ComputeOptions& options = {});

struct MonotonicityCheck {
    bool holds = true;
    /// The algebra was certified not simple, so the growth argument does not apply.
    bool outside_hypothesis = false;
    std::vector<std::string> failures;
};

/// Checks c_{k,j+1} >= c_{k,j} for k + j + 1 <= n_max and c_n^gr >= c_m^gr
/// for m <= n <= n_max.
MonotonicityCheck verify_monotonicity(const SuperAlgebra& a, unsigned n_max, const ComputeOptions& options = {});

struct PartialEntry {
    unsigned k = 0;
    unsigned n_minus_k = 0;
    std::size_t codimension = 0;
    /// Present when cocharacters were requested.
    std::optional<std::vector<CocharacterLine>> lines;

    std::optional<Integer> colength() const;
};

struct CodimensionRow {
    unsigned n = 0;
    std::vector<PartialEntry> partials;  ///< k = 0..n
    Integer total;                       ///< c_n^gr
    std::optional<Integer> total_colength;
};

/// c_{k,n-k}, c_n^gr and optionally cocharacters for n = n_min..n_max.
struct CodimensionTable {
    std::string algebra;
    std::size_t even_dim = 0;
    std::size_t odd_dim = 0;
    std::vector<CodimensionRow> rows;

    std::size_t dim() const noexcept { return even_dim + odd_dim; }
    const CodimensionRow* row(unsigned n) const;
};

CodimensionTable codimension_table(const SuperAlgebra& a, unsigned n_min, unsigned n_max, bool with_cocharacters,
                                   const ComputeOptions& options = {});

/// Violations of c_n^gr <= d^n, C(n,k) d_λ d_μ <= c_n^gr, heights <= d and
/// c_n^gr = Σ C(n,k) c_{k,n-k}, each as a message. Empty when all hold.
std::vector<std::string> check_table_invariants(const CodimensionTable& table);

}  // namespace supercodim

#endif
