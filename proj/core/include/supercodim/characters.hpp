#ifndef SUPERCODIM_CHARACTERS_HPP
#define SUPERCODIM_CHARACTERS_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "supercodim/combinatorics.hpp"
#include "supercodim/permutation.hpp"
#include "supercodim/rational.hpp"

namespace supercodim {

/// A conjugacy class of S_n, identified by its cycle lengths.
class CycleType {
public:
    CycleType() = default;
    explicit CycleType(Partition cycles) : cycles_(std::move(cycles)) {}

    static CycleType identity(unsigned degree);

    const Partition& cycles() const noexcept { return cycles_; }
    unsigned degree() const noexcept { return cycles_.weight(); }

    /// degree! / (∏ l_i · ∏ mult_j!)
    Integer class_size() const;
    /// The canonical element (0 1 .. l1-1)(l1 ..)... of the class.
    Permutation representative() const { return Permutation::from_cycle_type(cycles_); }

    friend bool operator==(const CycleType&, const CycleType&) = default;
    friend auto operator<=>(const CycleType& a, const CycleType& b) { return a.cycles_ <=> b.cycles_; }

private:
    Partition cycles_;
};

/// Every conjugacy class of S_n (the empty class for n = 0), in
/// lexicographically decreasing order of cycle type.
std::vector<CycleType> conjugacy_classes(unsigned n);

/// χ_λ(c) by the Murnaghan–Nakayama rule. Memoized in a process-wide table
/// guarded for concurrent use. Throws PreconditionError on degree mismatch.
Integer character_value(const Partition& lambda, const CycleType& c);

/// χ_λ(cλ) · χ_μ(cμ).
Integer product_character_value(const Partition& lambda, const Partition& mu,
                                const CycleType& c_lambda, const CycleType& c_mu);

/// A class function on S_k × S_{n-k}, given by its value on each pair of
/// cycle types.
using TraceFunction = std::map<std::pair<CycleType, CycleType>, Rational>;

/// One irreducible constituent (λ, μ) with multiplicity m_{λ,μ} >= 1.
struct CocharacterLine {
    Partition lambda;
    Partition mu;
    Integer multiplicity;

    friend bool operator==(const CocharacterLine&, const CocharacterLine&) = default;
};

/// Multiplicities of the irreducible characters χ_λ ⊗ χ_μ in `trace`,
/// from the inner product over class pairs. Only nonzero lines are returned,
/// ordered by (λ, μ) lexicographically decreasing.
///
/// Throws PreconditionError if the trace misses a class pair, and
/// IntegrityError if a multiplicity is negative or non-integral, or a line
/// exceeds max_height (when given).
std::vector<CocharacterLine> decompose(const TraceFunction& trace, unsigned k,
                                       unsigned n_minus_k,
                                       std::optional<std::size_t> max_height = std::nullopt);

}  // namespace supercodim

#endif
