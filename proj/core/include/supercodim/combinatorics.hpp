#ifndef SUPERCODIM_COMBINATORICS_HPP
#define SUPERCODIM_COMBINATORICS_HPP

#include <compare>
#include <initializer_list>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "supercodim/rational.hpp"
#include "supercodim/real.hpp"

namespace supercodim {

/// An integer partition, stored as its positive parts in weakly decreasing
/// order. Indexing past the last part reads as zero, which is the padded view
/// used throughout (a partition of height p < d is read as d parts).
class Partition {
public:
    Partition() = default;
    /// Accepts trailing zeros (they are dropped). Throws PreconditionError if
    /// the positive parts are not weakly decreasing.
    explicit Partition(std::vector<unsigned> parts);
    Partition(std::initializer_list<unsigned> parts)
        : Partition(std::vector<unsigned>(parts)) {}

    std::span<const unsigned> parts() const noexcept { return parts_; }
    unsigned weight() const noexcept { return weight_; }
    std::size_t height() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    /// 0-based part; zero past the height.
    unsigned operator[](std::size_t i) const noexcept {
        return i < parts_.size() ? parts_[i] : 0u;
    }

    /// Copy of the parts padded with zeros to length d (d >= height).
    std::vector<unsigned> padded(std::size_t d) const;

    /// Every part multiplied by `factor` (2λ for factor 2).
    Partition scaled(unsigned factor) const;

    /// "(3,1)"; the empty partition prints as "()".
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<unsigned> parts_;
    unsigned weight_ = 0;
};

/// Φ(ν)^m = m^m / ∏ ν_i^{ν_i} for a partition ν of m, held exactly.
struct PhiPower {
    Rational value;
    unsigned weight = 0;

    /// Φ(ν) itself, i.e. the m-th root of `value`.
    Real root(unsigned precision_bits) const;
};

/// All partitions of m with at most max_height parts, lexicographically
/// decreasing. m = 0 yields the single empty partition.
std::vector<Partition> enumerate_partitions(unsigned m, std::size_t max_height);

/// Number of standard Young tableaux of shape λ by the hook length formula.
/// The empty partition has dimension 1.
Integer hook_dimension(const Partition& lambda);

/// Counts standard Young tableaux of shape λ by exhaustive backtracking.
/// Throws SizeError for weight above 12.
Integer syt_count_oracle(const Partition& lambda);

/// ∏ ν_i^{ν_i}, with 0^0 = 1 for padded parts.
Integer self_power_product(const Partition& nu);

/// Exact Φ(ν)^m. Throws PreconditionError for the empty partition.
PhiPower phi_power(const Partition& nu);

/// Φ(ν) with relative error at most 2^(2 - precision_bits); precision_bits >= 64.
Real phi_real(const Partition& nu, unsigned precision_bits);

/// Φ of the two-part partition {k, n-k} of n; 1 when k is 0 or n.
Real phi_binomial_real(unsigned n, unsigned k, unsigned precision_bits);

/// Moves one box from row i down to row j (1-based, i < j), read through
/// the padded view. Throws InvalidMoveError if the result is not a partition.
Partition push_down(const Partition& nu, std::size_t i, std::size_t j);

/// Every partition reachable by one legal push-down with rows restricted to
/// 1..d. Without d, all rows are allowed (only j <= height + 1 can be legal).
std::vector<Partition> legal_push_downs(const Partition& nu,
                                        std::optional<std::size_t> d = std::nullopt);

/// Verdicts of Φ^m / m^{d²+d} <= d_ν <= m Φ^m, evaluated on integers:
/// lower: m^m <= d_ν m^{d²+d} ∏ν_i^{ν_i};  upper: d_ν ∏ν_i^{ν_i} <= m^{m+1}.
struct Lemma1Check {
    bool lower_holds = false;
    bool upper_holds = false;
    Integer dimension;        ///< d_ν
    Integer weight_power;     ///< m^m
    Integer self_power;       ///< ∏ ν_i^{ν_i}

    bool holds() const noexcept { return lower_holds && upper_holds; }
};

/// Requires weight >= 100 and height <= d; throws PreconditionError otherwise.
Lemma1Check verify_lemma1(const Partition& nu, std::size_t d);

/// True iff Φ(ρ) >= Φ(ν) for every legal single push-down ρ of ν.
bool verify_lemma2(const Partition& nu, std::optional<std::size_t> d = std::nullopt);

/// Exact check of n^n <= n C(n,k) k^k (n-k)^{n-k} and
/// C(n,k) k^k (n-k)^{n-k} <= n n^n. Requires 0 < k < n.
bool verify_stirling_bounds(unsigned n, unsigned k);

/// Outcome of an exhaustive sweep: how many cases ran and which failed.
struct SweepResult {
    std::size_t checked = 0;
    std::vector<std::string> failures;

    bool passed() const noexcept { return failures.empty(); }
};

/// Lemma 1 for every partition of each weight in `weights` with height <= d.
SweepResult sweep_lemma1(std::span<const unsigned> weights, std::size_t d, unsigned workers = 1);
/// Lemma 2 for every partition of weight 1..max_weight with height <= max_height.
SweepResult sweep_lemma2(unsigned max_weight, std::size_t max_height, unsigned workers = 1);
/// Binomial bounds for every 0 < k < n <= n_max.
SweepResult sweep_stirling(unsigned n_max, unsigned workers = 1);

}  // namespace supercodim

#endif
