#ifndef SUPERCODIM_SUPERALGEBRA_HPP
#define SUPERCODIM_SUPERALGEBRA_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "supercodim/errors.hpp"
#include "supercodim/linalg.hpp"
#include "supercodim/rational.hpp"

namespace supercodim {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
    return static_cast<Parity>(static_cast<unsigned>(a) ^ static_cast<unsigned>(b));
}

/// (-1)^{|a||b|}
inline int koszul_sign(Parity a, Parity b) { return a == Parity::Odd && b == Parity::Odd ? -1 : 1; }

/// A finite-dimensional Lie superalgebra L = L_0 ⊕ L_1 over Q, given by
/// structure constants [e_i, e_j] = Σ_l c(i, j, l) e_l on a basis whose
/// first even_dim() vectors are even and the rest odd.
///
/// Construction does not enforce the axioms; see validate(). Values are
/// immutable once built and safe to share between threads.
class SuperAlgebra {
public:
    /// `constants` is indexed [(i * d + j) * d + l].
    SuperAlgebra(std::string name, std::vector<std::string> even_labels,
                 std::vector<std::string> odd_labels, std::vector<Rational> constants);

    const std::string& name() const noexcept { return name_; }
    std::size_t even_dim() const noexcept { return even_dim_; }
    std::size_t odd_dim() const noexcept { return labels_.size() - even_dim_; }
    std::size_t dim() const noexcept { return labels_.size(); }

    Parity parity(std::size_t i) const noexcept { return i < even_dim_ ? Parity::Even : Parity::Odd; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::optional<std::size_t> index_of(std::string_view label) const;

    const Rational& constant(std::size_t i, std::size_t j, std::size_t l) const {
        return constants_[(i * dim() + j) * dim() + l];
    }
    const std::vector<Rational>& constants() const noexcept { return constants_; }

    Vector basis_vector(std::size_t i) const;
    /// Indices of the basis vectors of the given parity.
    std::vector<std::size_t> homogeneous_basis(Parity p) const;

    /// Bilinear extension of the structure constants. Throws
    /// PreconditionError on a length mismatch.
    Vector bracket(const Vector& u, const Vector& v) const;
    /// [u, e_j], the hot path of polynomial evaluation.
    Vector bracket_with_basis(const Vector& u, std::size_t j) const;
    /// Parity of a nonzero vector supported in one component; nullopt if mixed or zero.
    std::optional<Parity> homogeneous_parity(const Vector& v) const;

    /// An algebra with the same basis and one constant replaced.
    SuperAlgebra with_constant(std::size_t i, std::size_t j, std::size_t l, Rational value) const;

private:
    void index_sparse();

    std::string name_;
    std::size_t even_dim_;
    std::vector<std::string> labels_;
    std::vector<Rational> constants_;
    // nonzero (l, c(i, j, l)) per (i, j)
    std::vector<std::vector<std::pair<std::size_t, Rational>>> sparse_;
};

/// One failed axiom instance on basis indices.
struct Violation {
    enum class Kind { Grading, SkewSymmetry, Jacobi };
    Kind kind;
    std::size_t i, j, l;  ///< basis triple (for Grading, l is the output index)
    std::string description;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool valid() const noexcept { return violations.empty(); }
    std::string to_string(const SuperAlgebra& a) const;
};

/// Checks the grading, super skew-symmetry and the super Jacobi identity
/// [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|} [b,[a,c]] on every basis triple.
ValidationReport validate(const SuperAlgebra& a);

/// Thrown by loaders when an algebra fails validate().
class InvalidAlgebraError : public PreconditionError {
public:
    InvalidAlgebraError(const std::string& message, ValidationReport report)
        : PreconditionError(message), report_(std::move(report)) {}
    const ValidationReport& report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

/// Center {z : [z, L] = 0}.
Subspace center(const SuperAlgebra& a);

/// span{[u, v] : u in U, v in V}.
Subspace bracket_span(const SuperAlgebra& a, const Subspace& u, const Subspace& v);

struct DerivedSeries {
    /// L_0 = G^(0), G^(1) = [G^(0), G^(0)], ... up to and including the
    /// first repeated term.
    std::vector<Subspace> terms;
    bool solvable = false;
};

DerivedSeries derived_series_even(const SuperAlgebra& a);

/// The smallest subspace containing `seed` that is closed under bracketing
/// with every basis element.
Subspace ideal_closure(const SuperAlgebra& a, const Subspace& seed);

struct SimplicityVerdict {
    /// When true, `witness` is a proper graded ideal (zero only for a
    /// one-dimensional abelian algebra, which has no proper nonzero ideal).
    bool not_simple = false;
    Subspace witness;
    std::string reason;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
};

/// One-sided simplicity probe: center, derived algebra, ideal closure of each
/// basis vector and of `trials` seeded random homogeneous vectors.
/// not_simple is a certificate; otherwise the algebra is only heuristically
/// simple. Throws PreconditionError for the zero algebra.
SimplicityVerdict simplicity_verdict(const SuperAlgebra& a, std::size_t trials = 16,
                                     std::uint64_t seed = 1);

/// A built-in algebra: "abelian:<d0>:<d1>", "heisenberg", "sl2", "osp12".
/// Throws PreconditionError for unknown names.
SuperAlgebra builtin(std::string_view name);

/// Names accepted by builtin() (with abelian shown as its pattern).
std::vector<std::string> builtin_names();

/// Structure constants of the superalgebra spanned by the given square
/// supermatrices under the supercommutator [A,B] = AB - (-1)^{|A||B|} BA.
/// `row_parity[r]` grades the matrix indices. Throws IntegrityError if a
/// supercommutator leaves the span.
SuperAlgebra from_matrix_realization(std::string name, std::vector<std::string> even_labels,
                                     std::vector<std::string> odd_labels,
                                     const std::vector<RationalMatrix>& even_matrices,
                                     const std::vector<RationalMatrix>& odd_matrices,
                                     const std::vector<Parity>& row_parity);

/// Parses an algebra description (YAML; JSON documents are accepted too).
/// Missing brackets are zero and the table is completed by super
/// skew-symmetry. Throws ParseError with line/column and field path on
/// malformed input and InvalidAlgebraError when the axioms fail.
SuperAlgebra parse_algebra(std::string_view text);
SuperAlgebra load_algebra(const std::filesystem::path& path);

/// "builtin:<name>" or a file path.
SuperAlgebra resolve_algebra(std::string_view source);

}  // namespace supercodim

#endif
