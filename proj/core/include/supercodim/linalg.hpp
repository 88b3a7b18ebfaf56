#ifndef SUPERCODIM_LINALG_HPP
#define SUPERCODIM_LINALG_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "supercodim/rational.hpp"

namespace supercodim {

/// Dense row-major matrix of rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    RationalMatrix transposed() const;
    bool is_zero() const;

    static RationalMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// The word-size primes used by the modular rank pre-pass.
inline constexpr std::array<std::uint32_t, 3> kRankPrimes = {2147483647u, 2147483629u, 2147483587u};

struct RankOptions {
    /// Also compute ranks modulo kRankPrimes and require the largest to agree
    /// with the exact rank; a mismatch raises IntegrityError.
    bool modular_check = true;
};

/// Exact rank over Q: each row is scaled to integers, then reduced by
/// fraction-free (Bareiss) elimination.
std::size_t rank_exact(const RationalMatrix& m, RankOptions options = {});

/// Rank of the integer-scaled matrix modulo a prime.
std::size_t rank_mod_prime(const RationalMatrix& m, std::uint32_t prime);

/// Reduced row echelon form: nonzero rows only, with the pivot column of each.
struct RowEchelon {
    std::vector<Vector> rows;
    std::vector<std::size_t> pivots;
};

RowEchelon reduced_row_echelon(const std::vector<Vector>& rows, std::size_t cols);

/// A linear subspace of Q^n, held as its canonical reduced echelon basis.
class Subspace {
public:
    Subspace() = default;
    /// Span of `vectors` (each of length ambient).
    Subspace(std::size_t ambient, const std::vector<Vector>& vectors);

    static Subspace zero(std::size_t ambient) { return Subspace(ambient, {}); }
    static Subspace full(std::size_t ambient);
    /// Span of the standard basis vectors with the given indices.
    static Subspace coordinate(std::size_t ambient, const std::vector<std::size_t>& indices);

    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t dimension() const noexcept { return echelon_.rows.size(); }
    bool is_zero() const noexcept { return echelon_.rows.empty(); }
    bool is_full() const noexcept { return dimension() == ambient_; }

    const std::vector<Vector>& basis() const noexcept { return echelon_.rows; }
    const std::vector<std::size_t>& pivots() const noexcept { return echelon_.pivots; }

    /// v minus its projection along the echelon basis; zero iff v is inside.
    Vector residual(const Vector& v) const;
    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    Subspace operator+(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.echelon_.rows == b.echelon_.rows;
    }

private:
    std::size_t ambient_ = 0;
    RowEchelon echelon_;
};

/// {v : M v = 0}.
Subspace null_space(const RationalMatrix& m);

}  // namespace supercodim

#endif
