#include "supercodim/linalg.hpp"

#include <algorithm>

#include "supercodim/errors.hpp"

namespace supercodim {

Vector RationalMatrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    }
    return out;
}

bool RationalMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
}

RationalMatrix RationalMatrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    RationalMatrix out(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw PreconditionError("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) out(r, c) = rows[r][c];
    }
    return out;
}

namespace {

using IntegerRows = std::vector<std::vector<Integer>>;

// Multiplies each row by the lcm of its denominators.
IntegerRows integer_scaled(const RationalMatrix& m) {
    IntegerRows out(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer scale = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(r, c).get_den_mpz_t());
        }
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Rational& x = m(r, c);
            out[r][c] = x.get_num() * (scale / x.get_den());
        }
    }
    return out;
}

std::size_t bareiss_rank(IntegerRows a, std::size_t cols) {
    const std::size_t rows = a.size();
    Integer previous = 1;
    Integer t;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        const Integer& p = a[rank][col];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const Integer factor = a[i][col];
            for (std::size_t j = col + 1; j < cols; ++j) {
                // a[i][j] = (p * a[i][j] - factor * a[rank][j]) / previous, exact.
                mpz_mul(t.get_mpz_t(), p.get_mpz_t(), a[i][j].get_mpz_t());
                mpz_submul(t.get_mpz_t(), factor.get_mpz_t(), a[rank][j].get_mpz_t());
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
            }
            a[i][col] = 0;
        }
        previous = a[rank][col];
        ++rank;
    }
    return rank;
}

}  // namespace

std::size_t rank_mod_prime(const RationalMatrix& m, std::uint32_t prime) {
    const auto scaled = integer_scaled(m);
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = mpz_fdiv_ui(scaled[r][c].get_mpz_t(), prime);
    }
    auto inverse = [prime](std::uint64_t x) {
        std::uint64_t result = 1, base = x, e = prime - 2;
        while (e) {
            if (e & 1) result = result * base % prime;
            base = base * base % prime;
            e >>= 1;
        }
        return result;
    };
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        const std::uint64_t inv = inverse(a[rank][col]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (a[i][col] == 0) continue;
            const std::uint64_t f = a[i][col] * inv % prime;
            for (std::size_t j = col; j < cols; ++j) {
                a[i][j] = (a[i][j] + (prime - f) * a[rank][j]) % prime;
            }
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_exact(const RationalMatrix& m, RankOptions options) {
    const std::size_t exact = m.rows() <= m.cols() ? bareiss_rank(integer_scaled(m), m.cols())
                                                   : bareiss_rank(integer_scaled(m.transposed()), m.rows());
    if (options.modular_check) {
        std::size_t best = 0;
        for (auto p : kRankPrimes) best = std::max(best, rank_mod_prime(m, p));
        if (best != exact) {
            throw IntegrityError("modular rank " + std::to_string(best) + " disagrees with exact rank " +
                                 std::to_string(exact));
        }
    }
    return exact;
}

RowEchelon reduced_row_echelon(const std::vector<Vector>& input, std::size_t cols) {
    std::vector<Vector> a;
    a.reserve(input.size());
    for (const auto& v : input) {
        if (v.size() != cols) throw PreconditionError("vector length does not match the ambient dimension");
        if (!is_zero(v)) a.push_back(v);
    }
    RowEchelon out;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < a.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
        if (pivot == a.size()) continue;
        std::swap(a[pivot], a[rank]);
        const Rational inv = 1 / a[rank][col];
        for (std::size_t j = col; j < cols; ++j) a[rank][j] *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == rank || a[i][col] == 0) continue;
            const Rational f = a[i][col];
            for (std::size_t j = col; j < cols; ++j) {
                if (a[rank][j] != 0) a[i][j] -= f * a[rank][j];
            }
        }
        out.pivots.push_back(col);
        ++rank;
    }
    a.resize(rank);
    out.rows = std::move(a);
    return out;
}

Subspace::Subspace(std::size_t ambient, const std::vector<Vector>& vectors)
    : ambient_(ambient), echelon_(reduced_row_echelon(vectors, ambient)) {}

Subspace Subspace::full(std::size_t ambient) {
    std::vector<std::size_t> all(ambient);
    for (std::size_t i = 0; i < ambient; ++i) all[i] = i;
    return coordinate(ambient, all);
}

Subspace Subspace::coordinate(std::size_t ambient, const std::vector<std::size_t>& indices) {
    std::vector<Vector> rows;
    for (auto i : indices) {
        Vector v(ambient);
        v.at(i) = 1;
        rows.push_back(std::move(v));
    }
    return Subspace(ambient, rows);
}

Vector Subspace::residual(const Vector& v) const {
    if (v.size() != ambient_) throw PreconditionError("vector length does not match the ambient dimension");
    Vector out(v);
    for (std::size_t i = 0; i < echelon_.rows.size(); ++i) {
        const Rational f = out[echelon_.pivots[i]];
        if (f == 0) continue;
        const auto& row = echelon_.rows[i];
        for (std::size_t j = 0; j < ambient_; ++j) {
            if (row[j] != 0) out[j] -= f * row[j];
        }
    }
    return out;
}

bool Subspace::contains(const Vector& v) const { return supercodim::is_zero(residual(v)); }

bool Subspace::contains(const Subspace& other) const {
    return std::all_of(other.basis().begin(), other.basis().end(),
                       [&](const Vector& v) { return contains(v); });
}

Subspace Subspace::operator+(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw PreconditionError("sum of subspaces of different spaces");
    std::vector<Vector> rows = basis();
    rows.insert(rows.end(), other.basis().begin(), other.basis().end());
    return Subspace(ambient_, rows);
}

Subspace null_space(const RationalMatrix& m) {
    std::vector<Vector> rows;
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    const auto echelon = reduced_row_echelon(rows, m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : echelon.pivots) is_pivot[p] = true;
    std::vector<Vector> kernel;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < echelon.rows.size(); ++i) v[echelon.pivots[i]] = -echelon.rows[i][free];
        kernel.push_back(std::move(v));
    }
    return Subspace(m.cols(), kernel);
}

}  // namespace supercodim
