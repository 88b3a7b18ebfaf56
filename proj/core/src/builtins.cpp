#include <charconv>

#include "supercodim/superalgebra.hpp"

namespace supercodim {

namespace {

RationalMatrix unit(std::size_t n, std::size_t r, std::size_t c, long value = 1) {
    RationalMatrix m(n, n);
    m(r, c) = value;
    return m;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) + b(r, c);
    }
    return out;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(r, k) == 0) continue;
            for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += a(r, k) * b(k, c);
        }
    }
    return out;
}

Vector flatten(const RationalMatrix& m) {
    Vector v;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
    }
    return v;
}

SuperAlgebra abelian(std::size_t d0, std::size_t d1) {
    std::vector<std::string> even, odd;
    for (std::size_t i = 0; i < d0; ++i) even.push_back("a" + std::to_string(i + 1));
    for (std::size_t i = 0; i < d1; ++i) odd.push_back("b" + std::to_string(i + 1));
    const std::size_t d = d0 + d1;
    return SuperAlgebra("abelian:" + std::to_string(d0) + ":" + std::to_string(d1), std::move(even),
                        std::move(odd), std::vector<Rational>(d * d * d));
}

SuperAlgebra heisenberg() {
    const std::size_t d = 3;
    std::vector<Rational> c(d * d * d);
    // [x, y] = z
    c[(0 * d + 1) * d + 2] = 1;
    c[(1 * d + 0) * d + 2] = -1;
    return SuperAlgebra("heisenberg", {"x", "y", "z"}, {}, std::move(c));
}

SuperAlgebra sl2() {
    const std::vector<Parity> grading(2, Parity::Even);
    return from_matrix_realization("sl2", {"h", "e", "f"}, {},
                                   {unit(2, 0, 0) + unit(2, 1, 1, -1), unit(2, 0, 1), unit(2, 1, 0)}, {},
                                   grading);
}

// osp(1|2) inside gl(1|2): matrix index 0 even, 1 and 2 odd. The even part
// is sp(2) ≅ sl2 on the odd block.
SuperAlgebra osp12() {
    const std::vector<Parity> grading = {Parity::Even, Parity::Odd, Parity::Odd};
    const RationalMatrix h = unit(3, 1, 1) + unit(3, 2, 2, -1);
    const RationalMatrix e = unit(3, 1, 2);
    const RationalMatrix f = unit(3, 2, 1);
    const RationalMatrix x = unit(3, 1, 0) + unit(3, 0, 2);
    const RationalMatrix y = unit(3, 2, 0) + unit(3, 0, 1, -1);
    return from_matrix_realization("osp12", {"h", "e", "f"}, {"x", "y"}, {h, e, f}, {x, y}, grading);
}

bool parse_size(std::string_view s, std::size_t& out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

SuperAlgebra from_matrix_realization(std::string name, std::vector<std::string> even_labels,
                                     std::vector<std::string> odd_labels,
                                     const std::vector<RationalMatrix>& even_matrices,
                                     const std::vector<RationalMatrix>& odd_matrices,
                                     const std::vector<Parity>& row_parity) {
    std::vector<RationalMatrix> basis(even_matrices);
    basis.insert(basis.end(), odd_matrices.begin(), odd_matrices.end());
    const std::size_t d = basis.size();
    if (even_labels.size() != even_matrices.size() || odd_labels.size() != odd_matrices.size()) {
        throw PreconditionError("label count does not match matrix count");
    }
    const std::size_t n = row_parity.size();
    auto parity_of = [&](std::size_t b) { return b < even_matrices.size() ? Parity::Even : Parity::Odd; };
    for (std::size_t b = 0; b < d; ++b) {
        if (basis[b].rows() != n || basis[b].cols() != n) throw PreconditionError("matrix size mismatch");
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                if (basis[b](r, c) != 0 && row_parity[r] + row_parity[c] != parity_of(b)) {
                    throw PreconditionError("matrix " + std::to_string(b) + " is not homogeneous of its parity");
                }
            }
        }
    }

    // Coordinates of a matrix in the basis: solve with the echelon form of
    // the augmented system [basis^T | target].
    std::vector<Vector> columns;
    for (const auto& b : basis) columns.push_back(flatten(b));
    const std::size_t entries = n * n;
    if (reduced_row_echelon(columns, entries).rows.size() != d) {
        throw PreconditionError("realization matrices are linearly dependent");
    }

    std::vector<Rational> constants(d * d * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            RationalMatrix prod = multiply(basis[i], basis[j]);
            const RationalMatrix rev = multiply(basis[j], basis[i]);
            const int s = koszul_sign(parity_of(i), parity_of(j));
            for (std::size_t r = 0; r < n; ++r) {
                for (std::size_t c = 0; c < n; ++c) prod(r, c) -= s * rev(r, c);
            }
            const Vector target = flatten(prod);
            std::vector<Vector> rows(entries, Vector(d + 1));
            for (std::size_t e = 0; e < entries; ++e) {
                for (std::size_t b = 0; b < d; ++b) rows[e][b] = columns[b][e];
                rows[e][d] = target[e];
            }
            const auto echelon = reduced_row_echelon(rows, d + 1);
            for (std::size_t r = 0; r < echelon.rows.size(); ++r) {
                if (echelon.pivots[r] == d) {
                    throw IntegrityError("supercommutator of matrices " + std::to_string(i) + " and " +
                                         std::to_string(j) + " leaves the span");
                }
                constants[(i * d + j) * d + echelon.pivots[r]] = echelon.rows[r][d];
            }
        }
    }
    return SuperAlgebra(std::move(name), std::move(even_labels), std::move(odd_labels), std::move(constants));
}

SuperAlgebra builtin(std::string_view name) {
    if (name == "heisenberg") return heisenberg();
    if (name == "sl2") return sl2();
    if (name == "osp12") return osp12();
    if (name.starts_with("abelian:")) {
        const auto rest = name.substr(8);
        const auto colon = rest.find(':');
        std::size_t d0 = 0, d1 = 0;
        if (colon != std::string_view::npos && parse_size(rest.substr(0, colon), d0) &&
            parse_size(rest.substr(colon + 1), d1)) {
            return abelian(d0, d1);
        }
    }
    throw PreconditionError("unknown builtin algebra '" + std::string(name) + "'");
}

std::vector<std::string> builtin_names() { return {"abelian:<d0>:<d1>", "heisenberg", "sl2", "osp12"}; }

}  // namespace supercodim
