#include "supercodim/superalgebra.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace supercodim {

SuperAlgebra::SuperAlgebra(std::string name, std::vector<std::string> even_labels,
                           std::vector<std::string> odd_labels, std::vector<Rational> constants)
    : name_(std::move(name)), even_dim_(even_labels.size()), labels_(std::move(even_labels)),
      constants_(std::move(constants)) {
    labels_.insert(labels_.end(), odd_labels.begin(), odd_labels.end());
    const std::size_t d = labels_.size();
    if (constants_.size() != d * d * d) {
        throw PreconditionError("structure constant table has " + std::to_string(constants_.size()) +
                                " entries, expected " + std::to_string(d * d * d));
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            if (labels_[i] == labels_[j]) throw PreconditionError("duplicate basis label '" + labels_[i] + "'");
        }
    }
    index_sparse();
}

void SuperAlgebra::index_sparse() {
    const std::size_t d = dim();
    sparse_.assign(d * d, {});
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t l = 0; l < d; ++l) {
                const Rational& c = constant(i, j, l);
                if (c != 0) sparse_[i * d + j].emplace_back(l, c);
            }
        }
    }
}

std::optional<std::size_t> SuperAlgebra::index_of(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
}

Vector SuperAlgebra::basis_vector(std::size_t i) const {
    Vector v(dim());
    v.at(i) = 1;
    return v;
}

std::vector<std::size_t> SuperAlgebra::homogeneous_basis(Parity p) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (parity(i) == p) out.push_back(i);
    }
    return out;
}

Vector SuperAlgebra::bracket(const Vector& u, const Vector& v) const {
    const std::size_t d = dim();
    if (u.size() != d || v.size() != d) throw PreconditionError("bracket operands must have length dim L");
    Vector out(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (u[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (v[j] == 0) continue;
            const Rational w = u[i] * v[j];
            for (const auto& [l, c] : sparse_[i * d + j]) out[l] += w * c;
        }
    }
    return out;
}

Vector SuperAlgebra::bracket_with_basis(const Vector& u, std::size_t j) const {
    const std::size_t d = dim();
    if (u.size() != d) throw PreconditionError("bracket operand must have length dim L");
    Vector out(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (u[i] == 0) continue;
        for (const auto& [l, c] : sparse_[i * d + j]) out[l] += u[i] * c;
    }
    return out;
}

std::optional<Parity> SuperAlgebra::homogeneous_parity(const Vector& v) const {
    bool even = false, odd = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        (parity(i) == Parity::Even ? even : odd) = true;
    }
    if (even == odd) return std::nullopt;
    return even ? Parity::Even : Parity::Odd;
}

SuperAlgebra SuperAlgebra::with_constant(std::size_t i, std::size_t j, std::size_t l, Rational value) const {
    auto constants = constants_;
    constants.at((i * dim() + j) * dim() + l) = std::move(value);
    std::vector<std::string> even(labels_.begin(), labels_.begin() + static_cast<std::ptrdiff_t>(even_dim_));
    std::vector<std::string> odd(labels_.begin() + static_cast<std::ptrdiff_t>(even_dim_), labels_.end());
    return SuperAlgebra(name_, std::move(even), std::move(odd), std::move(constants));
}

std::string ValidationReport::to_string(const SuperAlgebra& a) const {
    if (valid()) return "valid\n";
    std::ostringstream out;
    for (const auto& v : violations) out << v.description << '\n';
    (void)a;
    return out.str();
}

ValidationReport validate(const SuperAlgebra& a) {
    ValidationReport report;
    const std::size_t d = a.dim();
    auto name = [&](std::size_t i) { return a.label(i); };

    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t l = 0; l < d; ++l) {
                if (a.constant(i, j, l) != 0 && a.parity(l) != a.parity(i) + a.parity(j)) {
                    report.violations.push_back(
                        {Violation::Kind::Grading, i, j, l,
                         "grading: [" + name(i) + "," + name(j) + "] has a component along " + name(l) +
                             " of the wrong parity (i,j,l)=(" + std::to_string(i) + "," + std::to_string(j) +
                             "," + std::to_string(l) + ")"});
                }
            }
        }
    }

    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) {
            const int s = koszul_sign(a.parity(i), a.parity(j));
            for (std::size_t l = 0; l < d; ++l) {
                if (a.constant(i, j, l) + s * a.constant(j, i, l) != 0) {
                    report.violations.push_back(
                        {Violation::Kind::SkewSymmetry, i, j, l,
                         "skew-symmetry: [" + name(i) + "," + name(j) + "] + (-1)^{|" + name(i) + "||" +
                             name(j) + "|}[" + name(j) + "," + name(i) + "] != 0 along " + name(l)});
                    break;
                }
            }
        }
    }

    for (std::size_t i = 0; i < d; ++i) {
        const Vector ei = a.basis_vector(i);
        for (std::size_t j = 0; j < d; ++j) {
            const Vector eij = a.bracket_with_basis(ei, j);
            const Vector ej = a.basis_vector(j);
            const int s = koszul_sign(a.parity(i), a.parity(j));
            for (std::size_t l = 0; l < d; ++l) {
                // [e_i,[e_j,e_l]] - [[e_i,e_j],e_l] - s [e_j,[e_i,e_l]]
                Vector lhs = a.bracket(ei, a.bracket_with_basis(ej, l));
                const Vector t1 = a.bracket_with_basis(eij, l);
                const Vector t2 = a.bracket(ej, a.bracket_with_basis(ei, l));
                for (std::size_t r = 0; r < d; ++r) lhs[r] -= t1[r] + s * t2[r];
                if (!is_zero(lhs)) {
                    report.violations.push_back(
                        {Violation::Kind::Jacobi, i, j, l,
                         "jacobi: fails on (" + name(i) + "," + name(j) + "," + name(l) + ") (i,j,l)=(" +
                             std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(l) + ")"});
                }
            }
        }
    }
    return report;
}

Subspace center(const SuperAlgebra& a) {
    const std::size_t d = a.dim();
    // Row (j, l) of the stacked adjoint: z -> [z, e_j]_l.
    RationalMatrix m(d * d, d);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t l = 0; l < d; ++l) {
            for (std::size_t i = 0; i < d; ++i) m(j * d + l, i) = a.constant(i, j, l);
        }
    }
    return null_space(m);
}

Subspace bracket_span(const SuperAlgebra& a, const Subspace& u, const Subspace& v) {
    std::vector<Vector> products;
    for (const auto& x : u.basis()) {
        for (const auto& y : v.basis()) products.push_back(a.bracket(x, y));
    }
    return Subspace(a.dim(), products);
}

DerivedSeries derived_series_even(const SuperAlgebra& a) {
    DerivedSeries out;
    out.terms.push_back(Subspace::coordinate(a.dim(), a.homogeneous_basis(Parity::Even)));
    while (true) {
        const Subspace& g = out.terms.back();
        Subspace next = bracket_span(a, g, g);
        const bool stable = next == g;
        out.terms.push_back(std::move(next));
        if (stable || out.terms.back().is_zero()) break;
    }
    out.solvable = out.terms.back().is_zero();
    return out;
}

Subspace ideal_closure(const SuperAlgebra& a, const Subspace& seed) {
    if (seed.ambient() != a.dim()) throw PreconditionError("seed lives in a space of the wrong dimension");
    Subspace current = seed;
    while (true) {
        std::vector<Vector> rows = current.basis();
        for (const auto& v : current.basis()) {
            for (std::size_t j = 0; j < a.dim(); ++j) rows.push_back(a.bracket_with_basis(v, j));
        }
        Subspace next(a.dim(), rows);
        if (next.dimension() == current.dimension()) return next;
        current = std::move(next);
    }
}

SimplicityVerdict simplicity_verdict(const SuperAlgebra& a, std::size_t trials, std::uint64_t seed) {
    if (a.dim() == 0) throw PreconditionError("simplicity of the zero algebra is undefined");
    SimplicityVerdict out;
    out.seed = seed;
    out.trials = trials;
    const std::size_t d = a.dim();
    const Subspace full = Subspace::full(d);
    const Subspace derived = bracket_span(a, full, full);

    if (derived.is_zero()) {
        out.not_simple = true;
        out.reason = "abelian";
        out.witness = d >= 2 ? Subspace::coordinate(d, {0}) : Subspace::zero(d);
        return out;
    }
    if (auto z = center(a); !z.is_zero()) {
        out.not_simple = true;
        out.reason = "nonzero center";
        out.witness = std::move(z);
        return out;
    }
    if (!derived.is_full()) {
        out.not_simple = true;
        out.reason = "[L,L] is a proper ideal";
        out.witness = derived;
        return out;
    }
    auto proper = [&](const Subspace& s) { return !s.is_zero() && !s.is_full(); };
    for (std::size_t i = 0; i < d; ++i) {
        Subspace ideal = ideal_closure(a, Subspace::coordinate(d, {i}));
        if (proper(ideal)) {
            out.not_simple = true;
            out.reason = "ideal generated by " + a.label(i) + " is proper";
            out.witness = std::move(ideal);
            return out;
        }
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    const auto even = a.homogeneous_basis(Parity::Even);
    const auto odd = a.homogeneous_basis(Parity::Odd);
    for (std::size_t t = 0; t < trials; ++t) {
        const bool pick_odd = even.empty() || (!odd.empty() && (rng() & 1u));
        const auto& component = pick_odd ? odd : even;
        Vector v(d);
        for (auto i : component) v[i] = coeff(rng);
        if (is_zero(v)) continue;
        Subspace ideal = ideal_closure(a, Subspace(d, {v}));
        if (proper(ideal)) {
            out.not_simple = true;
            out.reason = "ideal generated by random trial " + std::to_string(t) + " is proper";
            out.witness = std::move(ideal);
            return out;
        }
    }
    out.reason = "all probes generate the whole algebra";
    return out;
}

}  // namespace supercodim
