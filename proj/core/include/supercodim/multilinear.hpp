#ifndef SUPERCODIM_MULTILINEAR_HPP
#define SUPERCODIM_MULTILINEAR_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "supercodim/permutation.hpp"
#include "supercodim/rational.hpp"
#include "supercodim/superalgebra.hpp"

namespace supercodim {

/// A variable of the free Lie superalgebra: x_i (even) or y_i (odd), i >= 1.
/// Even variables order before odd ones, then by index.
struct Slot {
    Parity kind = Parity::Even;
    unsigned index = 1;

    static Slot x(unsigned i) { return {Parity::Even, i}; }
    static Slot y(unsigned i) { return {Parity::Odd, i}; }

    std::string to_string() const;
    friend auto operator<=>(const Slot&, const Slot&) = default;
};

/// A left-normed bracket [z_1, z_2, ..., z_n] = [[..[z_1, z_2], ..], z_n]
/// of distinct variables.
struct Monomial {
    std::vector<Slot> slots;

    std::size_t degree() const noexcept { return slots.size(); }
    Parity parity() const;
    /// "[x1,y2,x3]"; a single variable prints as "[x1]".
    std::string to_string() const;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// A rational combination of monomials over one common set of variables.
/// Zero coefficients are never stored; terms are ordered lexicographically
/// by slot sequence.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(const Monomial& m, const Rational& coeff = 1);

    /// Adds coeff * m. Throws PreconditionError if m uses a different set of
    /// variables than the terms already present.
    void add(const Monomial& m, const Rational& coeff);

    const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Sorted variables shared by every term (empty for the zero polynomial).
    const std::vector<Slot>& variables() const noexcept { return variables_; }
    std::size_t even_degree() const;
    std::size_t odd_degree() const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Rational& scale) const;

    /// "2*[x1,x2,y1] - [x1,y1,x2]"; zero prints as "0".
    std::string to_string() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

private:
    std::map<Monomial, Rational> terms_;
    std::vector<Slot> variables_;
};

/// A full binary bracketing of distinct variables.
class BracketTree {
public:
    static BracketTree leaf(Slot s);
    static BracketTree node(BracketTree left, BracketTree right);
    /// Left-normed tree [[..[z_1, z_2], ..], z_n].
    static BracketTree left_normed(const std::vector<Slot>& slots);

    bool is_leaf() const noexcept { return !left_; }
    const Slot& slot() const { return slot_; }
    const BracketTree& left() const { return *left_; }
    const BracketTree& right() const { return *right_; }

    /// Leaves from left to right.
    std::vector<Slot> leaves() const;
    /// Fully parenthesized, e.g. "[x1,[x2,x3]]".
    std::string to_string() const;

private:
    Slot slot_{};
    std::shared_ptr<const BracketTree> left_;
    std::shared_ptr<const BracketTree> right_;
};

/// Parses "x1", "[A,B]" and the left-normed shorthand "[A,B,C]" = [[A,B],C].
/// Throws ParseError (line 1, column of the offending character).
BracketTree parse_bracket_tree(std::string_view text);

/// The (n-1)! left-normed monomials of P_{k,n-k} whose first variable is x_1
/// (y_1 when k = 0), remaining variables in every order, sorted
/// lexicographically. Throws PreconditionError for n = 0.
std::vector<Monomial> spanning_monomials(unsigned k, unsigned n_minus_k);

/// The variable every normalized monomial starts with: the least one.
Slot leading_variable(const std::vector<Slot>& variables);

/// Rewrites a bracketing as a combination of left-normed monomials starting
/// with the least variable, using
///   [u,[v,w]] = [[u,v],w] - (-1)^{|v||w|} [[u,w],v]
///   [u,v]     = -(-1)^{|u||v|} [v,u].
/// Throws PreconditionError if a variable repeats.
Polynomial normalize(const BracketTree& tree);
/// Brings an arbitrary combination of left-normed words into normal form.
Polynomial normalize(const Polynomial& p);

/// [p, q] in normal form; p and q must use disjoint variables.
Polynomial bracket(const Polynomial& p, const Polynomial& q);

/// Values assigned to variables.
using Substitution = std::map<Slot, Vector>;

/// p evaluated on `sub` in A. Every variable of p must be assigned a vector
/// in L_0 (even) or L_1 (odd); PreconditionError otherwise.
Vector evaluate(const Polynomial& p, const Substitution& sub, const SuperAlgebra& a);
/// Same, for a bracket tree (no normalization involved).
Vector evaluate(const BracketTree& t, const Substitution& sub, const SuperAlgebra& a);

/// [e_{b_1}, ..., e_{b_n}] for basis indices b, computed left to right.
Vector evaluate_on_basis(const Monomial& m, const std::map<Slot, std::size_t>& basis_choice,
                         const SuperAlgebra& a);

/// Renames x_i -> x_{σ(i)} and y_j -> y_{τ(j)} (1-based variables, 0-based
/// permutations) and re-normalizes. p must live in P_{k,n-k} with
/// k = deg σ, n-k = deg τ. (σσ', ττ') acts as the composite.
Polynomial place_permute(const Polynomial& p, const Permutation& sigma, const Permutation& tau);

/// A Young tableau filled with 1..n (rows top to bottom).
struct Tableau {
    std::vector<std::vector<unsigned>> rows;

    Partition shape() const;
    bool is_standard() const;
    /// Row-reading tableau 1..n in order of rows.
    static Tableau row_reading(const Partition& shape);
};

/// Applies the Young symmetrizer Σ_col sgn(c) c · Σ_row r independently on
/// even and odd variables. Throws PreconditionError when a tableau is not
/// standard or its size does not match the number of even/odd variables.
Polynomial young_symmetrize(const Polynomial& p, const Tableau& even_tableau, const Tableau& odd_tableau);

}  // namespace supercodim

#endif
