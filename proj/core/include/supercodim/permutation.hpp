#ifndef SUPERCODIM_PERMUTATION_HPP
#define SUPERCODIM_PERMUTATION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "supercodim/combinatorics.hpp"

namespace supercodim {

/// A permutation of {0, ..., n-1} stored as its image table.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<unsigned> images);

    static Permutation identity(std::size_t n);
    /// Product of disjoint cycles of the given lengths on consecutive points:
    /// (0 1 .. l1-1)(l1 .. l1+l2-1)...
    static Permutation from_cycle_type(const Partition& cycles);
    /// Swaps a and b.
    static Permutation transposition(std::size_t n, unsigned a, unsigned b);

    std::size_t degree() const noexcept { return images_.size(); }
    unsigned operator()(unsigned i) const { return images_.at(i); }
    const std::vector<unsigned>& images() const noexcept { return images_; }

    /// (*this ∘ other)(i) = (*this)(other(i)).
    Permutation compose(const Permutation& other) const;
    Permutation inverse() const;
    Partition cycle_type() const;
    int sign() const;
    bool is_identity() const;

    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<unsigned> images_;
};

/// All permutations of n points in lexicographic order of their image tables.
std::vector<Permutation> all_permutations(std::size_t n);

}  // namespace supercodim

#endif
