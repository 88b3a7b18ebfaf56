#include "supercodim/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "supercodim/errors.hpp"

namespace supercodim {

Permutation::Permutation(std::vector<unsigned> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (unsigned v : images_) {
        if (v >= images_.size() || seen[v]) throw PreconditionError("not a permutation");
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<unsigned> images(n);
    std::iota(images.begin(), images.end(), 0u);
    return Permutation(std::move(images));
}

Permutation Permutation::from_cycle_type(const Partition& cycles) {
    std::vector<unsigned> images(cycles.weight());
    unsigned start = 0;
    for (unsigned len : cycles.parts()) {
        for (unsigned t = 0; t < len; ++t) images[start + t] = start + (t + 1) % len;
        start += len;
    }
    return Permutation(std::move(images));
}

Permutation Permutation::transposition(std::size_t n, unsigned a, unsigned b) {
    auto p = identity(n);
    std::swap(p.images_.at(a), p.images_.at(b));
    return p;
}

Permutation Permutation::compose(const Permutation& other) const {
    if (other.degree() != degree()) throw PreconditionError("composing permutations of different degree");
    std::vector<unsigned> images(degree());
    for (std::size_t i = 0; i < degree(); ++i) images[i] = images_[other.images_[i]];
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
    std::vector<unsigned> images(degree());
    for (std::size_t i = 0; i < degree(); ++i) images[images_[i]] = static_cast<unsigned>(i);
    return Permutation(std::move(images));
}

Partition Permutation::cycle_type() const {
    std::vector<bool> seen(degree(), false);
    std::vector<unsigned> lengths;
    for (std::size_t i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        unsigned len = 0;
        for (std::size_t j = i; !seen[j]; j = images_[j]) {
            seen[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return Partition(std::move(lengths));
}

int Permutation::sign() const {
    const auto type = cycle_type();
    std::size_t even_cycles = 0;
    for (unsigned len : type.parts()) even_cycles += (len % 2 == 0);
    return even_cycles % 2 == 0 ? 1 : -1;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < degree(); ++i) {
        if (images_[i] != i) return false;
    }
    return true;
}

std::string Permutation::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < degree(); ++i) {
        if (i) out += ' ';
        out += std::to_string(images_[i] + 1);
    }
    return out + "]";
}

std::vector<Permutation> all_permutations(std::size_t n) {
    std::vector<Permutation> out;
    std::vector<unsigned> images(n);
    std::iota(images.begin(), images.end(), 0u);
    do {
        out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

}  // namespace supercodim
