#include "supercodim/characters.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "supercodim/errors.hpp"

namespace supercodim {

CycleType CycleType::identity(unsigned degree) {
    return CycleType(Partition(std::vector<unsigned>(degree, 1u)));
}

Integer CycleType::class_size() const {
    Integer denom = 1;
    const auto parts = cycles_.parts();
    std::size_t run = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        denom *= parts[i];
        ++run;
        if (i + 1 == parts.size() || parts[i + 1] != parts[i]) {
            denom *= factorial(run);
            run = 0;
        }
    }
    Integer out = factorial(degree());
    mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), denom.get_mpz_t());
    return out;
}

std::vector<CycleType> conjugacy_classes(unsigned n) {
    std::vector<CycleType> out;
    for (auto& p : enumerate_partitions(n, n)) out.emplace_back(std::move(p));
    return out;
}

namespace {

using MemoKey = std::pair<std::vector<unsigned>, std::vector<unsigned>>;

class CharacterMemo {
public:
    std::optional<Integer> find(const MemoKey& key) const {
        std::shared_lock lock(mutex_);
        auto it = table_.find(key);
        if (it == table_.end()) return std::nullopt;
        return it->second;
    }

    void store(MemoKey key, const Integer& value) {
        std::unique_lock lock(mutex_);
        table_.emplace(std::move(key), value);
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<MemoKey, Integer> table_;
};

CharacterMemo& memo() {
    static CharacterMemo instance;
    return instance;
}

// λ is given by its parts, cycles by lengths (largest first); the largest
// remaining cycle is stripped as a rim hook via the beta-set of λ.
Integer murnaghan_nakayama(const std::vector<unsigned>& parts, const std::vector<unsigned>& cycles) {
    if (cycles.empty()) return 1;
    MemoKey key{parts, cycles};
    if (auto hit = memo().find(key)) return *hit;

    const unsigned len = cycles.front();
    const std::vector<unsigned> rest(cycles.begin() + 1, cycles.end());
    const std::size_t h = parts.size();
    std::vector<long> beta(h);
    for (std::size_t i = 0; i < h; ++i) beta[i] = static_cast<long>(parts[i] + (h - 1 - i));

    Integer total = 0;
    for (std::size_t i = 0; i < h; ++i) {
        const long target = beta[i] - static_cast<long>(len);
        if (target < 0) continue;
        bool occupied = false;
        int between = 0;
        for (std::size_t t = 0; t < h; ++t) {
            if (beta[t] == target) occupied = true;
            if (beta[t] > target && beta[t] < beta[i]) ++between;
        }
        if (occupied) continue;
        std::vector<long> moved(beta);
        moved[i] = target;
        std::sort(moved.rbegin(), moved.rend());
        std::vector<unsigned> next;
        for (std::size_t t = 0; t < h; ++t) {
            const long part = moved[t] - static_cast<long>(h - 1 - t);
            if (part > 0) next.push_back(static_cast<unsigned>(part));
        }
        const Integer sub = murnaghan_nakayama(next, rest);
        if (between % 2 == 0) {
            total += sub;
        } else {
            total -= sub;
        }
    }
    memo().store(std::move(key), total);
    return total;
}

}  // namespace

Integer character_value(const Partition& lambda, const CycleType& c) {
    if (lambda.weight() != c.degree()) {
        throw PreconditionError("character " + lambda.to_string() + " evaluated on a class of S_" +
                                std::to_string(c.degree()));
    }
    const auto parts = lambda.parts();
    const auto cycles = c.cycles().parts();
    return murnaghan_nakayama({parts.begin(), parts.end()}, {cycles.begin(), cycles.end()});
}

Integer product_character_value(const Partition& lambda, const Partition& mu,
                                const CycleType& c_lambda, const CycleType& c_mu) {
    return character_value(lambda, c_lambda) * character_value(mu, c_mu);
}

std::vector<CocharacterLine> decompose(const TraceFunction& trace, unsigned k, unsigned n_minus_k,
                                       std::optional<std::size_t> max_height) {
    const auto classes_k = conjugacy_classes(k);
    const auto classes_j = conjugacy_classes(n_minus_k);
    const Integer order = factorial(k) * factorial(n_minus_k);

    std::vector<std::tuple<const CycleType*, const CycleType*, Rational>> weighted;
    for (const auto& a : classes_k) {
        for (const auto& b : classes_j) {
            auto it = trace.find({a, b});
            if (it == trace.end()) {
                throw PreconditionError("trace undefined on class pair " + a.cycles().to_string() +
                                        " x " + b.cycles().to_string());
            }
            if (it->second == 0) continue;
            weighted.emplace_back(&a, &b, Rational(a.class_size() * b.class_size()) * it->second);
        }
    }

    std::vector<CocharacterLine> out;
    for (const auto& lambda : enumerate_partitions(k, k)) {
        for (const auto& mu : enumerate_partitions(n_minus_k, n_minus_k)) {
            Rational sum = 0;
            for (const auto& [a, b, w] : weighted) sum += w * product_character_value(lambda, mu, *a, *b);
            sum /= order;
            if (sum == 0) continue;
            if (sum.get_den() != 1 || sum < 0) {
                throw IntegrityError("multiplicity of " + lambda.to_string() + " x " + mu.to_string() +
                                     " is " + to_string(sum) + ", not a non-negative integer");
            }
            if (max_height && (lambda.height() > *max_height || mu.height() > *max_height)) {
                throw IntegrityError("constituent " + lambda.to_string() + " x " + mu.to_string() +
                                     " exceeds height " + std::to_string(*max_height));
            }
            out.push_back({lambda, mu, sum.get_num()});
        }
    }
    return out;
}

}  // namespace supercodim
