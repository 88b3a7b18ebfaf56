#include "supercodim/combinatorics.hpp"

#include <algorithm>
#include <functional>

#include "supercodim/errors.hpp"
#include "supercodim/parallel.hpp"

namespace supercodim {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
            throw PreconditionError("parts are not a weakly decreasing sequence: " + to_string());
        }
        weight_ += parts_[i];
    }
}

std::vector<unsigned> Partition::padded(std::size_t d) const {
    if (d < parts_.size()) throw PreconditionError("padding shorter than the height");
    std::vector<unsigned> out(parts_);
    out.resize(d, 0);
    return out;
}

Partition Partition::scaled(unsigned factor) const {
    std::vector<unsigned> out(parts_);
    for (auto& p : out) p *= factor;
    return Partition(std::move(out));
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

Real PhiPower::root(unsigned precision_bits) const {
    return Real(value, precision_bits).root(weight);
}

std::vector<Partition> enumerate_partitions(unsigned m, std::size_t max_height) {
    std::vector<Partition> out;
    if (max_height == 0) {
        if (m == 0) out.emplace_back();
        return out;
    }
    std::vector<unsigned> current;
    // Largest part first, tried in decreasing order: yields reverse lex order.
    std::function<void(unsigned, unsigned)> extend = [&](unsigned remaining, unsigned cap) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        if (current.size() == max_height) return;
        const std::size_t rows_left = max_height - current.size();
        for (unsigned part = std::min(remaining, cap); part >= 1; --part) {
            // The remaining rows can hold at most rows_left * part boxes.
            if (static_cast<unsigned long>(part) * rows_left < remaining) break;
            current.push_back(part);
            extend(remaining - part, part);
            current.pop_back();
        }
    };
    extend(m, m);
    return out;
}

Integer hook_dimension(const Partition& lambda) {
    if (lambda.empty()) return 1;
    Integer hooks = 1;
    const auto parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (unsigned j = 0; j < parts[i]; ++j) {
            unsigned below = 0;
            for (std::size_t r = i + 1; r < parts.size() && parts[r] > j; ++r) ++below;
            hooks *= parts[i] - j - 1 + below + 1;
        }
    }
    Integer out = factorial(lambda.weight());
    mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), hooks.get_mpz_t());
    return out;
}

Integer syt_count_oracle(const Partition& lambda) {
    constexpr unsigned kMaxWeight = 12;
    if (lambda.weight() > kMaxWeight) {
        throw SizeError("tableau enumeration is limited to weight " + std::to_string(kMaxWeight));
    }
    const auto shape = lambda.parts();
    std::vector<unsigned> filled(shape.size(), 0);
    // Places boxes 1..m in order; box k may go at the end of any row whose
    // fill stays no longer than the row above.
    std::function<unsigned long(unsigned)> count = [&](unsigned placed) -> unsigned long {
        if (placed == lambda.weight()) return 1;
        unsigned long total = 0;
        for (std::size_t r = 0; r < shape.size(); ++r) {
            if (filled[r] == shape[r]) continue;
            if (r > 0 && filled[r] == filled[r - 1]) continue;
            ++filled[r];
            total += count(placed + 1);
            --filled[r];
        }
        return total;
    };
    return Integer(count(0));
}

Integer self_power_product(const Partition& nu) {
    Integer out = 1;
    for (unsigned p : nu.parts()) out *= pow(Integer(p), p);
    return out;
}

PhiPower phi_power(const Partition& nu) {
    if (nu.empty()) throw PreconditionError("Φ is undefined on the empty partition");
    const unsigned m = nu.weight();
    Rational value(pow(Integer(m), m), self_power_product(nu));
    value.canonicalize();
    return PhiPower{std::move(value), m};
}

Real phi_real(const Partition& nu, unsigned precision_bits) {
    if (precision_bits < 64) throw PreconditionError("phi_real needs at least 64 bits");
    return phi_power(nu).root(precision_bits);
}

Real phi_binomial_real(unsigned n, unsigned k, unsigned precision_bits) {
    if (k > n) throw PreconditionError("k exceeds n");
    if (k == 0 || k == n) return Real::one(precision_bits);
    return phi_real(Partition({std::max(k, n - k), std::min(k, n - k)}), precision_bits);
}

Partition push_down(const Partition& nu, std::size_t i, std::size_t j) {
    if (i < 1 || i >= j) {
        throw InvalidMoveError("push-down needs 1 <= i < j (got i=" + std::to_string(i) +
                               ", j=" + std::to_string(j) + ")");
    }
    auto rows = nu.padded(std::max(j, nu.height()));
    if (rows[i - 1] == 0) throw InvalidMoveError("row " + std::to_string(i) + " is empty");
    --rows[i - 1];
    ++rows[j - 1];
    for (std::size_t r = 1; r < rows.size(); ++r) {
        if (rows[r] > rows[r - 1]) {
            throw InvalidMoveError("moving a box from row " + std::to_string(i) + " to row " +
                                   std::to_string(j) + " of " + nu.to_string() +
                                   " breaks weak decrease");
        }
    }
    return Partition(std::move(rows));
}

std::vector<Partition> legal_push_downs(const Partition& nu, std::optional<std::size_t> d) {
    const std::size_t rows = d.value_or(nu.height() + 1);
    std::vector<Partition> out;
    for (std::size_t i = 1; i <= rows; ++i) {
        for (std::size_t j = i + 1; j <= rows; ++j) {
            try {
                out.push_back(push_down(nu, i, j));
            } catch (const InvalidMoveError&) {
            }
        }
    }
    return out;
}

Lemma1Check verify_lemma1(const Partition& nu, std::size_t d) {
    const unsigned m = nu.weight();
    if (m < 100) throw PreconditionError("the dimension bounds require weight >= 100");
    if (nu.height() > d) throw PreconditionError("partition height exceeds d");
    Lemma1Check out;
    out.dimension = hook_dimension(nu);
    out.weight_power = pow(Integer(m), m);
    out.self_power = self_power_product(nu);
    const Integer scaled = out.dimension * out.self_power;
    out.lower_holds = out.weight_power <= scaled * pow(Integer(m), d * d + d);
    out.upper_holds = scaled <= out.weight_power * m;
    return out;
}

bool verify_lemma2(const Partition& nu, std::optional<std::size_t> d) {
    if (nu.empty()) return true;
    const Rational base = phi_power(nu).value;
    for (const auto& rho : legal_push_downs(nu, d)) {
        if (phi_power(rho).value < base) return false;
    }
    return true;
}

bool verify_stirling_bounds(unsigned n, unsigned k) {
    if (k == 0 || k >= n) throw PreconditionError("binomial bounds need 0 < k < n");
    const Integer nn = pow(Integer(n), n);
    const Integer middle = binomial(n, k) * pow(Integer(k), k) * pow(Integer(n - k), n - k);
    return nn <= middle * n && middle <= nn * n;
}

namespace {

SweepResult merge(std::vector<std::vector<std::string>>& failures, std::size_t checked) {
    SweepResult out;
    out.checked = checked;
    for (auto& f : failures) {
        for (auto& msg : f) out.failures.push_back(std::move(msg));
    }
    return out;
}

}  // namespace

SweepResult sweep_lemma1(std::span<const unsigned> weights, std::size_t d, unsigned workers) {
    std::vector<Partition> cases;
    for (unsigned m : weights) {
        auto parts = enumerate_partitions(m, d);
        cases.insert(cases.end(), parts.begin(), parts.end());
    }
    std::vector<std::vector<std::string>> failures(cases.size());
    parallel_for(cases.size(), workers, [&](std::size_t i) {
        const auto check = verify_lemma1(cases[i], d);
        if (!check.lower_holds) failures[i].push_back("lemma1 lower bound fails for " + cases[i].to_string());
        if (!check.upper_holds) failures[i].push_back("lemma1 upper bound fails for " + cases[i].to_string());
    });
    return merge(failures, cases.size());
}

SweepResult sweep_lemma2(unsigned max_weight, std::size_t max_height, unsigned workers) {
    std::vector<Partition> cases;
    for (unsigned m = 1; m <= max_weight; ++m) {
        auto parts = enumerate_partitions(m, max_height);
        cases.insert(cases.end(), parts.begin(), parts.end());
    }
    std::vector<std::vector<std::string>> failures(cases.size());
    parallel_for(cases.size(), workers, [&](std::size_t i) {
        if (!verify_lemma2(cases[i])) failures[i].push_back("push-down decreases Φ for " + cases[i].to_string());
    });
    return merge(failures, cases.size());
}

SweepResult sweep_stirling(unsigned n_max, unsigned workers) {
    std::vector<std::pair<unsigned, unsigned>> cases;
    for (unsigned n = 2; n <= n_max; ++n) {
        for (unsigned k = 1; k < n; ++k) cases.emplace_back(n, k);
    }
    std::vector<std::vector<std::string>> failures(cases.size());
    parallel_for(cases.size(), workers, [&](std::size_t i) {
        const auto [n, k] = cases[i];
        if (!verify_stirling_bounds(n, k)) {
            failures[i].push_back("binomial bounds fail for n=" + std::to_string(n) + ", k=" + std::to_string(k));
        }
    });
    return merge(failures, cases.size());
}

}  // namespace supercodim
