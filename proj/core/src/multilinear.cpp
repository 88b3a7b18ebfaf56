#include "supercodim/multilinear.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace supercodim {

std::string Slot::to_string() const { return (kind == Parity::Even ? "x" : "y") + std::to_string(index); }

Parity Monomial::parity() const {
    Parity p = Parity::Even;
    for (const auto& s : slots) p = p + s.kind;
    return p;
}

std::string Monomial::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (i) out += ',';
        out += slots[i].to_string();
    }
    return out + "]";
}

namespace {

std::vector<Slot> sorted_slots(std::vector<Slot> s) {
    std::sort(s.begin(), s.end());
    return s;
}

Parity parity_of(const std::vector<Slot>& slots, std::size_t begin, std::size_t end) {
    Parity p = Parity::Even;
    for (std::size_t i = begin; i < end; ++i) p = p + slots[i].kind;
    return p;
}

}  // namespace

Polynomial::Polynomial(const Monomial& m, const Rational& coeff) { add(m, coeff); }

void Polynomial::add(const Monomial& m, const Rational& coeff) {
    if (coeff == 0) return;
    auto vars = sorted_slots(m.slots);
    if (std::adjacent_find(vars.begin(), vars.end()) != vars.end()) {
        throw PreconditionError("monomial " + m.to_string() + " repeats a variable");
    }
    if (terms_.empty()) {
        variables_ = std::move(vars);
    } else if (vars != variables_) {
        throw PreconditionError("monomial " + m.to_string() + " does not match the polynomial's variables");
    }
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
        if (terms_.empty()) variables_.clear();
    }
}

std::size_t Polynomial::even_degree() const {
    return static_cast<std::size_t>(
        std::count_if(variables_.begin(), variables_.end(), [](const Slot& s) { return s.kind == Parity::Even; }));
}

std::size_t Polynomial::odd_degree() const { return variables_.size() - even_degree(); }

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add(m, c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial out(*this);
    out += other;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + other * Rational(-1); }

Polynomial Polynomial::operator*(const Rational& scale) const {
    Polynomial out;
    if (scale == 0) return out;
    for (const auto& [m, c] : terms_) out.add(m, c * scale);
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = c;
        if (c < 0) {
            out += first ? "-" : " - ";
            mag = -c;
        } else if (!first) {
            out += " + ";
        }
        if (mag != 1) out += supercodim::to_string(mag) + "*";
        out += m.to_string();
        first = false;
    }
    return out;
}

BracketTree BracketTree::leaf(Slot s) {
    BracketTree t;
    t.slot_ = s;
    return t;
}

BracketTree BracketTree::node(BracketTree left, BracketTree right) {
    BracketTree t;
    t.left_ = std::make_shared<const BracketTree>(std::move(left));
    t.right_ = std::make_shared<const BracketTree>(std::move(right));
    return t;
}

BracketTree BracketTree::left_normed(const std::vector<Slot>& slots) {
    if (slots.empty()) throw PreconditionError("empty bracket");
    BracketTree t = leaf(slots.front());
    for (std::size_t i = 1; i < slots.size(); ++i) t = node(std::move(t), leaf(slots[i]));
    return t;
}

std::vector<Slot> BracketTree::leaves() const {
    if (is_leaf()) return {slot_};
    auto out = left_->leaves();
    auto right = right_->leaves();
    out.insert(out.end(), right.begin(), right.end());
    return out;
}

std::string BracketTree::to_string() const {
    if (is_leaf()) return slot_.to_string();
    return "[" + left_->to_string() + "," + right_->to_string() + "]";
}

namespace {

class TreeParser {
public:
    explicit TreeParser(std::string_view text) : text_(text) {}

    BracketTree parse() {
        BracketTree t = term();
        skip_space();
        if (pos_ != text_.size()) error("unexpected trailing input");
        return t;
    }

private:
    [[noreturn]] void error(const std::string& message) const {
        throw ParseError(message, 1, pos_ + 1, "polynomial");
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    BracketTree term() {
        skip_space();
        if (pos_ >= text_.size()) error("unexpected end of input");
        const char c = text_[pos_];
        if (c == 'x' || c == 'y') {
            ++pos_;
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) error("variable needs an index");
            const unsigned index = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
            if (index == 0) error("variable indices start at 1");
            return BracketTree::leaf({c == 'x' ? Parity::Even : Parity::Odd, index});
        }
        if (c != '[') error("expected a variable or '['");
        ++pos_;
        BracketTree t = term();
        while (true) {
            skip_space();
            if (pos_ >= text_.size()) error("unterminated bracket");
            if (text_[pos_] == ']') {
                ++pos_;
                break;
            }
            if (text_[pos_] != ',') error("expected ',' or ']'");
            ++pos_;
            t = BracketTree::node(std::move(t), term());
        }
        return t;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

using Word = std::vector<Slot>;
using WordSum = std::map<Word, Rational>;

void accumulate(WordSum& sum, const Word& w, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = sum.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) sum.erase(it);
    }
}

// [u, w] for left-normed words u, w, as left-normed words starting with u's
// first letter. Recurses on the length of w:
//   [u, [w', a]] = [[u, w'], a] - (-1)^{|w'||a|} [[u, a], w'].
WordSum bracket_words(const Word& u, const Word& w) {
    WordSum out;
    if (w.size() == 1) {
        Word uw(u);
        uw.push_back(w.front());
        out.emplace(std::move(uw), 1);
        return out;
    }
    const Slot a = w.back();
    const Word head(w.begin(), w.end() - 1);
    for (const auto& [word, c] : bracket_words(u, head)) {
        Word extended(word);
        extended.push_back(a);
        accumulate(out, extended, c);
    }
    Word ua(u);
    ua.push_back(a);
    const int sign = -koszul_sign(parity_of(head, 0, head.size()), a.kind);
    for (const auto& [word, c] : bracket_words(ua, head)) accumulate(out, word, c * sign);
    return out;
}

// Rotates the least letter to the front: with w = [U, z, tail...],
//   [U, z] = -(-1)^{|U||z|} [z, U].
WordSum canonical_words(const Word& w) {
    WordSum out;
    const auto lead = std::min_element(w.begin(), w.end());
    const std::size_t j = static_cast<std::size_t>(lead - w.begin());
    if (j == 0) {
        out.emplace(w, 1);
        return out;
    }
    const Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(j));
    const int sign = -koszul_sign(parity_of(prefix, 0, prefix.size()), lead->kind);
    for (const auto& [word, c] : bracket_words({*lead}, prefix)) {
        Word full(word);
        full.insert(full.end(), w.begin() + static_cast<std::ptrdiff_t>(j) + 1, w.end());
        accumulate(out, full, c * sign);
    }
    return out;
}

Polynomial from_words(const WordSum& words) {
    Polynomial out;
    for (const auto& [w, c] : words) {
        for (const auto& [canon, cc] : canonical_words(w)) out.add(Monomial{canon}, c * cc);
    }
    return out;
}

WordSum tree_words(const BracketTree& t) {
    if (t.is_leaf()) return WordSum{{Word{t.slot()}, Rational(1)}};
    const WordSum left = tree_words(t.left());
    const WordSum right = tree_words(t.right());
    WordSum out;
    for (const auto& [wl, cl] : left) {
        for (const auto& [wr, cr] : right) {
            for (const auto& [w, c] : bracket_words(wl, wr)) accumulate(out, w, c * cl * cr);
        }
    }
    return out;
}

void require_distinct(std::vector<Slot> slots, const std::string& what) {
    std::sort(slots.begin(), slots.end());
    if (std::adjacent_find(slots.begin(), slots.end()) != slots.end()) {
        throw PreconditionError(what + " repeats a variable; only multilinear elements are supported");
    }
}

}  // namespace

BracketTree parse_bracket_tree(std::string_view text) { return TreeParser(text).parse(); }

std::vector<Monomial> spanning_monomials(unsigned k, unsigned n_minus_k) {
    if (k + n_minus_k == 0) throw PreconditionError("P_{0,0} has no monomials");
    std::vector<Slot> rest;
    for (unsigned i = 1; i <= k; ++i) rest.push_back(Slot::x(i));
    for (unsigned i = 1; i <= n_minus_k; ++i) rest.push_back(Slot::y(i));
    const Slot first = rest.front();
    rest.erase(rest.begin());
    std::vector<Monomial> out;
    do {
        Monomial m;
        m.slots.push_back(first);
        m.slots.insert(m.slots.end(), rest.begin(), rest.end());
        out.push_back(std::move(m));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

Slot leading_variable(const std::vector<Slot>& variables) {
    if (variables.empty()) throw PreconditionError("no variables");
    return *std::min_element(variables.begin(), variables.end());
}

Polynomial normalize(const BracketTree& tree) {
    require_distinct(tree.leaves(), "bracket tree " + tree.to_string());
    return from_words(tree_words(tree));
}

Polynomial normalize(const Polynomial& p) {
    WordSum words;
    for (const auto& [m, c] : p.terms()) accumulate(words, m.slots, c);
    return from_words(words);
}

Polynomial bracket(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Slot> all(p.variables());
    all.insert(all.end(), q.variables().begin(), q.variables().end());
    require_distinct(all, "bracket of polynomials");
    WordSum words;
    for (const auto& [mp, cp] : p.terms()) {
        for (const auto& [mq, cq] : q.terms()) {
            for (const auto& [w, c] : bracket_words(mp.slots, mq.slots)) accumulate(words, w, c * cp * cq);
        }
    }
    return from_words(words);
}

namespace {

const Vector& lookup(const Substitution& sub, const Slot& s, const SuperAlgebra& a) {
    auto it = sub.find(s);
    if (it == sub.end()) throw PreconditionError("no value substituted for " + s.to_string());
    if (it->second.size() != a.dim()) throw PreconditionError("value for " + s.to_string() + " has wrong length");
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (it->second[i] != 0 && a.parity(i) != s.kind) {
            throw PreconditionError("value for " + s.to_string() + " is not in L_" +
                                    (s.kind == Parity::Even ? "0" : "1"));
        }
    }
    return it->second;
}

}  // namespace

Vector evaluate(const Polynomial& p, const Substitution& sub, const SuperAlgebra& a) {
    Vector out(a.dim());
    for (const auto& [m, c] : p.terms()) {
        Vector v = lookup(sub, m.slots.front(), a);
        for (std::size_t i = 1; i < m.slots.size() && !is_zero(v); ++i) v = a.bracket(v, lookup(sub, m.slots[i], a));
        for (std::size_t i = 0; i < a.dim(); ++i) {
            if (v[i] != 0) out[i] += c * v[i];
        }
    }
    return out;
}

Vector evaluate(const BracketTree& t, const Substitution& sub, const SuperAlgebra& a) {
    if (t.is_leaf()) return lookup(sub, t.slot(), a);
    return a.bracket(evaluate(t.left(), sub, a), evaluate(t.right(), sub, a));
}

Vector evaluate_on_basis(const Monomial& m, const std::map<Slot, std::size_t>& basis_choice,
                         const SuperAlgebra& a) {
    auto index = [&](const Slot& s) {
        auto it = basis_choice.find(s);
        if (it == basis_choice.end()) throw PreconditionError("no basis element chosen for " + s.to_string());
        if (a.parity(it->second) != s.kind) throw PreconditionError("basis element of wrong parity for " + s.to_string());
        return it->second;
    };
    Vector v = a.basis_vector(index(m.slots.front()));
    for (std::size_t i = 1; i < m.slots.size() && !is_zero(v); ++i) v = a.bracket_with_basis(v, index(m.slots[i]));
    return v;
}

Polynomial place_permute(const Polynomial& p, const Permutation& sigma, const Permutation& tau) {
    if (p.is_zero()) return p;
    const std::size_t k = p.even_degree(), j = p.odd_degree();
    if (sigma.degree() != k || tau.degree() != j) {
        throw PreconditionError("permutation degrees (" + std::to_string(sigma.degree()) + "," +
                                std::to_string(tau.degree()) + ") do not match P_{" + std::to_string(k) + "," +
                                std::to_string(j) + "}");
    }
    for (const auto& s : p.variables()) {
        const std::size_t bound = s.kind == Parity::Even ? k : j;
        if (s.index > bound) throw PreconditionError("variables must be x_1..x_k, y_1..y_{n-k}");
    }
    WordSum words;
    for (const auto& [m, c] : p.terms()) {
        Word renamed;
        for (const auto& s : m.slots) {
            const auto& perm = s.kind == Parity::Even ? sigma : tau;
            renamed.push_back({s.kind, perm(s.index - 1) + 1});
        }
        accumulate(words, renamed, c);
    }
    return from_words(words);
}

Partition Tableau::shape() const {
    std::vector<unsigned> parts;
    for (const auto& r : rows) parts.push_back(static_cast<unsigned>(r.size()));
    return Partition(parts);
}

bool Tableau::is_standard() const {
    try {
        (void)shape();
    } catch (const PreconditionError&) {
        return false;
    }
    std::set<unsigned> seen;
    std::size_t n = 0;
    for (const auto& r : rows) n += r.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t c = 0; c < rows[i].size(); ++c) {
            const unsigned v = rows[i][c];
            if (v < 1 || v > n || !seen.insert(v).second) return false;
            if (c > 0 && rows[i][c - 1] >= v) return false;
            if (i > 0 && rows[i - 1][c] >= v) return false;
        }
    }
    return true;
}

Tableau Tableau::row_reading(const Partition& shape) {
    Tableau t;
    unsigned next = 1;
    for (unsigned len : shape.parts()) {
        std::vector<unsigned> row;
        for (unsigned c = 0; c < len; ++c) row.push_back(next++);
        t.rows.push_back(std::move(row));
    }
    return t;
}

namespace {

// All permutations of {0..n-1} preserving each block of `blocks` (1-based
// entries), i.e. the product of the symmetric groups on the blocks.
std::vector<Permutation> block_group(std::size_t n, const std::vector<std::vector<unsigned>>& blocks) {
    std::vector<Permutation> group{Permutation::identity(n)};
    for (const auto& block : blocks) {
        if (block.size() < 2) continue;
        std::vector<unsigned> arranged(block);
        std::sort(arranged.begin(), arranged.end());
        std::vector<Permutation> local;
        std::vector<unsigned> images(arranged);
        do {
            auto table = Permutation::identity(n).images();
            for (std::size_t t = 0; t < arranged.size(); ++t) table[arranged[t] - 1] = images[t] - 1;
            local.emplace_back(std::move(table));
        } while (std::next_permutation(images.begin(), images.end()));
        std::vector<Permutation> next;
        for (const auto& g : group) {
            for (const auto& h : local) next.push_back(g.compose(h));
        }
        group = std::move(next);
    }
    return group;
}

std::vector<std::vector<unsigned>> columns_of(const Tableau& t) {
    std::vector<std::vector<unsigned>> cols;
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (cols.size() <= c) cols.emplace_back();
            cols[c].push_back(row[c]);
        }
    }
    return cols;
}

void check_tableau(const Tableau& t, std::size_t degree, const char* which) {
    if (!t.is_standard()) throw PreconditionError(std::string(which) + " tableau is not standard");
    if (t.shape().weight() != degree) {
        throw PreconditionError(std::string(which) + " tableau has " + std::to_string(t.shape().weight()) +
                                " boxes, expected " + std::to_string(degree));
    }
}

}  // namespace

Polynomial young_symmetrize(const Polynomial& p, const Tableau& even_tableau, const Tableau& odd_tableau) {
    if (p.is_zero()) return p;
    const std::size_t k = p.even_degree(), j = p.odd_degree();
    check_tableau(even_tableau, k, "even");
    check_tableau(odd_tableau, j, "odd");
    const auto row_even = block_group(k, even_tableau.rows);
    const auto row_odd = block_group(j, odd_tableau.rows);
    const auto col_even = block_group(k, columns_of(even_tableau));
    const auto col_odd = block_group(j, columns_of(odd_tableau));

    Polynomial rows_sym;
    for (const auto& r : row_even) {
        for (const auto& s : row_odd) rows_sym += place_permute(p, r, s);
    }
    Polynomial out;
    for (const auto& c : col_even) {
        for (const auto& s : col_odd) out += place_permute(rows_sym, c, s) * Rational(c.sign() * s.sign());
    }
    return out;
}

}  // namespace supercodim
