#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gctri/errors.hpp"

namespace gctri {

/// Largest arity for which a dense truth table is built (2^20 entries).
inline constexpr unsigned kMaxArity = 20;

/// Input assignment x_1 ... x_m. Bit k of the table index is x_{k+1}.
class BitString {
public:
    BitString() = default;
    explicit BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
        for (auto b : bits_) {
            if (b > 1) throw InputError("bit string entries must be 0 or 1");
        }
    }

    /// Parses "1101": the first character is x_1.
    static BitString parse(std::string_view text) {
        std::vector<std::uint8_t> bits;
        bits.reserve(text.size());
        for (char c : text) {
            if (c != '0' && c != '1') throw InputError("bit string may only contain '0' and '1'");
            bits.push_back(static_cast<std::uint8_t>(c - '0'));
        }
        return BitString(std::move(bits));
    }

    static BitString from_index(std::uint64_t index, unsigned length) {
        std::vector<std::uint8_t> bits(length);
        for (unsigned k = 0; k < length; ++k) bits[k] = static_cast<std::uint8_t>((index >> k) & 1U);
        return BitString(std::move(bits));
    }

    [[nodiscard]] std::size_t size() const noexcept { return bits_.size(); }
    [[nodiscard]] std::uint8_t operator[](std::size_t k) const { return bits_.at(k); }

    [[nodiscard]] std::uint64_t index() const {
        if (bits_.size() > 63) throw InputError("bit string too long to index");
        std::uint64_t idx = 0;
        for (std::size_t k = 0; k < bits_.size(); ++k) idx |= std::uint64_t{bits_[k]} << k;
        return idx;
    }

    [[nodiscard]] std::string str() const {
        std::string s;
        s.reserve(bits_.size());
        for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
        return s;
    }

    [[nodiscard]] const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

private:
    std::vector<std::uint8_t> bits_;
};

/// Total boolean function stored as a dense, packed truth table.
class BooleanFunction {
public:
    BooleanFunction() : BooleanFunction(0) {}

    explicit BooleanFunction(unsigned arity, std::string name = {})
        : arity_(check_arity(arity)), words_(word_count(arity), 0), name_(std::move(name)) {}

    /// Builds the table by evaluating `rule` on every index 0 .. 2^arity - 1.
    template <class Rule>
    static BooleanFunction tabulate(unsigned arity, Rule&& rule, std::string name = {}) {
        BooleanFunction f(arity, std::move(name));
        const std::uint64_t size = f.table_size();
        for (std::uint64_t idx = 0; idx < size; ++idx) {
            if (rule(idx)) f.set(idx, true);
        }
        return f;
    }

    /// Table given as characters, entry k at position k (index order, x_1 least significant).
    static BooleanFunction from_table_string(std::string_view table, std::string name = {}) {
        unsigned arity = 0;
        while ((std::uint64_t{1} << arity) < table.size() && arity <= kMaxArity) ++arity;
        if ((std::uint64_t{1} << arity) != table.size()) {
            throw InputError("truth table length " + std::to_string(table.size()) + " is not a power of two");
        }
        BooleanFunction f(arity, std::move(name));
        for (std::size_t k = 0; k < table.size(); ++k) {
            if (table[k] == '1') {
                f.set(k, true);
            } else if (table[k] != '0') {
                throw InputError("truth table may only contain '0' and '1'");
            }
        }
        return f;
    }

    [[nodiscard]] unsigned arity() const noexcept { return arity_; }
    [[nodiscard]] std::uint64_t table_size() const noexcept { return std::uint64_t{1} << arity_; }
    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    [[nodiscard]] bool at(std::uint64_t index) const {
        if (index >= table_size()) throw InputError("truth table index out of range");
        return (words_[index >> 6] >> (index & 63U)) & 1U;
    }

    [[nodiscard]] bool operator()(const BitString& x) const {
        if (x.size() != arity_) {
            throw InputError("arity mismatch: function takes " + std::to_string(arity_) + " bits, got " +
                             std::to_string(x.size()));
        }
        return at(x.index());
    }

    [[nodiscard]] std::string table_string() const {
        std::string s(table_size(), '0');
        for (std::uint64_t k = 0; k < table_size(); ++k) {
            if (at(k)) s[k] = '1';
        }
        return s;
    }

    [[nodiscard]] std::uint64_t count_ones() const {
        std::uint64_t total = 0;
        for (auto w : words_) total += static_cast<std::uint64_t>(__builtin_popcountll(w));
        return total;
    }

    /// Every 0 -> 1 input flip keeps or raises the output.
    [[nodiscard]] bool is_monotone() const {
        for (std::uint64_t idx = 0; idx < table_size(); ++idx) {
            if (!at(idx)) continue;
            for (unsigned k = 0; k < arity_; ++k) {
                const std::uint64_t up = idx | (std::uint64_t{1} << k);
                if (!at(up)) return false;
            }
        }
        return true;
    }

    /// x -> not f(not x).
    [[nodiscard]] BooleanFunction dual() const {
        const std::uint64_t mask = table_size() - 1;
        return tabulate(arity_, [&](std::uint64_t idx) { return !at(idx ^ mask); }, name_.empty() ? "" : "dual(" + name_ + ")");
    }

    friend bool operator==(const BooleanFunction& a, const BooleanFunction& b) noexcept {
        return a.arity_ == b.arity_ && a.words_ == b.words_;
    }

    void set(std::uint64_t index, bool value) {
        if (index >= table_size()) throw InputError("truth table index out of range");
        const std::uint64_t bit = std::uint64_t{1} << (index & 63U);
        if (value) {
            words_[index >> 6] |= bit;
        } else {
            words_[index >> 6] &= ~bit;
        }
    }

private:
    static unsigned check_arity(unsigned arity) {
        if (arity > kMaxArity) {
            throw SizeLimitError("arity " + std::to_string(arity) + " exceeds the limit of " + std::to_string(kMaxArity));
        }
        return arity;
    }
    static std::size_t word_count(unsigned arity) { return ((std::size_t{1} << arity) + 63) / 64; }

    unsigned arity_;
    std::vector<std::uint64_t> words_;
    std::string name_;
};

inline bool eval(const BooleanFunction& f, const BitString& x) { return f(x); }

inline BooleanFunction identity_fn() {
    return BooleanFunction::tabulate(1, [](std::uint64_t idx) { return idx == 1; }, "id");
}

inline BooleanFunction or_n(unsigned n) {
    if (n < 1 || n > kMaxArity) throw SizeLimitError("or_n requires 1 <= n <= 20, got " + std::to_string(n));
    return BooleanFunction::tabulate(n, [](std::uint64_t idx) { return idx != 0; }, "or_n:" + std::to_string(n));
}

inline BooleanFunction and_n(unsigned n) {
    if (n < 1 || n > kMaxArity) throw SizeLimitError("and_n requires 1 <= n <= 20, got " + std::to_string(n));
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    return BooleanFunction::tabulate(n, [all](std::uint64_t idx) { return idx == all; }, "and_n:" + std::to_string(n));
}

/// (f . g)(x) = f(g(block_1), ..., g(block_n)), block_i = x_{(i-1)m+1} .. x_{im}.
inline BooleanFunction compose(const BooleanFunction& outer, const BooleanFunction& inner) {
    const unsigned n = outer.arity();
    const unsigned m = inner.arity();
    if (std::uint64_t{n} * m > kMaxArity) {
        throw SizeLimitError("composed arity " + std::to_string(n * m) + " exceeds the limit of " +
                             std::to_string(kMaxArity));
    }
    const std::uint64_t block_mask = (std::uint64_t{1} << m) - 1;
    std::string name;
    if (!outer.name().empty() && !inner.name().empty()) name = outer.name() + "*" + inner.name();
    return BooleanFunction::tabulate(
        n * m,
        [&](std::uint64_t idx) {
            std::uint64_t outer_idx = 0;
            for (unsigned i = 0; i < n; ++i) {
                if (inner.at((idx >> (i * m)) & block_mask)) outer_idx |= std::uint64_t{1} << i;
            }
            return outer.at(outer_idx);
        },
        std::move(name));
}

}  // namespace gctri
