#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

namespace qdg {

enum class Letter : std::uint8_t { A = 0, Astar = 1 };

/// Word over {A, A*}, packed one bit per letter (bit i set <=> letter i is A*).
/// At most 64 letters.
class Word {
public:
    static constexpr unsigned kMaxLength = 64;

    Word() = default;
    /// Throws std::length_error beyond kMaxLength.
    static Word from_bits(std::uint64_t bits, unsigned length);
    static Word letter(Letter l);
    /// l repeated n times.
    static Word power(Letter l, unsigned n);

    unsigned length() const noexcept { return len_; }
    bool empty() const noexcept { return len_ == 0; }
    std::uint64_t bits() const noexcept { return bits_; }
    Letter at(unsigned i) const noexcept { return static_cast<Letter>((bits_ >> i) & 1u); }
    unsigned count(Letter l) const noexcept;

    /// Letters [pos, pos + n).
    Word sub(unsigned pos, unsigned n) const;
    Word concat(const Word& other) const;
    /// Letter-wise A <-> A*.
    Word swapped() const;

    /// Position of the leftmost occurrence of A A A A*, or -1.
    int find_reducible() const noexcept;
    bool is_reduced() const noexcept { return find_reducible() < 0; }

    /// "A^3 A* A", "1" for the empty word.
    std::string to_string() const;

    bool operator==(const Word&) const = default;

private:
    std::uint64_t bits_ = 0;
    std::uint8_t len_ = 0;
};

inline Word operator*(const Word& a, const Word& b) { return a.concat(b); }

/// Printing order: degree descending, then lexicographic with A < A*.
struct CanonicalOrder {
    bool operator()(const Word& a, const Word& b) const noexcept;
};

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
        return std::hash<std::uint64_t>{}(w.bits() * 0x9E3779B97F4A7C15ull ^ w.length());
    }
};

}  // namespace qdg
