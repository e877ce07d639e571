#include "qdg/word.hpp"

#include <bit>
#include <stdexcept>

namespace qdg {

namespace {
constexpr std::uint64_t low_mask(unsigned n) { return n >= 64 ? ~0ull : ((1ull << n) - 1); }
}  // namespace

Word Word::from_bits(std::uint64_t bits, unsigned length) {
    if (length > kMaxLength) throw std::length_error("word longer than 64 letters");
    Word w;
    w.bits_ = bits & low_mask(length);
    w.len_ = static_cast<std::uint8_t>(length);
    return w;
}

Word Word::letter(Letter l) { return from_bits(l == Letter::Astar ? 1u : 0u, 1); }

Word Word::power(Letter l, unsigned n) {
    return from_bits(l == Letter::Astar ? low_mask(n) : 0u, n);
}

unsigned Word::count(Letter l) const noexcept {
    unsigned stars = static_cast<unsigned>(std::popcount(bits_));
    return l == Letter::Astar ? stars : len_ - stars;
}

Word Word::sub(unsigned pos, unsigned n) const {
    if (pos + n > len_) throw std::out_of_range("subword out of range");
    return from_bits(pos >= 64 ? 0 : bits_ >> pos, n);
}

Word Word::concat(const Word& other) const {
    if (len_ + other.len_ > kMaxLength) throw std::length_error("word longer than 64 letters");
    std::uint64_t hi = len_ >= 64 ? 0 : other.bits_ << len_;
    return from_bits(bits_ | hi, len_ + other.len_);
}

Word Word::swapped() const { return from_bits(~bits_, len_); }

int Word::find_reducible() const noexcept {
    if (len_ < 4) return -1;
    // Pattern bits at offsets 0..3: A A A A* -> 0b1000.
    for (unsigned i = 0; i + 4 <= len_; ++i)
        if (((bits_ >> i) & 0xFu) == 0x8u) return static_cast<int>(i);
    return -1;
}

std::string Word::to_string() const {
    if (len_ == 0) return "1";
    std::string s;
    unsigned i = 0;
    while (i < len_) {
        Letter l = at(i);
        unsigned run = 1;
        while (i + run < len_ && at(i + run) == l) ++run;
        if (!s.empty()) s += ' ';
        s += l == Letter::A ? "A" : "A*";
        if (run > 1) s += "^" + std::to_string(run);
        i += run;
    }
    return s;
}

bool CanonicalOrder::operator()(const Word& a, const Word& b) const noexcept {
    if (a.length() != b.length()) return a.length() > b.length();
    std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    unsigned i = static_cast<unsigned>(std::countr_zero(diff));
    return a.at(i) == Letter::A;
}

}  // namespace qdg
