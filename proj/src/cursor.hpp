#pragma once

// Minimal character cursor shared by the hand-written parsers.

#include "qdg/errors.hpp"
#include "qdg/rational.hpp"

#include <cctype>
#include <climits>
#include <string>
#include <string_view>

namespace qdg::detail {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    std::size_t pos() const { return pos_; }
    void seek(std::size_t pos) { pos_ = pos; }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }
    char get() { return at_end() ? '\0' : text_[pos_++]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    bool accept(std::string_view word) {
        if (text_.substr(pos_, word.size()) != word) return false;
        pos_ += word.size();
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    bool digit_next() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    /// Unsigned decimal literal of arbitrary size.
    BigInt big_uint() {
        std::size_t start = pos_;
        while (digit_next()) ++pos_;
        if (start == pos_) fail("expected digits");
        return BigInt(std::string(text_.substr(start, pos_ - start)), 10);
    }
    /// Decimal literal that must fit in [lo, hi]; sign optional when allow_sign.
    long bounded_int(bool allow_sign, long lo, long hi) {
        std::size_t start = pos_;
        bool neg = false;
        if (allow_sign && (peek() == '-' || peek() == '+')) neg = get() == '-';
        BigInt v = big_uint();
        if (neg) v = -v;
        if (v < lo || v > hi) throw ParseError("exponent overflow", start);
        return v.get_si();
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace qdg::detail
