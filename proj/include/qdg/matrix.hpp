#pragma once

#include "qdg/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace qdg {

/// Dense square matrix over exact rationals.
class ExactMatrix {
public:
    ExactMatrix() = default;
    explicit ExactMatrix(std::size_t n) : n_(n), a_(n * n) {}
    static ExactMatrix identity(std::size_t n);
    static ExactMatrix diagonal(const std::vector<Rational>& d);
    /// Row-major entries; throws std::invalid_argument if not square.
    static ExactMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t dim() const noexcept { return n_; }
    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    ExactMatrix& operator+=(const ExactMatrix& o);
    ExactMatrix& operator-=(const ExactMatrix& o);
    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator*(const Rational& c, ExactMatrix a);
    bool operator==(const ExactMatrix&) const = default;

    bool is_zero() const;
    bool is_diagonal() const;
    /// Gauss-Jordan inverse; throws std::domain_error if singular.
    ExactMatrix inverse() const;
    ExactMatrix pow(unsigned e) const;
    std::string to_string() const;

private:
    std::size_t n_ = 0;
    std::vector<Rational> a_;
    void require_same(const ExactMatrix& o) const;
};

/// Kronecker product a (x) b.
ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace qdg
