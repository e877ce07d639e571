#include "qdg/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace qdg {

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<Rational>& d) {
    ExactMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    ExactMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) throw std::invalid_argument("matrix rows must form a square");
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

void ExactMatrix::require_same(const ExactMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("matrix dimension mismatch");
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
    require_same(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
    require_same(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    a.require_same(b);
    const std::size_t n = a.n_;
    ExactMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Rational& x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (b(k, j) != 0) c(i, j) += x * b(k, j);
        }
    return c;
}

ExactMatrix operator*(const Rational& c, ExactMatrix a) {
    for (auto& x : a.a_) x *= c;
    return a;
}

bool ExactMatrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

bool ExactMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (i != j && (*this)(i, j) != 0) return false;
    return true;
}

ExactMatrix ExactMatrix::inverse() const {
    ExactMatrix a = *this;
    ExactMatrix inv = identity(n_);
    for (std::size_t col = 0; col < n_; ++col) {
        std::size_t piv = col;
        while (piv < n_ && a(piv, col) == 0) ++piv;
        if (piv == n_) throw std::domain_error("singular matrix");
        if (piv != col)
            for (std::size_t j = 0; j < n_; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        const Rational scale = 1 / a(col, col);
        for (std::size_t j = 0; j < n_; ++j) {
            a(col, j) *= scale;
            inv(col, j) *= scale;
        }
        for (std::size_t i = 0; i < n_; ++i) {
            if (i == col || a(i, col) == 0) continue;
            const Rational f = a(i, col);
            for (std::size_t j = 0; j < n_; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

ExactMatrix ExactMatrix::pow(unsigned e) const {
    ExactMatrix out = identity(n_);
    for (unsigned i = 0; i < e; ++i) out = out * *this;
    return out;
}

std::string ExactMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < n_; ++i) {
        os << '[';
        for (std::size_t j = 0; j < n_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
        os << "]\n";
    }
    return os.str();
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
    const std::size_t n = a.dim(), m = b.dim();
    ExactMatrix c(n * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (a(i, j) == 0) continue;
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t l = 0; l < m; ++l) c(i * m + k, j * m + l) = a(i, j) * b(k, l);
        }
    return c;
}

}  // namespace qdg
