#pragma once

#include "qdg/laurent.hpp"

#include <array>
#include <memory>
#include <vector>

namespace qdg {

/// Coefficients eta^{(m)}_{k,i} of the ordered expansion of A^m A*:
///   m = 2n+2:  A^m A* = sum_{k=0}^{n}   sum_i rho0^{n-k}   eta_{k,i} A^{2-i} A* A^{2k+i}
///   m = 2n+3:  A^m A* = sum_{k=1}^{n+1} sum_i rho0^{n+1-k} eta_{k,i} A^{2-i} A* A^{2k-1+i}
///                       + rho0^{n+1} (A A* - A* A)
/// Valid k: m even -> 0..(m-2)/2, m odd -> 1..(m-1)/2; i = 0, 1, 2.
class EtaTable {
public:
    /// Tables for every m in [2, max_m] (max_m >= 3).
    explicit EtaTable(int max_m);

    int max_m() const noexcept { return max_m_; }
    static int k_min(int m) noexcept { return m % 2 == 0 ? 0 : 1; }
    static int k_max(int m) noexcept { return m % 2 == 0 ? (m - 2) / 2 : (m - 1) / 2; }
    bool in_range(int m, int k, int i) const noexcept;
    /// Throws IntegrityError outside the index ranges above.
    const LaurentPoly& get(int m, int k, int i) const;

    /// Process-wide table holding at least max_m; safe for concurrent use.
    static std::shared_ptr<const EtaTable> shared(int max_m);

private:
    int max_m_;
    std::vector<std::vector<std::array<LaurentPoly, 3>>> rows_;  // [m][k - k_min(m)][i]
};

}  // namespace qdg
