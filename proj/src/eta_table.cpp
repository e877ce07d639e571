#include "qdg/eta_table.hpp"

#include "qdg/errors.hpp"
#include "qdg/qnumbers.hpp"

#include <mutex>
#include <string>

namespace qdg {

EtaTable::EtaTable(int max_m) : max_m_(std::max(max_m, 3)), rows_(static_cast<std::size_t>(max_m_ + 1)) {
    const LaurentPoly t3 = qint(3);
    rows_[2] = {{LaurentPoly(1), LaurentPoly(), LaurentPoly()}};
    rows_[3] = {{t3, -t3, LaurentPoly(1)}};
    for (int m = 3; m < max_m_; ++m) {
        auto P = [&](int k, int i) -> const LaurentPoly& { return get(m, k, i); };
        auto& T = rows_[static_cast<std::size_t>(m + 1)];
        if (m % 2 == 1) {
            // 2n+1 -> 2n+2, k = 0..n
            const int n = (m - 1) / 2;
            T.resize(static_cast<std::size_t>(n + 1));
            T[0][0] = 1;
            T[0][1] = P(1, 0) - 1;
            T[0][2] = -P(1, 0);
            for (int k = 1; k <= n; ++k) {
                auto& row = T[static_cast<std::size_t>(k)];
                row[0] = t3 * P(k, 0) + P(k, 1);
                if (k < n) {
                    row[1] = -(t3 * P(k, 0)) + P(k + 1, 0) + P(k, 2);
                    row[2] = P(k, 0) - P(k + 1, 0);
                } else {
                    row[1] = -(t3 * P(n, 0)) + P(n, 2);
                    row[2] = P(n, 0);
                }
            }
        } else {
            // 2n+2 -> 2n+3, k = 1..n+1
            const int n = (m - 2) / 2;
            T.resize(static_cast<std::size_t>(n + 1));
            for (int k = 1; k <= n + 1; ++k) {
                auto& row = T[static_cast<std::size_t>(k - 1)];
                row[0] = t3 * P(k - 1, 0) + P(k - 1, 1);
                if (k <= n) {
                    row[1] = -(t3 * P(k - 1, 0)) + P(k, 0) + P(k - 1, 2);
                    row[2] = P(k - 1, 0) - P(k, 0);
                } else {
                    row[1] = -(t3 * P(n, 0)) + P(n, 2);
                    row[2] = P(n, 0);
                }
            }
        }
    }
}

bool EtaTable::in_range(int m, int k, int i) const noexcept {
    return m >= 2 && m <= max_m_ && i >= 0 && i <= 2 && k >= k_min(m) && k <= k_max(m);
}

const LaurentPoly& EtaTable::get(int m, int k, int i) const {
    if (!in_range(m, k, i))
        throw IntegrityError("eta index out of range: m=" + std::to_string(m) + " k=" +
                             std::to_string(k) + " i=" + std::to_string(i));
    return rows_[static_cast<std::size_t>(m)][static_cast<std::size_t>(k - k_min(m))]
                [static_cast<std::size_t>(i)];
}

std::shared_ptr<const EtaTable> EtaTable::shared(int max_m) {
    static std::mutex mutex;
    static std::shared_ptr<const EtaTable> table;
    std::lock_guard lock(mutex);
    if (!table || table->max_m() < max_m)
        table = std::make_shared<const EtaTable>(std::max(max_m, table ? 2 * table->max_m() : 32));
    return table;
}

}  // namespace qdg
