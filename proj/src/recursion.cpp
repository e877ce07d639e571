// Inductive route r -> r+1 for the relation coefficients, built from the
// auxiliary M/N arrays and the eta expansion coefficients.

#include "qdg/coefficients.hpp"
#include "qdg/errors.hpp"
#include "qdg/eta_table.hpp"

#include <string>

namespace qdg {

namespace {

std::string idx(int p, int j) { return "(" + std::to_string(p) + "," + std::to_string(j) + ")"; }

LaurentPoly sign(int e) { return e % 2 == 0 ? LaurentPoly(1) : LaurentPoly(-1); }

}  // namespace

RecursionTables::RecursionTables(const CoeffTable& level) : r_(level.r()) {
    const int r = r_;
    auto C = [&](int p, int j) -> const LaurentPoly& { return level.at(p, j); };
    const LaurentPoly c1 = C(0, 1), c2 = C(0, 2);
    const LaurentPoly s = c1 * c1 - c2;

    for (int j = 2; j <= 2 * r + 1; ++j) m_[{0, j}] = C(0, j) - c1 * C(0, j - 1);
    m_[{0, 2 * r + 2}] = -(c1 * C(0, 2 * r + 1));
    for (int p = 1; p <= r; ++p) {
        const int w = 2 * (r - p);
        m_[{p, 0}] = C(p, 0);
        for (int j = 1; j <= w + 1; ++j) m_[{p, j}] = C(p, j) - c1 * C(p, j - 1);
        m_[{p, w + 2}] = -(c1 * C(p, w + 1));
    }

    for (int j = 3; j <= 2 * r + 1; ++j) n_[{0, j}] = C(0, j) - c1 * C(0, j - 1) + s * C(0, j - 2);
    n_[{0, 2 * r + 2}] = -(c1 * C(0, 2 * r + 1)) + s * C(0, 2 * r);
    n_[{0, 2 * r + 3}] = s * C(0, 2 * r + 1);

    const LaurentPoly& c10 = C(1, 0);
    n_[{1, 0}] = LaurentPoly();
    n_[{1, 1}] = -(c1 * c10) + C(1, 1) - c10 * c1;
    for (int j = 2; j <= 2 * r - 1; ++j)
        n_[{1, j}] = s * C(1, j - 2) - c1 * C(1, j - 1) + C(1, j) - c10 * C(0, j);
    n_[{1, 2 * r}] = s * C(1, 2 * r - 2) - c1 * C(1, 2 * r - 1) - c10 * C(0, 2 * r);
    n_[{1, 2 * r + 1}] = s * C(1, 2 * r - 1) - c10 * C(0, 2 * r + 1);

    for (int p = 2; p <= r; ++p) {
        const int w = 2 * (r - p);
        n_[{p, 0}] = C(p, 0) - c10 * C(p - 1, 0);
        n_[{p, 1}] = -(c1 * C(p, 0)) + C(p, 1) - c10 * C(p - 1, 1);
        for (int j = 2; j <= w + 1; ++j)
            n_[{p, j}] = s * C(p, j - 2) - c1 * C(p, j - 1) + C(p, j) - c10 * C(p - 1, j);
        n_[{p, w + 2}] = s * C(p, w) - c1 * C(p, w + 1) - c10 * C(p - 1, w + 2);
        n_[{p, w + 3}] = s * C(p, w + 1) - c10 * C(p - 1, w + 3);
    }
    for (int j = 0; j <= 1; ++j) n_[{r + 1, j}] = -(c10 * C(r, j));
}

const LaurentPoly& RecursionTables::M(int p, int j) const {
    auto it = m_.find({p, j});
    if (it == m_.end()) throw IntegrityError("M^{(" + std::to_string(r_) + ")} index out of range " + idx(p, j));
    return it->second;
}

const LaurentPoly& RecursionTables::N(int p, int j) const {
    auto it = n_.find({p, j});
    if (it == n_.end()) throw IntegrityError("N^{(" + std::to_string(r_) + ")} index out of range " + idx(p, j));
    return it->second;
}

CoeffTable recursion_step(const CoeffTable& level) {
    if (!level.is_complete()) throw IntegrityError("recursion step needs a complete table");
    const int r = level.r();
    const int R = r + 1;
    const RecursionTables tab(level);
    const auto eta_table = EtaTable::shared(2 * r + 4);
    auto C = [&](int p, int j) -> const LaurentPoly& { return level.at(p, j); };
    auto M = [&](int p, int j) -> const LaurentPoly& { return tab.M(p, j); };
    auto N = [&](int p, int j) -> const LaurentPoly& { return tab.N(p, j); };
    auto eta = [&](int m, int k, int i) -> const LaurentPoly& { return eta_table->get(m, k, i); };

    CoeffTable out(R, Route::Recursion);
    auto put = [&](int p, int j, LaurentPoly v) {
        if (out.has(p, j) && out.at(p, j) != v)
            throw IntegrityError("recursion assigns two values to c" + idx(p, j));
        out.set(p, j, std::move(v));
    };

    const LaurentPoly c1 = C(0, 1), c2 = C(0, 2);

    // Row p = 0: lowest-order vanishing conditions, then the N/M/eta terms.
    const LaurentPoly c1p = divide_exact(-(N(0, 3) * eta(3, 1, 0)), M(0, 2));
    const LaurentPoly c2p = divide_exact(-(N(0, 3) * eta(3, 1, 1)), c1);
    put(0, 0, 1);
    put(0, 1, c1p);
    put(0, 2, c2p);
    put(0, 3, N(0, 3) * eta(3, 1, 2));
    put(0, 4, N(0, 4) * eta(4, 1, 2) + c1p * M(0, 3) * eta(3, 1, 2));
    for (int k = 2; k <= r + 1; ++k)
        put(0, 2 * k + 1,
            N(0, 2 * k + 1) * eta(2 * k + 1, k, 2) + c1p * M(0, 2 * k) * eta(2 * k, k - 1, 2) +
                c2p * C(0, 2 * k - 1) * eta(2 * k - 1, k - 1, 2));
    for (int k = 2; k <= r; ++k)
        put(0, 2 * k + 2,
            N(0, 2 * k + 2) * eta(2 * k + 2, k, 2) + c1p * M(0, 2 * k + 1) * eta(2 * k + 1, k, 2) +
                c2p * C(0, 2 * k) * eta(2 * k, k - 1, 2));

    // c_0^{[r+1,1]}; the quotient is taken on the combined numerator.
    const LaurentPoly c0p = c1 * c1 - c2 - c2 + divide_exact(C(0, 3) - C(1, 1), c1) + C(1, 0) + C(1, 0);

    // Column j = 0.
    put(1, 0, c0p);
    for (int p = 2; p <= r; ++p) put(p, 0, N(p, 0) + c0p * C(p - 1, 0));
    put(R, 0, c0p * C(r, 0) + N(r + 1, 0));

    // Column j = 1.
    put(1, 1, N(0, 3) + c1p * M(1, 0));
    if (r >= 2) put(2, 1, -N(0, 5) + N(1, 3) + c0p * C(0, 3) + c1p * M(2, 0));
    for (int p = 3; p <= r; ++p) {
        LaurentPoly v = c1p * M(p, 0);
        for (int j = 0; j <= p - 1; ++j) v += sign(j + p + 1) * N(j, 2 * (p - j) + 1);
        for (int j = 0; j <= p - 2; ++j) v += sign(j + p) * c0p * C(j, 2 * (p - j) - 1);
        put(p, 1, std::move(v));
    }
    {
        LaurentPoly v;
        for (int p = 0; p <= r; ++p) v += sign(r + p) * N(p, 2 * (r - p) + 3);
        for (int p = 0; p <= r - 1; ++p) v += sign(r + p + 1) * c0p * C(p, 2 * (r - p) + 1);
        put(R, 1, std::move(v));
    }

    // Column j = 2 (the general formula also covers p = 2).
    put(1, 2, -(N(0, 4) * eta(4, 0, 2)) + c1p * M(0, 3) + c2p * C(1, 0));
    for (int p = 2; p <= r; ++p) {
        LaurentPoly v = c2p * C(p, 0);
        for (int j = 0; j <= p - 1; ++j) {
            v += sign(j + p) * N(j, 2 * (p - j) + 2) * eta(2 * (p - j) + 2, 0, 2);
            v += sign(j + p + 1) * c1p * M(j, 2 * (p - j) + 1);
        }
        for (int j = 0; j <= p - 2; ++j)
            v += sign(j + p + 1) * c0p * C(j, 2 * (p - j)) * eta(2 * (p - j), 0, 2);
        put(p, 2, std::move(v));
    }

    // Column j = 3.
    put(1, 3,
        -(N(0, 5) * eta(5, 1, 2) - N(1, 3) * eta(3, 1, 2)) - c1p * M(0, 4) * eta(4, 0, 2) +
            c0p * C(0, 3) * eta(3, 1, 2) + c2p * C(0, 3));
    for (int p = 2; p <= r; ++p) {
        LaurentPoly v;
        for (int j = 0; j <= p; ++j) v += sign(j + p) * N(j, 2 * (p - j) + 3) * eta(2 * (p - j) + 3, 1, 2);
        for (int j = 0; j <= p - 1; ++j) {
            v += sign(j + p) * c1p * M(j, 2 * (p - j) + 2) * eta(2 * (p - j) + 2, 0, 2);
            v += sign(j + p + 1) * c2p * C(j, 2 * (p - j) + 1);
            v += sign(j + p + 1) * c0p * C(j, 2 * (p - j) + 1) * eta(2 * (p - j) + 1, 1, 2);
        }
        put(p, 3, std::move(v));
    }

    // Column j = 4.
    if (r >= 2)
        put(1, 4,
            -(N(0, 6) * eta(6, 1, 2) - N(1, 4) * eta(4, 1, 2)) -
                c1p * (M(0, 5) * eta(5, 1, 2) - M(1, 3) * eta(3, 1, 2)) - c2p * C(0, 4) * eta(4, 0, 2) +
                c0p * C(0, 4) * eta(4, 1, 2));
    for (int p = 2; p <= r - 1; ++p) {
        LaurentPoly v;
        for (int j = 0; j <= p; ++j) {
            v += sign(j + p) * N(j, 2 * (p - j) + 4) * eta(2 * (p - j) + 4, 1, 2);
            v += sign(j + p) * c1p * M(j, 2 * (p - j) + 3) * eta(2 * (p - j) + 3, 1, 2);
        }
        for (int j = 0; j <= p - 1; ++j) {
            v += sign(j + p) * c2p * C(j, 2 * (p - j) + 2) * eta(2 * (p - j) + 2, 0, 2);
            v += sign(j + p + 1) * c0p * C(j, 2 * (p - j) + 2) * eta(2 * (p - j) + 2, 1, 2);
        }
        put(p, 4, std::move(v));
    }

    // Odd columns 2k+3 (k >= 1) for rows p = j-k >= 2.
    for (int j = 3; j <= r; ++j)
        for (int k = 1; k <= j - 2; ++k) {
            LaurentPoly v;
            for (int p = 0; p <= j - k; ++p) {
                const LaurentPoly sg = sign(p + j + k);
                v += sg * N(p, 2 * (j - p) + 3) * eta(2 * (j - p) + 3, k + 1, 2);
                v += sg * c1p * M(p, 2 * (j - p) + 2) * eta(2 * (j - p) + 2, k, 2);
                v += sg * c2p * C(p, 2 * (j - p) + 1) * eta(2 * (j - p) + 1, k, 2);
            }
            for (int p = 0; p <= j - k - 1; ++p)
                v += sign(p + j + k + 1) * c0p * C(p, 2 * (j - p) + 1) * eta(2 * (j - p) + 1, k + 1, 2);
            put(j - k, 2 * k + 3, std::move(v));
        }

    // Row p = 1, odd columns 2j+1 (j >= 2).
    for (int j = 2; j <= r; ++j)
        put(1, 2 * j + 1,
            -(N(0, 2 * j + 3) * eta(2 * j + 3, j, 2) - N(1, 2 * j + 1) * eta(2 * j + 1, j, 2)) -
                c1p * (eta(2 * j + 2, j - 1, 2) * M(0, 2 * j + 2) - M(1, 2 * j) * eta(2 * j, j - 1, 2)) -
                c2p * (C(0, 2 * j + 1) * eta(2 * j + 1, j - 1, 2) - C(1, 2 * j - 1) * eta(2 * j - 1, j - 1, 2)) +
                c0p * C(0, 2 * j + 1) * eta(2 * j + 1, j, 2));

    // Even columns 2k+2 (k >= 2) for rows p = j-k >= 2.
    for (int j = 4; j <= r; ++j)
        for (int k = 2; k <= j - 2; ++k) {
            LaurentPoly v;
            for (int p = 0; p <= j - k; ++p) {
                const LaurentPoly sg = sign(p + j + k);
                v += sg * N(p, 2 * (j - p) + 2) * eta(2 * (j - p) + 2, k, 2);
                v += sg * c1p * M(p, 2 * (j - p) + 1) * eta(2 * (j - p) + 1, k, 2);
                v += sg * c2p * C(p, 2 * (j - p)) * eta(2 * (j - p), k - 1, 2);
            }
            for (int p = 0; p <= j - k - 1; ++p)
                v += sign(p + j + k + 1) * c0p * C(p, 2 * (j - p)) * eta(2 * (j - p), k, 2);
            put(j - k, 2 * k + 2, std::move(v));
        }

    // Row p = 1, even columns 2j (j >= 3).
    for (int j = 3; j <= r; ++j)
        put(1, 2 * j,
            c0p * C(0, 2 * j) * eta(2 * j, j - 1, 2) - N(0, 2 * j + 2) * eta(2 * j + 2, j - 1, 2) +
                N(1, 2 * j) * eta(2 * j, j - 1, 2) -
                c1p * (M(0, 2 * j + 1) * eta(2 * j + 1, j - 1, 2) - M(1, 2 * j - 1) * eta(2 * j - 1, j - 1, 2)) -
                c2p * (C(0, 2 * j) * eta(2 * j, j - 2, 2) - C(1, 2 * j - 2) * eta(2 * j - 2, j - 2, 2)));

    for (int p = 0; p <= R; ++p)
        for (int j = 0; j <= out.j_max(p); ++j)
            if (!out.has(p, j)) throw IntegrityError("recursion left c" + idx(p, j) + " unset at r=" + std::to_string(R));
    for (int j = 0; j <= out.j_max(0); ++j)
        if (out.at(0, j) != qbinomial(2 * R + 1, j))
            throw IntegrityError("recursion row p=0 differs from the q-binomial at j=" + std::to_string(j));
    return out;
}

std::vector<CoeffTable> recursion_coeffs(int r_max) {
    if (r_max < 1) throw std::domain_error("recursion_coeffs requires r_max >= 1");
    std::vector<CoeffTable> tables;
    CoeffTable seed(1, Route::Recursion);
    const LaurentPoly t3 = qint(3);
    seed.set(0, 0, 1);
    seed.set(0, 1, t3);
    seed.set(0, 2, t3);
    seed.set(0, 3, 1);
    seed.set(1, 0, 1);
    seed.set(1, 1, 1);
    tables.push_back(std::move(seed));
    while (static_cast<int>(tables.size()) < r_max) tables.push_back(recursion_step(tables.back()));
    return tables;
}

}  // namespace qdg
