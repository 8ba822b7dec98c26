#include "bicircle/linalg.hpp"

#include <utility>

namespace bicircle {

int rank_exact(const std::vector<std::vector<Rat>>& m) {
    if (m.empty() || m[0].empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();

    // Clear denominators row by row; row scaling preserves rank.
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (size_t r = 0; r < rows; ++r) {
        mpz_class l(1);
        for (size_t c = 0; c < cols; ++c) {
            mpz_class den = m[r][c].den();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
            l = l / g * den;
        }
        for (size_t c = 0; c < cols; ++c)
            a[r][c] = m[r][c].num() * (l / m[r][c].den());
    }

    mpz_class prev(1);
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);

        for (size_t r = rank + 1; r < rows; ++r) {
            for (size_t c = col + 1; c < cols; ++c) {
                mpz_class num = a[rank][col] * a[r][c] - a[r][col] * a[rank][c];
                mpz_divexact(a[r][c].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return static_cast<int>(rank);
}

} // namespace bicircle
