#include "symdiff/exact_rank.hpp"

#include <utility>

namespace symdiff {

int exact_rank(IntMatrix rows) {
    if (rows.empty()) return 0;
    const std::size_t nrows = rows.size();
    const std::size_t ncols = rows.front().size();
    for (const auto& row : rows) {
        if (row.size() != ncols) {
            throw DomainError("ragged matrix passed to exact_rank");
        }
    }

    BigInt prev_pivot = 1;
    std::size_t rank = 0;
    BigInt scratch;
    for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
        std::size_t pivot = rank;
        while (pivot < nrows && rows[pivot][col] == 0) ++pivot;
        if (pivot == nrows) continue;
        std::swap(rows[rank], rows[pivot]);

        const BigInt& p = rows[rank][col];
        for (std::size_t i = rank + 1; i < nrows; ++i) {
            for (std::size_t j = col + 1; j < ncols; ++j) {
                scratch = p * rows[i][j] - rows[i][col] * rows[rank][j];
                // Every intermediate entry is a minor of the input, so the division is exact.
                if (!mpz_divisible_p(scratch.get_mpz_t(), prev_pivot.get_mpz_t())) {
                    throw ArithmeticFault("non-exact division in fraction-free elimination");
                }
                mpz_divexact(rows[i][j].get_mpz_t(), scratch.get_mpz_t(), prev_pivot.get_mpz_t());
            }
            rows[i][col] = 0;
        }
        prev_pivot = p;
        ++rank;
    }
    return static_cast<int>(rank);
}

} // namespace symdiff
