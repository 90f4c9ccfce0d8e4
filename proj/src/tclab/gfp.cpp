#include "tclab/gfp.hpp"

#include "tclab/arith.hpp"

#include <stdexcept>

namespace tclab::gfp {

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint64_t p)
    : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {
    if (p < 2) throw std::invalid_argument("FpMatrix: modulus must be at least 2");
}

FpMatrix FpMatrix::identity(std::size_t n, std::uint64_t p) {
    FpMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<FpVector> FpMatrix::to_rows() const {
    std::vector<FpVector> rows(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        rows[r].assign(a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                       a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    return rows;
}

std::size_t echelonize(std::vector<FpVector>& rows, std::uint64_t p) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] % p == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        std::uint64_t inv = arith::pow_mod(rows[rank][col] % p, p - 2, p);
        for (std::size_t c = col; c < ncols; ++c)
            rows[rank][c] = arith::mul_mod(rows[rank][c] % p, inv, p);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            std::uint64_t factor = rows[r][col] % p;
            if (factor == 0) continue;
            for (std::size_t c = col; c < ncols; ++c) {
                std::uint64_t sub = arith::mul_mod(factor, rows[rank][c], p);
                rows[r][c] = (rows[r][c] % p + p - sub) % p;
            }
        }
        ++rank;
    }
    rows.resize(rank);
    return rank;
}

std::size_t rank(const FpMatrix& m) {
    auto rows = m.to_rows();
    return echelonize(rows, m.modulus());
}

std::uint64_t JordanType::total() const {
    std::uint64_t sum = 0;
    for (const auto& [size, count] : blocks) sum += size * count;
    return sum;
}

std::vector<std::uint64_t> JordanType::sizes_desc() const {
    std::vector<std::uint64_t> out;
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it)
        for (std::uint64_t i = 0; i < it->second; ++i) out.push_back(it->first);
    return out;
}

JordanType jordan_type(const ApplyFn& apply, std::size_t dim, std::uint64_t p) {
    // ranks[t] = rank(N^t); the image of N^t is spanned by N applied to a
    // basis of the image of N^(t-1).
    std::vector<std::size_t> ranks{dim};
    std::vector<FpVector> basis;
    basis.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        FpVector e(dim, 0);
        e[i] = 1;
        basis.push_back(std::move(e));
    }
    while (ranks.back() > 0) {
        for (auto& v : basis) v = apply(v);
        std::size_t r = echelonize(basis, p);
        if (r >= ranks.back())
            throw std::invalid_argument("jordan_type: operator is not nilpotent");
        ranks.push_back(r);
    }

    JordanType jt;
    jt.ambient_dim = dim;
    for (std::size_t t = 1; t < ranks.size(); ++t) {
        std::size_t at_least_t = ranks[t - 1] - ranks[t];
        std::size_t at_least_t1 = (t + 1 < ranks.size()) ? ranks[t] - ranks[t + 1] : 0;
        if (at_least_t > at_least_t1)
            jt.blocks[t] = at_least_t - at_least_t1;
    }
    return jt;
}

} // namespace tclab::gfp
