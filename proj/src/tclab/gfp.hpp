#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace tclab::gfp {

using FpVector = std::vector<std::uint64_t>;

/// Dense matrix over GF(p), row-major. Entries are canonical residues.
class FpMatrix {
public:
    FpMatrix(std::size_t rows, std::size_t cols, std::uint64_t p);
    static FpMatrix identity(std::size_t n, std::uint64_t p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint64_t modulus() const { return p_; }

    std::uint64_t& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    std::uint64_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    std::vector<FpVector> to_rows() const;

private:
    std::size_t rows_, cols_;
    std::uint64_t p_;
    std::vector<std::uint64_t> a_;
};

/// In-place forward elimination; returns the rank. Rows end up in echelon
/// form with unit pivots. Deterministic pivot choice (first nonzero).
std::size_t echelonize(std::vector<FpVector>& rows, std::uint64_t p);

std::size_t rank(const FpMatrix& m);

/// Multiset of Jordan block sizes of a nilpotent operator; equivalently the
/// multiset of indecomposable summand dimensions of the module it acts on.
struct JordanType {
    std::map<std::uint64_t, std::uint64_t> blocks;  // size -> multiplicity
    std::uint64_t ambient_dim = 0;

    std::uint64_t total() const;
    std::vector<std::uint64_t> sizes_desc() const;

    bool operator==(const JordanType&) const = default;
};

using ApplyFn = std::function<FpVector(const FpVector&)>;

/// Jordan type from the rank profile of a nilpotent operator: the number of
/// blocks of size >= t is rank(N^(t-1)) - rank(N^t). Powers are never formed
/// as dense matrices; the operator is applied repeatedly to an image basis.
/// Throws std::invalid_argument if the rank chain stalls above zero
/// (operator not nilpotent).
JordanType jordan_type(const ApplyFn& apply, std::size_t dim, std::uint64_t p);

} // namespace tclab::gfp
