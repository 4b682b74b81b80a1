#pragma once

#include <cstdint>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cycles::gf2 {

// Vector over GF(2), packed into 64-bit words. Bits past size() are kept zero.
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

    // Parses "1011..." (most significant position first is position 0).
    static BitVec from_string(const std::string& bits);

    std::size_t size() const { return len_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool v = true) {
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v) words_[i >> 6] |= mask; else words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    bool any() const;
    std::size_t count() const;
    // Index of the first set bit, or size() if none.
    std::size_t first_set() const;
    std::vector<std::size_t> ones() const;

    BitVec& operator^=(const BitVec& o);
    friend BitVec operator^(BitVec a, const BitVec& b) { a ^= b; return a; }
    // Parity of the coordinate-wise AND.
    bool dot(const BitVec& o) const;

    bool operator==(const BitVec& o) const = default;
    bool operator<(const BitVec& o) const;

    std::string to_string() const;

  private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

// Row-major matrix over GF(2); every row has length ncols.
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(std::size_t nrows, std::size_t ncols)
        : ncols_(ncols), rows_(nrows, BitVec(ncols)) {}
    explicit BitMatrix(std::vector<BitVec> rows);

    static BitMatrix identity(std::size_t n);

    std::size_t nrows() const { return rows_.size(); }
    std::size_t ncols() const { return ncols_; }
    const BitVec& row(std::size_t i) const { return rows_[i]; }
    BitVec& row(std::size_t i) { return rows_[i]; }
    const std::vector<BitVec>& rows() const { return rows_; }
    bool get(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
    void set(std::size_t i, std::size_t j, bool v = true) { rows_[i].set(j, v); }
    void append_row(const BitVec& r);

    // m * v with v indexed by columns; result indexed by rows.
    BitVec multiply(const BitVec& v) const;

    bool operator==(const BitMatrix& o) const = default;

  private:
    std::size_t ncols_ = 0;
    std::vector<BitVec> rows_;
};

struct RrefResult {
    BitMatrix reduced;                // reduced row-echelon form, zero rows last
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // strictly increasing pivot columns
};

// Gauss-Jordan elimination. Pivoting is deterministic: first nonzero column,
// first qualifying row, so bases are reproducible across runs.
RrefResult rref(const BitMatrix& m);

std::size_t rank(const BitMatrix& m);
BitMatrix transpose(const BitMatrix& m);

// Basis of { v : m * v = 0 }; size is ncols - rank.
std::vector<BitVec> kernel_basis(const BitMatrix& m);

// Coefficients c with xor_{c_i = 1} basis[i] == target, or nullopt when the
// target is outside the span. The basis vectors need not be independent.
std::optional<BitVec> solve_in_span(const std::vector<BitVec>& basis, const BitVec& target);

// xor of basis[i] over set bits of coeffs.
BitVec combine(const std::vector<BitVec>& basis, const BitVec& coeffs);

// Basis of { v in span(space) : action * v = v }. The action must be an
// involutive coordinate permutation and the space vectors independent.
std::vector<BitVec> fixed_subspace_basis(const std::vector<BitVec>& space, const BitMatrix& action);

}  // namespace cycles::gf2
