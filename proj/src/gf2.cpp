#include "cycles/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace cycles::gf2 {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

BitVec BitVec::from_string(const std::string& bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') v.set(i);
        else if (bits[i] != '0') throw std::invalid_argument("BitVec::from_string: expected 0 or 1");
    }
    return v;
}

bool BitVec::any() const {
    for (auto w : words_) if (w) return true;
    return false;
}

std::size_t BitVec::count() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

std::size_t BitVec::first_set() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
        if (words_[k]) return k * 64 + std::countr_zero(words_[k]);
    return len_;
}

std::vector<std::size_t> BitVec::ones() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
        std::uint64_t w = words_[k];
        while (w) {
            out.push_back(k * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

BitVec& BitVec::operator^=(const BitVec& o) {
    require(len_ == o.len_, "BitVec xor: length mismatch");
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
    return *this;
}

bool BitVec::dot(const BitVec& o) const {
    require(len_ == o.len_, "BitVec dot: length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) acc ^= words_[k] & o.words_[k];
    return std::popcount(acc) & 1;
}

bool BitVec::operator<(const BitVec& o) const {
    if (len_ != o.len_) return len_ < o.len_;
    return words_ < o.words_;
}

std::string BitVec::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitMatrix::BitMatrix(std::vector<BitVec> rows) : rows_(std::move(rows)) {
    if (!rows_.empty()) {
        ncols_ = rows_[0].size();
        for (const auto& r : rows_)
            require(r.size() == ncols_, "BitMatrix: rows of unequal length");
    }
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

void BitMatrix::append_row(const BitVec& r) {
    if (rows_.empty()) ncols_ = r.size();
    require(r.size() == ncols_, "BitMatrix::append_row: length mismatch");
    rows_.push_back(r);
}

BitVec BitMatrix::multiply(const BitVec& v) const {
    require(v.size() == ncols_, "BitMatrix::multiply: length mismatch");
    BitVec out(nrows());
    for (std::size_t i = 0; i < nrows(); ++i)
        if (rows_[i].dot(v)) out.set(i);
    return out;
}

RrefResult rref(const BitMatrix& m) {
    RrefResult res;
    res.reduced = m;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.ncols() && r < m.nrows(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.nrows() && !res.reduced.get(pivot, c)) ++pivot;
        if (pivot == m.nrows()) continue;
        std::swap(res.reduced.row(r), res.reduced.row(pivot));
        for (std::size_t i = 0; i < m.nrows(); ++i)
            if (i != r && res.reduced.get(i, c)) res.reduced.row(i) ^= res.reduced.row(r);
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

std::size_t rank(const BitMatrix& m) {
    return rref(m).rank;
}

BitMatrix transpose(const BitMatrix& m) {
    BitMatrix t(m.ncols(), m.nrows());
    for (std::size_t i = 0; i < m.nrows(); ++i)
        for (std::size_t j : m.row(i).ones()) t.set(j, i);
    return t;
}

std::vector<BitVec> kernel_basis(const BitMatrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.ncols(), false);
    for (auto p : r.pivots) is_pivot[p] = true;

    std::vector<BitVec> basis;
    for (std::size_t f = 0; f < m.ncols(); ++f) {
        if (is_pivot[f]) continue;
        BitVec v(m.ncols());
        v.set(f);
        for (std::size_t i = 0; i < r.rank; ++i)
            if (r.reduced.get(i, f)) v.set(r.pivots[i]);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<BitVec> solve_in_span(const std::vector<BitVec>& basis, const BitVec& target) {
    for (const auto& b : basis)
        require(b.size() == target.size(), "solve_in_span: length mismatch");

    const std::size_t n = target.size();
    // Echelon rows keyed by their leading position, with coefficient tracking.
    std::vector<std::optional<std::pair<BitVec, BitVec>>> ech(n);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        BitVec v = basis[i];
        BitVec c(basis.size());
        c.set(i);
        while (v.any()) {
            std::size_t p = v.first_set();
            if (!ech[p]) {
                ech[p] = {std::move(v), std::move(c)};
                break;
            }
            v ^= ech[p]->first;
            c ^= ech[p]->second;
        }
    }

    BitVec t = target;
    BitVec coeffs(basis.size());
    while (t.any()) {
        std::size_t p = t.first_set();
        if (!ech[p]) return std::nullopt;
        t ^= ech[p]->first;
        coeffs ^= ech[p]->second;
    }
    return coeffs;
}

BitVec combine(const std::vector<BitVec>& basis, const BitVec& coeffs) {
    require(coeffs.size() == basis.size(), "combine: coefficient count mismatch");
    if (basis.empty()) return BitVec();
    BitVec out(basis[0].size());
    for (std::size_t i : coeffs.ones()) out ^= basis[i];
    return out;
}

std::vector<BitVec> fixed_subspace_basis(const std::vector<BitVec>& space, const BitMatrix& action) {
    if (space.empty()) return {};
    const std::size_t n = space[0].size();
    require(action.nrows() == n && action.ncols() == n, "fixed_subspace_basis: action shape mismatch");

    // Permutation matrix check: exactly one 1 per row and per column.
    std::vector<std::size_t> col_of(n);
    std::vector<bool> hit(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        auto ones = action.row(i).ones();
        require(ones.size() == 1, "fixed_subspace_basis: action is not a permutation matrix");
        col_of[i] = ones[0];
        require(!hit[ones[0]], "fixed_subspace_basis: action is not a permutation matrix");
        hit[ones[0]] = true;
    }
    for (std::size_t i = 0; i < n; ++i)
        require(col_of[col_of[i]] == i, "fixed_subspace_basis: action is not involutive");

    BitMatrix sp(space);
    require(rank(sp) == space.size(), "fixed_subspace_basis: space vectors are dependent");

    // Row i of diff is (action + I) applied to space[i]; a combination of the
    // space vectors is fixed iff the same combination of diff rows vanishes.
    BitMatrix diff(space.size(), n);
    for (std::size_t i = 0; i < space.size(); ++i)
        diff.row(i) = action.multiply(space[i]) ^ space[i];

    std::vector<BitVec> out;
    for (const BitVec& c : kernel_basis(transpose(diff)))
        out.push_back(combine(space, c));
    return out;
}

}  // namespace cycles::gf2
