#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cycles/gf2.hpp"

using namespace cycles::gf2;

namespace {

BitMatrix from_strings(const std::vector<std::string>& rows) {
    std::vector<BitVec> r;
    for (const auto& s : rows) r.push_back(BitVec::from_string(s));
    return BitMatrix(r);
}

}  // namespace

TEST_CASE("bitvec basics") {
    BitVec v(130);
    v.set(0);
    v.set(64);
    v.set(129);
    CHECK(v.count() == 3);
    CHECK(v.get(64));
    CHECK(!v.get(63));
    CHECK(v.first_set() == 0);
    v.flip(0);
    CHECK(v.first_set() == 64);
    CHECK(v.ones() == std::vector<std::size_t>{64, 129});

    BitVec a = BitVec::from_string("1100");
    BitVec b = BitVec::from_string("0110");
    CHECK((a ^ b) == BitVec::from_string("1010"));
    CHECK(a.dot(b));                                // one shared position
    CHECK(!a.dot(BitVec::from_string("0011")));     // none shared
    CHECK_THROWS_AS(a ^= BitVec(5), std::invalid_argument);
}

TEST_CASE("rref on the identity") {
    auto r = rref(BitMatrix::identity(3));
    CHECK(r.rank == 3);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});
    CHECK(r.reduced == BitMatrix::identity(3));
}

TEST_CASE("rref on the zero matrix") {
    auto r = rref(BitMatrix(2, 5));
    CHECK(r.rank == 0);
    CHECK(r.pivots.empty());
}

TEST_CASE("rank, kernel and span against full enumeration") {
    // rows {110, 011}: enumerate all 8 vectors of length 3 to find the kernel.
    BitMatrix m = from_strings({"110", "011"});
    std::vector<BitVec> kernel_by_enum;
    for (int mask = 0; mask < 8; ++mask) {
        BitVec v(3);
        for (int i = 0; i < 3; ++i)
            if ((mask >> i) & 1) v.set(i);
        if (!m.multiply(v).any() && v.any()) kernel_by_enum.push_back(v);
    }
    REQUIRE(kernel_by_enum.size() == 1);
    CHECK(kernel_by_enum[0] == BitVec::from_string("111"));

    auto r = rref(m);
    CHECK(r.rank == 2);
    auto kb = kernel_basis(m);
    REQUIRE(kb.size() == 1);
    CHECK(kb[0] == BitVec::from_string("111"));
}

TEST_CASE("kernel dimensions") {
    CHECK(kernel_basis(BitMatrix::identity(3)).empty());
    auto kb = kernel_basis(BitMatrix(1, 3));
    CHECK(kb.size() == 3);
    for (const auto& v : kb) CHECK(v.count() == 1);
}

TEST_CASE("rank equals rank of the transpose") {
    std::uint64_t state = 12345;
    for (int trial = 0; trial < 50; ++trial) {
        BitMatrix m(4, 7);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 7; ++j) {
                state = state * 6364136223846793005ull + 1442695040888963407ull;
                if ((state >> 33) & 1) m.set(i, j);
            }
        CHECK(rank(m) == rank(transpose(m)));
        CHECK(m.ncols() == rank(m) + kernel_basis(m).size());
    }
}

TEST_CASE("solve_in_span") {
    std::vector<BitVec> basis{BitVec::from_string("101"), BitVec::from_string("011")};
    auto c = solve_in_span(basis, BitVec::from_string("110"));
    REQUIRE(c.has_value());
    CHECK(c->count() == 2);
    CHECK(combine(basis, *c) == BitVec::from_string("110"));

    CHECK(!solve_in_span({BitVec::from_string("101")}, BitVec::from_string("010")).has_value());
    CHECK_THROWS_AS(solve_in_span(basis, BitVec(5)), std::invalid_argument);
}

TEST_CASE("solve_in_span failure raises rank") {
    std::vector<BitVec> basis{BitVec::from_string("1100"), BitVec::from_string("0110")};
    BitVec target = BitVec::from_string("0001");
    CHECK(!solve_in_span(basis, target).has_value());
    BitMatrix with_target(basis);
    with_target.append_row(target);
    CHECK(rank(with_target) == rank(BitMatrix(basis)) + 1);
}

TEST_CASE("solve_in_span handles dependent spanning sets") {
    std::vector<BitVec> basis{BitVec::from_string("110"), BitVec::from_string("011"),
                              BitVec::from_string("101")};
    auto c = solve_in_span(basis, BitVec::from_string("110"));
    REQUIRE(c.has_value());
    CHECK(combine(basis, *c) == BitVec::from_string("110"));
}

TEST_CASE("fixed subspace: identity action returns the whole span") {
    std::vector<BitVec> space{BitVec::from_string("1010"), BitVec::from_string("0110")};
    auto fixed = fixed_subspace_basis(space, BitMatrix::identity(4));
    CHECK(fixed.size() == 2);
    CHECK(rank(BitMatrix(fixed)) == 2);
}

TEST_CASE("fixed subspace of a coordinate swap") {
    // Full GF(2)^2 under the swap: fixed vectors are 00 and 11.
    std::vector<BitVec> space{BitVec::from_string("10"), BitVec::from_string("01")};
    BitMatrix swap(2, 2);
    swap.set(0, 1);
    swap.set(1, 0);
    auto fixed = fixed_subspace_basis(space, swap);
    REQUIRE(fixed.size() == 1);
    CHECK(fixed[0] == BitVec::from_string("11"));
}

TEST_CASE("fixed subspace rejects bad input") {
    std::vector<BitVec> space{BitVec::from_string("10")};
    BitMatrix not_perm = from_strings({"11", "00"});
    CHECK_THROWS_AS(fixed_subspace_basis(space, not_perm), std::invalid_argument);
    BitMatrix not_involutive(3, 3);  // a 3-cycle permutation
    not_involutive.set(0, 1);
    not_involutive.set(1, 2);
    not_involutive.set(2, 0);
    CHECK_THROWS_AS(fixed_subspace_basis({BitVec::from_string("100")}, not_involutive),
                    std::invalid_argument);
    std::vector<BitVec> dependent{BitVec::from_string("10"), BitVec::from_string("10")};
    CHECK_THROWS_AS(fixed_subspace_basis(dependent, BitMatrix::identity(2)),
                    std::invalid_argument);
}

TEST_CASE("fixed subspace dimension matches the orbit count of a permutation") {
    // Permutation (0 1)(2 3)(4): fixed subspace of the full space has one
    // generator per orbit.
    BitMatrix perm(5, 5);
    perm.set(0, 1);
    perm.set(1, 0);
    perm.set(2, 3);
    perm.set(3, 2);
    perm.set(4, 4);
    std::vector<BitVec> space;
    for (int i = 0; i < 5; ++i) {
        BitVec v(5);
        v.set(i);
        space.push_back(v);
    }
    auto fixed = fixed_subspace_basis(space, perm);
    CHECK(fixed.size() == 3);
    for (const auto& v : fixed) CHECK(perm.multiply(v) == v);
}
