#include "doctest.h"

#include "curalg/linalg.hpp"

using namespace curalg;

TEST_CASE("sparse vector arithmetic") {
    auto v = SparseVector::from_unsorted({{3, 1}, {1, 2}, {3, -1}, {0, Rational(1, 2)}});
    CHECK(v.nnz() == 2);
    CHECK(v.at(1) == 2);
    CHECK(v.at(3) == 0);
    auto w = v - v;
    CHECK(w.is_zero());
    v.add_scaled(SparseVector::unit(1), -2);
    CHECK(v == SparseVector::unit(0, Rational(1, 2)));
}

TEST_CASE("matrix product and commutator") {
    SparseMatrix a(2, 2), b(2, 2);
    a.set_column(1, SparseVector::unit(0));  // e
    b.set_column(0, SparseVector::unit(1));  // f
    auto h = commutator(a, b);
    CHECK(h.at(0, 0) == 1);
    CHECK(h.at(1, 1) == -1);
    CHECK(h.nnz() == 2);
    CHECK((SparseMatrix::identity(2) * a) == a);
}

TEST_CASE("echelon reduce and coordinates") {
    std::vector<BlockKey> keys(4, BlockKey{0, {0}});
    auto layout = BlockLayout::build(keys);
    BlockedSubspace s(layout);
    CHECK(s.insert(SparseVector::from_unsorted({{0, 2}, {1, 2}})) == 0);
    CHECK(s.insert(SparseVector::from_unsorted({{1, 1}, {2, 1}}), 1) == 1);
    CHECK(s.insert(SparseVector::from_unsorted({{0, 1}, {2, -1}}), 1) == -1);
    auto v = SparseVector::from_unsorted({{0, 3}, {2, -3}, {3, 5}});
    SparseVector rest;
    auto c = s.coordinates(v, &rest);
    CHECK(rest == SparseVector::unit(3, 5));
    SparseVector back = rest;
    for (auto& [id, x] : c) back.add_scaled(s.row(id), x);
    CHECK(back == v);
    // max_tag: only the first row
    CHECK(!s.residual(SparseVector::from_unsorted({{1, 1}, {2, 1}}), 0).is_zero());
    CHECK(s.block_rank(0, 0) == 1);
}

TEST_CASE("closure under operators respects blocks") {
    std::vector<BlockKey> keys = {{0, {2}}, {0, {0}}, {0, {-2}}};
    auto layout = BlockLayout::build(keys);
    SparseMatrix f(3, 3);
    f.set_column(0, SparseVector::unit(1));
    f.set_column(1, SparseVector::unit(2, 2));
    BlockedSubspace s(layout);
    const SparseMatrix* ops[] = {&f};
    close_under(s, {SparseVector::unit(0)}, ops);
    CHECK(s.dim() == 3);
    BlockedSubspace z(layout);
    close_under(z, {SparseVector{}}, ops);
    CHECK(z.dim() == 0);
}
