#include <doctest.h>

#include <random>

#include "charvar/errors.hpp"
#include "charvar/lattice_action.hpp"

using namespace charvar;

namespace {

IntMat from_rows(const std::vector<std::vector<long>>& rows) {
  IntMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

struct UnimodularPair {
  IntMat u, ui;
};

/// Random product of elementary row operations, with its inverse maintained
/// alongside: u <- E u pairs with ui <- ui E^{-1} (a column operation).
UnimodularPair random_unimodular_pair(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> coef(-2, 2);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  UnimodularPair p{IntMat::identity(n), IntMat::identity(n)};
  for (int step = 0; step < 10; ++step) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    Int c = coef(rng);
    for (std::size_t k = 0; k < n; ++k) p.u.at(i, k) += c * p.u.at(j, k);
    for (std::size_t k = 0; k < n; ++k) p.ui.at(k, j) -= c * p.ui.at(k, i);
  }
  return p;
}

/// Finite-order building blocks for randomized actions.
IntMat finite_order_block(std::mt19937& rng, std::size_t& size_out) {
  switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
    case 0: size_out = 1; return from_rows({{1}});
    case 1: size_out = 1; return from_rows({{-1}});
    case 2: size_out = 2; return from_rows({{0, 1}, {1, 0}});        // order 2
    case 3: size_out = 2; return from_rows({{0, -1}, {1, 0}});       // order 4
    default: size_out = 2; return from_rows({{0, -1}, {1, -1}});     // order 3
  }
}

LatticeAction random_action(std::mt19937& rng) {
  // Block-diagonal finite-order matrix, generators are commuting powers,
  // conjugated by a common unimodular change of basis.
  int rank = 0;
  std::vector<IntMat> blocks;
  while (rank < 2 || (rank < 6 && std::uniform_int_distribution<int>(0, 2)(rng))) {
    std::size_t s;
    blocks.push_back(finite_order_block(rng, s));
    rank += static_cast<int>(s);
  }
  IntMat base(rank, rank);
  int off = 0;
  for (const IntMat& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) base.at(off + i, off + j) = b.at(i, j);
    off += static_cast<int>(b.rows());
  }
  auto [u, ui] = random_unimodular_pair(rng, rank);
  REQUIRE(u * ui == IntMat::identity(rank));
  LatticeAction act;
  act.rank = rank;
  int ngen = 1 + std::uniform_int_distribution<int>(0, 2)(rng);
  for (int k = 0; k < ngen; ++k) {
    int power = 1 + std::uniform_int_distribution<int>(0, 6)(rng);
    IntMat m = IntMat::identity(rank);
    for (int i = 0; i < power; ++i) m = m * base;
    act.generators.push_back(u * m * ui);
  }
  return act;
}

}  // namespace

TEST_CASE("torus lemma on hand-picked actions") {
  LatticeAction swap2{2, {from_rows({{0, 1}, {1, 0}})}};
  validate(swap2);
  CHECK(fixed_rank(swap2) == 1);
  CHECK(commutator_rank(swap2) == 1);
  CHECK(intersection_rank(swap2) == 0);
  CHECK(verify_torus_lemma(swap2));

  LatticeAction inversion{3, {from_rows({{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}})}};
  validate(inversion);
  CHECK(fixed_rank(inversion) == 0);
  CHECK(commutator_rank(inversion) == 3);
  CHECK(verify_torus_lemma(inversion));

  LatticeAction trivial{4, {IntMat::identity(4)}};
  validate(trivial);
  CHECK(fixed_rank(trivial) == 4);
  CHECK(commutator_rank(trivial) == 0);
  CHECK(verify_torus_lemma(trivial));
}

TEST_CASE("torus lemma on randomized commuting finite actions") {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    LatticeAction act = random_action(rng);
    CAPTURE(trial);
    REQUIRE_NOTHROW(validate(act));
    CHECK(fixed_rank(act) + commutator_rank(act) == act.rank);
    CHECK(intersection_rank(act) == 0);
    CHECK(verify_torus_lemma(act));
  }
}

TEST_CASE("validation rejects bad actions") {
  // Non-unimodular.
  LatticeAction bad_det{2, {from_rows({{2, 0}, {0, 1}})}};
  CHECK_THROWS_AS(validate(bad_det), ValidationError);
  // Infinite order (unipotent shear).
  LatticeAction shear{2, {from_rows({{1, 1}, {0, 1}})}};
  CHECK_THROWS_AS(validate(shear), ValidationError);
  // Non-commuting pair.
  LatticeAction noncomm{2, {from_rows({{0, 1}, {1, 0}}), from_rows({{0, -1}, {1, 0}})}};
  CHECK_THROWS_AS(validate(noncomm), ValidationError);
  // Wrong shape.
  LatticeAction shape{3, {from_rows({{0, 1}, {1, 0}})}};
  CHECK_THROWS_AS(validate(shape), ValidationError);
}
