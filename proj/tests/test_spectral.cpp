#include <random>

#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "resq/closed_forms.hpp"
#include "resq/error.hpp"
#include "resq/resistance.hpp"
#include "resq/spectral.hpp"

using namespace resq;

namespace {

void check_values(const Spectrum& s, const std::vector<double>& expect, double tol) {
  REQUIRE(s.size() == expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i) CHECK(std::abs(s.values[i] - expect[i]) <= tol * std::max(1.0, std::abs(expect[i])));
}

Partition two_parts(std::size_t p, std::size_t q) {
  Partition parts;
  parts.blocks.resize(2);
  for (std::size_t v = 0; v < p + q; ++v) parts.blocks[v < p ? 0 : 1].push_back(v);
  return parts;
}

}  // namespace

TEST_CASE("eigenvalues_symmetric examples") {
  check_values(eigenvalues_symmetric(resistance_laplacian(generate(FamilySpec::complete(3)))), {2, 2, 0}, 1e-12);
  check_values(eigenvalues_symmetric(DenseMatrix::identity(3) + DenseMatrix::ones(3) * 2.0), {7, 1, 1}, 1e-12);
  const Spectrum zero = eigenvalues_symmetric(DenseMatrix(4));
  CHECK(zero.values == std::vector<double>(4, 0.0));
  REQUIRE(zero.multiplicities.size() == 1);
  CHECK(zero.multiplicities[0].second == 4);
  CHECK_THROWS_AS(eigenvalues_symmetric(DenseMatrix::from_rows({{1, 2}, {0, 1}})), Error);
  CHECK_THROWS_AS(eigenvalues_symmetric(DenseMatrix(2, 3)), Error);
}

TEST_CASE("Spectrum grouping and helpers") {
  const Spectrum s = Spectrum::from_values({0.0, 2.0, 2.0 + 4e-8, 1.0, 2.0 - 4e-8}, 1e-7);
  CHECK(s.values.front() == 2.0 + 4e-8);
  CHECK(s.values.back() == 0.0);
  REQUIRE(s.multiplicities.size() == 3);
  CHECK(s.multiplicities[0].second == 3);
  CHECK(s.multiplicities[0].first == doctest::Approx(2.0));
  CHECK(s.multiplicities[2] == std::pair<double, std::size_t>{0.0, 1});
  CHECK(s.distance_to(0.9) == doctest::Approx(0.1));
  CHECK(positional_difference(Spectrum::from_values({1, 2}), Spectrum::from_values({2.5, 1})) ==
        doctest::Approx(0.5));
  CHECK_THROWS_AS(positional_difference(Spectrum::from_values({1}), Spectrum::from_values({1, 2})), Error);
}

TEST_CASE("spectrum sum equals trace") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 20; ++t) {
    const Graph g = random_connected_graph(2 + rng() % 12, 0.4, rng());
    const DenseMatrix rq = resistance_signless_laplacian(g);
    const Spectrum s = eigenvalues_symmetric(rq);
    CHECK(std::abs(s.sum() - rq.trace()) <= static_cast<double>(s.size()) * s.tol);
    CHECK(oracle::max_positional_diff(s.values, oracle::eigenvalues(rq)) < 1e-10);
  }
}

TEST_CASE("quotient_matrix") {
  SUBCASE("L(K_p,q)") {
    for (std::size_t p = 1; p <= 5; ++p) {
      for (std::size_t q = 1; q <= 5; ++q) {
        const Quotient qm = quotient_matrix(laplacian(generate(FamilySpec::bipartite(p, q))), two_parts(p, q));
        CHECK(qm.equitable);
        const double fp = p;
        const double fq = q;
        CHECK(qm.q == DenseMatrix::from_rows({{fq, -fq}, {-fp, fp}}));
      }
    }
  }
  SUBCASE("R^L(K2,2)") {
    const Quotient qm = quotient_matrix(resistance_laplacian(generate(FamilySpec::bipartite(2, 2))), two_parts(2, 2));
    CHECK(qm.equitable);
    CHECK(max_abs_diff(qm.q, DenseMatrix::from_rows({{1.5, -1.5}, {-1.5, 1.5}})) < 1e-12);
  }
  SUBCASE("one block") {
    Partition all{{{0, 1, 2}}};
    const Quotient constant = quotient_matrix(DenseMatrix::from_rows({{1, 2, 0}, {3, 0, 0}, {0, 0, 3}}), all);
    CHECK(constant.equitable);
    CHECK(constant.q(0, 0) == 3.0);
    const Quotient varying = quotient_matrix(DenseMatrix::from_rows({{1, 0, 0}, {0, 2, 0}, {0, 0, 6}}), all);
    CHECK_FALSE(varying.equitable);
    CHECK(varying.q(0, 0) == 3.0);
  }
  SUBCASE("path partitions") {
    Partition parts{{{0, 2}, {1}}};
    CHECK(quotient_matrix(laplacian(generate(FamilySpec::path(3))), parts).equitable);
    Partition lopsided{{{0, 1}, {2}}};
    CHECK_FALSE(quotient_matrix(laplacian(generate(FamilySpec::path(3))), lopsided).equitable);
  }
  SUBCASE("invalid partitions") {
    const DenseMatrix m(3);
    CHECK_THROWS_AS(quotient_matrix(m, Partition{{{0, 1}}}), Error);
    CHECK_THROWS_AS(quotient_matrix(m, Partition{{{0, 1}, {1, 2}}}), Error);
    CHECK_THROWS_AS(quotient_matrix(m, Partition{{{0, 1, 2}, {}}}), Error);
    CHECK_THROWS_AS(quotient_matrix(m, Partition{{{0, 1, 3}}}), Error);
  }
}

TEST_CASE("equitable quotient eigenvalues appear in the parent spectrum") {
  for (std::size_t p = 1; p <= 8; ++p) {
    for (std::size_t q = 1; q <= 8; ++q) {
      const Graph g = generate(FamilySpec::bipartite(p, q));
      const ResistanceBundle b = resistance_bundle(g);
      for (const DenseMatrix* m : {&b.rl, &b.rq}) {
        const Quotient qm = quotient_matrix(*m, two_parts(p, q));
        REQUIRE(qm.equitable);
        const Spectrum parent = eigenvalues_symmetric(*m);
        for (double ev : closed_forms::eigenvalues_2x2(qm.q)) CHECK(parent.distance_to(ev) < 1e-7);
      }
    }
  }
}

TEST_CASE("circulant eigenvalues") {
  SUBCASE("R^L(C4) first row") {
    const std::vector<double> row{2.5, -0.75, -1, -0.75};
    const Spectrum s = circulant_eigenvalues(row);
    check_values(s, {3.5, 3.5, 3, 0}, 1e-12);
    CHECK(oracle::max_positional_diff(s.values, oracle::eigenvalues(circulant_matrix(row))) < 1e-12);
  }
  SUBCASE("constant row") {
    const Spectrum s = circulant_eigenvalues(std::vector<double>{1.5, 1.5, 1.5});
    CHECK(s.values[0] == doctest::Approx(4.5));
    CHECK(std::abs(s.values[1]) < 1e-12);
    CHECK(std::abs(s.values[2]) < 1e-12);
  }
  SUBCASE("R^Q(C4) first row") {
    const std::vector<double> row{2.5, 0.75, 1, 0.75};
    const Spectrum s = circulant_eigenvalues(row);
    check_values(s, {5, 2, 1.5, 1.5}, 1e-12);
    CHECK(oracle::max_positional_diff(s.values, oracle::eigenvalues(circulant_matrix(row))) < 1e-12);
  }
  SUBCASE("non-symmetric circulant has a complex spectrum") {
    CHECK_THROWS_AS(circulant_eigenvalues(std::vector<double>{0, 1, 0}), Error);
  }
  SUBCASE("random symmetric circulants, n <= 64") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> dist(-3, 3);
    for (std::size_t n = 1; n <= 64; n += 3) {
      std::vector<double> row(n);
      for (std::size_t k = 0; k <= n / 2; ++k) row[k] = row[(n - k) % n] = dist(rng);
      const Spectrum s = circulant_eigenvalues(row);
      CHECK(positional_difference(s, eigenvalues_symmetric(circulant_matrix(row))) < 1e-8);
    }
  }
}

TEST_CASE("transmission-regular spectrum shift") {
  const Spectrum r = Spectrum::from_values({4.0 / 3, -2.0 / 3, -2.0 / 3});
  check_values(shift_spectrum_transmission_regular(4.0 / 3, r, ShiftSign::L), {2, 2, 0}, 1e-14);
  check_values(shift_spectrum_transmission_regular(4.0 / 3, r, ShiftSign::Q), {8.0 / 3, 2.0 / 3, 2.0 / 3}, 1e-14);
  check_values(shift_spectrum_transmission_regular(0.0, Spectrum::from_values({0.0}), ShiftSign::L), {0}, 0);

  for (std::size_t n = 3; n <= 15; ++n) {
    const ResistanceBundle b = resistance_bundle(generate(FamilySpec::cycle(n)));
    const auto k = is_transmission_regular(b.rtr);
    REQUIRE(k.has_value());
    const Spectrum rs = eigenvalues_symmetric(b.r);
    CHECK(positional_difference(shift_spectrum_transmission_regular(*k, rs, ShiftSign::L),
                                eigenvalues_symmetric(b.rl)) < 1e-10);
    CHECK(positional_difference(shift_spectrum_transmission_regular(*k, rs, ShiftSign::Q),
                                eigenvalues_symmetric(b.rq)) < 1e-10);
  }
}

TEST_CASE("R^L spectral properties on random graphs") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 60; ++t) {
    const Graph g = random_connected_graph(2 + rng() % 11, 0.2 + 0.6 * (rng() % 100) / 100.0, rng());
    const DenseMatrix rl = resistance_laplacian(g);
    const Spectrum s = eigenvalues_symmetric(rl);
    const double norm = std::max(std::abs(s.largest()), std::abs(s.smallest()));
    CHECK(s.smallest() >= -1e-9 * norm);
    CHECK(s.largest() >= 2.0 - 1e-9);
    std::vector<double> ones(g.order(), 1.0);
    for (double v : rl.multiply(ones)) CHECK(std::abs(v) <= 1e-9 * norm);

    const auto candidates = g.non_edges();
    if (candidates.empty()) continue;
    const auto [u, v] = candidates[rng() % candidates.size()];
    const Spectrum after = eigenvalues_symmetric(resistance_laplacian(g.with_edge(u, v)));
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(s.values[i] >= after.values[i] - 1e-9);
  }
}
