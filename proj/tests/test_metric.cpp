#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liesol/cons/build.hpp"
#include "liesol/lie/salamon.hpp"
#include "liesol/metric/spaces.hpp"

using namespace liesol;

namespace {

std::mt19937 rng(424242);

Matrix<Rational> random_matrix(int n) {
  Matrix<Rational> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Rational(int(rng() % 7) - 3);
  return m;
}

}  // namespace

TEST_CASE("metric parsing") {
  auto g = parse_metric<Rational>("e1.e4 + e2.e3", 4);
  CHECK(g.matrix()(0, 3) == Rational(1));
  CHECK(g.matrix()(3, 0) == Rational(1));
  CHECK(g.nondegenerate());

  auto gf = parse_metric<Rational>("e1.e5-e2.e4+e3.e3", 5);
  CHECK(gf.matrix()(1, 3) == Rational(-1));
  CHECK(gf.matrix()(2, 2) == Rational(1));

  auto big = parse_metric<Rational>("e10.e11+1/2*e1.e1", 11);
  CHECK(big.matrix()(9, 10) == Rational(1));
  CHECK(big.matrix()(0, 0) == Rational(1, 2));
  CHECK_FALSE(big.nondegenerate());

  CHECK(parse_metric<Rational>("", 3).matrix().is_zero_matrix());
  CHECK(parse_metric<Rational>("0", 3).matrix().is_zero_matrix());
  CHECK_FALSE(parse_metric<Rational>("0", 3).nondegenerate());

  CHECK_THROWS_AS(parse_metric<Rational>("e1.e9", 4), ParseError);
  CHECK_THROWS_AS(parse_metric<Rational>("e1+e2", 4), ParseError);

  // Printer round-trip.
  CHECK(render_metric(gf) == "e1.e5-e2.e4+e3.e3");
  CHECK(parse_metric<Rational>(render_metric(g), 4) == g);
}

TEST_CASE("ad-invariance checks") {
  auto f = parse_salamon<Rational>("(0,0,12,13,23)");
  auto gf = parse_metric<Rational>("e1.e5-e2.e4+e3.e3", 5);
  CHECK(is_adinvariant(f, gf));

  auto heis = parse_salamon<Rational>("(0,0,12)");
  auto euclid = Metric<Rational>::identity(3);
  auto viol = check_adinvariant(heis, euclid);
  REQUIRE(viol.has_value());
  CHECK(viol->i == 1);
  CHECK(viol->j == 2);
  CHECK(viol->k == 3);

  auto any = parse_metric<Rational>("e1.e2+2*e3.e3", 3);
  CHECK(is_adinvariant(LieAlgebra<Rational>::abelian(3), any));
}

TEST_CASE("adjoint") {
  auto g = parse_metric<Rational>("e1.e4+e2.e3", 4);
  CHECK(adjoint(Matrix<Rational>::identity(4), g) == Matrix<Rational>::identity(4));

  // Antidiagonal pairing with sigma = (14)(23): diag(a,b,c,d)* = diag(d,c,b,a).
  std::vector<Rational> d{Rational(2), Rational(3), Rational(5), Rational(7)};
  Matrix<Rational> f = Matrix<Rational>::diagonal(d);
  std::vector<Rational> rev{Rational(7), Rational(5), Rational(3), Rational(2)};
  CHECK(adjoint(f, g) == Matrix<Rational>::diagonal(rev));

  // g(f x, y) = g(x, f* y) on basis vectors, and (f*)* = f.
  for (int t = 0; t < 50; ++t) {
    Matrix<Rational> r = random_matrix(4);
    Matrix<Rational> radj = adjoint(r, g);
    CHECK(adjoint(radj, g) == r);
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) {
        std::vector<Rational> x = basis_vector<Rational>(4, i);
        std::vector<Rational> y = basis_vector<Rational>(4, j);
        CHECK(g.pair(r.apply(x), y) == g.pair(x, radj.apply(y)));
      }
  }
}

TEST_CASE("S and D spaces") {
  auto tsu2 = parse_salamon<Rational>("(23,-13,12,26-35,34-16,-24+15)");
  auto g = parse_metric<Rational>("e1.e4+e2.e5+e3.e6", 6);
  auto s = selfadjoint_adinvariant_space(tsu2, g);
  CHECK(s.dim() == 2);
  auto d = symmetrized_derivation_space(tsu2, g);
  CHECK(d.dim() == 1);
  CHECK(d.contains(Matrix<Rational>::identity(6)));

  auto ab = LieAlgebra<Rational>::abelian(3);
  auto id3 = Metric<Rational>::identity(3);
  CHECK(selfadjoint_adinvariant_space(ab, id3).dim() == 6);
  CHECK(symmetrized_derivation_space(ab, id3).dim() == 6);
}

TEST_CASE("solitary classification") {
  auto f = parse_salamon<Rational>("(0,0,12,13,23)");
  auto gf = parse_metric<Rational>("e1.e5-e2.e4+e3.e3", 5);
  auto vf = classify_solitary(f, gf);
  CHECK(vf.status == SolitaryStatus::Solitary);
  CHECK_FALSE(vf.witness.has_value());

  auto tsu2 = parse_salamon<Rational>("(23,-13,12,26-35,34-16,-24+15)");
  auto g = parse_metric<Rational>("e1.e4+e2.e5+e3.e6", 6);
  auto vg = classify_solitary(tsu2, g);
  CHECK(vg.status == SolitaryStatus::Neither);
  CHECK(vg.id_in_d);
  REQUIRE(vg.witness.has_value());
  // The witness is in S_g but not in D_g + span{id}.
  CHECK(is_adinvariant_endo(tsu2, *vg.witness));
  CHECK(adjoint(*vg.witness, g) == *vg.witness);

  auto h = parse_metric<Rational>("e1.e4+e2.e5+e3.e6+e1.e1+e2.e2+e3.e3", 6);
  auto vh = classify_solitary(tsu2, h);
  CHECK(vh.status == SolitaryStatus::WeaklySolitary);
  CHECK_FALSE(vh.id_in_d);

  // Scaling and global sign of the metric do not change the verdict.
  auto v2 = classify_solitary(tsu2, Metric<Rational>(g.matrix().scaled(Rational(2))));
  auto vneg = classify_solitary(tsu2, Metric<Rational>(g.matrix().scaled(Rational(-1))));
  CHECK(v2.status == vg.status);
  CHECK(vneg.status == vg.status);

  CHECK_THROWS_AS(classify_solitary(parse_salamon<Rational>("(0,0,12)"),
                                    Metric<Rational>::identity(3)),
                  InvalidError);
}

TEST_CASE("metric transport") {
  auto tsu2 = parse_salamon<Rational>("(23,-13,12,26-35,34-16,-24+15)");
  auto g = parse_metric<Rational>("e1.e4+e2.e5+e3.e6", 6);
  auto h = parse_metric<Rational>("e1.e4+e2.e5+e3.e6+e1.e1+e2.e2+e3.e3", 6);

  CHECK(metric_transport(tsu2, g, g) == Matrix<Rational>::identity(6));
  CHECK(metric_transport(tsu2, g, Metric<Rational>(g.matrix().scaled(Rational(2)))) ==
        Matrix<Rational>::identity(6).scaled(Rational(2)));
  // The (g, h) transporter is certified internally (self-adjoint,
  // ad-invariant, maps S and D correctly).
  CHECK_NOTHROW(metric_transport(tsu2, g, h));
}

TEST_CASE("find_adinvariant_metric") {
  CHECK_FALSE(find_adinvariant_metric(parse_salamon<Rational>("(0,0,12)")).has_value());

  auto ab = LieAlgebra<Rational>::abelian(3);
  auto found = find_adinvariant_metric(ab);
  REQUIRE(found.has_value());
  CHECK(found->matrix() == Matrix<Rational>::identity(3));

  auto f = parse_salamon<Rational>("(0,0,12,13,23)");
  auto any = find_adinvariant_metric(f);
  REQUIRE(any.has_value());
  CHECK(is_adinvariant(f, *any));

  auto sigma_found = find_sigma_diagonal_metric(f);
  REQUIRE(sigma_found.has_value());
  const auto& [sigma, metric] = *sigma_found;
  CHECK(sigma == std::vector<int>{0, 5, 4, 3, 2, 1});
  // The found form is a multiple of the e1.e5 - e2.e4 + e3.e3 pattern.
  CHECK(metric.matrix()(0, 4) == -metric.matrix()(1, 3));
  CHECK(metric.matrix()(0, 4) == metric.matrix()(2, 2));
  CHECK(is_adinvariant(f, metric));

  // Multiple distinct metrics for dimension-invariance tests.
  auto several = find_adinvariant_metrics(f, nullptr, 3);
  CHECK(several.size() >= 2);
}

TEST_CASE("all_derivations_traceless") {
  CHECK(all_derivations_traceless(parse_salamon<Rational>("(23,-13,12)")));
  CHECK_FALSE(all_derivations_traceless(parse_salamon<Rational>("(0,0,12,13)")));
}

TEST_CASE("central split") {
  auto ab2 = LieAlgebra<Rational>::abelian(2);
  auto split = central_split(ab2, Metric<Rational>::identity(2));
  REQUIRE(split.has_value());
  CHECK(split->m.dim() == 2);
  CHECK(split->gtilde.dim() == 0);

  // f + a one-dimensional abelian factor: m = span{e6}, gtilde = f.
  auto f = parse_salamon<Rational>("(0,0,12,13,23)");
  auto gf = parse_metric<Rational>("e1.e5-e2.e4+e3.e3", 5);
  auto line = LieAlgebra<Rational>::abelian(1);
  auto gline = Metric<Rational>::identity(1);
  auto [sum, gsum] = direct_sum(f, line, &gf, &gline);
  REQUIRE(gsum.has_value());
  auto split6 = central_split(sum, *gsum);
  REQUIRE(split6.has_value());
  CHECK(split6->m == Subspace<Rational>::span(6, {basis_vector<Rational>(6, 6)}));
  CHECK(split6->gtilde.dim() == 5);
  CHECK(split6->gtilde.contains(basis_vector<Rational>(6, 1)));

  // z(f) sits inside the commutator, so the split does not apply.
  CHECK_FALSE(central_split(f, gf).has_value());
}

TEST_CASE("classify_selfadjoint") {
  auto f = parse_salamon<Rational>("(0,0,12,13,23)");
  auto gf = parse_metric<Rational>("e1.e5-e2.e4+e3.e3", 5);

  auto scalar = classify_selfadjoint(f, gf, Matrix<Rational>::identity(5).scaled(Rational(3)));
  CHECK(scalar.kind == SelfAdjointClass<Rational>::ScalarPlusNilpotent);
  CHECK(scalar.a == Rational(3));
  CHECK(scalar.part.is_zero_matrix());

  // id on one factor plus 2 id on the other: two rational eigenvalues.
  auto [ff, gff] = direct_sum(f, f, &gf, &gf);
  Matrix<Rational> two_blocks(10, 10);
  for (int i = 0; i < 5; ++i) two_blocks(i, i) = Rational(1);
  for (int i = 5; i < 10; ++i) two_blocks(i, i) = Rational(2);
  auto mixed = classify_selfadjoint(ff, *gff, two_blocks);
  CHECK(mixed.kind == SelfAdjointClass<Rational>::Unclassified);
  CHECK(mixed.note.find("irreducibility") != std::string::npos);

  // J on the realification of a complex algebra.
  Realification real = realify(complexify(f));
  auto greal = realify_metric(complexify(gf));
  auto pair = classify_selfadjoint(real.algebra, greal, real.j);
  CHECK(pair.kind == SelfAdjointClass<Rational>::ComplexPair);
  CHECK(pair.a == Rational(0));
  CHECK(pair.b == Rational(1));
  CHECK(pair.part == real.j);
}

TEST_CASE("maps with central image vanishing on the commutator are derivations") {
  // Remark-style property: im phi in z(g), g' in ker phi.
  auto f = parse_salamon<Rational>("(0,0,12,13,23)");
  auto der = derivation_space(f);
  auto endos = adinvariant_endos(f);
  auto z = center(f);
  auto comm = derived_subalgebra(f);
  // z(f) = span{e4,e5}, f' = span{e3,e4,e5}; maps e1,e2 -> z extended by 0.
  for (int t = 0; t < 50; ++t) {
    Matrix<Rational> phi(5, 5);
    for (int col : {0, 1})
      for (int row : {3, 4}) phi(row, col) = Rational(int(rng() % 5) - 2);
    CHECK(der.contains(phi));
    CHECK(endos.contains(phi));
  }
  CHECK(z.dim() == 2);
  CHECK(comm.dim() == 3);
}
