#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liesol/cons/build.hpp"
#include "liesol/lie/analysis.hpp"
#include "liesol/lie/salamon.hpp"

using namespace liesol;

namespace {

std::mt19937 rng(911);

template <class K>
Matrix<K> random_combination(const std::vector<Matrix<K>>& basis) {
  Matrix<K> out(basis.front().rows(), basis.front().cols());
  for (const auto& b : basis) {
    int c = int(rng() % 5) - 2;
    if (c) out = out + b.scaled(K(c));
  }
  return out;
}

}  // namespace

TEST_CASE("salamon parsing: structure constants and conventions") {
  auto heis = parse_salamon<Rational>("(0,0,12)");
  CHECK(heis.dim() == 3);
  CHECK(heis.bracket_basis(1, 2) == std::vector<Rational>{Rational(0), Rational(0), Rational(1)});
  CHECK(heis.bracket_basis(2, 1) == std::vector<Rational>{Rational(0), Rational(0), Rational(-1)});

  auto abelian = parse_salamon<Rational>("(0,0,0)");
  CHECK(abelian.terms().empty());

  // All atom forms agree.
  auto a = parse_salamon<Rational>("(0,0,e^{12},2*13,1/2*e^{1,4},0)");
  CHECK(a.bracket_basis(1, 3)[3] == Rational(2));
  CHECK(a.bracket_basis(1, 4)[4] == Rational(1, 2));

  auto f = parse_salamon<Rational>("(0,0,12,13,23)");
  CHECK(f.dim() == 5);
  CHECK(f.jacobi_checked());
}

TEST_CASE("salamon parse errors carry positions and kinds") {
  CHECK_THROWS_AS(parse_salamon<Rational>("(0,0,"), ParseError);
  CHECK_THROWS_AS(parse_salamon<Rational>("(0,0,123)"), ParseError);
  CHECK_THROWS_AS(parse_salamon<Rational>("(0,0,19)"), ParseError);  // index out of range
  CHECK_THROWS_AS(parse_salamon<Rational>("(0,0,11)"), ParseError);  // repeated index
  CHECK_THROWS_AS(parse_salamon<Rational>("0,0,12"), ParseError);
  // Jacobi violation: [[e3,e1],e2] contributes e5 with nothing to cancel.
  CHECK_THROWS_AS(parse_salamon<Rational>("(0,0,12,13,24)"), JacobiError);
  CHECK_NOTHROW(parse_salamon<Rational>("(0,0,12,13,24)", /*check_jacobi=*/false));
}

TEST_CASE("check_jacobi reports the violating triple") {
  auto bad = LieAlgebra<Rational>::create_unchecked(
      3, {{1, 2, 3, Rational(1)}, {1, 3, 3, Rational(1)}, {2, 3, 1, Rational(1)}});
  auto violations = bad.check_jacobi();
  REQUIRE_FALSE(violations.empty());
  CHECK(violations.front().i == 1);
  CHECK(violations.front().j == 2);
  CHECK(violations.front().k == 3);

  CHECK(parse_salamon<Rational>("(0,0,12)").check_jacobi().empty());
}

TEST_CASE("render and parse round-trip on canonical forms") {
  for (const char* text : {"(0,0,e^{1,2})", "(0,0,e^{1,2},e^{1,3},e^{2,3})",
                           "(e^{2,3},-e^{1,3},e^{1,2})", "(0,0,0)",
                           "(0,0,2*e^{1,2},1/2*e^{1,3})"}) {
    auto alg = parse_salamon<Rational>(text);
    CHECK(render_salamon(alg) == text);
    CHECK(parse_salamon<Rational>(render_salamon(alg)) == alg);
  }
  // Gaussian constants round-trip through the parenthesized coefficient form.
  auto cx = complexify(parse_salamon<Rational>("(0,0,12)"));
  auto twisted = LieAlgebra<Gaussian>::create(
      3, {{1, 2, 3, Gaussian(Rational(1), Rational(2))}});
  CHECK(parse_salamon<Gaussian>(render_salamon(twisted)) == twisted);
  CHECK(render_salamon(cx) == "(0,0,e^{1,2})");
}

TEST_CASE("derivation space dimensions") {
  CHECK(derivation_space(parse_salamon<Rational>("(0,0,12,13)")).dim() == 7);
  CHECK(derivation_space(parse_salamon<Rational>("(23,-13,12,26-35,34-16,-24+15)")).dim() == 7);
  CHECK(derivation_space(LieAlgebra<Rational>::abelian(3)).dim() == 9);
  CHECK(derivation_space(parse_salamon<Rational>("(23,-13,12)")).dim() == 3);
  CHECK(derivation_space(parse_salamon<Gaussian>("(23,-13,12)")).dim() == 3);
}

TEST_CASE("derivation and ad-invariance identities hold on computed bases") {
  for (const char* text : {"(0,0,12)", "(0,0,12,13)", "(23,-13,12)", "(0,-12,13,-23)"}) {
    auto alg = parse_salamon<Rational>(text);
    auto der = derivation_space(alg);
    for (const auto& d : der.basis()) CHECK(is_derivation(alg, d));
    auto endos = adinvariant_endos(alg);
    CHECK(endos.contains(Matrix<Rational>::identity(alg.dim())));
    for (const auto& phi : endos.basis()) CHECK(is_adinvariant_endo(alg, phi));
    // Composition closure: phi ad-invariant, D a derivation => phi D a derivation.
    for (int t = 0; t < 10; ++t) {
      Matrix<Rational> phi = random_combination(endos.basis());
      Matrix<Rational> d = random_combination(der.basis());
      CHECK(der.contains(phi * d));
    }
  }
  CHECK(adinvariant_endos(LieAlgebra<Rational>::abelian(3)).dim() == 9);
}

TEST_CASE("center, commutator, series, solvability") {
  auto heis = parse_salamon<Rational>("(0,0,12)");
  auto z = center(heis);
  CHECK(z.dim() == 1);
  CHECK(z.contains(basis_vector<Rational>(3, 3)));
  CHECK(derived_subalgebra(heis) == z);
  CHECK(is_nilpotent(heis));

  auto boidol = parse_salamon<Rational>("(0,-12,13,-23)");
  CHECK(is_solvable(boidol));
  CHECK_FALSE(is_nilpotent(boidol));

  auto su2 = parse_salamon<Rational>("(23,-13,12)");
  CHECK(derived_subalgebra(su2).dim() == 3);
  CHECK_FALSE(is_solvable(su2));
  CHECK(derived_series(su2).size() == 1);
}

TEST_CASE("niceness and its diagram") {
  auto [nice1, diagram1] = is_nice(parse_salamon<Rational>("(0,0,12,13)"));
  CHECK(nice1);
  CHECK(diagram1.arrows.size() == 4);  // both orderings of two brackets

  CHECK(is_nice(parse_salamon<Rational>("(0,0,0,0,12+34)")).first);
  CHECK_FALSE(is_nice(parse_salamon<Rational>("(0,0,0,12+13)")).first);
  // Arrow closure under the i<->j swap.
  for (const auto& arrow : diagram1.arrows) {
    bool found = false;
    for (const auto& other : diagram1.arrows)
      if (other.i == arrow.j && other.j == arrow.i && other.k == arrow.k &&
          other.c == -arrow.c)
        found = true;
    CHECK(found);
  }
}

TEST_CASE("quotients") {
  auto heis = parse_salamon<Rational>("(0,0,12)");
  auto q = quotient(heis, Subspace<Rational>::span(3, {basis_vector<Rational>(3, 3)}));
  CHECK(q.algebra.dim() == 2);
  CHECK(q.algebra.terms().empty());
  CHECK(q.projection.rows() == 2);

  auto whole = quotient(heis, Subspace<Rational>::full(3));
  CHECK(whole.algebra.dim() == 0);

  // span{e1} is not an ideal of the Heisenberg algebra.
  CHECK_THROWS_AS(quotient(heis, Subspace<Rational>::span(3, {basis_vector<Rational>(3, 1)})),
                  InvalidError);
}

TEST_CASE("split_by_adinvariant") {
  auto f = parse_salamon<Rational>("(0,0,12,13,23)");
  auto [ff, none] = direct_sum(f, f);
  CHECK(ff.dim() == 10);

  // phi = identity: a single ideal, everything.
  auto whole = split_by_adinvariant(ff, Matrix<Rational>::identity(10));
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].dim() == 10);

  // phi = projection on the first copy: the two copies come back.
  Matrix<Rational> proj(10, 10);
  for (int i = 0; i < 5; ++i) proj(i, i) = Rational(1);
  REQUIRE(is_adinvariant_endo(ff, proj));
  auto parts = split_by_adinvariant(ff, proj);
  REQUIRE(parts.size() == 2);
  std::vector<std::vector<Rational>> first, second;
  for (int i = 1; i <= 5; ++i) first.push_back(basis_vector<Rational>(10, i));
  for (int i = 6; i <= 10; ++i) second.push_back(basis_vector<Rational>(10, i));
  CHECK(parts[0] == Subspace<Rational>::span(10, second));  // eigenvalue 0 first
  CHECK(parts[1] == Subspace<Rational>::span(10, first));

  // Non-split characteristic polynomial is refused.
  auto ab2 = LieAlgebra<Rational>::abelian(2);
  Matrix<Rational> rot(2, 2);
  rot(0, 1) = Rational(-1);
  rot(1, 0) = Rational(1);
  CHECK_THROWS_AS(split_by_adinvariant(ab2, rot), UnsupportedError);

  // Non-ad-invariant maps are rejected up front.
  auto heis = parse_salamon<Rational>("(0,0,12)");
  Matrix<Rational> not_adinv(3, 3);
  not_adinv(2, 0) = Rational(1);
  not_adinv(0, 2) = Rational(1);
  CHECK_THROWS_AS(split_by_adinvariant(heis, not_adinv), InvalidError);
}

TEST_CASE("global sign flip preserves structural invariants") {
  for (const char* text :
       {"(0,0,12)", "(0,0,12,13)", "(23,-13,12)", "(0,-12,13,-23)", "(0,0,12,13,23)"}) {
    auto alg = parse_salamon<Rational>(text);
    auto flipped = sign_flipped(alg);
    CHECK(flipped.check_jacobi().empty());
    CHECK(derivation_space(alg).dim() == derivation_space(flipped).dim());
    CHECK(adinvariant_endos(alg).dim() == adinvariant_endos(flipped).dim());
    CHECK(center(alg).dim() == center(flipped).dim());
    CHECK(is_solvable(alg) == is_solvable(flipped));
    CHECK(is_nilpotent(alg) == is_nilpotent(flipped));
    CHECK(is_nice(alg).first == is_nice(flipped).first);
  }
}

TEST_CASE("subalgebra restriction") {
  auto su2 = parse_salamon<Rational>("(23,-13,12)");
  auto sub = subalgebra(su2, Subspace<Rational>::full(3));
  CHECK(sub == su2);
  // A non-closed subspace is rejected.
  CHECK_THROWS_AS(
      subalgebra(su2, Subspace<Rational>::span(3, {basis_vector<Rational>(3, 1),
                                                   basis_vector<Rational>(3, 2)})),
      InvalidError);
}
