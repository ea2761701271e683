#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "serreq/linalg.hpp"
#include "test_util.hpp"

using namespace serreq;
using namespace serreq::testutil;

namespace {

FreeElement combine(const Ring& R, const FreeModule& F, const FreeElement& coeffs,
                    const std::vector<FreeElement>& gens) {
  FreeElement out = FreeElement::zero(F.rank());
  for (std::size_t i = 0; i < gens.size(); ++i)
    out = elem_add(R, F, out, elem_poly_mul(R, coeffs.component(static_cast<int>(i)), gens[i]));
  return out;
}

}  // namespace

TEST_CASE("buchberger on an ideal") {
  Ring R = ring2(7);
  FreeModule F{{0}};
  std::vector<FreeElement> gens{elem(R, {"x0^2 + x1^2"}), elem(R, {"x0*x1"})};
  auto gb = buchberger(R, gens, F);
  // x1 * (x0^2 + x1^2) - x0 * (x0 x1) = x1^3 joins the basis
  CHECK(is_member(R, elem(R, {"x1^3"}), gb));
  CHECK(is_member(R, elem(R, {"x0^2*x1^2"}), gb));
  CHECK(!is_member(R, elem(R, {"x1^2"}), gb));
  // determinism: permuted generators give the identical reduced basis
  std::vector<FreeElement> rev{gens[1], gens[0]};
  CHECK(buchberger(R, rev, F) == gb);
}

TEST_CASE("normal form is canonical on cosets") {
  Ring R = ring2(7);
  FreeModule F{{0}};
  auto gb = buchberger(R, {elem(R, {"x0^2 - x1^2"})}, F);
  auto a = normal_form(R, elem(R, {"x0^3"}), gb);
  auto b = normal_form(R, elem(R, {"x0*x1^2"}), gb);
  CHECK(a == b);
  CHECK(!a.is_zero());
}

TEST_CASE("module groebner basis respects POT order") {
  Ring R = ring2(7);
  FreeModule F{{0, 1}};
  // (x0, 1) and (0, x1): eliminating the first component
  std::vector<FreeElement> gens{elem(R, {"x0^2", "x0"}), elem(R, {"0", "x1"})};
  auto gb = buchberger(R, gens, F);
  CHECK(is_member(R, elem(R, {"0", "x0*x1"}), gb));
  for (const auto& g : gb.elements) {
    auto lt = lead_term(g);
    REQUIRE(lt.has_value());
    CHECK(lt->coeff == 1);
  }
}

TEST_CASE("lift expresses members and rejects non-members") {
  Ring R = ring2(7);
  FreeModule F{{0}};
  std::vector<FreeElement> gens{elem(R, {"x0^2"}), elem(R, {"x0*x1 + x1^2"})};
  auto v = elem(R, {"x0^3 + x0^2*x1 + x0*x1^2"});
  auto c = lift(R, F, gens, v);
  REQUIRE(c.has_value());
  CHECK(combine(R, F, *c, gens) == v);
  CHECK(!lift(R, F, gens, elem(R, {"x1^2"})).has_value());
}

TEST_CASE("syzygies annihilate the generators") {
  Ring R = ring2(7);
  FreeModule F{{0}};
  std::vector<FreeElement> gens{elem(R, {"x0^2"}), elem(R, {"x0*x1"}),
                                elem(R, {"x1^2"})};
  auto syz = syzygies_of(R, gens, F);
  CHECK(!syz.empty());
  for (const auto& s : syz) CHECK(combine(R, F, s, gens).is_zero());
  // the Koszul syzygy (x1, -x0, 0) must be in the generated module
  FreeModule SF = syzygy_ambient(F, gens);
  auto sgb = buchberger(R, syz, SF);
  CHECK(is_member(R, elem(R, {"x1", "-x0", "0"}), sgb));
}

TEST_CASE("syzygy generation is complete degree by degree") {
  // oracle: in each low degree, the syzygies span the full nullspace of the
  // evaluation map (coefficients) -> (combination), computed by brute force
  Ring R = ring2(3);
  FreeModule F{{0, 0}};
  std::vector<FreeElement> gens{elem(R, {"x0", "x1"}), elem(R, {"x1", "x0"}),
                                elem(R, {"x0 + x1", "0"})};
  FreeModule SF = syzygy_ambient(F, gens);
  auto syz = syzygies_of(R, gens, F);
  auto sgb = buchberger(R, syz, SF);
  for (int d = 1; d <= 5; ++d) {
    // brute-force nullspace dimension via rank of the evaluation matrix
    std::vector<std::pair<int, Monomial>> cols;
    for (int i = 0; i < SF.rank(); ++i)
      for (const auto& m : monomial_basis(R, d - SF.gen_degrees[i]))
        cols.push_back({i, m});
    std::vector<std::pair<int, Monomial>> rows;
    for (int i = 0; i < F.rank(); ++i)
      for (const auto& m : monomial_basis(R, d - F.gen_degrees[i]))
        rows.push_back({i, m});
    Mat eval(rows.size(), Vec(cols.size(), 0));
    for (std::size_t c = 0; c < cols.size(); ++c) {
      auto [i, m] = cols[c];
      FreeElement image = elem_term_mul(R, 1, m, gens[i]);
      for (int comp = 0; comp < F.rank(); ++comp)
        for (const auto& t : image.component(comp).terms())
          for (std::size_t r = 0; r < rows.size(); ++r)
            if (rows[r].first == comp && rows[r].second == t.mono)
              eval[r][c] = t.coeff;
    }
    long expected = static_cast<long>(cols.size()) - rank(R.field, eval);
    CHECK(submodule_dim(R, sgb, d) == expected);
  }
}

TEST_CASE("saturation of (x^2, xy) is (x)") {
  Ring R = ring2();
  FreeModule F{{0}};
  auto gb = buchberger(R, {elem(R, {"x0^2"}), elem(R, {"x0*x1"})}, F);
  auto sat = saturate_irrelevant(R, gb);
  auto principal = buchberger(R, {elem(R, {"x0"})}, F);
  CHECK(sat == principal);
}

TEST_CASE("colon by variable") {
  Ring R = ring2(7);
  FreeModule F{{0}};
  auto gb = buchberger(R, {elem(R, {"x0*x1"}), elem(R, {"x1^2"})}, F);
  auto colon = colon_by_variable(R, gb, 1);
  CHECK(is_member(R, elem(R, {"x0"}), colon));
  CHECK(is_member(R, elem(R, {"x1"}), colon));
  CHECK(!is_member(R, FreeElement::unit(1, 0, R), colon));
}

TEST_CASE("module intersection") {
  Ring R = ring2(7);
  FreeModule F{{0}};
  auto U = buchberger(R, {elem(R, {"x0"})}, F);
  auto V = buchberger(R, {elem(R, {"x1"})}, F);
  auto I = module_intersection(R, U, V);
  CHECK(is_member(R, elem(R, {"x0*x1"}), I));
  CHECK(!is_member(R, elem(R, {"x0"}), I));
  CHECK(!is_member(R, elem(R, {"x1"}), I));
}

TEST_CASE("dimension counting and standard monomials") {
  Ring R = ring2(7);
  FreeModule F{{0, -1}};
  CHECK(free_module_dim(R, F, 2) == 3 + 4);  // deg-2 polys + deg-3 polys
  auto gb = buchberger(R, {elem(R, {"x0", "0"})}, F);
  for (int d = 0; d <= 4; ++d) {
    auto std_mons = standard_monomials(R, F, gb, d);
    CHECK(static_cast<long>(std_mons.size()) + submodule_dim(R, gb, d) ==
          free_module_dim(R, F, d));
  }
}

TEST_CASE("normal form agrees with lift membership on random elements") {
  Ring R = ring2(101);
  FreeModule F{{0}};
  std::vector<FreeElement> gens{elem(R, {"x0^2"}), elem(R, {"x0*x1^2"})};
  auto gb = buchberger(R, gens, F);
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    int d = 2 + trial % 3;
    FreeElement v(std::vector<GradedPolynomial>{random_poly(R, d, rng)});
    bool member = is_member(R, v, gb);
    CHECK(member == lift(R, F, gens, v).has_value());
  }
}
