#include "serreq/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace serreq {

FreeElement FreeElement::unit(int rank, int i, const Ring& R) {
  std::vector<GradedPolynomial> comps(rank);
  comps[i] = poly_one(R);
  return FreeElement(std::move(comps));
}

bool FreeElement::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

std::optional<int> element_degree(const FreeModule& F, const FreeElement& v) {
  if (v.rank() != F.rank()) throw AmbientMismatch("element rank != ambient rank");
  std::optional<int> deg;
  for (int i = 0; i < v.rank(); ++i) {
    const auto& c = v.component(i);
    if (c.is_zero()) continue;
    int d = *c.degree() + F.gen_degrees[i];
    if (deg && *deg != d)
      throw InhomogeneousInput("free element has mixed component degrees");
    deg = d;
  }
  return deg;
}

int modterm_cmp(int comp_a, const Monomial& a, int comp_b, const Monomial& b) {
  if (comp_a != comp_b) return comp_a < comp_b ? 1 : -1;
  return degrevlex_cmp(a, b);
}

std::optional<ModTerm> lead_term(const FreeElement& v) {
  for (int i = 0; i < v.rank(); ++i) {
    const auto& c = v.component(i);
    if (!c.is_zero()) return ModTerm{i, c.terms().front().mono, c.terms().front().coeff};
  }
  return std::nullopt;
}

FreeElement elem_add(const Ring& R, const FreeModule& F, const FreeElement& a,
                     const FreeElement& b) {
  (void)F;
  std::vector<GradedPolynomial> comps(a.rank());
  for (int i = 0; i < a.rank(); ++i)
    comps[i] = poly_add(R, a.component(i), b.component(i));
  return FreeElement(std::move(comps));
}

FreeElement elem_sub(const Ring& R, const FreeModule& F, const FreeElement& a,
                     const FreeElement& b) {
  return elem_add(R, F, a, elem_scale(R, R.field.neg(1), b));
}

FreeElement elem_scale(const Ring& R, Fp c, const FreeElement& a) {
  std::vector<GradedPolynomial> comps(a.rank());
  for (int i = 0; i < a.rank(); ++i) comps[i] = poly_scale(R, c, a.component(i));
  return FreeElement(std::move(comps));
}

FreeElement elem_term_mul(const Ring& R, Fp c, const Monomial& m, const FreeElement& v) {
  std::vector<GradedPolynomial> comps(v.rank());
  for (int i = 0; i < v.rank(); ++i) comps[i] = term_mul(R, c, m, v.component(i));
  return FreeElement(std::move(comps));
}

FreeElement elem_poly_mul(const Ring& R, const GradedPolynomial& f, const FreeElement& v) {
  std::vector<GradedPolynomial> comps(v.rank());
  for (int i = 0; i < v.rank(); ++i) comps[i] = poly_mul(R, f, v.component(i));
  return FreeElement(std::move(comps));
}

namespace {

const FreeElement* find_reducer(const std::vector<FreeElement>& basis, int comp,
                                const Monomial& m, const FreeElement* skip = nullptr) {
  for (const auto& b : basis) {
    if (&b == skip) continue;
    auto lt = lead_term(b);
    if (lt && lt->comp == comp && lt->mono.divides(m)) return &b;
  }
  return nullptr;
}

/// Full reduction: afterwards no term of the result is divisible by any
/// basis leading term.
FreeElement reduce_full(const Ring& R, const FreeModule& F, FreeElement v,
                        const std::vector<FreeElement>& basis,
                        const FreeElement* skip = nullptr) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < v.rank() && !changed; ++i) {
      for (const Term& t : v.component(i).terms()) {
        const FreeElement* b = find_reducer(basis, i, t.mono, skip);
        if (!b) continue;
        auto lt = lead_term(*b);
        Fp q = R.field.mul(t.coeff, R.field.inv(lt->coeff));
        Monomial qm = t.mono.quotient(lt->mono);
        v = elem_sub(R, F, v, elem_term_mul(R, q, qm, *b));
        changed = true;
        break;
      }
    }
  }
  return v;
}

bool modterm_less(const FreeElement& a, const FreeElement& b) {
  auto la = lead_term(a);
  auto lb = lead_term(b);
  if (!la) return static_cast<bool>(lb);
  if (!lb) return false;
  return modterm_cmp(la->comp, la->mono, lb->comp, lb->mono) < 0;
}

}  // namespace

GroebnerBasis buchberger(const Ring& R, const std::vector<FreeElement>& gens,
                         const FreeModule& ambient) {
  for (const auto& g : gens) element_degree(ambient, g);  // homogeneity check

  std::vector<FreeElement> basis;
  // (spair degree, i, j) -- normal selection strategy
  std::set<std::tuple<int, int, int>> pairs;

  auto add_element = [&](FreeElement v) {
    auto lt = lead_term(v);
    int idx = static_cast<int>(basis.size());
    for (int i = 0; i < idx; ++i) {
      auto lo = lead_term(basis[i]);
      if (lo->comp != lt->comp) continue;
      Monomial l = Monomial::lcm(lo->mono, lt->mono);
      int deg = l.degree() + ambient.gen_degrees[lt->comp];
      pairs.insert({deg, i, idx});
    }
    basis.push_back(std::move(v));
  };

  for (const auto& g : gens) {
    FreeElement r = reduce_full(R, ambient, g, basis);
    if (!r.is_zero()) add_element(std::move(r));
  }
  while (!pairs.empty()) {
    auto [deg, i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    auto li = lead_term(basis[i]);
    auto lj = lead_term(basis[j]);
    Monomial l = Monomial::lcm(li->mono, lj->mono);
    FreeElement s =
        elem_sub(R, ambient,
                 elem_term_mul(R, R.field.inv(li->coeff), l.quotient(li->mono), basis[i]),
                 elem_term_mul(R, R.field.inv(lj->coeff), l.quotient(lj->mono), basis[j]));
    FreeElement r = reduce_full(R, ambient, s, basis);
    if (!r.is_zero()) add_element(std::move(r));
  }

  // minimalize: drop elements whose lead is divisible by another kept lead
  std::vector<FreeElement> kept;
  std::sort(basis.begin(), basis.end(), modterm_less);
  for (const auto& b : basis) {
    auto lt = lead_term(b);
    if (!find_reducer(kept, lt->comp, lt->mono)) kept.push_back(b);
  }
  // tail-reduce and make monic for a canonical basis
  std::vector<FreeElement> reduced;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    FreeElement r = reduce_full(R, ambient, kept[i], kept, &kept[i]);
    auto lt = lead_term(r);
    reduced.push_back(elem_scale(R, R.field.inv(lt->coeff), r));
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const FreeElement& a, const FreeElement& b) { return modterm_less(b, a); });
  return GroebnerBasis{ambient, std::move(reduced)};
}

FreeElement normal_form(const Ring& R, const FreeElement& v, const GroebnerBasis& gb) {
  element_degree(gb.ambient, v);
  return reduce_full(R, gb.ambient, v, gb.elements);
}

bool is_member(const Ring& R, const FreeElement& v, const GroebnerBasis& gb) {
  return normal_form(R, v, gb).is_zero();
}

FreeModule syzygy_ambient(const FreeModule& F, const std::vector<FreeElement>& gens) {
  FreeModule S;
  S.gen_degrees.reserve(gens.size());
  for (const auto& g : gens) {
    auto d = element_degree(F, g);
    S.gen_degrees.push_back(d ? *d : 0);
  }
  return S;
}

namespace {

/// Tagged generators (g_i | e_i) in F + S^n; the position-over-term order
/// eliminates the tag block, so pure-tag basis elements are the syzygies.
struct TaggedGB {
  FreeModule ambient;  // F + tags
  int base_rank;
  GroebnerBasis gb;
};

TaggedGB tagged_basis(const Ring& R, const std::vector<FreeElement>& gens,
                      const FreeModule& F) {
  FreeModule syzF = syzygy_ambient(F, gens);
  FreeModule big;
  big.gen_degrees = F.gen_degrees;
  big.gen_degrees.insert(big.gen_degrees.end(), syzF.gen_degrees.begin(),
                         syzF.gen_degrees.end());
  int n = static_cast<int>(gens.size());
  std::vector<FreeElement> tagged;
  tagged.reserve(gens.size());
  for (int i = 0; i < n; ++i) {
    std::vector<GradedPolynomial> comps = gens[i].components();
    comps.resize(F.rank() + n);
    comps[F.rank() + i] = poly_one(R);
    tagged.push_back(FreeElement(std::move(comps)));
  }
  return TaggedGB{big, F.rank(), buchberger(R, tagged, big)};
}

FreeElement take_block(const FreeElement& v, int from, int count) {
  std::vector<GradedPolynomial> comps(v.components().begin() + from,
                                      v.components().begin() + from + count);
  return FreeElement(std::move(comps));
}

bool block_is_zero(const FreeElement& v, int from, int count) {
  for (int i = from; i < from + count; ++i)
    if (!v.component(i).is_zero()) return false;
  return true;
}

}  // namespace

std::vector<FreeElement> syzygies_of(const Ring& R, const std::vector<FreeElement>& gens,
                                     const FreeModule& ambient) {
  if (gens.empty()) return {};
  TaggedGB t = tagged_basis(R, gens, ambient);
  std::vector<FreeElement> syz;
  for (const auto& b : t.gb.elements)
    if (block_is_zero(b, 0, t.base_rank))
      syz.push_back(take_block(b, t.base_rank, static_cast<int>(gens.size())));
  return syz;
}

std::vector<FreeElement> syzygies(const Ring& R, const GroebnerBasis& gb) {
  return syzygies_of(R, gb.elements, gb.ambient);
}

std::optional<FreeElement> lift(const Ring& R, const FreeModule& ambient,
                                const std::vector<FreeElement>& targets,
                                const FreeElement& v) {
  if (v.is_zero())
    return FreeElement::zero(static_cast<int>(targets.size()));
  if (targets.empty()) return std::nullopt;
  TaggedGB t = tagged_basis(R, targets, ambient);
  std::vector<GradedPolynomial> comps = v.components();
  comps.resize(ambient.rank() + targets.size());
  FreeElement r =
      reduce_full(R, t.ambient, FreeElement(std::move(comps)), t.gb.elements);
  if (!block_is_zero(r, 0, t.base_rank)) return std::nullopt;
  // (v, 0) reduced to (0, c) means v = -c . targets
  return elem_scale(R, R.field.neg(1),
                    take_block(r, t.base_rank, static_cast<int>(targets.size())));
}

GroebnerBasis module_intersection(const Ring& R, const GroebnerBasis& U,
                                  const GroebnerBasis& V) {
  if (!(U.ambient == V.ambient))
    throw AmbientMismatch("module_intersection: ambients differ");
  std::vector<FreeElement> all = U.elements;
  all.insert(all.end(), V.elements.begin(), V.elements.end());
  std::vector<FreeElement> syz = syzygies_of(R, all, U.ambient);
  std::vector<FreeElement> gens;
  for (const auto& s : syz) {
    FreeElement w = FreeElement::zero(U.ambient.rank());
    for (std::size_t k = 0; k < U.elements.size(); ++k)
      w = elem_add(R, U.ambient, w, elem_poly_mul(R, s.component(static_cast<int>(k)),
                                                  U.elements[k]));
    if (!w.is_zero()) gens.push_back(std::move(w));
  }
  return buchberger(R, gens, U.ambient);
}

GroebnerBasis colon_by_variable(const Ring& R, const GroebnerBasis& U, int var) {
  const FreeModule& F = U.ambient;
  // syzygies among { u_1..u_s, x_var e_1..x_var e_r }: the tag part of each
  // syzygy over the x_var block gives v with x_var v in U
  std::vector<FreeElement> all = U.elements;
  GradedPolynomial x = poly_var(R, var);
  for (int j = 0; j < F.rank(); ++j)
    all.push_back(elem_poly_mul(R, x, FreeElement::unit(F.rank(), j, R)));
  std::vector<FreeElement> syz = syzygies_of(R, all, F);
  std::vector<FreeElement> gens;
  std::size_t s = U.elements.size();
  for (const auto& z : syz) {
    std::vector<GradedPolynomial> comps(F.rank());
    for (int j = 0; j < F.rank(); ++j)
      comps[j] = poly_neg(R, z.component(static_cast<int>(s) + j));
    FreeElement v(std::move(comps));
    if (!v.is_zero()) gens.push_back(std::move(v));
  }
  // (U : x) contains U
  gens.insert(gens.end(), U.elements.begin(), U.elements.end());
  return buchberger(R, gens, F);
}

GroebnerBasis saturate_irrelevant(const Ring& R, const GroebnerBasis& U) {
  GroebnerBasis current = U;
  for (;;) {
    GroebnerBasis next = colon_by_variable(R, current, 0);
    for (int i = 1; i < R.nvars; ++i)
      next = module_intersection(R, next, colon_by_variable(R, current, i));
    if (next == current) return current;
    current = std::move(next);
  }
}

long free_module_dim(const Ring& R, const FreeModule& F, int d) {
  long total = 0;
  for (int a : F.gen_degrees) {
    int e = d - a;
    if (e >= 0) total += binomial(R.nvars - 1 + e, R.nvars - 1);
  }
  return total;
}

long submodule_dim(const Ring& R, const GroebnerBasis& gb, int d) {
  long count = 0;
  for (int i = 0; i < gb.ambient.rank(); ++i) {
    int e = d - gb.ambient.gen_degrees[i];
    if (e < 0) continue;
    for (const auto& m : monomial_basis(R, e))
      if (find_reducer(gb.elements, i, m)) ++count;
  }
  return count;
}

std::vector<std::pair<int, Monomial>> standard_monomials(const Ring& R,
                                                         const FreeModule& F,
                                                         const GroebnerBasis& gb, int d) {
  std::vector<std::pair<int, Monomial>> out;
  for (int i = 0; i < F.rank(); ++i) {
    int e = d - F.gen_degrees[i];
    if (e < 0) continue;
    for (const auto& m : monomial_basis(R, e))
      if (!find_reducer(gb.elements, i, m)) out.push_back({i, m});
  }
  return out;
}

}  // namespace serreq
