#pragma once
#include <optional>
#include <utility>
#include <vector>

#include "serreq/ring.hpp"

namespace serreq {

/// Graded free module F = S(-a_1) + ... + S(-a_r) given by generator degrees.
struct FreeModule {
  std::vector<int> gen_degrees;

  int rank() const { return static_cast<int>(gen_degrees.size()); }
  bool operator==(const FreeModule&) const = default;
};

/// Homogeneous element of a free module, one polynomial per generator.
class FreeElement {
 public:
  FreeElement() = default;
  explicit FreeElement(std::vector<GradedPolynomial> comps) : comps_(std::move(comps)) {}
  static FreeElement zero(int rank) {
    return FreeElement(std::vector<GradedPolynomial>(rank));
  }
  static FreeElement unit(int rank, int i, const Ring& R);

  int rank() const { return static_cast<int>(comps_.size()); }
  bool is_zero() const;
  const GradedPolynomial& component(int i) const { return comps_[i]; }
  const std::vector<GradedPolynomial>& components() const { return comps_; }
  std::vector<GradedPolynomial>& components() { return comps_; }

  bool operator==(const FreeElement&) const = default;

 private:
  std::vector<GradedPolynomial> comps_;
};

/// Degree of a homogeneous element under the degree-shift rule; nullopt for 0.
/// Throws InhomogeneousInput if component degrees disagree.
std::optional<int> element_degree(const FreeModule& F, const FreeElement& v);

struct ModTerm {
  int comp;
  Monomial mono;
  Fp coeff;
};

/// Position-over-term: lower component index dominates, degrevlex on ties.
int modterm_cmp(int comp_a, const Monomial& a, int comp_b, const Monomial& b);

std::optional<ModTerm> lead_term(const FreeElement& v);

FreeElement elem_add(const Ring& R, const FreeModule& F, const FreeElement& a,
                     const FreeElement& b);
FreeElement elem_sub(const Ring& R, const FreeModule& F, const FreeElement& a,
                     const FreeElement& b);
FreeElement elem_scale(const Ring& R, Fp c, const FreeElement& a);
/// c * m * v
FreeElement elem_term_mul(const Ring& R, Fp c, const Monomial& m, const FreeElement& v);
FreeElement elem_poly_mul(const Ring& R, const GradedPolynomial& f, const FreeElement& v);

/// Reduced Groebner basis of a submodule of a graded free module, under the
/// position-over-term order.  Elements are monic, fully reduced, and sorted,
/// so equal submodules with the same ambient yield identical bases.
struct GroebnerBasis {
  FreeModule ambient;
  std::vector<FreeElement> elements;

  bool operator==(const GroebnerBasis&) const = default;
};

GroebnerBasis buchberger(const Ring& R, const std::vector<FreeElement>& gens,
                         const FreeModule& ambient);

FreeElement normal_form(const Ring& R, const FreeElement& v, const GroebnerBasis& gb);

bool is_member(const Ring& R, const FreeElement& v, const GroebnerBasis& gb);

/// Coefficients c with sum c_i * targets_i = v, as an element of the free
/// module on the targets; nullopt when v is not in the generated submodule.
std::optional<FreeElement> lift(const Ring& R, const FreeModule& ambient,
                                const std::vector<FreeElement>& targets,
                                const FreeElement& v);

/// Ambient free module of the syzygies of gens (one generator per input,
/// graded by the input degrees; zero inputs get degree 0).
FreeModule syzygy_ambient(const FreeModule& F, const std::vector<FreeElement>& gens);

/// Generators of { c : sum c_i * gens_i = 0 }, via Buchberger with tracking.
std::vector<FreeElement> syzygies_of(const Ring& R, const std::vector<FreeElement>& gens,
                                     const FreeModule& ambient);

std::vector<FreeElement> syzygies(const Ring& R, const GroebnerBasis& gb);

GroebnerBasis module_intersection(const Ring& R, const GroebnerBasis& U,
                                  const GroebnerBasis& V);

/// (U : x_i) = { v : x_i * v in U }
GroebnerBasis colon_by_variable(const Ring& R, const GroebnerBasis& U, int var);

/// (U : m^inf) for the irrelevant ideal m = <x_0,...,x_n>; stable value of
/// iterating the simultaneous colon by all variables.
GroebnerBasis saturate_irrelevant(const Ring& R, const GroebnerBasis& U);

/// Dimension of the degree-d piece of the submodule (leading-term count).
long submodule_dim(const Ring& R, const GroebnerBasis& gb, int d);

/// Dimension of the degree-d piece of the ambient free module.
long free_module_dim(const Ring& R, const FreeModule& F, int d);

/// Monomials (component, monomial) of ambient degree d not divisible by any
/// leading term of gb; a basis of the degree-d piece of the quotient.
std::vector<std::pair<int, Monomial>> standard_monomials(const Ring& R,
                                                         const FreeModule& F,
                                                         const GroebnerBasis& gb, int d);

}  // namespace serreq
