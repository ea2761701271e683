#pragma once
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "serreq/groebner.hpp"

namespace serreq {

/// Finitely presented graded module M = F0 / <relations>.  Values are
/// immutable after construction; the relation Groebner basis is computed
/// eagerly, the saturation lazily.
class GradedModulePresentation {
 public:
  GradedModulePresentation(Ring ring, FreeModule f0, std::vector<FreeElement> relations);

  const Ring& ring() const { return ring_; }
  const FreeModule& f0() const { return f0_; }
  const std::vector<FreeElement>& relations() const { return relations_; }
  const GroebnerBasis& relation_gb() const { return rel_gb_; }
  /// Groebner basis of (relations : m^inf).
  const GroebnerBasis& saturated_gb() const;

  bool is_zero_module() const { return f0_.rank() == 0; }
  long piece_dim(int d) const;
  int min_gen_degree() const;  // 0 for the zero module
  int max_gen_degree() const;

  bool operator==(const GradedModulePresentation& o) const {
    return ring_ == o.ring_ && f0_ == o.f0_ && relations_ == o.relations_;
  }

 private:
  Ring ring_;
  FreeModule f0_;
  std::vector<FreeElement> relations_;
  GroebnerBasis rel_gb_;
  mutable std::shared_ptr<GroebnerBasis> sat_gb_;
};

/// Degree-0 homomorphism between presented modules, with a certificate
/// that each source relation maps into the target relations.
class GradedMap {
 public:
  GradedMap(GradedModulePresentation source, GradedModulePresentation target,
            std::vector<FreeElement> matrix);

  const GradedModulePresentation& source() const { return *source_; }
  const GradedModulePresentation& target() const { return *target_; }
  const std::vector<FreeElement>& matrix() const { return matrix_; }
  const std::vector<FreeElement>& certificate() const { return certificate_; }

 private:
  std::shared_ptr<const GradedModulePresentation> source_, target_;
  std::vector<FreeElement> matrix_;
  std::vector<FreeElement> certificate_;
};

/// Image in target.f0 of an ambient element of source.f0.
FreeElement apply_on_ambient(const GradedMap& phi, const FreeElement& v);

GradedMap zero_map(GradedModulePresentation source, GradedModulePresentation target);
GradedMap identity_map(const GradedModulePresentation& m);

/// Degreewise dimensions with the interpolated Hilbert polynomial in
/// Newton form: P(d) = sum_k diffs[k] * C(d - origin, k).
struct HilbertData {
  std::map<int, long> values;
  int newton_origin = 0;
  std::vector<long long> newton_diffs;
  int stability_bound = 0;

  long long eval_polynomial(int d) const;
  int polynomial_degree() const;  // -1 for the zero polynomial
  /// Monomial-basis coefficients as reduced fractions (num, den).
  std::vector<std::pair<long long, long long>> rational_coefficients() const;
};

GradedModulePresentation free_presentation(const Ring& R, std::vector<int> gen_degrees);
/// S(k): one generator of degree -k.
GradedModulePresentation twisted_structure_module(const Ring& R, int k);

std::pair<GradedModulePresentation, GradedMap> kernel(const GradedMap& phi);
GradedModulePresentation cokernel(const GradedMap& phi);

/// Truncation M_{>=d} together with the canonical map into M.
std::pair<GradedModulePresentation, GradedMap> truncate(
    const GradedModulePresentation& m, int d);

struct TorsionParts {
  GradedModulePresentation torsion;       // H_C(M)
  GradedMap inclusion;                    // H_C(M) -> M
  GradedModulePresentation torsion_free;  // M / H_C(M)
};
TorsionParts torsion_submodule(const GradedModulePresentation& m);
GradedModulePresentation torsion_free_quotient(const GradedModulePresentation& m);

bool is_torsion(const GradedModulePresentation& m);

/// Largest d with H_C(M)_d != 0; nullopt means -infinity.
std::optional<int> torsion_top_degree(const GradedModulePresentation& m);

/// k-basis of Hom_S(M, N)_0 as explicit well-defined maps.
std::vector<GradedMap> hom_degree_zero(const GradedModulePresentation& m,
                                       const GradedModulePresentation& n);

struct FreeResolution {
  std::vector<FreeModule> frees;               // F0, F1, ...
  std::vector<std::vector<FreeElement>> maps;  // maps[i]: rows of F_{i+1} -> F_i
};
FreeResolution min_free_resolution(const GradedModulePresentation& m, int length_cap);

/// Castelnuovo-Mumford regularity from the minimal resolution.
int regularity(const GradedModulePresentation& m);

HilbertData hilbert(const GradedModulePresentation& m);

GradedModulePresentation twist(const GradedModulePresentation& m, int k);
GradedModulePresentation direct_sum(const GradedModulePresentation& a,
                                    const GradedModulePresentation& b);

/// Presentation with pruned unit entries and no zero relations.
GradedModulePresentation minimalize(const GradedModulePresentation& m);

/// Minimal generating subset of candidates modulo the submodule (graded
/// Nakayama, degree by degree).  modulo may be null.
std::vector<FreeElement> min_generators_mod(const Ring& R, const FreeModule& F,
                                            const std::vector<FreeElement>& candidates,
                                            const GroebnerBasis* modulo);

/// Presentation of the submodule of M generated by the given ambient
/// elements, with the inclusion map into M.
std::pair<GradedModulePresentation, GradedMap> submodule_presentation(
    const GradedModulePresentation& m, const std::vector<FreeElement>& gens);

}  // namespace serreq
