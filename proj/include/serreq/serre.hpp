#pragma once
#include <utility>
#include <vector>

#include "serreq/grmod.hpp"

namespace serreq {

/// Object of the quotient category: same data as a presented module, but
/// equality is only up to quotient-category isomorphism.
struct QObject {
  GradedModulePresentation module;
};

/// Canonical Gabriel representative of a quotient-category morphism: a
/// truncation level e and an honest degree-0 map M_{>=e} -> N/H(N).
class QMorphism {
 public:
  QMorphism(QObject source, QObject target, int level, GradedMap map)
      : source_(std::move(source)),
        target_(std::move(target)),
        level_(level),
        map_(std::move(map)) {}

  const QObject& source() const { return source_; }
  const QObject& target() const { return target_; }
  int level() const { return level_; }
  const GradedMap& map() const { return map_; }

 private:
  QObject source_, target_;
  int level_;
  GradedMap map_;
};

struct HomGroup {
  long dimension = 0;
  std::vector<QMorphism> basis;
  int level_used = 0;
  std::pair<long, long> stabilization_certificate{0, 0};
};

/// Truncation level from which the Hom colimit is evaluated: max of the
/// regularities, the torsion top degree of the target plus one, and the
/// top generator degree of the source.
int canonical_level(const GradedModulePresentation& m,
                    const GradedModulePresentation& n);

/// Hom in the quotient category via the cofinal system of truncations
/// M_{>=d}.  Dimensions are certified at three consecutive levels; a
/// mismatch raises StabilizationFailure.
HomGroup hom_quotient(const QObject& m, const QObject& n);

/// Same Hom group over the cofinal system m^j * M of irrelevant-ideal
/// multiples; a dual-computation witness for hom_quotient.
HomGroup hom_quotient_alt(const QObject& m, const QObject& n);

/// Image of an honest module map in the quotient category.
QMorphism q_of_map(const GradedMap& phi);

QMorphism q_identity(const QObject& m);

/// Restriction of the representative to a higher truncation level.
QMorphism restrict_to_level(const QMorphism& phi, int level);

QMorphism compose(const QMorphism& psi, const QMorphism& phi);

bool is_zero(const QMorphism& phi);
bool q_equal(const QMorphism& phi, const QMorphism& psi);

/// Quotient-category isomorphism test: kernel and cokernel of the
/// representing map are torsion.
bool is_iso(const QMorphism& phi);

}  // namespace serreq
