#pragma once
#include <utility>
#include <vector>

#include "serreq/serre.hpp"

namespace serreq {

/// Coherent sheaf on P^n presented by a graded module.
struct CoherentSheaf {
  QObject underlying;
  int ambient_dimension;  // n, so the ring has n+1 variables
};

CoherentSheaf sheafify(const GradedModulePresentation& m);

/// O(k), the smallest model: the free module S(k).
CoherentSheaf structure_twist(const Ring& R, int k);

CoherentSheaf twist_sheaf(const CoherentSheaf& f, int k);

/// dim H^0(F(d)).
long global_sections_dim(const CoherentSheaf& f, int d);

long sheaf_hom_dim(const CoherentSheaf& f, const CoherentSheaf& g);

/// Hilbert polynomial of the torsion-free quotient, evaluated at d.
long long euler_characteristic(const CoherentSheaf& f, int d);

/// The skyscraper module S/<x1> over k[x0,x1].
GradedModulePresentation skyscraper_module(const Ring& R);

/// Section dimensions of Sh(m)(-n) for n = 1..count; for the skyscraper
/// every entry is positive even though the degrees are unbounded below.
std::vector<std::pair<int, long>> demo_no_section(const GradedModulePresentation& m,
                                                  int count);

}  // namespace serreq
