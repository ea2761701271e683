#include "serreq/sheaf.hpp"

namespace serreq {

CoherentSheaf sheafify(const GradedModulePresentation& m) {
  return CoherentSheaf{QObject{m}, m.ring().nvars - 1};
}

CoherentSheaf structure_twist(const Ring& R, int k) {
  return sheafify(twisted_structure_module(R, k));
}

CoherentSheaf twist_sheaf(const CoherentSheaf& f, int k) {
  return sheafify(twist(f.underlying.module, k));
}

long global_sections_dim(const CoherentSheaf& f, int d) {
  const Ring& R = f.underlying.module.ring();
  QObject source{twisted_structure_module(R, -d)};
  return hom_quotient(source, f.underlying).dimension;
}

long sheaf_hom_dim(const CoherentSheaf& f, const CoherentSheaf& g) {
  if (f.ambient_dimension != g.ambient_dimension ||
      !(f.underlying.module.ring() == g.underlying.module.ring()))
    throw AmbientMismatch("sheaf_hom_dim: sheaves live on different spaces");
  return hom_quotient(f.underlying, g.underlying).dimension;
}

long long euler_characteristic(const CoherentSheaf& f, int d) {
  GradedModulePresentation nbar = torsion_free_quotient(f.underlying.module);
  if (nbar.is_zero_module()) return 0;
  return hilbert(nbar).eval_polynomial(d);
}

GradedModulePresentation skyscraper_module(const Ring& R) {
  if (R.nvars != 2) throw Error("skyscraper_module: ambient ring must be k[x0,x1]");
  FreeModule f0{{0}};
  std::vector<GradedPolynomial> comps{poly_var(R, 1)};
  return GradedModulePresentation(R, f0, {FreeElement(std::move(comps))});
}

std::vector<std::pair<int, long>> demo_no_section(const GradedModulePresentation& m,
                                                  int count) {
  if (m.ring().nvars != 2) throw Error("demo_no_section: ambient ring must be k[x0,x1]");
  CoherentSheaf f = sheafify(m);
  std::vector<std::pair<int, long>> table;
  for (int n = 1; n <= count; ++n)
    table.emplace_back(-n, global_sections_dim(f, -n));
  return table;
}

}  // namespace serreq
