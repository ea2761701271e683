#include "serreq/serre.hpp"

#include <algorithm>
#include <limits>

namespace serreq {

namespace {

/// Express w (ambient element of M.f0, liftable through gens + relations)
/// in the given generators and push the coefficients through their images.
FreeElement push_through(const Ring& R, const FreeElement& w,
                         const std::vector<FreeElement>& gens,
                         const GradedModulePresentation& m,
                         const std::vector<FreeElement>& images,
                         const FreeModule& target_f0) {
  if (w.is_zero()) return FreeElement::zero(target_f0.rank());
  std::vector<FreeElement> all = gens;
  all.insert(all.end(), m.relation_gb().elements.begin(),
             m.relation_gb().elements.end());
  auto c = lift(R, m.f0(), all, w);
  if (!c) throw Error("internal: element not liftable through generating set");
  FreeElement out = FreeElement::zero(target_f0.rank());
  for (std::size_t k = 0; k < gens.size(); ++k)
    out = elem_add(R, target_f0, out,
                   elem_poly_mul(R, c->component(static_cast<int>(k)), images[k]));
  return out;
}

}  // namespace

int canonical_level(const GradedModulePresentation& m,
                    const GradedModulePresentation& n) {
  std::vector<int> parts;
  if (!m.is_zero_module()) {
    parts.push_back(regularity(m));
    parts.push_back(m.max_gen_degree());
  }
  GradedModulePresentation nbar = torsion_free_quotient(n);
  if (!nbar.is_zero_module()) parts.push_back(regularity(nbar));
  if (auto tt = torsion_top_degree(n)) parts.push_back(*tt + 1);
  if (parts.empty()) return 0;
  return *std::max_element(parts.begin(), parts.end());
}

HomGroup hom_quotient(const QObject& mq, const QObject& nq) {
  const GradedModulePresentation& m = mq.module;
  const GradedModulePresentation& n = nq.module;
  GradedModulePresentation nbar = torsion_free_quotient(n);
  int d0 = canonical_level(m, n);
  if (m.is_zero_module() || nbar.is_zero_module()) return HomGroup{0, {}, d0, {0, 0}};

  long dims[3] = {0, 0, 0};
  std::vector<GradedMap> level_basis;
  for (int t = 0; t < 3; ++t) {
    auto [trunc, incl] = truncate(m, d0 + t);
    std::vector<GradedMap> basis = hom_degree_zero(trunc, nbar);
    dims[t] = static_cast<long>(basis.size());
    if (t == 0) level_basis = std::move(basis);
  }
  if (dims[0] != dims[1] || dims[1] != dims[2])
    throw StabilizationFailure("hom_quotient: dimensions did not stabilize at level " +
                               std::to_string(d0));
  HomGroup out;
  out.dimension = dims[0];
  out.level_used = d0;
  out.stabilization_certificate = {dims[0], dims[1]};
  for (auto& phi : level_basis)
    out.basis.push_back(QMorphism(mq, nq, d0, std::move(phi)));
  return out;
}

QMorphism q_of_map(const GradedMap& phi) {
  const Ring& R = phi.source().ring();
  const GradedModulePresentation& m = phi.source();
  const GradedModulePresentation& n = phi.target();
  int e = canonical_level(m, n);
  auto [trunc, incl] = truncate(m, e);
  GradedModulePresentation nbar = torsion_free_quotient(n);
  std::vector<FreeElement> rows;
  for (const auto& w : incl.matrix())
    rows.push_back(nbar.is_zero_module() ? FreeElement::zero(0)
                                         : apply_on_ambient(phi, w));
  (void)R;
  return QMorphism(QObject{m}, QObject{n}, e,
                   GradedMap(std::move(trunc), std::move(nbar), std::move(rows)));
}

QMorphism q_identity(const QObject& m) { return q_of_map(identity_map(m.module)); }

QMorphism restrict_to_level(const QMorphism& phi, int level) {
  if (level == phi.level()) return phi;
  if (level < phi.level())
    throw Error("restrict_to_level: level below the representative level");
  const GradedModulePresentation& m = phi.source().module;
  const Ring& R = m.ring();
  auto [told, iold] = truncate(m, phi.level());
  auto [tnew, inew] = truncate(m, level);
  std::vector<FreeElement> rows;
  for (const auto& w : inew.matrix())
    rows.push_back(push_through(R, w, iold.matrix(), m, phi.map().matrix(),
                                phi.map().target().f0()));
  return QMorphism(phi.source(), phi.target(), level,
                   GradedMap(std::move(tnew), phi.map().target(), std::move(rows)));
}

QMorphism compose(const QMorphism& psi, const QMorphism& phi) {
  if (!(phi.target().module == psi.source().module))
    throw SourceTargetMismatch("compose: target of phi != source of psi");
  const GradedModulePresentation& n = phi.target().module;
  const Ring& R = n.ring();
  int e = std::max(phi.level(), psi.level());
  if (auto tt = torsion_top_degree(n)) e = std::max(e, *tt + 1);
  QMorphism phi_e = restrict_to_level(phi, e);
  auto [tb, ib] = truncate(n, psi.level());
  std::vector<FreeElement> rows;
  for (const auto& w : phi_e.map().matrix())
    rows.push_back(push_through(R, w, ib.matrix(), n, psi.map().matrix(),
                                psi.map().target().f0()));
  return QMorphism(phi.source(), psi.target(), e,
                   GradedMap(phi_e.map().source(), psi.map().target(), std::move(rows)));
}

bool is_zero(const QMorphism& phi) {
  const Ring& R = phi.source().module.ring();
  const auto& sat = phi.map().target().saturated_gb();
  for (const auto& row : phi.map().matrix())
    if (!is_member(R, row, sat)) return false;
  return true;
}

bool q_equal(const QMorphism& phi, const QMorphism& psi) {
  if (!(phi.source().module == psi.source().module) ||
      !(phi.target().module == psi.target().module))
    throw SourceTargetMismatch("q_equal: morphisms have different endpoints");
  int e = std::max(phi.level(), psi.level());
  QMorphism a = restrict_to_level(phi, e);
  QMorphism b = restrict_to_level(psi, e);
  const Ring& R = phi.source().module.ring();
  const auto& sat = a.map().target().saturated_gb();
  const FreeModule& f0 = a.map().target().f0();
  for (std::size_t i = 0; i < a.map().matrix().size(); ++i) {
    FreeElement diff = elem_sub(R, f0, a.map().matrix()[i], b.map().matrix()[i]);
    if (!is_member(R, diff, sat)) return false;
  }
  return true;
}

bool is_iso(const QMorphism& phi) {
  auto [ker, incl] = kernel(phi.map());
  if (!is_torsion(ker)) return false;
  return is_torsion(cokernel(phi.map()));
}

namespace {

/// Presentation of m^j * M (the image of the irrelevant-ideal multiples of
/// the generators) with its inclusion into M.
std::pair<GradedModulePresentation, GradedMap> power_submodule(
    const GradedModulePresentation& m, int j) {
  const Ring& R = m.ring();
  std::vector<FreeElement> candidates;
  for (int i = 0; i < m.f0().rank(); ++i)
    for (const auto& mono : monomial_basis(R, j)) {
      std::vector<GradedPolynomial> comps(m.f0().rank());
      comps[i] = poly_monomial(R, 1, mono);
      candidates.push_back(FreeElement(std::move(comps)));
    }
  return submodule_presentation(m, candidates);
}

}  // namespace

HomGroup hom_quotient_alt(const QObject& mq, const QObject& nq) {
  const GradedModulePresentation& m = mq.module;
  const GradedModulePresentation& n = nq.module;
  const Ring& R = m.ring();
  GradedModulePresentation nbar = torsion_free_quotient(n);
  int d0 = canonical_level(m, n);
  if (m.is_zero_module() || nbar.is_zero_module()) return HomGroup{0, {}, 0, {0, 0}};

  int j0 = std::max(0, d0 - m.min_gen_degree());
  long dims[3] = {0, 0, 0};
  std::vector<GradedMap> level_basis;
  std::vector<FreeElement> level_gens;
  for (int t = 0; t < 3; ++t) {
    auto [sub, incl] = power_submodule(m, j0 + t);
    std::vector<GradedMap> basis = hom_degree_zero(sub, nbar);
    dims[t] = static_cast<long>(basis.size());
    if (t == 0) {
      level_basis = std::move(basis);
      level_gens = incl.matrix();
    }
  }
  if (dims[0] != dims[1] || dims[1] != dims[2])
    throw StabilizationFailure("hom_quotient_alt: dimensions did not stabilize at power " +
                               std::to_string(j0));

  HomGroup out;
  out.dimension = dims[0];
  out.level_used = j0;
  out.stabilization_certificate = {dims[0], dims[1]};
  // convert the representatives to truncation form: M_{>=e} lies inside m^j0 M
  int e = std::max(d0, j0 + m.max_gen_degree());
  auto [trunc, incl] = truncate(m, e);
  for (const auto& omega : level_basis) {
    std::vector<FreeElement> rows;
    for (const auto& w : incl.matrix())
      rows.push_back(push_through(R, w, level_gens, m, omega.matrix(), nbar.f0()));
    out.basis.push_back(
        QMorphism(mq, nq, e, GradedMap(trunc, nbar, std::move(rows))));
  }
  return out;
}

}  // namespace serreq
