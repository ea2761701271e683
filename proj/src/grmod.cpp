#include "serreq/grmod.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "serreq/linalg.hpp"

namespace serreq {

GradedModulePresentation::GradedModulePresentation(Ring ring, FreeModule f0,
                                                   std::vector<FreeElement> relations)
    : ring_(std::move(ring)), f0_(std::move(f0)), relations_(std::move(relations)) {
  for (auto& r : relations_) {
    if (r.rank() != f0_.rank())
      throw AmbientMismatch("relation rank does not match generator count");
  }
  rel_gb_ = buchberger(ring_, relations_, f0_);
  // canonicalize presentations of the zero module to rank 0
  if (f0_.rank() > 0) {
    bool all_zero = true;
    for (int i = 0; i < f0_.rank() && all_zero; ++i)
      all_zero = is_member(ring_, FreeElement::unit(f0_.rank(), i, ring_), rel_gb_);
    if (all_zero) {
      f0_ = FreeModule{};
      relations_.clear();
      rel_gb_ = GroebnerBasis{f0_, {}};
    }
  }
}

const GroebnerBasis& GradedModulePresentation::saturated_gb() const {
  if (!sat_gb_)
    sat_gb_ = std::make_shared<GroebnerBasis>(saturate_irrelevant(ring_, rel_gb_));
  return *sat_gb_;
}

long GradedModulePresentation::piece_dim(int d) const {
  return free_module_dim(ring_, f0_, d) - submodule_dim(ring_, rel_gb_, d);
}

int GradedModulePresentation::min_gen_degree() const {
  if (is_zero_module()) return 0;
  return *std::min_element(f0_.gen_degrees.begin(), f0_.gen_degrees.end());
}

int GradedModulePresentation::max_gen_degree() const {
  if (is_zero_module()) return 0;
  return *std::max_element(f0_.gen_degrees.begin(), f0_.gen_degrees.end());
}

GradedMap::GradedMap(GradedModulePresentation source, GradedModulePresentation target,
                     std::vector<FreeElement> matrix)
    : source_(std::make_shared<const GradedModulePresentation>(std::move(source))),
      target_(std::make_shared<const GradedModulePresentation>(std::move(target))),
      matrix_(std::move(matrix)) {
  if (!(source_->ring() == target_->ring()))
    throw AmbientMismatch("map between modules over different rings");
  if (static_cast<int>(matrix_.size()) != source_->f0().rank())
    throw IllFormedMap("matrix row count != source generator count");
  const Ring& R = source_->ring();
  for (int i = 0; i < source_->f0().rank(); ++i) {
    auto d = element_degree(target_->f0(), matrix_[i]);
    if (d && *d != source_->f0().gen_degrees[i])
      throw IllFormedMap("map is not homogeneous of degree 0");
  }
  // well-definedness: each source relation must land in the target relations
  for (const auto& rel : source_->relations()) {
    FreeElement image = FreeElement::zero(target_->f0().rank());
    for (int i = 0; i < source_->f0().rank(); ++i)
      image = elem_add(R, target_->f0(), image,
                       elem_poly_mul(R, rel.component(i), matrix_[i]));
    auto cert = lift(R, target_->f0(), target_->relation_gb().elements, image);
    if (!cert) throw IllFormedMap("source relation does not map into target relations");
    certificate_.push_back(std::move(*cert));
  }
}

FreeElement apply_on_ambient(const GradedMap& phi, const FreeElement& v) {
  const Ring& R = phi.source().ring();
  FreeElement out = FreeElement::zero(phi.target().f0().rank());
  for (int i = 0; i < phi.source().f0().rank(); ++i)
    out = elem_add(R, phi.target().f0(), out,
                   elem_poly_mul(R, v.component(i), phi.matrix()[i]));
  return out;
}

GradedMap zero_map(GradedModulePresentation source, GradedModulePresentation target) {
  std::vector<FreeElement> rows(source.f0().rank(),
                                FreeElement::zero(target.f0().rank()));
  return GradedMap(std::move(source), std::move(target), std::move(rows));
}

GradedMap identity_map(const GradedModulePresentation& m) {
  std::vector<FreeElement> rows;
  for (int i = 0; i < m.f0().rank(); ++i)
    rows.push_back(FreeElement::unit(m.f0().rank(), i, m.ring()));
  return GradedMap(m, m, std::move(rows));
}

GradedModulePresentation free_presentation(const Ring& R, std::vector<int> gen_degrees) {
  return GradedModulePresentation(R, FreeModule{std::move(gen_degrees)}, {});
}

GradedModulePresentation twisted_structure_module(const Ring& R, int k) {
  return free_presentation(R, {-k});
}

// ---------------------------------------------------------------------------
// degreewise linear algebra helpers

namespace {

struct DegreeFrame {
  std::vector<std::pair<int, Monomial>> monos;
  std::map<std::pair<int, std::vector<int>>, int> index;

  DegreeFrame(const Ring& R, const FreeModule& F, int d) {
    for (int i = 0; i < F.rank(); ++i) {
      int e = d - F.gen_degrees[i];
      if (e < 0) continue;
      for (const auto& m : monomial_basis(R, e)) {
        index[{i, m.exponents()}] = static_cast<int>(monos.size());
        monos.push_back({i, m});
      }
    }
  }

  int size() const { return static_cast<int>(monos.size()); }

  Vec vectorize(const FreeElement& v) const {
    Vec out(monos.size(), 0);
    for (int i = 0; i < v.rank(); ++i)
      for (const auto& t : v.component(i).terms())
        out[index.at({i, t.mono.exponents()})] = t.coeff;
    return out;
  }
};

/// Incremental row echelon over F_p for independence tests.
struct Echelon {
  const PrimeField& k;
  std::vector<Vec> rows;  // each normalized with leading 1
  std::vector<int> pivots;

  explicit Echelon(const PrimeField& field) : k(field) {}

  // returns true if v was independent (and absorbs it)
  bool insert(Vec v) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Fp c = v[pivots[r]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j)
        v[j] = k.sub(v[j], k.mul(c, rows[r][j]));
    }
    int p = -1;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) {
        p = static_cast<int>(j);
        break;
      }
    if (p < 0) return false;
    Fp inv = k.inv(v[p]);
    for (auto& x : v) x = k.mul(x, inv);
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  }
};

}  // namespace

std::vector<FreeElement> min_generators_mod(const Ring& R, const FreeModule& F,
                                            const std::vector<FreeElement>& candidates,
                                            const GroebnerBasis* modulo) {
  // sort candidate indices by degree, stable
  std::vector<std::pair<int, int>> order;  // (degree, index)
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    auto d = element_degree(F, candidates[i]);
    if (d) order.push_back({*d, static_cast<int>(i)});
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<FreeElement> kept;
  std::size_t pos = 0;
  while (pos < order.size()) {
    int e = order[pos].first;
    DegreeFrame frame(R, F, e);
    Echelon ech(R.field);
    // degree-e piece of the submodule to reduce modulo
    if (modulo) {
      for (const auto& g : modulo->elements) {
        auto dg = element_degree(F, g);
        if (!dg || *dg > e) continue;
        for (const auto& m : monomial_basis(R, e - *dg))
          ech.insert(frame.vectorize(elem_term_mul(R, 1, m, g)));
      }
    }
    // m * (module generated by all candidates): strictly lower-degree
    // candidates pushed up to degree e
    for (const auto& [dw, wi] : order) {
      if (dw >= e) break;
      for (const auto& m : monomial_basis(R, e - dw))
        ech.insert(frame.vectorize(elem_term_mul(R, 1, m, candidates[wi])));
    }
    while (pos < order.size() && order[pos].first == e) {
      const FreeElement& w = candidates[order[pos].second];
      if (ech.insert(frame.vectorize(w))) kept.push_back(w);
      ++pos;
    }
  }
  return kept;
}

std::pair<GradedModulePresentation, GradedMap> submodule_presentation(
    const GradedModulePresentation& m, const std::vector<FreeElement>& gens) {
  const Ring& R = m.ring();
  std::vector<FreeElement> kept = min_generators_mod(R, m.f0(), gens, &m.relation_gb());
  if (kept.empty()) {
    GradedModulePresentation zero(R, FreeModule{}, {});
    return {zero, zero_map(zero, m)};
  }
  std::vector<int> degs;
  for (const auto& w : kept) degs.push_back(*element_degree(m.f0(), w));
  // relations = { c : sum c_i kept_i lies in the relation submodule }
  std::vector<FreeElement> all = kept;
  all.insert(all.end(), m.relation_gb().elements.begin(), m.relation_gb().elements.end());
  std::vector<FreeElement> syz = syzygies_of(R, all, m.f0());
  std::vector<FreeElement> rels;
  for (const auto& s : syz) {
    std::vector<GradedPolynomial> comps(s.components().begin(),
                                        s.components().begin() + kept.size());
    FreeElement c(std::move(comps));
    if (!c.is_zero()) rels.push_back(std::move(c));
  }
  GradedModulePresentation sub(R, FreeModule{std::move(degs)}, std::move(rels));
  return {sub, GradedMap(sub, m, std::move(kept))};
}

std::pair<GradedModulePresentation, GradedMap> kernel(const GradedMap& phi) {
  const Ring& R = phi.source().ring();
  const GradedModulePresentation& M = phi.source();
  const GradedModulePresentation& N = phi.target();
  if (M.is_zero_module()) {
    GradedModulePresentation zero(R, FreeModule{}, {});
    return {zero, zero_map(zero, M)};
  }
  std::vector<FreeElement> all = phi.matrix();
  all.insert(all.end(), N.relation_gb().elements.begin(), N.relation_gb().elements.end());
  std::vector<FreeElement> syz = syzygies_of(R, all, N.f0());
  std::vector<FreeElement> pre;
  for (const auto& s : syz) {
    std::vector<GradedPolynomial> comps(s.components().begin(),
                                        s.components().begin() + M.f0().rank());
    FreeElement c(std::move(comps));
    if (!c.is_zero()) pre.push_back(std::move(c));
  }
  return submodule_presentation(M, pre);
}

GradedModulePresentation cokernel(const GradedMap& phi) {
  std::vector<FreeElement> rels = phi.target().relations();
  for (const auto& row : phi.matrix())
    if (!row.is_zero()) rels.push_back(row);
  return GradedModulePresentation(phi.target().ring(), phi.target().f0(),
                                  std::move(rels));
}

std::pair<GradedModulePresentation, GradedMap> truncate(
    const GradedModulePresentation& m, int d) {
  const Ring& R = m.ring();
  if (m.is_zero_module()) {
    GradedModulePresentation zero(R, FreeModule{}, {});
    return {zero, zero_map(zero, m)};
  }
  int bound = std::max({d, regularity(m), m.max_gen_degree()});
  std::vector<FreeElement> candidates;
  for (int e = d; e <= bound; ++e) {
    for (const auto& [comp, mono] : standard_monomials(R, m.f0(), m.relation_gb(), e)) {
      std::vector<GradedPolynomial> comps(m.f0().rank());
      comps[comp] = poly_monomial(R, 1, mono);
      candidates.push_back(FreeElement(std::move(comps)));
    }
  }
  return submodule_presentation(m, candidates);
}

TorsionParts torsion_submodule(const GradedModulePresentation& m) {
  auto [h, incl] = submodule_presentation(m, m.saturated_gb().elements);
  return TorsionParts{std::move(h), std::move(incl), torsion_free_quotient(m)};
}

GradedModulePresentation torsion_free_quotient(const GradedModulePresentation& m) {
  return GradedModulePresentation(m.ring(), m.f0(), m.saturated_gb().elements);
}

bool is_torsion(const GradedModulePresentation& m) {
  const Ring& R = m.ring();
  for (int i = 0; i < m.f0().rank(); ++i)
    if (!is_member(R, FreeElement::unit(m.f0().rank(), i, R), m.saturated_gb()))
      return false;
  return true;
}

std::optional<int> torsion_top_degree(const GradedModulePresentation& m) {
  TorsionParts parts = torsion_submodule(m);
  if (parts.torsion.is_zero_module()) return std::nullopt;
  int hi = regularity(parts.torsion);
  int lo = parts.torsion.min_gen_degree();
  for (int d = hi; d >= lo; --d)
    if (parts.torsion.piece_dim(d) > 0) return d;
  return std::nullopt;  // unreachable for a nonzero torsion module
}

std::vector<GradedMap> hom_degree_zero(const GradedModulePresentation& m,
                                       const GradedModulePresentation& n) {
  const Ring& R = m.ring();
  if (!(R == n.ring())) throw AmbientMismatch("hom between modules over different rings");
  if (m.is_zero_module() || n.is_zero_module()) return {};

  // unknowns: standard-monomial coordinates of each generator image
  struct Unknown {
    int gen;
    FreeElement elem;  // single standard monomial of N in degree deg(gen)
  };
  std::vector<Unknown> unknowns;
  for (int i = 0; i < m.f0().rank(); ++i) {
    int g = m.f0().gen_degrees[i];
    for (const auto& [comp, mono] : standard_monomials(R, n.f0(), n.relation_gb(), g)) {
      std::vector<GradedPolynomial> comps(n.f0().rank());
      comps[comp] = poly_monomial(R, 1, mono);
      unknowns.push_back({i, FreeElement(std::move(comps))});
    }
  }
  if (unknowns.empty()) return {};

  Mat constraints;
  for (const auto& rel : m.relation_gb().elements) {
    int delta = *element_degree(m.f0(), rel);
    DegreeFrame frame(R, n.f0(), delta);
    Mat block(frame.size(), Vec(unknowns.size(), 0));
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      const auto& q = rel.component(unknowns[u].gen);
      if (q.is_zero()) continue;
      FreeElement contrib =
          normal_form(R, elem_poly_mul(R, q, unknowns[u].elem), n.relation_gb());
      Vec col = frame.vectorize(contrib);
      for (int r = 0; r < frame.size(); ++r) block[r][u] = col[r];
    }
    for (auto& row : block) constraints.push_back(std::move(row));
  }

  std::vector<Vec> null = nullspace(R.field, constraints, static_cast<int>(unknowns.size()));
  std::vector<GradedMap> basis;
  for (const auto& v : null) {
    std::vector<FreeElement> rows(m.f0().rank(), FreeElement::zero(n.f0().rank()));
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      if (v[u] == 0) continue;
      rows[unknowns[u].gen] =
          elem_add(R, n.f0(), rows[unknowns[u].gen],
                   elem_scale(R, v[u], unknowns[u].elem));
    }
    basis.push_back(GradedMap(m, n, std::move(rows)));
  }
  return basis;
}

FreeResolution min_free_resolution(const GradedModulePresentation& m, int length_cap) {
  const Ring& R = m.ring();
  GradedModulePresentation mm = minimalize(m);
  FreeResolution res;
  res.frees.push_back(mm.f0());
  if (mm.is_zero_module()) return res;
  std::vector<FreeElement> rows =
      min_generators_mod(R, mm.f0(), mm.relation_gb().elements, nullptr);
  int level = 0;
  while (!rows.empty() && level < length_cap) {
    FreeModule next = syzygy_ambient(res.frees.back(), rows);
    std::vector<FreeElement> syz = syzygies_of(R, rows, res.frees.back());
    res.maps.push_back(std::move(rows));
    res.frees.push_back(next);
    rows = min_generators_mod(R, next, syz, nullptr);
    ++level;
  }
  if (!rows.empty())
    throw Error("min_free_resolution: length cap reached before resolution ended");
  return res;
}

int regularity(const GradedModulePresentation& m) {
  if (m.is_zero_module()) throw ZeroModule("regularity of the zero module");
  FreeResolution res = min_free_resolution(m, m.ring().nvars + 1);
  int reg = std::numeric_limits<int>::min();
  for (std::size_t i = 0; i < res.frees.size(); ++i) {
    if (res.frees[i].gen_degrees.empty()) continue;
    int top = *std::max_element(res.frees[i].gen_degrees.begin(),
                                res.frees[i].gen_degrees.end());
    reg = std::max(reg, top - static_cast<int>(i));
  }
  return reg;
}

long long HilbertData::eval_polynomial(int d) const {
  // sum diffs[k] * C(d - origin, k), with the generalized binomial
  long long total = 0;
  for (std::size_t k = 0; k < newton_diffs.size(); ++k) {
    long long num = 1;
    for (std::size_t j = 0; j < k; ++j)
      num *= (static_cast<long long>(d) - newton_origin - static_cast<long long>(j));
    long long fact = 1;
    for (std::size_t j = 2; j <= k; ++j) fact *= static_cast<long long>(j);
    total += newton_diffs[k] * (num / fact);
  }
  return total;
}

int HilbertData::polynomial_degree() const {
  for (int k = static_cast<int>(newton_diffs.size()) - 1; k >= 0; --k)
    if (newton_diffs[k] != 0) return k;
  return -1;
}

namespace {

long long llgcd(long long a, long long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a == 0 ? 1 : a;
}

}  // namespace

std::vector<std::pair<long long, long long>> HilbertData::rational_coefficients() const {
  // expand sum_k diffs[k]/k! * prod_{j<k} (x - origin - j)
  std::size_t n = newton_diffs.size();
  std::vector<long long> num(n == 0 ? 1 : n, 0);
  std::vector<long long> den(n == 0 ? 1 : n, 1);
  long long fact = 1;
  std::vector<long long> prod{1};  // integer coefficients of the running product
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) {
      fact *= static_cast<long long>(k);
      // multiply prod by (x - origin - (k-1))
      long long shift = -(static_cast<long long>(newton_origin) + static_cast<long long>(k) - 1);
      std::vector<long long> next(prod.size() + 1, 0);
      for (std::size_t i = 0; i < prod.size(); ++i) {
        next[i + 1] += prod[i];
        next[i] += prod[i] * shift;
      }
      prod = std::move(next);
    }
    if (newton_diffs[k] == 0) continue;
    for (std::size_t i = 0; i < prod.size(); ++i) {
      // num[i]/den[i] += diffs[k]*prod[i]/fact
      long long an = newton_diffs[k] * prod[i];
      long long ad = fact;
      long long nn = num[i] * ad + an * den[i];
      long long nd = den[i] * ad;
      long long g = llgcd(nn, nd);
      num[i] = nn / g;
      den[i] = nd / g;
      if (den[i] < 0) {
        den[i] = -den[i];
        num[i] = -num[i];
      }
    }
  }
  std::vector<std::pair<long long, long long>> out;
  for (std::size_t i = 0; i < num.size(); ++i) out.push_back({num[i], den[i]});
  while (out.size() > 1 && out.back().first == 0) out.pop_back();
  return out;
}

HilbertData hilbert(const GradedModulePresentation& m) {
  HilbertData h;
  if (m.is_zero_module()) {
    for (int d = -2; d <= 2; ++d) h.values[d] = 0;
    h.newton_origin = 0;
    h.stability_bound = 0;
    return h;
  }
  int reg = regularity(m);
  int n = m.ring().nvars;  // Hilbert polynomial degree <= n-1
  int origin = reg + 1;
  int hi = origin + n;
  int lo = std::min(m.min_gen_degree() - 2, -1);
  for (int d = lo; d <= hi; ++d) h.values[d] = m.piece_dim(d);
  h.newton_origin = origin;
  h.stability_bound = origin;
  std::vector<long long> samples;
  for (int d = origin; d <= hi; ++d) samples.push_back(h.values.at(d));
  // forward differences
  for (std::size_t k = 0; k < samples.size(); ++k) {
    h.newton_diffs.push_back(samples[0]);
    for (std::size_t i = 0; i + 1 < samples.size() - k; ++i)
      samples[i] = samples[i + 1] - samples[i];
  }
  return h;
}

GradedModulePresentation twist(const GradedModulePresentation& m, int k) {
  std::vector<int> degs = m.f0().gen_degrees;
  for (auto& d : degs) d -= k;
  return GradedModulePresentation(m.ring(), FreeModule{std::move(degs)}, m.relations());
}

GradedModulePresentation direct_sum(const GradedModulePresentation& a,
                                    const GradedModulePresentation& b) {
  if (!(a.ring() == b.ring())) throw AmbientMismatch("direct_sum over different rings");
  std::vector<int> degs = a.f0().gen_degrees;
  degs.insert(degs.end(), b.f0().gen_degrees.begin(), b.f0().gen_degrees.end());
  int ra = a.f0().rank(), rb = b.f0().rank();
  std::vector<FreeElement> rels;
  for (const auto& r : a.relations()) {
    std::vector<GradedPolynomial> comps = r.components();
    comps.resize(ra + rb);
    rels.push_back(FreeElement(std::move(comps)));
  }
  for (const auto& r : b.relations()) {
    std::vector<GradedPolynomial> comps(ra);
    comps.insert(comps.end(), r.components().begin(), r.components().end());
    rels.push_back(FreeElement(std::move(comps)));
  }
  return GradedModulePresentation(a.ring(), FreeModule{std::move(degs)}, std::move(rels));
}

GradedModulePresentation minimalize(const GradedModulePresentation& m) {
  const Ring& R = m.ring();
  std::vector<int> degs = m.f0().gen_degrees;
  std::vector<FreeElement> rels = m.relations();
  for (;;) {
    int ri = -1, cj = -1;
    Fp c = 0;
    for (std::size_t r = 0; r < rels.size() && ri < 0; ++r)
      for (int j = 0; j < static_cast<int>(degs.size()); ++j) {
        const auto& entry = rels[r].component(j);
        if (!entry.is_zero() && *entry.degree() == 0) {
          ri = static_cast<int>(r);
          cj = j;
          c = entry.terms().front().coeff;
          break;
        }
      }
    if (ri < 0) break;
    FreeModule F{degs};
    FreeElement pivot = rels[ri];
    Fp cinv = R.field.inv(c);
    std::vector<FreeElement> next;
    for (std::size_t r = 0; r < rels.size(); ++r) {
      if (static_cast<int>(r) == ri) continue;
      FreeElement row = rels[r];
      const auto& q = row.component(cj);
      if (!q.is_zero())
        row = elem_sub(R, F, row, elem_poly_mul(R, poly_scale(R, cinv, q), pivot));
      std::vector<GradedPolynomial> comps = row.components();
      comps.erase(comps.begin() + cj);
      FreeElement trimmed(std::move(comps));
      if (!trimmed.is_zero()) next.push_back(std::move(trimmed));
    }
    degs.erase(degs.begin() + cj);
    rels = std::move(next);
  }
  std::vector<FreeElement> nonzero;
  for (auto& r : rels)
    if (!r.is_zero()) nonzero.push_back(std::move(r));
  return GradedModulePresentation(R, FreeModule{std::move(degs)}, std::move(nonzero));
}

}  // namespace serreq
