#include "serreq/counterexamples.hpp"

#include <algorithm>
#include <functional>

namespace serreq {

namespace {

bool is_square(const Mat& m) {
  return m.empty() || m.size() == m[0].size();
}

Mat scale_add(const PrimeField& k, const Mat& acc, Fp c, const Mat& m) {
  Mat out = acc;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j)
      out[i][j] = k.add(out[i][j], k.mul(c, m[i][j]));
  return out;
}

Mat zero_matrix(std::size_t rows, std::size_t cols) {
  return Mat(rows, Vec(cols, 0));
}

bool is_equivariant(const PrimeField& k, const Mat& f, const FiniteRep& rho,
                    const FiniteRep& rho2) {
  return mat_mul(k, f, rho.generator) == mat_mul(k, rho2.generator, f);
}

/// Calls fn on every element of the span of basis; stops early when fn
/// returns true.  Throws when the span is too large to enumerate.
bool for_each_in_span(const PrimeField& k, const std::vector<Mat>& basis,
                      std::size_t rows, std::size_t cols,
                      const std::function<bool(const Mat&)>& fn) {
  double size = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) size *= k.characteristic();
  if (size > 2e6) throw Error("hom-space span too large to enumerate");
  std::vector<Fp> coeffs(basis.size(), 0);
  while (true) {
    Mat m = zero_matrix(rows, cols);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (coeffs[i] != 0) m = scale_add(k, m, coeffs[i], basis[i]);
    if (fn(m)) return true;
    std::size_t pos = 0;
    while (pos < coeffs.size() && coeffs[pos] + 1 == k.characteristic())
      coeffs[pos++] = 0;
    if (pos == coeffs.size()) return false;
    ++coeffs[pos];
  }
}

}  // namespace

FiniteRep make_cyclic_rep(const PrimeField& k, int order, Mat generator) {
  if (order <= 0) throw Error("make_cyclic_rep: order must be positive");
  if (!is_square(generator)) throw Error("make_cyclic_rep: generator must be square");
  Mat power = identity_matrix(k, static_cast<int>(generator.size()));
  for (int i = 0; i < order; ++i) power = mat_mul(k, power, generator);
  if (!mat_is_identity(power))
    throw Error("make_cyclic_rep: generator does not satisfy g^m = 1");
  return FiniteRep{k, order, std::move(generator)};
}

FiniteRep trivial_rep(const PrimeField& k, int order, int dim) {
  return make_cyclic_rep(k, order, identity_matrix(k, dim));
}

FiniteRep sign_rep(const PrimeField& k) {
  if (k.characteristic() == 2) throw Error("sign_rep: needs odd characteristic");
  return make_cyclic_rep(k, 2, Mat{{k.neg(1)}});
}

FiniteRep regular_rep(const PrimeField& k, int order) {
  Mat g = zero_matrix(order, order);
  for (int j = 0; j < order; ++j) g[(j + 1) % order][j] = 1;
  return make_cyclic_rep(k, order, std::move(g));
}

std::vector<Mat> equivariant_hom_basis(const FiniteRep& rho, const FiniteRep& rho2) {
  if (!(rho.field == rho2.field) || rho.group_order != rho2.group_order)
    throw GroupMismatch("equivariant_hom_basis: representations of different groups");
  const PrimeField& k = rho.field;
  int d = rho.dimension(), d2 = rho2.dimension();
  // unknowns f_{a,c} with f: k^d -> k^{d2}, row a in [0,d2), column c in [0,d)
  int ncols = d2 * d;
  Mat sys;
  for (int a = 0; a < d2; ++a)
    for (int b = 0; b < d; ++b) {
      Vec row(ncols, 0);
      for (int c = 0; c < d; ++c)
        row[a * d + c] = k.add(row[a * d + c], rho.generator[c][b]);
      for (int c = 0; c < d2; ++c)
        row[c * d + b] = k.sub(row[c * d + b], rho2.generator[a][c]);
      sys.push_back(std::move(row));
    }
  std::vector<Mat> basis;
  for (const Vec& v : nullspace(k, sys, ncols)) {
    Mat f = zero_matrix(d2, d);
    for (int a = 0; a < d2; ++a)
      for (int c = 0; c < d; ++c) f[a][c] = v[a * d + c];
    basis.push_back(std::move(f));
  }
  return basis;
}

NotFullWitness check_not_full(const FiniteRep& rho, const FiniteRep& rho2) {
  if (rho.dimension() != rho2.dimension())
    throw Error("check_not_full: representations must have equal dimension");
  const PrimeField& k = rho.field;
  std::vector<Mat> basis = equivariant_hom_basis(rho, rho2);
  bool equivalent = for_each_in_span(
      k, basis, rho2.dimension(), rho.dimension(),
      [&](const Mat& f) { return mat_inverse(k, f).has_value(); });
  if (equivalent)
    throw RepsEquivalent("check_not_full: an equivariant isomorphism exists");
  // no span element is invertible, so the identity map of the underlying
  // space is outside the image of the forgetful functor on this hom set
  NotFullWitness w;
  w.hom_basis = std::move(basis);
  w.explanation =
      "identity matrix is invertible but no equivariant map between these "
      "representations is; fullness fails on this hom set";
  return w;
}

bool reflects_isos_check(const FiniteRep& rho, const FiniteRep& rho2) {
  const PrimeField& k = rho.field;
  std::vector<Mat> basis = equivariant_hom_basis(rho, rho2);
  bool bad = for_each_in_span(
      k, basis, rho2.dimension(), rho.dimension(), [&](const Mat& f) {
        auto inv = mat_inverse(k, f);
        if (!inv) return false;
        return !is_equivariant(k, *inv, rho2, rho);
      });
  return !bad;
}

FiniteCategory::FiniteCategory(PrimeField field, std::vector<int> object_dims)
    : field_(field), object_dims_(std::move(object_dims)) {
  for (int i = 0; i < object_count(); ++i)
    add_morphism(i, i, identity_matrix(field_, object_dims_[i]));
}

void FiniteCategory::add_morphism(int src, int dst, const Mat& m) {
  if (src < 0 || src >= object_count() || dst < 0 || dst >= object_count())
    throw Error("add_morphism: object index out of range");
  std::size_t rows = static_cast<std::size_t>(object_dims_[dst]);
  std::size_t cols = static_cast<std::size_t>(object_dims_[src]);
  if (m.size() != rows || (rows > 0 && m[0].size() != cols))
    throw Error("add_morphism: matrix shape does not match objects");
  auto& hs = homs_[{src, dst}];
  if (std::find(hs.begin(), hs.end(), m) == hs.end()) hs.push_back(m);
}

const std::vector<Mat>& FiniteCategory::hom_set(int src, int dst) const {
  static const std::vector<Mat> empty;
  auto it = homs_.find({src, dst});
  return it == homs_.end() ? empty : it->second;
}

bool FiniteCategory::has_morphism(int src, int dst, const Mat& m) const {
  const auto& hs = hom_set(src, dst);
  return std::find(hs.begin(), hs.end(), m) != hs.end();
}

void FiniteCategory::close_under_composition() {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < object_count(); ++a)
      for (int b = 0; b < object_count(); ++b)
        for (int c = 0; c < object_count(); ++c) {
          std::vector<Mat> first = hom_set(a, b);
          std::vector<Mat> second = hom_set(b, c);
          for (const Mat& f : first)
            for (const Mat& g : second) {
              Mat gf = mat_mul(field_, g, f);
              if (!has_morphism(a, c, gf)) {
                add_morphism(a, c, gf);
                changed = true;
              }
            }
        }
  }
}

bool FiniteCategory::is_closed() const {
  FiniteCategory copy = *this;
  copy.close_under_composition();
  return same_morphism_sets(copy);
}

bool FiniteCategory::same_morphism_sets(const FiniteCategory& o) const {
  if (!(field_ == o.field_) || object_dims_ != o.object_dims_) return false;
  for (int a = 0; a < object_count(); ++a)
    for (int b = 0; b < object_count(); ++b) {
      std::vector<Mat> mine = hom_set(a, b);
      std::vector<Mat> theirs = o.hom_set(a, b);
      std::sort(mine.begin(), mine.end());
      std::sort(theirs.begin(), theirs.end());
      if (mine != theirs) return false;
    }
  return true;
}

FiniteCategory conimg_closure(const std::vector<CatMorphism>& gens,
                              const FiniteCategory& cat) {
  std::vector<int> dims;
  for (int i = 0; i < cat.object_count(); ++i) dims.push_back(cat.object_dim(i));
  FiniteCategory sub(cat.field(), dims);
  for (const auto& g : gens) {
    if (!cat.has_morphism(g.src, g.dst, g.matrix))
      throw Error("conimg_closure: generator is not a morphism of the category");
    sub.add_morphism(g.src, g.dst, g.matrix);
  }
  bool changed = true;
  while (changed) {
    sub.close_under_composition();
    changed = false;
    for (int a = 0; a < sub.object_count(); ++a)
      for (int b = 0; b < sub.object_count(); ++b) {
        std::vector<Mat> hs = sub.hom_set(a, b);
        for (const Mat& f : hs) {
          auto inv = mat_inverse(cat.field(), f);
          if (!inv) continue;
          // inverse must itself be an isomorphism of the ambient category
          if (!cat.has_morphism(b, a, *inv)) continue;
          if (!sub.has_morphism(b, a, *inv)) {
            sub.add_morphism(b, a, *inv);
            changed = true;
          }
        }
      }
  }
  return sub;
}

bool conimg_factorization_check(const std::vector<CatMorphism>& g_gens,
                                const std::vector<CatMorphism>& q_gens,
                                const std::vector<CatMorphism>& h_gens,
                                const FiniteCategory& intermediate,
                                const FiniteCategory& target) {
  FiniteCategory q_closure = conimg_closure(q_gens, intermediate);
  if (!q_closure.same_morphism_sets(intermediate))
    throw HypothesisViolation(
        "conimg_factorization_check: Q is not conservatively surjective");
  FiniteCategory g_closure = conimg_closure(g_gens, target);
  FiniteCategory h_closure = conimg_closure(h_gens, target);
  return g_closure.same_morphism_sets(h_closure);
}

}  // namespace serreq
