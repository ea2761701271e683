#pragma once
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "serreq/linalg.hpp"

namespace serreq {

/// Representation of the cyclic group C_m over a prime field: the image of
/// a fixed generator, an invertible matrix g with g^m = 1.
struct FiniteRep {
  PrimeField field;
  int group_order;
  Mat generator;

  int dimension() const { return static_cast<int>(generator.size()); }
};

/// Validates invertibility and the relation g^m = 1.
FiniteRep make_cyclic_rep(const PrimeField& k, int order, Mat generator);

FiniteRep trivial_rep(const PrimeField& k, int order, int dim);
/// One-dimensional rep of C_2 sending the generator to -1.
FiniteRep sign_rep(const PrimeField& k);
/// Regular representation of C_m (permutation matrices of the cycle).
FiniteRep regular_rep(const PrimeField& k, int order);

/// Basis of { f : f * rho(g) = rho'(g) * f }.
std::vector<Mat> equivariant_hom_basis(const FiniteRep& rho, const FiniteRep& rho2);

struct NotFullWitness {
  std::vector<Mat> hom_basis;
  // coefficients showing the identity/span system is inconsistent are not
  // needed: inconsistency itself is the certificate
  std::string explanation;
};

/// Shows the forgetful functor is not full: the identity matrix is a
/// B-morphism between the underlying spaces but not in the equivariant span.
NotFullWitness check_not_full(const FiniteRep& rho, const FiniteRep& rho2);

/// Every invertible map in the equivariant span has an equivariant inverse.
bool reflects_isos_check(const FiniteRep& rho, const FiniteRep& rho2);

/// Small category with explicitly enumerated hom sets of matrices.
/// Objects are indexed 0..n-1 with a linear-algebra dimension each.
class FiniteCategory {
 public:
  FiniteCategory(PrimeField field, std::vector<int> object_dims);

  const PrimeField& field() const { return field_; }
  int object_count() const { return static_cast<int>(object_dims_.size()); }
  int object_dim(int i) const { return object_dims_[i]; }

  void add_morphism(int src, int dst, const Mat& m);
  const std::vector<Mat>& hom_set(int src, int dst) const;
  bool has_morphism(int src, int dst, const Mat& m) const;

  /// Closes the current hom sets under composition; throws Error if a
  /// composite escapes no-where (it cannot: matrix product is total).
  void close_under_composition();
  bool is_closed() const;

  bool same_morphism_sets(const FiniteCategory& o) const;

 private:
  PrimeField field_;
  std::vector<int> object_dims_;
  std::map<std::pair<int, int>, std::vector<Mat>> homs_;
};

struct CatMorphism {
  int src;
  int dst;
  Mat matrix;
};

/// Smallest subcategory of cat containing gens, the identities, and the
/// inverses of those gens-closure members that are invertible in cat.
FiniteCategory conimg_closure(const std::vector<CatMorphism>& gens,
                              const FiniteCategory& cat);

/// Functor between finite categories given on generators: an object map and
/// a matrix map for each generating morphism.
struct FCFunctor {
  std::vector<int> object_map;
  std::vector<std::pair<CatMorphism, CatMorphism>> gen_images;  // (src mor, image)
};

/// Given G = H o Q on generators, with Q conservatively surjective
/// (its conimg closure is all of the intermediate category), verifies
/// conimg(G) = conimg(H).  Throws HypothesisViolation when the Q closure
/// misses part of the intermediate category.
bool conimg_factorization_check(const std::vector<CatMorphism>& g_gens,
                                const std::vector<CatMorphism>& q_gens,
                                const std::vector<CatMorphism>& h_gens,
                                const FiniteCategory& intermediate,
                                const FiniteCategory& target);

}  // namespace serreq
