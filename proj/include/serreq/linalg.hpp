#pragma once
#include <optional>
#include <vector>

#include "serreq/ring.hpp"

namespace serreq {

using Vec = std::vector<Fp>;
using Mat = std::vector<Vec>;  // row major

Mat identity_matrix(const PrimeField& k, int n);
Mat mat_mul(const PrimeField& k, const Mat& a, const Mat& b);
bool mat_is_identity(const Mat& m);

/// In-place reduced row echelon form; returns pivot column per pivot row.
std::vector<int> rref(const PrimeField& k, Mat& m);

/// Basis of the right nullspace of m (ncols is needed since m may have no rows).
std::vector<Vec> nullspace(const PrimeField& k, const Mat& m, int ncols);

/// One solution of m x = rhs, or nullopt if inconsistent.
std::optional<Vec> solve(const PrimeField& k, Mat m, Vec rhs);

/// Matrix inverse, or nullopt if singular.
std::optional<Mat> mat_inverse(const PrimeField& k, const Mat& m);

long rank(const PrimeField& k, Mat m);

}  // namespace serreq
