#pragma once

#include "supercohom/superalg.hpp"

namespace supercohom {

// L_{n,m}: basis X1..Xn | Y1..Ym with [X1,Xi] = X{i+1} (2 <= i <= n-1) and
// [X1,Yj] = Y{j+1} (1 <= j <= m-1). No p-map.
AlgebraPtr model_filiform(const PrimeField& field, std::size_t n, std::size_t m);

// L_{p,p} with X_k^[p] = lambda_k X_p; lambda must have length p.
AlgebraPtr restricted_model_filiform(const PrimeField& field, const Vec& lambda);

// Closed form (sum a_k X_k)^[p] = (sum a_k^p lambda_k) X_p.
Vec filiform_p_power_closed_form(const SuperAlgebra& L, const Vec& lambda, const Vec& x);

}  // namespace supercohom
