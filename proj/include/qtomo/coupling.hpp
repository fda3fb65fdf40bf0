#pragma once

#include <utility>
#include <vector>

namespace qtomo {

// Clebsch-Gordan coefficient <j1 m1 j2 m2 | J M> for integer angular momenta,
// Condon-Shortley phase convention. Zero when M != m1+m2 or the triangle rule
// fails. Evaluated from the Racah closed form with extended-precision
// factorial tables; accurate to ~1e-13 relative for j <= 50.
double clebsch_gordan(int j1, int m1, int j2, int m2, int J, int M);

// Coefficient C in the product expansion of normalized associated Legendre
// functions,
//   Pt_J1^m1 Pt_J2^m2 = sum_L C(L) Pt_L^{m1+m2},
// equivalently C = int Pt_L^{m1+m2} Pt_J1^m1 Pt_J2^m2 sin(theta) dtheta.
// In terms of Clebsch-Gordan coefficients:
//   C = sqrt((2J1+1)(2J2+1) / (2 (2L+1))) <J1 0 J2 0|L 0> <J1 m1 J2 m2|L M>.
double product_coefficient(int J1, int m1, int J2, int m2, int L);

// Full expansion over L = max(|J1-J2|, |m1+m2|) .. J1+J2 (parity-forbidden L
// carry exact zeros). Returned as (L, C) pairs in ascending L.
std::vector<std::pair<int, double>> product_expansion(int J1, int m1, int J2,
                                                      int m2);

// <J1 m|cos^2(theta)|J2 m> in the |J m> basis; nonzero only for |J1-J2| in
// {0, 2}. Closed form via the L=2 reduced matrix element.
double cos2theta_element(int J1, int J2, int m);

}  // namespace qtomo
