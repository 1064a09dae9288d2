#pragma once

#include <cstdint>

#include "gwpt/degeneration.hpp"
#include "gwpt/ktilde.hpp"
#include "gwpt/transition.hpp"

namespace gwpt {

// tau_1(H) for the conifold toy; restricts to zero on the quadric and on Etilde.
Insertion toy_divisor_insertion();

// Resolved conifold toy with one node. Y has classes a h' + j C, X = Y / C, and the
// Ytilde/E tables at phi^!(a h' + j C) are
//   PT: (-1)^a q^a ((j+1) Z^a + j Z^(a+1)),  Z = q/(1+q)^2
//   GW: (-1)^a u^(-2a) ((j+1) G^a + j G^(a+1)),  G = 1/(4 sin^2(u/2))
// (times a(1-q)/(1+q), resp. its value at q = -e^{iu}, under tau_1(H)), so the
// correspondence holds class by class.
ConifoldTransition make_conifold_toy(const Orders& o = {64, 10, 4});

// Same geometry, Ytilde/E tables replaced by random q- and u-polynomials.
ConifoldTransition make_conifold_toy_random(const Orders& o, std::uint32_t seed);

// Two components M_0 (rank 2) and M_1 (rank 1) glued along a surface with basis
// {1, H, pt}; random tables for every key below the degree bound, insertions
// tau_0(H) and tau_1(pt).
DegenerationScenario make_synthetic_degeneration(const Orders& o, std::uint32_t seed);

// Diagonal entries (a),(a) = (iu)^(1-a); the other entries of non-negative degree get
// random homogeneous polynomials in c1, c2, c3.
KtildeTable make_synthetic_ktilde(int max_size, std::uint32_t seed, int u_order = 6);

} // namespace gwpt
