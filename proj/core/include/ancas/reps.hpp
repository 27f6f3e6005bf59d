#ifndef ANCAS_REPS_HPP
#define ANCAS_REPS_HPP

#include <vector>

#include "ancas/orbit_char.hpp"

namespace ancas {

/// Centered Euclidean pairing on coordinate tuples:
/// <a,b> = sum a_I b_I - (sum a)(sum b)/(N+1). Symmetric, positive
/// semi-definite, vanishes on uniform tuples; roots have squared length 2.
Rat weight_inner_product(std::span<const int> a, std::span<const int> b);

/// Dimension of the irreducible representation with highest weight w,
/// computed as the product over i < j of (t_i - t_j)/(j - i) with t the
/// rho-shifted coordinate tuple. Integer-valued; cross-checked elsewhere
/// against the sum of multiplicity-weighted orbit sizes.
Int weyl_dim(const LambdaWeight& w);

/// Decomposition of an irreducible representation into Weyl orbits with
/// multiplicities; the highest weight itself carries multiplicity 1.
struct OrbitalDecomposition {
  struct Entry {
    LambdaWeight weight;  // dominant
    MuTuple tuple;        // canonical sorted representative
    Int multiplicity;
  };
  LambdaWeight highest;
  std::vector<Entry> entries;  // deterministic order, highest first
};

/// Inner multiplicities of all dominant subweights via the standard
/// multiplicity recursion, exact integer arithmetic throughout.
std::vector<OrbitalDecomposition::Entry> freudenthal(const LambdaWeight& w);

OrbitalDecomposition orbital_decomposition(const LambdaWeight& w);

/// Representation-level power-sum character: multiplicity-weighted sum of
/// orbital characters over the decomposition.
SymExpr ch_rep(const LambdaWeight& w, int s, int jobs = 1);

CofVector cof_rep(const LambdaWeight& w, int s, int jobs = 1);

} // namespace ancas

#endif
