#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "tubealg/annular.hpp"
#include "tubealg/representation.hpp"

namespace tubealg {

// End(X_g) inside the weight-g corner of the annular algebra:
//   [h] -> sum_p c(h,p) A(p, g, h^-1, h.p, g),   h.p = h p g h^-1 g^-1,
// with phases c solved so that the map is a *-homomorphism from the
// psi-twisted group algebra of H^g.
struct XgEmbedding {
    Elem g = 0;
    std::vector<Elem> elements;              // H^g, twisted-algebra basis order
    std::vector<std::vector<Term>> images;   // per element, annular terms
    CheckResult check;                       // multiplicativity and star, exhaustive
};
// Throws InputError when psi is not a 2-cocycle (omega not gauge fixed) or
// no phase solution exists.
XgEmbedding end_xg_embedding(const AnnularAlgebra& alg, Elem g);

struct CutdownProjection {
    Elem g = 0;
    std::size_t irrep = 0;      // block index in the decomposition of End(X_g)
    std::size_t dimension = 0;  // irrep dimension
    Eigen::VectorXcd element;   // coordinates in the annular basis
};

struct CutdownResult {
    std::vector<Elem> representatives;  // H\G/H
    std::vector<CutdownProjection> projections;
    // table[j][i] = dim p_j A p_i
    std::vector<std::vector<std::size_t>> dimension_table;
    std::size_t corner_dimension = 0;
    std::size_t corner_simple_count = 0;   // numeric center dimension of P A P
    std::size_t annular_simple_count = 0;  // exact, from the class twists
    std::uint64_t seed = 0;
    CheckResult check;  // projections, embeddings and table consistency
    // When every End(X_g) is one-dimensional the cut-down is a sum of
    // object identities and is kept exactly.
    std::shared_ptr<CornerAlgebra> exact_corner;
};

// Needs the gauge-fixed cocycle (see gauge_fix_bh).
CutdownResult tube_cutdown(const BHSetup& setup, std::uint64_t seed = 0, double tol = default_tolerance);

}  // namespace tubealg
