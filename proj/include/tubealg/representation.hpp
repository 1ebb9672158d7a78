#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "tubealg/check.hpp"
#include "tubealg/monomial.hpp"
#include "tubealg/tube.hpp"

namespace tubealg {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using SMatrix = Eigen::SparseMatrix<Complex>;

// One matrix per basis index of the algebra it represents.
struct Representation {
    std::size_t dimension = 0;
    std::vector<SMatrix> matrices;
};

// Spectral splitting could not separate blocks at the tolerance.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr double default_tolerance = 1e-9;

Complex to_complex(const Phase& p);

// Left multiplication on the algebra itself.
Representation regular_representation(const MonomialAlgebra& alg);

// Multiplicativity on every basis pair (zero when not composable),
// pi(x^#) = pi(x)^dagger, and the object identities summing to 1.
CheckResult check_representation(const MonomialAlgebra& alg, const Representation& rep,
                                 double tol = default_tolerance);

// V^dagger pi V for V with orthonormal columns.
Representation compress(const Representation& rep, const CMatrix& v);
Representation direct_sum(const Representation& a, const Representation& b);
// Traces per basis index.
std::vector<Complex> character(const Representation& rep);
bool characters_equal(const std::vector<Complex>& a, const std::vector<Complex>& b,
                      double tol = default_tolerance);

struct IrreducibleBlock {
    std::size_t dimension = 0;
    std::size_t multiplicity = 0;
    Representation rep;  // one copy
    std::vector<Complex> character;
};

struct Decomposition {
    std::vector<IrreducibleBlock> blocks;
    std::uint64_t seed = 0;     // seed of the attempt that succeeded
    std::size_t attempts = 0;
};

// Splits rep by the spectrum of Y = sum_b pi(b) X pi(b)^dagger for a random
// Hermitian X; Y commutes with the image because the basis is orthonormal
// for the trace. Each cluster is checked for invariance and irreducibility
// (a second random commutant element must act as a scalar on it); on failure
// the split is retried with the next seed. Throws NumericalError after
// max_attempts.
Decomposition decompose(const MonomialAlgebra& alg, const Representation& rep, std::uint64_t seed = 0,
                        double tol = default_tolerance, std::size_t max_attempts = 8);

// Pi(Phi^-1(E_{i,j} (x) [s])) = E_{i,j} (x) pi(s) for the block of class c;
// pi represents the twisted algebra of that block (basis = positions in G_C).
Representation induce(const TubeLikeAlgebra& alg, const BlockPresentation& bp, std::size_t c,
                      const Representation& pi);

// pi(s) = Pi(Phi^-1(E_{b,b} (x) [s])) on the range of Pi at the base projection
// of class c, b the base object.
Representation restrict_to_class(const TubeLikeAlgebra& alg, const BlockPresentation& bp, std::size_t c,
                                 const Representation& big, double tol = default_tolerance);

// For each class, the subrepresentation generated by the range of the base
// projection. The parts are mutually orthogonal and span the whole space.
struct SupportPart {
    std::size_t cls = 0;
    CMatrix basis;  // orthonormal columns
    Representation rep;
};
struct SupportDecomposition {
    std::vector<SupportPart> parts;  // one per class, possibly zero-dimensional
    CheckResult check;               // orthogonality and completeness
};
SupportDecomposition support_decompose(const TubeLikeAlgebra& alg, const BlockPresentation& bp,
                                       const Representation& big, double tol = default_tolerance);

// Orthonormal basis of the column span, rank decided at tol.
CMatrix orthonormal_span(const CMatrix& m, double tol = default_tolerance);

}  // namespace tubealg
