#include "tubealg/representation.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace tubealg {

namespace {

std::int64_t w(std::size_t v) { return static_cast<std::int64_t>(v); }

// Residual checks on computed eigenvectors are looser than the clustering
// tolerance: rounding in the eigensolver is amplified by the spectral gap.
constexpr double residual_tolerance = 1e-6;

double norm(const SMatrix& m) { return m.norm(); }

SMatrix identity_matrix(std::size_t d) {
    SMatrix id(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    id.setIdentity();
    return id;
}

CMatrix random_hermitian(std::size_t d, std::mt19937_64& rng) {
    std::normal_distribution<double> nd;
    CMatrix x(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index j = 0; j < x.cols(); ++j) x(i, j) = Complex(nd(rng), nd(rng));
    return (x + x.adjoint()) / 2.0;
}

// sum_b pi(b) X pi(b)^dagger
CMatrix average(const Representation& rep, const std::vector<SMatrix>& adjoints, const CMatrix& x) {
    const auto d = static_cast<Eigen::Index>(rep.dimension);
    CMatrix y = CMatrix::Zero(d, d);
    for (std::size_t b = 0; b < rep.matrices.size(); ++b) {
        if (rep.matrices[b].nonZeros() == 0) continue;
        const CMatrix t = rep.matrices[b] * x;
        y += t * adjoints[b];
    }
    return (y + y.adjoint()) / 2.0;
}

std::size_t position_in(const std::vector<std::size_t>& v, std::size_t x) {
    return static_cast<std::size_t>(std::find(v.begin(), v.end(), x) - v.begin());
}

struct Attempt {
    bool ok = false;
    std::string failure;
    std::vector<IrreducibleBlock> blocks;
};

Attempt try_decompose(const Representation& rep, std::uint64_t seed, double tol) {
    Attempt out;
    const std::size_t d = rep.dimension;
    std::vector<SMatrix> adj;
    adj.reserve(rep.matrices.size());
    for (const auto& m : rep.matrices) adj.push_back(m.adjoint());

    std::mt19937_64 rng(seed);
    const CMatrix y = average(rep, adj, random_hermitian(d, rng));
    const CMatrix y2 = average(rep, adj, random_hermitian(d, rng));
    Eigen::SelfAdjointEigenSolver<CMatrix> es(y);
    if (es.info() != Eigen::Success) {
        out.failure = "eigensolver";
        return out;
    }
    const auto& ev = es.eigenvalues();
    const double scale = std::max(ev.cwiseAbs().maxCoeff(), 1e-300);
    const double scale2 = std::max(y2.norm(), 1e-300);

    std::vector<std::pair<Eigen::Index, Eigen::Index>> clusters;  // [begin, end)
    Eigen::Index start = 0;
    for (Eigen::Index i = 1; i <= ev.size(); ++i)
        if (i == ev.size() || ev(i) - ev(i - 1) > tol * scale) {
            clusters.emplace_back(start, i);
            start = i;
        }

    std::vector<Representation> parts;
    std::vector<std::vector<Complex>> chars;
    for (const auto& [b, e] : clusters) {
        const CMatrix v = es.eigenvectors().middleCols(b, e - b);
        for (std::size_t k = 0; k < rep.matrices.size(); ++k) {
            const CMatrix pv = rep.matrices[k] * v;
            const CMatrix res = pv - v * (v.adjoint() * pv);
            if (res.norm() > residual_tolerance) {
                out.failure = "cluster not invariant";
                return out;
            }
        }
        const CMatrix m = v.adjoint() * y2 * v;
        const Complex mean = m.trace() / static_cast<double>(m.rows());
        const CMatrix dev = m - mean * CMatrix::Identity(m.rows(), m.cols());
        if (dev.norm() > residual_tolerance * scale2) {
            out.failure = "cluster not irreducible";
            return out;
        }
        parts.push_back(compress(rep, v));
        chars.push_back(character(parts.back()));
    }

    for (std::size_t k = 0; k < parts.size(); ++k) {
        auto it = std::find_if(out.blocks.begin(), out.blocks.end(), [&](const IrreducibleBlock& blk) {
            return blk.dimension == parts[k].dimension &&
                   characters_equal(blk.character, chars[k], residual_tolerance);
        });
        if (it != out.blocks.end()) {
            ++it->multiplicity;
            continue;
        }
        out.blocks.push_back({parts[k].dimension, 1, parts[k], chars[k]});
    }
    out.ok = true;
    return out;
}

}  // namespace

Complex to_complex(const Phase& p) { return p.to_complex(); }

Representation regular_representation(const MonomialAlgebra& alg) {
    const std::size_t d = alg.dimension();
    const MorphismIndex idx(alg);
    Representation rep;
    rep.dimension = d;
    rep.matrices.reserve(d);
    for (std::size_t b = 0; b < d; ++b) {
        std::vector<Eigen::Triplet<Complex>> trip;
        for (std::size_t a : idx.into(alg.source(b))) {
            const Term t = alg.compose(b, a);
            trip.emplace_back(static_cast<int>(t.index), static_cast<int>(a), to_complex(t.coeff));
        }
        SMatrix m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
        m.setFromTriplets(trip.begin(), trip.end());
        rep.matrices.push_back(std::move(m));
    }
    return rep;
}

CheckResult check_representation(const MonomialAlgebra& alg, const Representation& rep, double tol) {
    const std::size_t n = alg.dimension();
    if (rep.matrices.size() != n) return CheckResult::fail("shape", {w(rep.matrices.size()), w(n)});
    const auto d = static_cast<Eigen::Index>(rep.dimension);
    for (std::size_t i = 0; i < n; ++i)
        if (rep.matrices[i].rows() != d || rep.matrices[i].cols() != d) return CheckResult::fail("shape", {w(i)});
    const double t = tol * std::max(1.0, std::sqrt(static_cast<double>(rep.dimension)));
    std::size_t cases = 0;
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t a = 0; a < n; ++a) {
            ++cases;
            const SMatrix prod = rep.matrices[b] * rep.matrices[a];
            const auto p = alg.product(b, a);
            if (!p) {
                if (norm(prod) > t) return CheckResult::fail("multiplicativity", {w(b), w(a)}, "expected zero");
                continue;
            }
            const SMatrix diff = prod - to_complex(p->coeff) * rep.matrices[p->index];
            if (norm(diff) > t) return CheckResult::fail("multiplicativity", {w(b), w(a)});
        }
    for (std::size_t b = 0; b < n; ++b) {
        const Term s = alg.star(b);
        const SMatrix diff = to_complex(s.coeff) * rep.matrices[s.index] - SMatrix(rep.matrices[b].adjoint());
        if (norm(diff) > t) return CheckResult::fail("star", {w(b)});
    }
    SMatrix unit(d, d);
    for (std::size_t o = 0; o < alg.object_count(); ++o) unit += rep.matrices[alg.identity(o)];
    if (norm(unit - identity_matrix(rep.dimension)) > t) return CheckResult::fail("unit", {});
    return CheckResult::pass(cases);
}

Representation compress(const Representation& rep, const CMatrix& v) {
    Representation out;
    out.dimension = static_cast<std::size_t>(v.cols());
    out.matrices.reserve(rep.matrices.size());
    for (const auto& m : rep.matrices) {
        const CMatrix c = v.adjoint() * (m * v);
        out.matrices.push_back(c.sparseView());
    }
    return out;
}

Representation direct_sum(const Representation& a, const Representation& b) {
    if (a.matrices.size() != b.matrices.size()) throw InputError("direct sum of different algebras");
    Representation out;
    out.dimension = a.dimension + b.dimension;
    const auto shift = static_cast<int>(a.dimension);
    for (std::size_t i = 0; i < a.matrices.size(); ++i) {
        std::vector<Eigen::Triplet<Complex>> trip;
        for (int k = 0; k < a.matrices[i].outerSize(); ++k)
            for (SMatrix::InnerIterator it(a.matrices[i], k); it; ++it)
                trip.emplace_back(static_cast<int>(it.row()), static_cast<int>(it.col()), it.value());
        for (int k = 0; k < b.matrices[i].outerSize(); ++k)
            for (SMatrix::InnerIterator it(b.matrices[i], k); it; ++it)
                trip.emplace_back(static_cast<int>(it.row()) + shift, static_cast<int>(it.col()) + shift, it.value());
        SMatrix m(static_cast<Eigen::Index>(out.dimension), static_cast<Eigen::Index>(out.dimension));
        m.setFromTriplets(trip.begin(), trip.end());
        out.matrices.push_back(std::move(m));
    }
    return out;
}

std::vector<Complex> character(const Representation& rep) {
    std::vector<Complex> out;
    out.reserve(rep.matrices.size());
    for (const auto& m : rep.matrices) {
        Complex tr = 0;
        for (int k = 0; k < m.outerSize(); ++k)
            for (SMatrix::InnerIterator it(m, k); it; ++it)
                if (it.row() == it.col()) tr += it.value();
        out.push_back(tr);
    }
    return out;
}

bool characters_equal(const std::vector<Complex>& a, const std::vector<Complex>& b, double tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}

Decomposition decompose(const MonomialAlgebra& alg, const Representation& rep, std::uint64_t seed, double tol,
                        std::size_t max_attempts) {
    if (rep.matrices.size() != alg.dimension()) throw InputError("representation does not match the algebra");
    Decomposition out;
    if (rep.dimension == 0) {
        out.seed = seed;
        return out;
    }
    std::string last;
    for (std::size_t k = 0; k < max_attempts; ++k) {
        auto a = try_decompose(rep, seed + k, tol);
        if (a.ok) {
            out.blocks = std::move(a.blocks);
            out.seed = seed + k;
            out.attempts = k + 1;
            return out;
        }
        last = a.failure;
    }
    throw NumericalError("spectral splitting failed after " + std::to_string(max_attempts) + " attempts: " + last);
}

Representation induce(const TubeLikeAlgebra& alg, const BlockPresentation& bp, std::size_t c,
                      const Representation& pi) {
    const auto& blk = bp.blocks->blocks().at(c);
    if (pi.matrices.size() != blk.twist.size())
        throw InputError("representation does not match the class algebra", {w(c), w(pi.matrices.size())});
    const std::size_t m = blk.objects.size(), k = pi.dimension;
    Representation out;
    out.dimension = m * k;
    out.matrices.reserve(alg.dimension());
    for (std::size_t i = 0; i < alg.dimension(); ++i) {
        SMatrix mat(static_cast<Eigen::Index>(m * k), static_cast<Eigen::Index>(m * k));
        const Term t = bp.phi.image[i];
        const auto co = bp.blocks->coord(t.index);
        if (co.block == c) {
            const Complex z = to_complex(t.coeff);
            const auto& p = pi.matrices[blk.twist.position(co.element)];
            std::vector<Eigen::Triplet<Complex>> trip;
            for (int kk = 0; kk < p.outerSize(); ++kk)
                for (SMatrix::InnerIterator it(p, kk); it; ++it)
                    trip.emplace_back(static_cast<int>(co.row * k) + static_cast<int>(it.row()),
                                      static_cast<int>(co.col * k) + static_cast<int>(it.col()), z * it.value());
            mat.setFromTriplets(trip.begin(), trip.end());
        }
        out.matrices.push_back(std::move(mat));
    }
    return out;
}

CMatrix orthonormal_span(const CMatrix& m, double tol) {
    std::vector<Eigen::VectorXcd> basis;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        Eigen::VectorXcd v = m.col(j);
        const double n0 = v.norm();
        if (n0 == 0.0) continue;
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& q : basis) v -= q * q.dot(v);
        const double n1 = v.norm();
        if (n1 <= tol * std::max(1.0, n0)) continue;
        basis.push_back(v / n1);
    }
    CMatrix out(m.rows(), static_cast<Eigen::Index>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j) out.col(static_cast<Eigen::Index>(j)) = basis[j];
    return out;
}

Representation restrict_to_class(const TubeLikeAlgebra& alg, const BlockPresentation& bp, std::size_t c,
                                 const Representation& big, double tol) {
    if (big.matrices.size() != alg.dimension()) throw InputError("representation does not match the algebra");
    const auto& blk = bp.blocks->blocks().at(c);
    const CMatrix p = CMatrix(big.matrices[bp.base_projection.at(c)]);
    const CMatrix v = orthonormal_span(p, tol);
    const std::size_t pos = position_in(blk.objects, bp.base_object[c]);
    Representation out;
    out.dimension = static_cast<std::size_t>(v.cols());
    for (Elem s : blk.twist.elements()) {
        const Term inv = bp.phi_inverse.image[bp.blocks->index(c, pos, pos, s)];
        const CMatrix m = to_complex(inv.coeff) * (v.adjoint() * (big.matrices[inv.index] * v));
        out.matrices.push_back(m.sparseView());
    }
    return out;
}

SupportDecomposition support_decompose(const TubeLikeAlgebra& alg, const BlockPresentation& bp,
                                       const Representation& big, double tol) {
    if (big.matrices.size() != alg.dimension()) throw InputError("representation does not match the algebra");
    SupportDecomposition out;
    const auto d = static_cast<Eigen::Index>(big.dimension);
    const MorphismIndex idx(alg);
    std::size_t total = 0;
    for (std::size_t c = 0; c < bp.classes.class_count(); ++c) {
        SupportPart part;
        part.cls = c;
        const CMatrix p = CMatrix(big.matrices[bp.base_projection[c]]);
        const auto& from = idx.from(bp.base_object[c]);
        CMatrix gens(d, d * static_cast<Eigen::Index>(from.size()));
        for (std::size_t k = 0; k < from.size(); ++k)
            gens.middleCols(static_cast<Eigen::Index>(k) * d, d) = big.matrices[from[k]] * p;
        part.basis = orthonormal_span(gens, tol);
        part.rep = compress(big, part.basis);
        total += part.rep.dimension;
        out.parts.push_back(std::move(part));
    }
    const double t = residual_tolerance;
    for (std::size_t a = 0; a < out.parts.size(); ++a)
        for (std::size_t b = a + 1; b < out.parts.size(); ++b) {
            if (out.parts[a].basis.cols() == 0 || out.parts[b].basis.cols() == 0) continue;
            if ((out.parts[a].basis.adjoint() * out.parts[b].basis).norm() > t) {
                out.check = CheckResult::fail("support-orthogonality", {w(a), w(b)});
                return out;
            }
        }
    if (total != big.dimension) out.check = CheckResult::fail("support-completeness", {w(total), w(big.dimension)});
    else out.check = CheckResult::pass(out.parts.size());
    return out;
}

}  // namespace tubealg
