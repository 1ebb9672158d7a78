#include "tubealg/cutdown.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>

namespace tubealg {

namespace {

std::int64_t w(std::size_t v) { return static_cast<std::int64_t>(v); }

// Phase search on a stabilizer: c(k1 k2) = tau(k1,k2) c(k2) c(k1) with
// c(e) = 1. Plain backtracking over the M-th roots of unity.
bool solve_stabilizer(const GroupTable& G, const std::vector<Elem>& ks,
                      const std::function<Phase(Elem, Elem)>& tau, std::int64_t m, std::map<Elem, Phase>& c) {
    std::size_t next = 0;
    while (next < ks.size() && c.count(ks[next])) ++next;
    if (next == ks.size()) return true;
    const Elem k = ks[next];
    for (std::int64_t j = 0; j < m; ++j) {
        c[k] = Phase(j, m);
        bool ok = true;
        for (auto [a, ca] : c) {
            for (auto [b, cb] : c) {
                auto ab = c.find(G.mul(a, b));
                if (ab == c.end()) continue;
                if (ab->second != tau(a, b) * cb * ca) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
        if (ok && solve_stabilizer(G, ks, tau, m, c)) return true;
        c.erase(k);
    }
    return false;
}

using Combination = std::map<std::size_t, Phase>;

void add_term(Combination& x, std::size_t index, Phase p) {
    if (x.count(index)) throw std::logic_error("embedding terms collide");
    x.emplace(index, p);
}

std::vector<SMatrix> right_multiplication(const MonomialAlgebra& alg) {
    const std::size_t d = alg.dimension();
    const MorphismIndex idx(alg);
    std::vector<SMatrix> out;
    out.reserve(d);
    for (std::size_t b = 0; b < d; ++b) {
        std::vector<Eigen::Triplet<Complex>> trip;
        for (std::size_t a : idx.from(alg.target(b))) {
            const Term t = alg.compose(a, b);
            trip.emplace_back(static_cast<int>(t.index), static_cast<int>(a), to_complex(t.coeff));
        }
        SMatrix m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
        m.setFromTriplets(trip.begin(), trip.end());
        out.push_back(std::move(m));
    }
    return out;
}

CMatrix combine(const std::vector<SMatrix>& ms, const Eigen::VectorXcd& v) {
    const auto d = ms.empty() ? 0 : ms[0].rows();
    SMatrix acc(d, d);
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v(i) != Complex(0)) acc += v(i) * ms[static_cast<std::size_t>(i)];
    return CMatrix(acc);
}

Eigen::VectorXcd star_vector(const MonomialAlgebra& alg, const Eigen::VectorXcd& v) {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (v(i) == Complex(0)) continue;
        const Term t = alg.star(static_cast<std::size_t>(i));
        out(static_cast<Eigen::Index>(t.index)) += std::conj(v(i)) * to_complex(t.coeff);
    }
    return out;
}

}  // namespace

XgEmbedding end_xg_embedding(const AnnularAlgebra& alg, Elem g) {
    const auto& st = alg.setup();
    const auto& G = st.group;
    const TwistedGroupAlgebra tw = end_xg_algebra(st, g);
    const Cocycle2& psi = tw.twist();
    const auto& ks = psi.elements();
    const auto& hs = st.h;

    auto act = [&](Elem k, Elem p) { return G.mul(G.mul(k, p), G.conj(g, G.inv(k))); };
    auto label = [&](Elem k, Elem p) { return ALabel{p, g, G.inv(k), act(k, p), g}; };
    // c(hk,p) = tau(h,k,p) c(k,p) c(h,k.p)
    auto tau = [&](Elem h, Elem k, Elem p) {
        const auto prod = a_mult(st, label(h, act(k, p)), label(k, p));
        if (!prod || !(prod->result == label(G.mul(h, k), p))) throw std::logic_error("embedding labels do not close");
        return psi(h, k).conj() * prod->scalar;
    };

    std::map<std::pair<Elem, Elem>, Phase> c;  // (h, p)
    std::vector<bool> seen(G.order(), false);
    for (Elem b : hs) {
        if (seen[b]) continue;
        // orbit of b with transports t(q) . b = q
        std::map<Elem, Elem> transport{{b, 0}};
        std::vector<Elem> queue{b};
        seen[b] = true;
        for (std::size_t qi = 0; qi < queue.size(); ++qi)
            for (Elem k : ks) {
                const Elem q2 = act(k, queue[qi]);
                if (transport.count(q2)) continue;
                transport[q2] = G.mul(k, transport[queue[qi]]);
                seen[q2] = true;
                queue.push_back(q2);
            }
        std::vector<Elem> stab;
        for (Elem k : ks)
            if (act(k, b) == b) stab.push_back(k);
        std::int64_t m = static_cast<std::int64_t>(stab.size());
        for (Elem k1 : stab)
            for (Elem k2 : stab) m = std::lcm(m, tau(k1, k2, b).den() * static_cast<std::int64_t>(stab.size()));
        std::map<Elem, Phase> cb{{0, Phase()}};
        if (!solve_stabilizer(G, stab, [&](Elem k1, Elem k2) { return tau(k1, k2, b); }, m, cb))
            throw InputError("End(X_g) admits no phase embedding", {g, b});
        for (const auto& [q, tq] : transport)
            for (Elem h : ks) {
                const Elem q2 = act(h, q);
                const Elem tq2 = transport.at(q2);
                const Elem k2 = G.mul(G.inv(tq2), G.mul(h, tq));
                const Phase htq = tau(tq2, k2, b) * cb.at(k2);
                c[{h, q}] = htq * tau(h, tq, b).conj();
            }
    }

    XgEmbedding out;
    out.g = g;
    out.elements = ks;
    std::vector<Combination> img(ks.size());
    out.images.resize(ks.size());
    for (std::size_t i = 0; i < ks.size(); ++i)
        for (Elem p : hs) {
            const std::size_t idx = alg.index_of(label(ks[i], p));
            out.images[i].push_back({c.at({ks[i], p}), idx});
            add_term(img[i], idx, c.at({ks[i], p}));
        }

    // exhaustive check of iota([h]) iota([k]) = psi(h,k) iota([hk]) and star
    std::size_t cases = 0;
    for (std::size_t i = 0; i < ks.size(); ++i)
        for (std::size_t j = 0; j < ks.size(); ++j) {
            ++cases;
            Combination prod;
            for (const auto& [a, ca] : img[i])
                for (const auto& [b, cbv] : img[j]) {
                    const auto t = alg.product(a, b);
                    if (t) add_term(prod, t->index, ca * cbv * t->coeff);
                }
            const Term r = tw.compose(i, j);
            Combination want;
            for (const auto& [a, ca] : img[r.index]) want.emplace(a, ca * r.coeff);
            if (prod != want) {
                out.check = CheckResult::fail("embedding-multiplicativity", {g, ks[i], ks[j]});
                return out;
            }
        }
    for (std::size_t i = 0; i < ks.size(); ++i) {
        Combination s;
        for (const auto& [a, ca] : img[i]) {
            const Term t = alg.star(a);
            add_term(s, t.index, ca.conj() * t.coeff);
        }
        const Term r = tw.star(i);
        Combination want;
        for (const auto& [a, ca] : img[r.index]) want.emplace(a, ca * r.coeff);
        if (s != want) {
            out.check = CheckResult::fail("embedding-star", {g, ks[i]});
            return out;
        }
    }
    out.check = CheckResult::pass(cases);
    return out;
}

CutdownResult tube_cutdown(const BHSetup& setup, std::uint64_t seed, double tol) {
    auto alg = std::make_shared<AnnularAlgebra>(setup);
    const auto& G = setup.group;
    const std::size_t d = alg->dimension();
    CutdownResult out;
    out.seed = seed;
    out.representatives = double_coset_representatives(G, setup.h);
    out.annular_simple_count = simple_count(*alg).total;

    const Representation left = regular_representation(*alg);
    const std::vector<SMatrix> right = right_multiplication(*alg);

    bool all_trivial = true;
    for (std::size_t r = 0; r < out.representatives.size(); ++r) {
        const Elem g = out.representatives[r];
        const auto emb = end_xg_embedding(*alg, g);
        if (!emb.check) {
            out.check = emb.check;
            return out;
        }
        const TwistedGroupAlgebra tw = end_xg_algebra(setup, g);
        if (tw.dimension() != 1) all_trivial = false;
        const auto dec = decompose(tw, regular_representation(tw), seed + r);
        for (std::size_t b = 0; b < dec.blocks.size(); ++b) {
            const auto& blk = dec.blocks[b];
            const double scale = static_cast<double>(blk.dimension) / static_cast<double>(tw.dimension());
            Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(d));
            for (std::size_t x = 0; x < tw.dimension(); ++x) {
                const Complex coeff = scale * std::conj(CMatrix(blk.rep.matrices[x])(0, 0));
                for (const auto& t : emb.images[x]) v(static_cast<Eigen::Index>(t.index)) += coeff * to_complex(t.coeff);
            }
            out.projections.push_back({g, b, blk.dimension, v});
        }
    }

    // projection laws in the annular algebra
    std::vector<CMatrix> lp, rp;
    for (std::size_t j = 0; j < out.projections.size(); ++j) {
        const auto& v = out.projections[j].element;
        lp.push_back(combine(left.matrices, v));
        rp.push_back(combine(right, v));
        const double t = tol * std::max(1.0, v.norm());
        if ((lp.back() * v - v).norm() > 1e3 * t || (star_vector(*alg, v) - v).norm() > 1e3 * t) {
            out.check = CheckResult::fail("projection", {w(j)});
            return out;
        }
    }

    const std::size_t np = out.projections.size();
    out.dimension_table.assign(np, std::vector<std::size_t>(np, 0));
    for (std::size_t j = 0; j < np; ++j)
        for (std::size_t i = 0; i < np; ++i) {
            const double tr = (lp[j] * rp[i]).trace().real();
            const double rounded = std::round(tr);
            if (std::abs(tr - rounded) > 1e-6 || rounded < 0) {
                out.check = CheckResult::fail("dimension-table", {w(j), w(i)});
                return out;
            }
            out.dimension_table[j][i] = static_cast<std::size_t>(rounded);
            out.corner_dimension += out.dimension_table[j][i];
        }

    // the corner P A P and its center
    Eigen::VectorXcd total = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(d));
    for (const auto& p : out.projections) total += p.element;
    const CMatrix lt = combine(left.matrices, total), rt = combine(right, total);
    const CMatrix q = orthonormal_span(lt * rt, 1e-7);
    if (static_cast<std::size_t>(q.cols()) != out.corner_dimension) {
        out.check = CheckResult::fail("corner-dimension", {w(static_cast<std::size_t>(q.cols())), w(out.corner_dimension)});
        return out;
    }
    const auto r = q.cols();
    CMatrix gram = CMatrix::Zero(r, r);
    for (Eigen::Index j = 0; j < r; ++j) {
        const Eigen::VectorXcd y = q.col(j);
        const CMatrix comm = (combine(right, y) - combine(left.matrices, y)) * q;
        gram += comm.adjoint() * comm;
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(gram);
    const auto& ev = es.eigenvalues();
    const double top = ev.size() ? std::max(ev.cwiseAbs().maxCoeff(), 1.0) : 1.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i)
        if (std::abs(ev(i)) <= 1e-8 * top) ++out.corner_simple_count;

    if (all_trivial) {
        std::vector<std::size_t> objs;
        for (Elem g : out.representatives)
            for (Elem h : setup.h) objs.push_back(alg->object_of(h, g));
        std::sort(objs.begin(), objs.end());
        out.exact_corner = std::make_shared<CornerAlgebra>(alg, objs);
    }
    out.check = CheckResult::pass(np * np);
    return out;
}

}  // namespace tubealg
