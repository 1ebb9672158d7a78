#include "tubealg/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace tubealg {

namespace {

std::int64_t w(std::size_t v) { return static_cast<std::int64_t>(v); }

}  // namespace

CheckResult GroupTable::validate(const std::vector<std::vector<Elem>>& mult) {
    const std::size_t n = mult.size();
    if (n == 0) return CheckResult::fail("shape", {}, "empty table");
    for (std::size_t i = 0; i < n; ++i) {
        if (mult[i].size() != n) return CheckResult::fail("shape", {w(i)}, "row has wrong length");
        for (std::size_t j = 0; j < n; ++j)
            if (mult[i][j] >= n) return CheckResult::fail("range", {w(i), w(j)}, "entry out of range");
    }
    for (std::size_t g = 0; g < n; ++g) {
        if (mult[0][g] != g || mult[g][0] != g)
            return CheckResult::fail("identity", {w(g)}, "index 0 is not a two-sided identity");
    }
    for (std::size_t g = 0; g < n; ++g) {
        bool found = false;
        for (std::size_t h = 0; h < n && !found; ++h) found = mult[g][h] == 0 && mult[h][g] == 0;
        if (!found) return CheckResult::fail("inverse", {w(g)}, "no inverse");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (mult[mult[a][b]][c] != mult[a][mult[b][c]])
                    return CheckResult::fail("associativity", {w(a), w(b), w(c)});
    return CheckResult::pass(n * n * n);
}

GroupTable GroupTable::from_table(const std::vector<std::vector<Elem>>& mult,
                                  std::vector<std::string> names) {
    if (auto r = validate(mult); !r) {
        std::ostringstream os;
        os << "invalid group table (" << r.relation << ")";
        if (!r.detail.empty()) os << ": " << r.detail;
        throw InputError(os.str(), r.witness);
    }
    GroupTable g;
    g.n_ = mult.size();
    if (!names.empty() && names.size() != g.n_) throw InputError("names list has wrong length");
    g.names_ = std::move(names);
    g.mult_.resize(g.n_ * g.n_);
    for (std::size_t i = 0; i < g.n_; ++i)
        for (std::size_t j = 0; j < g.n_; ++j) g.mult_[i * g.n_ + j] = mult[i][j];
    g.inv_.resize(g.n_);
    for (Elem a = 0; a < g.n_; ++a)
        for (Elem b = 0; b < g.n_; ++b)
            if (g.mul(a, b) == 0) {
                g.inv_[a] = b;
                break;
            }
    return g;
}

std::string GroupTable::name(Elem g) const {
    if (!names_.empty()) return names_[g];
    return std::to_string(g);
}

std::vector<std::vector<Elem>> GroupTable::table() const {
    std::vector<std::vector<Elem>> t(n_, std::vector<Elem>(n_));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) t[i][j] = mult_[i * n_ + j];
    return t;
}

bool GroupTable::is_abelian() const {
    for (Elem a = 0; a < n_; ++a)
        for (Elem b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

GroupTable group_from_permutations(std::size_t degree, const std::vector<Permutation>& generators,
                                   std::size_t bound) {
    for (std::size_t k = 0; k < generators.size(); ++k) {
        const auto& p = generators[k];
        if (p.size() != degree) throw InputError("generator has wrong degree", {w(k)});
        std::vector<bool> seen(degree, false);
        for (auto v : p) {
            if (v >= degree || seen[v]) throw InputError("generator is not a permutation", {w(k)});
            seen[v] = true;
        }
    }
    auto compose = [degree](const Permutation& p, const Permutation& q) {
        Permutation r(degree);
        for (std::size_t i = 0; i < degree; ++i) r[i] = p[q[i]];
        return r;
    };

    Permutation id(degree);
    std::iota(id.begin(), id.end(), 0u);
    std::vector<Permutation> elems{id};
    std::map<Permutation, Elem> index{{id, 0}};
    std::deque<Elem> queue{0};
    while (!queue.empty()) {
        const Elem cur = queue.front();
        queue.pop_front();
        for (const auto& gen : generators) {
            Permutation next = compose(elems[cur], gen);
            if (index.contains(next)) continue;
            if (elems.size() >= bound)
                throw InputError("permutation closure exceeds bound", {w(bound)});
            index.emplace(next, static_cast<Elem>(elems.size()));
            elems.push_back(std::move(next));
            queue.push_back(static_cast<Elem>(elems.size() - 1));
        }
    }

    const std::size_t n = elems.size();
    std::vector<std::vector<Elem>> mult(n, std::vector<Elem>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) mult[a][b] = index.at(compose(elems[a], elems[b]));
    GroupTable g = GroupTable::from_table(mult);
    g.perms_ = std::move(elems);
    return g;
}

GroupTable direct_product(const GroupTable& g1, const GroupTable& g2) {
    const std::size_t n1 = g1.order(), n2 = g2.order();
    std::vector<std::vector<Elem>> mult(n1 * n2, std::vector<Elem>(n1 * n2));
    for (Elem a1 = 0; a1 < n1; ++a1)
        for (Elem a2 = 0; a2 < n2; ++a2)
            for (Elem b1 = 0; b1 < n1; ++b1)
                for (Elem b2 = 0; b2 < n2; ++b2)
                    mult[a1 * n2 + a2][b1 * n2 + b2] =
                        static_cast<Elem>(g1.mul(a1, b1) * n2 + g2.mul(a2, b2));
    std::vector<std::string> names;
    for (Elem a1 = 0; a1 < n1; ++a1)
        for (Elem a2 = 0; a2 < n2; ++a2) names.push_back("(" + g1.name(a1) + "," + g2.name(a2) + ")");
    return GroupTable::from_table(mult, std::move(names));
}

GroupTable cyclic_group(std::size_t n) {
    std::vector<std::vector<Elem>> mult(n, std::vector<Elem>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) mult[a][b] = static_cast<Elem>((a + b) % n);
    return GroupTable::from_table(mult);
}

GroupTable symmetric_group(std::size_t degree) {
    if (degree < 2) return group_from_permutations(degree, {});
    Permutation swap(degree), cycle(degree);
    std::iota(swap.begin(), swap.end(), 0u);
    std::swap(swap[0], swap[1]);
    for (std::size_t i = 0; i < degree; ++i) cycle[i] = static_cast<std::uint32_t>((i + 1) % degree);
    return group_from_permutations(degree, {swap, cycle});
}

GroupTable dihedral_group(std::size_t n) {
    Permutation rot(n), refl(n);
    for (std::size_t i = 0; i < n; ++i) {
        rot[i] = static_cast<std::uint32_t>((i + 1) % n);
        refl[i] = static_cast<std::uint32_t>((n - i) % n);
    }
    return group_from_permutations(n, {rot, refl});
}

std::size_t ClassData::position_in_class(Elem g) const {
    const auto& c = classes[class_of[g]];
    return static_cast<std::size_t>(std::lower_bound(c.begin(), c.end(), g) - c.begin());
}

ClassData conjugacy_data(const GroupTable& g) {
    const std::size_t n = g.order();
    ClassData d;
    d.class_of.assign(n, static_cast<std::size_t>(-1));
    d.transport.assign(n, 0);
    for (Elem a = 0; a < n; ++a) {
        if (d.class_of[a] != static_cast<std::size_t>(-1)) continue;
        // `a` is the smallest unvisited element, hence the minimum of its class.
        const std::size_t ci = d.classes.size();
        std::vector<Elem> cls;
        for (Elem x = 0; x < n; ++x) {
            const Elem c = g.conj(x, a);
            if (d.class_of[c] == static_cast<std::size_t>(-1)) {
                d.class_of[c] = ci;
                d.transport[c] = x;  // first conjugator in index order
                cls.push_back(c);
            }
        }
        std::sort(cls.begin(), cls.end());
        d.classes.push_back(std::move(cls));
        d.rep.push_back(a);
        d.centralizers.push_back(centralizer(g, a));
    }
    return d;
}

std::vector<Elem> centralizer(const GroupTable& g, Elem a) {
    std::vector<Elem> out;
    for (Elem s = 0; s < g.order(); ++s)
        if (g.mul(s, a) == g.mul(a, s)) out.push_back(s);
    return out;
}

std::vector<Elem> subgroup_closure(const GroupTable& g, std::span<const Elem> elements) {
    std::vector<bool> in(g.order(), false);
    std::vector<Elem> members{0};
    in[0] = true;
    for (Elem x : elements) {
        if (x >= g.order()) throw InputError("element index out of range", {static_cast<std::int64_t>(x)});
    }
    // Repeatedly multiply members by generators until stable.
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (Elem x : elements) {
            const Elem p = g.mul(members[i], x);
            if (!in[p]) {
                in[p] = true;
                members.push_back(p);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

bool is_subgroup(const GroupTable& g, std::span<const Elem> elements) {
    std::vector<bool> in(g.order(), false);
    for (Elem x : elements) {
        if (x >= g.order()) return false;
        in[x] = true;
    }
    if (!in[0]) return false;
    for (Elem a : elements) {
        if (!in[g.inv(a)]) return false;
        for (Elem b : elements)
            if (!in[g.mul(a, b)]) return false;
    }
    return true;
}

std::vector<Elem> parity_map(const GroupTable& g) {
    if (!g.permutations()) throw InputError("parity requires a permutation group");
    std::vector<Elem> out;
    for (const auto& p : *g.permutations()) {
        std::vector<bool> seen(p.size(), false);
        std::size_t transpositions = 0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (seen[i]) continue;
            std::size_t len = 0;
            for (std::size_t j = i; !seen[j]; j = p[j]) {
                seen[j] = true;
                ++len;
            }
            transpositions += len - 1;
        }
        out.push_back(static_cast<Elem>(transpositions % 2));
    }
    return out;
}

CheckResult check_homomorphism(const GroupTable& source, const GroupTable& target,
                               std::span<const Elem> map) {
    if (map.size() != source.order()) return CheckResult::fail("shape", {}, "map has wrong length");
    for (Elem v : map)
        if (v >= target.order()) return CheckResult::fail("range", {w(v)});
    for (Elem a = 0; a < source.order(); ++a)
        for (Elem b = 0; b < source.order(); ++b)
            if (map[source.mul(a, b)] != target.mul(map[a], map[b]))
                return CheckResult::fail("homomorphism", {w(a), w(b)});
    return CheckResult::pass(source.order() * source.order());
}

}  // namespace tubealg
