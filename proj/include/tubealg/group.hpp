#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tubealg/check.hpp"

namespace tubealg {

// Group elements are indices into a multiplication table; index 0 is e.
using Elem = std::uint32_t;
using Permutation = std::vector<std::uint32_t>;

inline constexpr std::size_t kDefaultClosureBound = 10000;

class GroupTable {
public:
    // Validates identity at 0, inverses and associativity. Throws InputError
    // with a witness tuple on failure.
    static GroupTable from_table(const std::vector<std::vector<Elem>>& mult,
                                 std::vector<std::string> names = {});

    // Validation without throwing; used by `verify-group`.
    static CheckResult validate(const std::vector<std::vector<Elem>>& mult);

    std::size_t order() const { return n_; }
    Elem mul(Elem a, Elem b) const { return mult_[static_cast<std::size_t>(a) * n_ + b]; }
    Elem inv(Elem a) const { return inv_[a]; }
    static constexpr Elem identity() { return 0; }

    // x g x^-1
    Elem conj(Elem x, Elem g) const { return mul(mul(x, g), inv(x)); }
    Elem mul(Elem a, Elem b, Elem c) const { return mul(mul(a, b), c); }

    std::string name(Elem g) const;
    const std::vector<std::string>& names() const { return names_; }

    // Present when the group was built from permutation generators.
    const std::optional<std::vector<Permutation>>& permutations() const { return perms_; }

    std::vector<std::vector<Elem>> table() const;

    bool is_abelian() const;

    friend bool operator==(const GroupTable& a, const GroupTable& b) {
        return a.n_ == b.n_ && a.mult_ == b.mult_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Elem> mult_;
    std::vector<Elem> inv_;
    std::vector<std::string> names_;
    std::optional<std::vector<Permutation>> perms_;

    friend GroupTable group_from_permutations(std::size_t, const std::vector<Permutation>&,
                                              std::size_t);
};

// Closure of the generators under composition, breadth-first from the
// identity with generators tried in input order. (p*q)(i) = p(q(i)).
GroupTable group_from_permutations(std::size_t degree, const std::vector<Permutation>& generators,
                                   std::size_t bound = kDefaultClosureBound);

// Elements ordered lexicographically: index = i * |G2| + j.
GroupTable direct_product(const GroupTable& g1, const GroupTable& g2);

GroupTable cyclic_group(std::size_t n);
GroupTable symmetric_group(std::size_t degree);
GroupTable dihedral_group(std::size_t n);  // order 2n, acting on n points

struct ClassData {
    std::vector<std::vector<Elem>> classes;  // sorted element lists
    std::vector<Elem> rep;                   // g_C = min element of C
    std::vector<Elem> transport;             // w_g with g = w_g g_C w_g^-1
    std::vector<std::size_t> class_of;       // element -> class index
    std::vector<std::vector<Elem>> centralizers;  // G_{g_C}, sorted

    std::size_t class_count() const { return classes.size(); }
    // Position of g inside its class element list.
    std::size_t position_in_class(Elem g) const;

    friend bool operator==(const ClassData&, const ClassData&) = default;
};

ClassData conjugacy_data(const GroupTable& g);

std::vector<Elem> centralizer(const GroupTable& g, Elem a);
std::vector<Elem> subgroup_closure(const GroupTable& g, std::span<const Elem> elements);
bool is_subgroup(const GroupTable& g, std::span<const Elem> elements);

// Sign of each element of a permutation group (0 even, 1 odd).
std::vector<Elem> parity_map(const GroupTable& g);

// Checks that `map` (indexed by elements of `source`) is a homomorphism.
CheckResult check_homomorphism(const GroupTable& source, const GroupTable& target,
                               std::span<const Elem> map);

}  // namespace tubealg
