#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tubealg/check.hpp"
#include "tubealg/cochain.hpp"
#include "tubealg/group.hpp"
#include "tubealg/phase.hpp"

namespace tubealg {

// phase * basis[index]
struct Term {
    Phase coeff;
    std::size_t index = 0;
    friend bool operator==(const Term&, const Term&) = default;
};

// A finite-dimensional *-algebra with a basis of partial isometries up to
// phase: each basis element runs from a source object to a target object,
// left * right is nonzero exactly when source(left) == target(right) and is
// then a phase times one basis element. Every algebra in this library (tube,
// annular, block sums, twisted group algebras, corners) has this shape.
class MonomialAlgebra {
public:
    virtual ~MonomialAlgebra() = default;

    virtual std::size_t dimension() const = 0;
    virtual std::size_t object_count() const = 0;
    virtual std::size_t source(std::size_t i) const = 0;
    virtual std::size_t target(std::size_t i) const = 0;
    // Requires source(left) == target(right).
    virtual Term compose(std::size_t left, std::size_t right) const = 0;
    virtual Term star(std::size_t i) const = 0;
    // The canonical trace is 1 on identities of objects and 0 on other basis
    // elements for all algebras here.
    virtual bool trace_one(std::size_t i) const = 0;
    // Basis index of the identity at an object (coefficient 1).
    virtual std::size_t identity(std::size_t object) const = 0;
    virtual std::string label(std::size_t i) const = 0;

    std::optional<Term> product(std::size_t left, std::size_t right) const {
        if (source(left) != target(right)) return std::nullopt;
        return compose(left, right);
    }
};

// Basis elements grouped by (source, target) for the generic loops.
class MorphismIndex {
public:
    explicit MorphismIndex(const MonomialAlgebra& alg);
    // Elements with source == obj.
    const std::vector<std::size_t>& from(std::size_t obj) const { return from_[obj]; }
    // Elements with target == obj.
    const std::vector<std::size_t>& into(std::size_t obj) const { return into_[obj]; }
    // Endomorphisms of obj.
    const std::vector<std::size_t>& endo(std::size_t obj) const { return endo_[obj]; }

private:
    std::vector<std::vector<std::size_t>> from_, into_, endo_;
};

struct AlgebraCheckOptions {
    // Associativity runs over every composable triple when dimension is at
    // most this; otherwise `samples` random composable triples.
    std::size_t exhaustive_max_dimension = 400;
    std::size_t samples = 100000;
    std::uint64_t seed = 0;
};

CheckResult check_associativity(const MonomialAlgebra& alg, const AlgebraCheckOptions& opts = {});
// (x^#)^# = x and (b a)^# = a^# b^#.
CheckResult check_star(const MonomialAlgebra& alg);
// tau(b a) = tau(a b).
CheckResult check_trace(const MonomialAlgebra& alg);
// tau(y^# x) = delta_{x,y} on basis elements.
CheckResult check_gram(const MonomialAlgebra& alg);
// identities act as two-sided units on every basis element.
CheckResult check_unit(const MonomialAlgebra& alg);

// A linear map sending each basis element to a phase times a basis element.
struct MonomialMap {
    std::vector<Term> image;
};

// Bijective on basis labels, multiplicative on every basis pair (including
// vanishing products) and *-preserving on every basis element. Exact.
CheckResult verify_star_isomorphism(const MonomialAlgebra& from, const MonomialAlgebra& to,
                                    const MonomialMap& map);

MonomialMap inverse_map(const MonomialMap& map);

// Least common denominator of all structure-constant phases.
std::int64_t structure_modulus(const MonomialAlgebra& alg);

// Exact dimension of the center, by solving x z = z x over Q(zeta_N) with N
// the structure modulus. A central element commutes with every object
// identity, so only endomorphisms carry unknowns.
std::size_t center_dimension(const MonomialAlgebra& alg);

// [g][h] = phi(g,h) [gh] on the support subgroup of phi.
class TwistedGroupAlgebra final : public MonomialAlgebra {
public:
    // Throws InputError (with the failing triple) unless phi passes
    // cocycle2_check and is normalized.
    TwistedGroupAlgebra(const GroupTable& group, Cocycle2 phi);

    std::size_t dimension() const override { return phi_.size(); }
    std::size_t object_count() const override { return 1; }
    std::size_t source(std::size_t) const override { return 0; }
    std::size_t target(std::size_t) const override { return 0; }
    Term compose(std::size_t left, std::size_t right) const override;
    // [g]^* = conj phi(g^-1, g) [g^-1]
    Term star(std::size_t i) const override;
    bool trace_one(std::size_t i) const override { return element(i) == 0; }
    std::size_t identity(std::size_t) const override { return phi_.position(0); }
    std::string label(std::size_t i) const override;

    Elem element(std::size_t i) const { return phi_.elements()[i]; }
    const Cocycle2& twist() const { return phi_; }
    const GroupTable& group() const { return *group_; }

private:
    std::shared_ptr<const GroupTable> group_;
    Cocycle2 phi_;
};

// Direct sum over blocks of M_{S} (x) C[G_C]_phi. Block b has matrix units
// indexed by `objects[b]` (labels of the source algebra's objects) and a
// twisted group algebra on the centralizer.
struct Block {
    std::vector<std::size_t> objects;  // row/column labels
    Cocycle2 twist;                    // on G_C
    std::string name;
};

class BlockAlgebra final : public MonomialAlgebra {
public:
    BlockAlgebra(const GroupTable& group, std::vector<Block> blocks);

    std::size_t dimension() const override { return dim_; }
    std::size_t object_count() const override { return object_block_.size(); }
    std::size_t source(std::size_t i) const override;
    std::size_t target(std::size_t i) const override;
    // (E_ij x [x]) (E_jl x [y]) = phi(x,y) E_il x [xy]
    Term compose(std::size_t left, std::size_t right) const override;
    // (E_ij x [x])^* = conj phi(x^-1, x) E_ji x [x^-1]
    Term star(std::size_t i) const override;
    bool trace_one(std::size_t i) const override;
    std::size_t identity(std::size_t object) const override;
    std::string label(std::size_t i) const override;

    struct Coord {
        std::size_t block, row, col;
        Elem element;
    };
    Coord coord(std::size_t i) const;
    // Basis index of E_{row,col} (x) [element] in block b (row/col are positions).
    std::size_t index(std::size_t block, std::size_t row, std::size_t col, Elem element) const;

    const std::vector<Block>& blocks() const { return blocks_; }
    std::size_t block_offset(std::size_t b) const { return offset_[b]; }
    std::size_t object_offset(std::size_t b) const { return object_offset_[b]; }

private:
    std::shared_ptr<const GroupTable> group_;
    std::vector<Block> blocks_;
    std::vector<std::size_t> offset_, object_offset_, object_block_;
    std::size_t dim_ = 0;
};

// The sub-algebra spanned by basis elements whose source and target lie in
// a chosen object set (a corner p A p with p a sum of object identities).
class CornerAlgebra final : public MonomialAlgebra {
public:
    CornerAlgebra(std::shared_ptr<const MonomialAlgebra> parent, std::vector<std::size_t> objects);

    std::size_t dimension() const override { return basis_.size(); }
    std::size_t object_count() const override { return objects_.size(); }
    std::size_t source(std::size_t i) const override { return local_object_[parent_->source(basis_[i])]; }
    std::size_t target(std::size_t i) const override { return local_object_[parent_->target(basis_[i])]; }
    Term compose(std::size_t left, std::size_t right) const override;
    Term star(std::size_t i) const override;
    bool trace_one(std::size_t i) const override { return parent_->trace_one(basis_[i]); }
    std::size_t identity(std::size_t object) const override;
    std::string label(std::size_t i) const override { return parent_->label(basis_[i]); }

    // Parent basis index of a local one, and back (nullopt when outside).
    std::size_t parent_index(std::size_t i) const { return basis_[i]; }
    std::optional<std::size_t> local_index(std::size_t parent_i) const;
    const std::vector<std::size_t>& objects() const { return objects_; }

private:
    std::shared_ptr<const MonomialAlgebra> parent_;
    std::vector<std::size_t> objects_;
    std::vector<std::size_t> local_object_;  // parent object -> local (or npos)
    std::vector<std::size_t> basis_;
    std::vector<std::size_t> local_;         // parent basis -> local (or npos)
};

// Structure-constant table, one entry per nonzero basis product.
struct StructureEntry {
    std::size_t left, right;
    Term result;
};
std::vector<StructureEntry> structure_constants(const MonomialAlgebra& alg);

}  // namespace tubealg
