#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pfu/algebra.hpp"
#include "pfu/value.hpp"

namespace pfu {

using VarId = uint32_t;

enum class VarKind : uint8_t { Decision, Environment };

struct Variable {
    std::string name;
    VarKind kind;
    std::vector<std::string> domain;  // ordered, distinct labels
};

/// Immutable variable table shared by every scoped function of a problem.
class Space {
public:
    explicit Space(std::vector<Variable> vars);

    size_t size() const { return vars_.size(); }
    const Variable& var(VarId id) const { return vars_.at(id); }
    size_t domain_size(VarId id) const { return vars_[id].domain.size(); }
    std::optional<VarId> find(const std::string& name) const;
    VarId require(const std::string& name) const;

    std::vector<VarId> all_vars() const;
    std::vector<VarId> vars_of_kind(VarKind k) const;

    /// Number of joint assignments of the given set (1 for the empty set).
    size_t assignment_count(const std::vector<VarId>& vars) const;

private:
    std::vector<Variable> vars_;
};

using SpacePtr = std::shared_ptr<const Space>;

/// Partial assignment over a Space: label index per variable, -1 = unbound.
using Assignment = std::vector<int32_t>;

inline Assignment empty_assignment(const Space& sp) { return Assignment(sp.size(), -1); }

/// Row-major iteration over the joint domain of an ordered variable list
/// (first variable slowest). Writes label indices into a caller-supplied
/// assignment and restores the previous bindings on completion.
class DomainIter {
public:
    DomainIter(const Space& sp, const std::vector<VarId>& vars, Assignment& a);
    ~DomainIter();

    bool valid() const { return valid_; }
    void next();
    size_t count() const;  // total number of joint assignments

private:
    const Space& sp_;
    const std::vector<VarId>& vars_;
    Assignment& a_;
    std::vector<int32_t> saved_;
    bool valid_;
};

enum class Codomain : uint8_t { Plausibility, Feasibility, Utility };

/// A finite table from assignments of its scope to Values, row-major with the
/// first scope variable slowest. Network factor tables never store the
/// unfeasible marker (validation enforces this); solver intermediates may.
class ScopedFunction {
public:
    ScopedFunction(SpacePtr space, std::vector<VarId> scope, Codomain codomain,
                   std::vector<Value> table);

    static ScopedFunction constant(SpacePtr space, Codomain codomain, Value v);

    const SpacePtr& space() const { return space_; }
    const std::vector<VarId>& scope() const { return scope_; }
    Codomain codomain() const { return codomain_; }
    const std::vector<Value>& table() const { return table_; }
    size_t table_size() const { return table_.size(); }

    /// Flat index of an assignment binding at least the scope.
    size_t index_of(const Assignment& a) const;
    const Value& at(const Assignment& a) const;

    /// Inverse of index_of: binds the scope variables in `a`.
    void assignment_of(size_t index, Assignment& a) const;

    bool scope_contains(VarId v) const;

private:
    SpacePtr space_;
    std::vector<VarId> scope_;
    std::vector<size_t> strides_;
    Codomain codomain_;
    std::vector<Value> table_;
};

/// Pointwise combination with scope sc(f1) ∪ sc(f2); the output scope is f1's
/// scope followed by f2's new variables. Unfeasible inputs absorb.
ScopedFunction combine(const ScopedFunction& f1, const ScopedFunction& f2, const BinaryOp& op,
                       Codomain out);

/// Eliminates the listed variables with an associative/commutative operator.
/// Variables outside the scope still contribute their domain multiplicity to
/// the fold. Unfeasible entries are identities; an all-unfeasible fold is
/// unfeasible.
ScopedFunction eliminate(const ScopedFunction& f, const std::vector<VarId>& elim_vars,
                         const BinaryOp& op);

/// Fold the value of `fn` at a point, used where materializing eliminate()
/// output would be too large: op-fold of fn over all completions of `a`
/// w.r.t. `elim_vars`.
Value eliminate_at(const ScopedFunction& fn, const std::vector<VarId>& elim_vars,
                   const BinaryOp& op, Assignment& a);

}  // namespace pfu
