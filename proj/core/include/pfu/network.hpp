#pragma once

#include <string>
#include <vector>

#include "pfu/algebra.hpp"
#include "pfu/scoped_function.hpp"

namespace pfu {

/// Component of the typed DAG: a nonempty homogeneous set of variables.
struct Component {
    std::string id;
    VarKind kind;
    std::vector<VarId> vars;
    std::vector<uint32_t> parents;  // component indices
};

/// Plausibility or feasibility factor attached to its owning component.
struct OwnedFunction {
    ScopedFunction fn;
    uint32_t owner;
};

/// A Plausibility-Feasibility-Utility network: variables, a typed component
/// DAG, normalized plausibility/feasibility factor sets, and utility factors.
struct PfuNetwork {
    StructurePtr structure;
    SpacePtr space;
    std::vector<Component> components;
    std::vector<OwnedFunction> plausibilities;  // P, owners are environment components
    std::vector<OwnedFunction> feasibilities;   // F, owners are decision components
    std::vector<ScopedFunction> utilities;      // U

    /// Component index containing a variable, or -1 when unassigned.
    int component_of(VarId v) const;
    /// Variables of the parents of a component.
    std::vector<VarId> parent_vars(uint32_t comp) const;
    /// comp-to-comp reachability via directed arcs (transitive, irreflexive
    /// unless cyclic).
    std::vector<std::vector<bool>> reachability() const;
};

struct CheckResult {
    std::string check;   // stable clause identifier
    bool passed;
    std::string detail;  // offending variables / components when failed
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    bool ok() const;
    /// Stable identifiers of the failed clauses, in order.
    std::vector<std::string> failed_checks() const;
    std::string to_string() const;
};

/// Network validation error carrying the full report.
class ValidationError : public Error {
public:
    ValidationError(std::string msg, ValidationReport report)
        : Error(std::move(msg)), report(std::move(report)) {}
    ValidationReport report;
};

/// Checks every network clause: DAG acyclicity, component partition and
/// typing, factor ownership and scope containment, both normalization
/// families (exhaustively per parent assignment), and codomain membership.
/// The size cap rejects networks too large for exhaustive normalization
/// checks rather than skipping them.
ValidationReport validate_network(const PfuNetwork& n, size_t cap = size_t(1) << 20);

/// Names of the validation clauses, for fixture tests.
namespace checks {
inline constexpr const char* kDagAcyclic = "dag-acyclic";
inline constexpr const char* kComponentPartition = "component-partition";
inline constexpr const char* kComponentTyping = "component-typing";
inline constexpr const char* kPlausibilityScope = "plausibility-scope";
inline constexpr const char* kPlausibilityNormalization = "plausibility-normalization";
inline constexpr const char* kFeasibilityScope = "feasibility-scope";
inline constexpr const char* kFeasibilityNormalization = "feasibility-normalization";
inline constexpr const char* kCodomain = "codomain";
}  // namespace checks

struct GlobalFunctions {
    ScopedFunction plausibility;  // ⊗_p over P (1_p if empty)
    ScopedFunction feasibility;   // ∧ over F (t if empty)
    ScopedFunction utility;       // ⊗_u over U (1_u if empty)
};

/// Materializes the three full-joint combinations. Throws CapExceededError
/// when any joint table would exceed the cap.
GlobalFunctions global_functions(const PfuNetwork& n, size_t cap = size_t(1) << 20);

/// Leaf value (∧F) ⋆ (⊗P) ⊗_pu (⊗U) at one complete assignment.
Value leaf_value(const PfuNetwork& n, const Assignment& a);

}  // namespace pfu
