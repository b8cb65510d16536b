#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pfu/value.hpp"

namespace pfu {

using Rng = std::mt19937_64;

/// Named binary operator over Values. Operators never see the unfeasible
/// marker; the elim_apply/comb_apply helpers below add the two distinct
/// extensions to E ∪ {unfeasible}.
struct BinaryOp {
    std::string name;
    std::function<Value(const Value&, const Value&)> fn;

    Value operator()(const Value& a, const Value& b) const { return fn(a, b); }
};

/// Extension of an elimination operator: the unfeasible marker is an identity.
Value elim_apply(const BinaryOp& op, const Value& a, const Value& b);

/// Extension of a combination operator: the unfeasible marker is absorbing.
Value comb_apply(const BinaryOp& op, const Value& a, const Value& b);

/// a ⪯ b predicate. Partial: incomparable pairs answer false both ways.
using OrderFn = std::function<bool(const Value&, const Value&)>;
using MemberFn = std::function<bool(const Value&)>;
using SampleFn = std::function<Value(Rng&)>;

/// Commutative semiring (E_p, ⊕_p, ⊗_p) with a monotone partial order.
struct PlausibilityStructure {
    BinaryOp elim;  // ⊕_p
    BinaryOp comb;  // ⊗_p
    Value zero;     // 0_p, identity of ⊕_p and annihilator of ⊗_p
    Value one;      // 1_p
    OrderFn leq;    // ⪯_p
    bool conditionable = false;
    MemberFn member;
    SampleFn sample;
    /// Exhaustive element list for finite domains (boolean rows).
    std::optional<std::vector<Value>> enumeration;
    /// max{p | num = p ⊗_p den}, assuming den != 0_p and num ⪯_p den.
    /// Set exactly when conditionable.
    std::function<Value(const Value&, const Value&)> cond;
    /// p0 with an n-fold ⊕_p-sum of 1_p. Set exactly when conditionable.
    std::function<Value(size_t)> uniform_of;
};

/// Commutative monoid (E_u, ⊗_u) with an order.
struct UtilityStructure {
    BinaryOp comb;  // ⊗_u
    Value one;      // 1_u
    OrderFn leq;    // ⪯_u
    bool total_order = true;
    MemberFn member;
    SampleFn sample;
    std::optional<std::vector<Value>> enumeration;
};

/// (E_p, E_u, ⊕_u, ⊗_pu): a semimodule over the plausibility semiring plus
/// the monotonicity conditions, bundled with the two base structures.
struct ExpectedUtilityStructure {
    std::string id;
    PlausibilityStructure plaus;
    UtilityStructure util;
    BinaryOp elim_u;   // ⊕_u
    Value zero_u;      // 0_u, identity of ⊕_u
    BinaryOp comb_pu;  // ⊗_pu : E_p x E_u -> E_u
    bool ax1 = false;  // (E_p,⪯_p)=(E_u,⪯_u), ⊕_p=⊕_u, ⊗_p=⊗_u=⊗_pu
    bool ax2 = false;  // ⊕_u = ⊗_u on E_u
};

using StructurePtr = std::shared_ptr<const ExpectedUtilityStructure>;

/// The nine catalog rows.
inline const std::vector<std::string>& catalog_ids() {
    static const std::vector<std::string> ids = {
        "prob-additive",   "prob-sat",       "poss-optimistic",
        "poss-pessimistic", "kappa",          "bool-opt-conj",
        "bool-pess-conj",  "bool-opt-disj",  "bool-pess-disj"};
    return ids;
}

/// Returns the catalog structure for one of the nine ids.
/// Throws DomainError on an unknown id.
StructurePtr builtin_structure(const std::string& id);

/// Componentwise product of two expected utility structures. The order is the
/// componentwise (partial) product order, so min/max queries are rejected on
/// the result unless a total refinement is supplied separately.
StructurePtr product_structure(const StructurePtr& a, const StructurePtr& b);

/// Parses "prob-additive" or "product(x,y)" (nestable).
StructurePtr parse_structure_id(const std::string& text);

/// Canonical conditioning max{p in E_p | num = p ⊗_p den} (requires a
/// conditionable structure). Throws DomainError when num is not ⪯_p den and
/// PreconditionError when den = 0_p or the structure is not conditionable.
Value cond_div(const Value& num, const Value& den, const PlausibilityStructure& s);

/// The unique p0 whose n-fold ⊕_p-sum is 1_p (conditionable structures only).
Value uniform(size_t n, const PlausibilityStructure& s);

/// Truncation: e when b is true, the unfeasible marker otherwise.
Value truncate(const Value& b, const Value& e);

struct AxiomCheck {
    std::string axiom;
    bool passed = true;
    std::string counterexample;  // empty when passed
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    bool all_passed() const;
    std::string summary() const;
};

/// Samples (or exhaustively enumerates, when the domains are finite) value
/// tuples and checks every semiring/monoid/semimodule/monotonicity axiom of
/// the expected-utility definition. Failures carry a concrete counterexample.
AxiomReport check_axioms(const ExpectedUtilityStructure& s, size_t n_samples, uint64_t seed);

}  // namespace pfu
