#include "pfu/scoped_function.hpp"

#include <algorithm>
#include <set>

namespace pfu {

Space::Space(std::vector<Variable> vars) : vars_(std::move(vars)) {
    std::set<std::string> names;
    for (const Variable& v : vars_) {
        if (v.domain.empty()) throw DomainError("variable " + v.name + " has an empty domain");
        if (!names.insert(v.name).second) throw DomainError("duplicate variable name " + v.name);
        std::set<std::string> labels(v.domain.begin(), v.domain.end());
        if (labels.size() != v.domain.size())
            throw DomainError("variable " + v.name + " has duplicate domain labels");
    }
}

std::optional<VarId> Space::find(const std::string& name) const {
    for (VarId i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name) return i;
    return std::nullopt;
}

VarId Space::require(const std::string& name) const {
    auto id = find(name);
    if (!id) throw DomainError("unknown variable " + name);
    return *id;
}

std::vector<VarId> Space::all_vars() const {
    std::vector<VarId> out(size());
    for (VarId i = 0; i < out.size(); ++i) out[i] = i;
    return out;
}

std::vector<VarId> Space::vars_of_kind(VarKind k) const {
    std::vector<VarId> out;
    for (VarId i = 0; i < size(); ++i)
        if (vars_[i].kind == k) out.push_back(i);
    return out;
}

size_t Space::assignment_count(const std::vector<VarId>& vars) const {
    size_t n = 1;
    for (VarId v : vars) n *= domain_size(v);
    return n;
}

DomainIter::DomainIter(const Space& sp, const std::vector<VarId>& vars, Assignment& a)
    : sp_(sp), vars_(vars), a_(a), valid_(true) {
    saved_.reserve(vars_.size());
    for (VarId v : vars_) {
        saved_.push_back(a_[v]);
        a_[v] = 0;
    }
}

DomainIter::~DomainIter() {
    for (size_t i = 0; i < vars_.size(); ++i) a_[vars_[i]] = saved_[i];
}

void DomainIter::next() {
    // Mixed-radix increment, last variable fastest (row-major order).
    for (size_t i = vars_.size(); i-- > 0;) {
        VarId v = vars_[i];
        if (++a_[v] < static_cast<int32_t>(sp_.domain_size(v))) return;
        a_[v] = 0;
    }
    valid_ = false;
}

size_t DomainIter::count() const { return sp_.assignment_count(vars_); }

ScopedFunction::ScopedFunction(SpacePtr space, std::vector<VarId> scope, Codomain codomain,
                               std::vector<Value> table)
    : space_(std::move(space)), scope_(std::move(scope)), codomain_(codomain), table_(std::move(table)) {
    std::set<VarId> distinct(scope_.begin(), scope_.end());
    if (distinct.size() != scope_.size()) throw DomainError("scoped function with repeated scope variable");
    strides_.assign(scope_.size(), 1);
    size_t expect = 1;
    for (size_t i = scope_.size(); i-- > 0;) {
        strides_[i] = expect;
        expect *= space_->domain_size(scope_[i]);
    }
    if (table_.size() != expect)
        throw DomainError("table size " + std::to_string(table_.size()) + " does not match scope (expected " +
                          std::to_string(expect) + ")");
}

ScopedFunction ScopedFunction::constant(SpacePtr space, Codomain codomain, Value v) {
    return ScopedFunction(std::move(space), {}, codomain, {std::move(v)});
}

size_t ScopedFunction::index_of(const Assignment& a) const {
    size_t idx = 0;
    for (size_t i = 0; i < scope_.size(); ++i) {
        int32_t lab = a[scope_[i]];
        if (lab < 0) throw DomainError("assignment does not bind scope variable " +
                                       space_->var(scope_[i]).name);
        idx += strides_[i] * static_cast<size_t>(lab);
    }
    return idx;
}

const Value& ScopedFunction::at(const Assignment& a) const { return table_[index_of(a)]; }

void ScopedFunction::assignment_of(size_t index, Assignment& a) const {
    for (size_t i = 0; i < scope_.size(); ++i) {
        a[scope_[i]] = static_cast<int32_t>(index / strides_[i] % space_->domain_size(scope_[i]));
    }
}

bool ScopedFunction::scope_contains(VarId v) const {
    return std::find(scope_.begin(), scope_.end(), v) != scope_.end();
}

ScopedFunction combine(const ScopedFunction& f1, const ScopedFunction& f2, const BinaryOp& op,
                       Codomain out) {
    if (f1.space() != f2.space()) throw DomainError("combine over different spaces");
    const Space& sp = *f1.space();
    std::vector<VarId> scope = f1.scope();
    for (VarId v : f2.scope())
        if (std::find(scope.begin(), scope.end(), v) == scope.end()) scope.push_back(v);

    std::vector<Value> table;
    table.reserve(sp.assignment_count(scope));
    Assignment a = empty_assignment(sp);
    for (DomainIter it(sp, scope, a); it.valid(); it.next())
        table.push_back(comb_apply(op, f1.at(a), f2.at(a)));
    return ScopedFunction(f1.space(), std::move(scope), out, std::move(table));
}

namespace {

// n-fold elimination of a single value with itself (domain multiplicity of
// variables eliminated outside the scope).
Value fold_copies(const BinaryOp& op, const Value& v, size_t n) {
    if (v.is_unfeasible()) return v;
    Value acc = v;
    for (size_t i = 1; i < n; ++i) acc = op(acc, v);
    return acc;
}

}  // namespace

Value eliminate_at(const ScopedFunction& fn, const std::vector<VarId>& elim_vars,
                   const BinaryOp& op, Assignment& a) {
    const Space& sp = *fn.space();
    std::vector<VarId> in_scope, outside;
    for (VarId v : elim_vars)
        (fn.scope_contains(v) ? in_scope : outside).push_back(v);
    size_t multiplicity = sp.assignment_count(outside);

    Value acc = Value::unfeasible();
    for (DomainIter it(sp, in_scope, a); it.valid(); it.next()) {
        acc = elim_apply(op, acc, fold_copies(op, fn.at(a), multiplicity));
    }
    return acc;
}

ScopedFunction eliminate(const ScopedFunction& f, const std::vector<VarId>& elim_vars,
                         const BinaryOp& op) {
    const Space& sp = *f.space();
    std::vector<VarId> kept;
    for (VarId v : f.scope())
        if (std::find(elim_vars.begin(), elim_vars.end(), v) == elim_vars.end()) kept.push_back(v);

    std::vector<Value> table;
    table.reserve(sp.assignment_count(kept));
    Assignment a = empty_assignment(sp);
    for (DomainIter it(sp, kept, a); it.valid(); it.next())
        table.push_back(eliminate_at(f, elim_vars, op, a));
    return ScopedFunction(f.space(), std::move(kept), f.codomain(), std::move(table));
}

}  // namespace pfu
