#include "pfu/algebra.hpp"

#include <sstream>

namespace pfu {

Value elim_apply(const BinaryOp& op, const Value& a, const Value& b) {
    if (a.is_unfeasible()) return b;
    if (b.is_unfeasible()) return a;
    return op(a, b);
}

Value comb_apply(const BinaryOp& op, const Value& a, const Value& b) {
    if (a.is_unfeasible() || b.is_unfeasible()) return Value::unfeasible();
    return op(a, b);
}

namespace {

const Number& num(const Value& v) { return v.as_number(); }

BinaryOp op_add() {
    return {"+", [](const Value& a, const Value& b) { return Value::number(num(a) + num(b)); }};
}
BinaryOp op_mul() {
    return {"*", [](const Value& a, const Value& b) { return Value::number(num(a) * num(b)); }};
}
BinaryOp op_min() {
    return {"min", [](const Value& a, const Value& b) { return Value::number(min(num(a), num(b))); }};
}
BinaryOp op_max() {
    return {"max", [](const Value& a, const Value& b) { return Value::number(max(num(a), num(b))); }};
}
BinaryOp op_or() {
    return {"or", [](const Value& a, const Value& b) { return Value::boolean(a.as_bool() || b.as_bool()); }};
}
BinaryOp op_and() {
    return {"and", [](const Value& a, const Value& b) { return Value::boolean(a.as_bool() && b.as_bool()); }};
}
BinaryOp op_implies() {
    return {"implies", [](const Value& a, const Value& b) { return Value::boolean(!a.as_bool() || b.as_bool()); }};
}
// Row 4's mixed operator max(1-p, u).
BinaryOp op_pess_pu() {
    return {"pess-pu", [](const Value& a, const Value& b) {
                return Value::number(max(Number(1) - num(a), num(b)));
            }};
}

OrderFn numeric_leq() {
    return [](const Value& a, const Value& b) { return num(a) <= num(b); };
}
OrderFn numeric_geq() {
    return [](const Value& a, const Value& b) { return num(b) <= num(a); };
}
OrderFn bool_leq() {
    return [](const Value& a, const Value& b) { return !a.as_bool() || b.as_bool(); };
}

MemberFn nonneg_rational() {
    return [](const Value& v) { return v.is_number() && v.as_number().is_finite() && v.as_number().sign() >= 0; };
}
MemberFn unit_interval() {
    return [](const Value& v) {
        if (!v.is_number() || !v.as_number().is_finite()) return false;
        const Rational& q = v.as_number().rational();
        return q >= 0 && q <= 1;
    };
}
MemberFn natural_or_inf() {
    return [](const Value& v) {
        if (!v.is_number()) return false;
        const Number& n = v.as_number();
        if (n.is_pos_inf()) return true;
        return n.is_finite() && n.sign() >= 0 && denominator(n.rational()) == 1;
    };
}
MemberFn real_or_neg_inf() {
    return [](const Value& v) {
        return v.is_number() && !v.as_number().is_pos_inf();
    };
}
MemberFn boolean_member() {
    return [](const Value& v) { return v.is_bool(); };
}

SampleFn sample_nonneg(long long max_num, long long max_den) {
    return [max_num, max_den](Rng& rng) {
        std::uniform_int_distribution<long long> dn(0, max_num), dd(1, max_den);
        return Value::rational(dn(rng), dd(rng));
    };
}
SampleFn sample_unit() {
    return [](Rng& rng) {
        std::uniform_int_distribution<long long> dd(1, 8);
        long long den = dd(rng);
        std::uniform_int_distribution<long long> dn(0, den);
        return Value::rational(dn(rng), den);
    };
}
SampleFn sample_natural_or_inf() {
    return [](Rng& rng) {
        std::uniform_int_distribution<int> d(0, 11);
        int v = d(rng);
        if (v == 11) return Value::number(Number::pos_inf());
        return Value::number(v);
    };
}
SampleFn sample_real_or_neg_inf() {
    return [](Rng& rng) {
        std::uniform_int_distribution<int> pick(0, 9);
        if (pick(rng) == 0) return Value::number(Number::neg_inf());
        std::uniform_int_distribution<long long> dn(-20, 20), dd(1, 5);
        return Value::rational(dn(rng), dd(rng));
    };
}
SampleFn sample_bool() {
    return [](Rng& rng) {
        std::uniform_int_distribution<int> d(0, 1);
        return Value::boolean(d(rng) == 1);
    };
}

std::vector<Value> bool_enum() { return {Value::boolean(false), Value::boolean(true)}; }

// Conditioning closures implementing max{p | num = p ⊗_p den} per family.
std::function<Value(const Value&, const Value&)> cond_prob() {
    return [](const Value& n, const Value& d) { return Value::number(num(n) / num(d)); };
}
std::function<Value(const Value&, const Value&)> cond_poss() {
    // num < den -> num, num = den -> 1  (min-based possibilistic conditioning)
    return [](const Value& n, const Value& d) {
        return num(n) < num(d) ? n : Value::number(1);
    };
}
std::function<Value(const Value&, const Value&)> cond_kappa() {
    return [](const Value& n, const Value& d) {
        if (num(n).is_pos_inf()) return Value::number(Number::pos_inf());
        return Value::number(num(n) - num(d));
    };
}
std::function<Value(const Value&, const Value&)> cond_bool() {
    // den = t, so max{p | p and t = num} = num.
    return [](const Value& n, const Value&) { return n; };
}

PlausibilityStructure plaus_prob() {
    PlausibilityStructure p;
    p.elim = op_add();
    p.comb = op_mul();
    p.zero = Value::number(0);
    p.one = Value::number(1);
    p.leq = numeric_leq();
    p.conditionable = true;
    p.member = nonneg_rational();
    p.sample = sample_nonneg(24, 8);
    p.cond = cond_prob();
    p.uniform_of = [](size_t n) { return Value::rational(1, static_cast<long long>(n)); };
    return p;
}

PlausibilityStructure plaus_poss() {
    PlausibilityStructure p;
    p.elim = op_max();
    p.comb = op_min();
    p.zero = Value::number(0);
    p.one = Value::number(1);
    p.leq = numeric_leq();
    p.conditionable = true;
    p.member = unit_interval();
    p.sample = sample_unit();
    p.cond = cond_poss();
    p.uniform_of = [](size_t) { return Value::number(1); };
    return p;
}

PlausibilityStructure plaus_kappa() {
    PlausibilityStructure p;
    p.elim = op_min();
    p.comb = op_add();
    p.zero = Value::number(Number::pos_inf());
    p.one = Value::number(0);
    p.leq = numeric_geq();  // higher surprise degree = less plausible
    p.conditionable = true;
    p.member = natural_or_inf();
    p.sample = sample_natural_or_inf();
    p.cond = cond_kappa();
    p.uniform_of = [](size_t) { return Value::number(0); };
    return p;
}

PlausibilityStructure plaus_bool() {
    PlausibilityStructure p;
    p.elim = op_or();
    p.comb = op_and();
    p.zero = Value::boolean(false);
    p.one = Value::boolean(true);
    p.leq = bool_leq();
    p.conditionable = true;
    p.member = boolean_member();
    p.sample = sample_bool();
    p.enumeration = bool_enum();
    p.cond = cond_bool();
    p.uniform_of = [](size_t) { return Value::boolean(true); };
    return p;
}

UtilityStructure util(BinaryOp comb, Value one, OrderFn leq, MemberFn member, SampleFn sample,
                      std::optional<std::vector<Value>> enumeration = std::nullopt) {
    UtilityStructure u;
    u.comb = std::move(comb);
    u.one = std::move(one);
    u.leq = std::move(leq);
    u.member = std::move(member);
    u.sample = std::move(sample);
    u.enumeration = std::move(enumeration);
    return u;
}

StructurePtr make_row(const std::string& id, PlausibilityStructure p, UtilityStructure u,
                      BinaryOp elim_u, Value zero_u, BinaryOp comb_pu, bool ax1, bool ax2) {
    auto s = std::make_shared<ExpectedUtilityStructure>();
    s->id = id;
    s->plaus = std::move(p);
    s->util = std::move(u);
    s->elim_u = std::move(elim_u);
    s->zero_u = std::move(zero_u);
    s->comb_pu = std::move(comb_pu);
    s->ax1 = ax1;
    s->ax2 = ax2;
    return s;
}

}  // namespace

StructurePtr builtin_structure(const std::string& id) {
    if (id == "prob-additive") {
        // Row 1: probabilistic expected additive utility, E_u = R u {-inf}.
        return make_row(id, plaus_prob(),
                        util(op_add(), Value::number(0), numeric_leq(), real_or_neg_inf(),
                             sample_real_or_neg_inf()),
                        op_add(), Value::number(0), op_mul(), false, true);
    }
    if (id == "prob-sat") {
        // Row 2: probabilistic expected satisfaction.
        return make_row(id, plaus_prob(),
                        util(op_mul(), Value::number(1), numeric_leq(), nonneg_rational(),
                             sample_nonneg(24, 8)),
                        op_add(), Value::number(0), op_mul(), true, false);
    }
    if (id == "poss-optimistic") {
        // Row 3.
        return make_row(id, plaus_poss(),
                        util(op_min(), Value::number(1), numeric_leq(), unit_interval(), sample_unit()),
                        op_max(), Value::number(0), op_min(), true, false);
    }
    if (id == "poss-pessimistic") {
        // Row 4.
        return make_row(id, plaus_poss(),
                        util(op_min(), Value::number(1), numeric_leq(), unit_interval(), sample_unit()),
                        op_min(), Value::number(1), op_pess_pu(), false, true);
    }
    if (id == "kappa") {
        // Row 5: qualitative utility with kappa-rankings.
        return make_row(id, plaus_kappa(),
                        util(op_add(), Value::number(0), numeric_geq(), natural_or_inf(),
                             sample_natural_or_inf()),
                        op_min(), Value::number(Number::pos_inf()), op_add(), true, false);
    }
    if (id == "bool-opt-conj") {
        // Row 6.
        return make_row(id, plaus_bool(),
                        util(op_and(), Value::boolean(true), bool_leq(), boolean_member(),
                             sample_bool(), bool_enum()),
                        op_or(), Value::boolean(false), op_and(), true, false);
    }
    if (id == "bool-pess-conj") {
        // Row 7.
        return make_row(id, plaus_bool(),
                        util(op_and(), Value::boolean(true), bool_leq(), boolean_member(),
                             sample_bool(), bool_enum()),
                        op_and(), Value::boolean(true), op_implies(), false, true);
    }
    if (id == "bool-opt-disj") {
        // Row 8.
        return make_row(id, plaus_bool(),
                        util(op_or(), Value::boolean(false), bool_leq(), boolean_member(),
                             sample_bool(), bool_enum()),
                        op_or(), Value::boolean(false), op_and(), false, true);
    }
    if (id == "bool-pess-disj") {
        // Row 9.
        return make_row(id, plaus_bool(),
                        util(op_or(), Value::boolean(false), bool_leq(), boolean_member(),
                             sample_bool(), bool_enum()),
                        op_and(), Value::boolean(true), op_implies(), false, false);
    }
    throw DomainError("unknown structure id: " + id);
}

namespace {

BinaryOp pairwise(const std::string& name, const BinaryOp& fa, const BinaryOp& fb) {
    return {name, [fa, fb](const Value& x, const Value& y) {
                return Value::pair(fa(x.first(), y.first()), fb(x.second(), y.second()));
            }};
}

OrderFn pairwise_leq(const OrderFn& la, const OrderFn& lb) {
    return [la, lb](const Value& x, const Value& y) {
        return la(x.first(), y.first()) && lb(x.second(), y.second());
    };
}

MemberFn pairwise_member(const MemberFn& ma, const MemberFn& mb) {
    return [ma, mb](const Value& v) {
        return v.is_pair() && ma(v.first()) && mb(v.second());
    };
}

SampleFn pairwise_sample(const SampleFn& sa, const SampleFn& sb) {
    return [sa, sb](Rng& rng) {
        Value a = sa(rng);
        return Value::pair(std::move(a), sb(rng));
    };
}

std::optional<std::vector<Value>> pairwise_enum(const std::optional<std::vector<Value>>& ea,
                                                const std::optional<std::vector<Value>>& eb) {
    if (!ea || !eb) return std::nullopt;
    std::vector<Value> out;
    for (const Value& a : *ea)
        for (const Value& b : *eb) out.push_back(Value::pair(a, b));
    return out;
}

}  // namespace

StructurePtr product_structure(const StructurePtr& a, const StructurePtr& b) {
    auto s = std::make_shared<ExpectedUtilityStructure>();
    s->id = "product(" + a->id + "," + b->id + ")";

    PlausibilityStructure& p = s->plaus;
    p.elim = pairwise("⊕_p-pair", a->plaus.elim, b->plaus.elim);
    p.comb = pairwise("⊗_p-pair", a->plaus.comb, b->plaus.comb);
    p.zero = Value::pair(a->plaus.zero, b->plaus.zero);
    p.one = Value::pair(a->plaus.one, b->plaus.one);
    p.leq = pairwise_leq(a->plaus.leq, b->plaus.leq);
    p.conditionable = a->plaus.conditionable && b->plaus.conditionable;
    p.member = pairwise_member(a->plaus.member, b->plaus.member);
    p.sample = pairwise_sample(a->plaus.sample, b->plaus.sample);
    p.enumeration = pairwise_enum(a->plaus.enumeration, b->plaus.enumeration);
    if (p.conditionable) {
        auto ca = a->plaus.cond, cb = b->plaus.cond;
        p.cond = [ca, cb](const Value& n, const Value& d) {
            return Value::pair(ca(n.first(), d.first()), cb(n.second(), d.second()));
        };
        auto ua = a->plaus.uniform_of, ub = b->plaus.uniform_of;
        p.uniform_of = [ua, ub](size_t n) { return Value::pair(ua(n), ub(n)); };
    }

    UtilityStructure& u = s->util;
    u.comb = pairwise("⊗_u-pair", a->util.comb, b->util.comb);
    u.one = Value::pair(a->util.one, b->util.one);
    u.leq = pairwise_leq(a->util.leq, b->util.leq);
    u.total_order = false;  // componentwise order is only partial
    u.member = pairwise_member(a->util.member, b->util.member);
    u.sample = pairwise_sample(a->util.sample, b->util.sample);
    u.enumeration = pairwise_enum(a->util.enumeration, b->util.enumeration);

    s->elim_u = pairwise("⊕_u-pair", a->elim_u, b->elim_u);
    s->zero_u = Value::pair(a->zero_u, b->zero_u);
    s->comb_pu = pairwise("⊗_pu-pair", a->comb_pu, b->comb_pu);
    s->ax1 = a->ax1 && b->ax1;
    s->ax2 = a->ax2 && b->ax2;
    return s;
}

StructurePtr parse_structure_id(const std::string& text) {
    std::string s = text;
    // trim
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
    if (s.rfind("product(", 0) == 0 && s.back() == ')') {
        std::string inner = s.substr(8, s.size() - 9);
        int depth = 0;
        for (size_t i = 0; i < inner.size(); ++i) {
            if (inner[i] == '(') ++depth;
            if (inner[i] == ')') --depth;
            if (inner[i] == ',' && depth == 0) {
                return product_structure(parse_structure_id(inner.substr(0, i)),
                                         parse_structure_id(inner.substr(i + 1)));
            }
        }
        throw ParseError("malformed product structure id: " + text);
    }
    return builtin_structure(s);
}

Value cond_div(const Value& numv, const Value& denv, const PlausibilityStructure& s) {
    if (!s.conditionable) throw PreconditionError("structure is not conditionable");
    if (denv == s.zero) throw PreconditionError("undefined conditioning: denominator is 0_p");
    if (!s.leq(numv, denv))
        throw DomainError("conditioning requires num ⪯_p den, got " + numv.to_string() + " vs " +
                          denv.to_string());
    return s.cond(numv, denv);
}

Value uniform(size_t n, const PlausibilityStructure& s) {
    if (!s.conditionable) throw PreconditionError("uniform element requires a conditionable structure");
    if (n == 0) throw DomainError("uniform element requires n >= 1");
    return s.uniform_of(n);
}

Value truncate(const Value& b, const Value& e) {
    return b.as_bool() ? e : Value::unfeasible();
}

bool AxiomReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

std::string AxiomReport::summary() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.passed ? "pass" : "FAIL") << "  " << c.axiom;
        if (!c.passed) os << "  [" << c.counterexample << "]";
        os << "\n";
    }
    return os.str();
}

namespace {

// Draws tuples either from the exhaustive enumeration (finite domains) or
// from the seeded sampler.
struct TupleSource {
    const std::optional<std::vector<Value>>* enum_p;
    const std::optional<std::vector<Value>>* enum_u;
    SampleFn sample_p, sample_u;
    size_t n_samples;
    Rng rng;

    template <typename Fn>  // Fn(p1,p2,p3,u1,u2,u3)
    void for_each(Fn&& fn) {
        if (*enum_p && *enum_u) {
            for (const Value& p1 : **enum_p)
                for (const Value& p2 : **enum_p)
                    for (const Value& p3 : **enum_p)
                        for (const Value& u1 : **enum_u)
                            for (const Value& u2 : **enum_u)
                                for (const Value& u3 : **enum_u) fn(p1, p2, p3, u1, u2, u3);
            return;
        }
        for (size_t i = 0; i < n_samples; ++i) {
            Value p1 = sample_p(rng), p2 = sample_p(rng), p3 = sample_p(rng);
            Value u1 = sample_u(rng), u2 = sample_u(rng), u3 = sample_u(rng);
            fn(p1, p2, p3, u1, u2, u3);
        }
    }
};

std::string tuple_str(std::initializer_list<const Value*> vs) {
    std::string s;
    for (const Value* v : vs) {
        if (!s.empty()) s += ", ";
        s += v->to_string();
    }
    return s;
}

}  // namespace

AxiomReport check_axioms(const ExpectedUtilityStructure& s, size_t n_samples, uint64_t seed) {
    AxiomReport report;
    auto record = [&report](const std::string& name) -> AxiomCheck& {
        report.checks.push_back({name, true, ""});
        return report.checks.back();
    };

    AxiomCheck& p_elim_comm = record("⊕_p commutative");
    AxiomCheck& p_elim_assoc = record("⊕_p associative");
    AxiomCheck& p_elim_ident = record("⊕_p identity 0_p");
    AxiomCheck& p_comb_comm = record("⊗_p commutative");
    AxiomCheck& p_comb_assoc = record("⊗_p associative");
    AxiomCheck& p_comb_ident = record("⊗_p identity 1_p");
    AxiomCheck& p_annihilate = record("0_p annihilates ⊗_p");
    AxiomCheck& p_distrib = record("⊗_p distributes over ⊕_p");
    AxiomCheck& p_zero_min = record("0_p = min(E_p)");
    AxiomCheck& p_elim_mono = record("⊕_p monotonic");
    AxiomCheck& p_comb_mono = record("⊗_p monotonic");
    AxiomCheck& u_comb_comm = record("⊗_u commutative");
    AxiomCheck& u_comb_assoc = record("⊗_u associative");
    AxiomCheck& u_comb_ident = record("⊗_u identity 1_u");
    AxiomCheck& u_elim_comm = record("⊕_u commutative");
    AxiomCheck& u_elim_assoc = record("⊕_u associative");
    AxiomCheck& u_elim_ident = record("⊕_u identity 0_u");
    AxiomCheck& pu_dist_u = record("⊗_pu distributes over ⊕_u");
    AxiomCheck& pu_dist_p = record("⊗_pu distributes over ⊕_p");
    AxiomCheck& pu_linear = record("⊗_pu linearity");
    AxiomCheck& pu_zero = record("0_p ⊗_pu u = 0_u");
    AxiomCheck& pu_one = record("1_p ⊗_pu u = u");
    AxiomCheck& u_elim_mono = record("⊕_u monotonic");
    AxiomCheck& pu_right_mono = record("⊗_pu right monotonic");

    auto fail = [](AxiomCheck& c, const std::string& cex) {
        if (c.passed) {
            c.passed = false;
            c.counterexample = cex;
        }
    };

    const PlausibilityStructure& P = s.plaus;
    const UtilityStructure& U = s.util;

    TupleSource src{&P.enumeration, &U.enumeration, P.sample, U.sample, n_samples, Rng(seed)};
    src.for_each([&](const Value& p1, const Value& p2, const Value& p3, const Value& u1,
                     const Value& u2, const Value& u3) {
        // plausibility semiring
        if (P.elim(p1, p2) != P.elim(p2, p1)) fail(p_elim_comm, tuple_str({&p1, &p2}));
        if (P.elim(P.elim(p1, p2), p3) != P.elim(p1, P.elim(p2, p3)))
            fail(p_elim_assoc, tuple_str({&p1, &p2, &p3}));
        if (P.elim(p1, P.zero) != p1) fail(p_elim_ident, tuple_str({&p1}));
        if (P.comb(p1, p2) != P.comb(p2, p1)) fail(p_comb_comm, tuple_str({&p1, &p2}));
        if (P.comb(P.comb(p1, p2), p3) != P.comb(p1, P.comb(p2, p3)))
            fail(p_comb_assoc, tuple_str({&p1, &p2, &p3}));
        if (P.comb(p1, P.one) != p1) fail(p_comb_ident, tuple_str({&p1}));
        if (P.comb(p1, P.zero) != P.zero) fail(p_annihilate, tuple_str({&p1}));
        if (P.comb(p1, P.elim(p2, p3)) != P.elim(P.comb(p1, p2), P.comb(p1, p3)))
            fail(p_distrib, tuple_str({&p1, &p2, &p3}));
        if (!P.leq(P.zero, p1)) fail(p_zero_min, tuple_str({&p1}));
        if (P.leq(p1, p2)) {
            if (!P.leq(P.elim(p1, p3), P.elim(p2, p3))) fail(p_elim_mono, tuple_str({&p1, &p2, &p3}));
            if (!P.leq(P.comb(p1, p3), P.comb(p2, p3))) fail(p_comb_mono, tuple_str({&p1, &p2, &p3}));
        }
        // utility monoid
        if (U.comb(u1, u2) != U.comb(u2, u1)) fail(u_comb_comm, tuple_str({&u1, &u2}));
        if (U.comb(U.comb(u1, u2), u3) != U.comb(u1, U.comb(u2, u3)))
            fail(u_comb_assoc, tuple_str({&u1, &u2, &u3}));
        if (U.comb(u1, U.one) != u1) fail(u_comb_ident, tuple_str({&u1}));
        // semimodule
        if (s.elim_u(u1, u2) != s.elim_u(u2, u1)) fail(u_elim_comm, tuple_str({&u1, &u2}));
        if (s.elim_u(s.elim_u(u1, u2), u3) != s.elim_u(u1, s.elim_u(u2, u3)))
            fail(u_elim_assoc, tuple_str({&u1, &u2, &u3}));
        if (s.elim_u(u1, s.zero_u) != u1) fail(u_elim_ident, tuple_str({&u1}));
        if (s.comb_pu(p1, s.elim_u(u1, u2)) != s.elim_u(s.comb_pu(p1, u1), s.comb_pu(p1, u2)))
            fail(pu_dist_u, tuple_str({&p1, &u1, &u2}));
        if (s.comb_pu(P.elim(p1, p2), u1) != s.elim_u(s.comb_pu(p1, u1), s.comb_pu(p2, u1)))
            fail(pu_dist_p, tuple_str({&p1, &p2, &u1}));
        if (s.comb_pu(p1, s.comb_pu(p2, u1)) != s.comb_pu(P.comb(p1, p2), u1))
            fail(pu_linear, tuple_str({&p1, &p2, &u1}));
        if (s.comb_pu(P.zero, u1) != s.zero_u) fail(pu_zero, tuple_str({&u1}));
        if (s.comb_pu(P.one, u1) != u1) fail(pu_one, tuple_str({&u1}));
        if (U.leq(u1, u2)) {
            if (!U.leq(s.elim_u(u1, u3), s.elim_u(u2, u3))) fail(u_elim_mono, tuple_str({&u1, &u2, &u3}));
            if (!U.leq(s.comb_pu(p1, u1), s.comb_pu(p1, u2)))
                fail(pu_right_mono, tuple_str({&p1, &u1, &u2}));
        }
    });
    return report;
}

}  // namespace pfu
