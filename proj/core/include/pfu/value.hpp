#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pfu {

using Rational = boost::multiprecision::cpp_rational;

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class CapExceededError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Exact extended rational: a finite rational in lowest terms, or one of the
/// two infinities. Addition lets -inf dominate (u + (-inf) = -inf) and
/// multiplication uses the 0 * inf = 0 convention, which is what the
/// plausibility/utility combinations require.
class Number {
public:
    Number() : state_(State::Finite) {}
    Number(long long v) : state_(State::Finite), q_(v) {}
    Number(Rational q) : state_(State::Finite), q_(std::move(q)) {}
    Number(long long num, long long den) : state_(State::Finite), q_(Rational(num, den)) {}

    static Number pos_inf() { return Number(State::PosInf); }
    static Number neg_inf() { return Number(State::NegInf); }

    bool is_finite() const { return state_ == State::Finite; }
    bool is_pos_inf() const { return state_ == State::PosInf; }
    bool is_neg_inf() const { return state_ == State::NegInf; }
    bool is_zero() const { return is_finite() && q_ == 0; }

    /// Finite payload; only valid when is_finite().
    const Rational& rational() const { return q_; }

    friend Number operator+(const Number& a, const Number& b) {
        if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
        if (a.is_pos_inf() || b.is_pos_inf()) return pos_inf();
        return Number(a.q_ + b.q_);
    }
    friend Number operator-(const Number& a, const Number& b) {
        if (a.is_pos_inf() && !b.is_pos_inf()) return pos_inf();
        if (a.is_neg_inf() && !b.is_neg_inf()) return neg_inf();
        if (a.is_finite() && b.is_pos_inf()) return neg_inf();
        if (a.is_finite() && b.is_neg_inf()) return pos_inf();
        if (!a.is_finite() || !b.is_finite())
            throw DomainError("indeterminate difference of infinities");
        return Number(a.q_ - b.q_);
    }
    friend Number operator*(const Number& a, const Number& b) {
        if (a.is_zero() || b.is_zero()) return Number(0);
        int sa = a.sign(), sb = b.sign();
        if (!a.is_finite() || !b.is_finite())
            return sa * sb > 0 ? pos_inf() : neg_inf();
        return Number(a.q_ * b.q_);
    }
    friend Number operator/(const Number& a, const Number& b) {
        if (!a.is_finite() || !b.is_finite() || b.is_zero())
            throw DomainError("division requires finite operands and nonzero divisor");
        return Number(a.q_ / b.q_);
    }

    int sign() const {
        if (is_pos_inf()) return 1;
        if (is_neg_inf()) return -1;
        return q_.sign();
    }

    friend bool operator==(const Number& a, const Number& b) {
        return a.state_ == b.state_ && (a.state_ != State::Finite || a.q_ == b.q_);
    }
    friend bool operator<(const Number& a, const Number& b) {
        if (a.state_ != b.state_) {
            if (a.is_neg_inf()) return true;
            if (b.is_neg_inf()) return false;
            return b.is_pos_inf();
        }
        return a.state_ == State::Finite && a.q_ < b.q_;
    }
    friend bool operator<=(const Number& a, const Number& b) { return a < b || a == b; }
    friend bool operator!=(const Number& a, const Number& b) { return !(a == b); }

    std::string to_string() const;

private:
    enum class State : uint8_t { Finite, PosInf, NegInf };
    explicit Number(State s) : state_(s) {}

    State state_;
    Rational q_;
};

inline Number min(const Number& a, const Number& b) { return a < b ? a : b; }
inline Number max(const Number& a, const Number& b) { return a < b ? b : a; }

/// A value that can live in a plausibility, feasibility, or utility domain:
/// a boolean, an extended rational, a pair (for product structures), or the
/// out-of-domain marker produced by truncation.
class Value {
public:
    enum class Kind : uint8_t { Unfeasible, Bool, Num, Pair };

    Value() : payload_(Number(0)) {}
    Value(bool) = delete;  // force the named constructors; bool converts too eagerly

    static Value unfeasible() { return Value(UnfeasibleTag{}); }
    static Value boolean(bool b) { return Value(BoolBox{b}); }
    static Value number(Number n) { return Value(std::move(n)); }
    static Value number(long long v) { return Value(Number(v)); }
    static Value rational(long long num, long long den) { return Value(Number(num, den)); }
    static Value pair(Value first, Value second);

    Kind kind() const;
    bool is_unfeasible() const { return kind() == Kind::Unfeasible; }
    bool is_bool() const { return kind() == Kind::Bool; }
    bool is_number() const { return kind() == Kind::Num; }
    bool is_pair() const { return kind() == Kind::Pair; }

    bool as_bool() const;
    const Number& as_number() const;
    const Value& first() const;
    const Value& second() const;

    bool operator==(const Value& o) const;
    bool operator!=(const Value& o) const { return !(*this == o); }

    /// Renders the value literal grammar: integer, a/b, inf, -inf,
    /// true, false, [v1,v2], unfeasible.
    std::string to_string() const;

    /// Parses the same grammar ("unfeasible" included).
    static Value parse(std::string_view text);

private:
    struct UnfeasibleTag {
        bool operator==(const UnfeasibleTag&) const { return true; }
    };
    struct BoolBox {
        bool v;
        bool operator==(const BoolBox& o) const { return v == o.v; }
    };
    using PairPtr = std::shared_ptr<const std::pair<Value, Value>>;

    template <typename T>
    explicit Value(T payload) : payload_(std::move(payload)) {}

    std::variant<UnfeasibleTag, BoolBox, Number, PairPtr> payload_;
};

}  // namespace pfu
