#include "pfu/value.hpp"

#include <charconv>
#include <variant>

namespace pfu {

std::string Number::to_string() const {
    if (is_pos_inf()) return "inf";
    if (is_neg_inf()) return "-inf";
    std::string s = numerator(q_).str();
    if (denominator(q_) != 1) {
        s += "/";
        s += denominator(q_).str();
    }
    return s;
}

Value Value::pair(Value first, Value second) {
    return Value(std::make_shared<const std::pair<Value, Value>>(std::move(first), std::move(second)));
}

Value::Kind Value::kind() const {
    switch (payload_.index()) {
        case 0: return Kind::Unfeasible;
        case 1: return Kind::Bool;
        case 2: return Kind::Num;
        default: return Kind::Pair;
    }
}

bool Value::as_bool() const {
    if (!is_bool()) throw DomainError("value is not a boolean: " + to_string());
    return std::get<BoolBox>(payload_).v;
}

const Number& Value::as_number() const {
    if (!is_number()) throw DomainError("value is not a number: " + to_string());
    return std::get<Number>(payload_);
}

const Value& Value::first() const {
    if (!is_pair()) throw DomainError("value is not a pair: " + to_string());
    return std::get<PairPtr>(payload_)->first;
}

const Value& Value::second() const {
    if (!is_pair()) throw DomainError("value is not a pair: " + to_string());
    return std::get<PairPtr>(payload_)->second;
}

bool Value::operator==(const Value& o) const {
    if (payload_.index() != o.payload_.index()) return false;
    switch (kind()) {
        case Kind::Unfeasible: return true;
        case Kind::Bool: return as_bool() == o.as_bool();
        case Kind::Num: return as_number() == o.as_number();
        case Kind::Pair: return first() == o.first() && second() == o.second();
    }
    return false;
}

std::string Value::to_string() const {
    switch (kind()) {
        case Kind::Unfeasible: return "unfeasible";
        case Kind::Bool: return as_bool() ? "true" : "false";
        case Kind::Num: return as_number().to_string();
        case Kind::Pair: return "[" + first().to_string() + "," + second().to_string() + "]";
    }
    return {};
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

Rational parse_integer(std::string_view s) {
    if (s.empty()) throw ParseError("empty number literal");
    bool neg = false;
    if (s.front() == '-' || s.front() == '+') {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw ParseError("dangling sign in number literal");
    boost::multiprecision::cpp_int v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw ParseError("bad digit in number literal: " + std::string(s));
        v = v * 10 + (c - '0');
    }
    return neg ? Rational(-v) : Rational(v);
}

// Splits "[a,b]" at the top-level comma.
size_t top_level_comma(std::string_view inner) {
    int depth = 0;
    for (size_t i = 0; i < inner.size(); ++i) {
        if (inner[i] == '[') ++depth;
        if (inner[i] == ']') --depth;
        if (inner[i] == ',' && depth == 0) return i;
    }
    throw ParseError("pair literal missing comma: [" + std::string(inner) + "]");
}

}  // namespace

Value Value::parse(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) throw ParseError("empty value literal");
    if (s == "unfeasible" || s == "\"unfeasible\"") return Value::unfeasible();
    if (s == "true") return Value::boolean(true);
    if (s == "false") return Value::boolean(false);
    if (s == "inf") return Value::number(Number::pos_inf());
    if (s == "-inf") return Value::number(Number::neg_inf());
    if (s.front() == '[') {
        if (s.back() != ']') throw ParseError("unterminated pair literal: " + std::string(s));
        std::string_view inner = s.substr(1, s.size() - 2);
        size_t cut = top_level_comma(inner);
        return Value::pair(parse(inner.substr(0, cut)), parse(inner.substr(cut + 1)));
    }
    size_t slash = s.find('/');
    if (slash == std::string_view::npos) return Value::number(Number(parse_integer(s)));
    Rational num = parse_integer(trim(s.substr(0, slash)));
    Rational den = parse_integer(trim(s.substr(slash + 1)));
    if (den == 0) throw ParseError("zero denominator: " + std::string(s));
    return Value::number(Number(num / den));
}

}  // namespace pfu
