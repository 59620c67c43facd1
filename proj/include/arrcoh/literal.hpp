#pragma once

// Text literals for cyclotomic numbers.
//
//   expr := term (('+'|'-') term)*
//   term := rat ('*' pow)? | pow
//   pow  := 'z' ('^' uint)? | 'i'
//   rat  := int ('/' uint)?
//
// 'i' stands for z^{N/4} and needs 4 | N. Whitespace is ignored. A leading
// sign directly in front of a pow is also accepted ("-z").

#include <cctype>
#include <string>
#include <string_view>

#include "arrcoh/cyclo.hpp"

namespace arrcoh {

namespace detail {

class LiteralParser {
public:
    LiteralParser(std::string_view text, const FieldPtr& field) : field_(field) {
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
    }

    CycloNum parse() {
        if (s_.empty()) fail("empty literal");
        CycloNum acc = CycloNum::zero(field_);
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            // sign belongs to the first term
            negate = (s_[pos_] == '-');
            ++pos_;
        }
        acc += term(negate);
        while (pos_ < s_.size()) {
            char op = s_[pos_++];
            if (op != '+' && op != '-') fail(std::string("unexpected '") + op + "'");
            acc += term(op == '-');
        }
        return acc;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorKind::ParseError, "literal \"" + s_ + "\" at offset " + std::to_string(pos_) + ": " + why);
    }

    std::string digits() {
        std::string out;
        while (std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(s_[pos_++]);
        if (out.empty()) fail("expected digits");
        return out;
    }

    CycloNum term(bool negate) {
        Rational coeff(1);
        bool have_rat = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Integer num(digits());
            Integer den(1);
            if (peek() == '/') {
                ++pos_;
                den = Integer(digits());
                if (den == 0) fail("zero denominator");
            }
            coeff = Rational(num, den);
            coeff.canonicalize();
            have_rat = true;
            if (peek() != '*') return CycloNum(field_, negate ? Rational(-coeff) : coeff);
            ++pos_;
        }
        CycloNum p = power();
        if (!have_rat && peek() == '*') fail("coefficient must precede the power");
        if (negate) coeff = -coeff;
        return p * coeff;
    }

    CycloNum power() {
        char c = peek();
        if (c == 'i') {
            ++pos_;
            if (field_->order() % 4 != 0)
                fail("'i' requires a cyclotomic order divisible by 4, got " + std::to_string(field_->order()));
            return CycloNum::zeta(field_, field_->order() / 4);
        }
        if (c != 'z') fail("expected 'z', 'i' or a rational");
        ++pos_;
        long e = 1;
        if (peek() == '^') {
            ++pos_;
            e = std::stol(digits());
        }
        return CycloNum::zeta(field_, e);
    }

    const FieldPtr& field_;
    std::string s_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline CycloNum parse_cyclo(std::string_view text, const FieldPtr& field) {
    return detail::LiteralParser(text, field).parse();
}

/// Canonical text: increasing powers of z, coefficient 1 omitted.
inline std::string format_cyclo(const CycloNum& a) {
    std::string out;
    const auto& c = a.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        const bool first = out.empty();
        const bool neg = sgn(c[k]) < 0;
        const Rational mag = abs(c[k]);
        std::string pow = k == 0 ? "" : (k == 1 ? "z" : "z^" + std::to_string(k));
        std::string body;
        if (k == 0) body = mag.get_str();
        else if (mag == 1) body = pow;
        else body = mag.get_str() + "*" + pow;
        if (first) {
            if (neg) out += (k != 0 && mag == 1) ? "-1*" + pow : "-" + body;
            else out += body;
        } else {
            out += neg ? "-" : "+";
            out += body;
        }
    }
    return out.empty() ? "0" : out;
}

inline std::ostream& operator<<(std::ostream& os, const CycloNum& a) { return os << format_cyclo(a); }

} // namespace arrcoh
