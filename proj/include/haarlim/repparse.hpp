// Parser for the representation micro-format. A description is a sequence of
// group sections joined by the external product:
//
//   input  := group ('x' group)*
//   group  := 'A' INT ':' expr          group token An means SL(n,R)
//   expr   := term (('+' | '*') term)*  left associative, '*' binds tighter
//   term   := 'std' | 'standard' | 'adj' | 'adjoint'
//           | 'dual' '(' expr ')' | '(' expr ')'
//
// Whitespace is insignificant. Errors carry the offending position.
#pragma once

#include <cctype>

#include "haarlim/repspace.hpp"

namespace haarlim {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

namespace detail {

class RepParser {
  public:
    explicit RepParser(std::string_view s) : s_(s) {}

    Representation parse() {
        Representation rep = parse_group();
        // the external product token must stand alone: 'x' not glued to a word
        while (peek() == 'x' && !std::isalnum(static_cast<unsigned char>(raw_look(1)))) {
            ++pos_;
            Representation rhs = parse_group();
            rep = external_tensor(rep, rhs);
        }
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
        return rep;
    }

  private:
    std::string_view s_;
    std::size_t pos_ = 0;
    std::shared_ptr<const RootSystem> rs_;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    char raw_look(std::size_t ahead) {
        std::size_t p = pos_ + ahead;
        return p < s_.size() ? s_[p] : '\0';
    }
    bool eat_word(std::string_view w) {
        skip_ws();
        if (s_.substr(pos_, w.size()) != w) return false;
        char after = pos_ + w.size() < s_.size() ? s_[pos_ + w.size()] : '\0';
        if (std::isalnum(static_cast<unsigned char>(after))) return false;
        pos_ += w.size();
        return true;
    }

    Representation parse_group() {
        skip_ws();
        if (peek() != 'A') throw ParseError("expected a group token like A3", pos_);
        ++pos_;
        std::size_t start = pos_;
        long n = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) n = n * 10 + (s_[pos_++] - '0');
        if (pos_ == start) throw ParseError("expected a group size after 'A'", pos_);
        if (n < 2) throw ParseError("group size must be at least 2", start);
        if (peek() != ':') throw ParseError("expected ':' after the group token", pos_);
        ++pos_;
        rs_ = std::make_shared<const RootSystem>(build_type_A(static_cast<int>(n)));
        return parse_sum();
    }

    Representation parse_sum() {
        Representation rep = parse_product();
        while (peek() == '+') {
            ++pos_;
            rep = direct_sum(rep, parse_product());
        }
        return rep;
    }

    Representation parse_product() {
        Representation rep = parse_term();
        while (peek() == '*') {
            ++pos_;
            rep = tensor(rep, parse_term());
        }
        return rep;
    }

    Representation parse_term() {
        skip_ws();
        std::size_t here = pos_;
        if (eat_word("standard") || eat_word("std")) return standard(rs_);
        if (eat_word("adjoint") || eat_word("adj")) return adjoint(rs_);
        if (eat_word("dual")) {
            if (peek() != '(') throw ParseError("expected '(' after dual", pos_);
            ++pos_;
            Representation inner = parse_sum();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return dual(inner);
        }
        if (peek() == '(') {
            ++pos_;
            Representation inner = parse_sum();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        throw ParseError("expected std, adj, dual(...) or a parenthesized expression", here);
    }
};

}  // namespace detail

/// Parse a representation description; the result is not yet validated.
inline Representation parse_rep_expr(std::string_view s) {
    if (s.empty()) throw ParseError("empty representation description", 0);
    return detail::RepParser(s).parse();
}

}  // namespace haarlim
