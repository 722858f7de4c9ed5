#pragma once

// Boolean expressions over named checkers, e.g. "split & !schreier-point".
//
//   expr  := term ('|' term)*
//   term  := unary ('&' unary)*
//   unary := '!' unary | '(' expr ')' | name
//   name  := [a-z0-9-]+

#include <cctype>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mwb/errors.hpp"

namespace mwb {

inline const std::set<std::string, std::less<>>& checker_names() {
    static const std::set<std::string, std::less<>> names{"schreier-epi", "regular-schreier", "schreier-point",
                                                          "strong-gp",    "schreier-gp",      "split"};
    return names;
}

class Expr {
public:
    enum class Op { name, negate, both, either };

    static Expr parse(std::string_view text) {
        Parser p{text, 0};
        auto e = p.parse_or();
        p.skip();
        if (p.pos != text.size()) p.fail("unexpected trailing input");
        return e;
    }

    /// eval(name) -> bool supplies each atom.
    template <class Atom>
    bool evaluate(Atom&& atom) const {
        switch (op_) {
            case Op::name: return atom(name_);
            case Op::negate: return !args_[0].evaluate(atom);
            case Op::both: return args_[0].evaluate(atom) && args_[1].evaluate(atom);
            case Op::either: return args_[0].evaluate(atom) || args_[1].evaluate(atom);
        }
        return false;
    }

    std::set<std::string> names() const {
        std::set<std::string> out;
        collect(out);
        return out;
    }

    std::string to_string() const {
        switch (op_) {
            case Op::name: return name_;
            case Op::negate: return "!" + args_[0].to_string();
            case Op::both: return "(" + args_[0].to_string() + " & " + args_[1].to_string() + ")";
            case Op::either: return "(" + args_[0].to_string() + " | " + args_[1].to_string() + ")";
        }
        return {};
    }

private:
    Expr(Op op, std::string name, std::vector<Expr> args) : op_(op), name_(std::move(name)), args_(std::move(args)) {}

    void collect(std::set<std::string>& out) const {
        if (op_ == Op::name) out.insert(name_);
        for (const auto& a : args_) a.collect(out);
    }

    struct Parser {
        std::string_view text;
        std::size_t pos;

        [[noreturn]] void fail(const std::string& why) const {
            throw ParseError("expression: " + why + " at offset " + std::to_string(pos));
        }
        void skip() {
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        }
        bool eat(char c) {
            skip();
            if (pos < text.size() && text[pos] == c) {
                ++pos;
                return true;
            }
            return false;
        }
        Expr parse_or() {
            auto lhs = parse_and();
            while (eat('|')) lhs = Expr(Op::either, {}, {std::move(lhs), parse_and()});
            return lhs;
        }
        Expr parse_and() {
            auto lhs = parse_unary();
            while (eat('&')) lhs = Expr(Op::both, {}, {std::move(lhs), parse_unary()});
            return lhs;
        }
        Expr parse_unary() {
            if (eat('!')) return Expr(Op::negate, {}, {parse_unary()});
            if (eat('(')) {
                auto e = parse_or();
                if (!eat(')')) fail("expected ')'");
                return e;
            }
            skip();
            std::size_t start = pos;
            while (pos < text.size() && (std::islower(static_cast<unsigned char>(text[pos])) ||
                                         std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '-'))
                ++pos;
            if (start == pos) fail("expected a checker name");
            std::string name(text.substr(start, pos - start));
            if (!checker_names().contains(name)) {
                pos = start;
                fail("unknown checker '" + name + "'");
            }
            return Expr(Op::name, std::move(name), {});
        }
    };

    Op op_;
    std::string name_;
    std::vector<Expr> args_;
};

}  // namespace mwb
