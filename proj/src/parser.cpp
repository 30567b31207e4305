#include <algorithm>
#include <cctype>

#include "lie/expr.hpp"

namespace lie {

namespace {

struct Lexer {
  const std::string& text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }
};

struct Parser {
  Lexer lx;
  const ParseContext& ctx;

  Expr parse() {
    Expr e = expr();
    if (lx.peek() != '\0') lx.fail("unexpected trailing input");
    return e;
  }

  Expr expr() {
    Expr acc = term();
    while (true) {
      if (lx.eat('+')) acc = acc + term();
      else if (lx.eat('-')) acc = acc - term();
      else return acc;
    }
  }

  Expr term() {
    Expr acc = unary();
    while (true) {
      if (lx.eat('*')) acc = acc * unary();
      else if (lx.eat('/')) {
        Expr d = unary();
        if (d.is_zero()) lx.fail("division by zero");
        acc = acc / d;
      } else return acc;
    }
  }

  Expr unary() {
    if (lx.eat('-')) return -unary();
    return power();
  }

  Expr power() {
    size_t at = lx.pos;
    bool euler = false;
    Expr base = primary(&euler);
    if (lx.eat('^')) {
      Expr e = unary();
      if (euler) return Expr::exp_of(e);
      try {
        return Expr::pow(base, e);
      } catch (const DomainError& err) {
        throw ParseError(err.what(), at);
      }
    }
    if (euler) lx.fail("'e' is only valid as e^(...)");
    return base;
  }

  Expr primary(bool* euler) {
    char c = lx.peek();
    if (c == '(') {
      lx.eat('(');
      Expr e = expr();
      if (!lx.eat(')')) lx.fail("expected ')'");
      return e;
    }
    if (std::isdigit((unsigned char)c)) return number();
    if (std::isalpha((unsigned char)c)) return identifier(euler);
    lx.fail("expected a number, identifier or '('");
  }

  Expr number() {
    size_t start = lx.pos;
    while (lx.pos < lx.text.size() && std::isdigit((unsigned char)lx.text[lx.pos])) ++lx.pos;
    if (lx.pos < lx.text.size() && lx.text[lx.pos] == '.')
      throw ParseError("decimal literals are not supported; use fractions", lx.pos);
    return Expr(Rational::parse(lx.text.substr(start, lx.pos - start)));
  }

  Expr identifier(bool* euler) {
    size_t start = lx.pos;
    while (lx.pos < lx.text.size() &&
           (std::isalnum((unsigned char)lx.text[lx.pos]) || lx.text[lx.pos] == '_' ||
            lx.text[lx.pos] == '\''))
      ++lx.pos;
    std::string word = lx.text.substr(start, lx.pos - start);

    // variables x<k>
    if (word.size() > 1 && word[0] == 'x' &&
        std::all_of(word.begin() + 1, word.end(), [](char ch) { return std::isdigit((unsigned char)ch); }))
      return Expr::variable(std::stoi(word.substr(1)));

    if (word == "exp") return Expr::exp_of(call_one(word, start));
    if (word == "ln") return Expr::ln_of(call_one(word, start));
    if (word == "sin") return Expr::sin_of(call_one(word, start));
    if (word == "cos") return Expr::cos_of(call_one(word, start));
    if (word == "tan") return Expr::tan_of(call_one(word, start));
    if (word == "arctan") return Expr::arctan_of(call_one(word, start));
    if (word == "sqrt") return Expr::sqrt_of(call_one(word, start));
    if (word == "sec") return Expr(1) / Expr::cos_of(call_one(word, start));

    if (ctx.params.count(word)) return Expr::parameter(word);

    // opaque function possibly with derivative suffixes: phi'' or theta_1_2
    std::string base = word;
    std::vector<int> underscore_slots;
    int primes = 0;
    while (!base.empty() && base.back() == '\'') {
      ++primes;
      base.pop_back();
    }
    size_t us = base.find('_');
    std::string head = base.substr(0, us);
    if (us != std::string::npos && primes == 0) {
      std::string rest = base.substr(us);
      size_t i = 0;
      while (i < rest.size()) {
        if (rest[i] != '_') throw ParseError("malformed derivative suffix", start);
        size_t j = i + 1;
        while (j < rest.size() && std::isdigit((unsigned char)rest[j])) ++j;
        if (j == i + 1) throw ParseError("malformed derivative suffix", start);
        underscore_slots.push_back(std::stoi(rest.substr(i + 1, j - i - 1)));
        i = j;
      }
    } else {
      head = base;
    }
    auto it = ctx.opaques.find(head);
    if (it != ctx.opaques.end()) {
      int arity = it->second;
      std::vector<int> deriv(arity, 0);
      if (primes > 0) {
        if (arity != 1) throw ParseError("prime derivative on function of arity != 1", start);
        deriv[0] = primes;
      }
      for (int slot : underscore_slots) {
        if (slot < 1 || slot > arity) throw ParseError("derivative slot out of range", start);
        deriv[slot - 1] += 1;
      }
      std::vector<Expr> args = call_args(head, start);
      if ((int)args.size() != arity)
        throw ParseError("function " + head + " expects " + std::to_string(arity) + " arguments",
                         start);
      return Expr::opaque(head, args, deriv);
    }

    if (word == "e") {
      if (euler) {
        *euler = true;
        return Expr(1);
      }
    }
    throw ParseError("unknown identifier '" + word + "'", start);
  }

  Expr call_one(const std::string& name, size_t at) {
    std::vector<Expr> args = call_args(name, at);
    if (args.size() != 1) throw ParseError(name + " expects one argument", at);
    return args[0];
  }

  std::vector<Expr> call_args(const std::string& name, size_t at) {
    if (!lx.eat('(')) throw ParseError("expected '(' after " + name, at);
    std::vector<Expr> args;
    if (lx.peek() == ')') {
      lx.eat(')');
      return args;
    }
    args.push_back(expr());
    while (lx.eat(',')) args.push_back(expr());
    if (!lx.eat(')')) lx.fail("expected ')' in argument list");
    return args;
  }
};

}  // namespace

Expr parse_expr(const std::string& text, const ParseContext& ctx) {
  Parser p{Lexer{text}, ctx};
  try {
    return p.parse();
  } catch (const ParseError&) {
    throw;
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace lie
