#pragma once

// Tiny recursive-descent evaluator for the plain and code expression
// syntaxes: numbers, identifiers, + - * ^ **, parentheses and the
// functions cos, sin, sqrt.

#include <cctype>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zernike::testing {

class ExprInterpreter {
public:
  ExprInterpreter(std::string_view text, std::map<std::string, double> vars)
      : text_(text), vars_(std::move(vars)) {}

  double evaluate() {
    pos_ = 0;
    const double v = expr();
    skip();
    if (pos_ != text_.size())
      throw std::runtime_error("trailing input at " + std::to_string(pos_) + ": " +
                               std::string(text_.substr(pos_)));
    return v;
  }

private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  bool peek_power() {
    skip();
    return text_.substr(pos_, 1) == "^" || text_.substr(pos_, 2) == "**";
  }

  double expr() {
    double v = term();
    for (;;) {
      if (accept("+"))
        v += term();
      else if (accept("-"))
        v -= term();
      else
        return v;
    }
  }

  double term() {
    double v = unary();
    for (;;) {
      skip();
      if (text_.substr(pos_, 1) == "*" && text_.substr(pos_, 2) != "**") {
        ++pos_;
        v *= unary();
      } else {
        return v;
      }
    }
  }

  double unary() {
    if (accept("-")) return -unary();
    return power();
  }

  double power() {
    const double base = primary();
    if (peek_power()) {
      if (!accept("**")) accept("^");
      return std::pow(base, unary());
    }
    return base;
  }

  double primary() {
    skip();
    if (accept("(")) {
      const double v = expr();
      if (!accept(")")) throw std::runtime_error("expected ')'");
      return v;
    }
    if (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
      std::size_t used = 0;
      const double v = std::stod(std::string(text_.substr(pos_)), &used);
      pos_ += used;
      return v;
    }
    std::string name;
    while (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      name += text_[pos_++];
    if (name.empty()) throw std::runtime_error("unexpected input at " + std::to_string(pos_));
    if (accept("(")) {
      const double arg = expr();
      if (!accept(")")) throw std::runtime_error("expected ')' after call");
      if (name == "cos") return std::cos(arg);
      if (name == "sin") return std::sin(arg);
      if (name == "sqrt") return std::sqrt(arg);
      throw std::runtime_error("unknown function " + name);
    }
    const auto it = vars_.find(name);
    if (it == vars_.end()) throw std::runtime_error("unknown variable " + name);
    return it->second;
  }

  std::string_view text_;
  std::map<std::string, double> vars_;
  std::size_t pos_ = 0;
};

}  // namespace zernike::testing
