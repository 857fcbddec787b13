#include "powerhom/parse.hpp"

#include <cctype>

namespace powerhom {

namespace {

std::string located(const std::string& message, int line, int column) {
  std::string where = line > 0 ? "line " + std::to_string(line) + ", column " + std::to_string(column)
                               : "column " + std::to_string(column);
  return where + ": " + message;
}

class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view text, int line) : ring_(ring), s_(text), line_(line) {}

  Polynomial run() {
    skip();
    if (pos_ == s_.size()) fail("empty expression");
    Polynomial p = sum();
    skip();
    if (pos_ != s_.size()) fail(std::string("unexpected character '") + s_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, static_cast<int>(pos_) + 1);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  Polynomial sum() {
    Polynomial acc(ring_);
    bool first = true;
    while (true) {
      bool negate = false;
      if (peek('+') || peek('-')) {
        negate = s_[pos_] == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      Polynomial t = product();
      acc += negate ? -t : t;
      first = false;
    }
    return acc;
  }

  Polynomial product() {
    Polynomial acc = power();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc = acc * power();
      } else if (peek('/')) {
        ++pos_;
        skip();
        std::size_t at = pos_;
        Polynomial d = power();
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        if (d.size() != 1 || !d.lead().mono.is_one()) {
          pos_ = at;
          fail("only division by a nonzero constant is allowed");
        }
        acc = acc.scaled(d.lead().coef.inverse());
      } else if (starts_factor()) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  Polynomial power() {
    Polynomial base = atom();
    if (peek('^')) {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      if (pos_ - start > 4) {
        pos_ = start;
        fail("exponent too large");
      }
      base = base.pow(std::stoi(std::string(s_.substr(start, pos_ - start))));
    }
    return base;
  }

  Polynomial atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = sum();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return p;
    }
    if (c == '-' || c == '+') {
      ++pos_;
      Polynomial p = power();
      return c == '-' ? -p : p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      try {
        return Polynomial::constant(ring_, Scalar::parse(ring_->field(), s_.substr(start, pos_ - start)));
      } catch (const Error& e) {
        pos_ = start;
        fail(e.what());
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      int idx = ring_->index_of(name);
      if (idx < 0) {
        // A run like "xy" is read as a product of single-letter variables.
        Polynomial p = Polynomial::constant(ring_, 1L);
        for (std::size_t k = 0; k < name.size(); ++k) {
          int v = ring_->index_of(std::string(1, name[k]));
          if (v < 0) {
            pos_ = start;
            fail("unknown variable '" + name + "'");
          }
          p = p * Polynomial::variable(ring_, v);
        }
        return p;
      }
      return Polynomial::variable(ring_, idx);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const RingPtr& ring_;
  std::string_view s_;
  int line_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(const std::string& message, int line, int column)
    : Error(located(message, line, column)), bare_(message), line_(line), column_(column) {}

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text, int line) {
  return Parser(ring, text, line).run();
}

std::vector<Polynomial> parse_polynomials(const RingPtr& ring, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_polynomial(ring, t));
  return out;
}

}  // namespace powerhom
