#include "oddcycle/size_rule.hpp"

#include <cctype>
#include <limits>

#include "oddcycle/errors.hpp"

namespace oddcycle {

namespace {

using Wide = unsigned __int128;
constexpr Wide kCap = std::numeric_limits<std::uint64_t>::max();

Wide sat(Wide v) { return v > kCap ? kCap : v; }

class Evaluator {
 public:
  Evaluator(const std::string& text, std::uint64_t q) : s_(text), q_(q) {}

  std::uint64_t run() {
    Wide v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return static_cast<std::uint64_t>(v);
  }

 private:
  [[noreturn]] void fail(const char* what) const {
    throw InputError("size rule '" + s_ + "': " + what + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Wide expr() {
    Wide v = term();
    while (true) {
      if (eat('+')) v = sat(v + term());
      else if (eat('-')) {
        Wide r = term();
        v = r > v ? 0 : v - r;
      } else return v;
    }
  }
  Wide term() {
    Wide v = power();
    while (true) {
      if (eat('*')) {
        Wide r = power();
        v = (r != 0 && v > kCap / r) ? kCap : v * r;
      } else if (eat('/')) {
        Wide r = power();
        if (r == 0) fail("division by zero");
        v /= r;
      } else return v;
    }
  }
  Wide power() {
    Wide base = atom();
    if (!eat('^')) return base;
    Wide exp = power();
    if (base <= 1) return exp == 0 ? 1 : base;
    Wide acc = 1;
    for (Wide i = 0; i < exp && acc < kCap; ++i) acc = sat(acc * base);
    return acc;
  }
  Wide atom() {
    skip();
    if (eat('(')) {
      Wide v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (pos_ < s_.size() && s_[pos_] == 'q') {
      ++pos_;
      return q_;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      Wide v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) v = sat(v * 10 + static_cast<unsigned>(s_[pos_++] - '0'));
      return v;
    }
    fail("expected number, 'q' or '('");
  }

  const std::string& s_;
  std::uint64_t q_;
  std::size_t pos_ = 0;
};

}  // namespace

SizeRule::SizeRule(std::string text) : text_(std::move(text)) {
  Evaluator(text_, 2).run();
}

std::uint64_t SizeRule::operator()(std::uint64_t q) const { return Evaluator(text_, q).run(); }

}  // namespace oddcycle
