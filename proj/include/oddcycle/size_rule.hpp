#pragma once

#include <cstdint>
#include <string>

namespace oddcycle {

// Integer expression in q, e.g. "8*q^3". Supports + - * / ^ and parentheses;
// arithmetic saturates at UINT64_MAX and at 0 for subtraction.
class SizeRule {
 public:
  explicit SizeRule(std::string text);  // throws InputError on bad syntax

  std::uint64_t operator()(std::uint64_t q) const;
  const std::string& text() const noexcept { return text_; }

  friend bool operator==(const SizeRule& a, const SizeRule& b) { return a.text_ == b.text_; }

 private:
  std::string text_;
};

}  // namespace oddcycle
