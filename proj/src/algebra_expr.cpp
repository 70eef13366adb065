#include "ordgen/algebra_expr.hpp"

#include <cctype>
#include <map>
#include <string>

#include "ordgen/errors.hpp"

namespace ordgen {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  FiniteAlgebra parse() {
    FiniteAlgebra a = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return a;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::InvalidArgument,
                "algebra expression '" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  std::uint64_t integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 12) fail("integer too large");
    return std::stoull(std::string(s_.substr(start, pos_ - start)));
  }

  int small_int() {
    const auto v = integer();
    if (v < 1 || v > 1000) fail("expected an integer in [1, 1000]");
    return static_cast<int>(v);
  }

  PrimePower prime_power() {
    const auto q = integer();
    const auto pp = PrimePower::from_q(q);
    if (!pp) fail(std::to_string(q) + " is not a prime power");
    return *pp;
  }

  FiniteAlgebra expr() {
    // Longest keywords first: "MO(" before "M(".
    if (accept("MO(")) {
      FiniteAlgebra a = expr();
      expect(",");
      const int n = small_int();
      expect(")");
      return matrix_over(a, n);
    }
    if (accept("M(")) {
      const int n = small_int();
      expect(",");
      const PrimePower q = prime_power();
      int r = 1;
      if (accept(";")) {
        expect("r");
        expect("=");
        r = small_int();
      }
      expect(")");
      return matrix_algebra(n, q, r);
    }
    if (accept("TW(")) {
      std::map<char, std::uint64_t> kv;
      do {
        skip();
        if (pos_ >= s_.size()) fail("unterminated TW(");
        const char key = s_[pos_++];
        if (std::string_view("qfmse").find(key) == std::string_view::npos) fail("unknown TW key");
        if (kv.count(key)) fail("repeated TW key");
        expect("=");
        kv[key] = integer();
      } while (accept(","));
      expect(")");
      if (!kv.count('q')) fail("TW needs q=");
      const auto pp = PrimePower::from_q(kv['q']);
      if (!pp) fail(std::to_string(kv['q']) + " is not a prime power");
      auto get = [&](char c) {
        const auto it = kv.find(c);
        const std::uint64_t v = it == kv.end() ? 1 : it->second;
        if (v < 1 || v > 1000) fail(std::string("TW ") + c + " out of range");
        return static_cast<int>(v);
      };
      return truncated_local_algebra(*pp, get('f'), get('m'), get('s'), get('e'));
    }
    if (accept("P(")) {
      FiniteAlgebra a = expr();
      expect(",");
      FiniteAlgebra b = expr();
      expect(")");
      return product_algebra(a, b);
    }
    fail("expected M(, TW(, P( or MO(");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

FiniteAlgebra parse_algebra(std::string_view expr) { return Parser(expr).parse(); }

}  // namespace ordgen
