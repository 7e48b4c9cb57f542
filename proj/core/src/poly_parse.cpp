#include <cctype>
#include <string>

#include "ffc/polynomial.hpp"

namespace ffc {

namespace {

// Tokenizer for the term syntax `±c*x^e*y^f ...`; '*' and '^1' are
// optional, '−' (U+2212) is accepted for '-'.
struct Lexer {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool accept_minus() {
    skip_ws();
    if (pos < s.size() && s[pos] == '-') {
      ++pos;
      return true;
    }
    if (pos + 2 < s.size() + 1 && s.compare(pos, 3, "\xe2\x88\x92") == 0) {
      pos += 3;
      return true;
    }
    return false;
  }
  bool peek_number() {
    skip_ws();
    return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
  }
  bool peek_name() {
    skip_ws();
    return pos < s.size() &&
           (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_');
  }
  std::string number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (start == pos) fail("expected number");
    return s.substr(start, pos - start);
  }
  std::string name() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (start == pos) fail("expected identifier");
    return s.substr(start, pos - start);
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw StructuralError("polynomial syntax error at column " +
                          std::to_string(pos + 1) + ": " + msg + " in \"" + s +
                          "\"");
  }
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
  Lexer lx{text};
  std::vector<Term> terms;
  bool first = true;
  while (!lx.eof()) {
    // sign
    Scalar sign(1);
    for (;;) {
      if (lx.accept_minus())
        sign = -sign;
      else if (lx.accept('+'))
        ;
      else
        break;
    }
    (void)first;
    first = false;
    if (lx.eof()) lx.fail("dangling sign");

    Scalar coeff = sign;
    std::vector<std::int64_t> exps(ring->arity(), 0);
    bool saw_factor = false;
    for (;;) {
      if (lx.peek_number()) {
        mpz_class num(lx.number());
        if (lx.accept('/')) {
          mpz_class den(lx.number());
          if (den == 0) lx.fail("zero denominator");
          coeff *= Scalar(mpq_class(num, den));
        } else {
          coeff *= Scalar(num);
        }
        saw_factor = true;
      } else if (lx.peek_name()) {
        std::string id = lx.name();
        int vi = ring->variable_index(id);
        if (vi < 0) lx.fail("unknown variable '" + id + "'");
        std::int64_t e = 1;
        if (lx.accept('^')) e = std::stoll(lx.number());
        exps[vi] += e;
        saw_factor = true;
      } else {
        break;
      }
      lx.accept('*');  // optional explicit product
    }
    if (!saw_factor) lx.fail("expected term");
    terms.push_back(Term{Monomial(exps), coeff});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace ffc
