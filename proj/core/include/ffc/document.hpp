#ifndef FFC_DOCUMENT_HPP
#define FFC_DOCUMENT_HPP

#include <string>

#include "ffc/complexes.hpp"

namespace ffc {

struct ParseError : Error {
  ParseError(int line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line(line) {}
  int line;
};

/// A parsed complex document: ring header, complex body, optional name.
///
/// Format (one item per line, '#' starts a comment):
///   ring QQ[x,y] order grevlex          (field QQ or Fp(<prime>))
///   name <identifier>                   (optional)
///   degrees <a>..<b>
///   ranks <f_a>,<f_a+1>,...,<f_b>
///   diff <n>:                           (for each n in [a+1,b])
///   [entry, entry, ...]                 (f_{n-1} rows of f_n entries)
struct ComplexDocument {
  FiniteFreeComplex complex;
  std::string name;
};

/// Parses and validates; throws ParseError on syntax errors and
/// StructuralError when dd != 0.
ComplexDocument parse_complex_document(const std::string& text);

/// Renders a document that parses back to an equal complex.
std::string render_complex_document(const FiniteFreeComplex& c,
                                    const std::string& name = "");

}  // namespace ffc

#endif
