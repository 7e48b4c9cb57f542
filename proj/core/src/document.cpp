#include "ffc/document.hpp"

#include <cctype>
#include <sstream>

namespace ffc {

namespace {

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// comment-stripped, trimmed lines with their 1-based line numbers
std::vector<std::pair<int, std::string>> logical_lines(
    const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = strip(line);
    if (!line.empty()) out.emplace_back(no, line);
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      parts.push_back(strip(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(strip(cur));
  return parts;
}

RingPtr parse_ring_line(int line_no, const std::string& body) {
  // body: `QQ[x,y] order grevlex` or `Fp(32003)[x,y,z] order lex`
  auto bracket = body.find('[');
  auto close = body.find(']');
  if (bracket == std::string::npos || close == std::string::npos ||
      close < bracket)
    throw ParseError(line_no, "expected field[vars] in ring line");
  std::string field_text = strip(body.substr(0, bracket));
  std::string vars_text = body.substr(bracket + 1, close - bracket - 1);
  std::string rest = strip(body.substr(close + 1));

  CoefficientField field = CoefficientField::rationals();
  if (field_text == "QQ") {
    // rationals
  } else if (field_text.rfind("Fp(", 0) == 0 && field_text.back() == ')') {
    std::string p = field_text.substr(3, field_text.size() - 4);
    try {
      field = CoefficientField::prime_field(std::stoul(p));
    } catch (const StructuralError& e) {
      throw ParseError(line_no, e.what());
    } catch (const std::exception&) {
      throw ParseError(line_no, "bad modulus '" + p + "'");
    }
  } else {
    throw ParseError(line_no, "unknown field '" + field_text + "'");
  }

  std::vector<std::string> vars = split(vars_text, ',');
  MonomialOrder order = MonomialOrder::GrevLex;
  if (!rest.empty()) {
    std::istringstream rs(rest);
    std::string kw, ord;
    rs >> kw >> ord;
    if (kw != "order" || (ord != "lex" && ord != "grevlex"))
      throw ParseError(line_no, "expected `order lex|grevlex`");
    order = ord == "lex" ? MonomialOrder::Lex : MonomialOrder::GrevLex;
  }
  try {
    return make_ring(field, std::move(vars), order);
  } catch (const StructuralError& e) {
    throw ParseError(line_no, e.what());
  }
}

}  // namespace

ComplexDocument parse_complex_document(const std::string& text) {
  auto lines = logical_lines(text);
  std::size_t pos = 0;
  auto need = [&](const char* what) -> std::pair<int, std::string> {
    if (pos >= lines.size())
      throw ParseError(lines.empty() ? 1 : lines.back().first,
                       std::string("unexpected end of document, expected ") +
                           what);
    return lines[pos++];
  };

  auto [ring_ln, ring_line] = need("ring header");
  if (ring_line.rfind("ring ", 0) != 0)
    throw ParseError(ring_ln, "expected `ring <field>[vars] order <ord>`");
  RingPtr ring = parse_ring_line(ring_ln, strip(ring_line.substr(5)));

  std::string name;
  if (pos < lines.size() && lines[pos].second.rfind("name ", 0) == 0) {
    name = strip(lines[pos].second.substr(5));
    ++pos;
  }

  auto [deg_ln, deg_line] = need("degrees line");
  if (deg_line.rfind("degrees ", 0) != 0)
    throw ParseError(deg_ln, "expected `degrees <a>..<b>`");
  int a = 0, b = 0;
  {
    std::string body = strip(deg_line.substr(8));
    auto dots = body.find("..");
    if (dots == std::string::npos)
      throw ParseError(deg_ln, "expected `degrees <a>..<b>`");
    try {
      a = std::stoi(strip(body.substr(0, dots)));
      b = std::stoi(strip(body.substr(dots + 2)));
    } catch (const std::exception&) {
      throw ParseError(deg_ln, "bad degree bounds");
    }
    if (a > b) throw ParseError(deg_ln, "degrees require a <= b");
  }

  auto [rank_ln, rank_line] = need("ranks line");
  if (rank_line.rfind("ranks ", 0) != 0)
    throw ParseError(rank_ln, "expected `ranks f_a,...,f_b`");
  std::vector<int> ranks;
  for (const auto& part : split(strip(rank_line.substr(6)), ',')) {
    try {
      ranks.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw ParseError(rank_ln, "bad rank '" + part + "'");
    }
    if (ranks.back() < 0) throw ParseError(rank_ln, "negative rank");
  }
  if (static_cast<int>(ranks.size()) != b - a + 1)
    throw ParseError(rank_ln, "rank count does not match degree range");

  std::map<int, MapOfFree> diffs;
  while (pos < lines.size()) {
    auto [ln, line] = need("diff block");
    if (line.rfind("diff ", 0) != 0)
      throw ParseError(ln, "expected `diff <n>:`");
    std::string head = strip(line.substr(5));
    if (head.empty() || head.back() != ':')
      throw ParseError(ln, "expected `diff <n>:`");
    int n = 0;
    try {
      n = std::stoi(strip(head.substr(0, head.size() - 1)));
    } catch (const std::exception&) {
      throw ParseError(ln, "bad differential degree");
    }
    if (n < a + 1 || n > b)
      throw ParseError(ln, "differential degree outside [a+1,b]");
    if (diffs.count(n)) throw ParseError(ln, "duplicate diff block");
    const int rows = ranks[static_cast<std::size_t>(n - 1 - a)];
    const int cols = ranks[static_cast<std::size_t>(n - a)];
    std::vector<std::vector<Polynomial>> entries;
    for (int i = 0; i < rows; ++i) {
      auto [rln, row_line] = need("matrix row");
      if (row_line.front() != '[' || row_line.back() != ']')
        throw ParseError(rln, "expected bracketed matrix row");
      std::string body = row_line.substr(1, row_line.size() - 2);
      std::vector<Polynomial> row;
      std::vector<std::string> cells =
          cols == 0 ? std::vector<std::string>{} : split(body, ',');
      if (static_cast<int>(cells.size()) != cols)
        throw ParseError(rln, "expected " + std::to_string(cols) +
                                  " entries in row");
      for (const auto& cell : cells) {
        try {
          row.push_back(parse_polynomial(ring, cell));
        } catch (const StructuralError& e) {
          throw ParseError(rln, e.what());
        }
      }
      entries.push_back(std::move(row));
    }
    diffs.emplace(n, MapOfFree(ring, rows, cols, std::move(entries)));
  }

  FiniteFreeComplex c(ring, a, std::move(ranks), std::move(diffs));
  require_valid(c);
  return ComplexDocument{std::move(c), std::move(name)};
}

std::string render_complex_document(const FiniteFreeComplex& c,
                                    const std::string& name) {
  std::ostringstream out;
  out << "ring " << c.ring()->field().to_string() << "[";
  const auto& vars = c.ring()->variables();
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) out << ",";
    out << vars[i];
  }
  out << "] order " << order_name(c.ring()->order()) << "\n";
  if (!name.empty()) out << "name " << name << "\n";
  if (c.is_empty()) {
    // an empty complex has no degree range; render a zero module
    out << "degrees 0..0\nranks 0\n";
    return out.str();
  }
  out << "degrees " << c.low() << ".." << c.high() << "\n";
  out << "ranks ";
  for (int n = c.low(); n <= c.high(); ++n) {
    if (n > c.low()) out << ",";
    out << c.rank(n);
  }
  out << "\n";
  for (int n = c.low() + 1; n <= c.high(); ++n) {
    MapOfFree d = c.differential(n);
    out << "diff " << n << ":\n";
    for (int i = 0; i < d.target_rank(); ++i) {
      out << "[";
      for (int j = 0; j < d.source_rank(); ++j) {
        if (j) out << ", ";
        out << d.entry(i, j).to_string();
      }
      out << "]\n";
    }
  }
  return out.str();
}

}  // namespace ffc
