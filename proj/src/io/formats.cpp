#include "hyperarith/io/formats.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

#include "hyperarith/core/error.hpp"
#include "hyperarith/core/text.hpp"

namespace hyperarith {

namespace {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view s, const FieldPtr& field, std::size_t line, std::size_t column)
      : s_(s), field_(field), line_(line), column_(column) {}

  FieldElement parse() {
    auto v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, column_ + pos_, what); }

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

  FieldElement expr() {
    auto v = term();
    while (true) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }

  FieldElement term() {
    auto v = factor();
    while (true) {
      if (eat('*')) {
        v *= factor();
      } else if (eat('/')) {
        const auto at = pos_;
        auto d = factor();
        if (d.is_zero()) {
          pos_ = at;
          throw ParseError(line_, column_ + at, "division by zero");
        }
        v /= d;
      } else {
        return v;
      }
    }
  }

  FieldElement factor() {
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    auto base = primary();
    if (eat('^')) {
      skip();
      const auto start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      const auto e = text::to_long(s_.substr(start, pos_ - start));
      if (!e || *e > 64) fail("exponent out of range");
      return base.pow(static_cast<unsigned>(*e));
    }
    return base;
  }

  FieldElement primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      auto v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == 't') {
      ++pos_;
      return FieldElement::generator(field_);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const auto start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return FieldElement(field_, Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  FieldPtr field_;
  std::size_t line_, column_;
  std::size_t pos_ = 0;
};

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto at = s.find(sep, pos);
    out.push_back(s.substr(pos, at == std::string_view::npos ? std::string_view::npos : at - pos));
    if (at == std::string_view::npos) return out;
    pos = at + 1;
  }
}

std::string joined(const std::vector<text::Token>& toks, std::size_t from) {
  std::string s;
  for (std::size_t i = from; i < toks.size(); ++i) s += std::string(toks[i].text);
  return s;
}

/// Shared reader for the field header and form bodies.
class FormReader {
 public:
  explicit FormReader(std::string_view content) : lines_(text::tokenized_lines(content)) {}

  bool done() const { return next_ >= lines_.size(); }
  const text::Line& peek() const { return lines_[next_]; }
  const text::Line& take() { return lines_[next_++]; }
  std::size_t last_line() const { return lines_.empty() ? 1 : lines_.back().number; }

  /// Consumes leading field/embedding lines.
  void read_header(const std::vector<std::string_view>& extra_keys = {}) {
    std::optional<RationalPolynomial> poly;
    std::optional<std::size_t> embedding;
    std::size_t field_line = 0;
    while (!done()) {
      const auto& l = peek();
      const auto kw = l.tokens[0].text;
      if (kw == "field") {
        if (poly) throw ParseError(l.number, 1, "repeated 'field' line");
        if (l.tokens.size() < 3) throw ParseError(l.number, l.tokens[0].column, "expected 'field c_d ... c_0'");
        std::vector<Integer> coeffs;
        for (std::size_t i = 1; i < l.tokens.size(); ++i) {
          try {
            coeffs.emplace_back(std::string(l.tokens[i].text));
          } catch (const std::invalid_argument&) {
            throw ParseError(l.number, l.tokens[i].column, "coefficient must be an integer");
          }
        }
        if (coeffs.front() != 1) throw ParseError(l.number, l.tokens[1].column, "defining polynomial must be monic");
        poly = RationalPolynomial::from_descending(coeffs);
        field_line = l.number;
      } else if (kw == "embedding") {
        if (embedding) throw ParseError(l.number, 1, "repeated 'embedding' line");
        const auto j = l.tokens.size() == 2 ? text::to_long(l.tokens[1].text) : std::nullopt;
        if (!j || *j < 0) throw ParseError(l.number, l.tokens[0].column, "expected 'embedding <index>'");
        embedding = static_cast<std::size_t>(*j);
      } else if (std::find(extra_keys.begin(), extra_keys.end(), kw) != extra_keys.end()) {
        header_extras_.push_back(&l);
      } else {
        break;
      }
      ++next_;
    }
    if (!poly) {
      if (embedding && *embedding != 0) throw ParseError(1, 1, "embedding index out of range for Q");
      field_ = NumberField::rationals();
      return;
    }
    try {
      field_ = NumberField::create(*poly, embedding);
    } catch (const InvalidField& e) {
      throw ParseError(field_line, 1, e.what());
    }
  }

  const FieldPtr& field() const { return field_; }
  const std::vector<const text::Line*>& header_extras() const { return header_extras_; }

  FieldElement element(const text::Token& tok, std::size_t line) const {
    return parse_element(tok.text, field_, line, tok.column);
  }

  /// `diag ...` or `form N` plus rows.
  QuadraticSpace read_form() {
    if (done()) throw ParseError(last_line(), 1, "expected 'diag' or 'form'");
    const auto& l = take();
    const auto kw = l.tokens[0].text;
    if (kw == "diag") {
      if (l.tokens.size() < 2) throw ParseError(l.number, l.tokens[0].column, "empty diagonal");
      std::vector<FieldElement> d;
      for (std::size_t i = 1; i < l.tokens.size(); ++i) d.push_back(element(l.tokens[i], l.number));
      return QuadraticSpace::diagonal(d);
    }
    if (kw != "form") throw ParseError(l.number, l.tokens[0].column, "expected 'diag' or 'form'");
    const auto n = l.tokens.size() == 2 ? text::to_long(l.tokens[1].text) : std::nullopt;
    if (!n || *n < 1) throw ParseError(l.number, l.tokens[0].column, "expected 'form N' with N >= 1");
    const auto size = static_cast<std::size_t>(*n);
    Matrix<FieldElement> g(size, size, FieldElement(field_, Rational(0)));
    for (std::size_t i = 0; i < size; ++i) {
      if (done()) throw ParseError(last_line(), 1, "missing Gram row " + std::to_string(i + 1));
      const auto& row = take();
      if (row.tokens.size() != size)
        throw ParseError(row.number, row.tokens[0].column,
                         "Gram row has " + std::to_string(row.tokens.size()) + " entries, expected " +
                             std::to_string(size));
      for (std::size_t j = 0; j < size; ++j) g(i, j) = element(row.tokens[j], row.number);
    }
    if (!g.is_symmetric()) throw ParseError(l.number, l.tokens[0].column, "Gram matrix is not symmetric");
    return QuadraticSpace(std::move(g));
  }

 private:
  std::vector<text::Line> lines_;
  std::size_t next_ = 0;
  FieldPtr field_;
  std::vector<const text::Line*> header_extras_;
};

}  // namespace

FieldElement parse_element(std::string_view text, const FieldPtr& field, std::size_t line, std::size_t column) {
  return ExpressionParser(text, field, line, column).parse();
}

Vector<FieldElement> parse_vector(std::string_view text, const FieldPtr& field) {
  Vector<FieldElement> v;
  std::size_t column = 1;
  for (const auto piece : split(text, ',')) {
    v.push_back(parse_element(piece, field, 1, column));
    column += piece.size() + 1;
  }
  return v;
}

std::vector<Vector<FieldElement>> parse_vectors(std::string_view text, const FieldPtr& field) {
  std::vector<Vector<FieldElement>> out;
  for (const auto piece : split(text, ';'))
    if (piece.find_first_not_of(" \t") != std::string_view::npos) out.push_back(parse_vector(piece, field));
  return out;
}

QuadraticSpace parse_form(std::string_view content) {
  FormReader r(content);
  r.read_header();
  auto q = r.read_form();
  if (!r.done()) {
    const auto& l = r.peek();
    throw ParseError(l.number, l.tokens[0].column, "unexpected content after the form");
  }
  return q;
}

QuadraticSpace parse_inline_form(std::string_view s) {
  const auto open = s.find('(');
  if (s.substr(0, open) != "diag" || open == std::string_view::npos || s.back() != ')')
    throw ParseError(1, 1, "expected diag(a,b,...)");
  const auto inner = s.substr(open + 1, s.size() - open - 2);
  std::vector<FieldElement> d;
  std::size_t column = open + 2;
  const auto q = NumberField::rationals();
  for (const auto piece : split(inner, ',')) {
    d.push_back(parse_element(piece, q, 1, column));
    column += piece.size() + 1;
  }
  return QuadraticSpace::diagonal(d);
}

BlockComplex parse_complex(std::string_view content) {
  FormReader r(content);
  r.read_header({"pattern"});
  BlockComplex c;
  bool have_pattern = false;
  for (const auto* l : r.header_extras()) {
    if (have_pattern) throw ParseError(l->number, 1, "repeated 'pattern' line");
    if (l->tokens.size() != 2) throw ParseError(l->number, l->tokens[0].column, "expected 'pattern <name>'");
    try {
      c.pattern = parse_pattern(std::string(l->tokens[1].text));
    } catch (const Error&) {
      throw ParseError(l->number, l->tokens[1].column, "unknown pattern '" + std::string(l->tokens[1].text) + "'");
    }
    have_pattern = true;
  }
  std::map<std::string, std::size_t> index;
  while (!r.done()) {
    const auto& l = r.take();
    const auto kw = l.tokens[0].text;
    if (kw == "block") {
      if (l.tokens.size() != 2) throw ParseError(l.number, l.tokens[0].column, "expected 'block <label>'");
      const std::string label(l.tokens[1].text);
      if (index.count(label)) throw ParseError(l.number, l.tokens[1].column, "duplicate block '" + label + "'");
      auto shared = r.read_form();
      if (r.done() || r.peek().tokens[0].text != "alpha")
        throw ParseError(r.done() ? r.last_line() : r.peek().number, 1, "expected 'alpha <element>' for block " + label);
      const auto& a = r.take();
      if (a.tokens.size() < 2) throw ParseError(a.number, a.tokens[0].column, "expected 'alpha <element>'");
      const auto alpha = parse_element(joined(a.tokens, 1), r.field(), a.number, a.tokens[1].column);
      index.emplace(label, c.blocks.size());
      c.blocks.emplace_back(label, alpha, std::move(shared));
    } else if (kw == "glue") {
      if (l.tokens.size() != 3 && l.tokens.size() != 4)
        throw ParseError(l.number, l.tokens[0].column, "expected 'glue <label1> <label2> [edge label]'");
      Gluing g;
      for (int k = 0; k < 2; ++k) {
        const auto it = index.find(std::string(l.tokens[1 + k].text));
        if (it == index.end())
          throw ParseError(l.number, l.tokens[1 + k].column, "unknown block '" + std::string(l.tokens[1 + k].text) + "'");
        (k == 0 ? g.first : g.second) = it->second;
      }
      if (l.tokens.size() == 4) g.label = std::string(l.tokens[3].text);
      c.gluings.push_back(std::move(g));
    } else if (kw == "pattern") {
      throw ParseError(l.number, l.tokens[0].column, "'pattern' must precede the blocks");
    } else {
      throw ParseError(l.number, l.tokens[0].column, "unknown keyword '" + std::string(kw) + "'");
    }
  }
  if (c.blocks.empty()) throw ParseError(r.last_line(), 1, "complex has no blocks");
  return c;
}

}  // namespace hyperarith
