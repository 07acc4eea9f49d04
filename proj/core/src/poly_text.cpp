#include "operadlab/poly_text.hpp"

#include <cctype>
#include <set>
#include <stdexcept>

namespace operadlab {

std::string tree_str(const MagmaTree& t) { return t.str(); }

std::string poly_str(const TreePoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : p.terms()) {
    if (first) {
      out += rat_str(c);
      first = false;
    } else if (c < 0) {
      out += " - " + rat_str(Rational(-c));
    } else {
      out += " + " + rat_str(c);
    }
    out += ' ';
    out += t.str();
  }
  return out;
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse error at offset " + std::to_string(i) + ": " + what);
  }
  long integer() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail("expected integer");
    return std::stol(s.substr(start, i - start));
  }
};

MagmaTree tree(Cursor& c) {
  char ch = c.peek();
  if (ch == '(') {
    ++c.i;
    MagmaTree l = tree(c);
    MagmaTree r = tree(c);
    if (c.peek() != ')') c.fail("expected ')'");
    ++c.i;
    return MagmaTree::node(l, r);
  }
  if (std::isdigit(static_cast<unsigned char>(ch))) {
    long v = c.integer();
    if (v < 1 || v > 127) c.fail("leaf index out of range");
    return MagmaTree::leaf(static_cast<int>(v));
  }
  c.fail("expected tree");
}

Rational rational(Cursor& c) {
  long num = c.integer();
  if (c.peek() == '/') {
    ++c.i;
    long den = c.integer();
    if (den == 0) c.fail("zero denominator");
    return rat(num, den);
  }
  return rat(num);
}

}  // namespace

MagmaTree parse_tree(const std::string& text) {
  Cursor c{text};
  MagmaTree t = tree(c);
  if (!c.done()) c.fail("trailing input after tree");
  return t;
}

TreePoly parse_poly(const std::string& text) {
  Cursor c{text};
  struct Parsed {
    Rational coeff;
    MagmaTree t;
  };
  std::vector<Parsed> parts;
  int sign = 1;
  if (c.peek() == '-') {
    sign = -1;
    ++c.i;
  } else if (c.peek() == '+') {
    ++c.i;
  }
  for (;;) {
    Rational coeff = rational(c);
    // "0" with no tree is the zero polynomial (only as a lone term).
    if (coeff == 0 && parts.empty() && c.done()) return TreePoly(0);
    if (c.peek() == '*') ++c.i;
    MagmaTree t = tree(c);
    auto labels = t.leaf_sequence();
    std::set<int> distinct(labels.begin(), labels.end());
    if (distinct.size() != labels.size()) c.fail("repeated variable in monomial");
    parts.push_back({Rational(sign) * coeff, t});
    if (c.done()) break;
    char ch = c.peek();
    if (ch == '+')
      sign = 1;
    else if (ch == '-')
      sign = -1;
    else
      c.fail("expected '+' or '-'");
    ++c.i;
  }
  int arity = 0;
  for (const auto& p : parts)
    for (int l : p.t.leaf_sequence()) arity = std::max(arity, l);
  TreePoly out(arity);
  for (const auto& p : parts) out.add_term(p.t, p.coeff);
  return out;
}

}  // namespace operadlab
