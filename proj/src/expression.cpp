#include "weylcoh/expression.hpp"

#include <cctype>
#include <sstream>

#include "weylcoh/errors.hpp"

namespace weylcoh {
namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t n) : text_(text), n_(n) {}

  WeylElement parse_all() {
    WeylElement e = expression();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

 private:
  std::string_view text_;
  std::size_t n_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Integer unsigned_integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  WeylElement expression() {
    WeylElement acc = term();
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  WeylElement term() {
    WeylElement acc = unary();
    while (accept('*')) acc = acc * unary();
    skip_space();
    if (pos_ < text_.size() &&
        (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '('))
      fail("missing '*' between factors");
    return acc;
  }

  WeylElement unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  WeylElement power() {
    WeylElement base = primary();
    if (accept('^')) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '-') fail("negative exponent");
      Integer e = unsigned_integer();
      if (!e.fits_ulong_p() || e > 10000) fail("exponent too large");
      WeylElement r = WeylElement::constant(n_, 1);
      for (unsigned long k = 0; k < e.get_ui(); ++k) r = r * base;
      return r;
    }
    return base;
  }

  WeylElement primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      WeylElement e = expression();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational q(unsigned_integer());
      std::size_t slash = pos_;
      if (accept('/')) {
        Integer den = unsigned_integer();
        if (den == 0) {
          pos_ = slash;
          fail("division by zero");
        }
        q /= Rational(den);
      }
      return WeylElement::constant(n_, q);
    }
    if (c == 'x' || c == 'd') {
      std::size_t start = pos_;
      ++pos_;
      std::size_t digits = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (digits == pos_) {
        pos_ = start;
        fail("variable needs an index");
      }
      unsigned long idx = std::stoul(std::string(text_.substr(digits, pos_ - digits)));
      if (idx < 1 || idx > n_) {
        pos_ = start;
        fail("variable index " + std::to_string(idx) + " out of range 1.." + std::to_string(n_));
      }
      return c == 'x' ? WeylElement::x(n_, idx - 1) : WeylElement::d(n_, idx - 1);
    }
    fail(std::string("unexpected '") + c + "'");
  }
};

std::string render_monomial(const WeylMonomial& m, const char* dname) {
  std::string out;
  auto factor = [&](const std::string& name, int e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += name;
    if (e > 1) out += '^' + std::to_string(e);
  };
  for (std::size_t i = 0; i < m.n(); ++i) factor("x" + std::to_string(i + 1), m.a(i));
  for (std::size_t i = 0; i < m.n(); ++i) factor(dname + std::to_string(i + 1), m.b(i));
  return out;
}

template <class Terms>
std::string render_terms(const Terms& terms, const char* dname) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono = render_monomial(m, dname);
    if (mono.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + '*';
      out += mono;
    }
  }
  return out;
}

}  // namespace

WeylElement parse_weyl(std::string_view text, std::size_t n) {
  if (n == 0) throw InputError("number of variables must be at least 1");
  return Parser(text, n).parse_all();
}

std::vector<WeylElement> parse_row(std::string_view text, std::size_t n) {
  std::size_t lo = text.find_first_not_of(" \t");
  std::size_t hi = text.find_last_not_of(" \t");
  std::size_t offset = 0;
  if (lo != std::string_view::npos && text[lo] == '[') {
    if (text[hi] != ']') throw ParseError("expected ']'", hi);
    offset = lo + 1;
    text = text.substr(lo + 1, hi - lo - 1);
  }
  std::vector<WeylElement> row;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == std::string_view::npos ? text.size() - start
                                                                                 : comma - start);
    try {
      row.push_back(parse_weyl(piece, n));
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()).substr(0, std::string(e.what()).rfind(" at position")),
                       offset + start + e.position());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return row;
}

std::string render(const WeylElement& f) { return render_terms(f.terms(), "d"); }

std::string render(const SymbolPolynomial& s) { return render_terms(s.terms(), "xi"); }

std::string render_row(const std::vector<WeylElement>& row) {
  std::ostringstream out;
  out << '[';
  for (std::size_t k = 0; k < row.size(); ++k) out << (k ? ", " : "") << render(row[k]);
  out << ']';
  return out.str();
}

}  // namespace weylcoh
