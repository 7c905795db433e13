#include "siggb/problem.hpp"

#include "siggb/errors.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace siggb {

Ring ProblemFile::ring() const {
  return Ring(PrimeField(modulus), vars, TermOrder(order, vars.size()));
}

namespace {

using Kind = ParseError::Kind;

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

// Recursive descent over one line:
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := primary ['^' integer]
//   primary := integer | name | '(' expr ')' | '-' factor
class ExprParser {
public:
  ExprParser(const Ring& ring, std::string_view text, std::size_t line)
      : ring_(ring), text_(text), line_(line) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size())
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& msg, Kind kind = Kind::Syntax) const {
    throw ParseError(kind, line_, msg);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc;
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    Polynomial t = term();
    acc = negate ? ring_.neg(t) : t;
    for (;;) {
      if (accept('+'))
        acc = ring_.add(acc, term());
      else if (accept('-'))
        acc = ring_.sub(acc, term());
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*'))
      acc = ring_.mul(acc, factor());
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (!accept('^'))
      return base;
    skip_space();
    if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected an exponent after '^'");
    std::uint64_t e = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      e = e * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
      if (e > 65535)
        fail("exponent too large");
    }
    if (e == 0)
      fail("exponents must be positive");
    try {
      return ring_.pow(base, static_cast<unsigned>(e));
    } catch (const OverflowError&) {
      fail("exponent too large");
    }
  }

  Polynomial primary() {
    skip_space();
    if (pos_ == text_.size())
      fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')'))
        fail("missing ')'");
      return p;
    }
    if (c == '-') {
      ++pos_;
      return ring_.neg(factor());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      // Reduce while reading so any length of digits is accepted.
      const std::uint64_t p = ring_.field().modulus();
      std::uint64_t v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        v = (v * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0')) % p;
      return ring_.term(FieldElement{static_cast<std::uint32_t>(v)}, ring_.one());
    }
    if (is_ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_ident_char(text_[pos_]))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      const auto& names = ring_.names();
      auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end())
        fail("unknown variable '" + name + "'", Kind::UnknownVariable);
      return ring_.variable(static_cast<std::size_t>(it - names.begin()));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const Ring& ring_;
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::uint64_t parse_modulus(std::string_view s, std::size_t line) {
  if (s.empty() || !std::all_of(s.begin(), s.end(),
                                [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError(Kind::Syntax, line, "field expects a positive integer");
  if (s.size() > 10)
    throw ParseError(Kind::NotPrime, line, "field modulus must be a prime below 2^32");
  const std::uint64_t p = std::stoull(std::string(s));
  if (p > 0xFFFFFFFFull || !is_prime(p))
    throw ParseError(Kind::NotPrime, line, std::to_string(p) + " is not a supported prime");
  return p;
}

std::vector<std::string> parse_vars(std::string_view s, std::size_t line) {
  std::vector<std::string> vars;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = s.find(',', start);
    std::string_view name = trim(s.substr(start, comma == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : comma - start));
    if (name.empty() || !is_ident_start(name.front()) ||
        !std::all_of(name.begin(), name.end(), is_ident_char))
      throw ParseError(Kind::Syntax, line, "bad variable name '" + std::string(name) + "'");
    if (std::find(vars.begin(), vars.end(), name) != vars.end())
      throw ParseError(Kind::Syntax, line, "variable '" + std::string(name) + "' declared twice");
    vars.emplace_back(name);
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  if (vars.size() > Monomial::kMaxVariables)
    throw ParseError(Kind::Syntax, line,
                     "at most " + std::to_string(Monomial::kMaxVariables) + " variables");
  return vars;
}

TermOrderKind parse_order(std::string_view s, std::size_t line) {
  if (s == "lex")
    return TermOrderKind::Lex;
  if (s == "grlex")
    return TermOrderKind::GrLex;
  if (s == "grevlex")
    return TermOrderKind::GrevLex;
  throw ParseError(Kind::Syntax, line, "order must be lex, grlex or grevlex");
}

} // namespace

Polynomial parse_polynomial(const Ring& ring, std::string_view text, std::size_t line) {
  return ExprParser(ring, text, line).parse();
}

ProblemFile parse_problem(std::string_view text) {
  ProblemFile out;
  std::optional<std::size_t> field_line, vars_line, order_line, polys_line;
  std::vector<std::pair<std::size_t, std::string>> exprs;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty())
      continue;
    if (polys_line) {
      exprs.emplace_back(line_no, std::string(line));
      continue;
    }
    if (line == "polys:") {
      polys_line = line_no;
      continue;
    }
    std::size_t space = line.find_first_of(" \t");
    std::string_view key = line.substr(0, space);
    std::string_view rest = space == std::string_view::npos ? "" : trim(line.substr(space));
    auto claim = [&](std::optional<std::size_t>& seen) {
      if (seen)
        throw ParseError(Kind::DuplicateSection, line_no,
                         "duplicate '" + std::string(key) + "' (first on line " +
                             std::to_string(*seen) + ")");
      seen = line_no;
    };
    if (key == "field") {
      claim(field_line);
      out.modulus = parse_modulus(rest, line_no);
    } else if (key == "vars") {
      claim(vars_line);
      out.vars = parse_vars(rest, line_no);
    } else if (key == "order") {
      claim(order_line);
      out.order = parse_order(rest, line_no);
    } else {
      throw ParseError(Kind::Syntax, line_no, "unknown directive '" + std::string(key) + "'");
    }
  }
  if (!field_line)
    throw ParseError(Kind::Syntax, line_no, "missing 'field' line");
  if (!vars_line)
    throw ParseError(Kind::Syntax, line_no, "missing 'vars' line");
  if (!polys_line)
    throw ParseError(Kind::Syntax, line_no, "missing 'polys:' section");

  const Ring ring = out.ring();
  for (const auto& [no, expr] : exprs)
    out.polys.push_back(parse_polynomial(ring, expr, no));
  return out;
}

std::string render_problem(const ProblemFile& problem) {
  const Ring ring = problem.ring();
  std::ostringstream os;
  os << "field " << problem.modulus << '\n';
  os << "vars ";
  for (std::size_t i = 0; i < problem.vars.size(); ++i)
    os << (i ? "," : "") << problem.vars[i];
  os << '\n';
  os << "order " << to_string(problem.order) << '\n';
  os << "polys:\n";
  for (const Polynomial& p : problem.polys)
    os << ring.render(p) << '\n';
  return os.str();
}

} // namespace siggb
