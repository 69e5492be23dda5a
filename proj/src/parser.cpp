#include "nsbound/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <vector>

namespace nsbound {

std::string to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kUnexpectedToken:
      return "unexpected-token";
    case ParseErrorKind::kBadExponent:
      return "bad-exponent";
    case ParseErrorKind::kDimensionMismatch:
      return "dimension-mismatch";
    case ParseErrorKind::kBadNumber:
      return "bad-number";
    case ParseErrorKind::kUnbalancedBracket:
      return "unbalanced-bracket";
  }
  return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, SourceSpan span, const std::string& message)
    : Error(std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + to_string(kind) + ": " + message),
      kind_(kind),
      span_(span) {}

namespace {

constexpr int kMaxExponent = 1'000'000;
constexpr std::size_t kMaxVariable = 99;

enum class Tok { kLBracket, kRBracket, kLParen, kRParen, kComma, kPlus, kMinus, kStar, kCaret, kSlash, kNumber, kImag, kVar, kEnd };

struct Token {
  Tok kind;
  std::size_t start;
  std::size_t end;
  std::string_view text;
};

std::string describe(const Token& t) { return t.kind == Tok::kEnd ? "end of input" : "'" + std::string(t.text) + "'"; }

// A term before the ring rank is known: variable index (1-based) -> power.
struct RawTerm {
  std::map<std::size_t, int> powers;
  GaussianRational coeff{1};
};

struct RawPoly {
  std::vector<RawTerm> terms;
  std::size_t max_var = 0;
  std::size_t max_var_offset = 0;
  std::size_t max_var_end = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) { tokenize(); }

  RawPoly poly_document() {
    RawPoly p = poly();
    expect_end();
    return p;
  }

  std::vector<std::pair<std::vector<RawPoly>, SourceSpan>> matrix_document() {
    std::vector<std::pair<std::vector<RawPoly>, SourceSpan>> rows;
    const Token open = expect_open(Tok::kLBracket, "'[' to start the matrix");
    do {
      const Token row_open = expect_open(Tok::kLBracket, "'[' to start a row");
      std::vector<RawPoly> row;
      row.push_back(poly());
      while (accept(Tok::kComma)) row.push_back(poly());
      const Token row_close = expect_close(Tok::kRBracket, row_open);
      rows.emplace_back(std::move(row), span(row_open.start, row_close.end));
    } while (accept(Tok::kComma));
    expect_close(Tok::kRBracket, open);
    expect_end();
    return rows;
  }

  bool starts_with_bracket() const { return tokens_.front().kind == Tok::kLBracket; }

  SourceSpan span(std::size_t start, std::size_t end) const {
    SourceSpan s{start, end, 1, 1};
    for (std::size_t i = 0; i < start && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++s.line;
        s.column = 1;
      } else {
        ++s.column;
      }
    }
    return s;
  }

  [[noreturn]] void fail(ParseErrorKind kind, std::size_t start, std::size_t end, const std::string& message) const {
    throw ParseError(kind, span(start, end), message);
  }

 private:
  void tokenize() {
    std::size_t i = 0;
    const std::size_t n = text_.size();
    auto push = [this](Tok kind, std::size_t start, std::size_t end) {
      tokens_.push_back({kind, start, end, text_.substr(start, end - start)});
    };
    while (i < n) {
      const char c = text_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (c == '#') {
        while (i < n && text_[i] != '\n') ++i;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        const std::size_t start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text_[i]))) ++i;
        if (i < n && text_[i] == '.') {
          ++i;
          if (i >= n || !std::isdigit(static_cast<unsigned char>(text_[i]))) {
            fail(ParseErrorKind::kBadNumber, start, i, "malformed decimal '" + std::string(text_.substr(start, i - start)) + "'");
          }
          while (i < n && std::isdigit(static_cast<unsigned char>(text_[i]))) ++i;
        }
        push(Tok::kNumber, start, i);
      } else if (c == 'z') {
        const std::size_t start = i++;
        while (i < n && std::isdigit(static_cast<unsigned char>(text_[i]))) ++i;
        if (i == start + 1) fail(ParseErrorKind::kUnexpectedToken, start, i, "variable 'z' needs an index, e.g. 'z1'");
        push(Tok::kVar, start, i);
      } else if (c == 'i' && !(i + 1 < n && std::isalnum(static_cast<unsigned char>(text_[i + 1])))) {
        push(Tok::kImag, i, i + 1);
        ++i;
      } else {
        Tok kind;
        switch (c) {
          case '[': kind = Tok::kLBracket; break;
          case ']': kind = Tok::kRBracket; break;
          case '(': kind = Tok::kLParen; break;
          case ')': kind = Tok::kRParen; break;
          case ',': kind = Tok::kComma; break;
          case '+': kind = Tok::kPlus; break;
          case '-': kind = Tok::kMinus; break;
          case '*': kind = Tok::kStar; break;
          case '^': kind = Tok::kCaret; break;
          case '/': kind = Tok::kSlash; break;
          default: {
            std::size_t end = i + 1;
            while (end < n && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
            fail(ParseErrorKind::kUnexpectedToken, i, end,
                 "unexpected '" + std::string(text_.substr(i, end - i)) + "'");
          }
        }
        push(kind, i, i + 1);
        ++i;
      }
    }
    push(Tok::kEnd, n, n);
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    next();
    return true;
  }

  [[noreturn]] void unexpected(const std::string& wanted) {
    const Token& t = peek();
    if (t.kind == Tok::kRBracket || t.kind == Tok::kRParen) {
      fail(ParseErrorKind::kUnbalancedBracket, t.start, t.end, "unmatched " + describe(t) + "; expected " + wanted);
    }
    fail(ParseErrorKind::kUnexpectedToken, t.start, t.end, "unexpected " + describe(t) + "; expected " + wanted);
  }

  Token expect_open(Tok kind, const std::string& wanted) {
    if (peek().kind != kind) unexpected(wanted);
    return next();
  }

  Token expect_close(Tok kind, const Token& opener) {
    if (peek().kind == kind) return next();
    const char* closer = kind == Tok::kRBracket ? "']'" : "')'";
    if (peek().kind == Tok::kEnd) {
      fail(ParseErrorKind::kUnbalancedBracket, opener.start, opener.end,
           describe(opener) + " is never closed; expected " + closer);
    }
    fail(ParseErrorKind::kUnexpectedToken, peek().start, peek().end,
         "unexpected " + describe(peek()) + "; expected " + closer);
  }

  void expect_end() {
    if (peek().kind != Tok::kEnd) unexpected("end of input");
  }

  RawPoly poly() {
    RawPoly p;
    bool negative = false;
    if (accept(Tok::kMinus)) {
      negative = true;
    } else {
      accept(Tok::kPlus);
    }
    add_term(p, term(), negative);
    while (peek().kind == Tok::kPlus || peek().kind == Tok::kMinus) {
      negative = next().kind == Tok::kMinus;
      add_term(p, term(), negative);
    }
    return p;
  }

  void add_term(RawPoly& p, std::pair<RawTerm, Token> t, bool negative) {
    if (negative) t.first.coeff = -t.first.coeff;
    for (const auto& [var, power] : t.first.powers) {
      if (var > p.max_var) {
        p.max_var = var;
        p.max_var_offset = var_spans_[var].first;
        p.max_var_end = var_spans_[var].second;
      }
    }
    p.terms.push_back(std::move(t.first));
  }

  std::pair<RawTerm, Token> term() {
    RawTerm t;
    const Token first = peek();
    factor(t);
    while (accept(Tok::kStar)) factor(t);
    return {std::move(t), first};
  }

  void factor(RawTerm& t) {
    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::kVar: {
        next();
        const std::string digits(tok.text.substr(1));
        const std::size_t index = digits.size() > 3 ? kMaxVariable + 1 : std::stoul(digits);
        if (index < 1 || index > kMaxVariable || digits.front() == '0') {
          fail(ParseErrorKind::kUnexpectedToken, tok.start, tok.end,
               "variable " + describe(tok) + " must be one of z1 ... z99");
        }
        var_spans_.try_emplace(index, tok.start, tok.end);
        int power = 1;
        if (accept(Tok::kCaret)) power = exponent();
        t.powers[index] += power;
        return;
      }
      case Tok::kNumber:
      case Tok::kImag:
        t.coeff *= number();
        return;
      case Tok::kLParen: {
        const Token open = next();
        t.coeff *= complex_sum();
        expect_close(Tok::kRParen, open);
        return;
      }
      default:
        unexpected("a coefficient or a variable");
    }
  }

  int exponent() {
    bool negative = false;
    bool parenthesized = false;
    Token open = peek();
    if (accept(Tok::kLParen)) parenthesized = true;
    if (accept(Tok::kMinus)) {
      negative = true;
    } else {
      accept(Tok::kPlus);
    }
    const Token& tok = peek();
    if (tok.kind != Tok::kNumber || tok.text.find('.') != std::string_view::npos) {
      fail(ParseErrorKind::kBadExponent, tok.start, tok.end, "exponent must be an integer, got " + describe(tok));
    }
    next();
    if (tok.text.size() > 7 || std::stol(std::string(tok.text)) > kMaxExponent) {
      fail(ParseErrorKind::kBadExponent, tok.start, tok.end, "exponent " + describe(tok) + " is too large");
    }
    const int value = std::stoi(std::string(tok.text));
    if (parenthesized) expect_close(Tok::kRParen, open);
    return negative ? -value : value;
  }

  mpq_class literal() {
    const Token tok = next();
    mpq_class value;
    const auto dot = tok.text.find('.');
    if (dot == std::string_view::npos) {
      value = mpz_class(std::string(tok.text), 10);
    } else {
      const std::string whole(tok.text.substr(0, dot));
      const std::string frac(tok.text.substr(dot + 1));
      mpz_class denom;
      mpz_ui_pow_ui(denom.get_mpz_t(), 10, frac.size());
      value = mpq_class(mpz_class(whole + frac, 10), denom);
      value.canonicalize();
    }
    if (peek().kind == Tok::kSlash) {
      const Token slash = next();
      const Token& den = peek();
      if (den.kind != Tok::kNumber || den.text.find('.') != std::string_view::npos) {
        fail(ParseErrorKind::kBadNumber, slash.start, den.end, "denominator must be a positive integer, got " + describe(den));
      }
      next();
      const mpz_class d(std::string(den.text), 10);
      if (d == 0) fail(ParseErrorKind::kBadNumber, tok.start, den.end, "zero denominator in '" + std::string(text_.substr(tok.start, den.end - tok.start)) + "'");
      if (dot != std::string_view::npos) {
        fail(ParseErrorKind::kBadNumber, tok.start, den.end, "a fraction needs an integer numerator");
      }
      value /= mpq_class(d);
    }
    return value;
  }

  // number := literal | literal 'i' | 'i'
  GaussianRational number() {
    if (accept(Tok::kImag)) return GaussianRational::imaginary_unit();
    if (peek().kind != Tok::kNumber) unexpected("a number");
    mpq_class value = literal();
    if (accept(Tok::kImag)) return {0, value};
    return {value, 0};
  }

  // Inside parentheses: a signed sum of real and imaginary numbers.
  GaussianRational complex_sum() {
    GaussianRational total;
    bool negative = accept(Tok::kMinus);
    if (!negative) accept(Tok::kPlus);
    while (true) {
      GaussianRational v = number();
      total += negative ? -v : v;
      if (peek().kind == Tok::kPlus || peek().kind == Tok::kMinus) {
        negative = next().kind == Tok::kMinus;
      } else {
        return total;
      }
    }
  }

  std::string_view text_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> var_spans_;
};

LaurentPoly build(const RawPoly& raw, std::size_t dim) {
  LaurentPoly p(dim);
  for (const auto& t : raw.terms) {
    Exponent e(dim, 0);
    for (const auto& [var, power] : t.powers) e[var - 1] += power;
    p.add_term(e, t.coeff);
  }
  return p;
}

std::string monomial_text(const Exponent& e) {
  std::string out;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'z' + std::to_string(j + 1);
    if (e[j] != 1) out += '^' + std::to_string(e[j]);
  }
  return out;
}

}  // namespace

LaurentPoly parse_poly(std::string_view text, std::optional<std::size_t> expected_dim) {
  Parser parser(text);
  const RawPoly raw = parser.poly_document();
  if (expected_dim) {
    if (raw.max_var > *expected_dim) {
      parser.fail(ParseErrorKind::kDimensionMismatch, raw.max_var_offset, raw.max_var_end,
                  "variable z" + std::to_string(raw.max_var) + " exceeds the expected " +
                      std::to_string(*expected_dim) + " variables");
    }
    return build(raw, *expected_dim);
  }
  return build(raw, std::max<std::size_t>(raw.max_var, 1));
}

PolyMatrix parse_matrix(std::string_view text) {
  Parser parser(text);
  const auto rows = parser.matrix_document();
  std::size_t dim = 1;
  for (const auto& [row, span] : rows) {
    for (const auto& entry : row) dim = std::max(dim, entry.max_var);
  }
  const std::size_t cols = rows.front().first.size();
  for (const auto& [row, span] : rows) {
    if (row.size() != cols) {
      throw ParseError(ParseErrorKind::kDimensionMismatch, span,
                       "ragged rows: row has " + std::to_string(row.size()) + " entries, the first row has " +
                           std::to_string(cols));
    }
  }
  PolyMatrix m(rows.size(), cols, dim);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = build(rows[i].first[j], dim);
  }
  return m;
}

PolyMatrix parse_matrix_or_poly(std::string_view text) {
  if (Parser(text).starts_with_bracket()) return parse_matrix(text);
  return PolyMatrix::from_rows({{parse_poly(text)}});
}

std::string format_poly(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const std::string mono = monomial_text(e);
    bool negative = false;
    std::string body;
    if (c.is_real() || sgn(c.re()) == 0) {
      const bool imag = !c.is_real();
      const mpq_class& part = imag ? c.im() : c.re();
      negative = sgn(part) < 0;
      const mpq_class mag = abs(part);
      if (imag) {
        body = mag == 1 ? "i" : mag.get_str() + "i";
      } else if (mag != 1 || mono.empty()) {
        body = mag.get_str();
      }
    } else {
      body = "(" + c.re().get_str() + (sgn(c.im()) < 0 ? " - " : " + ");
      const mpq_class mag = abs(c.im());
      body += (mag == 1 ? std::string() : mag.get_str()) + "i)";
    }
    if (!mono.empty()) body += body.empty() ? mono : "*" + mono;
    if (first) {
      out += negative ? "-" + body : body;
      first = false;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out;
}

std::string format_matrix(const PolyMatrix& a) {
  std::string out = "[";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    out += i == 0 ? "[" : ", [";
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j > 0) out += ", ";
      out += format_poly(a(i, j));
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace nsbound
