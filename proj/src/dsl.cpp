#include "stanley/dsl.hpp"

#include <cctype>

namespace stanley {

namespace {

struct Token {
  enum class Kind { Word, Int, Symbol, End };
  Kind kind = Kind::End;
  std::string text;
  long value = 0;  // for Int
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, current_.line, current_.column);
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
    current_ = Token{};
    current_.line = line_;
    current_.column = column_;
    if (pos_ >= text_.size()) {
      current_.kind = Token::Kind::End;
      current_.text = "end of input";
      return;
    }
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        consume();
      current_.kind = Token::Kind::Int;
      current_.text = text_.substr(start, pos_ - start);
      if (current_.text.size() > 9) fail("integer too large");
      current_.value = std::stol(current_.text);
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isalnum(static_cast<unsigned char>(text_[pos_])))
        consume();
      current_.kind = Token::Kind::Word;
      current_.text = text_.substr(start, pos_ - start);
    } else if (c == '=' || c == ':' || c == '*' || c == ',') {
      current_.kind = Token::Kind::Symbol;
      current_.text = std::string(1, c);
      consume();
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
  }

  void consume() {
    ++pos_;
    ++column_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  Token current_;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  ParsedInput parse() {
    const Token& t = lex_.peek();
    if (t.kind != Token::Kind::Word)
      lex_.fail("expected 'kpartite', 'hyperbipartite' or 'ideal'");
    ParsedInput input;
    if (t.text == "kpartite") {
      lex_.take();
      input.kpartite = parse_kpartite();
      parse_extensions(input);
    } else if (t.text == "hyperbipartite") {
      lex_.take();
      input.hypergraph = parse_hypergraph();
      parse_extensions(input);
    } else if (t.text == "ideal") {
      lex_.take();
      input.explicit_ideal = parse_explicit();
    } else {
      lex_.fail("unknown input kind '" + t.text + "'");
    }
    if (lex_.peek().kind != Token::Kind::End)
      lex_.fail("unexpected trailing token '" + lex_.peek().text + "'");
    return input;
  }

 private:
  long expect_int(const std::string& what) {
    if (lex_.peek().kind != Token::Kind::Int) lex_.fail("expected " + what);
    return lex_.take().value;
  }

  void expect_symbol(char c) {
    if (lex_.peek().kind != Token::Kind::Symbol || lex_.peek().text[0] != c)
      lex_.fail(std::string("expected '") + c + "'");
    lex_.take();
  }

  void expect_keyword(const std::string& word) {
    if (lex_.peek().kind != Token::Kind::Word || lex_.peek().text != word)
      lex_.fail("expected '" + word + "'");
    lex_.take();
  }

  long keyed_int(const std::string& key) {
    expect_keyword(key);
    expect_symbol('=');
    return expect_int("integer after '" + key + "='");
  }

  KPartiteSpec parse_kpartite() {
    std::vector<int> parts;
    while (lex_.peek().kind == Token::Kind::Int)
      parts.push_back(static_cast<int>(lex_.take().value));
    if (parts.empty()) lex_.fail("expected part sizes after 'kpartite'");
    return KPartiteSpec::create(std::move(parts));
  }

  HypergraphSpec parse_hypergraph() {
    long v1 = keyed_int("V1");
    long v2 = keyed_int("V2");
    long s = keyed_int("s");
    return HypergraphSpec::create(static_cast<int>(v1), static_cast<int>(v2),
                                  static_cast<int>(s));
  }

  void parse_extensions(ParsedInput& input) {
    while (lex_.peek().kind == Token::Kind::Word && lex_.peek().text == "extend") {
      lex_.take();
      long p = keyed_int("p");
      input.extended = true;
      // Chained extensions produce the same ideal as one extension by the
      // total, so they accumulate.
      input.extend_p += static_cast<int>(p);
    }
  }

  SqfreeIdeal parse_explicit() {
    long n = keyed_int("n");
    if (n < 1 || n > kMaxVariables) lex_.fail("n must lie in [1, 64]");
    expect_symbol(':');
    std::vector<Monomial> gens;
    while (true) {
      gens.push_back(parse_generator(static_cast<int>(n)));
      if (lex_.peek().kind == Token::Kind::Symbol && lex_.peek().text == ",") {
        lex_.take();
        continue;
      }
      break;
    }
    return minimalize(std::move(gens), static_cast<int>(n));
  }

  Monomial parse_generator(int n) {
    Monomial m;
    while (true) {
      const Token& t = lex_.peek();
      if (t.kind != Token::Kind::Word || t.text.size() < 2 || t.text[0] != 'x' ||
          t.text.find_first_not_of("0123456789", 1) != std::string::npos)
        lex_.fail("expected a variable like 'x3'");
      long idx = std::stol(t.text.substr(1));
      if (idx < 1 || idx > n)
        lex_.fail("variable index " + std::to_string(idx) + " outside [1, " +
                  std::to_string(n) + "]");
      std::uint64_t bit = std::uint64_t{1} << (idx - 1);
      if (m.mask & bit) lex_.fail("duplicate variable x" + std::to_string(idx) +
                                  " in generator (squarefree)");
      m.mask |= bit;
      lex_.take();
      if (lex_.peek().kind == Token::Kind::Symbol && lex_.peek().text == "*") {
        lex_.take();
        continue;
      }
      break;
    }
    return m;
  }

  Lexer lex_;
};

}  // namespace

SqfreeIdeal ParsedInput::base_ideal() const {
  if (kpartite) return kpartite_edge_ideal(*kpartite);
  if (hypergraph) return uniform_bipartite_hypergraph_ideal(*hypergraph);
  return *explicit_ideal;
}

SqfreeIdeal ParsedInput::build() const {
  SqfreeIdeal base = base_ideal();
  if (!extended || extend_p == 0) return base;
  return extend_with_variables(ExtensionSpec::create(std::move(base), extend_p));
}

std::string ParsedInput::describe() const {
  std::string out;
  if (kpartite) out = kpartite->str();
  else if (hypergraph) out = hypergraph->str();
  else out = "explicit";
  if (extended) out += " extend p=" + std::to_string(extend_p);
  return out;
}

ParsedInput parse_ideal_dsl(const std::string& text) { return Parser(text).parse(); }

}  // namespace stanley
