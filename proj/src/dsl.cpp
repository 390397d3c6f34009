#include "gamedim/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>

#include "gamedim/errors.hpp"

namespace gamedim {

std::string ParseDiagnostic::to_string() const {
  return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
}

namespace {

enum class TokenKind { Word, Int, Punct, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

struct SyntaxError {
  ParseDiagnostic diagnostic;
};

bool word_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_blank();
    Token tok;
    tok.line = line_;
    tok.column = column_;
    if (pos_ >= text_.size()) return tok;
    const char c = text_[pos_];
    if (word_start(c)) {
      tok.kind = TokenKind::Word;
      while (pos_ < text_.size() && word_char(text_[pos_])) tok.text += advance();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      tok.kind = TokenKind::Int;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        tok.text += advance();
      }
    } else if (std::string_view("{}[]:;,").find(c) != std::string_view::npos) {
      tok.kind = TokenKind::Punct;
      tok.text = advance();
    } else {
      throw SyntaxError{{tok.line, tok.column, "unexpected character " + describe(c)}};
    }
    return tok;
  }

 private:
  static std::string describe(char c) {
    const auto byte = static_cast<unsigned char>(c);
    if (std::isprint(byte)) return std::string("'") + c + "'";
    static constexpr char kHex[] = "0123456789abcdef";
    return std::string("byte 0x") + kHex[byte >> 4] + kHex[byte & 0xf];
  }

  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v') {
        advance();
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { current_ = lexer_.next(); }

  RulesetSpec parse() {
    RulesetSpec spec;
    expect_word("game");
    if (current_.kind == TokenKind::Word) spec.name = take().text;
    expect_punct("{");

    std::optional<Token> heaps_at;
    std::optional<Token> move_at;
    while (!is_punct("}")) {
      if (current_.kind != TokenKind::Word) fail("expected 'heaps', 'move' or '}'");
      const Token keyword = current_;
      if (keyword.text == "heaps") {
        if (heaps_at) fail_at(keyword, "duplicate heaps declaration");
        heaps_at = take();
        expect_punct(":");
        expect_punct("[");
        std::vector<std::int64_t> heaps;
        for (std::uint32_t h : int_list("]")) heaps.push_back(h);
        spec.start_heaps = HeapPosition(std::move(heaps));
      } else if (keyword.text == "move") {
        if (move_at) fail_at(keyword, "duplicate move declaration");
        move_at = take();
        expect_punct(":");
        parse_move(spec);
      } else {
        fail("expected 'heaps', 'move' or '}'");
      }
      expect_punct(";");
    }
    const Token close = take();
    if (current_.kind != TokenKind::End) fail("unexpected input after '}'");
    if (!heaps_at) fail_at(close, "missing heaps declaration");
    if (!move_at) fail_at(close, "missing move declaration");
    return spec;
  }

 private:
  void parse_move(RulesetSpec& spec) {
    if (current_.kind != TokenKind::Word) fail("expected 'take-any', 'take-heaps' or 'take-set'");
    const std::string kind = current_.text;
    if (kind == "take-any") {
      take();
      spec.move_kind = MoveKind::TakeAny;
    } else if (kind == "take-heaps") {
      take();
      spec.move_kind = MoveKind::TakeHeaps;
    } else if (kind == "take-set") {
      take();
      expect_punct("{");
      spec.move_kind = MoveKind::TakeSet;
      spec.take_set = int_list("}");
      std::sort(spec.take_set.begin(), spec.take_set.end());
      spec.take_set.erase(std::unique(spec.take_set.begin(), spec.take_set.end()),
                          spec.take_set.end());
    } else {
      fail("expected 'take-any', 'take-heaps' or 'take-set'");
    }
  }

  /// int ("," int)* followed by `close`; every value must be positive.
  std::vector<std::uint32_t> int_list(const char* close) {
    std::vector<std::uint32_t> values;
    while (true) {
      if (current_.kind != TokenKind::Int) fail("expected a positive integer");
      const Token tok = take();
      std::uint64_t value = 0;
      for (char c : tok.text) {
        value = value * 10 + static_cast<std::uint64_t>(c - '0');
        if (value > UINT32_MAX) fail_at(tok, "integer out of range");
      }
      if (value == 0) fail_at(tok, "value must be positive");
      values.push_back(static_cast<std::uint32_t>(value));
      if (is_punct(",")) {
        take();
        continue;
      }
      expect_punct(close);
      return values;
    }
  }

  bool is_punct(std::string_view p) const {
    return current_.kind == TokenKind::Punct && current_.text == p;
  }

  Token take() {
    Token tok = std::move(current_);
    current_ = lexer_.next();
    return tok;
  }

  void expect_punct(std::string_view p) {
    if (!is_punct(p)) fail("expected '" + std::string(p) + "'");
    take();
  }

  void expect_word(std::string_view w) {
    if (current_.kind != TokenKind::Word || current_.text != w) {
      fail("expected '" + std::string(w) + "'");
    }
    take();
  }

  [[noreturn]] void fail(const std::string& message) const {
    std::string found = current_.kind == TokenKind::End ? "end of input" : "'" + current_.text + "'";
    fail_at(current_, message + ", found " + found);
  }

  [[noreturn]] static void fail_at(const Token& tok, const std::string& message) {
    throw SyntaxError{{tok.line, tok.column, message}};
  }

  Lexer lexer_;
  Token current_;
};

}  // namespace

ParseResult parse_ruleset(std::string_view text) {
  try {
    return Parser(text).parse();
  } catch (const SyntaxError& e) {
    return e.diagnostic;
  }
}

std::string print_ruleset(const RulesetSpec& spec) {
  auto join = [](const std::vector<std::uint32_t>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i > 0) out += ", ";
      out += std::to_string(values[i]);
    }
    return out;
  };
  std::string out = "game";
  if (!spec.name.empty()) out += " " + spec.name;
  out += " {\n  heaps: [" + join(spec.start_heaps.heaps()) + "];\n  move: ";
  switch (spec.move_kind) {
    case MoveKind::TakeAny: out += "take-any"; break;
    case MoveKind::TakeHeaps: out += "take-heaps"; break;
    case MoveKind::TakeSet: out += "take-set {" + join(spec.take_set) + "}"; break;
  }
  return out + ";\n}\n";
}

GameGraph build_from_spec(const RulesetSpec& spec) {
  if (spec.start_heaps.empty()) throw ArgumentError("ruleset has no start heaps");
  if (spec.move_kind == MoveKind::TakeSet && spec.take_set.empty()) {
    throw ArgumentError("take-set ruleset has an empty subtraction set");
  }

  // Amounts that may be subtracted from a heap of size h in position p.
  auto amounts = [&spec](const HeapPosition& p, std::uint32_t h) {
    std::vector<std::uint32_t> out;
    switch (spec.move_kind) {
      case MoveKind::TakeAny:
        out.resize(h);
        std::iota(out.begin(), out.end(), 1u);
        break;
      case MoveKind::TakeSet:
        out = spec.take_set;
        break;
      case MoveKind::TakeHeaps:
        out = p.heaps();
        break;
    }
    std::erase_if(out, [h](std::uint32_t s) { return s > h; });
    return out;
  };

  auto moves = [&](const HeapPosition& p) {
    std::vector<HeapPosition> next;
    const auto& heaps = p.heaps();
    for (std::size_t i = 0; i < heaps.size(); ++i) {
      if (i > 0 && heaps[i] == heaps[i - 1]) continue;
      std::vector<std::uint32_t> steps = amounts(p, heaps[i]);
      std::sort(steps.begin(), steps.end());
      steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
      for (std::uint32_t s : steps) next.push_back(p.with_heap(i, heaps[i] - s));
    }
    return next;
  };

  return build_reachable(spec.name.empty() ? "game" : spec.name, spec.start_heaps, moves,
                         [](const HeapPosition& p) { return p.label(); });
}

}  // namespace gamedim
