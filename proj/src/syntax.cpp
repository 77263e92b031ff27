#include <string>
#include <vector>

#include "l5/formula.hpp"

namespace l5 {
namespace {

enum class Tok { Ident, Bot, Top, Not, Box, And, Or, Implies, Iff, Ident3, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Bot: return "'bot'";
    case Tok::Top: return "'top'";
    case Tok::Not: return "'~'";
    case Tok::Box: return "'box'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Implies: return "'->'";
    case Tok::Iff: return "'<->'";
    case Tok::Ident3: return "'=='";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Alias {
  std::string_view utf8;
  Tok kind;
};

constexpr Alias kUnicode[] = {
    {"⊥", Tok::Bot},     {"⊤", Tok::Top},  {"¬", Tok::Not},  {"□", Tok::Box},
    {"∧", Tok::And},     {"∨", Tok::Or},   {"→", Tok::Implies},
    {"↔", Tok::Iff},     {"≡", Tok::Ident3},
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto starts = [&](std::string_view p) { return s.substr(i, p.size()) == p; };
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (c >= 'a' && c <= 'z') {
      while (i < s.size() && ((s[i] >= 'a' && s[i] <= 'z') || (s[i] >= 'A' && s[i] <= 'Z') ||
                              (s[i] >= '0' && s[i] <= '9') || s[i] == '_'))
        ++i;
      std::string word(s.substr(start, i - start));
      Tok k = word == "bot" ? Tok::Bot : word == "top" ? Tok::Top : word == "box" ? Tok::Box : Tok::Ident;
      out.push_back({k, word, start});
      continue;
    }
    if (starts("<->")) { out.push_back({Tok::Iff, "<->", start}); i += 3; continue; }
    if (starts("->")) { out.push_back({Tok::Implies, "->", start}); i += 2; continue; }
    if (starts("==")) { out.push_back({Tok::Ident3, "==", start}); i += 2; continue; }
    if (c == '~') { out.push_back({Tok::Not, "~", start}); ++i; continue; }
    if (c == '&') { out.push_back({Tok::And, "&", start}); ++i; continue; }
    if (c == '|') { out.push_back({Tok::Or, "|", start}); ++i; continue; }
    if (c == '(') { out.push_back({Tok::LParen, "(", start}); ++i; continue; }
    if (c == ')') { out.push_back({Tok::RParen, ")", start}); ++i; continue; }
    bool matched = false;
    for (const auto& a : kUnicode) {
      if (starts(a.utf8)) {
        out.push_back({a.kind, std::string(a.utf8), start});
        i += a.utf8.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    // Report the whole UTF-8 sequence of an unknown character.
    std::size_t len = 1;
    while (start + len < s.size() && (static_cast<unsigned char>(s[start + len]) & 0xC0) == 0x80) ++len;
    throw ParseError(start, {"formula", "operator"}, std::string(s.substr(start, len)));
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula parse_all() {
    if (peek().kind == Tok::End) throw ParseError(peek().pos, {"formula"}, "");
    Formula f = expr();
    if (peek().kind != Tok::End) fail({Tok::End, Tok::And, Tok::Or, Tok::Implies, Tok::Iff, Tok::Ident3});
    return f;
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(std::initializer_list<Tok> expected) const {
    std::vector<std::string> names;
    for (Tok t : expected) names.emplace_back(describe(t));
    throw ParseError(peek().pos, std::move(names), peek().text);
  }

  // expr := imp (('<->' | '==') imp)?    non-associative
  Formula expr() {
    Formula lhs = implication();
    Tok k = peek().kind;
    if (k != Tok::Iff && k != Tok::Ident3) return lhs;
    next();
    Formula rhs = implication();
    if (peek().kind == Tok::Iff || peek().kind == Tok::Ident3)
      fail({Tok::End, Tok::RParen});  // a <-> b <-> c needs parentheses
    return k == Tok::Iff ? Formula::iff(lhs, rhs).with_surface(Surface::Iff)
                         : Formula::ident(lhs, rhs).with_surface(Surface::Ident);
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (peek().kind != Tok::Implies) return lhs;
    next();
    return Formula::implies(lhs, implication()).with_surface(Surface::Core);
  }

  Formula disjunction() {
    Formula acc = conjunction();
    while (peek().kind == Tok::Or) {
      next();
      acc = Formula::disj(acc, conjunction()).with_surface(Surface::Core);
    }
    return acc;
  }

  Formula conjunction() {
    Formula acc = unary();
    while (peek().kind == Tok::And) {
      next();
      acc = Formula::conj(acc, unary()).with_surface(Surface::Core);
    }
    return acc;
  }

  Formula unary() {
    switch (peek().kind) {
      case Tok::Not: next(); return Formula::neg(unary()).with_surface(Surface::Not);
      case Tok::Box: next(); return Formula::box(unary()).with_surface(Surface::Core);
      default: return atom();
    }
  }

  Formula atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident: next(); return Formula::var(t.text);
      case Tok::Bot: next(); return Formula::bot();
      case Tok::Top: next(); return Formula::top().with_surface(Surface::Top);
      case Tok::LParen: {
        next();
        Formula inner = expr();
        if (peek().kind != Tok::RParen) fail({Tok::RParen});
        next();
        return inner;
      }
      default: fail({Tok::Ident, Tok::Bot, Tok::Top, Tok::Not, Tok::Box, Tok::LParen});
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// Binding strength, loosest first.
enum Level { kEquiv = 0, kImp = 1, kOr = 2, kAnd = 3, kPrefix = 4, kAtom = 5 };

struct Printer {
  std::string out;

  void emit(const Formula& f, int min_level) {
    std::string text;
    int level = print(f, text);
    if (level < min_level) {
      out += '(';
      out += text;
      out += ')';
    } else {
      out += text;
    }
  }

  static std::string sub(const Formula& f, int min_level) {
    Printer p;
    p.emit(f, min_level);
    return p.out;
  }

  // Writes f into text and returns its binding level.
  static int print(const Formula& f, std::string& text) {
    const bool core = f.surface() == Surface::Core;
    switch (f.op()) {
      case Op::Var: text = f.variable().name(); return kAtom;
      case Op::Falsum: text = "bot"; return kAtom;
      case Op::Box: {
        std::string in = sub(f.inner(), kPrefix);
        text = in.front() == '(' ? "box" + in : "box " + in;
        return kPrefix;
      }
      case Op::And:
        if (!core && f.surface() != Surface::Iff) {
          if (auto id = as_ident(f)) {
            text = sub(id->first, kImp) + " == " + sub(id->second, kImp);
            return kEquiv;
          }
        }
        if (!core && f.surface() != Surface::Ident) {
          if (auto eq = as_iff(f)) {
            text = sub(eq->first, kImp) + " <-> " + sub(eq->second, kImp);
            return kEquiv;
          }
        }
        text = sub(f.left(), kAnd) + " & " + sub(f.right(), kPrefix);
        return kAnd;
      case Op::Or:
        text = sub(f.left(), kOr) + " | " + sub(f.right(), kAnd);
        return kOr;
      case Op::Implies:
        if (!core) {
          if (f.surface() != Surface::Not && is_top(f)) {
            text = "top";
            return kAtom;
          }
          if (auto n = as_negation(f)) {
            text = "~" + sub(*n, kPrefix);
            return kPrefix;
          }
        }
        text = sub(f.left(), kOr) + " -> " + sub(f.right(), kImp);
        return kImp;
    }
    return kAtom;
  }
};

}  // namespace

Formula parse(std::string_view text) { return Parser(lex(text)).parse_all(); }

std::string render(const Formula& f) {
  Printer p;
  p.emit(f, kEquiv);
  return p.out;
}

}  // namespace l5
