#include "latql/query.hpp"

#include <array>
#include <optional>

#include "latql/error.hpp"

namespace latql {

bool operator==(const QueryAst& a, const QueryAst& b) {
  return a.op == b.op && a.name == b.name && a.args == b.args && a.condition == b.condition &&
         a.attributes == b.attributes && a.objects == b.objects && a.mode == b.mode;
}

namespace {

struct Keyword {
  const char* text;
  QueryAst::Op op;
};

constexpr std::array<Keyword, 9> kKeywords{{
    {"SELECT", QueryAst::Op::Select},
    {"PROJECT", QueryAst::Op::Project},
    {"APPOSE", QueryAst::Op::Appose},
    {"SUBPOSE", QueryAst::Op::Subpose},
    {"GLUE", QueryAst::Op::Glue},
    {"JOIN", QueryAst::Op::Join},
    {"GENERALIZE", QueryAst::Op::Generalize},
    {"APPROX", QueryAst::Op::Approx},
    {"BUILD", QueryAst::Op::Build},
}};

std::optional<QueryAst::Op> keyword(const std::string& text) {
  for (const auto& k : kKeywords)
    if (text == k.text) return k.op;
  return std::nullopt;
}

bool bare_char(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
         c == '.' || c == ':' || c == '-' || c >= 0x80;
}

enum class Tok {
  Name, LParen, RParen, Comma, LBracket, RBracket, LBrace, RBrace, Semicolon, Amp, Pipe, Bang,
  Equals, End
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  bool quoted = false;
  Span span;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    Token t;
    t.span = here();
    if (pos_ >= text_.size()) return t;
    const char c = text_[pos_];
    auto single = [&](Tok kind) {
      advance();
      t.kind = kind;
      t.text = std::string(1, c);
      t.span.end = pos_;
      return t;
    };
    switch (c) {
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case ',': return single(Tok::Comma);
      case '[': return single(Tok::LBracket);
      case ']': return single(Tok::RBracket);
      case '{': return single(Tok::LBrace);
      case '}': return single(Tok::RBrace);
      case ';': return single(Tok::Semicolon);
      case '&': return single(Tok::Amp);
      case '|': return single(Tok::Pipe);
      case '!': return single(Tok::Bang);
      case '=': return single(Tok::Equals);
      default: break;
    }
    if (c == '"') {
      advance();
      t.kind = Tok::Name;
      t.quoted = true;
      for (;;) {
        if (pos_ >= text_.size()) throw SyntaxError("unterminated quoted name", t.span.where());
        const char d = text_[pos_];
        if (d == '"') {
          advance();
          break;
        }
        if (d == '\\') {
          advance();
          if (pos_ >= text_.size() || (text_[pos_] != '"' && text_[pos_] != '\\'))
            throw SyntaxError("invalid escape in quoted name", here().where());
        }
        t.text += text_[pos_];
        advance();
      }
      t.span.end = pos_;
      return t;
    }
    if (bare_char(static_cast<unsigned char>(c))) {
      t.kind = Tok::Name;
      while (pos_ < text_.size() && bare_char(static_cast<unsigned char>(text_[pos_]))) {
        t.text += text_[pos_];
        advance();
      }
      t.span.end = pos_;
      return t;
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", t.span.where());
  }

 private:
  Span here() const { return Span{pos_, pos_, line_, column_}; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r'))
      advance();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

const char* describe(Tok kind) {
  switch (kind) {
    case Tok::Name: return "a name";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Semicolon: return "';'";
    case Tok::Amp: return "'&'";
    case Tok::Pipe: return "'|'";
    case Tok::Bang: return "'!'";
    case Tok::Equals: return "'='";
    case Tok::End: return "end of query";
  }
  return "?";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) {
    current_ = lexer_.next();
    lookahead_ = lexer_.next();
  }

  QueryAst parse() {
    QueryAst q = expression();
    if (current_.kind != Tok::End) fail("unexpected " + std::string(describe(current_.kind)) +
                                        " after the query");
    return q;
  }

 private:
  [[noreturn]] void fail(const std::string& what) { throw SyntaxError(what, current_.span.where()); }

  Token take() {
    Token t = std::move(current_);
    current_ = std::move(lookahead_);
    lookahead_ = lexer_.next();
    return t;
  }

  Token expect(Tok kind, const char* context) {
    if (current_.kind != kind)
      fail(std::string("expected ") + describe(kind) + " " + context + ", found " +
           describe(current_.kind));
    return take();
  }

  std::string name(const char* context) { return expect(Tok::Name, context).text; }

  std::vector<std::string> names(Tok close, const char* context) {
    std::vector<std::string> out;
    if (current_.kind == close) return out;
    out.push_back(name(context));
    while (current_.kind == Tok::Comma) {
      take();
      out.push_back(name(context));
    }
    return out;
  }

  QueryAst expression() {
    QueryAst q;
    q.span = current_.span;
    if (current_.kind != Tok::Name) fail("expected an expression, found " +
                                         std::string(describe(current_.kind)));
    auto op = current_.quoted ? std::nullopt : keyword(current_.text);
    if (!op || lookahead_.kind != Tok::LParen) {
      q.op = QueryAst::Op::Ref;
      q.name = take().text;
      return q;
    }
    q.op = *op;
    take();
    expect(Tok::LParen, "after the operator");
    q.args.push_back(expression());

    switch (q.op) {
      case QueryAst::Op::Select:
        expect(Tok::Comma, "before the condition");
        q.condition = condition();
        break;
      case QueryAst::Op::Project:
        expect(Tok::Comma, "before the attribute list");
        expect(Tok::LBracket, "to open the attribute list");
        q.attributes = names(Tok::RBracket, "in the attribute list");
        expect(Tok::RBracket, "to close the attribute list");
        break;
      case QueryAst::Op::Appose:
      case QueryAst::Op::Subpose:
      case QueryAst::Op::Glue:
      case QueryAst::Op::Join:
        expect(Tok::Comma, "between operands");
        q.args.push_back(expression());
        break;
      case QueryAst::Op::Generalize: {
        expect(Tok::Comma, "before the cover");
        q.name = name("for the cover");
        expect(Tok::Comma, "before the semantics");
        const Token sem = expect(Tok::Name, "for the semantics");
        if (sem.text == "exists") q.mode = GeneralizationMode::Exists;
        else if (sem.text == "forall") q.mode = GeneralizationMode::Forall;
        else if (sem.text == "alpha") q.mode = GeneralizationMode::Alpha;
        else throw SyntaxError("semantics must be exists, forall or alpha", sem.span.where());
        break;
      }
      case QueryAst::Op::Approx:
        expect(Tok::Comma, "before the presumed concept");
        expect(Tok::LBrace, "to open the object list");
        q.objects = names(Tok::RBrace, "in the object list");
        expect(Tok::RBrace, "to close the object list");
        expect(Tok::Semicolon, "between the object and attribute lists");
        expect(Tok::LBrace, "to open the attribute list");
        q.attributes = names(Tok::RBrace, "in the attribute list");
        expect(Tok::RBrace, "to close the attribute list");
        break;
      case QueryAst::Op::Build:
      case QueryAst::Op::Ref:
        break;
    }
    const Token close = expect(Tok::RParen, "to close the operator");
    q.span.end = close.span.end;
    return q;
  }

  Condition condition() {
    std::vector<Condition> parts{conjunction()};
    while (current_.kind == Tok::Pipe) {
      take();
      parts.push_back(conjunction());
    }
    return parts.size() == 1 ? std::move(parts[0]) : Condition::any_of(std::move(parts));
  }

  Condition conjunction() {
    std::vector<Condition> parts{unary()};
    while (current_.kind == Tok::Amp) {
      take();
      parts.push_back(unary());
    }
    return parts.size() == 1 ? std::move(parts[0]) : Condition::all_of(std::move(parts));
  }

  Condition unary() {
    if (current_.kind == Tok::Bang) {
      take();
      if (current_.kind != Tok::Name) fail("negation applies to atoms only");
      return Condition::negate(atom());
    }
    if (current_.kind == Tok::LParen) {
      take();
      Condition c = condition();
      expect(Tok::RParen, "to close the condition group");
      return c;
    }
    return atom();
  }

  Condition atom() {
    std::string attribute = name("in the condition");
    if (current_.kind != Tok::Equals) return Condition::atom(std::move(attribute));
    take();
    return Condition::atom(std::move(attribute), name("as the attribute value"));
  }

  Lexer lexer_;
  Token current_;
  Token lookahead_;
};

}  // namespace

std::string to_string(QueryAst::Op op) {
  for (const auto& k : kKeywords)
    if (k.op == op) return k.text;
  return "REF";
}

QueryAst parse_query(std::string_view text) { return Parser(text).parse(); }

std::string quote_name(const std::string& name) {
  bool bare = !name.empty() && !keyword(name);
  for (unsigned char c : name) bare = bare && bare_char(c);
  if (bare) return name;
  std::string out = "\"";
  for (char c : name) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string pretty_print(const Condition& c) {
  using Kind = Condition::Kind;
  switch (c.kind) {
    case Kind::Atom:
      return quote_name(c.attribute) + (c.value ? "=" + quote_name(*c.value) : "");
    case Kind::Not:
      return "!" + pretty_print(c.children.at(0));
    case Kind::And:
    case Kind::Or: {
      std::string out;
      for (std::size_t i = 0; i < c.children.size(); ++i) {
        const auto& k = c.children[i];
        const bool group = k.kind == Kind::Or || (k.kind == Kind::And && c.kind == Kind::And);
        if (i) out += c.kind == Kind::And ? " & " : " | ";
        out += group ? "(" + pretty_print(k) + ")" : pretty_print(k);
      }
      return out;
    }
  }
  return {};
}

namespace {

std::string name_list(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ", " : "") + quote_name(names[i]);
  return out;
}

}  // namespace

std::string pretty_print(const QueryAst& q) {
  using Op = QueryAst::Op;
  if (q.op == Op::Ref) return quote_name(q.name);
  std::string out = to_string(q.op) + "(" + pretty_print(q.args.at(0));
  switch (q.op) {
    case Op::Select: out += ", " + pretty_print(q.condition); break;
    case Op::Project: out += ", [" + name_list(q.attributes) + "]"; break;
    case Op::Appose:
    case Op::Subpose:
    case Op::Glue:
    case Op::Join: out += ", " + pretty_print(q.args.at(1)); break;
    case Op::Generalize: out += ", " + quote_name(q.name) + ", " + to_string(q.mode); break;
    case Op::Approx:
      out += ", {" + name_list(q.objects) + "} ; {" + name_list(q.attributes) + "}";
      break;
    case Op::Build:
    case Op::Ref: break;
  }
  return out + ")";
}

}  // namespace latql
