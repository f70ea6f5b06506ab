#include "java/java_parser.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "java/java_lexer.hpp"
#include "ufold/diagnostics.hpp"

namespace ufold::java {

namespace {

constexpr std::array<std::string_view, 12> kModifierWords = {
    "public",   "protected", "private",  "static",   "final",    "abstract",
    "synchronized", "native", "transient", "volatile", "strictfp", "default",
};

constexpr std::array<std::string_view, 8> kPrimitiveWords = {
    "boolean", "byte", "short", "int", "long", "char", "float", "double",
};

bool word_in(std::string_view w, std::span<const std::string_view> set) {
  for (std::string_view s : set) {
    if (s == w) return true;
  }
  return false;
}

struct Marker {
  std::uint32_t begin;
};

class Parser {
public:
  Parser(std::string_view source, const std::string& source_id)
      : source_(source),
        source_id_(source_id),
        toks_(lex(source, source_id)) {}

  SyntaxNode run() {
    try {
      SyntaxNode unit;
      unit.label = "compilation_unit";
      if (at_kw("package")) unit.children.push_back(parse_package());
      while (at_kw("import")) unit.children.push_back(parse_import());
      while (!tok().is(TokKind::eof)) {
        if (at(";")) {
          take();
          continue;
        }
        unit.children.push_back(parse_type_declaration());
      }
      unit.span = {0, static_cast<std::uint32_t>(source_.size())};
      return unit;
    } catch (const ParseError&) {
      // backtracking can leave the escaping error on a shallow alternative;
      // the deepest failure points at the actual problem
      if (furthest_) throw *furthest_;
      throw;
    }
  }

private:
  // ---- token plumbing ----

  const Token& tok(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }

  bool at(std::string_view text) const { return tok().is(text); }
  bool at_kw(std::string_view text) const {
    return tok().is(TokKind::keyword, text);
  }
  bool at_ident() const { return tok().is(TokKind::identifier); }

  /// Tokens k-1 and k touch with no gap (split '>' runs belong together).
  bool adjacent(std::size_t k) const {
    return tok(k).begin == tok(k - 1).end;
  }

  Token take() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& message) {
    ParseError err(source_id_, position_at(source_, tok().begin), message);
    if (!furthest_ || tok().begin > furthest_begin_) {
      furthest_ = err;
      furthest_begin_ = tok().begin;
    }
    throw err;
  }

  Token expect(std::string_view text) {
    if (!at(text) && !at_kw(text)) {
      fail("expected '" + std::string(text) + "'");
    }
    return take();
  }

  Marker mark() const { return {tok().begin}; }

  std::uint32_t prev_end() const {
    return pos_ > 0 ? toks_[pos_ - 1].end : 0;
  }

  SyntaxNode finish(Marker m, SyntaxNode node) const {
    node.span = {m.begin, prev_end()};
    return node;
  }

  static SyntaxNode node(std::string label) {
    SyntaxNode n;
    n.label = std::move(label);
    return n;
  }

  SyntaxNode leaf(std::string label, const Token& t) const {
    SyntaxNode n;
    n.label = std::move(label);
    n.value.assign(t.text);
    n.span = {t.begin, t.end};
    return n;
  }

  SyntaxNode identifier_leaf() {
    if (!at_ident()) fail("expected identifier");
    return leaf("identifier", take());
  }

  /// Wraps children into `label` spanning from the first child's begin.
  SyntaxNode wrap(std::string label, std::vector<SyntaxNode> children) const {
    SyntaxNode n = node(std::move(label));
    n.span = {children.front().span.begin, prev_end()};
    n.children = std::move(children);
    return n;
  }

  template <typename F>
  std::optional<SyntaxNode> attempt(F f) {
    std::size_t save = pos_;
    try {
      return f();
    } catch (const ParseError&) {
      pos_ = save;
      return std::nullopt;
    }
  }

  // ---- names and types ----

  // identifier or flat scoped_identifier over '.'
  SyntaxNode qualified_name() {
    Marker m = mark();
    SyntaxNode first = identifier_leaf();
    if (!at(".") || !tok(1).is(TokKind::identifier)) return first;
    SyntaxNode scoped = node("scoped_identifier");
    scoped.children.push_back(std::move(first));
    while (at(".") && tok(1).is(TokKind::identifier)) {
      take();
      scoped.children.push_back(identifier_leaf());
    }
    return finish(m, std::move(scoped));
  }

  SyntaxNode parse_type() {
    Marker m = mark();
    SyntaxNode type = node("type");
    if (tok().is(TokKind::keyword) &&
        word_in(tok().text, kPrimitiveWords)) {
      type.children.push_back(leaf("primitive_type", take()));
    } else if (at_kw("void")) {
      take();
      SyntaxNode v = node("void_type");
      v.span = {toks_[pos_ - 1].begin, toks_[pos_ - 1].end};
      type.children.push_back(std::move(v));
    } else if (at_kw("var")) {
      take();
      SyntaxNode v = node("inferred_type");
      v.span = {toks_[pos_ - 1].begin, toks_[pos_ - 1].end};
      type.children.push_back(std::move(v));
    } else {
      type.children.push_back(qualified_name());
      if (at("<")) type.children.push_back(parse_type_arguments());
    }
    std::uint32_t dims = 0;
    std::uint32_t dim_begin = tok().begin;
    while (at("[") && tok(1).is("]")) {
      take();
      take();
      ++dims;
    }
    if (dims > 0) {
      SyntaxNode d = node("dimensions");
      for (std::uint32_t i = 0; i < dims; ++i) d.value += "[]";
      d.span = {dim_begin, prev_end()};
      type.children.push_back(std::move(d));
    }
    return finish(m, std::move(type));
  }

  SyntaxNode parse_type_arguments() {
    Marker m = mark();
    SyntaxNode args = node("type_arguments");
    expect("<");
    if (!at(">")) {
      while (true) {
        if (at("?")) {
          Marker wm = mark();
          take();
          SyntaxNode w = node("wildcard");
          if (at_kw("extends") || at_kw("super")) {
            w.value.assign(take().text);
            w.children.push_back(parse_type());
          }
          args.children.push_back(finish(wm, std::move(w)));
        } else {
          args.children.push_back(parse_type());
        }
        if (at(",")) {
          take();
          continue;
        }
        break;
      }
    }
    expect(">");
    return finish(m, std::move(args));
  }

  SyntaxNode parse_type_parameters() {
    Marker m = mark();
    SyntaxNode params = node("type_parameters");
    expect("<");
    while (true) {
      Marker pm = mark();
      SyntaxNode p = node("type_parameter");
      while (at("@")) p.children.push_back(parse_annotation());
      p.children.push_back(identifier_leaf());
      if (at_kw("extends")) {
        Marker bm = mark();
        take();
        SyntaxNode bound = node("type_bound");
        bound.children.push_back(parse_type());
        while (at("&")) {
          take();
          bound.children.push_back(parse_type());
        }
        p.children.push_back(finish(bm, std::move(bound)));
      }
      params.children.push_back(finish(pm, std::move(p)));
      if (at(",")) {
        take();
        continue;
      }
      break;
    }
    expect(">");
    return finish(m, std::move(params));
  }

  // ---- modifiers and annotations ----

  bool at_annotation() const {
    return at("@") && !tok(1).is(TokKind::keyword, "interface");
  }

  std::optional<SyntaxNode> parse_modifiers() {
    Marker m = mark();
    SyntaxNode mods = node("modifiers");
    while (true) {
      if (at_annotation()) {
        mods.children.push_back(parse_annotation());
      } else if (tok().is(TokKind::keyword) &&
                 word_in(tok().text, kModifierWords) &&
                 !(at_kw("default") && in_switch_)) {
        mods.children.push_back(leaf("modifier", take()));
      } else {
        break;
      }
    }
    if (mods.children.empty()) return std::nullopt;
    return finish(m, std::move(mods));
  }

  SyntaxNode parse_annotation() {
    Marker m = mark();
    SyntaxNode anno = node("annotation");
    expect("@");
    anno.children.push_back(qualified_name());
    if (at("(")) {
      Marker am = mark();
      take();
      SyntaxNode args = node("annotation_argument_list");
      while (!at(")")) {
        if (at_ident() && tok(1).is("=")) {
          Marker pm = mark();
          SyntaxNode pair = node("element_value_pair");
          pair.children.push_back(identifier_leaf());
          take();  // '='
          pair.children.push_back(parse_annotation_value());
          args.children.push_back(finish(pm, std::move(pair)));
        } else {
          args.children.push_back(parse_annotation_value());
        }
        if (at(",")) take();
      }
      expect(")");
      anno.children.push_back(finish(am, std::move(args)));
    }
    return finish(m, std::move(anno));
  }

  SyntaxNode parse_annotation_value() {
    if (at("{")) return parse_array_initializer();
    if (at_annotation()) return parse_annotation();
    return parse_ternary();
  }

  // ---- declarations ----

  SyntaxNode parse_package() {
    Marker m = mark();
    SyntaxNode pkg = node("package_declaration");
    expect("package");
    pkg.children.push_back(qualified_name());
    expect(";");
    return finish(m, std::move(pkg));
  }

  SyntaxNode parse_import() {
    Marker m = mark();
    SyntaxNode imp = node("import_declaration");
    expect("import");
    if (at_kw("static")) imp.children.push_back(leaf("modifier", take()));
    imp.children.push_back(qualified_name());
    if (at(".") && tok(1).is("*")) {
      take();
      imp.children.push_back(leaf("asterisk", take()));
    }
    expect(";");
    return finish(m, std::move(imp));
  }

  SyntaxNode parse_type_declaration() {
    Marker m = mark();
    std::optional<SyntaxNode> mods = parse_modifiers();
    return parse_type_declaration_tail(m, std::move(mods));
  }

  SyntaxNode parse_type_declaration_tail(Marker m,
                                         std::optional<SyntaxNode> mods) {
    if (at_kw("class")) return parse_class(m, std::move(mods));
    if (at_kw("interface")) return parse_interface(m, std::move(mods), false);
    if (at("@")) {
      take();
      return parse_interface(m, std::move(mods), true);
    }
    if (at_kw("enum")) return parse_enum(m, std::move(mods));
    fail("expected type declaration");
  }

  void push_mods(SyntaxNode& decl, std::optional<SyntaxNode>& mods) {
    if (mods) decl.children.push_back(std::move(*mods));
  }

  SyntaxNode parse_class(Marker m, std::optional<SyntaxNode> mods) {
    SyntaxNode decl = node("class_declaration");
    push_mods(decl, mods);
    expect("class");
    decl.children.push_back(identifier_leaf());
    if (at("<")) decl.children.push_back(parse_type_parameters());
    if (at_kw("extends")) {
      Marker sm = mark();
      take();
      SyntaxNode sup = node("superclass");
      sup.children.push_back(parse_type());
      decl.children.push_back(finish(sm, std::move(sup)));
    }
    if (at_kw("implements")) {
      decl.children.push_back(parse_interface_list());
    }
    decl.children.push_back(parse_class_body());
    return finish(m, std::move(decl));
  }

  SyntaxNode parse_interface_list() {
    Marker m = mark();
    take();  // 'implements' or 'extends'
    SyntaxNode list = node("super_interfaces");
    list.children.push_back(parse_type());
    while (at(",")) {
      take();
      list.children.push_back(parse_type());
    }
    return finish(m, std::move(list));
  }

  SyntaxNode parse_interface(Marker m, std::optional<SyntaxNode> mods,
                             bool annotation_form) {
    SyntaxNode decl = node("interface_declaration");
    push_mods(decl, mods);
    expect("interface");
    decl.children.push_back(identifier_leaf());
    if (!annotation_form) {
      if (at("<")) decl.children.push_back(parse_type_parameters());
      if (at_kw("extends")) decl.children.push_back(parse_interface_list());
    }
    decl.children.push_back(parse_class_body());
    return finish(m, std::move(decl));
  }

  SyntaxNode parse_enum(Marker m, std::optional<SyntaxNode> mods) {
    SyntaxNode decl = node("enum_declaration");
    push_mods(decl, mods);
    expect("enum");
    decl.children.push_back(identifier_leaf());
    if (at_kw("implements")) decl.children.push_back(parse_interface_list());

    Marker bm = mark();
    SyntaxNode body = node("enum_body");
    expect("{");
    while (!at(";") && !at("}")) {
      Marker cm = mark();
      SyntaxNode c = node("enum_constant");
      while (at("@")) c.children.push_back(parse_annotation());
      c.children.push_back(identifier_leaf());
      if (at("(")) c.children.push_back(parse_argument_list());
      if (at("{")) c.children.push_back(parse_class_body());
      body.children.push_back(finish(cm, std::move(c)));
      if (at(",")) {
        take();
        continue;
      }
      break;
    }
    if (at(";")) {
      take();
      while (!at("}")) body.children.push_back(parse_member());
    }
    expect("}");
    decl.children.push_back(finish(bm, std::move(body)));
    return finish(m, std::move(decl));
  }

  SyntaxNode parse_class_body() {
    Marker m = mark();
    SyntaxNode body = node("class_body");
    expect("{");
    while (!at("}")) {
      if (tok().is(TokKind::eof)) fail("unterminated class body");
      if (at(";")) {
        take();
        continue;
      }
      body.children.push_back(parse_member());
    }
    expect("}");
    return finish(m, std::move(body));
  }

  SyntaxNode parse_member() {
    Marker m = mark();
    std::optional<SyntaxNode> mods = parse_modifiers();

    if (at_kw("class") || at_kw("interface") || at_kw("enum") || at("@")) {
      return parse_type_declaration_tail(m, std::move(mods));
    }
    if (at("{")) {
      SyntaxNode init = node("initializer_block");
      push_mods(init, mods);
      init.children.push_back(parse_block());
      return finish(m, std::move(init));
    }

    std::optional<SyntaxNode> type_params;
    if (at("<")) type_params = parse_type_parameters();

    if (at_ident() && tok(1).is("(")) {
      SyntaxNode ctor = node("constructor_declaration");
      push_mods(ctor, mods);
      if (type_params) ctor.children.push_back(std::move(*type_params));
      ctor.children.push_back(identifier_leaf());
      ctor.children.push_back(parse_formal_parameters());
      if (at_kw("throws")) ctor.children.push_back(parse_throws());
      ctor.children.push_back(parse_block());
      return finish(m, std::move(ctor));
    }

    SyntaxNode type = parse_type();
    SyntaxNode name = identifier_leaf();

    if (at("(")) {
      SyntaxNode method = node("method_declaration");
      push_mods(method, mods);
      if (type_params) method.children.push_back(std::move(*type_params));
      method.children.push_back(std::move(type));
      method.children.push_back(std::move(name));
      method.children.push_back(parse_formal_parameters());
      if (at("[")) fail("array dimensions after parameter list");
      if (at_kw("throws")) method.children.push_back(parse_throws());
      if (at_kw("default")) {
        take();  // annotation-member default value
        method.children.push_back(parse_annotation_value());
      }
      if (at(";")) {
        take();
      } else {
        method.children.push_back(parse_block());
      }
      return finish(m, std::move(method));
    }

    SyntaxNode field = node("field_declaration");
    push_mods(field, mods);
    if (type_params) fail("type parameters on a field");
    field.children.push_back(std::move(type));
    field.children.push_back(parse_variable_declarator(std::move(name)));
    while (at(",")) {
      take();
      field.children.push_back(parse_variable_declarator(identifier_leaf()));
    }
    expect(";");
    return finish(m, std::move(field));
  }

  SyntaxNode parse_variable_declarator(SyntaxNode name) {
    std::uint32_t begin = name.span.begin;
    SyntaxNode decl = node("variable_declarator");
    decl.children.push_back(std::move(name));
    if (at("[") && tok(1).is("]")) {
      Marker dm = mark();
      SyntaxNode d = node("dimensions");
      while (at("[") && tok(1).is("]")) {
        take();
        take();
        d.value += "[]";
      }
      decl.children.push_back(finish(dm, std::move(d)));
    }
    if (at("=")) {
      take();
      if (at("{")) {
        decl.children.push_back(parse_array_initializer());
      } else {
        decl.children.push_back(parse_expression());
      }
    }
    decl.span = {begin, prev_end()};
    return decl;
  }

  SyntaxNode parse_formal_parameters() {
    Marker m = mark();
    SyntaxNode params = node("formal_parameters");
    expect("(");
    while (!at(")")) {
      Marker pm = mark();
      SyntaxNode p = node("parameter");
      std::optional<SyntaxNode> mods = parse_modifiers();
      push_mods(p, mods);
      p.children.push_back(parse_type());
      if (at("...")) p.children.push_back(leaf("ellipsis", take()));
      p.children.push_back(identifier_leaf());
      if (at("[") && tok(1).is("]")) {
        while (at("[") && tok(1).is("]")) {
          take();
          take();
        }
      }
      params.children.push_back(finish(pm, std::move(p)));
      if (at(",")) take();
    }
    expect(")");
    return finish(m, std::move(params));
  }

  SyntaxNode parse_throws() {
    Marker m = mark();
    expect("throws");
    SyntaxNode spec = node("throws");
    spec.children.push_back(parse_type());
    while (at(",")) {
      take();
      spec.children.push_back(parse_type());
    }
    return finish(m, std::move(spec));
  }

  // ---- statements ----

  SyntaxNode parse_block() {
    Marker m = mark();
    SyntaxNode block = node("block");
    expect("{");
    while (!at("}")) {
      if (tok().is(TokKind::eof)) fail("unterminated block");
      block.children.push_back(parse_statement());
    }
    expect("}");
    return finish(m, std::move(block));
  }

  SyntaxNode parse_statement() {
    Marker m = mark();
    if (at("{")) return parse_block();
    if (at(";")) {
      take();
      return finish(m, node("empty_statement"));
    }
    if (at_kw("if")) return parse_if(m);
    if (at_kw("while")) return parse_while(m);
    if (at_kw("do")) return parse_do(m);
    if (at_kw("for")) return parse_for(m);
    if (at_kw("return")) return parse_return(m);
    if (at_kw("throw")) return parse_throw(m);
    if (at_kw("break") || at_kw("continue")) return parse_jump(m);
    if (at_kw("try")) return parse_try(m);
    if (at_kw("switch")) return parse_switch(m);
    if (at_kw("synchronized") && tok(1).is("(")) return parse_synchronized(m);
    if (at_kw("assert")) return parse_assert(m);
    if (at_kw("class") || at_kw("enum") || at_kw("interface")) {
      return parse_type_declaration();
    }
    if (at_ident() && tok(1).is(":")) {
      SyntaxNode labeled = node("labeled_statement");
      labeled.children.push_back(identifier_leaf());
      take();  // ':'
      labeled.children.push_back(parse_statement());
      return finish(m, std::move(labeled));
    }

    if (auto decl = attempt([&] { return parse_local_declaration(); })) {
      return *decl;
    }

    SyntaxNode stmt = node("expression_statement");
    stmt.children.push_back(parse_expression());
    expect(";");
    return finish(m, std::move(stmt));
  }

  // Modifier/annotation-led statements also funnel here via attempt().
  SyntaxNode parse_local_declaration() {
    Marker m = mark();
    SyntaxNode decl = node("local_variable_declaration");
    std::optional<SyntaxNode> mods = parse_modifiers();
    push_mods(decl, mods);
    decl.children.push_back(parse_type());
    decl.children.push_back(parse_variable_declarator(identifier_leaf()));
    while (at(",")) {
      take();
      decl.children.push_back(parse_variable_declarator(identifier_leaf()));
    }
    expect(";");
    return finish(m, std::move(decl));
  }

  SyntaxNode parse_paren_expression() {
    expect("(");
    SyntaxNode e = parse_expression();
    expect(")");
    return e;
  }

  SyntaxNode parse_if(Marker m) {
    SyntaxNode stmt = node("if_statement");
    take();
    stmt.children.push_back(parse_paren_expression());
    stmt.children.push_back(parse_statement());
    if (at_kw("else")) {
      take();
      stmt.children.push_back(parse_statement());
    }
    return finish(m, std::move(stmt));
  }

  SyntaxNode parse_while(Marker m) {
    SyntaxNode stmt = node("while_statement");
    take();
    stmt.children.push_back(parse_paren_expression());
    stmt.children.push_back(parse_statement());
    return finish(m, std::move(stmt));
  }

  SyntaxNode parse_do(Marker m) {
    SyntaxNode stmt = node("do_statement");
    take();
    stmt.children.push_back(parse_statement());
    expect("while");
    stmt.children.push_back(parse_paren_expression());
    expect(";");
    return finish(m, std::move(stmt));
  }

  SyntaxNode parse_for(Marker m) {
    take();
    expect("(");

    auto enhanced = attempt([&]() -> SyntaxNode {
      SyntaxNode stmt = node("enhanced_for_statement");
      std::optional<SyntaxNode> mods = parse_modifiers();
      push_mods(stmt, mods);
      stmt.children.push_back(parse_type());
      stmt.children.push_back(identifier_leaf());
      expect(":");
      stmt.children.push_back(parse_expression());
      expect(")");
      stmt.children.push_back(parse_statement());
      return finish(m, std::move(stmt));
    });
    if (enhanced) return *enhanced;

    SyntaxNode stmt = node("for_statement");
    Marker im = mark();
    SyntaxNode init = node("for_init");
    if (at(";")) {
      take();
    } else if (auto decl = attempt([&] { return parse_local_declaration(); })) {
      init.children.push_back(std::move(*decl));
    } else {
      init.children.push_back(parse_expression());
      while (at(",")) {
        take();
        init.children.push_back(parse_expression());
      }
      expect(";");
    }
    stmt.children.push_back(finish(im, std::move(init)));

    Marker cm = mark();
    SyntaxNode cond = node("for_condition");
    if (!at(";")) cond.children.push_back(parse_expression());
    expect(";");
    stmt.children.push_back(finish(cm, std::move(cond)));

    Marker um = mark();
    SyntaxNode update = node("for_update");
    if (!at(")")) {
      update.children.push_back(parse_expression());
      while (at(",")) {
        take();
        update.children.push_back(parse_expression());
      }
    }
    stmt.children.push_back(finish(um, std::move(update)));
    expect(")");
    stmt.children.push_back(parse_statement());
    return finish(m, std::move(stmt));
  }

  SyntaxNode parse_return(Marker m) {
    SyntaxNode stmt = node("return_statement");
    take();
    if (!at(";")) stmt.children.push_back(parse_expression());
    expect(";");
    return finish(m, std::move(stmt));
  }

  SyntaxNode parse_throw(Marker m) {
    SyntaxNode stmt = node("throw_statement");
    take();
    stmt.children.push_back(parse_expression());
    expect(";");
    return finish(m, std::move(stmt));
  }

  SyntaxNode parse_jump(Marker m) {
    SyntaxNode stmt =
        node(at_kw("break") ? "break_statement" : "continue_statement");
    take();
    if (at_ident()) stmt.children.push_back(identifier_leaf());
    expect(";");
    return finish(m, std::move(stmt));
  }

  SyntaxNode parse_try(Marker m) {
    SyntaxNode stmt = node("try_statement");
    take();
    if (at("(")) {
      Marker rm = mark();
      take();
      SyntaxNode spec = node("resource_specification");
      while (!at(")")) {
        Marker resm = mark();
        SyntaxNode res = node("resource");
        std::optional<SyntaxNode> mods = parse_modifiers();
        push_mods(res, mods);
        res.children.push_back(parse_type());
        res.children.push_back(identifier_leaf());
        expect("=");
        res.children.push_back(parse_expression());
        spec.children.push_back(finish(resm, std::move(res)));
        if (at(";")) take();
      }
      expect(")");
      stmt.children.push_back(finish(rm, std::move(spec)));
    }
    stmt.children.push_back(parse_block());
    while (at_kw("catch")) {
      Marker cm = mark();
      take();
      SyntaxNode clause = node("catch_clause");
      expect("(");
      Marker pm = mark();
      SyntaxNode param = node("catch_parameter");
      std::optional<SyntaxNode> mods = parse_modifiers();
      push_mods(param, mods);
      param.children.push_back(parse_type());
      while (at("|")) {
        take();
        param.children.push_back(parse_type());
      }
      param.children.push_back(identifier_leaf());
      clause.children.push_back(finish(pm, std::move(param)));
      expect(")");
      clause.children.push_back(parse_block());
      stmt.children.push_back(finish(cm, std::move(clause)));
    }
    if (at_kw("finally")) {
      Marker fm = mark();
      take();
      SyntaxNode fin = node("finally_clause");
      fin.children.push_back(parse_block());
      stmt.children.push_back(finish(fm, std::move(fin)));
    }
    return finish(m, std::move(stmt));
  }

  SyntaxNode parse_switch(Marker m) {
    SyntaxNode stmt = node("switch_statement");
    take();
    stmt.children.push_back(parse_paren_expression());

    Marker bm = mark();
    SyntaxNode body = node("switch_block");
    expect("{");
    bool saved = in_switch_;
    in_switch_ = true;
    while (!at("}")) {
      Marker gm = mark();
      SyntaxNode group = node("switch_group");
      if (!at_kw("case") && !at_kw("default")) fail("expected switch label");
      while (at_kw("case") || at_kw("default")) {
        Marker lm = mark();
        SyntaxNode label = node("switch_label");
        if (at_kw("default")) {
          label.children.push_back(leaf("default", take()));
        } else {
          take();
          label.children.push_back(parse_ternary());
        }
        expect(":");
        group.children.push_back(finish(lm, std::move(label)));
      }
      while (!at("}") && !at_kw("case") && !at_kw("default")) {
        group.children.push_back(parse_statement());
      }
      body.children.push_back(finish(gm, std::move(group)));
    }
    in_switch_ = saved;
    expect("}");
    stmt.children.push_back(finish(bm, std::move(body)));
    return finish(m, std::move(stmt));
  }

  SyntaxNode parse_synchronized(Marker m) {
    SyntaxNode stmt = node("synchronized_statement");
    take();
    stmt.children.push_back(parse_paren_expression());
    stmt.children.push_back(parse_block());
    return finish(m, std::move(stmt));
  }

  SyntaxNode parse_assert(Marker m) {
    SyntaxNode stmt = node("assert_statement");
    take();
    stmt.children.push_back(parse_expression());
    if (at(":")) {
      take();
      stmt.children.push_back(parse_expression());
    }
    expect(";");
    return finish(m, std::move(stmt));
  }

  // ---- expressions ----

  SyntaxNode parse_expression() { return parse_assignment(); }

  /// True when the upcoming '>' run spells a shift-assignment operator.
  bool at_shift_assign() const {
    if (!at(">")) return false;
    if (tok(1).is(">=") && adjacent(1)) return true;  // >>=
    return tok(1).is(">") && adjacent(1) && tok(2).is(">=") && adjacent(2);
  }

  SyntaxNode parse_assignment() {
    if (at_ident() && tok(1).is("->")) return parse_lambda();
    if (at("(") && paren_lambda_ahead()) return parse_lambda();

    SyntaxNode lhs = parse_ternary();

    static constexpr std::array<std::string_view, 10> kAssignOps = {
        "=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=",
    };
    std::string op;
    std::uint32_t op_begin = tok().begin;
    if (at_shift_assign()) {
      op.assign(take().text);
      while (at(">") && tok().begin == prev_end()) op += take().text;
      op += take().text;  // trailing '>='
    } else if (tok().is(TokKind::punct) && word_in(tok().text, kAssignOps)) {
      op.assign(take().text);
    } else {
      return lhs;
    }

    SyntaxNode assign = node("assignment_expression");
    std::uint32_t begin = lhs.span.begin;
    assign.children.push_back(std::move(lhs));
    assign.children.push_back(operator_leaf(op, op_begin));
    assign.children.push_back(parse_assignment());
    assign.span = {begin, prev_end()};
    return assign;
  }

  bool paren_lambda_ahead() const {
    // from '(' scan to the matching ')' and look for '->'
    int depth = 0;
    for (std::size_t k = 0;; ++k) {
      const Token& t = tok(k);
      if (t.is(TokKind::eof)) return false;
      if (t.is("(")) ++depth;
      if (t.is(")")) {
        --depth;
        if (depth == 0) return tok(k + 1).is("->");
      }
      if (t.is(";") || t.is("{")) return false;
    }
  }

  SyntaxNode parse_lambda() {
    Marker m = mark();
    SyntaxNode lambda = node("lambda_expression");
    Marker pm = mark();
    SyntaxNode params = node("lambda_parameters");
    if (at_ident()) {
      params.children.push_back(identifier_leaf());
    } else {
      expect("(");
      while (!at(")")) {
        if (auto typed = attempt([&]() -> SyntaxNode {
              Marker tm = mark();
              SyntaxNode p = node("parameter");
              std::optional<SyntaxNode> mods = parse_modifiers();
              push_mods(p, mods);
              p.children.push_back(parse_type());
              p.children.push_back(identifier_leaf());
              if (!at(",") && !at(")")) fail("bad lambda parameter");
              return finish(tm, std::move(p));
            })) {
          params.children.push_back(std::move(*typed));
        } else {
          params.children.push_back(identifier_leaf());
        }
        if (at(",")) take();
      }
      expect(")");
    }
    lambda.children.push_back(finish(pm, std::move(params)));
    expect("->");
    if (at("{")) {
      lambda.children.push_back(parse_block());
    } else {
      lambda.children.push_back(parse_expression());
    }
    return finish(m, std::move(lambda));
  }

  SyntaxNode parse_ternary() {
    SyntaxNode cond = parse_binary(0);
    if (!at("?")) return cond;
    take();
    SyntaxNode t = node("ternary_expression");
    std::uint32_t begin = cond.span.begin;
    t.children.push_back(std::move(cond));
    t.children.push_back(parse_expression());
    expect(":");
    t.children.push_back(parse_assignment());
    t.span = {begin, prev_end()};
    return t;
  }

  // Binary levels, loosest first. '>'-run merging happens at the shift
  // level; a lone '>' is relational only when nothing merges after it.
  static constexpr int kLevels = 10;

  // On a match fills `op` and how many tokens spell it ('>' runs arrive split).
  bool level_op(int level, std::string& op, int& ntoks) {
    ntoks = 1;
    switch (level) {
      case 0: if (at("||")) { op = "||"; return true; } return false;
      case 1: if (at("&&")) { op = "&&"; return true; } return false;
      case 2: if (at("|")) { op = "|"; return true; } return false;
      case 3: if (at("^")) { op = "^"; return true; } return false;
      case 4: if (at("&")) { op = "&"; return true; } return false;
      case 5:
        if (at("==") || at("!=")) { op.assign(tok().text); return true; }
        return false;
      case 6:
        if (at("<") || at("<=") || at(">=")) {
          op.assign(tok().text);
          return true;
        }
        if (at(">") && !(tok(1).is(">") && adjacent(1)) &&
            !(tok(1).is(">=") && adjacent(1))) {
          op = ">";
          return true;
        }
        return false;
      case 7:
        if (at("<<")) { op = "<<"; return true; }
        if (at(">") && tok(1).is(">") && adjacent(1) && !at_shift_assign()) {
          bool triple = tok(2).is(">") && adjacent(2);
          op = triple ? ">>>" : ">>";
          ntoks = triple ? 3 : 2;
          return true;
        }
        return false;
      case 8:
        if (at("+") || at("-")) { op.assign(tok().text); return true; }
        return false;
      default:
        if (at("*") || at("/") || at("%")) {
          op.assign(tok().text);
          return true;
        }
        return false;
    }
  }

  SyntaxNode parse_binary(int level) {
    if (level >= kLevels) return parse_unary();
    SyntaxNode left = parse_binary(level + 1);
    while (true) {
      if (level == 6 && at_kw("instanceof")) {
        take();
        SyntaxNode test = node("instanceof_expression");
        std::uint32_t begin = left.span.begin;
        test.children.push_back(std::move(left));
        test.children.push_back(parse_type());
        test.span = {begin, prev_end()};
        left = std::move(test);
        continue;
      }
      std::string op;
      int ntoks = 0;
      if (!level_op(level, op, ntoks)) break;
      std::uint32_t op_begin = tok().begin;
      for (int i = 0; i < ntoks; ++i) take();
      SyntaxNode bin = node("binary_expression");
      std::uint32_t begin = left.span.begin;
      bin.children.push_back(std::move(left));
      bin.children.push_back(operator_leaf(op, op_begin));
      bin.children.push_back(parse_binary(level + 1));
      bin.span = {begin, prev_end()};
      left = std::move(bin);
    }
    return left;
  }

  // interior op leaves share one shape so spans stay inside their parent
  SyntaxNode operator_leaf(std::string_view op, std::uint32_t begin) const {
    SyntaxNode n = node("operator");
    n.value.assign(op);
    n.span = {begin, prev_end()};
    return n;
  }

  SyntaxNode parse_unary() {
    Marker m = mark();
    if (at("+") || at("-") || at("!") || at("~")) {
      SyntaxNode u = node("unary_expression");
      Token t = take();
      u.children.push_back(operator_leaf(t.text, t.begin));
      u.children.push_back(parse_unary());
      return finish(m, std::move(u));
    }
    if (at("++") || at("--")) {
      SyntaxNode u = node("update_expression");
      Token t = take();
      u.children.push_back(operator_leaf(t.text, t.begin));
      u.children.push_back(parse_unary());
      return finish(m, std::move(u));
    }
    if (at("(")) {
      if (auto cast = attempt([&]() -> SyntaxNode {
            SyntaxNode c = node("cast_expression");
            take();  // '('
            SyntaxNode type = parse_type();
            bool primitive = type.children.size() >= 1 &&
                             type.children.front().label == "primitive_type";
            expect(")");
            if (!cast_can_follow(primitive)) fail("not a cast");
            c.children.push_back(std::move(type));
            // `(Runnable) () -> {}` casts a lambda, not a parenthesized expr
            if ((at_ident() && tok(1).is("->")) ||
                (at("(") && paren_lambda_ahead())) {
              c.children.push_back(parse_lambda());
            } else {
              c.children.push_back(parse_unary());
            }
            return finish(m, std::move(c));
          })) {
        return *cast;
      }
    }
    return parse_postfix();
  }

  bool cast_can_follow(bool primitive) const {
    const Token& t = tok();
    switch (t.kind) {
      case TokKind::identifier:
      case TokKind::number:
      case TokKind::string:
      case TokKind::character:
        return true;
      case TokKind::keyword:
        return t.is("this") || t.is("super") || t.is("new") || t.is("true") ||
               t.is("false") || t.is("null");
      case TokKind::punct:
        if (t.is("(") || t.is("!") || t.is("~")) return true;
        return primitive && (t.is("+") || t.is("-") || t.is("++") || t.is("--"));
      default:
        return false;
    }
  }

  SyntaxNode parse_postfix() {
    SyntaxNode current = parse_primary();
    while (true) {
      std::uint32_t begin = current.span.begin;
      if (at(".")) {
        if (tok(1).is(TokKind::identifier)) {
          take();
          SyntaxNode name = identifier_leaf();
          if (at("(")) {
            SyntaxNode call = node("method_call");
            call.children.push_back(std::move(current));
            call.children.push_back(std::move(name));
            call.children.push_back(parse_argument_list());
            call.span = {begin, prev_end()};
            current = std::move(call);
          } else {
            SyntaxNode access = node("field_access");
            access.children.push_back(std::move(current));
            access.children.push_back(std::move(name));
            access.span = {begin, prev_end()};
            current = std::move(access);
          }
          continue;
        }
        if (tok(1).is(TokKind::keyword, "class")) {
          take();
          take();
          SyntaxNode lit = node("class_literal");
          lit.children.push_back(std::move(current));
          lit.span = {begin, prev_end()};
          current = std::move(lit);
          continue;
        }
        if (tok(1).is(TokKind::keyword, "this")) {
          take();
          SyntaxNode access = node("field_access");
          access.children.push_back(std::move(current));
          access.children.push_back(leaf("this", take()));
          access.span = {begin, prev_end()};
          current = std::move(access);
          continue;
        }
        if (tok(1).is("<")) {
          // explicit generic method invocation: recv.<T>name(args)
          take();
          SyntaxNode call = node("method_call");
          call.children.push_back(std::move(current));
          call.children.push_back(parse_type_arguments());
          call.children.push_back(identifier_leaf());
          call.children.push_back(parse_argument_list());
          call.span = {begin, prev_end()};
          current = std::move(call);
          continue;
        }
        fail("unsupported member access");
      }
      if (at("[") && !tok(1).is("]")) {
        take();
        SyntaxNode access = node("array_access");
        access.children.push_back(std::move(current));
        access.children.push_back(parse_expression());
        expect("]");
        access.span = {begin, prev_end()};
        current = std::move(access);
        continue;
      }
      if (at("::")) {
        take();
        SyntaxNode ref = node("method_reference");
        ref.children.push_back(std::move(current));
        if (at("<")) parse_type_arguments();  // rare; shape-irrelevant
        if (at_kw("new")) {
          ref.children.push_back(leaf("new", take()));
        } else {
          ref.children.push_back(identifier_leaf());
        }
        ref.span = {begin, prev_end()};
        current = std::move(ref);
        continue;
      }
      if (at("++") || at("--")) {
        SyntaxNode u = node("update_expression");
        u.children.push_back(std::move(current));
        Token t = take();
        u.children.push_back(operator_leaf(t.text, t.begin));
        u.span = {begin, prev_end()};
        current = std::move(u);
        continue;
      }
      return current;
    }
  }

  SyntaxNode parse_argument_list() {
    Marker m = mark();
    SyntaxNode args = node("argument_list");
    expect("(");
    while (!at(")")) {
      args.children.push_back(parse_expression());
      if (at(",")) take();
    }
    expect(")");
    return finish(m, std::move(args));
  }

  SyntaxNode parse_array_initializer() {
    Marker m = mark();
    SyntaxNode init = node("array_initializer");
    expect("{");
    while (!at("}")) {
      if (at("{")) {
        init.children.push_back(parse_array_initializer());
      } else {
        init.children.push_back(parse_expression());
      }
      if (at(",")) take();
    }
    expect("}");
    return finish(m, std::move(init));
  }

  SyntaxNode parse_creation(Marker m) {
    take();  // 'new'
    SyntaxNode type = parse_type();

    if (at("(")) {
      SyntaxNode obj = node("object_creation");
      obj.children.push_back(std::move(type));
      obj.children.push_back(parse_argument_list());
      if (at("{")) obj.children.push_back(parse_class_body());
      return finish(m, std::move(obj));
    }

    SyntaxNode arr = node("array_creation");
    bool any = false;
    std::uint32_t empty_dims = 0;
    Marker dm = mark();
    while (at("[")) {
      any = true;
      take();
      if (at("]")) {
        take();
        ++empty_dims;
      } else {
        arr.children.push_back(parse_expression());
        expect("]");
      }
    }
    // dims consumed by the type parse (e.g. `new int[] {...}`) land there
    if (!type.children.empty() && type.children.back().label == "dimensions") {
      any = true;
    }
    arr.children.insert(arr.children.begin(), std::move(type));
    if (empty_dims > 0) {
      SyntaxNode d = node("dimensions");
      for (std::uint32_t i = 0; i < empty_dims; ++i) d.value += "[]";
      d.span = {dm.begin, prev_end()};
      arr.children.push_back(std::move(d));
    }
    if (at("{")) arr.children.push_back(parse_array_initializer());
    if (!any) fail("expected '(' or '[' after new");
    return finish(m, std::move(arr));
  }

  SyntaxNode parse_primary() {
    Marker m = mark();
    const Token& t = tok();
    switch (t.kind) {
      case TokKind::number:
        return leaf("number_literal", take());
      case TokKind::string:
        return leaf("string_literal", take());
      case TokKind::character:
        return leaf("char_literal", take());
      case TokKind::keyword:
        if (t.is("true") || t.is("false")) return leaf("boolean_literal", take());
        if (t.is("null")) return leaf("null_literal", take());
        if (t.is("this") || t.is("super")) {
          std::string label(t.text);
          SyntaxNode self = leaf(std::move(label), take());
          self.value.clear();
          if (at("(")) {
            SyntaxNode call = node("method_call");
            call.children.push_back(std::move(self));
            call.children.push_back(parse_argument_list());
            return finish(m, std::move(call));
          }
          return self;
        }
        if (t.is("new")) return parse_creation(m);
        if (word_in(t.text, kPrimitiveWords) || t.is("void")) {
          // primitive class literal: int.class
          SyntaxNode type = parse_type();
          expect(".");
          expect("class");
          SyntaxNode lit = node("class_literal");
          lit.children.push_back(std::move(type));
          return finish(m, std::move(lit));
        }
        fail("unexpected keyword in expression");
      case TokKind::identifier: {
        SyntaxNode name = identifier_leaf();
        if (at("(")) {
          SyntaxNode call = node("method_call");
          call.children.push_back(std::move(name));
          call.children.push_back(parse_argument_list());
          return finish(m, std::move(call));
        }
        return name;
      }
      case TokKind::punct:
        if (t.is("(")) {
          SyntaxNode paren = node("parenthesized_expression");
          take();
          paren.children.push_back(parse_expression());
          expect(")");
          return finish(m, std::move(paren));
        }
        fail("unexpected token in expression");
      default:
        fail("unexpected end of input");
    }
  }

  std::string_view source_;
  const std::string& source_id_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  bool in_switch_ = false;
  std::optional<ParseError> furthest_;
  std::uint32_t furthest_begin_ = 0;
};

}  // namespace

SyntaxNode parse_compilation_unit(std::string_view source,
                                  const std::string& source_id) {
  return Parser(source, source_id).run();
}

}  // namespace ufold::java
