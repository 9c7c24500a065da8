#include "commaforge/dsl.hpp"

#include <cctype>
#include <sstream>

namespace commaforge {

namespace {

std::string join_witnesses(const std::vector<std::string>& ws) {
  std::string s;
  for (const auto& w : ws) s += " [" + w + "]";
  return s;
}

}  // namespace

ValidationFailure::ValidationFailure(std::string law_, std::vector<std::string> witnesses_)
    : Error("validation failure: " + law_ + join_witnesses(witnesses_)),
      law(std::move(law_)), witnesses(std::move(witnesses_)) {}

void Workspace::add_category(const CategoryRef& cat) {
  if (!cat) throw Error("null category");
  if (categories_.count(cat->name()))
    throw Error("duplicate category name '" + cat->name() + "'");
  category_order_.push_back(cat->name());
  categories_.emplace(cat->name(), cat);
}

void Workspace::add_functor(std::string name, Functor f) {
  if (functors_.count(name)) throw Error("duplicate functor name '" + name + "'");
  functor_order_.push_back(name);
  functors_.emplace(std::move(name), std::move(f));
}

void Workspace::add_nat(std::string name, NatTrans tau) {
  if (nats_.count(name)) throw Error("duplicate transformation name '" + name + "'");
  nat_order_.push_back(name);
  nats_.emplace(std::move(name), std::move(tau));
}

void Workspace::add_adjunction(std::string name, Adjunction adj) {
  if (adjunctions_.count(name)) throw Error("duplicate adjunction name '" + name + "'");
  adjunction_order_.push_back(name);
  adjunctions_.emplace(std::move(name), std::move(adj));
}

const CategoryRef& Workspace::category(const std::string& name) const {
  auto it = categories_.find(name);
  if (it == categories_.end()) throw Error("no category named '" + name + "'");
  return it->second;
}

const Functor& Workspace::functor_named(const std::string& name) const {
  auto it = functors_.find(name);
  if (it == functors_.end()) throw Error("no functor named '" + name + "'");
  return it->second;
}

const NatTrans& Workspace::nat_named(const std::string& name) const {
  auto it = nats_.find(name);
  if (it == nats_.end()) throw Error("no transformation named '" + name + "'");
  return it->second;
}

const Adjunction& Workspace::adjunction_named(const std::string& name) const {
  auto it = adjunctions_.find(name);
  if (it == adjunctions_.end()) throw Error("no adjunction named '" + name + "'");
  return it->second;
}

bool Workspace::extensionally_equal(const Workspace& other) const {
  if (category_order_ != other.category_order_ || functor_order_ != other.functor_order_ ||
      nat_order_ != other.nat_order_ || adjunction_order_ != other.adjunction_order_)
    return false;
  for (const auto& [name, cat] : categories_)
    if (!cat->extensionally_equal(*other.categories_.at(name))) return false;
  for (const auto& [name, f] : functors_)
    if (!f.equal_maps(other.functors_.at(name))) return false;
  for (const auto& [name, t] : nats_)
    if (!t.equal_maps(other.nats_.at(name))) return false;
  for (const auto& [name, a] : adjunctions_) {
    const Adjunction& b = other.adjunctions_.at(name);
    if (!a.F.equal_maps(b.F) || !a.G.equal_maps(b.G) || !a.unit.equal_maps(b.unit) ||
        !a.counit.equal_maps(b.counit))
      return false;
  }
  return true;
}

namespace {

// ---------------------------------------------------------------- lexer --

struct Token {
  enum Kind { ident, punct, end };
  Kind kind = end;
  std::string text;
  SourceSpan span;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    skip_trivia();
    current_.span = SourceSpan{line_, column_, 0};
    if (pos_ >= text_.size()) {
      current_.kind = Token::end;
      current_.text.clear();
      return;
    }
    char c = text_[pos_];
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        bump();
      current_.kind = Token::ident;
      current_.text = std::string(text_.substr(start, pos_ - start));
      current_.span.length = current_.text.size();
      return;
    }
    for (std::string_view p : {"|->", "->", "=>", "{", "}", ":", ";", ",", ".", "="}) {
      if (text_.substr(pos_, p.size()) == p) {
        current_.kind = Token::punct;
        current_.text = std::string(p);
        current_.span.length = p.size();
        for (std::size_t i = 0; i < p.size(); ++i) bump();
        return;
      }
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'",
                      SourceSpan{line_, column_, 1});
  }

  void skip_trivia() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1, column_ = 1;
  Token current_;
};

// --------------------------------------------------------------- parser --

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  Workspace run() {
    Workspace ws;
    while (lex_.peek().kind != Token::end) {
      Token kw = expect_ident("'category', 'functor', 'nat' or 'adjunction'");
      if (kw.text == "category")
        parse_category(ws);
      else if (kw.text == "functor")
        parse_functor(ws);
      else if (kw.text == "nat")
        parse_nat(ws);
      else if (kw.text == "adjunction")
        parse_adjunction(ws);
      else
        throw SyntaxError("unknown definition kind '" + kw.text + "'", kw.span);
    }
    return ws;
  }

 private:
  Token expect_ident(const std::string& what) {
    Token t = lex_.next();
    if (t.kind != Token::ident)
      throw SyntaxError("expected " + what + ", got '" + t.text + "'", t.span);
    return t;
  }

  Token expect_punct(const std::string& p) {
    Token t = lex_.next();
    if (t.kind != Token::punct || t.text != p)
      throw SyntaxError("expected '" + p + "', got '" + t.text + "'", t.span);
    return t;
  }

  bool accept_punct(const std::string& p) {
    if (lex_.peek().kind == Token::punct && lex_.peek().text == p) {
      lex_.next();
      return true;
    }
    return false;
  }

  bool at_punct(const std::string& p) const {
    return lex_.peek().kind == Token::punct && lex_.peek().text == p;
  }

  // section ":" items... where items may be empty; stops before '}' or the
  // next section keyword.
  bool at_section_end() const {
    return lex_.peek().kind == Token::end || at_punct("}");
  }

  void parse_category(Workspace& ws) {
    Token name = expect_ident("a category name");
    if (ws.has_category(name.text))
      throw SyntaxError("duplicate category '" + name.text + "'", name.span);
    expect_punct("{");

    std::vector<Token> objects;
    struct RawArrow {
      Token id, dom, cod;
    };
    std::vector<RawArrow> arrows;
    struct RawComp {
      Token f, g, fg;
    };
    std::vector<RawComp> comps;

    while (!at_punct("}")) {
      Token section = expect_ident("'objects', 'arrows' or 'compose'");
      expect_punct(":");
      if (section.text == "objects") {
        if (!at_punct(";") && !at_punct("}")) {
          do objects.push_back(expect_ident("an object id"));
          while (accept_punct(","));
        }
      } else if (section.text == "arrows") {
        if (!at_punct(";") && !at_punct("}")) {
          do {
            RawArrow a;
            a.id = expect_ident("an arrow id");
            expect_punct(":");
            a.dom = expect_ident("a domain object");
            expect_punct("->");
            a.cod = expect_ident("a codomain object");
            arrows.push_back(a);
          } while (accept_punct(","));
        }
      } else if (section.text == "compose") {
        if (!at_punct(";") && !at_punct("}")) {
          do {
            RawComp c;
            c.f = expect_ident("an arrow id");
            expect_punct(".");
            c.g = expect_ident("an arrow id");
            expect_punct("=");
            c.fg = expect_ident("an arrow id");
            comps.push_back(c);
          } while (accept_punct(","));
        }
      } else {
        throw SyntaxError("unknown category section '" + section.text + "'", section.span);
      }
      accept_punct(";");
    }
    expect_punct("}");

    CategoryBuilder builder(name.text);
    for (const Token& o : objects) {
      if (builder.has_object(o.text))
        throw SyntaxError("duplicate object '" + o.text + "'", o.span);
      builder.object(o.text);
    }
    // Identities up front so compose entries may reference them.
    for (const Token& o : objects) builder.identity_arrow("id_" + o.text, o.text);
    for (const RawArrow& a : arrows) {
      if (!builder.has_object(a.dom.text))
        throw UnknownReference("unknown object '" + a.dom.text + "'", a.dom.span);
      if (!builder.has_object(a.cod.text))
        throw UnknownReference("unknown object '" + a.cod.text + "'", a.cod.span);
      if (builder.has_arrow(a.id.text))
        throw SyntaxError("duplicate arrow '" + a.id.text + "'", a.id.span);
      builder.arrow(a.id.text, a.dom.text, a.cod.text);
    }
    for (const RawComp& c : comps) {
      for (const Token& t : {c.f, c.g, c.fg})
        if (!builder.has_arrow(t.text))
          throw UnknownReference("unknown arrow '" + t.text + "'", t.span);
      try {
        builder.composite(c.f.text, c.g.text, c.fg.text);
      } catch (const NotComposable&) {
        throw ValidationFailure("composability", {c.f.text, c.g.text});
      }
    }

    CategoryRef cat = complete_composition(builder.build());
    ValidationReport report = validate_category(*cat);
    if (!report.ok())
      throw ValidationFailure(report.violations.front().law, report.violations.front().ids);
    ws.add_category(cat);
  }

  // Fills composition entries that are forced: by an identity, or by a
  // singleton hom-set at the composite's endpoints.
  static CategoryRef complete_composition(const CategoryRef& cat) {
    CategoryBuilder builder(cat->name());
    for (const ObjId& a : cat->objects()) builder.object(a);
    for (const ArrId& f : cat->arrows()) {
      if (cat->is_identity(f))
        builder.identity_arrow(f, cat->dom(f));
      else
        builder.arrow(f, cat->dom(f), cat->cod(f));
    }
    for (const ArrId& f : cat->arrows()) {
      for (const ArrId& g : cat->arrows_from(cat->cod(f))) {
        auto fg = cat->try_compose(f, g);
        if (fg) {
          builder.composite(f, g, *fg);
          continue;
        }
        auto hom = cat->hom(cat->dom(f), cat->cod(g));
        if (hom.size() == 1) builder.composite(f, g, hom.front());
      }
    }
    return builder.build();
  }

  void parse_functor(Workspace& ws) {
    Token name = expect_ident("a functor name");
    if (ws.has_functor(name.text))
      throw SyntaxError("duplicate functor '" + name.text + "'", name.span);
    expect_punct(":");
    Token src = expect_ident("a source category");
    expect_punct("->");
    Token dst = expect_ident("a target category");
    if (!ws.has_category(src.text))
      throw UnknownReference("unknown category '" + src.text + "'", src.span);
    if (!ws.has_category(dst.text))
      throw UnknownReference("unknown category '" + dst.text + "'", dst.span);
    const CategoryRef& S = ws.category(src.text);
    const CategoryRef& D = ws.category(dst.text);

    expect_punct("{");
    std::map<ObjId, ObjId> om;
    std::map<ArrId, ArrId> am;
    while (!at_punct("}")) {
      Token section = expect_ident("'obj' or 'arr'");
      if (section.text == "obj") {
        do {
          Token from = expect_ident("an object id");
          expect_punct("|->");
          Token to = expect_ident("an object id");
          if (!S->has_object(from.text))
            throw UnknownReference("unknown object '" + from.text + "'", from.span);
          if (!D->has_object(to.text))
            throw UnknownReference("unknown object '" + to.text + "'", to.span);
          om[from.text] = to.text;
        } while (accept_punct(","));
      } else if (section.text == "arr") {
        if (!at_punct(";") && !at_punct("}")) {
          do {
            Token from = expect_ident("an arrow id");
            expect_punct("|->");
            Token to = expect_ident("an arrow id");
            if (!S->has_arrow(from.text))
              throw UnknownReference("unknown arrow '" + from.text + "'", from.span);
            if (!D->has_arrow(to.text))
              throw UnknownReference("unknown arrow '" + to.text + "'", to.span);
            am[from.text] = to.text;
          } while (accept_punct(","));
        }
      } else {
        throw SyntaxError("unknown functor section '" + section.text + "'", section.span);
      }
      accept_punct(";");
    }
    expect_punct("}");

    for (const ObjId& a : S->objects())
      if (!om.count(a)) throw ValidationFailure("object map totality", {name.text, a});
    // Identity images are forced.
    for (const ObjId& a : S->objects()) am.emplace(S->identity(a), D->identity(om.at(a)));
    for (const ArrId& f : S->arrows())
      if (!am.count(f)) throw ValidationFailure("arrow map totality", {name.text, f});

    Functor F(S, D, std::move(om), std::move(am));
    ValidationReport report = validate_functor(F);
    if (!report.ok())
      throw ValidationFailure(report.violations.front().law, report.violations.front().ids);
    ws.add_functor(name.text, std::move(F));
  }

  void parse_nat(Workspace& ws) {
    Token name = expect_ident("a transformation name");
    if (ws.has_nat(name.text))
      throw SyntaxError("duplicate transformation '" + name.text + "'", name.span);
    expect_punct(":");
    Token fname = expect_ident("a functor name");
    expect_punct("=>");
    Token gname = expect_ident("a functor name");
    if (!ws.has_functor(fname.text))
      throw UnknownReference("unknown functor '" + fname.text + "'", fname.span);
    if (!ws.has_functor(gname.text))
      throw UnknownReference("unknown functor '" + gname.text + "'", gname.span);
    const Functor& F = ws.functor_named(fname.text);
    const Functor& G = ws.functor_named(gname.text);

    expect_punct("{");
    std::map<ObjId, ArrId> comps;
    while (!at_punct("}")) {
      Token section = expect_ident("'at'");
      if (section.text != "at")
        throw SyntaxError("unknown transformation section '" + section.text + "'", section.span);
      do {
        Token obj = expect_ident("an object id");
        expect_punct(":");
        Token comp = expect_ident("an arrow id");
        if (!F.src()->has_object(obj.text))
          throw UnknownReference("unknown object '" + obj.text + "'", obj.span);
        if (!F.dst()->has_arrow(comp.text))
          throw UnknownReference("unknown arrow '" + comp.text + "'", comp.span);
        comps[obj.text] = comp.text;
      } while (accept_punct(","));
      accept_punct(";");
    }
    expect_punct("}");

    for (const ObjId& a : F.src()->objects())
      if (!comps.count(a)) throw ValidationFailure("component totality", {name.text, a});

    try {
      NatTrans tau(F, G, std::move(comps));
      ValidationReport report = validate_nat_trans(tau);
      if (!report.ok())
        throw ValidationFailure(report.violations.front().law, report.violations.front().ids);
      ws.add_nat(name.text, std::move(tau));
    } catch (const BoundaryMismatch&) {
      throw ValidationFailure("transformation boundaries", {fname.text, gname.text});
    }
  }

  void parse_adjunction(Workspace& ws) {
    Token name = expect_ident("an adjunction name");
    if (ws.has_adjunction(name.text))
      throw SyntaxError("duplicate adjunction '" + name.text + "'", name.span);
    expect_punct("{");
    std::map<std::string, Token> fields;
    while (!at_punct("}")) {
      Token field = expect_ident("'left', 'right', 'unit' or 'counit'");
      if (field.text != "left" && field.text != "right" && field.text != "unit" &&
          field.text != "counit")
        throw SyntaxError("unknown adjunction field '" + field.text + "'", field.span);
      expect_punct(":");
      Token value = expect_ident("a name");
      fields.emplace(field.text, value);
      accept_punct(";");
    }
    expect_punct("}");

    for (const char* field : {"left", "right", "unit", "counit"})
      if (!fields.count(field))
        throw ValidationFailure("adjunction fields", {name.text, field});
    for (const char* field : {"left", "right"})
      if (!ws.has_functor(fields.at(field).text))
        throw UnknownReference("unknown functor '" + fields.at(field).text + "'",
                               fields.at(field).span);
    for (const char* field : {"unit", "counit"})
      if (!ws.has_nat(fields.at(field).text))
        throw UnknownReference("unknown transformation '" + fields.at(field).text + "'",
                               fields.at(field).span);

    Adjunction adj{ws.functor_named(fields.at("left").text),
                   ws.functor_named(fields.at("right").text),
                   ws.nat_named(fields.at("unit").text),
                   ws.nat_named(fields.at("counit").text)};
    ValidationReport report = check_adjunction(adj);
    if (!report.ok())
      throw ValidationFailure(report.violations.front().law, report.violations.front().ids);
    ws.add_adjunction(name.text, std::move(adj));
  }

  Lexer lex_;
};

// ----------------------------------------------------------- serializer --

bool serializable_id(const std::string& id) {
  if (id.empty()) return false;
  for (char c : id)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

void require_serializable(const std::string& id) {
  if (!serializable_id(id))
    throw Error("id '" + id + "' cannot be written in the .cat syntax");
}

// A composition entry is forced when one side is an identity or the
// composite's hom-set is a singleton; forced entries are omitted.
bool forced_entry(const FiniteCategory& cat, const ArrId& f, const ArrId& g) {
  if (cat.is_identity(f) || cat.is_identity(g)) return true;
  return cat.hom(cat.dom(f), cat.cod(g)).size() == 1;
}

void serialize_category(std::ostream& os, const FiniteCategory& cat) {
  require_serializable(cat.name());
  os << "category " << cat.name() << " {\n";
  std::string sep;

  if (cat.object_count() > 0) {
    os << "  objects: ";
    sep.clear();
    for (const ObjId& a : cat.objects()) {
      require_serializable(a);
      os << sep << a;
      sep = ", ";
    }
    os << ";\n";
  }

  std::vector<ArrId> plain;
  for (const ArrId& f : cat.arrows())
    if (!cat.is_identity(f)) plain.push_back(f);
  if (!plain.empty()) {
    os << "  arrows: ";
    sep.clear();
    for (const ArrId& f : plain) {
      require_serializable(f);
      os << sep << f << ": " << cat.dom(f) << " -> " << cat.cod(f);
      sep = ", ";
    }
    os << ";\n";
  }

  std::vector<std::string> entries;
  for (const ArrId& f : cat.arrows())
    for (const ArrId& g : cat.arrows_from(cat.cod(f))) {
      auto fg = cat.try_compose(f, g);
      if (!fg || forced_entry(cat, f, g)) continue;
      entries.push_back(f + " . " + g + " = " + *fg);
    }
  if (!entries.empty()) {
    os << "  compose: ";
    sep.clear();
    for (const std::string& e : entries) {
      os << sep << e;
      sep = ", ";
    }
    os << ";\n";
  }
  os << "}\n";
}

void serialize_functor(std::ostream& os, const std::string& name, const Functor& F) {
  require_serializable(name);
  os << "functor " << name << ": " << F.src()->name() << " -> " << F.dst()->name() << " {\n";
  std::string sep;
  if (F.src()->object_count() > 0) {
    os << "  obj ";
    for (const ObjId& a : F.src()->objects()) {
      os << sep << a << " |-> " << F.obj(a);
      sep = ", ";
    }
    os << ";\n";
  }
  std::vector<ArrId> plain;
  for (const ArrId& f : F.src()->arrows())
    if (!F.src()->is_identity(f)) plain.push_back(f);
  if (!plain.empty()) {
    os << "  arr ";
    sep.clear();
    for (const ArrId& f : plain) {
      require_serializable(F.arr(f));
      os << sep << f << " |-> " << F.arr(f);
      sep = ", ";
    }
    os << ";\n";
  }
  os << "}\n";
}

void serialize_nat(std::ostream& os, const Workspace& ws, const std::string& name,
                   const NatTrans& tau) {
  require_serializable(name);
  // Boundary functors are referenced by their workspace names.
  auto functor_name = [&](const Functor& F) -> std::string {
    for (const std::string& fname : ws.functor_order())
      if (ws.functor_named(fname).equal_maps(F)) return fname;
    throw Error("transformation '" + name + "' references a functor missing from the workspace");
  };
  os << "nat " << name << ": " << functor_name(tau.source_functor()) << " => "
     << functor_name(tau.target_functor()) << " {\n";
  if (tau.source_functor().src()->object_count() > 0) {
    os << "  at ";
    std::string sep;
    for (const ObjId& a : tau.source_functor().src()->objects()) {
      require_serializable(tau.at(a));
      os << sep << a << ": " << tau.at(a);
      sep = ", ";
    }
    os << ";\n";
  }
  os << "}\n";
}

void serialize_adjunction(std::ostream& os, const Workspace& ws, const std::string& name,
                          const Adjunction& adj) {
  auto functor_name = [&](const Functor& F) -> std::string {
    for (const std::string& fname : ws.functor_order())
      if (ws.functor_named(fname).equal_maps(F)) return fname;
    throw Error("adjunction '" + name + "' references a functor missing from the workspace");
  };
  auto nat_name = [&](const NatTrans& t) -> std::string {
    for (const std::string& tname : ws.nat_order())
      if (ws.nat_named(tname).equal_maps(t)) return tname;
    throw Error("adjunction '" + name + "' references a transformation missing from the "
                "workspace");
  };
  os << "adjunction " << name << " {\n"
     << "  left: " << functor_name(adj.F) << ";\n"
     << "  right: " << functor_name(adj.G) << ";\n"
     << "  unit: " << nat_name(adj.unit) << ";\n"
     << "  counit: " << nat_name(adj.counit) << ";\n"
     << "}\n";
}

}  // namespace

Workspace parse(std::string_view text) { return Parser(text).run(); }

std::string serialize(const Workspace& ws) {
  std::ostringstream os;
  for (const std::string& name : ws.category_order()) serialize_category(os, *ws.category(name));
  for (const std::string& name : ws.functor_order())
    serialize_functor(os, name, ws.functor_named(name));
  for (const std::string& name : ws.nat_order()) serialize_nat(os, ws, name, ws.nat_named(name));
  for (const std::string& name : ws.adjunction_order())
    serialize_adjunction(os, ws, name, ws.adjunction_named(name));
  return os.str();
}

}  // namespace commaforge
