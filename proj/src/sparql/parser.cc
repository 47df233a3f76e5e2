// Copyright 2026 The rdfpt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rdfpt/sparql/parser.h"

#include <set>

#include "rdfpt/error.h"
#include "rdfpt/sparql/lexer.h"

namespace rdfpt::sparql {

namespace {

using rdf::Term;

class Parser {
 public:
  Parser(std::string_view text, const rdf::PrefixTable* fallback)
      : tokens_(tokenize(text)), fallback_(fallback) {}

  SparqlQuery run() {
    prologue();
    if (is_keyword("SELECT")) {
      select_query();
    } else if (is_keyword("DESCRIBE")) {
      describe_query();
    } else if (is_keyword("ASK") || is_keyword("CONSTRUCT")) {
      throw UnsupportedFeature(peek().text + " query form");
    } else {
      fail("expected SELECT or DESCRIBE");
    }
    solution_modifiers();
    if (peek().kind != TokenKind::kEnd) fail("unexpected trailing input");
    validate();
    return std::move(q_);
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  Token next() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }
  bool is_keyword(std::string_view kw, std::size_t ahead = 0) const {
    return peek(ahead).kind == TokenKind::kKeyword && peek(ahead).text == kw;
  }
  bool is_punct(std::string_view p, std::size_t ahead = 0) const {
    return peek(ahead).kind == TokenKind::kPunct && peek(ahead).text == p;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    std::string near = t.kind == TokenKind::kEnd ? "end of input" : "'" + t.text + "'";
    throw ParseError("SPARQL: " + msg + " near " + near, t.offset);
  }
  void expect_punct(std::string_view p) {
    if (!is_punct(p)) fail("expected '" + std::string(p) + "'");
    ++pos_;
  }
  void expect_keyword(std::string_view kw) {
    if (!is_keyword(kw)) fail("expected " + std::string(kw));
    ++pos_;
  }

  void prologue() {
    for (;;) {
      if (is_keyword("PREFIX")) {
        ++pos_;
        const Token& name = peek();
        if (name.kind != TokenKind::kPrefixedName || name.text.back() != ':' ||
            name.text.find(':') != name.text.size() - 1) {
          fail("expected prefix label");
        }
        std::string label = name.text.substr(0, name.text.size() - 1);
        ++pos_;
        if (peek().kind != TokenKind::kIri) fail("expected namespace IRI");
        std::string ns = next().text;
        try {
          q_.prefixes.add(label, ns);
        } catch (const InvalidArgument& e) {
          throw ParseError(std::string("SPARQL: ") + e.what(), name.offset);
        }
      } else if (is_keyword("BASE")) {
        throw UnsupportedFeature("BASE");
      } else {
        return;
      }
    }
  }

  void dataset_clause() {
    if (is_keyword("FROM")) {
      throw UnsupportedFeature(is_keyword("NAMED", 1) ? "named graphs (FROM NAMED)"
                                                      : "dataset clause (FROM)");
    }
  }

  void select_query() {
    ++pos_;
    if (is_keyword("DISTINCT")) {
      q_.distinct = true;
      ++pos_;
    } else if (is_keyword("REDUCED")) {
      q_.reduced = true;
      ++pos_;
    }
    if (is_punct("*")) {
      ++pos_;
      q_.select_all = true;
    } else {
      while (peek().kind == TokenKind::kVariable) {
        projection_tokens_.push_back(peek());
        q_.projection.push_back(next().text);
        if (is_punct(",")) ++pos_;
      }
      if (q_.projection.empty()) fail("SELECT needs at least one variable");
      if (is_punct("(")) throw UnsupportedFeature("SELECT expressions");
    }
    dataset_clause();
    if (is_keyword("WHERE")) ++pos_;
    q_.where = group();
    if (q_.select_all) q_.projection = pattern_variables(q_.where);
  }

  void describe_query() {
    ++pos_;
    q_.form = QueryForm::kDescribe;
    std::vector<Term> targets;
    for (;;) {
      const Token& t = peek();
      if (t.kind == TokenKind::kVariable) {
        describe_token_ = t;
        targets.push_back(Term::variable(next().text));
      } else if (t.kind == TokenKind::kIri || t.kind == TokenKind::kPrefixedName ||
                 t.kind == TokenKind::kPlaceholder) {
        targets.push_back(iri_term());
      } else if (is_punct("*")) {
        throw UnsupportedFeature("DESCRIBE *");
      } else {
        break;
      }
    }
    if (targets.empty()) fail("DESCRIBE needs a target");
    if (targets.size() > 1) throw UnsupportedFeature("DESCRIBE with several targets");
    q_.describe_target = targets.front();
    dataset_clause();
    if (is_keyword("WHERE")) {
      ++pos_;
      q_.where = group();
    } else if (is_punct("{")) {
      q_.where = group();
    }
  }

  void solution_modifiers() {
    if (is_keyword("GROUP") || is_keyword("HAVING")) {
      throw UnsupportedFeature("aggregation (" + peek().text + ")");
    }
    if (is_keyword("ORDER")) {
      ++pos_;
      expect_keyword("BY");
      for (;;) {
        if (is_keyword("ASC") || is_keyword("DESC")) {
          bool desc = next().text == "DESC";
          expect_punct("(");
          if (peek().kind != TokenKind::kVariable) {
            throw UnsupportedFeature("ORDER BY expression");
          }
          order_tokens_.push_back(peek());
          q_.order_by.push_back({next().text, desc});
          expect_punct(")");
        } else if (peek().kind == TokenKind::kVariable) {
          order_tokens_.push_back(peek());
          q_.order_by.push_back({next().text, false});
        } else {
          break;
        }
      }
      if (q_.order_by.empty()) fail("ORDER BY needs a variable");
    }
    for (;;) {
      if (is_keyword("LIMIT")) {
        ++pos_;
        if (peek().kind != TokenKind::kInteger || peek().text[0] == '-' ||
            peek().text[0] == '+') {
          fail("LIMIT needs a non-negative integer");
        }
        if (q_.limit) fail("duplicate LIMIT");
        try {
          q_.limit = std::stoull(next().text);
        } catch (const std::exception&) {
          fail("LIMIT out of range");
        }
      } else if (is_keyword("OFFSET")) {
        throw UnsupportedFeature("OFFSET");
      } else {
        break;
      }
    }
  }

  // Nested plain groups and union alternatives are merged into their
  // parent, so a FILTER inside them may only use that group's own
  // variables (outer bindings would be invisible to it).
  GraphPattern group() {
    expect_punct("{");
    GraphPattern g;
    for (;;) {
      if (is_punct("}")) {
        ++pos_;
        return g;
      }
      if (is_punct(".")) {
        ++pos_;
        continue;
      }
      if (is_keyword("OPTIONAL")) {
        ++pos_;
        g.optionals.push_back(group());
        continue;
      }
      if (is_keyword("FILTER")) {
        ++pos_;
        g.filters.push_back(filter());
        continue;
      }
      if (is_keyword("GRAPH")) throw UnsupportedFeature("named graphs (GRAPH)");
      if (is_keyword("MINUS") || is_keyword("BIND") || is_keyword("VALUES") ||
          is_keyword("SERVICE")) {
        throw UnsupportedFeature(peek().text);
      }
      if (is_punct("{")) {
        std::size_t at = peek().offset;
        GraphPattern first = group();
        if (!is_keyword("UNION")) {
          check_merged_filters(first, at);
          merge_into(g, std::move(first));
          continue;
        }
        std::vector<GraphPattern> alts;
        alts.push_back(std::move(first));
        while (is_keyword("UNION")) {
          ++pos_;
          alts.push_back(group());
        }
        GraphPattern right = std::move(alts.back());
        for (std::size_t i = alts.size() - 1; i-- > 1;) {
          GraphPattern wrap;
          wrap.unions.emplace_back(std::move(alts[i]), std::move(right));
          right = std::move(wrap);
        }
        g.unions.emplace_back(std::move(alts[0]), std::move(right));
        continue;
      }
      triples_block(g.patterns);
    }
  }

  static void merge_into(GraphPattern& g, GraphPattern&& inner) {
    for (auto& tp : inner.patterns) g.patterns.push_back(std::move(tp));
    for (auto& f : inner.filters) g.filters.push_back(std::move(f));
    for (auto& o : inner.optionals) g.optionals.push_back(std::move(o));
    for (auto& u : inner.unions) g.unions.push_back(std::move(u));
  }

  void check_merged_filters(const GraphPattern& g, std::size_t at) const {
    auto own = variables_of(g.patterns);
    for (const auto& f : g.filters) {
      if (!own.count(f.variable)) {
        throw UnsupportedFeature("FILTER on ?" + f.variable +
                                 " outside the nested group that binds it");
      }
    }
  }

  void triples_block(std::vector<TriplePattern>& out) {
    Term subject = subject_term();
    for (;;) {
      Term verb = verb_term();
      for (;;) {
        Term object = object_term();
        out.push_back({subject, verb, std::move(object)});
        if (is_punct(",")) {
          ++pos_;
          continue;
        }
        break;
      }
      if (is_punct(";")) {
        ++pos_;
        while (is_punct(";")) ++pos_;
        if (is_punct(".") || is_punct("}")) break;
        continue;
      }
      break;
    }
    if (is_punct(".")) {
      ++pos_;
    } else if (!is_punct("}") && !is_keyword("OPTIONAL") && !is_keyword("FILTER") &&
               !is_punct("{")) {
      fail("expected '.' after triple pattern");
    }
  }

  Term subject_term() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::kVariable:
        return Term::variable(next().text);
      case TokenKind::kIri:
      case TokenKind::kPrefixedName:
      case TokenKind::kPlaceholder:
        return iri_term();
      case TokenKind::kBlankNode:
        throw UnsupportedFeature("blank nodes");
      case TokenKind::kString:
      case TokenKind::kInteger:
      case TokenKind::kDecimal:
      case TokenKind::kDouble:
        throw UnsupportedFeature("literal subject");
      default:
        if (is_punct("(")) throw UnsupportedFeature("RDF collections");
        fail("expected a triple pattern subject");
    }
  }

  Term verb_term() {
    const Token& t = peek();
    Term verb;
    if (t.kind == TokenKind::kVariable) {
      verb = Term::variable(next().text);
    } else if (t.kind == TokenKind::kKeyword && t.text == "a") {
      ++pos_;
      verb = make_uri(std::string(rdf::kRdfType));
    } else if (t.kind == TokenKind::kIri || t.kind == TokenKind::kPrefixedName) {
      verb = iri_term();
    } else if (is_punct("^") || is_punct("!") || is_punct("(")) {
      throw UnsupportedFeature("property paths");
    } else {
      fail("expected a predicate");
    }
    if (is_punct("/") || is_punct("|") || is_punct("*") || is_punct("+") ||
        is_punct("^")) {
      throw UnsupportedFeature("property paths");
    }
    return verb;
  }

  Term object_term() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::kVariable:
        return Term::variable(next().text);
      case TokenKind::kIri:
      case TokenKind::kPrefixedName:
      case TokenKind::kPlaceholder:
        return iri_term();
      case TokenKind::kBlankNode:
        throw UnsupportedFeature("blank nodes");
      default:
        if (is_punct("(")) throw UnsupportedFeature("RDF collections");
        return literal_term();
    }
  }

  Term literal_term() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::kString: {
        std::string lex = next().text;
        if (peek().kind == TokenKind::kLangTag) {
          return Term::literal(std::move(lex), {}, next().text);
        }
        if (is_punct("^^")) {
          ++pos_;
          if (peek().kind != TokenKind::kIri && peek().kind != TokenKind::kPrefixedName) {
            fail("expected datatype IRI");
          }
          return Term::literal(std::move(lex), resolve(next()));
        }
        return Term::literal(std::move(lex));
      }
      case TokenKind::kInteger:
        return Term::literal(next().text, rdf::xsd("integer"));
      case TokenKind::kDecimal:
        return Term::literal(next().text, rdf::xsd("decimal"));
      case TokenKind::kDouble:
        return Term::literal(next().text, rdf::xsd("double"));
      case TokenKind::kKeyword:
        if (t.text == "TRUE" || t.text == "FALSE") {
          std::string v = t.text == "TRUE" ? "true" : "false";
          ++pos_;
          return Term::literal(v, rdf::xsd("boolean"));
        }
        [[fallthrough]];
      default:
        fail("expected an RDF term");
    }
  }

  std::string resolve(const Token& t) {
    if (t.kind == TokenKind::kIri) return t.text;
    auto colon = t.text.find(':');
    std::string label = t.text.substr(0, colon);
    std::string local = t.text.substr(colon + 1);
    if (auto ns = q_.prefixes.namespace_of(label)) return *ns + local;
    if (fallback_ != nullptr) {
      if (auto ns = fallback_->namespace_of(label)) return *ns + local;
    }
    throw ParseError("SPARQL: undeclared prefix '" + label + ":'", t.offset);
  }

  Term make_uri(std::string full) {
    std::string compact = q_.prefixes.compress(full);
    if (compact == full && fallback_ != nullptr) compact = fallback_->compress(full);
    return Term::uri(std::move(full), std::move(compact));
  }

  Term iri_term() {
    Token t = next();
    if (t.kind == TokenKind::kPlaceholder) return Term::uri(t.text, t.text);
    return make_uri(resolve(t));
  }

  Term constant_term() {
    const Token& t = peek();
    if (t.kind == TokenKind::kIri || t.kind == TokenKind::kPrefixedName ||
        t.kind == TokenKind::kPlaceholder) {
      return iri_term();
    }
    return literal_term();
  }

  Filter filter() {
    std::size_t at = peek().offset;
    Filter f = is_punct("(") ? bracketed_constraint() : call_constraint();
    filter_vars_.push_back({f.variable, at});
    return f;
  }

  Filter bracketed_constraint() {
    expect_punct("(");
    Filter f;
    if (is_punct("(")) {
      f = bracketed_constraint();
    } else {
      f = expression();
    }
    if (is_punct("&&") || is_punct("||")) {
      throw UnsupportedFeature("logical operators in FILTER (&&, ||)");
    }
    expect_punct(")");
    return f;
  }

  Filter call_constraint() {
    if (is_punct("!") || is_keyword("BOUND") || is_keyword("REGEX")) return expression();
    if (peek().kind == TokenKind::kKeyword) {
      throw UnsupportedFeature("FILTER function " + peek().text);
    }
    fail("expected a FILTER constraint");
  }

  Filter expression() {
    Filter f;
    if (is_punct("!")) {
      ++pos_;
      if (!is_keyword("BOUND")) throw UnsupportedFeature("negation other than !bound");
      f = bound_call();
      f.negated = true;
      return f;
    }
    if (is_keyword("BOUND")) return bound_call();
    if (is_keyword("REGEX")) return regex_call();
    if (peek().kind == TokenKind::kKeyword && !is_keyword("TRUE") &&
        !is_keyword("FALSE")) {
      throw UnsupportedFeature("FILTER function " + peek().text);
    }
    if (is_punct("(")) {
      ++pos_;
      f = expression();
      if (is_punct("&&") || is_punct("||")) {
        throw UnsupportedFeature("logical operators in FILTER (&&, ||)");
      }
      expect_punct(")");
      return f;
    }
    // operand op operand with exactly one variable.
    bool left_var = peek().kind == TokenKind::kVariable;
    std::string var;
    Term constant;
    if (left_var) {
      var = next().text;
    } else {
      constant = constant_term();
    }
    static const std::pair<std::string_view, rdf::CompareOp> kOps[] = {
        {"=", rdf::CompareOp::kEq},  {"!=", rdf::CompareOp::kNe},
        {"<", rdf::CompareOp::kLt},  {">", rdf::CompareOp::kGt},
        {"<=", rdf::CompareOp::kLe}, {">=", rdf::CompareOp::kGe}};
    std::optional<rdf::CompareOp> op;
    for (const auto& [sym, o] : kOps) {
      if (is_punct(sym)) op = o;
    }
    if (!op) {
      if (left_var && (is_punct(")") || is_punct("&&") || is_punct("||"))) {
        throw UnsupportedFeature("effective boolean value of a variable");
      }
      fail("expected a comparison operator");
    }
    ++pos_;
    if (peek().kind == TokenKind::kVariable) {
      if (left_var) throw UnsupportedFeature("comparison between two variables");
      var = next().text;
      op = rdf::flip(*op);
    } else {
      if (!left_var) throw UnsupportedFeature("comparison between two constants");
      constant = constant_term();
    }
    f.kind = FilterKind::kCompare;
    f.variable = std::move(var);
    f.op = *op;
    f.constant = std::move(constant);
    return f;
  }

  Filter bound_call() {
    ++pos_;
    expect_punct("(");
    if (peek().kind != TokenKind::kVariable) fail("bound() takes a variable");
    Filter f;
    f.kind = FilterKind::kBound;
    f.variable = next().text;
    expect_punct(")");
    return f;
  }

  Filter regex_call() {
    ++pos_;
    expect_punct("(");
    if (peek().kind != TokenKind::kVariable) {
      throw UnsupportedFeature("regex over a non-variable argument");
    }
    Filter f;
    f.kind = FilterKind::kRegex;
    f.variable = next().text;
    expect_punct(",");
    if (peek().kind != TokenKind::kString) fail("regex pattern must be a string");
    std::size_t pat_at = peek().offset;
    f.pattern = next().text;
    if (is_punct(",")) {
      ++pos_;
      if (peek().kind != TokenKind::kString) fail("regex flags must be a string");
      f.flags = next().text;
    }
    expect_punct(")");
    try {
      rdf::validate_regex(f.pattern, f.flags);
    } catch (const ParseError& e) {
      throw ParseError(e.message(), pat_at);
    }
    return f;
  }

  void validate() {
    std::vector<std::string> vars = pattern_variables(q_.where);
    std::set<std::string> known(vars.begin(), vars.end());
    auto require = [&](const std::string& v, std::size_t at, const char* what) {
      if (!known.count(v)) {
        throw ParseError("SPARQL: " + std::string(what) + " ?" + v +
                             " does not occur in any triple pattern",
                         at);
      }
    };
    for (const auto& t : projection_tokens_) require(t.text, t.offset, "projected variable");
    for (const auto& t : order_tokens_) require(t.text, t.offset, "ORDER BY variable");
    for (const auto& [v, at] : filter_vars_) require(v, at, "FILTER variable");
    if (q_.describe_target && q_.describe_target->is_variable()) {
      require(q_.describe_target->value, describe_token_.offset, "DESCRIBE variable");
    }
    if (q_.form == QueryForm::kSelect && q_.projection.empty()) {
      throw ParseError("SPARQL: SELECT * over a pattern without variables", 0);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const rdf::PrefixTable* fallback_;
  SparqlQuery q_;
  std::vector<Token> projection_tokens_;
  std::vector<Token> order_tokens_;
  std::vector<std::pair<std::string, std::size_t>> filter_vars_;
  Token describe_token_;
};

}  // namespace

SparqlQuery parse_sparql(std::string_view text, const rdf::PrefixTable* fallback) {
  return Parser(text, fallback).run();
}

}  // namespace rdfpt::sparql
