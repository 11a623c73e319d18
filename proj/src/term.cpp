#include "ko7/term.hpp"

#include <cctype>
#include <functional>
#include <sstream>

namespace ko7 {

namespace {

constexpr std::array<std::string_view, 7> kKeywords = {
    "void", "delta", "integrate", "merge", "app", "rec", "eqw"};

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

std::string_view keyword(Kind k) { return kKeywords[static_cast<std::size_t>(k)]; }

bool kind_from_keyword(std::string_view word, Kind& out) {
  for (Kind k : kAllKinds) {
    if (keyword(k) == word) {
      out = k;
      return true;
    }
  }
  return false;
}

Term::Term() {
  static const auto atom = std::make_shared<const Node>(
      Node{Kind::Void, 1, mix(0, static_cast<std::size_t>(Kind::Void)), {}});
  node_ = atom;
}

Term Term::make(Kind kind, std::vector<Term> children) {
  if (children.size() != ko7::arity(kind)) {
    throw std::invalid_argument("constructor '" + std::string(keyword(kind)) +
                                "' expects " + std::to_string(ko7::arity(kind)) +
                                " children");
  }
  if (kind == Kind::Void) return Term();
  std::size_t size = 1;
  std::size_t h = mix(0, static_cast<std::size_t>(kind));
  for (const Term& c : children) {
    size += c.size();
    h = mix(h, c.hash());
  }
  return Term(std::make_shared<const Node>(Node{kind, size, h, std::move(children)}));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size() || a.kind() != b.kind()) return false;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!(a.child(i) == b.child(i))) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (auto c = a.child(i) <=> b.child(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Term void_term() { return Term(); }
Term delta(Term t) { return Term::make(Kind::Delta, {std::move(t)}); }
Term integrate(Term t) { return Term::make(Kind::Integrate, {std::move(t)}); }
Term merge(Term a, Term b) { return Term::make(Kind::Merge, {std::move(a), std::move(b)}); }
Term app(Term a, Term b) { return Term::make(Kind::App, {std::move(a), std::move(b)}); }
Term rec(Term base, Term step, Term arg) {
  return Term::make(Kind::RecD, {std::move(base), std::move(step), std::move(arg)});
}
Term eqw(Term a, Term b) { return Term::make(Kind::EqW, {std::move(a), std::move(b)}); }

// ---------------------------------------------------------------------------
// Positions

Position Position::child(std::size_t i) const {
  Position p = *this;
  p.path.push_back(i);
  return p;
}

std::string render(const Position& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.path.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.path[i]);
  }
  out += ']';
  return out;
}

InvalidPosition::InvalidPosition(std::size_t depth, std::size_t index)
    : std::out_of_range("invalid position: index " + std::to_string(index) +
                        " at depth " + std::to_string(depth)),
      depth_(depth),
      index_(index) {}

const Term& subterm_at(const Term& t, const Position& p) {
  const Term* cur = &t;
  for (std::size_t d = 0; d < p.path.size(); ++d) {
    if (p.path[d] >= cur->arity()) throw InvalidPosition(d, p.path[d]);
    cur = &cur->child(p.path[d]);
  }
  return *cur;
}

namespace {

Term replace_from(const Term& t, const Position& p, std::size_t depth, Term u) {
  if (depth == p.path.size()) return u;
  std::size_t i = p.path[depth];
  if (i >= t.arity()) throw InvalidPosition(depth, i);
  std::vector<Term> kids(t.children().begin(), t.children().end());
  kids[i] = replace_from(kids[i], p, depth + 1, std::move(u));
  return Term::make(t.kind(), std::move(kids));
}

}  // namespace

Term replace_at(const Term& t, const Position& p, Term u) {
  return replace_from(t, p, 0, std::move(u));
}

// ---------------------------------------------------------------------------
// Surface syntax

ParseError::ParseError(std::size_t offset, const std::string& message)
    : std::runtime_error("at byte " + std::to_string(offset) + ": " + message),
      offset_(offset) {}

ArityError::ArityError(std::size_t offset, Kind kind, std::size_t got)
    : ParseError(offset, "constructor '" + std::string(keyword(kind)) + "' takes " +
                             std::to_string(ko7::arity(kind)) + " argument(s), got " +
                             std::to_string(got)),
      kind_(kind) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Term parse_all() {
    Term t = parse_term();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, "unexpected trailing input");
    return t;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view word() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Term parse_term() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    std::size_t start = pos_;
    if (text_[pos_] != '(') {
      std::string_view w = word();
      if (w.empty()) {
        throw ParseError(start, std::string("unexpected character '") + text_[start] + "'");
      }
      Kind k;
      if (!kind_from_keyword(w, k)) {
        throw ParseError(start, "unknown constructor '" + std::string(w) + "'");
      }
      if (k != Kind::Void) throw ArityError(start, k, 0);
      return Term();
    }
    ++pos_;
    skip_ws();
    std::size_t kw_at = pos_;
    std::string_view w = word();
    if (w.empty()) throw ParseError(kw_at, "expected constructor keyword");
    Kind k;
    if (!kind_from_keyword(w, k)) {
      throw ParseError(kw_at, "unknown constructor '" + std::string(w) + "'");
    }
    std::vector<Term> kids;
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input, expected ')'");
      if (text_[pos_] == ')') break;
      kids.push_back(parse_term());
    }
    if (kids.size() != ko7::arity(k) || k == Kind::Void) throw ArityError(kw_at, k, kids.size());
    ++pos_;
    return Term::make(k, std::move(kids));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void render_into(const Term& t, std::string& out) {
  if (t.is(Kind::Void)) {
    out += "void";
    return;
  }
  out += '(';
  out += keyword(t.kind());
  for (const Term& c : t.children()) {
    out += ' ';
    render_into(c, out);
  }
  out += ')';
}

}  // namespace

Term parse(std::string_view text) { return Parser(text).parse_all(); }

std::string render(const Term& t) {
  std::string out;
  out.reserve(t.size() * 8);
  render_into(t, out);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Term& t) { return os << render(t); }

// ---------------------------------------------------------------------------
// Enumeration

namespace {

using SizeTable = std::vector<std::vector<Term>>;

// Fills table[1..max] with the terms of each exact size.
SizeTable build_table(std::size_t max) {
  SizeTable table(max + 1);
  if (max >= 1) table[1].push_back(Term());
  for (std::size_t n = 2; n <= max; ++n) {
    auto& out = table[n];
    for (Kind k : kAllKinds) {
      std::size_t ar = ko7::arity(k);
      if (ar == 0) continue;
      std::size_t budget = n - 1;
      if (budget < ar) continue;
      std::vector<Term> kids(ar);
      // Child i takes a size in [1, remaining - (ar - i - 1)]; the last child
      // takes exactly what remains.
      std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t i, std::size_t left) {
        if (i + 1 == ar) {
          for (const Term& c : table[left]) {
            kids[i] = c;
            out.push_back(Term::make(k, kids));
          }
          return;
        }
        for (std::size_t s = 1; s + (ar - i - 1) <= left; ++s) {
          for (const Term& c : table[s]) {
            kids[i] = c;
            fill(i + 1, left - s);
          }
        }
      };
      fill(0, budget);
    }
  }
  return table;
}

}  // namespace

std::vector<Term> enumerate_exact(std::size_t size) {
  if (size == 0) return {};
  return build_table(size)[size];
}

std::vector<Term> enumerate(std::size_t max_size) {
  SizeTable table = build_table(max_size);
  std::vector<Term> out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    out.insert(out.end(), table[n].begin(), table[n].end());
  }
  return out;
}

}  // namespace ko7
