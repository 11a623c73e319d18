#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ko7 {

using Nat = std::uint64_t;

/// The seven KO7 constructors, in enumeration order.
enum class Kind : std::uint8_t { Void, Delta, Integrate, Merge, App, RecD, EqW };

inline constexpr std::array<Kind, 7> kAllKinds = {
    Kind::Void, Kind::Delta, Kind::Integrate, Kind::Merge,
    Kind::App,  Kind::RecD,  Kind::EqW};

constexpr std::size_t arity(Kind k) {
  switch (k) {
    case Kind::Void:
      return 0;
    case Kind::Delta:
    case Kind::Integrate:
      return 1;
    case Kind::Merge:
    case Kind::App:
    case Kind::EqW:
      return 2;
    case Kind::RecD:
      return 3;
  }
  return 0;
}

/// Surface keyword, also used as the constructor name in JSON.
std::string_view keyword(Kind k);

/// Inverse of keyword(); returns false for unknown words.
bool kind_from_keyword(std::string_view word, Kind& out);

/// Immutable, shareable KO7 term. Copies share structure; equality is
/// structural.
class Term {
 public:
  /// The atom `void`.
  Term();

  static Term make(Kind kind, std::vector<Term> children);

  Kind kind() const { return node_->kind; }
  std::size_t arity() const { return node_->children.size(); }
  const Term& child(std::size_t i) const { return node_->children.at(i); }
  std::span<const Term> children() const { return node_->children; }

  /// Number of constructor nodes.
  std::size_t size() const { return node_->size; }
  std::size_t hash() const { return node_->hash; }

  bool is(Kind k) const { return kind() == k; }

  friend bool operator==(const Term& a, const Term& b);
  /// Total structural order (kind first, then children left to right).
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  struct Node {
    Kind kind;
    std::size_t size;
    std::size_t hash;
    std::vector<Term> children;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

Term void_term();
Term delta(Term t);
Term integrate(Term t);
Term merge(Term a, Term b);
Term app(Term a, Term b);
Term rec(Term base, Term step, Term arg);
Term eqw(Term a, Term b);

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

/// Path of 0-based child indices from the root.
struct Position {
  std::vector<std::size_t> path;

  bool is_root() const { return path.empty(); }
  Position child(std::size_t i) const;

  friend bool operator==(const Position&, const Position&) = default;
  friend auto operator<=>(const Position&, const Position&) = default;
};

std::string render(const Position& p);

class InvalidPosition : public std::out_of_range {
 public:
  /// `depth` is the offset within the path, `index` the offending value.
  InvalidPosition(std::size_t depth, std::size_t index);
  std::size_t depth() const { return depth_; }
  std::size_t index() const { return index_; }

 private:
  std::size_t depth_;
  std::size_t index_;
};

const Term& subterm_at(const Term& t, const Position& p);
Term replace_at(const Term& t, const Position& p, Term u);

/// Syntax or arity error in the S-expression surface form.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& message);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class ArityError : public ParseError {
 public:
  ArityError(std::size_t offset, Kind kind, std::size_t got);
  Kind constructor() const { return kind_; }

 private:
  Kind kind_;
};

Term parse(std::string_view text);
std::string render(const Term& t);
std::ostream& operator<<(std::ostream& os, const Term& t);

/// All terms of exactly `size` nodes, in enumeration order.
std::vector<Term> enumerate_exact(std::size_t size);

/// All terms with size <= max_size: by size, then constructor order, then
/// children left to right in their own enumeration order.
std::vector<Term> enumerate(std::size_t max_size);

}  // namespace ko7
