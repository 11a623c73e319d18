#include <gtest/gtest.h>

#include <random>
#include <set>
#include <unordered_set>

#include "ko7/term.hpp"
#include "oracle.hpp"

using namespace ko7;

namespace {

std::vector<Position> positions(const Term& t) {
  std::vector<Position> out{Position{}};
  for (std::size_t i = 0; i < t.arity(); ++i) {
    for (Position p : positions(t.child(i))) {
      p.path.insert(p.path.begin(), i);
      out.push_back(p);
    }
  }
  return out;
}

}  // namespace

TEST(Term, ParseExamples) {
  EXPECT_EQ(parse("void"), void_term());
  EXPECT_EQ(parse("(integrate (delta void))"), integrate(delta(void_term())));
  EXPECT_EQ(parse("(rec void void (delta void))"), rec(Term(), Term(), delta(Term())));
  EXPECT_EQ(parse("  ( merge\tvoid\n void )  "), merge(Term(), Term()));
}

TEST(Term, RenderExamples) {
  EXPECT_EQ(render(Term()), "void");
  EXPECT_EQ(render(merge(Term(), Term())), "(merge void void)");
  EXPECT_EQ(render(eqw(Term(), Term())), "(eqw void void)");
  EXPECT_EQ(render(rec(Term(), app(Term(), Term()), delta(Term()))),
            "(rec void (app void void) (delta void))");
}

TEST(Term, SizeExamples) {
  EXPECT_EQ(Term().size(), 1u);
  EXPECT_EQ(delta(Term()).size(), 2u);
  // Four constructors plus the void under delta: five nodes.
  EXPECT_EQ(rec(Term(), Term(), delta(Term())).size(), 5u);
}

TEST(Term, RoundTripUpToSeven) {
  for (const Term& t : enumerate(7)) {
    ASSERT_EQ(parse(render(t)), t) << render(t);
    ASSERT_EQ(t.size(), oracle::size(t));
  }
}

TEST(Term, ParseErrorsCarryOffsets) {
  try {
    parse("(merge void");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 11u);
  }
  try {
    parse("(merge void vod)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 12u);
  }
  try {
    parse("void void");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 5u);
  }
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("VOID"), ParseError);
  EXPECT_THROW(parse(")"), ParseError);
}

TEST(Term, ArityErrorsNameConstructor) {
  try {
    parse("(app void)");
    FAIL();
  } catch (const ArityError& e) {
    EXPECT_EQ(e.constructor(), Kind::App);
    EXPECT_EQ(e.offset(), 1u);
    EXPECT_NE(std::string(e.what()).find("app"), std::string::npos);
  }
  EXPECT_THROW(parse("(rec void void)"), ArityError);
  EXPECT_THROW(parse("(delta void void)"), ArityError);
  EXPECT_THROW(parse("delta"), ArityError);
  EXPECT_THROW(parse("(void)"), ArityError);
  EXPECT_THROW(Term::make(Kind::Merge, {Term()}), std::invalid_argument);
}

TEST(Enumerate, SmallCases) {
  EXPECT_EQ(enumerate(1), std::vector<Term>{Term()});
  std::vector<Term> two{Term(), delta(Term()), integrate(Term())};
  EXPECT_EQ(enumerate(2), two);
}

TEST(Enumerate, CountsMatchRecurrence) {
  auto expected = oracle::term_counts(8);
  EXPECT_EQ(expected[4], 27u);
  std::size_t cumulative = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    EXPECT_EQ(enumerate_exact(n).size(), expected[n]) << "size " << n;
    cumulative += expected[n];
    EXPECT_EQ(enumerate(n).size(), cumulative) << "max size " << n;
  }
  EXPECT_EQ(enumerate_exact(4).size(), 27u);
  EXPECT_EQ(enumerate(4).size(), 37u);
}

TEST(Enumerate, DuplicateFreeAndOrdered) {
  std::vector<Term> all = enumerate(7);
  std::unordered_set<Term, TermHash> seen(all.begin(), all.end());
  EXPECT_EQ(seen.size(), all.size());
  for (std::size_t i = 1; i < all.size(); ++i) {
    ASSERT_LE(all[i - 1].size(), all[i].size());
    if (all[i - 1].size() == all[i].size()) {
      ASSERT_LE(static_cast<int>(all[i - 1].kind()), static_cast<int>(all[i].kind()));
    }
  }
  EXPECT_EQ(enumerate(7), enumerate(7));
}

TEST(Enumerate, ChildrenOrderedByRank) {
  std::vector<Term> all = enumerate(6);
  std::map<Term, std::size_t> rank;
  for (std::size_t i = 0; i < all.size(); ++i) rank[all[i]] = i;
  for (std::size_t i = 1; i < all.size(); ++i) {
    const Term& a = all[i - 1];
    const Term& b = all[i];
    if (a.size() != b.size() || a.kind() != b.kind()) continue;
    std::vector<std::size_t> ra, rb;
    for (const Term& c : a.children()) ra.push_back(rank.at(c));
    for (const Term& c : b.children()) rb.push_back(rank.at(c));
    ASSERT_LT(ra, rb) << render(a) << " / " << render(b);
  }
}

TEST(Enumerate, MembershipAgreesWithSize) {
  std::vector<Term> all = enumerate(7);
  std::set<Term> index(all.begin(), all.end());
  std::mt19937 rng(7);
  for (int i = 0; i < 2000; ++i) {
    std::size_t n = 1 + rng() % 10;
    Term t = oracle::random_term(n, rng);
    ASSERT_EQ(oracle::size(t), n);
    EXPECT_EQ(index.count(t) == 1, n <= 7) << render(t);
  }
}

TEST(Position, AccessExamples) {
  Term m = merge(Term(), delta(Term()));
  EXPECT_EQ(subterm_at(m, Position{{1}}), delta(Term()));
  EXPECT_EQ(replace_at(integrate(Term()), Position{{0}}, delta(Term())), integrate(delta(Term())));
  EXPECT_EQ(replace_at(Term(), Position{}, merge(Term(), Term())), merge(Term(), Term()));
  EXPECT_EQ(render(Position{{0, 2}}), "[0,2]");
  EXPECT_EQ(render(Position{}), "[]");
}

TEST(Position, InvalidPositionReportsIndex) {
  Term m = merge(Term(), delta(Term()));
  try {
    subterm_at(m, Position{{1, 3}});
    FAIL();
  } catch (const InvalidPosition& e) {
    EXPECT_EQ(e.depth(), 1u);
    EXPECT_EQ(e.index(), 3u);
  }
  EXPECT_THROW(subterm_at(Term(), Position{{0}}), InvalidPosition);
  EXPECT_THROW(replace_at(m, Position{{2}}, Term()), InvalidPosition);
}

TEST(Position, ReplaceWithOwnSubtermIsIdentity) {
  for (const Term& t : enumerate(6)) {
    for (const Position& p : positions(t)) {
      ASSERT_EQ(replace_at(t, p, subterm_at(t, p)), t);
    }
  }
}
