#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <random>

#include "rmf/topotype.hpp"

using namespace rmf;

namespace {

RawType raw(Variant v, int g, int n, std::vector<std::int64_t> I, std::optional<std::int64_t> xi = {}) {
  return RawType{v, g, n, std::move(I), xi};
}

}  // namespace

TEST(Normalize, SepSignFlip) {
  const auto t = normalize(raw(Variant::Sep, 1, 3, {-1, -2}));
  EXPECT_EQ(t.variant(), Variant::Sep);
  EXPECT_EQ(t.indices(), (std::vector<int>{1, 2}));
  EXPECT_EQ(format_type(t), "1,3,1|1,2");
}

TEST(Normalize, NonSepAlreadyNormal) {
  const auto t = normalize(raw(Variant::NonSep, 1, 3, {1}));
  EXPECT_EQ(t.g(), 1);
  EXPECT_EQ(t.n(), 3);
  EXPECT_EQ(t.indices(), std::vector<int>{1});
}

TEST(Normalize, ExtFlipAdjustsXi) {
  const auto t = normalize(raw(Variant::SepExt, 3, 6, {-1, -1}, 0));
  EXPECT_EQ(t.indices(), (std::vector<int>{1, 1}));
  EXPECT_EQ(t.xi(), 1);
}

TEST(Normalize, SortsIndices) {
  EXPECT_EQ(normalize(raw(Variant::NonSep, 5, 9, {3, 0, 1})).indices(), (std::vector<int>{0, 1, 3}));
  EXPECT_EQ(normalize(raw(Variant::Sep, 5, 9, {3, -4, 1})).indices(), (std::vector<int>{-3, -1, 4}));
}

TEST(Normalize, SymmetricExtUsesSmallerXi) {
  // I = -I here, so xi and (g-k+1)/2 - xi name the same type.
  const auto a = normalize(raw(Variant::SepExt, 5, 8, {-1, 1}, 2));
  const auto b = normalize(raw(Variant::SepExt, 5, 8, {-1, 1}, 0));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.xi(), 0);
}

TEST(Normalize, Rejects) {
  EXPECT_THROW(normalize(raw(Variant::SepExt, 2, 6, {1, 1}, 0)), DomainError);  // g-k+1 odd
  EXPECT_THROW(normalize(raw(Variant::NonSep, 1, 3, {-1})), DomainError);
  EXPECT_THROW(normalize(raw(Variant::NonSep, -1, 3, {})), DomainError);
  EXPECT_THROW(normalize(raw(Variant::NonSep, 1, 0, {})), DomainError);
  EXPECT_THROW(normalize(raw(Variant::Sep, 1, 3, {1}, 0)), DomainError);
  EXPECT_THROW(normalize(raw(Variant::SepExt, 3, 6, {1, 1})), DomainError);
  EXPECT_THROW(normalize(raw(Variant::NonSep, kMaxGenus + 1, 3, {})), DomainError);
  EXPECT_THROW(normalize(raw(Variant::NonSep, 1, kMaxDegree + 1, {})), DomainError);
}

TEST(AdmitsExtension, Examples) {
  EXPECT_TRUE(admits_extension(normalize(raw(Variant::Sep, 2, 4, {-1, 1}))));
  EXPECT_FALSE(admits_extension(normalize(raw(Variant::Sep, 0, 2, {2}))));
  EXPECT_FALSE(admits_extension(normalize(raw(Variant::Sep, 1, 3, {1, 2}))));
  EXPECT_THROW(admits_extension(normalize(raw(Variant::NonSep, 1, 3, {1}))), DomainError);
}

TEST(Exists, Examples) {
  EXPECT_TRUE(exists(parse_type("0,2,1|2")).exists);
  EXPECT_TRUE(exists(parse_type("1,3,0|1")).exists);
  const auto r = exists(parse_type("0,3,0|1"));
  EXPECT_FALSE(r.exists);
  EXPECT_EQ(r.violated, std::vector<std::string>{"N1: k <= g"});
}

TEST(Exists, SepClauses) {
  EXPECT_TRUE(exists(parse_type("0,1,1|-1")).exists);      // clause 1
  EXPECT_TRUE(exists(parse_type("2,2,1|0,0,0")).exists);   // clause 2
  EXPECT_TRUE(exists(parse_type("1,3,1|1,2")).exists);     // clause 3
  EXPECT_TRUE(exists(parse_type("1,6,1|1,-1")).exists);    // clause 4
  EXPECT_FALSE(exists(parse_type("2,6,1|1,-1")).exists);   // k and g+1 differ in parity
  EXPECT_FALSE(exists(parse_type("0,3,1|1,2")).exists);    // k > g+1
  EXPECT_FALSE(exists(parse_type("1,4,1|1,2")).exists);    // parity of sum
  const auto r = exists(parse_type("1,5,1|1,2"));
  EXPECT_TRUE(r.exists);  // clause 4: 3 <= 3
  const auto bad = exists(parse_type("1,4,1|1,1"));
  EXPECT_TRUE(bad.exists);  // clause 4: 2 <= 2
  const auto none = exists(parse_type("1,5,1|-1,4"));
  EXPECT_FALSE(none.exists);
  EXPECT_EQ(none.violated, std::vector<std::string>{"N2: one of clauses (1)-(4)"});
}

TEST(Exists, ExtRequiresExtension) {
  EXPECT_TRUE(exists(parse_type("3,6,1|-1,3;1")).exists);
  EXPECT_TRUE(exists(parse_type("3,6,1|-1,3;0")).exists);
  // Sep(3,6,(1,1)) exists but |2| < 2 = 4 fails, so it has no extended types.
  EXPECT_TRUE(exists(parse_type("3,6,1|1,1")).exists);
  const auto no_ext = exists(parse_type("3,6,1|1,1;1"));
  EXPECT_FALSE(no_ext.exists);
  EXPECT_EQ(no_ext.violated, std::vector<std::string>{"N3: type admits extension"});
  const auto r = exists(parse_type("2,3,1|1;0"));  // Sep(2,3,(1)): 1 < 1 fails
  EXPECT_FALSE(r.exists);
  EXPECT_NE(std::find(r.violated.begin(), r.violated.end(), "N3: type admits extension"),
            r.violated.end());
  const auto out = exists(parse_type("3,6,1|-1,3;2"));
  EXPECT_FALSE(out.exists);
  EXPECT_NE(std::find(out.violated.begin(), out.violated.end(), "N3: 0 <= xi <= (g - k + 1) / 2"),
            out.violated.end());
}

TEST(Dimension, Examples) {
  EXPECT_EQ(dimension(parse_type("0,2,1|2")), 2);
  EXPECT_EQ(dimension(parse_type("1,3,0|1")), 6);
  EXPECT_EQ(dimension(parse_type("3,6,1|-1,3;1")), 16);
  EXPECT_THROW(dimension(parse_type("3,6,1|1,1;1")), DomainError);
  EXPECT_THROW(dimension(parse_type("0,3,0|1")), DomainError);
}

TEST(Text, Examples) {
  const auto a = parse_type("1,3,0|1");
  EXPECT_EQ(a.variant(), Variant::NonSep);
  EXPECT_EQ(a.indices(), std::vector<int>{1});
  const auto b = parse_type("0,2,1|2");
  EXPECT_EQ(b.variant(), Variant::Sep);
  const auto c = parse_type("3,6,1|1,1;1");
  EXPECT_EQ(c.variant(), Variant::SepExt);
  EXPECT_EQ(c.xi(), 1);
  EXPECT_EQ(format_type(parse_type("1,4,0|")), "1,4,0|");
  EXPECT_TRUE(parse_type("1,4,0|").indices().empty());
  for (const char* s : {"1,3,0|1", "0,2,1|2", "3,6,1|1,1;1", "1,4,0|", "4,9,1|-2,1,3"})
    EXPECT_EQ(format_type(parse_type(s)), s);
}

TEST(Text, SyntaxErrorsCarryPosition) {
  struct Case {
    const char* text;
    std::size_t position;
  };
  for (const auto& c : {Case{"1,3,0|-1", 6}, Case{"1,3,0|1;0", 7}, Case{"1,3", 3},
                        Case{"1,3,2|1", 4}, Case{"x", 0}, Case{"1,3,0|1,", 8},
                        Case{"1,3,0|1 ", 7}}) {
    try {
      parse_type(c.text);
      ADD_FAILURE() << c.text << " parsed";
    } catch (const ParseError& e) {
      EXPECT_EQ(e.position(), c.position) << c.text;
    }
  }
}

TEST(Text, SemanticErrorsDeferred) {
  EXPECT_NO_THROW(parse_raw_type("2,6,1|1,1;0"));
  EXPECT_THROW(parse_type("2,6,1|1,1;0"), DomainError);
}

// Random raw types over a small box.
class TypeSweep : public ::testing::Test {
 protected:
  std::vector<RawType> samples() {
    std::mt19937 rng(7);
    std::vector<RawType> out;
    for (int it = 0; it < 3000; ++it) {
      RawType r;
      r.variant = static_cast<Variant>(rng() % 3);
      r.g = rng() % 6;
      r.n = 1 + rng() % 8;
      const int k = rng() % 5;
      for (int j = 0; j < k; ++j)
        r.indices.push_back(r.variant == Variant::NonSep ? rng() % 5 : static_cast<int>(rng() % 9) - 4);
      if (r.variant == Variant::SepExt) {
        if ((r.g - k + 1) % 2 != 0) r.g += 1;
        r.xi = static_cast<int>(rng() % 5) - 1;
      }
      out.push_back(r);
    }
    return out;
  }
};

TEST_F(TypeSweep, NormalizeIdempotent) {
  for (const auto& r : samples()) {
    const auto t = normalize(r);
    EXPECT_EQ(normalize(t.raw()), t);
    EXPECT_EQ(parse_type(format_type(t)), t);
  }
}

TEST_F(TypeSweep, FlipInvariance) {
  for (const auto& r : samples()) {
    if (r.variant == Variant::NonSep) continue;
    const auto t = normalize(r);
    const auto f = normalize(negated(t));
    EXPECT_EQ(f, t);
    RawType flipped = r;
    for (auto& i : flipped.indices) i = -i;
    if (r.xi) flipped.xi = (r.g - static_cast<int>(r.indices.size()) + 1) / 2 - *r.xi;
    EXPECT_EQ(normalize(flipped), t);
    EXPECT_EQ(exists(normalize(flipped)).exists, exists(t).exists);
  }
}

TEST_F(TypeSweep, ExistingTypesAreCoherent) {
  for (const auto& r : samples()) {
    const auto t = normalize(r);
    const auto rep = exists(t);
    EXPECT_EQ(rep.exists, rep.violated.empty());
    if (!rep.exists) continue;
    EXPECT_EQ(((t.index_sum() - t.n()) % 2 + 2) % 2, 0);
    EXPECT_EQ(dimension(t) % 2, 0);
    EXPECT_GE(dimension(t), 0);
    if (t.variant() == Variant::Sep && t.abs_index_sum() == t.n() &&
        std::llabs(t.index_sum()) == t.n()) {
      EXPECT_FALSE(admits_extension(t));
    }
  }
}

TEST(Text, SignedXiOutsideRangeNormalizes) {
  // (g-k+1)/2 - xi may leave [0, bound]; the text form accepts it signed.
  const auto t = normalize(RawType{Variant::SepExt, 3, 6, {-1, -1}, 3});
  EXPECT_EQ(t.xi(), -2);
  EXPECT_EQ(parse_type(format_type(t)), t);
  EXPECT_FALSE(exists(t).exists);
}
