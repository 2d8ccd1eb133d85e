#ifndef RMF_TOPOTYPE_HPP
#define RMF_TOPOTYPE_HPP

// Topological types of real meromorphic functions.
//
//   NonSep(g, n, I)      functions on non-separating curves, I = oval indices
//   Sep(g, n, I)         functions on separating curves, I = signed degrees
//   SepExt(g, n, I, xi)  extended type, for Sep types admitting extension
//
// Values are always held in normal form: I sorted non-decreasingly, and for
// the separating variants the {I, -I} orbit represented by the
// lexicographically larger sorted list.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rmf/error.hpp"

namespace rmf {

enum class Variant { NonSep, Sep, SepExt };

inline constexpr int kMaxGenus = 1 << 16;
inline constexpr int kMaxDegree = 1 << 16;
inline constexpr int kMaxIndexCount = 1 << 16;

inline const char* variant_name(Variant v) {
  switch (v) {
    case Variant::NonSep: return "NonSep";
    case Variant::Sep: return "Sep";
    case Variant::SepExt: return "SepExt";
  }
  return "?";
}

/// Unvalidated input to normalize(). Wide integers so that range errors are
/// reported rather than wrapped.
struct RawType {
  Variant variant = Variant::NonSep;
  std::int64_t g = 0;
  std::int64_t n = 1;
  std::vector<std::int64_t> indices;
  std::optional<std::int64_t> xi;
};

class TopType;
TopType normalize(const RawType& raw);

class TopType {
 public:
  Variant variant() const noexcept { return variant_; }
  int g() const noexcept { return g_; }
  int n() const noexcept { return n_; }
  int k() const noexcept { return static_cast<int>(indices_.size()); }
  const std::vector<int>& indices() const noexcept { return indices_; }
  std::optional<int> xi() const noexcept { return xi_; }

  bool separating() const noexcept { return variant_ != Variant::NonSep; }

  std::int64_t index_sum() const noexcept {
    std::int64_t s = 0;
    for (int i : indices_) s += i;
    return s;
  }
  std::int64_t abs_index_sum() const noexcept {
    std::int64_t s = 0;
    for (int i : indices_) s += std::abs(i);
    return s;
  }
  bool has_zero_index() const noexcept {
    return std::find(indices_.begin(), indices_.end(), 0) != indices_.end();
  }

  /// (g - k + 1) / 2, the upper bound of xi. Only meaningful when g - k + 1 is
  /// even (always true for SepExt).
  int xi_bound() const noexcept { return (g_ - k() + 1) / 2; }

  RawType raw() const {
    RawType r;
    r.variant = variant_;
    r.g = g_;
    r.n = n_;
    r.indices.assign(indices_.begin(), indices_.end());
    if (xi_) r.xi = *xi_;
    return r;
  }

  friend auto operator<=>(const TopType&, const TopType&) = default;
  friend bool operator==(const TopType&, const TopType&) = default;

 private:
  friend TopType normalize(const RawType& raw);
  TopType() = default;

  Variant variant_ = Variant::NonSep;
  int g_ = 0;
  int n_ = 1;
  std::vector<int> indices_;
  std::optional<int> xi_;
};

/// Canonical representative of the identification class of `raw`.
///
/// Throws DomainError for out-of-range values, negative indices in a
/// non-separating type, xi on a non-extended type, and SepExt input whose
/// g - k + 1 is odd (the xi identification is undefined there).
inline TopType normalize(const RawType& raw) {
  if (raw.g < 0 || raw.g > kMaxGenus)
    throw DomainError("genus must lie in [0, " + std::to_string(kMaxGenus) + "]");
  if (raw.n < 1 || raw.n > kMaxDegree)
    throw DomainError("degree n must lie in [1, " + std::to_string(kMaxDegree) + "]");
  if (raw.indices.size() > static_cast<std::size_t>(kMaxIndexCount))
    throw DomainError("too many ovals");
  for (auto i : raw.indices) {
    if (i < -kMaxDegree || i > kMaxDegree) throw DomainError("index out of range");
    if (raw.variant == Variant::NonSep && i < 0)
      throw DomainError("non-separating indices must be non-negative");
  }
  if (raw.variant != Variant::SepExt && raw.xi)
    throw DomainError("xi is only defined for extended separating types");
  if (raw.variant == Variant::SepExt) {
    if (!raw.xi) throw DomainError("extended type requires xi");
    if (*raw.xi < -kMaxGenus || *raw.xi > kMaxGenus) throw DomainError("xi out of range");
    const auto k = static_cast<std::int64_t>(raw.indices.size());
    if ((raw.g - k + 1) % 2 != 0)
      throw DomainError("extended type requires g - k + 1 even");
  }

  TopType t;
  t.variant_ = raw.variant;
  t.g_ = static_cast<int>(raw.g);
  t.n_ = static_cast<int>(raw.n);
  t.indices_.reserve(raw.indices.size());
  for (auto i : raw.indices) t.indices_.push_back(static_cast<int>(i));
  std::sort(t.indices_.begin(), t.indices_.end());
  if (raw.xi) t.xi_ = static_cast<int>(*raw.xi);

  if (t.separating()) {
    std::vector<int> flipped;
    flipped.reserve(t.indices_.size());
    for (int i : t.indices_) flipped.push_back(-i);
    std::sort(flipped.begin(), flipped.end());
    const int bound = t.xi_bound();
    if (flipped > t.indices_) {
      t.indices_ = std::move(flipped);
      if (t.xi_) t.xi_ = bound - *t.xi_;
    } else if (flipped == t.indices_ && t.xi_) {
      t.xi_ = std::min(*t.xi_, bound - *t.xi_);
    }
  }
  return t;
}

/// The same type with every index negated, returned as raw input.
inline RawType negated(const TopType& t) {
  RawType r = t.raw();
  for (auto& i : r.indices) i = -i;
  if (r.xi) r.xi = t.xi_bound() - *r.xi;
  return r;
}

/// The Sep type underlying a SepExt type (or the Sep type itself).
inline TopType underlying_sep(const TopType& t) {
  if (!t.separating()) throw DomainError("underlying_sep needs a separating type");
  RawType r = t.raw();
  r.variant = Variant::Sep;
  r.xi.reset();
  return normalize(r);
}

/// |sum I| < sum |I| = n - 2.
inline bool admits_extension(const TopType& t) {
  if (!t.separating()) throw DomainError("admits_extension needs a separating type");
  const auto s = t.index_sum();
  const auto a = t.abs_index_sum();
  return (s < 0 ? -s : s) < a && a == static_cast<std::int64_t>(t.n()) - 2;
}

struct ExistenceReport {
  bool exists = true;
  std::vector<std::string> violated;
};

namespace detail {

inline bool same_parity(std::int64_t a, std::int64_t b) { return ((a - b) % 2) == 0; }

inline void existence_nonsep(const TopType& t, std::vector<std::string>& out) {
  const std::int64_t n = t.n();
  if (t.k() > t.g()) out.emplace_back("N1: k <= g");
  if (t.index_sum() > n - 2) out.emplace_back("N1: sum(I) <= n - 2");
  if (!same_parity(t.index_sum(), n)) out.emplace_back("N1: sum(I) = n (mod 2)");
}

inline void existence_sep(const TopType& t, std::vector<std::string>& out) {
  const std::int64_t n = t.n();
  const int g = t.g();
  const int k = t.k();
  const auto s = t.index_sum();
  const auto a = t.abs_index_sum();
  if (k < 1 || k > g + 1) out.emplace_back("N2: 1 <= k <= g + 1");
  if (!same_parity(k, g + 1)) out.emplace_back("N2: k = g + 1 (mod 2)");
  if (!same_parity(s, n)) out.emplace_back("N2: sum(I) = n (mod 2)");

  const auto& I = t.indices();
  const bool all_zero = std::all_of(I.begin(), I.end(), [](int i) { return i == 0; });
  const bool clause1 = n == 1 && g == 0 && k == 1 && (I[0] == 1 || I[0] == -1);
  const bool clause2 = n == 2 && k == g + 1 && all_zero;
  const bool clause3 = n >= 2 && (s < 0 ? -s : s) == a && a == n && !t.has_zero_index();
  const bool clause4 = n >= 3 && a <= n - 2;
  if (!(clause1 || clause2 || clause3 || clause4))
    out.emplace_back("N2: one of clauses (1)-(4)");
}

}  // namespace detail

/// Non-emptiness of the space of functions of type `t`, with every failed
/// clause named.
inline ExistenceReport exists(const TopType& t) {
  ExistenceReport r;
  switch (t.variant()) {
    case Variant::NonSep:
      detail::existence_nonsep(t, r.violated);
      break;
    case Variant::Sep:
      detail::existence_sep(t, r.violated);
      break;
    case Variant::SepExt:
      detail::existence_sep(t, r.violated);
      if (!admits_extension(t)) r.violated.emplace_back("N3: type admits extension");
      if (*t.xi() < 0 || *t.xi() > t.xi_bound())
        r.violated.emplace_back("N3: 0 <= xi <= (g - k + 1) / 2");
      break;
  }
  r.exists = r.violated.empty();
  return r;
}

/// Real dimension 2(g + n - 1) of the component and of its compactification.
inline int dimension(const TopType& t) {
  if (!exists(t).exists) throw DomainError("dimension of a non-existent type");
  return 2 * (t.g() + t.n() - 1);
}

// ---------------------------------------------------------------------------
// Text form: <g>,<n>,<eps>|<i1>,<i2>,...[;<xi>]

namespace detail {

class TypeLexer {
 public:
  explicit TypeLexer(std::string_view s) : s_(s) {}

  std::size_t pos() const { return pos_; }
  bool done() const { return pos_ == s_.size(); }
  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::int64_t integer(bool allow_sign) {
    const std::size_t start = pos_;
    bool neg = false;
    if (peek('-')) {
      if (!allow_sign) fail("signed value not allowed here");
      neg = true;
      ++pos_;
    }
    const std::size_t digits = pos_;
    while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') ++pos_;
    if (pos_ == digits) {
      pos_ = digits;
      fail("expected digit");
    }
    if (pos_ - digits > 12) {
      pos_ = start;
      fail("integer too long");
    }
    std::int64_t v = 0;
    std::from_chars(s_.data() + digits, s_.data() + pos_, v);
    return neg ? -v : v;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Syntax-only parse. Range and identification checks happen in normalize().
inline RawType parse_raw_type(std::string_view text) {
  detail::TypeLexer lx(text);
  RawType r;
  r.g = lx.integer(false);
  lx.expect(',');
  r.n = lx.integer(false);
  lx.expect(',');
  if (lx.peek('0')) {
    r.variant = Variant::NonSep;
  } else if (lx.peek('1')) {
    r.variant = Variant::Sep;
  } else {
    lx.fail("eps must be 0 or 1");
  }
  lx.expect(r.variant == Variant::NonSep ? '0' : '1');
  lx.expect('|');
  const bool sep = r.variant == Variant::Sep;
  if (!lx.done() && !lx.peek(';')) {
    r.indices.push_back(lx.integer(sep));
    while (lx.peek(',')) {
      lx.expect(',');
      r.indices.push_back(lx.integer(sep));
    }
  }
  if (lx.peek(';')) {
    if (!sep) lx.fail("xi requires eps=1");
    lx.expect(';');
    r.variant = Variant::SepExt;
    r.xi = lx.integer(true);
  }
  if (!lx.done()) lx.fail("unexpected character");
  return r;
}

inline TopType parse_type(std::string_view text) { return normalize(parse_raw_type(text)); }

inline std::string format_type(const TopType& t) {
  std::string s = std::to_string(t.g()) + "," + std::to_string(t.n()) + "," +
                  (t.separating() ? "1" : "0") + "|";
  for (int j = 0; j < t.k(); ++j) {
    if (j) s += ',';
    s += std::to_string(t.indices()[j]);
  }
  if (t.xi()) s += ";" + std::to_string(*t.xi());
  return s;
}

}  // namespace rmf

#endif  // RMF_TOPOTYPE_HPP
