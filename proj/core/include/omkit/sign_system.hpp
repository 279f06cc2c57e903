#pragma once

#include <cassert>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace omkit {

enum class Sign : int8_t { minus = -1, zero = 0, plus = 1 };

inline Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int8_t>(s)); }
inline char sign_char(Sign s) { return s == Sign::plus ? '+' : (s == Sign::minus ? '-' : '0'); }
inline Sign sign_from_char(char c) {
  switch (c) {
    case '+': return Sign::plus;
    case '-': return Sign::minus;
    case '0': return Sign::zero;
    default: throw std::invalid_argument(std::string("bad sign character '") + c + "'");
  }
}
template <typename T>
Sign sign_of_value(const T& v) {
  if (v > 0) return Sign::plus;
  if (v < 0) return Sign::minus;
  return Sign::zero;
}

// Canonical rank used for lexicographic keys: - < 0 < +.
inline int sign_rank(Sign s) { return static_cast<int8_t>(s) + 1; }

// Ordered finite set of distinct element identifiers. Immutable, shared.
class GroundSet {
 public:
  GroundSet() : data_(std::make_shared<Data>()) {}
  explicit GroundSet(std::vector<std::string> names) {
    auto d = std::make_shared<Data>();
    d->names = std::move(names);
    for (std::size_t i = 0; i < d->names.size(); ++i) {
      auto [it, fresh] = d->index.emplace(d->names[i], i);
      if (!fresh) throw std::invalid_argument("duplicate ground element: " + d->names[i]);
    }
    data_ = std::move(d);
  }

  std::size_t size() const { return data_->names.size(); }
  const std::string& name(std::size_t i) const { return data_->names[i]; }
  const std::vector<std::string>& names() const { return data_->names; }
  std::optional<std::size_t> try_index(const std::string& n) const {
    auto it = data_->index.find(n);
    if (it == data_->index.end()) return std::nullopt;
    return it->second;
  }
  std::size_t index(const std::string& n) const {
    auto i = try_index(n);
    if (!i) throw std::out_of_range("unknown ground element: " + n);
    return *i;
  }
  bool same_as(const GroundSet& o) const {
    return data_ == o.data_ || data_->names == o.data_->names;
  }

 private:
  struct Data {
    std::vector<std::string> names;
    std::unordered_map<std::string, std::size_t> index;
  };
  std::shared_ptr<const Data> data_;
};

// Two bits per element: 00 = zero, 01 = plus, 10 = minus.
namespace packed {

constexpr std::uint64_t kLo = 0x5555555555555555ull;
constexpr std::uint64_t kHi = 0xAAAAAAAAAAAAAAAAull;
constexpr std::size_t kLanes = 32;

inline std::size_t word_count(std::size_t n) { return (n + kLanes - 1) / kLanes; }

inline std::uint64_t occ_marker(std::uint64_t x) { return (x | (x >> 1)) & kLo; }
inline std::uint64_t widen(std::uint64_t marker) { return marker | (marker << 1); }
inline std::uint64_t negate_word(std::uint64_t x) {
  return ((x & kLo) << 1) | ((x & kHi) >> 1);
}
inline std::uint64_t compose_word(std::uint64_t x, std::uint64_t y) {
  return x | (y & ~widen(occ_marker(x)));
}
// Lanes where x and y carry opposite nonzero signs (low-bit marker).
inline std::uint64_t separator_marker(std::uint64_t x, std::uint64_t y) {
  std::uint64_t d = x ^ negate_word(y);
  std::uint64_t equal = ~(d | (d >> 1)) & kLo;
  return equal & occ_marker(x);
}
inline std::uint64_t get_lane(std::span<const std::uint64_t> w, std::size_t i) {
  return (w[i / kLanes] >> (2 * (i % kLanes))) & 3u;
}
inline Sign lane_sign(std::uint64_t lane) {
  return lane == 1 ? Sign::plus : (lane == 2 ? Sign::minus : Sign::zero);
}
inline void set_lane(std::span<std::uint64_t> w, std::size_t i, Sign s) {
  std::uint64_t bits = s == Sign::plus ? 1u : (s == Sign::minus ? 2u : 0u);
  std::uint64_t shift = 2 * (i % kLanes);
  w[i / kLanes] = (w[i / kLanes] & ~(3ull << shift)) | (bits << shift);
}

}  // namespace packed

// A dense total map ground -> {+,0,-}, bit-packed two bits per element.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(GroundSet g)
      : ground_(std::move(g)), w_(packed::word_count(ground_.size()), 0) {}
  SignVector(GroundSet g, const std::string& pattern) : SignVector(std::move(g)) {
    if (pattern.size() != ground_.size())
      throw std::invalid_argument("covector string length " + std::to_string(pattern.size()) +
                                  " does not match ground size " + std::to_string(ground_.size()));
    for (std::size_t i = 0; i < pattern.size(); ++i)
      packed::set_lane(w_, i, sign_from_char(pattern[i]));
  }
  SignVector(GroundSet g, const std::vector<Sign>& signs) : SignVector(std::move(g)) {
    if (signs.size() != ground_.size())
      throw std::invalid_argument("sign sequence does not match ground size");
    for (std::size_t i = 0; i < signs.size(); ++i) packed::set_lane(w_, i, signs[i]);
  }

  const GroundSet& ground() const { return ground_; }
  std::size_t size() const { return ground_.size(); }
  std::span<const std::uint64_t> words() const { return w_; }
  std::span<std::uint64_t> mutable_words() { return w_; }

  Sign at(std::size_t i) const { return packed::lane_sign(packed::get_lane(w_, i)); }
  Sign at(const std::string& name) const { return at(ground_.index(name)); }
  void set(std::size_t i, Sign s) { packed::set_lane(w_, i, s); }

  bool is_zero() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
      if (at(i) != Sign::zero) out.push_back(i);
    return out;
  }
  std::vector<std::size_t> zero_set() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
      if (at(i) == Sign::zero) out.push_back(i);
    return out;
  }
  std::size_t support_size() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::popcount(packed::occ_marker(w));
    return c;
  }

  std::string to_string() const {
    std::string s(size(), '0');
    for (std::size_t i = 0; i < size(); ++i) s[i] = sign_char(at(i));
    return s;
  }

  SignVector negated() const {
    SignVector r = *this;
    for (auto& w : r.w_) w = packed::negate_word(w);
    return r;
  }

  friend bool operator==(const SignVector& a, const SignVector& b) { return a.w_ == b.w_; }

  // Lexicographic canonical key over the (-,0,+) element order.
  friend bool canonical_less(const SignVector& a, const SignVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      int ra = sign_rank(a.at(i)), rb = sign_rank(b.at(i));
      if (ra != rb) return ra < rb;
    }
    return false;
  }

 private:
  GroundSet ground_;
  std::vector<std::uint64_t> w_;
};

inline void require_same_ground(const SignVector& a, const SignVector& b) {
  if (!a.ground().same_as(b.ground()))
    throw std::invalid_argument("sign vectors live on different ground sets");
}

inline SignVector compose(const SignVector& x, const SignVector& y) {
  require_same_ground(x, y);
  SignVector r = x;
  auto rw = r.mutable_words();
  auto yw = y.words();
  for (std::size_t i = 0; i < rw.size(); ++i) rw[i] = packed::compose_word(rw[i], yw[i]);
  return r;
}

inline std::vector<std::size_t> separator(const SignVector& x, const SignVector& y) {
  require_same_ground(x, y);
  std::vector<std::size_t> out;
  auto xw = x.words();
  auto yw = y.words();
  for (std::size_t wi = 0; wi < xw.size(); ++wi) {
    std::uint64_t m = packed::separator_marker(xw[wi], yw[wi]);
    while (m) {
      int b = std::countr_zero(m);
      out.push_back(wi * packed::kLanes + b / 2);
      m &= m - 1;
    }
  }
  return out;
}

inline std::size_t separator_size(const SignVector& x, const SignVector& y) {
  require_same_ground(x, y);
  std::size_t c = 0;
  auto xw = x.words();
  auto yw = y.words();
  for (std::size_t wi = 0; wi < xw.size(); ++wi)
    c += std::popcount(packed::separator_marker(xw[wi], yw[wi]));
  return c;
}

inline SignVector oplus(const SignVector& x, const SignVector& y) {
  require_same_ground(x, y);
  SignVector r(x.ground());
  auto rw = r.mutable_words();
  auto xw = x.words();
  auto yw = y.words();
  for (std::size_t i = 0; i < rw.size(); ++i) {
    std::uint64_t sep = packed::widen(packed::separator_marker(xw[i], yw[i]));
    rw[i] = packed::compose_word(xw[i], yw[i]) & ~sep;
  }
  return r;
}

inline bool natural_leq(const SignVector& x, const SignVector& y) {
  require_same_ground(x, y);
  auto xw = x.words();
  auto yw = y.words();
  for (std::size_t i = 0; i < xw.size(); ++i) {
    std::uint64_t diff = xw[i] ^ yw[i];
    if (packed::occ_marker(xw[i]) & ((diff | (diff >> 1)) & packed::kLo)) return false;
  }
  return true;
}

// A finite, duplicate-free, canonically sorted set of sign vectors on one ground set.
class SignSystem {
 public:
  SignSystem() = default;
  explicit SignSystem(GroundSet g) : ground_(std::move(g)) {}
  SignSystem(GroundSet g, std::vector<SignVector> vectors) : ground_(std::move(g)) {
    for (auto& v : vectors) {
      if (!v.ground().same_as(ground_))
        throw std::invalid_argument("sign system vector on a different ground set");
    }
    vectors_ = std::move(vectors);
    canonicalize();
  }

  const GroundSet& ground() const { return ground_; }
  std::size_t size() const { return vectors_.size(); }
  bool empty() const { return vectors_.empty(); }
  const SignVector& operator[](std::size_t i) const { return vectors_[i]; }
  const std::vector<SignVector>& vectors() const { return vectors_; }
  auto begin() const { return vectors_.begin(); }
  auto end() const { return vectors_.end(); }

  bool contains(const SignVector& v) const { return index_of(v).has_value(); }
  std::optional<std::size_t> index_of(const SignVector& v) const {
    auto it = std::lower_bound(vectors_.begin(), vectors_.end(), v,
                               [](const SignVector& a, const SignVector& b) {
                                 return canonical_less(a, b);
                               });
    if (it != vectors_.end() && *it == v) return std::size_t(it - vectors_.begin());
    return std::nullopt;
  }

 private:
  void canonicalize() {
    std::sort(vectors_.begin(), vectors_.end(),
              [](const SignVector& a, const SignVector& b) { return canonical_less(a, b); });
    vectors_.erase(std::unique(vectors_.begin(), vectors_.end()), vectors_.end());
  }
  GroundSet ground_;
  std::vector<SignVector> vectors_;
};

// Reorientation by a total sign map tau in {+1,-1}^E.
SignVector reorient(const SignVector& x, const std::vector<int>& tau);
SignSystem reorient(const SignSystem& s, const std::vector<int>& tau);

// Full system {+,0,-}^E (useful for tests and small constructions).
SignSystem full_system(const GroundSet& g);

}  // namespace omkit
