#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ratiolab {

// Arbitrary-precision unsigned integer. Little-endian base-2^64 limbs,
// normalized so the highest limb is nonzero (zero has no limbs).
// Quantities in this domain (binomials, r^r, degree counts) are never
// negative, so no sign is carried.
class BigUint {
 public:
  BigUint() = default;
  BigUint(std::uint64_t v) {  // implicit by design: BigUint x = 7 reads well
    if (v) limbs_.push_back(v);
  }

  bool is_zero() const { return limbs_.empty(); }
  bool fits_u64() const { return limbs_.size() <= 1; }
  std::uint64_t to_u64() const {
    assert(fits_u64());
    return limbs_.empty() ? 0 : limbs_[0];
  }

  static int compare(const BigUint& a, const BigUint& b) {
    if (a.limbs_.size() != b.limbs_.size())
      return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;)
      if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    return 0;
  }
  friend bool operator==(const BigUint& a, const BigUint& b) { return a.limbs_ == b.limbs_; }
  friend bool operator!=(const BigUint& a, const BigUint& b) { return !(a == b); }
  friend bool operator<(const BigUint& a, const BigUint& b) { return compare(a, b) < 0; }
  friend bool operator<=(const BigUint& a, const BigUint& b) { return compare(a, b) <= 0; }
  friend bool operator>(const BigUint& a, const BigUint& b) { return compare(a, b) > 0; }
  friend bool operator>=(const BigUint& a, const BigUint& b) { return compare(a, b) >= 0; }

  BigUint& operator+=(const BigUint& rhs) {
    const std::size_t n = std::max(limbs_.size(), rhs.limbs_.size());
    limbs_.resize(n, 0);
    unsigned __int128 carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      unsigned __int128 s = carry + limbs_[i] + (i < rhs.limbs_.size() ? rhs.limbs_[i] : 0);
      limbs_[i] = static_cast<std::uint64_t>(s);
      carry = s >> 64;
    }
    if (carry) limbs_.push_back(static_cast<std::uint64_t>(carry));
    return *this;
  }
  friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }

  // Requires *this >= rhs.
  BigUint& operator-=(const BigUint& rhs) {
    assert(compare(*this, rhs) >= 0 && "BigUint underflow");
    unsigned __int128 borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      unsigned __int128 need = borrow + (i < rhs.limbs_.size() ? rhs.limbs_[i] : 0);
      unsigned __int128 cur = limbs_[i];
      if (cur >= need) {
        limbs_[i] = static_cast<std::uint64_t>(cur - need);
        borrow = 0;
      } else {
        limbs_[i] = static_cast<std::uint64_t>((cur + ((unsigned __int128)1 << 64)) - need);
        borrow = 1;
      }
    }
    assert(borrow == 0);
    normalize();
    return *this;
  }
  friend BigUint operator-(BigUint a, const BigUint& b) { return a -= b; }

  friend BigUint operator*(const BigUint& a, const BigUint& b) {
    if (a.is_zero() || b.is_zero()) return BigUint{};
    BigUint out;
    out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
      unsigned __int128 carry = 0;
      for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
        unsigned __int128 cur =
            (unsigned __int128)a.limbs_[i] * b.limbs_[j] + out.limbs_[i + j] + carry;
        out.limbs_[i + j] = static_cast<std::uint64_t>(cur);
        carry = cur >> 64;
      }
      out.limbs_[i + b.limbs_.size()] = static_cast<std::uint64_t>(carry);
    }
    out.normalize();
    return out;
  }
  BigUint& operator*=(const BigUint& rhs) { return *this = *this * rhs; }

  // Quotient and remainder by a machine word.
  std::pair<BigUint, std::uint64_t> divmod_u64(std::uint64_t d) const {
    assert(d != 0);
    BigUint q;
    q.limbs_.assign(limbs_.size(), 0);
    unsigned __int128 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      unsigned __int128 cur = (rem << 64) | limbs_[i];
      q.limbs_[i] = static_cast<std::uint64_t>(cur / d);
      rem = cur % d;
    }
    q.normalize();
    return {std::move(q), static_cast<std::uint64_t>(rem)};
  }

  // Binary long division. Sizes here stay in the hundreds of bits, so the
  // bit-at-a-time loop is plenty.
  std::pair<BigUint, BigUint> divmod(const BigUint& d) const {
    assert(!d.is_zero());
    if (compare(*this, d) < 0) return {BigUint{}, *this};
    if (d.limbs_.size() == 1) {
      auto [q, r] = divmod_u64(d.limbs_[0]);
      return {std::move(q), BigUint(r)};
    }
    BigUint q, rem;
    for (std::size_t i = bit_length(); i-- > 0;) {
      rem <<= 1;
      if (bit(i)) rem.set_bit(0);
      if (compare(rem, d) >= 0) {
        rem -= d;
        q.set_bit(i);
      }
    }
    return {std::move(q), std::move(rem)};
  }
  friend BigUint operator/(const BigUint& a, const BigUint& b) { return a.divmod(b).first; }
  friend BigUint operator%(const BigUint& a, const BigUint& b) { return a.divmod(b).second; }

  BigUint& operator<<=(unsigned k) {
    if (is_zero() || k == 0) return *this;
    const unsigned words = k / 64, bits = k % 64;
    limbs_.insert(limbs_.begin(), words, 0);
    if (bits) {
      std::uint64_t carry = 0;
      for (std::size_t i = words; i < limbs_.size(); ++i) {
        std::uint64_t cur = limbs_[i];
        limbs_[i] = (cur << bits) | carry;
        carry = cur >> (64 - bits);
      }
      if (carry) limbs_.push_back(carry);
    }
    return *this;
  }
  BigUint& operator>>=(unsigned k) {
    if (is_zero() || k == 0) return *this;
    const unsigned words = k / 64, bits = k % 64;
    if (words >= limbs_.size()) {
      limbs_.clear();
      return *this;
    }
    limbs_.erase(limbs_.begin(), limbs_.begin() + words);
    if (bits) {
      for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t hi = (i + 1 < limbs_.size()) ? limbs_[i + 1] : 0;
        limbs_[i] = (limbs_[i] >> bits) | (hi << (64 - bits));
      }
      normalize();
    }
    return *this;
  }

  std::size_t bit_length() const {
    if (limbs_.empty()) return 0;
    return 64 * (limbs_.size() - 1) + (64 - std::countl_zero(limbs_.back()));
  }
  bool bit(std::size_t i) const {
    const std::size_t w = i / 64;
    return w < limbs_.size() && ((limbs_[w] >> (i % 64)) & 1);
  }
  void set_bit(std::size_t i) {
    const std::size_t w = i / 64;
    if (limbs_.size() <= w) limbs_.resize(w + 1, 0);
    limbs_[w] |= std::uint64_t{1} << (i % 64);
  }
  unsigned trailing_zeros() const {
    assert(!is_zero());
    for (std::size_t i = 0;; ++i)
      if (limbs_[i]) return static_cast<unsigned>(64 * i + std::countr_zero(limbs_[i]));
  }

  static BigUint pow(std::uint64_t base, unsigned exp) {
    BigUint out(1), b(base);
    while (exp) {
      if (exp & 1) out *= b;
      b *= b;
      exp >>= 1;
    }
    return out;
  }

  // Stein's algorithm: only shifts and subtractions.
  static BigUint gcd(BigUint a, BigUint b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const unsigned az = a.trailing_zeros(), bz = b.trailing_zeros();
    const unsigned common = std::min(az, bz);
    a >>= az;
    b >>= bz;
    while (true) {
      if (compare(a, b) > 0) std::swap(a, b);
      b -= a;
      if (b.is_zero()) break;
      b >>= b.trailing_zeros();
    }
    a <<= common;
    return a;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    constexpr std::uint64_t kChunk = 10'000'000'000'000'000'000ull;  // 10^19
    std::vector<std::uint64_t> parts;
    BigUint cur = *this;
    while (!cur.is_zero()) {
      auto [q, r] = cur.divmod_u64(kChunk);
      parts.push_back(r);
      cur = std::move(q);
    }
    std::string out = std::to_string(parts.back());
    for (std::size_t i = parts.size() - 1; i-- > 0;) {
      const std::string digits = std::to_string(parts[i]);
      out.append(19 - digits.size(), '0');
      out += digits;
    }
    return out;
  }

 private:
  void normalize() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  }

  std::vector<std::uint64_t> limbs_;
};

}  // namespace ratiolab
