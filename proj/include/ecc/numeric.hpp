#pragma once

// Exact scalar types and the machine-integer fast path used by the
// fraction-free kernels.

#include <gmpxx.h>

#include <cmath>
#include <concepts>
#include <cstdint>
#include <string>
#include <type_traits>

namespace ecc {

using BigInt = mpz_class;
using Rational = mpq_class;
using Int128 = __int128;

template <typename T>
concept ExactInteger = std::same_as<T, std::int64_t> || std::same_as<T, Int128> ||
                       std::same_as<T, BigInt>;

inline BigInt to_bigint(Int128 v) {
  const bool neg = v < 0;
  // Work on the magnitude as unsigned to cover INT128_MIN.
  unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  const auto hi = static_cast<std::uint64_t>(mag >> 64);
  const auto lo = static_cast<std::uint64_t>(mag);
  BigInt r = hi;
  r <<= 64;
  r += BigInt(static_cast<unsigned long>(lo));
  return neg ? BigInt(-r) : r;
}

inline BigInt to_bigint(std::int64_t v) { return BigInt(static_cast<long>(v)); }
inline BigInt to_bigint(const BigInt& v) { return v; }

template <ExactInteger T>
T from_bigint(const BigInt& v) {
  if constexpr (std::same_as<T, BigInt>) {
    return v;
  } else {
    // Callers only narrow after a magnitude bound certified the fit.
    return static_cast<T>(v.get_si());
  }
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

/// Scalar width able to hold every intermediate of a computation whose
/// magnitudes stay below 2^bits.
enum class Width { Int64, Int128, Big };

inline Width width_for_bits(double bits) {
  if (bits < 62.0) return Width::Int64;
  if (bits < 125.0) return Width::Int128;
  return Width::Big;
}

/// Dispatches `f` with a default-constructed tag of the chosen scalar type.
template <typename F>
decltype(auto) with_width(Width w, F&& f) {
  switch (w) {
    case Width::Int64:
      return f(std::int64_t{});
    case Width::Int128:
      return f(Int128{});
    default:
      return f(BigInt{});
  }
}

inline double log2_abs(const BigInt& v) {
  if (v == 0) return 0.0;
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log2(std::fabs(mant)) + static_cast<double>(exp);
}

}  // namespace ecc
