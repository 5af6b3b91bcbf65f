#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace kmlat {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// The Weyl-group engine runs on machine integers as long as they provably do
// not overflow, and restarts on exact big integers otherwise.  Overflow is an
// internal signal, never a user-visible error.
struct EngineOverflow {};

template <class C>
struct Arith {
  static C add(const C& a, const C& b) { return a + b; }
  static C sub(const C& a, const C& b) { return a - b; }
  static C mul(const C& a, const C& b) { return a * b; }
};

template <>
struct Arith<std::int64_t> {
  static std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw EngineOverflow{};
    return r;
  }
  static std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw EngineOverflow{};
    return r;
  }
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw EngineOverflow{};
    return r;
  }
};

Int det_bareiss(std::vector<std::vector<Int>> m);

// Floor of the k-th root of a non-negative integer.
Int iroot_floor(const Int& x, unsigned k);

std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

}  // namespace kmlat
