#ifndef ZTOP_COMMON_HPP
#define ZTOP_COMMON_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ztop {

// Subsets of the face set [m] as bitmasks; m <= 64 throughout.
using Mask = std::uint64_t;

inline int popcount(Mask w) { return std::popcount(w); }
inline Mask bit(int i) { return Mask{1} << i; }
inline bool has_bit(Mask w, int i) { return (w >> i) & 1; }
inline Mask full_mask(int m) { return m == 64 ? ~Mask{0} : (Mask{1} << m) - 1; }

// Iterate set bits low to high.
template <class F>
inline void for_bits(Mask w, F&& f) {
  while (w) {
    int i = std::countr_zero(w);
    f(i);
    w &= w - 1;
  }
}

inline std::vector<int> mask_to_vec(Mask w) {
  std::vector<int> v;
  for_bits(w, [&](int i) { v.push_back(i); });
  return v;
}

inline Mask vec_to_mask(const std::vector<int>& v) {
  Mask w = 0;
  for (int i : v) w |= bit(i);
  return w;
}

// Error model: every failure carries a short machine-readable name that the
// CLI surfaces verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class BoundError : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace ztop

#endif
