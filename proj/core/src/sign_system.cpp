#include "omkit/sign_system.hpp"

#include <algorithm>
#include <bit>

namespace omkit {

SignVector reorient(const SignVector& x, const std::vector<int>& tau) {
  if (tau.size() != x.size())
    throw std::invalid_argument("reorientation map is not total on the ground set");
  SignVector r = x;
  for (std::size_t i = 0; i < tau.size(); ++i) {
    if (tau[i] == -1) {
      r.set(i, -x.at(i));
    } else if (tau[i] != 1) {
      throw std::invalid_argument("reorientation entries must be +1 or -1");
    }
  }
  return r;
}

SignSystem reorient(const SignSystem& s, const std::vector<int>& tau) {
  std::vector<SignVector> out;
  out.reserve(s.size());
  for (const auto& v : s) out.push_back(reorient(v, tau));
  return SignSystem(s.ground(), std::move(out));
}

SignSystem full_system(const GroundSet& g) {
  std::size_t n = g.size();
  if (n > 20) throw std::invalid_argument("full_system: ground set too large");
  std::vector<SignVector> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  out.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    SignVector v(g);
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      int d = c % 3;
      c /= 3;
      v.set(i, d == 0 ? Sign::zero : (d == 1 ? Sign::plus : Sign::minus));
    }
    out.push_back(std::move(v));
  }
  return SignSystem(g, std::move(out));
}

}  // namespace omkit
