#include "toricapprox/core.hpp"

#include <numeric>

namespace toric {

std::uint64_t ext_gcd(const ExtVec& values) {
  std::uint64_t g = 0;
  for (const auto& v : values)
    if (!v.is_inf()) g = std::gcd(g, v.value());
  return g;
}

namespace {
template <class V>
std::string join(const V& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    if constexpr (std::is_same_v<V, ExtVec>)
      out += v[i].to_string();
    else
      out += v[i].get_str();
  }
  return out + ")";
}
}  // namespace

std::string to_string(const IntVec& v) { return join(v); }
std::string to_string(const RatVec& v) { return join(v); }
std::string to_string(const ExtVec& v) { return join(v); }

IntVec int_vec(std::initializer_list<long> xs) {
  IntVec out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace toric
