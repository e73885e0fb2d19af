#pragma once

// Finite formal integer combinations over an ordered basis.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <map>
#include <utility>

namespace arboretum {

using Integer = boost::multiprecision::cpp_int;

template <class Key>
class LinComb {
 public:
  using key_type = Key;
  using container = std::map<Key, Integer>;

  LinComb() = default;
  explicit LinComb(Key k, Integer c = 1) { add(std::move(k), std::move(c)); }

  // Zero coefficients are never stored.
  LinComb& add(const Key& k, const Integer& c) {
    if (c == 0) return *this;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
    return *this;
  }

  Integer coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }
  const container& terms() const noexcept { return terms_; }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  LinComb& operator*=(const Integer& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator-(LinComb a) { return a *= -1; }
  friend LinComb operator*(const Integer& s, LinComb a) { return a *= s; }

  friend bool operator==(const LinComb&, const LinComb&) = default;

  // Applies a linear map given on basis elements.
  template <class F>
  auto map(F&& f) const -> LinComb<typename decltype(f(std::declval<const Key&>()))::key_type> {
    decltype(f(std::declval<const Key&>())) out;
    for (const auto& [k, c] : terms_) {
      auto image = f(k);
      for (const auto& [k2, c2] : image) out.add(k2, c * c2);
    }
    return out;
  }

 private:
  container terms_;
};

// Bilinear extension of a product given on basis pairs.
template <class A, class B, class F>
auto bilinear(const LinComb<A>& x, const LinComb<B>& y, F&& product) {
  decltype(product(std::declval<const A&>(), std::declval<const B&>())) out;
  for (const auto& [ka, ca] : x)
    for (const auto& [kb, cb] : y) {
      auto image = product(ka, kb);
      for (const auto& [k, c] : image) out.add(k, ca * cb * c);
    }
  return out;
}

}  // namespace arboretum
