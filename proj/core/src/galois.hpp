#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mcw::gf {

// GF(p^m) with elements indexed by base-p digit strings: index = sum c_i p^i.
class GaloisField {
 public:
  GaloisField(std::uint64_t p, int m) : p_(p), m_(m) {
    if (m < 1) throw std::invalid_argument("field degree must be positive");
    size_ = 1;
    for (int i = 0; i < m; ++i) size_ *= p;
    irreducible_ = find_irreducible();
  }

  std::uint64_t p() const { return p_; }
  int m() const { return m_; }
  std::uint64_t size() const { return size_; }

  int add(int a, int b) const {
    std::vector<int> da = digits(a), db = digits(b);
    for (int i = 0; i < m_; ++i) da[static_cast<std::size_t>(i)] = (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % static_cast<int>(p_);
    return index(da);
  }

  int mul(int a, int b) const {
    std::vector<int> prod(static_cast<std::size_t>(2 * m_ - 1), 0);
    std::vector<int> da = digits(a), db = digits(b);
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j)
        prod[static_cast<std::size_t>(i + j)] =
            (prod[static_cast<std::size_t>(i + j)] + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % static_cast<int>(p_);
    reduce(prod);
    prod.resize(static_cast<std::size_t>(m_));
    return index(prod);
  }

  // Least element generating the multiplicative group.
  int primitive_root() const {
    for (int a = 1; a < static_cast<int>(size_); ++a) {
      std::uint64_t ord = 1;
      int x = a;
      while (x != 1) {
        x = mul(x, a);
        ++ord;
      }
      if (ord == size_ - 1) return a;
    }
    throw std::logic_error("no primitive root found");
  }

  int basis_element(int i) const {
    std::vector<int> d(static_cast<std::size_t>(m_), 0);
    d[static_cast<std::size_t>(i)] = 1;
    return index(d);
  }

 private:
  std::vector<int> digits(int a) const {
    std::vector<int> d(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i) {
      d[static_cast<std::size_t>(i)] = a % static_cast<int>(p_);
      a /= static_cast<int>(p_);
    }
    return d;
  }

  int index(const std::vector<int>& d) const {
    int out = 0;
    for (int i = m_ - 1; i >= 0; --i) out = out * static_cast<int>(p_) + d[static_cast<std::size_t>(i)];
    return out;
  }

  // Remainder of prod modulo the monic irreducible, in place.
  void reduce(std::vector<int>& prod) const {
    for (int deg = static_cast<int>(prod.size()) - 1; deg >= m_; --deg) {
      int c = prod[static_cast<std::size_t>(deg)];
      if (c == 0) continue;
      prod[static_cast<std::size_t>(deg)] = 0;
      for (int i = 0; i < m_; ++i) {
        int& slot = prod[static_cast<std::size_t>(deg - m_ + i)];
        slot = ((slot - c * irreducible_[static_cast<std::size_t>(i)]) % static_cast<int>(p_) + static_cast<int>(p_)) % static_cast<int>(p_);
      }
    }
  }

  // Multiply two coefficient vectors modulo p, no reduction.
  static std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
    std::vector<int> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    return out;
  }

  // Lexicographically first monic irreducible of degree m: lower coefficients
  // counted up in base p, irreducibility by exhausting factor pairs.
  std::vector<int> find_irreducible() const {
    const int p = static_cast<int>(p_);
    std::vector<std::vector<std::vector<int>>> monic_by_degree(static_cast<std::size_t>(m_));
    for (int d = 1; d < m_; ++d) {
      std::uint64_t count = 1;
      for (int i = 0; i < d; ++i) count *= p_;
      for (std::uint64_t c = 0; c < count; ++c) {
        std::vector<int> poly(static_cast<std::size_t>(d + 1), 0);
        std::uint64_t rest = c;
        for (int i = 0; i < d; ++i) {
          poly[static_cast<std::size_t>(i)] = static_cast<int>(rest % p_);
          rest /= p_;
        }
        poly[static_cast<std::size_t>(d)] = 1;
        monic_by_degree[static_cast<std::size_t>(d)].push_back(std::move(poly));
      }
    }
    std::uint64_t count = 1;
    for (int i = 0; i < m_; ++i) count *= p_;
    for (std::uint64_t c = 0; c < count; ++c) {
      std::vector<int> cand(static_cast<std::size_t>(m_ + 1), 0);
      std::uint64_t rest = c;
      for (int i = 0; i < m_; ++i) {
        cand[static_cast<std::size_t>(i)] = static_cast<int>(rest % p_);
        rest /= p_;
      }
      cand[static_cast<std::size_t>(m_)] = 1;
      bool reducible = false;
      for (int d = 1; !reducible && 2 * d <= m_; ++d) {
        for (const auto& f : monic_by_degree[static_cast<std::size_t>(d)]) {
          for (const auto& g : monic_by_degree[static_cast<std::size_t>(m_ - d)]) {
            if (poly_mul(f, g, p) == cand) {
              reducible = true;
              break;
            }
          }
          if (reducible) break;
        }
      }
      if (!reducible) {
        cand.resize(static_cast<std::size_t>(m_));
        return cand;  // low coefficients only; leading 1 implicit
      }
    }
    throw std::logic_error("no irreducible polynomial found");
  }

  std::uint64_t p_;
  int m_;
  std::uint64_t size_;
  std::vector<int> irreducible_;  // coefficients of x^0..x^{m-1}; monic
};

}  // namespace mcw::gf
