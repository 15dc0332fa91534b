#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "sspec/errors.hpp"

namespace sspec {

/// Default cap on ring size; keeps O(n^3) validation and ideal enumeration fast.
inline constexpr int kDefaultSizeCap = 64;
/// Default cap on the source size of a morphism enumeration.
inline constexpr int kDefaultMorphismCap = 16;

/**
 * A finite commutative ring with identity, given by explicit operation
 * tables.  Elements are the indices 0..size-1; index 0 is the additive
 * zero by convention.  Values are immutable after construction and every
 * operation on them is pure.
 */
struct FiniteRing {
  int size = 0;
  int one = 0;
  std::vector<int> add_table;  // size*size, row-major
  std::vector<int> mul_table;  // size*size, row-major
  std::vector<int> neg_table;  // additive inverse of each element
  std::string name;

  int add(int a, int b) const { return add_table[static_cast<size_t>(a) * size + b]; }
  int mul(int a, int b) const { return mul_table[static_cast<size_t>(a) * size + b]; }
  int neg(int a) const { return neg_table[a]; }

  /// a^k for k >= 1.
  int pow(int a, int k) const {
    int r = a;
    for (int i = 1; i < k; ++i) r = mul(r, a);
    return r;
  }

  bool in_range(int a) const { return a >= 0 && a < size; }
};

namespace detail {

inline std::string witness3(int a, int b, int c) {
  std::ostringstream os;
  os << "witness (" << a << "," << b << "," << c << ")";
  return os.str();
}

/// Fills neg_table from add_table; throws if some element has no inverse.
inline void fill_negatives(FiniteRing& r) {
  r.neg_table.assign(r.size, -1);
  for (int a = 0; a < r.size; ++a) {
    for (int b = 0; b < r.size; ++b) {
      if (r.add(a, b) == 0) {
        r.neg_table[a] = b;
        break;
      }
    }
    if (r.neg_table[a] < 0) {
      throw validation_error("additive inverse missing: witness (" + std::to_string(a) +
                             ")");
    }
  }
}

}  // namespace detail

/**
 * Exhaustive axiom check of a ring's tables.  Throws validation_error
 * naming the violated axiom and a witness triple.  Every constructor runs
 * this on its output, so any FiniteRing in circulation is a genuine
 * commutative ring with 1 != 0.
 */
inline void validate_ring(const FiniteRing& r) {
  const int n = r.size;
  if (n < 2) throw validation_error("ring must have at least 2 elements");
  if (r.one == 0) throw validation_error("zero != one violated: one is index 0");
  if (r.one < 0 || r.one >= n) throw validation_error("one out of range");
  if (static_cast<int>(r.add_table.size()) != n * n ||
      static_cast<int>(r.mul_table.size()) != n * n) {
    throw validation_error("tables are not n x n");
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!r.in_range(r.add(a, b)) || !r.in_range(r.mul(a, b))) {
        throw validation_error("table entry out of range: " + detail::witness3(a, b, 0));
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    if (r.add(a, 0) != a) {
      throw validation_error("additive identity violated: " + detail::witness3(a, 0, 0));
    }
    if (r.mul(a, r.one) != a) {
      throw validation_error("multiplicative identity violated: " +
                             detail::witness3(a, r.one, 0));
    }
  }
  for (int a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (int b = 0; b < n; ++b) {
      if (r.add(a, b) == 0) has_inverse = true;
      if (r.add(a, b) != r.add(b, a)) {
        throw validation_error("addition not commutative: " + detail::witness3(a, b, 0));
      }
      if (r.mul(a, b) != r.mul(b, a)) {
        throw validation_error("multiplication not commutative: " +
                               detail::witness3(a, b, 0));
      }
    }
    if (!has_inverse) {
      throw validation_error("additive inverse missing: witness (" + std::to_string(a) +
                             ")");
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) {
          throw validation_error("addition not associative: " + detail::witness3(a, b, c));
        }
        if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) {
          throw validation_error("multiplication not associative: " +
                                 detail::witness3(a, b, c));
        }
        if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) {
          throw validation_error("distributivity violated: " + detail::witness3(a, b, c));
        }
      }
    }
  }
}

/// Builds a validated ring from explicit n x n tables.
inline FiniteRing make_table(int n, const std::vector<std::vector<int>>& add,
                             const std::vector<std::vector<int>>& mul, int one) {
  if (n < 2) throw invalid_parameter_error("ring size must be >= 2");
  if (static_cast<int>(add.size()) != n || static_cast<int>(mul.size()) != n) {
    throw invalid_parameter_error("tables must have n rows");
  }
  FiniteRing r;
  r.size = n;
  r.one = one;
  r.add_table.reserve(static_cast<size_t>(n) * n);
  r.mul_table.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(add[i].size()) != n || static_cast<int>(mul[i].size()) != n) {
      throw invalid_parameter_error("tables must have n columns in every row");
    }
    for (int j = 0; j < n; ++j) {
      if (add[i][j] < 0 || add[i][j] >= n || mul[i][j] < 0 || mul[i][j] >= n) {
        throw invalid_parameter_error("table entries must lie in 0..n-1");
      }
      r.add_table.push_back(add[i][j]);
      r.mul_table.push_back(mul[i][j]);
    }
  }
  r.name = "table ring (" + std::to_string(n) + " elements)";
  validate_ring(r);
  detail::fill_negatives(r);
  return r;
}

/// Z/nZ with elements 0..n-1, one = 1.
inline FiniteRing make_zn(int n) {
  if (n < 2) throw invalid_parameter_error("make_zn requires n >= 2");
  FiniteRing r;
  r.size = n;
  r.one = 1;
  r.add_table.resize(static_cast<size_t>(n) * n);
  r.mul_table.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      r.add_table[static_cast<size_t>(a) * n + b] = (a + b) % n;
      r.mul_table[static_cast<size_t>(a) * n + b] = (a * b) % n;
    }
  }
  r.name = "Z/" + std::to_string(n);
  validate_ring(r);
  detail::fill_negatives(r);
  return r;
}

/// Mixed-radix decode of a product-ring index; factor 0 is most significant.
inline std::vector<int> product_decode(const std::vector<int>& sizes, int index) {
  std::vector<int> tuple(sizes.size());
  for (size_t k = sizes.size(); k-- > 0;) {
    tuple[k] = index % sizes[k];
    index /= sizes[k];
  }
  return tuple;
}

inline int product_encode(const std::vector<int>& sizes, const std::vector<int>& tuple) {
  int index = 0;
  for (size_t k = 0; k < sizes.size(); ++k) index = index * sizes[k] + tuple[k];
  return index;
}

/// Componentwise product ring of the given factors.
inline FiniteRing make_product(const std::vector<FiniteRing>& factors,
                               int size_cap = kDefaultSizeCap) {
  if (factors.empty()) throw invalid_parameter_error("make_product requires a factor");
  long long total = 1;
  std::vector<int> sizes;
  sizes.reserve(factors.size());
  for (const auto& f : factors) {
    sizes.push_back(f.size);
    total *= f.size;
    if (total > size_cap) {
      throw capacity_error("product ring would have " + std::to_string(total) +
                           " elements, cap is " + std::to_string(size_cap));
    }
  }
  const int n = static_cast<int>(total);
  FiniteRing r;
  r.size = n;
  r.add_table.resize(static_cast<size_t>(n) * n);
  r.mul_table.resize(static_cast<size_t>(n) * n);
  std::vector<int> ones(factors.size());
  for (size_t k = 0; k < factors.size(); ++k) ones[k] = factors[k].one;
  r.one = product_encode(sizes, ones);
  for (int a = 0; a < n; ++a) {
    const auto ta = product_decode(sizes, a);
    for (int b = 0; b < n; ++b) {
      const auto tb = product_decode(sizes, b);
      std::vector<int> sum(factors.size()), prod(factors.size());
      for (size_t k = 0; k < factors.size(); ++k) {
        sum[k] = factors[k].add(ta[k], tb[k]);
        prod[k] = factors[k].mul(ta[k], tb[k]);
      }
      r.add_table[static_cast<size_t>(a) * n + b] = product_encode(sizes, sum);
      r.mul_table[static_cast<size_t>(a) * n + b] = product_encode(sizes, prod);
    }
  }
  std::string name;
  for (size_t k = 0; k < factors.size(); ++k) {
    if (k) name += " x ";
    name += factors[k].name.empty() ? "?" : factors[k].name;
  }
  r.name = name;
  validate_ring(r);
  detail::fill_negatives(r);
  return r;
}

/// Base-m decode of a polynomial-quotient index; constant term least significant.
inline std::vector<int> poly_decode(int modulus, int degree, int index) {
  std::vector<int> coeffs(degree);
  for (int k = 0; k < degree; ++k) {
    coeffs[k] = index % modulus;
    index /= modulus;
  }
  return coeffs;
}

inline int poly_encode(int modulus, const std::vector<int>& coeffs) {
  int index = 0;
  for (size_t k = coeffs.size(); k-- > 0;) index = index * modulus + coeffs[k];
  return index;
}

/**
 * (Z/m)[x]/(f) for a monic f of degree >= 1 given as a low-to-high
 * coefficient list.  Element index encodes the coefficient vector in base
 * m with the constant term least significant.
 */
inline FiniteRing make_poly_quotient(int modulus, const std::vector<int>& poly,
                                     int size_cap = kDefaultSizeCap) {
  if (modulus < 2) throw invalid_parameter_error("modulus must be >= 2");
  if (poly.size() < 2) throw invalid_parameter_error("polynomial must have degree >= 1");
  const int degree = static_cast<int>(poly.size()) - 1;
  if (poly.back() != 1) {
    throw invalid_parameter_error("polynomial must be monic (leading coefficient 1)");
  }
  for (int c : poly) {
    if (c < 0 || c >= modulus) {
      throw invalid_parameter_error("polynomial coefficients must lie in 0..m-1");
    }
  }
  long long total = 1;
  for (int k = 0; k < degree; ++k) {
    total *= modulus;
    if (total > size_cap) {
      throw capacity_error("quotient ring would have " + std::to_string(total) +
                           "+ elements, cap is " + std::to_string(size_cap));
    }
  }
  const int n = static_cast<int>(total);

  // x^degree = -(poly[0] + poly[1] x + ... + poly[degree-1] x^(degree-1))
  auto reduce = [&](std::vector<int> c) {
    for (int k = static_cast<int>(c.size()) - 1; k >= degree; --k) {
      int lead = c[k];
      if (lead == 0) continue;
      c[k] = 0;
      for (int j = 0; j < degree; ++j) {
        int v = c[k - degree + j] - lead * poly[j];
        v %= modulus;
        if (v < 0) v += modulus;
        c[k - degree + j] = v;
      }
    }
    c.resize(degree);
    return c;
  };

  FiniteRing r;
  r.size = n;
  r.add_table.resize(static_cast<size_t>(n) * n);
  r.mul_table.resize(static_cast<size_t>(n) * n);
  std::vector<int> one_vec(degree, 0);
  one_vec[0] = 1;
  r.one = poly_encode(modulus, one_vec);
  for (int a = 0; a < n; ++a) {
    const auto ca = poly_decode(modulus, degree, a);
    for (int b = 0; b < n; ++b) {
      const auto cb = poly_decode(modulus, degree, b);
      std::vector<int> sum(degree);
      for (int k = 0; k < degree; ++k) sum[k] = (ca[k] + cb[k]) % modulus;
      std::vector<int> prod(2 * degree - 1, 0);
      for (int i = 0; i < degree; ++i) {
        for (int j = 0; j < degree; ++j) {
          prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % modulus;
        }
      }
      r.add_table[static_cast<size_t>(a) * n + b] = poly_encode(modulus, sum);
      r.mul_table[static_cast<size_t>(a) * n + b] = poly_encode(modulus, reduce(prod));
    }
  }
  std::ostringstream name;
  name << "(Z/" << modulus << ")[x]/(";
  bool first = true;
  for (int k = degree; k >= 0; --k) {
    if (poly[k] == 0) continue;
    if (!first) name << "+";
    if (k == 0 || poly[k] != 1) name << poly[k];
    if (k == 1) name << "x";
    if (k > 1) name << "x^" << k;
    first = false;
  }
  name << ")";
  r.name = name.str();
  validate_ring(r);
  detail::fill_negatives(r);
  return r;
}

/// The set of units u(R): all a with a*b = 1 for some b.
inline std::vector<int> units(const FiniteRing& r) {
  std::vector<int> out;
  for (int a = 0; a < r.size; ++a) {
    for (int b = 0; b < r.size; ++b) {
      if (r.mul(a, b) == r.one) {
        out.push_back(a);
        break;
      }
    }
  }
  return out;
}

/**
 * A unital ring morphism between two finite rings, as the full image array
 * over source indices.
 */
struct RingMorphism {
  const FiniteRing* source = nullptr;
  const FiniteRing* target = nullptr;
  std::vector<int> map;

  int operator()(int a) const { return map[a]; }
};

/// Checks unitality and both homomorphism laws; throws validation_error.
inline void validate_morphism(const RingMorphism& phi) {
  const FiniteRing& src = *phi.source;
  const FiniteRing& dst = *phi.target;
  if (static_cast<int>(phi.map.size()) != src.size) {
    throw validation_error("morphism map has wrong length");
  }
  for (int v : phi.map) {
    if (!dst.in_range(v)) throw validation_error("morphism image out of range");
  }
  if (phi.map[src.one] != dst.one) {
    throw validation_error("morphism does not send one to one");
  }
  for (int a = 0; a < src.size; ++a) {
    for (int b = 0; b < src.size; ++b) {
      if (phi.map[src.add(a, b)] != dst.add(phi.map[a], phi.map[b])) {
        throw validation_error("morphism not additive: " + detail::witness3(a, b, 0));
      }
      if (phi.map[src.mul(a, b)] != dst.mul(phi.map[a], phi.map[b])) {
        throw validation_error("morphism not multiplicative: " +
                               detail::witness3(a, b, 0));
      }
    }
  }
}

namespace detail {

/**
 * Forces every value implied by the partial assignment: whenever both
 * operands of a sum or product are assigned, the result is assigned too.
 * Returns false on contradiction.
 */
inline bool propagate_morphism(const FiniteRing& src, const FiniteRing& dst,
                               std::vector<int>& map) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < src.size; ++a) {
      if (map[a] < 0) continue;
      for (int b = 0; b <= a; ++b) {
        if (map[b] < 0) continue;
        int s = src.add(a, b), vs = dst.add(map[a], map[b]);
        if (map[s] < 0) {
          map[s] = vs;
          changed = true;
        } else if (map[s] != vs) {
          return false;
        }
        int p = src.mul(a, b), vp = dst.mul(map[a], map[b]);
        if (map[p] < 0) {
          map[p] = vp;
          changed = true;
        } else if (map[p] != vp) {
          return false;
        }
      }
    }
  }
  return true;
}

inline void search_morphisms(const FiniteRing& src, const FiniteRing& dst,
                             std::vector<int> map, std::vector<std::vector<int>>& out) {
  int next = -1;
  for (int a = 0; a < src.size; ++a) {
    if (map[a] < 0) {
      next = a;
      break;
    }
  }
  if (next < 0) {
    out.push_back(std::move(map));
    return;
  }
  for (int v = 0; v < dst.size; ++v) {
    std::vector<int> trial = map;
    trial[next] = v;
    if (propagate_morphism(src, dst, trial)) {
      search_morphisms(src, dst, std::move(trial), out);
    }
  }
}

}  // namespace detail

/**
 * All unital ring morphisms source -> target, in lexicographic order of
 * their map arrays.  Backtracking over generator images: assigning one
 * element forces the whole subring it generates, so the branching factor
 * is the number of genuinely free generators.
 */
inline std::vector<RingMorphism> enumerate_morphisms(const FiniteRing& source,
                                                     const FiniteRing& target,
                                                     int cap = kDefaultMorphismCap) {
  if (source.size > cap) {
    throw capacity_error("morphism search source has " + std::to_string(source.size) +
                         " elements, cap is " + std::to_string(cap));
  }
  std::vector<int> map(source.size, -1);
  map[0] = 0;
  map[source.one] = target.one;
  std::vector<std::vector<int>> found;
  if (detail::propagate_morphism(source, target, map)) {
    detail::search_morphisms(source, target, std::move(map), found);
  }
  std::sort(found.begin(), found.end());
  std::vector<RingMorphism> out;
  out.reserve(found.size());
  for (auto& m : found) {
    RingMorphism phi{&source, &target, std::move(m)};
    validate_morphism(phi);
    out.push_back(std::move(phi));
  }
  return out;
}

/// g o f; requires f.target == g.source.
inline RingMorphism compose(const RingMorphism& g, const RingMorphism& f) {
  if (f.target != g.source) {
    throw invalid_parameter_error("compose: inner target differs from outer source");
  }
  RingMorphism out{f.source, g.target, {}};
  out.map.reserve(f.map.size());
  for (int v : f.map) out.map.push_back(g.map[v]);
  return out;
}

}  // namespace sspec
