#pragma once

#include <cstddef>
#include <functional>
#include <iterator>
#include <span>
#include <vector>

#include "dirmix/rational.hpp"

namespace dirmix {

/// An ordered tuple (i_1, ..., i_n) of nonnegative integers with sum r.
class Composition {
 public:
  /// Order is taken to be the sum of the parts. Throws ContractViolation on
  /// an empty part list.
  explicit Composition(std::vector<unsigned> parts);
  /// Throws ContractViolation unless the parts are nonempty and sum to order.
  Composition(std::vector<unsigned> parts, unsigned order);

  std::span<const unsigned> parts() const { return parts_; }
  unsigned order() const { return order_; }
  std::size_t size() const { return parts_.size(); }
  unsigned operator[](std::size_t i) const { return parts_[i]; }

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  friend class CompositionRange;
  Composition() = default;

  std::vector<unsigned> parts_;
  unsigned order_ = 0;
};

BigInt binomial(unsigned long n, unsigned long k);

/// r! / (i_1! ... i_n!). Throws ContractViolation if the parts do not sum to r.
BigInt multinomial(unsigned r, std::span<const unsigned> parts);
BigInt multinomial(unsigned r, const Composition& c);

/// Rising factorial x (x+1) ... (x+k-1), i.e. Gamma(x+k)/Gamma(x); 1 for k = 0.
Rational pochhammer(const Rational& x, unsigned k);

BigInt factorial(unsigned long n);

/// Streams every composition of r into n parts. Order: the first coordinate
/// varies slowest and starts at r, so (2,2) yields (2,0), (1,1), (0,2). Only
/// the current composition is held in memory.
class CompositionRange {
 public:
  CompositionRange(unsigned r, std::size_t n);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Composition;
    using difference_type = std::ptrdiff_t;
    using pointer = const Composition*;
    using reference = const Composition&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

   private:
    friend class CompositionRange;
    Composition current_;
    bool done_ = true;
  };

  iterator begin() const;
  std::default_sentinel_t end() const { return {}; }

  /// C(r+n-1, n-1), without enumerating.
  BigInt count() const;

 private:
  unsigned order_;
  std::size_t length_;
};

inline CompositionRange compositions(unsigned r, std::size_t n) { return CompositionRange(r, n); }

/// Calls fn once per partition of r into at most max_parts positive parts,
/// parts in nonincreasing order.
void for_each_partition(unsigned r, std::size_t max_parts,
                        const std::function<void(std::span<const unsigned>)>& fn);

/// Number of distinct orderings of the multiset formed by `parts` padded with
/// zeros to length n: n! / prod(multiplicity!).
BigInt arrangement_count(std::span<const unsigned> parts, std::size_t n);

}  // namespace dirmix
