#include "dirmix/combinatorics.hpp"

#include <numeric>
#include <string>

#include "dirmix/errors.hpp"

namespace dirmix {

namespace {

unsigned sum_parts(std::span<const unsigned> parts) {
  return std::accumulate(parts.begin(), parts.end(), 0u);
}

}  // namespace

Composition::Composition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw ContractViolation("composition must have at least one part");
  order_ = sum_parts(parts_);
}

Composition::Composition(std::vector<unsigned> parts, unsigned order)
    : parts_(std::move(parts)), order_(order) {
  if (parts_.empty()) throw ContractViolation("composition must have at least one part");
  if (sum_parts(parts_) != order_) {
    throw ContractViolation("composition parts sum to " + std::to_string(sum_parts(parts_)) +
                            ", expected " + std::to_string(order_));
  }
}

BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt multinomial(unsigned r, std::span<const unsigned> parts) {
  if (sum_parts(parts) != r) {
    throw ContractViolation("multinomial: parts sum to " + std::to_string(sum_parts(parts)) +
                            ", expected " + std::to_string(r));
  }
  // Product of binomials C(i_1, i_1) C(i_1+i_2, i_2) ... avoids the big
  // factorial division.
  BigInt result = 1;
  unsigned running = 0;
  for (unsigned p : parts) {
    running += p;
    result *= binomial(running, p);
  }
  return result;
}

BigInt multinomial(unsigned r, const Composition& c) { return multinomial(r, c.parts()); }

Rational pochhammer(const Rational& x, unsigned k) {
  Rational result = 1;
  Rational term = x;
  for (unsigned i = 0; i < k; ++i) {
    result *= term;
    if (result.is_zero()) break;
    term += 1;
  }
  return result;
}

CompositionRange::CompositionRange(unsigned r, std::size_t n) : order_(r), length_(n) {
  if (n == 0) throw ContractViolation("compositions need at least one part");
}

CompositionRange::iterator CompositionRange::begin() const {
  iterator it;
  it.current_.parts_.assign(length_, 0);
  it.current_.parts_[0] = order_;
  it.current_.order_ = order_;
  it.done_ = false;
  return it;
}

CompositionRange::iterator& CompositionRange::iterator::operator++() {
  auto& c = current_.parts_;
  const std::size_t n = c.size();
  // Rightmost position before the last with a positive entry.
  std::size_t i = n - 1;
  while (i > 0 && c[i - 1] == 0) --i;
  if (i == 0) {
    done_ = true;
    return *this;
  }
  --i;
  unsigned tail = 0;
  for (std::size_t j = i + 1; j < n; ++j) {
    tail += c[j];
    c[j] = 0;
  }
  --c[i];
  c[i + 1] = tail + 1;
  return *this;
}

BigInt CompositionRange::count() const { return binomial(order_ + length_ - 1, length_ - 1); }

namespace {

void partitions_rec(unsigned remaining, unsigned max_part, std::size_t slots,
                    std::vector<unsigned>& prefix,
                    const std::function<void(std::span<const unsigned>)>& fn) {
  if (remaining == 0) {
    fn(prefix);
    return;
  }
  if (slots == 0) return;
  for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
    // Prune: the remaining slots cannot absorb more than slots * p.
    if (static_cast<unsigned long>(p) * slots < remaining) break;
    prefix.push_back(p);
    partitions_rec(remaining - p, p, slots - 1, prefix, fn);
    prefix.pop_back();
  }
}

}  // namespace

void for_each_partition(unsigned r, std::size_t max_parts,
                        const std::function<void(std::span<const unsigned>)>& fn) {
  std::vector<unsigned> prefix;
  prefix.reserve(max_parts);
  partitions_rec(r, r, max_parts, prefix, fn);
}

BigInt arrangement_count(std::span<const unsigned> parts, std::size_t n) {
  if (parts.size() > n) return 0;
  BigInt result = factorial(n);
  result /= factorial(n - parts.size());  // zero padding
  std::size_t run = 1;
  for (std::size_t i = 1; i <= parts.size(); ++i) {
    if (i < parts.size() && parts[i] == parts[i - 1]) {
      ++run;
    } else {
      result /= factorial(run);
      run = 1;
    }
  }
  return result;
}

}  // namespace dirmix
