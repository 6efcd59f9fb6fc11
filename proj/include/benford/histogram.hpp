#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <numeric>
#include <span>
#include <vector>

#include "error.hpp"
#include "radix.hpp"

namespace benford {

// Leading-digit counts for one radix. A commutative monoid under merge, with
// the empty histogram as identity, so disjoint chunks can be tallied anywhere
// and combined afterwards.
class DigitHistogram {
public:
  explicit DigitHistogram(Radix radix) : radix_(radix), counts_(radix.digit_slots(), 0) {}

  DigitHistogram(Radix radix, std::vector<std::uint64_t> counts)
      : radix_(radix), counts_(std::move(counts)) {
    if (counts_.size() != radix.digit_slots())
      throw validation_error("histogram needs base-1 counts");
    total_ = std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
  }

  Radix radix() const noexcept { return radix_; }
  std::uint64_t total() const noexcept { return total_; }
  const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }

  std::uint64_t count(std::uint32_t d) const {
    if (d < 1 || d > counts_.size())
      throw validation_error("digit out of range for base " + radix_.to_string());
    return counts_[d - 1];
  }

  void add(const Digit& d) {
    if (d.radix() != radix_)
      throw validation_error("mixed-radix stream: digit of base " + d.radix().to_string() +
                             " tallied into base " + radix_.to_string());
    ++counts_[d.value() - 1];
    ++total_;
  }

  DigitHistogram& merge(const DigitHistogram& o) {
    if (o.radix_ != radix_)
      throw validation_error("cannot merge histograms of base " + radix_.to_string() +
                             " and " + o.radix_.to_string());
    for (std::size_t i = 0; i < counts_.size(); ++i)
      counts_[i] += o.counts_[i];
    total_ += o.total_;
    return *this;
  }

  friend bool operator==(const DigitHistogram&, const DigitHistogram&) = default;

private:
  Radix radix_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

inline DigitHistogram merge(DigitHistogram a, const DigitHistogram& b) {
  a.merge(b);
  return a;
}

template <typename Range>
DigitHistogram tally(const Range& digits, Radix radix) {
  DigitHistogram h(radix);
  for (const Digit& d : digits)
    h.add(d);
  return h;
}

// Tallies disjoint chunks concurrently, then merges them in chunk order.
inline DigitHistogram parallel_tally(std::span<const Digit> digits, Radix radix,
                                     std::size_t workers) {
  workers = std::max<std::size_t>(1, std::min(workers, digits.size()));
  if (workers <= 1)
    return tally(digits, radix);

  const std::size_t chunk = (digits.size() + workers - 1) / workers;
  std::vector<std::future<DigitHistogram>> parts;
  for (std::size_t start = 0; start < digits.size(); start += chunk) {
    auto piece = digits.subspan(start, std::min(chunk, digits.size() - start));
    parts.push_back(std::async(std::launch::async, [piece, radix] { return tally(piece, radix); }));
  }
  DigitHistogram out(radix);
  for (auto& p : parts)
    out.merge(p.get());
  return out;
}

// Observed frequency per digit, index 0 = digit 1.
inline std::vector<double> frequencies(const DigitHistogram& h) {
  if (h.total() == 0)
    throw validation_error("empty histogram");
  std::vector<double> f;
  f.reserve(h.counts().size());
  const double n = static_cast<double>(h.total());
  for (auto c : h.counts())
    f.push_back(static_cast<double>(c) / n);
  return f;
}

} // namespace benford
