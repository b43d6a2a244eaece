#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>

namespace osporb {

// A finite formal combination of labels with positive integer
// multiplicities — the output shape of fusion products. Zero-multiplicity
// terms are never stored; iteration follows the label type's canonical
// ordering (its operator<).
template <class Label>
class FormalSum {
 public:
  using const_iterator = typename std::map<Label, long long>::const_iterator;

  FormalSum() = default;

  static FormalSum single(const Label& x) {
    FormalSum s;
    s.add(x, 1);
    return s;
  }

  // Adds m copies of x; the running multiplicity must stay nonnegative.
  void add(const Label& x, long long m = 1) {
    if (m == 0) return;
    const auto [it, inserted] = terms_.try_emplace(x, 0);
    it->second += m;
    if (it->second < 0) {
      terms_.erase(it);
      throw std::logic_error("formal-sum multiplicity went negative");
    }
    if (it->second == 0) terms_.erase(it);
  }

  long long coeff(const Label& x) const {
    const auto it = terms_.find(x);
    return it == terms_.end() ? 0 : it->second;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  long long total_multiplicity() const {
    long long total = 0;
    for (const auto& [x, m] : terms_) total += m;
    return total;
  }

  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }

  friend bool operator==(const FormalSum& a, const FormalSum& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const FormalSum& a, const FormalSum& b) { return !(a == b); }

 private:
  std::map<Label, long long> terms_;
};

// Renders a sum as "x1 + 3*x2" through a per-label formatter; the empty sum
// renders as "0".
template <class Label, class Format>
std::string render_sum(const FormalSum<Label>& sum, Format&& format_one) {
  if (sum.empty()) return "0";
  std::string out;
  for (const auto& [x, m] : sum) {
    if (!out.empty()) out += " + ";
    if (m != 1) {
      out += std::to_string(m);
      out += '*';
    }
    out += format_one(x);
  }
  return out;
}

}  // namespace osporb
