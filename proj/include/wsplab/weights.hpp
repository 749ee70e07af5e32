#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wsp {

// Norm weights w(n) > 0 for the diagonal norm sum |a_n|^2 w(n).
//
//   power_law(a)        w(n) = (n+1)^a
//   shifted(inner, k)   w(n) = inner(n+k)
//   explicit(head, t)   w(n) = head[n] for n < head.size(), else t(n)
//   scaled(inner, c)    w(n) = c * inner(n)
//
// The tail of an explicit sequence is evaluated at the absolute index, so
// explicit({c}, power_law(a)) only replaces w(0).
class WeightSequence {
 public:
  enum class Kind { power_law, shifted, explicit_head, scaled };

  static WeightSequence power_law(double alpha);
  static WeightSequence shifted(WeightSequence inner, int offset);
  static WeightSequence explicit_head(std::vector<double> head, WeightSequence tail);
  static WeightSequence scaled(WeightSequence inner, double factor);

  double operator()(long n) const;

  Kind kind() const;

  // Exponent a such that w(n) is proportional to (n + c)^a for all n >= tail_start().
  double tail_exponent() const;
  long tail_start() const;

  // w(0..n) inclusive.
  std::vector<double> table(int n) const;

  // Round-trips through parse_weights.
  std::string describe() const;

 private:
  struct Node;
  explicit WeightSequence(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// "power:<a>", "shifted:<k>:<inner>", "scaled:<c>:<inner>",
// "explicit:<w0>,<w1>,...|<tail>". Throws std::invalid_argument.
WeightSequence parse_weights(std::string_view text);

}  // namespace wsp
