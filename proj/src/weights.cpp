#include "wsplab/weights.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "wsplab/series.hpp"

namespace wsp {

struct WeightSequence::Node {
  Kind kind;
  double alpha = 0.0;          // power_law
  double factor = 1.0;         // scaled
  int offset = 0;              // shifted
  std::vector<double> head;    // explicit_head
  std::shared_ptr<const Node> inner;
};

WeightSequence WeightSequence::power_law(double alpha) {
  if (!std::isfinite(alpha)) throw std::invalid_argument("power_law: exponent must be finite");
  auto n = std::make_shared<Node>();
  n->kind = Kind::power_law;
  n->alpha = alpha;
  return WeightSequence(std::move(n));
}

WeightSequence WeightSequence::shifted(WeightSequence inner, int offset) {
  if (offset < 0) throw std::invalid_argument("shifted: offset must be >= 0");
  auto n = std::make_shared<Node>();
  n->kind = Kind::shifted;
  n->offset = offset;
  n->inner = std::move(inner.node_);
  return WeightSequence(std::move(n));
}

WeightSequence WeightSequence::explicit_head(std::vector<double> head, WeightSequence tail) {
  for (double w : head) {
    if (!(w > 0.0) || !std::isfinite(w)) throw std::invalid_argument("explicit: weights must be positive and finite");
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::explicit_head;
  n->head = std::move(head);
  n->inner = std::move(tail.node_);
  return WeightSequence(std::move(n));
}

WeightSequence WeightSequence::scaled(WeightSequence inner, double factor) {
  if (!(factor > 0.0) || !std::isfinite(factor)) throw std::invalid_argument("scaled: factor must be positive");
  auto n = std::make_shared<Node>();
  n->kind = Kind::scaled;
  n->factor = factor;
  n->inner = std::move(inner.node_);
  return WeightSequence(std::move(n));
}

double WeightSequence::operator()(long n) const {
  if (n < 0) throw std::out_of_range("WeightSequence: negative index");
  const Node* p = node_.get();
  double scale = 1.0;
  for (;;) {
    switch (p->kind) {
      case Kind::power_law:
        return scale * std::pow(static_cast<double>(n + 1), p->alpha);
      case Kind::shifted:
        n += p->offset;
        break;
      case Kind::explicit_head:
        if (n < static_cast<long>(p->head.size())) return scale * p->head[static_cast<std::size_t>(n)];
        break;
      case Kind::scaled:
        scale *= p->factor;
        break;
    }
    p = p->inner.get();
  }
}

WeightSequence::Kind WeightSequence::kind() const { return node_->kind; }

double WeightSequence::tail_exponent() const {
  const Node* p = node_.get();
  while (p->kind != Kind::power_law) p = p->inner.get();
  return p->alpha;
}

long WeightSequence::tail_start() const {
  // Index past which no explicit head is consulted, in outer coordinates.
  long start = 0;
  long shift = 0;
  for (const Node* p = node_.get(); p != nullptr; p = p->inner.get()) {
    if (p->kind == Kind::shifted) shift += p->offset;
    if (p->kind == Kind::explicit_head) {
      start = std::max(start, static_cast<long>(p->head.size()) - shift);
    }
  }
  return std::max(start, 0L);
}

std::vector<double> WeightSequence::table(int n) const {
  std::vector<double> out(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) out[static_cast<std::size_t>(i)] = (*this)(i);
  return out;
}

std::string WeightSequence::describe() const {
  std::string out;
  for (const Node* p = node_.get(); p != nullptr; p = p->inner.get()) {
    switch (p->kind) {
      case Kind::power_law:
        out += "power:" + format_real(p->alpha);
        break;
      case Kind::shifted:
        out += "shifted:" + std::to_string(p->offset) + ":";
        break;
      case Kind::scaled:
        out += "scaled:" + format_real(p->factor) + ":";
        break;
      case Kind::explicit_head: {
        out += "explicit:";
        for (std::size_t i = 0; i < p->head.size(); ++i) {
          if (i) out += ",";
          out += format_real(p->head[i]);
        }
        out += "|";
        break;
      }
    }
  }
  return out;
}

namespace {

double to_double(std::string_view s, std::string_view what) {
  std::string buf(s);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(buf, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("weights: bad number in " + std::string(what) + ": '" + buf + "'");
  }
  if (used != buf.size()) throw std::invalid_argument("weights: trailing characters in '" + buf + "'");
  return v;
}

}  // namespace

WeightSequence parse_weights(std::string_view text) {
  auto take_field = [&](std::string_view& rest) {
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("weights: missing ':' in '" + std::string(text) + "'");
    auto field = rest.substr(0, colon);
    rest.remove_prefix(colon + 1);
    return field;
  };
  std::string_view rest = text;
  const auto kind = take_field(rest);
  if (kind == "power") return WeightSequence::power_law(to_double(rest, "power"));
  if (kind == "shifted") {
    const auto k = take_field(rest);
    return WeightSequence::shifted(parse_weights(rest), static_cast<int>(to_double(k, "shifted")));
  }
  if (kind == "scaled") {
    const auto c = take_field(rest);
    return WeightSequence::scaled(parse_weights(rest), to_double(c, "scaled"));
  }
  if (kind == "explicit") {
    const auto bar = rest.find('|');
    if (bar == std::string_view::npos) throw std::invalid_argument("weights: explicit needs '|<tail>'");
    std::vector<double> head;
    auto list = rest.substr(0, bar);
    while (!list.empty()) {
      const auto comma = list.find(',');
      head.push_back(to_double(list.substr(0, comma), "explicit"));
      if (comma == std::string_view::npos) break;
      list.remove_prefix(comma + 1);
    }
    return WeightSequence::explicit_head(std::move(head), parse_weights(rest.substr(bar + 1)));
  }
  throw std::invalid_argument("weights: unknown kind '" + std::string(kind) + "'");
}

}  // namespace wsp
