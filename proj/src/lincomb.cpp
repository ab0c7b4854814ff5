#include "qpa/lincomb.hpp"

#include <stdexcept>
#include <vector>

namespace qpa {

std::string to_string(BasisTag tag) {
  switch (tag) {
    case BasisTag::P_diagram: return "P_diagram";
    case BasisTag::bracket: return "bracket";
    case BasisTag::QP_bar: return "QP_bar";
  }
  return "?";
}

RatFunc loop_value(LoopParam p) {
  return p == LoopParam::x ? RatFunc::variable() : RatFunc::variable() - RatFunc(1);
}

LinComb LinComb::single(const Diagram& d, BasisTag tag, RatFunc coeff) {
  LinComb out(d.k(), tag);
  out.add_term(d, coeff);
  return out;
}

LinComb LinComb::identity(int k, BasisTag tag) { return single(Diagram::identity(k), tag); }

RatFunc LinComb::coefficient(const Diagram& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? RatFunc() : it->second;
}

void LinComb::add_term(const Diagram& d, const RatFunc& c) {
  if (d.k() != k_) throw std::invalid_argument("diagram k does not match combination k");
  if (c.is_zero()) return;
  if (tag_ == BasisTag::QP_bar && d.has_isolated())
    throw std::invalid_argument("QP_bar combination cannot hold singleton diagram " + to_string(d));
  auto [it, inserted] = terms_.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void LinComb::check_compatible(const LinComb& rhs) const {
  if (k_ != rhs.k_) throw std::invalid_argument("mismatched k in linear combination");
  if (tag_ != rhs.tag_) throw std::invalid_argument("mismatched basis tags in linear combination");
}

LinComb& LinComb::operator+=(const LinComb& rhs) {
  check_compatible(rhs);
  for (const auto& [d, c] : rhs.terms_) add_term(d, c);
  return *this;
}

LinComb& LinComb::operator-=(const LinComb& rhs) {
  check_compatible(rhs);
  for (const auto& [d, c] : rhs.terms_) add_term(d, -c);
  return *this;
}

LinComb scale(const RatFunc& c, const LinComb& a) {
  LinComb out(a.k(), a.tag());
  if (c.is_zero()) return out;
  for (const auto& [d, coeff] : a.terms()) out.add_term(d, c * coeff);
  return out;
}

LinComb p_multiply(const LinComb& a, const LinComb& b, LoopParam loop) {
  if (a.k() != b.k()) throw std::invalid_argument("p_multiply: mismatched k");
  if (a.tag() != b.tag()) throw std::invalid_argument("p_multiply: mismatched basis tags");
  if (a.tag() == BasisTag::QP_bar)
    throw std::invalid_argument("p_multiply: QP_bar combinations multiply through qp_product");
  // Collect by (diagram, loops) first so the loop power is applied once per group.
  std::map<std::pair<Diagram, int>, RatFunc> grouped;
  for (const auto& [d1, c1] : a.terms())
    for (const auto& [d2, c2] : b.terms()) {
      auto r = compose(d1, d2);
      auto [it, inserted] = grouped.try_emplace({r.diagram, r.loops}, c1 * c2);
      if (!inserted) it->second += c1 * c2;
    }
  const RatFunc lv = loop_value(loop);
  std::vector<RatFunc> powers{RatFunc(1)};
  LinComb out(a.k(), a.tag());
  for (const auto& [key, c] : grouped) {
    if (c.is_zero()) continue;
    while (static_cast<int>(powers.size()) <= key.second) powers.push_back(powers.back() * lv);
    out.add_term(key.first, c * powers[static_cast<std::size_t>(key.second)]);
  }
  return out;
}

namespace {

// Wraps sums in parentheses so "c * d" reads unambiguously.
std::string coeff_string(const RatFunc& c) {
  std::string s = to_string(c, true);
  if (c.is_polynomial() && c.num().degree() == 0) return s;
  if (c.is_polynomial() && c.num().is_monomial() && c.num().leading() == 1) return s;
  if (!c.is_polynomial()) return s;
  return "(" + s + ")";
}

}  // namespace

std::string to_string(const LinComb& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [d, c] : a.terms()) {
    std::string cs = coeff_string(c);
    if (!first) {
      const bool neg = cs.front() == '-';
      out += neg ? " - " : " + ";
      if (neg) cs.erase(0, 1);
    }
    first = false;
    out += cs + " * " + to_string(d);
  }
  return out;
}

nlohmann::json to_json(const LinComb& a) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [d, c] : a.terms()) arr.push_back({{"coeff", to_string(c)}, {"diagram", to_json(d)}});
  return arr;
}

LinComb lincomb_from_json(const nlohmann::json& j, int k, BasisTag tag) {
  if (!j.is_array()) throw std::invalid_argument("linear combination JSON must be an array");
  LinComb out(k, tag);
  for (const auto& t : j) out.add_term(diagram_from_json(t.at("diagram")), parse_ratfunc(t.at("coeff").get<std::string>()));
  return out;
}

}  // namespace qpa
