#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "qpa/diagram.hpp"
#include "qpa/ratfunc.hpp"

namespace qpa {

enum class BasisTag { P_diagram, bracket, QP_bar };

std::string to_string(BasisTag tag);

/// Scalar contributed by each closed loop: x for P_k(x), x - 1 for the
/// bracket algebra.
enum class LoopParam { x, x_minus_1 };

RatFunc loop_value(LoopParam p);

/// Finite combination of diagrams with coefficients in Q(n). Zero coefficients
/// are never stored; iteration follows canonical diagram order.
class LinComb {
 public:
  using Terms = std::map<Diagram, RatFunc>;

  LinComb(int k, BasisTag tag) : k_(k), tag_(tag) {}

  static LinComb single(const Diagram& d, BasisTag tag, RatFunc coeff = RatFunc(1));
  static LinComb identity(int k, BasisTag tag = BasisTag::P_diagram);

  int k() const noexcept { return k_; }
  BasisTag tag() const noexcept { return tag_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  /// Zero when d is absent.
  RatFunc coefficient(const Diagram& d) const;

  /// Adds c * d; drops the entry if it cancels. QP_bar combinations reject
  /// diagrams with singleton blocks.
  void add_term(const Diagram& d, const RatFunc& c);

  LinComb& operator+=(const LinComb& rhs);
  LinComb& operator-=(const LinComb& rhs);
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend bool operator==(const LinComb& a, const LinComb& b) {
    return a.k_ == b.k_ && a.tag_ == b.tag_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const LinComb& rhs) const;

  int k_;
  BasisTag tag_;
  Terms terms_;
};

LinComb scale(const RatFunc& c, const LinComb& a);

/// Bilinear extension of compose; each concatenation contributes loop^c.
/// Both operands must carry the same tag (P_diagram or bracket).
LinComb p_multiply(const LinComb& a, const LinComb& b, LoopParam loop);

/// "(n-1) * {1,2|1',2'} + 1/n * {...}"; "0" for the empty combination.
std::string to_string(const LinComb& a);

nlohmann::json to_json(const LinComb& a);
LinComb lincomb_from_json(const nlohmann::json& j, int k, BasisTag tag);

}  // namespace qpa
