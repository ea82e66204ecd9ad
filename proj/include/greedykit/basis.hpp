#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "greedykit/dyadic.hpp"
#include "greedykit/haar.hpp"
#include "greedykit/weights.hpp"

namespace greedykit {

/// A finite normalized basis: a universe of N indices (0-based), a norm on
/// coefficient vectors, and a positive weight per index.  Coefficients are
/// always taken with respect to the basis itself, so the k-th unit vector is
/// the k-th basis element and must have norm 1.
class Basis {
 public:
  Basis(std::string name, int dimension);
  Basis(std::string name, int dimension, std::vector<double> index_weights);
  virtual ~Basis() = default;

  const std::string& name() const { return name_; }
  int dimension() const { return dimension_; }
  double index_weight(int index) const;
  std::span<const double> index_weights() const { return index_weights_; }

  /// True when the norm is smooth enough for the coordinate-descent oracle to
  /// certify optimality (p > 1 norms).  False for p = 1 and the summing norm,
  /// whose oracle results are only upper bounds.
  virtual bool smooth_norm() const = 0;

  virtual double norm(std::span<const double> coefficients) const = 0;

 private:
  std::string name_;
  int dimension_;
  std::vector<double> index_weights_;
};

/// ||a||_p = (sum |a_n|^p)^(1/p); unconditional, democratic, 1-greedy.
class CanonicalLpBasis final : public Basis {
 public:
  CanonicalLpBasis(double p, int dimension);
  double exponent() const { return p_; }
  bool smooth_norm() const override { return p_ > 1.0; }
  double norm(std::span<const double> coefficients) const override;

 private:
  double p_;
};

/// ||a|| = max_m |a_1 + ... + a_m|: a normalized conditional basis whose
/// greedy constants grow with the dimension.  Serves as the negative control.
class SummingBasis final : public Basis {
 public:
  explicit SummingBasis(int dimension);
  bool smooth_norm() const override { return false; }
  double norm(std::span<const double> coefficients) const override;
};

/// The normalized Haar system H_idx/||H_idx||_{p,w} under the square-function
/// norm of X^p(w).  Index k is the k-th member of the Haar universe at the
/// given resolution (ordinal 0 is the constant function).  Index weights
/// default to 1 and may be supplied per ordinal.
class HaarXpBasis final : public Basis {
 public:
  HaarXpBasis(double p, DyadicWeight weight, int level);
  HaarXpBasis(double p, DyadicWeight weight, int level,
              std::vector<double> index_weights, std::string name = "");

  double exponent() const { return p_; }
  int level() const { return level_; }
  const DyadicWeight& dyadic_weight() const { return weight_; }
  /// ||H_idx||_{p,w} for the ordinal's index.
  double haar_norm(int index) const;

  bool smooth_norm() const override { return p_ > 1.0; }
  double norm(std::span<const double> coefficients) const override;

 private:
  double p_;
  DyadicWeight weight_;
  int level_;
  std::vector<double> haar_norms_;
};

std::shared_ptr<const Basis> make_lp_basis(double p, int dimension);
std::shared_ptr<const Basis> make_summing_basis(int dimension);
std::shared_ptr<const Basis> make_haar_basis(double p, DyadicWeight weight,
                                             int level);
std::shared_ptr<const Basis> make_haar_basis(double p, DyadicWeight weight,
                                             int level,
                                             std::vector<double> index_weights);

/// An element of the basis span, stored by its coefficient vector.
struct Element {
  std::shared_ptr<const Basis> basis;
  std::vector<double> coefficients;

  double norm() const { return basis->norm(coefficients); }
  std::vector<int> support() const;
};

Element make_element(std::shared_ptr<const Basis> basis,
                     std::vector<double> coefficients);
Element zero_element(std::shared_ptr<const Basis> basis);
Element unit_element(std::shared_ptr<const Basis> basis, int index);

Element add(const Element& a, const Element& b);
Element subtract(const Element& a, const Element& b);
Element scale(const Element& a, double factor);

/// scalar * sum over A of sign_n e_n.
struct SignedIndicator {
  std::vector<int> indices;
  std::vector<int> signs;  // one per index, each +1 or -1
  double scalar = 1.0;
};

Element indicator_element(std::shared_ptr<const Basis> basis,
                          const SignedIndicator& indicator);
/// All-plus indicator 1_A.
Element indicator_element(std::shared_ptr<const Basis> basis,
                          std::span<const int> indices);

}  // namespace greedykit
