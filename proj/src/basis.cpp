#include "greedykit/basis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace greedykit {
namespace {

std::string number_tag(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

std::vector<double> unit_weights(int dimension) {
  return std::vector<double>(static_cast<std::size_t>(dimension), 1.0);
}

}  // namespace

Basis::Basis(std::string name, int dimension)
    : Basis(std::move(name), dimension, unit_weights(dimension)) {}

Basis::Basis(std::string name, int dimension, std::vector<double> index_weights)
    : name_(std::move(name)),
      dimension_(dimension),
      index_weights_(std::move(index_weights)) {
  detail::require(dimension_ > 0, "basis dimension must be positive");
  detail::require(index_weights_.size() == static_cast<std::size_t>(dimension_),
                  "index weight count must match the basis dimension");
  for (double w : index_weights_) {
    detail::require(w > 0.0, "index weights must be positive");
  }
}

double Basis::index_weight(int index) const {
  detail::require(index >= 0 && index < dimension_,
                  "basis index out of range");
  return index_weights_[static_cast<std::size_t>(index)];
}

CanonicalLpBasis::CanonicalLpBasis(double p, int dimension)
    : Basis("lp:" + number_tag(p) + ":" + number_tag(dimension), dimension),
      p_(p) {
  detail::require(p >= 1.0, "lp exponent must satisfy p >= 1");
}

double CanonicalLpBasis::norm(std::span<const double> coefficients) const {
  detail::require(coefficients.size() == static_cast<std::size_t>(dimension()),
                  "coefficient count must match the basis dimension");
  if (p_ == 1.0) {
    std::vector<double> terms(coefficients.size());
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
      terms[i] = std::abs(coefficients[i]);
    }
    return stable_sum(terms);
  }
  if (p_ == 2.0) {
    std::vector<double> terms(coefficients.size());
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
      terms[i] = coefficients[i] * coefficients[i];
    }
    return std::sqrt(stable_sum(terms));
  }
  std::vector<double> terms(coefficients.size());
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    terms[i] = std::pow(std::abs(coefficients[i]), p_);
  }
  return std::pow(stable_sum(terms), 1.0 / p_);
}

SummingBasis::SummingBasis(int dimension)
    : Basis("summing:" + number_tag(dimension), dimension) {}

double SummingBasis::norm(std::span<const double> coefficients) const {
  detail::require(coefficients.size() == static_cast<std::size_t>(dimension()),
                  "coefficient count must match the basis dimension");
  double partial = 0.0;
  double worst = 0.0;
  for (double c : coefficients) {
    partial += c;
    worst = std::max(worst, std::abs(partial));
  }
  return worst;
}

namespace {

std::vector<double> haar_norm_table(double p, const DyadicWeight& weight,
                                    int level) {
  const int universe = haar_universe_size(level);
  std::vector<double> norms(static_cast<std::size_t>(universe));
  for (int ordinal = 0; ordinal < universe; ++ordinal) {
    norms[static_cast<std::size_t>(ordinal)] = haar_function_norm(
        haar_index_at(static_cast<std::size_t>(ordinal)), p, weight);
  }
  return norms;
}

}  // namespace

HaarXpBasis::HaarXpBasis(double p, DyadicWeight weight, int level)
    : HaarXpBasis(p, std::move(weight), level,
                  unit_weights(haar_universe_size(level))) {}

HaarXpBasis::HaarXpBasis(double p, DyadicWeight weight, int level,
                         std::vector<double> index_weights, std::string name)
    : Basis(name.empty() ? "haar:" + number_tag(p) + ":" + number_tag(level)
                         : std::move(name),
            haar_universe_size(level), std::move(index_weights)),
      p_(p),
      weight_(std::move(weight)),
      level_(level),
      haar_norms_(haar_norm_table(p, weight_, level)) {
  detail::require(p >= 1.0, "haar exponent must satisfy p >= 1");
}

double HaarXpBasis::haar_norm(int index) const {
  detail::require(index >= 0 && index < dimension(),
                  "basis index out of range");
  return haar_norms_[static_cast<std::size_t>(index)];
}

double HaarXpBasis::norm(std::span<const double> coefficients) const {
  detail::require(coefficients.size() == static_cast<std::size_t>(dimension()),
                  "coefficient count must match the basis dimension");
  HaarExpansion expansion(level_);
  for (int ordinal = 0; ordinal < dimension(); ++ordinal) {
    const double c = coefficients[static_cast<std::size_t>(ordinal)];
    if (c != 0.0) {
      expansion.set_coefficient(
          haar_index_at(static_cast<std::size_t>(ordinal)),
          c / haar_norms_[static_cast<std::size_t>(ordinal)]);
    }
  }
  return xp_norm(expansion, p_, weight_);
}

std::shared_ptr<const Basis> make_lp_basis(double p, int dimension) {
  return std::make_shared<CanonicalLpBasis>(p, dimension);
}

std::shared_ptr<const Basis> make_summing_basis(int dimension) {
  return std::make_shared<SummingBasis>(dimension);
}

std::shared_ptr<const Basis> make_haar_basis(double p, DyadicWeight weight,
                                             int level) {
  return std::make_shared<HaarXpBasis>(p, std::move(weight), level);
}

std::shared_ptr<const Basis> make_haar_basis(double p, DyadicWeight weight,
                                             int level,
                                             std::vector<double> index_weights) {
  return std::make_shared<HaarXpBasis>(p, std::move(weight), level,
                                       std::move(index_weights));
}

std::vector<int> Element::support() const {
  std::vector<int> result;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (coefficients[i] != 0.0) {
      result.push_back(static_cast<int>(i));
    }
  }
  return result;
}

Element make_element(std::shared_ptr<const Basis> basis,
                     std::vector<double> coefficients) {
  detail::require(basis != nullptr, "element requires a basis");
  detail::require(
      coefficients.size() == static_cast<std::size_t>(basis->dimension()),
      "coefficient count must match the basis dimension");
  return Element{std::move(basis), std::move(coefficients)};
}

Element zero_element(std::shared_ptr<const Basis> basis) {
  detail::require(basis != nullptr, "element requires a basis");
  const std::size_t n = static_cast<std::size_t>(basis->dimension());
  return Element{std::move(basis), std::vector<double>(n, 0.0)};
}

Element unit_element(std::shared_ptr<const Basis> basis, int index) {
  Element e = zero_element(std::move(basis));
  detail::require(index >= 0 && index < e.basis->dimension(),
                  "basis index out of range");
  e.coefficients[static_cast<std::size_t>(index)] = 1.0;
  return e;
}

namespace {

void require_same_basis(const Element& a, const Element& b) {
  detail::require(a.basis != nullptr && a.basis == b.basis,
                  "elements must share one basis object");
}

}  // namespace

Element add(const Element& a, const Element& b) {
  require_same_basis(a, b);
  Element out = a;
  for (std::size_t i = 0; i < out.coefficients.size(); ++i) {
    out.coefficients[i] += b.coefficients[i];
  }
  return out;
}

Element subtract(const Element& a, const Element& b) {
  require_same_basis(a, b);
  Element out = a;
  for (std::size_t i = 0; i < out.coefficients.size(); ++i) {
    out.coefficients[i] -= b.coefficients[i];
  }
  return out;
}

Element scale(const Element& a, double factor) {
  Element out = a;
  for (double& c : out.coefficients) {
    c *= factor;
  }
  return out;
}

Element indicator_element(std::shared_ptr<const Basis> basis,
                          const SignedIndicator& indicator) {
  Element e = zero_element(std::move(basis));
  detail::require(indicator.signs.size() == indicator.indices.size(),
                  "signed indicator needs one sign per index");
  for (std::size_t i = 0; i < indicator.indices.size(); ++i) {
    const int index = indicator.indices[i];
    const int sign = indicator.signs[i];
    detail::require(index >= 0 && index < e.basis->dimension(),
                    "basis index out of range");
    detail::require(sign == 1 || sign == -1,
                    "indicator signs must be +1 or -1");
    detail::require(e.coefficients[static_cast<std::size_t>(index)] == 0.0,
                    "indicator indices must be distinct");
    e.coefficients[static_cast<std::size_t>(index)] =
        indicator.scalar * static_cast<double>(sign);
  }
  return e;
}

Element indicator_element(std::shared_ptr<const Basis> basis,
                          std::span<const int> indices) {
  SignedIndicator indicator;
  indicator.indices.assign(indices.begin(), indices.end());
  indicator.signs.assign(indices.size(), 1);
  return indicator_element(std::move(basis), indicator);
}

}  // namespace greedykit
