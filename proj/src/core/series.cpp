#include "transfact/series.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "transfact/error.hpp"

namespace transfact {

RingPtr SeriesRing::make(std::vector<std::string> names, int max_degree, std::vector<int> weights) {
  if (weights.empty()) weights.assign(names.size(), 1);
  if (weights.size() != names.size()) fail(ErrorCode::invalid_argument, "one weight per variable expected");
  for (int w : weights) {
    if (w < 0) fail(ErrorCode::invalid_argument, "variable weights must be non-negative");
  }
  if (max_degree < 0) fail(ErrorCode::invalid_argument, "truncation bound must be non-negative");
  auto ring = std::make_shared<SeriesRing>();
  ring->names = std::move(names);
  ring->weights = std::move(weights);
  ring->max_degree = max_degree;
  return ring;
}

std::size_t SeriesRing::index(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) fail(ErrorCode::invalid_argument, "no variable named " + name);
  return static_cast<std::size_t>(it - names.begin());
}

ExactSeries::ExactSeries(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) fail(ErrorCode::invalid_argument, "series needs a ring");
}

ExactSeries ExactSeries::constant(RingPtr ring, const Rational& c) {
  ExactSeries s(std::move(ring));
  s.add_term(Exponents(s.ring_->size(), 0), c);
  return s;
}

ExactSeries ExactSeries::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->size()) fail(ErrorCode::invalid_argument, "variable index out of range");
  Exponents e(ring->size(), 0);
  e[index] = 1;
  return monomial(std::move(ring), std::move(e));
}

ExactSeries ExactSeries::variable(RingPtr ring, const std::string& name) {
  const std::size_t i = ring->index(name);
  return variable(std::move(ring), i);
}

ExactSeries ExactSeries::monomial(RingPtr ring, Exponents exps, const Rational& c) {
  ExactSeries s(std::move(ring));
  if (exps.size() != s.ring_->size()) fail(ErrorCode::invalid_argument, "exponent vector has the wrong length");
  s.add_term(exps, c);
  return s;
}

int ExactSeries::degree_of(const Exponents& exps) const {
  long d = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) d += static_cast<long>(exps[i]) * ring_->weights[i];
  return d > INT_MAX ? INT_MAX : static_cast<int>(d);
}

Rational ExactSeries::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational ExactSeries::constant_term() const { return coefficient(Exponents(ring_->size(), 0)); }

int ExactSeries::valuation() const {
  int v = SeriesRing::kUnbounded;
  for (const auto& [e, c] : terms_) v = std::min(v, degree_of(e));
  return v;
}

int ExactSeries::top_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
  return d;
}

void ExactSeries::add_term(const Exponents& exps, const Rational& c) {
  if (c == 0 || degree_of(exps) > ring_->max_degree) return;
  Rational value = c;
  value.canonicalize();
  auto [it, fresh] = terms_.emplace(exps, value);
  if (fresh) return;
  it->second += value;
  if (it->second == 0) terms_.erase(it);
}

void ExactSeries::require_same_ring(const ExactSeries& other) const {
  if (ring_ != other.ring_ && !(*ring_ == *other.ring_)) {
    fail(ErrorCode::invalid_argument, "series belong to different rings");
  }
}

ExactSeries ExactSeries::operator-() const {
  ExactSeries out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

ExactSeries& ExactSeries::operator+=(const ExactSeries& other) {
  require_same_ring(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

ExactSeries& ExactSeries::operator-=(const ExactSeries& other) {
  require_same_ring(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

ExactSeries& ExactSeries::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

ExactSeries operator*(const ExactSeries& a, const ExactSeries& b) {
  a.require_same_ring(b);
  ExactSeries out(a.ring_);
  const int bound = a.ring_->max_degree;
  std::vector<std::pair<int, const std::pair<const Exponents, Rational>*>> right;
  right.reserve(b.terms_.size());
  for (const auto& t : b.terms_) right.emplace_back(b.degree_of(t.first), &t);
  std::sort(right.begin(), right.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  Exponents e(a.ring_->size());
  Rational prod;
  for (const auto& [ea, ca] : a.terms_) {
    const int da = a.degree_of(ea);
    for (const auto& [db, term] : right) {
      if (bound != SeriesRing::kUnbounded && da + db > bound) break;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + term->first[i];
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), term->second.get_mpq_t());
      auto [it, fresh] = out.terms_.emplace(e, prod);
      if (!fresh) {
        it->second += prod;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

ExactSeries ExactSeries::pow(unsigned exponent) const {
  ExactSeries result = constant(ring_, 1);
  ExactSeries base = *this;
  while (exponent) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

ExactSeries ExactSeries::derivative(std::size_t index) const {
  if (index >= ring_->size()) fail(ErrorCode::invalid_argument, "variable index out of range");
  ExactSeries out(ring_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponents d = e;
    --d[index];
    out.terms_.emplace(std::move(d), c * e[index]);
  }
  return out;
}

ExactSeries ExactSeries::euler(std::size_t index) const {
  if (index >= ring_->size()) fail(ErrorCode::invalid_argument, "variable index out of range");
  ExactSeries out(ring_);
  for (const auto& [e, c] : terms_) {
    if (e[index] != 0) out.terms_.emplace(e, c * e[index]);
  }
  return out;
}

ExactSeries ExactSeries::shift(const Exponents& exps) const {
  if (exps.size() != ring_->size()) fail(ErrorCode::invalid_argument, "exponent vector has the wrong length");
  ExactSeries out(ring_);
  for (const auto& [e, c] : terms_) {
    Exponents s = e;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += exps[i];
    out.add_term(s, c);
  }
  return out;
}

ExactSeries ExactSeries::scale_by_degree(int power) const {
  ExactSeries out(ring_);
  for (const auto& [e, c] : terms_) {
    const int d = degree_of(e);
    if (d == 0 && power > 0) fail(ErrorCode::precondition, "degree-zero term cannot be divided by its degree");
    out.terms_.emplace(e, c / transfact::power(Rational(d == 0 ? 1 : d), power));
  }
  return out;
}

ExactSeries ExactSeries::log() const {
  if (!ring_->truncated()) fail(ErrorCode::precondition, "log needs a truncated ring");
  if (constant_term() != 1) fail(ErrorCode::precondition, "log needs constant term 1");
  ExactSeries g = *this - constant(ring_, 1);
  if (g.valuation() < 1) fail(ErrorCode::precondition, "log needs positive valuation after the constant");
  ExactSeries out(ring_);
  ExactSeries term = g;
  for (int n = 1; !term.is_zero(); ++n) {
    out += term * Rational(n % 2 ? 1 : -1, n);
    term = term * g;
  }
  return out;
}

ExactSeries ExactSeries::exp() const {
  if (!ring_->truncated()) fail(ErrorCode::precondition, "exp needs a truncated ring");
  if (valuation() < 1) fail(ErrorCode::precondition, "exp needs positive valuation");
  ExactSeries out = constant(ring_, 1);
  ExactSeries term = constant(ring_, 1);
  for (int n = 1;; ++n) {
    term = term * *this * Rational(1, n);
    if (term.is_zero()) break;
    out += term;
  }
  return out;
}

ExactSeries ExactSeries::geometric() const {
  if (!ring_->truncated()) fail(ErrorCode::precondition, "geometric series needs a truncated ring");
  if (valuation() < 1) fail(ErrorCode::precondition, "geometric series needs positive valuation");
  ExactSeries out = constant(ring_, 1);
  ExactSeries term = constant(ring_, 1);
  for (;;) {
    term = term * *this;
    if (term.is_zero()) break;
    out += term;
  }
  return out;
}

ExactSeries ExactSeries::evaluate(const std::vector<ExactSeries>& images) const {
  if (images.size() != ring_->size()) fail(ErrorCode::invalid_argument, "one image per variable expected");
  if (images.empty()) fail(ErrorCode::invalid_argument, "cannot evaluate a series with no variables");
  RingPtr target = images.front().ring();
  for (const auto& img : images) img.require_same_ring(images.front());
  int bound = target->max_degree;
  if (ring_->truncated()) {
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (images[i].valuation() < ring_->weights[i]) {
        fail(ErrorCode::precondition, "substituted series has valuation below the variable weight");
      }
    }
    bound = std::min(bound, ring_->max_degree);
  }
  if (bound != target->max_degree) {
    auto lowered = std::make_shared<SeriesRing>(*target);
    lowered->max_degree = bound;
    target = lowered;
  }
  std::vector<std::vector<ExactSeries>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    powers[i].push_back(constant(target, 1));
    powers[i].push_back(images[i].with_ring(target));
  }
  auto power_of = [&](std::size_t i, int e) -> const ExactSeries& {
    while (static_cast<int>(powers[i].size()) <= e) powers[i].push_back(powers[i].back() * powers[i][1]);
    return powers[i][static_cast<std::size_t>(e)];
  };
  ExactSeries out(target);
  for (const auto& [e, c] : terms_) {
    ExactSeries term = constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i]) term = term * power_of(i, e[i]);
    }
    out += term;
  }
  return out;
}

ExactSeries ExactSeries::embed(const RingPtr& target, const std::vector<std::string>& target_names) const {
  if (target_names.size() != ring_->size()) fail(ErrorCode::invalid_argument, "one target name per variable expected");
  std::vector<std::size_t> map;
  for (const auto& name : target_names) map.push_back(target->index(name));
  ExactSeries out(target);
  for (const auto& [e, c] : terms_) {
    Exponents t(target->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) t[map[i]] += e[i];
    out.add_term(t, c);
  }
  return out;
}

ExactSeries ExactSeries::truncate(int max_degree) const {
  if (max_degree > ring_->max_degree) fail(ErrorCode::invalid_argument, "truncate cannot raise the bound");
  auto ring = std::make_shared<SeriesRing>(*ring_);
  ring->max_degree = max_degree;
  return with_ring(ring);
}

ExactSeries ExactSeries::with_ring(const RingPtr& ring) const {
  if (ring->names != ring_->names || ring->weights != ring_->weights) {
    fail(ErrorCode::invalid_argument, "rings differ in their variables");
  }
  ExactSeries out(ring);
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  return out;
}

ExactSeries ExactSeries::swap_variables(std::size_t i, std::size_t j) const {
  if (i >= ring_->size() || j >= ring_->size()) fail(ErrorCode::invalid_argument, "variable index out of range");
  if (ring_->weights[i] != ring_->weights[j]) fail(ErrorCode::invalid_argument, "swapped variables must share a weight");
  ExactSeries out(ring_);
  for (const auto& [e, c] : terms_) {
    Exponents s = e;
    std::swap(s[i], s[j]);
    out.terms_.emplace(std::move(s), c);
  }
  return out;
}

bool ExactSeries::operator==(const ExactSeries& other) const {
  return (ring_ == other.ring_ || *ring_ == *other.ring_) && terms_ == other.terms_;
}

std::string ExactSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<int, const Exponents*>> order;
  for (const auto& [e, c] : terms_) order.emplace_back(degree_of(e), &e);
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::ostringstream out;
  bool first = true;
  for (const auto& [d, e] : order) {
    if (!first) out << " + ";
    first = false;
    out << transfact::to_string(terms_.at(*e));
    bool any = false;
    for (std::size_t i = 0; i < e->size(); ++i) {
      if ((*e)[i] == 0) continue;
      out << (any ? " " : " * ") << ring_->names[i];
      if ((*e)[i] != 1) out << '^' << (*e)[i];
      any = true;
    }
  }
  return out.str();
}

nlohmann::json ExactSeries::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : terms_) {
    terms.push_back({{"exponents", e}, {"num", to_decimal(c.get_num())}, {"den", to_decimal(c.get_den())}});
  }
  nlohmann::json out;
  out["variables"] = ring_->names;
  out["weights"] = ring_->weights;
  if (ring_->truncated()) out["max_degree"] = ring_->max_degree;
  else out["max_degree"] = nullptr;
  out["terms"] = std::move(terms);
  return out;
}

}  // namespace transfact
