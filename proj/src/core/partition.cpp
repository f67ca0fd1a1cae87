#include "transfact/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "transfact/error.hpp"

namespace transfact {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) fail(ErrorCode::invalid_argument, "partition must have at least one part");
  for (int p : parts_) {
    if (p < 1) fail(ErrorCode::invalid_argument, "partition parts must be positive");
    n_ += p;
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::ones(int n) {
  if (n < 1) fail(ErrorCode::invalid_argument, "ones(n) needs n >= 1");
  return Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
}

int Partition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::string Partition::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ',';
    out << parts_[i];
  }
  return out.str();
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::string token;
  auto flush = [&] {
    if (token.empty()) fail(ErrorCode::parse, "empty part in partition '" + text + "'");
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      fail(ErrorCode::parse, "bad part '" + token + "' in partition '" + text + "'");
    }
    if (used != token.size()) fail(ErrorCode::parse, "bad part '" + token + "'");
    parts.push_back(value);
    token.clear();
  };
  for (char c : text) {
    if (c == ' ' || c == '\t') continue;
    if (c == ',') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  try {
    return Partition(std::move(parts));
  } catch (const Error& e) {
    fail(ErrorCode::parse, e.what());
  }
}

std::vector<Partition> partitions_of(int n) {
  if (n < 1) fail(ErrorCode::invalid_argument, "partitions_of(n) needs n >= 1");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

BigInt class_size(const Partition& alpha) {
  std::map<int, unsigned> mult;
  for (int p : alpha.parts()) ++mult[p];
  BigInt denom = 1;
  for (auto [part, m] : mult) denom *= power(BigInt(part), m) * factorial(m);
  return factorial(static_cast<unsigned>(alpha.n())) / denom;
}

std::optional<int> mu_k(const Partition& alpha, int k) {
  if (k < 2) fail(ErrorCode::invalid_argument, "mu_k needs k >= 2");
  const int numer = alpha.n() + alpha.length() - 2;
  if (numer % (k - 1) != 0) return std::nullopt;
  return numer / (k - 1);
}

}  // namespace transfact
