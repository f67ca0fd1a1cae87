#include "transfact/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "transfact/error.hpp"

namespace transfact {

Permutation::Permutation(std::vector<int> images, std::vector<int> labels)
    : images_(std::move(images)), labels_(std::move(labels)) {
  const std::size_t n = images_.size();
  if (n == 0) fail(ErrorCode::invalid_argument, "permutation degree must be at least 1");
  std::vector<char> hit(n, 0);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || hit[static_cast<std::size_t>(v)]) {
      fail(ErrorCode::invalid_argument, "images do not form a bijection");
    }
    hit[static_cast<std::size_t>(v)] = 1;
  }
  if (labels_.empty()) {
    labels_.resize(n);
    std::iota(labels_.begin(), labels_.end(), 1);
  } else if (labels_.size() != n) {
    fail(ErrorCode::invalid_argument, "label count differs from degree");
  } else if (!std::is_sorted(labels_.begin(), labels_.end()) ||
             std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
    fail(ErrorCode::invalid_argument, "labels must be strictly increasing");
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) fail(ErrorCode::invalid_argument, "permutation degree must be at least 1");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  if (n < 1) fail(ErrorCode::invalid_argument, "permutation degree must be at least 1");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (const auto& cycle : cycles) {
    for (int x : cycle) {
      if (x < 1 || x > n) {
        fail(ErrorCode::invalid_argument,
             "cycle element " + std::to_string(x) + " outside 1.." + std::to_string(n));
      }
      if (used[static_cast<std::size_t>(x - 1)]) {
        fail(ErrorCode::invalid_argument, "element " + std::to_string(x) + " repeated across cycles");
      }
      used[static_cast<std::size_t>(x - 1)] = 1;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[static_cast<std::size_t>(cycle[i] - 1)] = cycle[(i + 1) % cycle.size()] - 1;
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::parse(int n, const std::string& text) {
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') fail(ErrorCode::parse, "expected '(' in '" + text + "'");
    ++pos;
    const std::size_t close = text.find(')', pos);
    if (close == std::string::npos) fail(ErrorCode::parse, "unclosed cycle in '" + text + "'");
    const std::string body = text.substr(pos, close - pos);
    pos = close + 1;

    std::vector<int> cycle;
    const bool separated = body.find_first_of(", \t") != std::string::npos &&
                           body.find_first_not_of(" \t") != std::string::npos;
    if (separated) {
      std::string token;
      auto flush = [&] {
        if (!token.empty()) cycle.push_back(std::stoi(token));
        token.clear();
      };
      for (char c : body) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
          token.push_back(c);
        } else if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
          flush();
        } else {
          fail(ErrorCode::parse, std::string("unexpected character '") + c + "' in cycle");
        }
      }
      flush();
    } else {
      for (char c : body) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          fail(ErrorCode::parse, std::string("unexpected character '") + c + "' in cycle");
        }
        cycle.push_back(c - '0');
      }
    }
    if (cycle.size() > 1) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  try {
    return from_cycles(n, cycles);
  } catch (const Error& e) {
    fail(ErrorCode::parse, e.what());
  }
}

Permutation Permutation::canonical(const Partition& alpha) {
  std::vector<int> images(static_cast<std::size_t>(alpha.n()));
  int start = 0;
  for (int part : alpha.parts()) {
    for (int i = 0; i < part; ++i) images[static_cast<std::size_t>(start + i)] = start + (i + 1) % part;
    start += part;
  }
  return Permutation(std::move(images));
}

int Permutation::index_of(int label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) {
    fail(ErrorCode::invalid_argument, "label " + std::to_string(label) + " not in ground set");
  }
  return static_cast<int>(it - labels_.begin());
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Permutation(std::move(inv), labels_);
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cycle;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = 1;
      cycle.push_back(static_cast<int>(j));
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

Partition Permutation::cycle_type() const {
  std::vector<int> lengths;
  for (const auto& c : cycles()) lengths.push_back(static_cast<int>(c.size()));
  return Partition(std::move(lengths));
}

int Permutation::cycle_count() const {
  int count = 0;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    ++count;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) seen[j] = 1;
  }
  return count;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

std::vector<int> Permutation::support() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) out.push_back(static_cast<int>(i));
  }
  return out;
}

bool Permutation::is_k_cycle(int k) const {
  int nontrivial = 0;
  for (const auto& c : cycles()) {
    if (c.size() == 1) continue;
    if (static_cast<int>(c.size()) != k || ++nontrivial > 1) return false;
  }
  return nontrivial == 1;
}

Permutation Permutation::conjugate_by(const Permutation& g) const {
  return compose(compose(g.inverse(), *this), g);
}

Permutation Permutation::restrict_to(std::span<const int> keep_labels) const {
  if (keep_labels.empty()) fail(ErrorCode::invalid_argument, "restriction to an empty subset");
  std::vector<int> kept(keep_labels.begin(), keep_labels.end());
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
    fail(ErrorCode::invalid_argument, "restriction subset has repeated labels");
  }
  std::vector<int> new_index(images_.size(), -1);
  for (std::size_t j = 0; j < kept.size(); ++j) new_index[static_cast<std::size_t>(index_of(kept[j]))] = static_cast<int>(j);

  std::vector<int> images(kept.size());
  for (std::size_t j = 0; j < kept.size(); ++j) {
    int x = images_[static_cast<std::size_t>(index_of(kept[j]))];
    while (new_index[static_cast<std::size_t>(x)] < 0) x = images_[static_cast<std::size_t>(x)];
    images[j] = new_index[static_cast<std::size_t>(x)];
  }
  return Permutation(std::move(images), std::move(kept));
}

std::string Permutation::to_string() const {
  const bool wide = labels_.back() > 9;
  std::ostringstream out;
  bool any = false;
  for (const auto& c : cycles()) {
    if (c.size() == 1) continue;
    any = true;
    out << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (wide && i) out << ',';
      out << labels_[static_cast<std::size_t>(c[i])];
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree() || a.labels() != b.labels()) {
    fail(ErrorCode::degree_mismatch,
         "cannot compose permutations of degree " + std::to_string(a.degree()) + " and " +
             std::to_string(b.degree()));
  }
  std::vector<int> images(static_cast<std::size_t>(a.degree()));
  for (int i = 0; i < a.degree(); ++i) images[static_cast<std::size_t>(i)] = a(b(i));
  return Permutation(std::move(images), a.labels());
}

Partition cycle_type(const Permutation& p) { return p.cycle_type(); }

Permutation restrict(const Permutation& p, std::span<const int> keep_labels) {
  return p.restrict_to(keep_labels);
}

std::vector<Permutation> all_k_cycles(int n, int k) {
  if (k < 2 || k > n) return {};
  std::vector<Permutation> out;
  std::vector<char> mask(static_cast<std::size_t>(n), 0);
  std::fill(mask.begin(), mask.begin() + k, 1);
  // Iterate k-subsets in lexicographic order via a prev_permutation mask.
  do {
    std::vector<int> subset;
    for (int i = 0; i < n; ++i) {
      if (mask[static_cast<std::size_t>(i)]) subset.push_back(i);
    }
    // Fix the smallest element first; arrange the rest in every order.
    std::vector<int> rest(subset.begin() + 1, subset.end());
    do {
      std::vector<int> images(static_cast<std::size_t>(n));
      std::iota(images.begin(), images.end(), 0);
      int prev = subset[0];
      for (int x : rest) {
        images[static_cast<std::size_t>(prev)] = x;
        prev = x;
      }
      images[static_cast<std::size_t>(prev)] = subset[0];
      out.emplace_back(std::move(images));
    } while (std::next_permutation(rest.begin(), rest.end()));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

}  // namespace transfact
