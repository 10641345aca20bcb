#include "balcx/complex.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "balcx/errors.hpp"

namespace balcx {

namespace {

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

void sub_multisets_rec(const std::vector<std::pair<int, int>>& counts, std::size_t pos,
                       std::size_t remaining, std::vector<int>& current,
                       std::vector<Multiset>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  if (pos == counts.size()) return;
  std::size_t capacity = 0;
  for (std::size_t i = pos; i < counts.size(); ++i) capacity += counts[i].second;
  if (capacity < remaining) return;

  const auto [label, mult] = counts[pos];
  const std::size_t take_max = std::min<std::size_t>(mult, remaining);
  // Larger takes of the smaller label first keeps the output ascending.
  for (std::size_t take = take_max + 1; take-- > 0;) {
    current.insert(current.end(), take, label);
    sub_multisets_rec(counts, pos + 1, remaining - take, current, out);
    current.resize(current.size() - take);
  }
}

}  // namespace

Multiset::Multiset(std::initializer_list<int> labels) : Multiset(std::vector<int>(labels)) {}

Multiset::Multiset(std::vector<int> labels) : entries_(std::move(labels)) {
  for (int label : entries_) {
    if (label < 1) throw DomainError("vertex label " + std::to_string(label) + " is not positive");
  }
  std::sort(entries_.begin(), entries_.end());
}

int Multiset::multiplicity(int label) const {
  auto [lo, hi] = std::equal_range(entries_.begin(), entries_.end(), label);
  return static_cast<int>(hi - lo);
}

std::vector<int> Multiset::support() const {
  std::vector<int> out;
  std::unique_copy(entries_.begin(), entries_.end(), std::back_inserter(out));
  return out;
}

std::vector<std::pair<int, int>> Multiset::counts() const {
  std::vector<std::pair<int, int>> out;
  for (int label : entries_) {
    if (!out.empty() && out.back().first == label) {
      ++out.back().second;
    } else {
      out.emplace_back(label, 1);
    }
  }
  return out;
}

bool Multiset::is_singular() const {
  return std::adjacent_find(entries_.begin(), entries_.end()) != entries_.end();
}

bool Multiset::contains(const Multiset& sub) const {
  return std::includes(entries_.begin(), entries_.end(), sub.entries_.begin(), sub.entries_.end());
}

Multiset merge(const Multiset& a, const Multiset& b) {
  Multiset out;
  out.entries_.reserve(a.entries_.size() + b.entries_.size());
  std::merge(a.entries_.begin(), a.entries_.end(), b.entries_.begin(), b.entries_.end(),
             std::back_inserter(out.entries_));
  return out;
}

Simplex::Simplex(std::initializer_list<int> labels) : Simplex(std::vector<int>(labels)) {}

Simplex::Simplex(std::vector<int> labels) : Simplex(Multiset(std::move(labels))) {}

Simplex::Simplex(Multiset m) : Multiset(std::move(m)) {
  if (empty()) throw DomainError("a simplex must have at least one vertex");
}

std::vector<Multiset> sub_multisets(const Multiset& m, std::size_t size) {
  std::vector<Multiset> out;
  if (size > m.cardinality()) return out;
  std::vector<int> current;
  sub_multisets_rec(m.counts(), 0, size, current, out);
  return out;
}

std::int64_t embedding_multiplicity(const Multiset& face, const Multiset& sigma) {
  std::int64_t result = 1;
  for (const auto& [label, k] : face.counts()) {
    const int m = sigma.multiplicity(label);
    if (m < k) return 0;
    result *= binomial(m, k);
  }
  return result;
}

Complex::Complex(int n, std::vector<Simplex> simplices) : n_(n), simplices_(std::move(simplices)) {
  if (simplices_.empty()) throw DomainError("a complex must contain at least one simplex");
  std::sort(simplices_.begin(), simplices_.end());
  simplices_.erase(std::unique(simplices_.begin(), simplices_.end()), simplices_.end());
  const std::size_t c = simplices_.front().cardinality();
  for (const auto& s : simplices_) {
    if (s.cardinality() != c) throw DomainError("simplices of a complex must share cardinality");
    if (s.max_label() > n_ - 1) {
      throw DomainError("vertex label " + std::to_string(s.max_label()) + " outside [1, " +
                        std::to_string(n_ - 1) + "]");
    }
  }
}

bool Complex::is_singular() const {
  return std::any_of(simplices_.begin(), simplices_.end(),
                     [](const Simplex& s) { return s.is_singular(); });
}

std::vector<int> Complex::support() const {
  std::vector<int> labels;
  for (const auto& s : simplices_) {
    labels.insert(labels.end(), s.entries().begin(), s.entries().end());
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

std::ptrdiff_t Complex::index_of(const Simplex& s) const {
  auto it = std::lower_bound(simplices_.begin(), simplices_.end(), s);
  if (it == simplices_.end() || *it != s) return -1;
  return it - simplices_.begin();
}

WeightedComplex::WeightedComplex(Complex complex, std::vector<Scalar> weights, FieldSpec field)
    : complex_(std::move(complex)), weights_(std::move(weights)), field_(field) {
  if (weights_.size() != complex_.size()) {
    throw DomainError("expected " + std::to_string(complex_.size()) + " weights, got " +
                      std::to_string(weights_.size()));
  }
  for (const auto& w : weights_) {
    if (w.field() != field_) throw DomainError("weight lies in a different field");
    if (w.is_zero()) throw DomainError("weights must be nonzero");
  }
}

WeightedComplex WeightedComplex::from_pairs(int n, std::vector<std::pair<Simplex, Scalar>> pairs,
                                            FieldSpec field) {
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Simplex> simplices;
  std::vector<Scalar> weights;
  for (auto& [s, w] : pairs) {
    if (!simplices.empty() && simplices.back() == s) {
      throw DomainError("duplicate simplex in weighted complex");
    }
    simplices.push_back(std::move(s));
    weights.push_back(std::move(w));
  }
  return WeightedComplex(Complex(n, std::move(simplices)), std::move(weights), field);
}

std::vector<Multiset> balancing_faces(const Complex& complex) {
  std::vector<Multiset> faces{Multiset{}};
  for (std::size_t size = 1; size < complex.cardinality(); ++size) {
    std::vector<Multiset> level;
    for (const auto& s : complex.simplices()) {
      auto subs = sub_multisets(s, size);
      level.insert(level.end(), subs.begin(), subs.end());
    }
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
    faces.insert(faces.end(), level.begin(), level.end());
  }
  return faces;
}

Scalar balancing_sum(const WeightedComplex& wc, const Multiset& face) {
  if (face.cardinality() + 1 > wc.complex().cardinality()) {
    throw DomainError("balancing face has cardinality " + std::to_string(face.cardinality()) +
                      " but simplices have cardinality " +
                      std::to_string(wc.complex().cardinality()));
  }
  Scalar sum = Scalar::zero(wc.field());
  const auto simplices = wc.complex().simplices();
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    const std::int64_t k = embedding_multiplicity(face, simplices[i]);
    if (k != 0) sum += lift_integer(k, wc.field()) * wc.weights()[i];
  }
  return sum;
}

bool is_balanced(const WeightedComplex& wc) {
  for (const auto& face : balancing_faces(wc.complex())) {
    if (!balancing_sum(wc, face).is_zero()) return false;
  }
  return true;
}

Complex product(const Complex& a, const Complex& b) {
  if (a.n() != b.n()) throw DomainError("product of complexes on different label sets");
  std::vector<Simplex> out;
  out.reserve(a.size() * b.size());
  for (const auto& s1 : a.simplices()) {
    for (const auto& s2 : b.simplices()) out.emplace_back(merge(s1, s2));
  }
  return Complex(a.n(), std::move(out));
}

Restriction restrict_to_support(const WeightedComplex& wc) {
  if (!is_balanced(wc)) throw DomainError("restriction requires a balanced complex");
  std::vector<int> labels = wc.complex().support();
  std::map<int, int> relabel;
  for (std::size_t k = 0; k < labels.size(); ++k) relabel[labels[k]] = static_cast<int>(k) + 1;

  std::vector<std::pair<Simplex, Scalar>> pairs;
  const auto simplices = wc.complex().simplices();
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    std::vector<int> entries;
    for (int label : simplices[i].entries()) entries.push_back(relabel.at(label));
    pairs.emplace_back(Simplex(std::move(entries)), wc.weights()[i]);
  }
  const int n = static_cast<int>(labels.size()) + 1;
  return Restriction{WeightedComplex::from_pairs(n, std::move(pairs), wc.field()),
                     std::move(labels)};
}

}  // namespace balcx
