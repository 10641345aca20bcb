#include "balcx/picard.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

#include "balcx/errors.hpp"

namespace balcx {

namespace {

constexpr int kMaxPoints = 64;
// divisor_class_of visits every admissible index set.
constexpr int kMaxEnumeratedPoints = 24;

void require_valid_n(int n) {
  if (n < 5 || n > kMaxPoints) {
    throw DomainError("number of marked points must lie in [5, " + std::to_string(kMaxPoints) +
                      "], got " + std::to_string(n));
  }
}

void check_keys(const std::map<IndexSet, std::int64_t>& entries, int n) {
  for (const auto& [set, value] : entries) {
    if (!is_admissible(set, n)) {
      throw DomainError("index set {" + set.to_string() + "} is not admissible for n = " +
                        std::to_string(n));
    }
  }
}

std::map<IndexSet, std::int64_t> drop_zeros(const std::map<IndexSet, std::int64_t>& entries) {
  std::map<IndexSet, std::int64_t> out;
  for (const auto& [set, value] : entries) {
    if (value != 0) out.emplace(set, value);
  }
  return out;
}

}  // namespace

IndexSet::IndexSet(std::initializer_list<int> labels)
    : IndexSet(std::span<const int>(labels.begin(), labels.size())) {}

IndexSet::IndexSet(std::span<const int> labels) {
  for (int label : labels) {
    if (label < 1 || label > 63) {
      throw DomainError("index set label " + std::to_string(label) + " outside [1, 63]");
    }
    mask_ |= std::uint64_t{1} << label;
  }
}

IndexSet IndexSet::from_mask(std::uint64_t mask) {
  if (mask & 1U) throw DomainError("index set mask uses bit 0");
  IndexSet set;
  set.mask_ = mask;
  return set;
}

std::size_t IndexSet::size() const { return static_cast<std::size_t>(std::popcount(mask_)); }

std::vector<int> IndexSet::labels() const {
  std::vector<int> out;
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::string IndexSet::to_string() const {
  std::string out;
  for (int label : labels()) {
    if (!out.empty()) out += ',';
    out += std::to_string(label);
  }
  return out;
}

IndexSet IndexSet::parse(std::string_view text) {
  std::vector<int> labels;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto token = text.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw DomainError("malformed index set \"" + std::string(text) + "\"");
    }
    labels.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw DomainError("trailing comma in index set");
  }
  if (labels.empty()) throw DomainError("empty index set");
  if (!std::is_sorted(labels.begin(), labels.end()) ||
      std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
    throw DomainError("index set labels must be strictly ascending");
  }
  return IndexSet(std::span<const int>(labels));
}

std::strong_ordering operator<=>(IndexSet a, IndexSet b) {
  std::uint64_t x = a.mask_, y = b.mask_;
  while (x != 0 && y != 0) {
    const int lx = std::countr_zero(x), ly = std::countr_zero(y);
    if (lx != ly) return lx <=> ly;
    x &= x - 1;
    y &= y - 1;
  }
  // A proper prefix sorts first.
  return (x != 0) <=> (y != 0);
}

bool is_admissible(IndexSet set, int n) {
  const std::size_t size = set.size();
  if (size < 1 || static_cast<int>(size) > n - 4) return false;
  const std::uint64_t allowed = ((std::uint64_t{1} << (n - 1)) - 1) << 1;
  return (set.mask() & ~allowed) == 0;
}

DivisorClass::DivisorClass(int n, std::int64_t h, const std::map<IndexSet, std::int64_t>& e)
    : n_(n), h_(h), e_(drop_zeros(e)) {
  require_valid_n(n);
  check_keys(e_, n);
}

DivisorClass DivisorClass::exceptional(int n, IndexSet set) { return DivisorClass(n, 0, {{set, 1}}); }

std::int64_t DivisorClass::coefficient(IndexSet set) const {
  auto it = e_.find(set);
  return it == e_.end() ? 0 : it->second;
}

void DivisorClass::add_to(IndexSet set, std::int64_t delta) {
  if (!is_admissible(set, n_)) {
    throw DomainError("index set {" + set.to_string() + "} is not admissible");
  }
  auto& slot = e_[set];
  slot += delta;
  if (slot == 0) e_.erase(set);
}

void DivisorClass::require_same_n(const DivisorClass& other) const {
  if (n_ != other.n_) {
    throw DomainError("divisor classes on n = " + std::to_string(n_) + " and n = " +
                      std::to_string(other.n_));
  }
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& rhs) {
  require_same_n(rhs);
  h_ += rhs.h_;
  for (const auto& [set, value] : rhs.e_) add_to(set, value);
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& rhs) {
  require_same_n(rhs);
  h_ -= rhs.h_;
  for (const auto& [set, value] : rhs.e_) add_to(set, -value);
  return *this;
}

DivisorClass operator*(std::int64_t m, DivisorClass d) {
  if (m == 0) return DivisorClass(d.n_);
  d.h_ *= m;
  for (auto& [set, value] : d.e_) value *= m;
  return d;
}

DivisorClass class_add(const DivisorClass& a, const DivisorClass& b) { return a + b; }
DivisorClass class_sub(const DivisorClass& a, const DivisorClass& b) { return a - b; }
DivisorClass class_scale(std::int64_t m, const DivisorClass& d) { return m * d; }

CurveClass::CurveClass(int n, std::int64_t dot_h, const std::map<IndexSet, std::int64_t>& dot_e)
    : n_(n), dot_h_(dot_h), dot_e_(drop_zeros(dot_e)) {
  require_valid_n(n);
  check_keys(dot_e_, n);
}

DivisorClass divisor_class_of(const Complex& complex) {
  const int n = complex.n();
  require_valid_n(n);
  if (n > kMaxEnumeratedPoints) {
    throw DomainError("divisor_class_of enumerates all index sets and is limited to n <= " +
                      std::to_string(kMaxEnumeratedPoints));
  }
  const auto c = static_cast<std::int64_t>(complex.cardinality());
  std::vector<std::vector<std::pair<int, int>>> counts;
  for (const auto& s : complex.simplices()) counts.push_back(s.counts());

  std::map<IndexSet, std::int64_t> e;
  for_each_admissible(n, [&](IndexSet set) {
    std::int64_t best = 0;
    for (const auto& simplex_counts : counts) {
      std::int64_t inside = 0;
      for (const auto& [label, mult] : simplex_counts) {
        if (set.contains(label)) inside += mult;
      }
      best = std::max(best, inside);
      if (best == c) break;
    }
    if (best != c) e.emplace_hint(e.end(), set, -(c - best));
  });
  return DivisorClass(n, c, e);
}

DivisorClass boundary_binomial_class(int i, int j, int n) {
  require_valid_n(n);
  if (i == j || i < 1 || j < 1 || i > n - 1 || j > n - 1) {
    throw DomainError("binomial labels must be distinct elements of [1, " + std::to_string(n - 1) +
                      "]");
  }
  std::map<IndexSet, std::int64_t> e;
  for_each_admissible(n, [&](IndexSet set) {
    if (!set.contains(i) && !set.contains(j)) e.emplace_hint(e.end(), set, -1);
  });
  return DivisorClass(n, 1, e);
}

std::int64_t pair(const CurveClass& curve, const DivisorClass& divisor) {
  if (curve.n() != divisor.n()) {
    throw DomainError("pairing a curve on n = " + std::to_string(curve.n()) +
                      " with a divisor on n = " + std::to_string(divisor.n()));
  }
  std::int64_t total = curve.dot_h() * divisor.h();
  for (const auto& [set, value] : curve.dot_e()) total += value * divisor.coefficient(set);
  return total;
}

bool is_effective_sum_of_exceptionals(const DivisorClass& d) {
  if (d.h() != 0) return false;
  return std::all_of(d.e().begin(), d.e().end(), [](const auto& kv) { return kv.second >= 0; });
}

std::optional<Complex> unique_complex_for_class(const DivisorClass& d, std::size_t c) {
  if (c < 1 || static_cast<int>(c) > d.n() - 4) {
    throw DomainError("reconstruction needs 1 <= c <= n - 4 (c = " + std::to_string(c) +
                      ", n = " + std::to_string(d.n()) + ")");
  }
  if (d.h() != static_cast<std::int64_t>(c)) return std::nullopt;
  std::vector<Simplex> simplices;
  for_each_admissible(d.n(), [&](IndexSet set) {
    if (set.size() == c && d.coefficient(set) == 0) simplices.emplace_back(set.labels());
  });
  if (simplices.empty()) return std::nullopt;
  Complex candidate(d.n(), std::move(simplices));
  if (divisor_class_of(candidate) != d) return std::nullopt;
  return candidate;
}

}  // namespace balcx
