#include "sftglue/symbolic_point.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

#include "sftglue/error.hpp"

namespace sftglue {
namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Shortest prefix whose repetition spells w.
Word primitive_root(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < n && repeats; ++i) repeats = w[i] == w[i - d];
    if (repeats) return Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return w;
}

std::int64_t lcm_of(std::size_t a, std::size_t b) {
  return static_cast<std::int64_t>(std::lcm(a, b));
}

}  // namespace

SymbolicPoint::SymbolicPoint(Word left_period, Word core, Word right_period,
                             std::int64_t anchor)
    : left_(std::move(left_period)),
      core_(std::move(core)),
      right_(std::move(right_period)),
      anchor_(anchor) {
  if (left_.empty() || right_.empty()) {
    throw InputError("left_period and right_period must be non-empty");
  }
  canonicalize();
}

SymbolicPoint SymbolicPoint::periodic(Word period, std::int64_t anchor) {
  Word copy = period;
  return SymbolicPoint(std::move(copy), {}, std::move(period), anchor);
}

Symbol SymbolicPoint::at(std::int64_t k) const noexcept {
  if (k < anchor_) {
    const auto p = static_cast<std::int64_t>(left_.size());
    return left_[static_cast<std::size_t>(floor_mod(k - anchor_, p))];
  }
  const std::int64_t e = core_end();
  if (k < e) return core_[static_cast<std::size_t>(k - anchor_)];
  const auto q = static_cast<std::int64_t>(right_.size());
  return right_[static_cast<std::size_t>((k - e) % q)];
}

Word SymbolicPoint::coordinates(std::int64_t first, std::size_t count) const {
  Word out(count);
  for (std::size_t i = 0; i < count; ++i)
    out[i] = at(first + static_cast<std::int64_t>(i));
  return out;
}

void SymbolicPoint::canonicalize() {
  left_ = primitive_root(left_);
  right_ = primitive_root(right_);
  const auto p = static_cast<std::int64_t>(left_.size());
  const auto q = static_cast<std::int64_t>(right_.size());
  const std::int64_t a = anchor_;
  const std::int64_t e = core_end();

  auto make_periodic = [this](std::size_t period) {
    Word w = coordinates(0, period);
    left_ = w;
    right_ = std::move(w);
    core_.clear();
    anchor_ = 0;
  };

  // Left tail is p-periodic on (-inf, left_front). Once the check survives
  // p + q positions past the core, both tails share a period and the whole
  // sequence is periodic.
  std::int64_t left_front = a;
  const std::int64_t left_limit = e + p + q;
  while (left_front < left_limit && at(left_front) == at(left_front - p))
    ++left_front;
  if (left_front == left_limit) {
    make_periodic(left_.size());
    return;
  }

  std::int64_t right_back = e - 1;
  const std::int64_t right_limit = a - p - q;
  while (right_back >= right_limit && at(right_back) == at(right_back + q))
    --right_back;
  if (right_back < right_limit) {
    make_periodic(right_.size());
    return;
  }

  const std::int64_t new_end = std::max(left_front, right_back + 1);
  Word new_core = coordinates(left_front, static_cast<std::size_t>(new_end - left_front));
  Word new_left = coordinates(left_front - p, left_.size());
  Word new_right = coordinates(new_end, right_.size());
  core_ = std::move(new_core);
  left_ = std::move(new_left);
  right_ = std::move(new_right);
  anchor_ = left_front;
}

std::strong_ordering operator<=>(const SymbolicPoint& a,
                                 const SymbolicPoint& b) {
  return std::tie(a.anchor_, a.core_, a.left_, a.right_) <=>
         std::tie(b.anchor_, b.core_, b.left_, b.right_);
}

bool SymbolicPoint::is_admissible_in(const SftGraph& g) const {
  auto valid = [&](const Word& w) {
    return std::all_of(w.begin(), w.end(),
                       [&](Symbol s) { return s < g.size(); });
  };
  if (!valid(left_) || !valid(core_) || !valid(right_)) return false;
  const std::int64_t first = anchor_ - static_cast<std::int64_t>(left_.size()) - 1;
  const std::int64_t last = core_end() + static_cast<std::int64_t>(right_.size());
  for (std::int64_t k = first; k < last; ++k)
    if (!g.has_edge(at(k), at(k + 1))) return false;
  return true;
}

SymbolicPoint shift(const SymbolicPoint& x, std::int64_t n) {
  return SymbolicPoint(x.left_period(), x.core(), x.right_period(),
                       x.anchor() - n);
}

SymbolicPoint reflect(const SymbolicPoint& x) {
  Word left(x.right_period().rbegin(), x.right_period().rend());
  Word core(x.core().rbegin(), x.core().rend());
  Word right(x.left_period().rbegin(), x.left_period().rend());
  return SymbolicPoint(std::move(left), std::move(core), std::move(right),
                       1 - x.core_end());
}

std::optional<std::int64_t> first_disagreement_at_or_after(
    const SymbolicPoint& x, const SymbolicPoint& y, std::int64_t from) {
  const std::int64_t start =
      std::max(from, std::max(x.core_end(), y.core_end()));
  const std::int64_t stop =
      start + lcm_of(x.right_period().size(), y.right_period().size());
  for (std::int64_t k = from; k < stop; ++k)
    if (x.at(k) != y.at(k)) return k;
  return std::nullopt;
}

std::optional<std::int64_t> last_disagreement_at_or_before(
    const SymbolicPoint& x, const SymbolicPoint& y, std::int64_t from) {
  const std::int64_t start =
      std::min(from, std::min(x.anchor(), y.anchor()) - 1);
  const std::int64_t stop =
      start - lcm_of(x.left_period().size(), y.left_period().size());
  for (std::int64_t k = from; k > stop; --k)
    if (x.at(k) != y.at(k)) return k;
  return std::nullopt;
}

Radius agreement_radius(const SymbolicPoint& x, const SymbolicPoint& y) {
  const auto right = first_disagreement_at_or_after(x, y, 0);
  const auto left = last_disagreement_at_or_before(x, y, 0);
  Radius r = kIdentical;
  if (right) r = std::min(r, *right);
  if (left) r = std::min(r, -*left);
  return r;
}

Radius agreement_radius(const SymbolicPoint& x, const SymbolicPoint& y,
                        Radius cap) {
  for (Radius r = 0; r <= cap; ++r) {
    if (x.at(r) != y.at(r) || x.at(-r) != y.at(-r)) return r;
  }
  return x == y ? kIdentical : cap + 1;
}

Resolution::Resolution(int n) : n_(n) {
  if (n < 1) {
    throw InputError("resolution N must be >= 1, got " + std::to_string(n));
  }
}

double Resolution::epsilon() const noexcept { return std::ldexp(1.0, -n_); }

double distance_from_radius(Radius r) noexcept {
  if (r == kIdentical) return 0.0;
  return std::ldexp(1.0, static_cast<int>(-std::min<Radius>(r, 2000)));
}

Word shortest_cycle(const SftGraph& g, Symbol v) {
  return shortest_walk(g, v, v);
}

SymbolicPoint point_of(const SftGraph& g, std::span<const Symbol> w) {
  if (w.empty()) throw InputError("point_of needs a non-empty word");
  if (!g.admits(w)) {
    throw InputError("word \"" + format_word(w) + "\" is not admissible");
  }
  if (!is_irreducible(g)) {
    throw HypothesisError(
        "point_of requires an irreducible graph; periodic completion is not "
        "guaranteed otherwise");
  }
  const Word back_cycle = shortest_cycle(g, w.front());
  Word left;
  left.reserve(back_cycle.size());
  left.push_back(w.front());
  left.insert(left.end(), back_cycle.begin(), back_cycle.end() - 1);
  Word right = shortest_cycle(g, w.back());
  return SymbolicPoint(std::move(left), Word(w.begin(), w.end()),
                       std::move(right), 0);
}

}  // namespace sftglue
