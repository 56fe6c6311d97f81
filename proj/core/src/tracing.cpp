#include "sftglue/tracing.hpp"

#include <algorithm>
#include <cassert>

#include "sftglue/error.hpp"

namespace sftglue {

OrbitSequence::OrbitSequence(std::vector<OrbitBlock> blocks)
    : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw InputError("an orbit sequence needs a block");
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    if (blocks_[j].length < 0) {
      throw InputError("orbit block " + std::to_string(j + 1) +
                       " has negative length");
    }
  }
}

bool OrbitSequence::is_admissible_in(const SftGraph& g) const {
  return std::all_of(blocks_.begin(), blocks_.end(), [&](const OrbitBlock& b) {
    return b.point.is_admissible_in(g);
  });
}

GapSchedule::GapSchedule(std::vector<std::int64_t> gaps)
    : gaps_(std::move(gaps)) {
  for (std::size_t j = 0; j < gaps_.size(); ++j) {
    if (gaps_[j] < 1) {
      throw InputError("gap " + std::to_string(j + 1) + " is " +
                       std::to_string(gaps_[j]) + "; gaps must be >= 1");
    }
  }
}

std::int64_t GapSchedule::max_gap() const noexcept {
  return gaps_.empty() ? 0 : *std::max_element(gaps_.begin(), gaps_.end());
}

std::vector<std::int64_t> GapSchedule::starts(const OrbitSequence& c) const {
  if (gaps_.size() + 1 != c.size()) {
    throw InputError("gap schedule has " + std::to_string(gaps_.size()) +
                     " entries for " + std::to_string(c.size()) +
                     " blocks; expected " + std::to_string(c.size() - 1));
  }
  std::vector<std::int64_t> s(c.size(), 0);
  for (std::size_t j = 1; j < c.size(); ++j)
    s[j] = s[j - 1] + c[j - 1].length + gaps_[j - 1];
  return s;
}

namespace {

void require_admissible(const SftGraph& g, const OrbitSequence& c) {
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (!c[j].point.is_admissible_in(g)) {
      throw InputError("orbit block " + std::to_string(j + 1) +
                       " is not a point of the shift space");
    }
  }
}

std::int64_t sign_of(Direction d) { return d == Direction::kForward ? 1 : -1; }

[[maybe_unused]] Direction opposite(Direction d) {
  return d == Direction::kForward ? Direction::kInverse : Direction::kForward;
}

}  // namespace

bool verify_trace(const SftGraph& g, const SymbolicPoint& z,
                  const OrbitSequence& c, const GapSchedule& gap,
                  Resolution n, Direction direction) {
  const auto s = gap.starts(c);
  require_admissible(g, c);
  if (!z.is_admissible_in(g)) return false;
  const std::int64_t sign = sign_of(direction);
  const std::int64_t r = n.window_radius();
  for (std::size_t j = 0; j < c.size(); ++j) {
    const SymbolicPoint& x = c[j].point;
    for (std::int64_t l = 0; l <= c[j].length; ++l) {
      // d(f^{s_j+l} z, f^l x_j) <= 2^-N  <=>  agreement on |k| <= N-1.
      const std::int64_t zt = sign * (s[j] + l);
      const std::int64_t xt = sign * l;
      for (std::int64_t k = -r; k <= r; ++k)
        if (z.at(zt + k) != x.at(xt + k)) return false;
    }
  }
  return true;
}

std::int64_t gap_bound(const SftGraph& g, Resolution n) {
  if (!is_irreducible(g)) {
    throw HypothesisError("gap bound requires an irreducible graph");
  }
  return 2 * static_cast<std::int64_t>(n.window_radius()) +
         static_cast<std::int64_t>(g.size());
}

Trace construct_trace(const SftGraph& g, const OrbitSequence& c,
                      Resolution n) {
  if (!is_irreducible(g)) {
    throw HypothesisError(
        "construct_trace requires an irreducible graph; gluing may be "
        "impossible otherwise");
  }
  require_admissible(g, c);
  const std::int64_t r = n.window_radius();

  Word pinned;
  std::vector<std::int64_t> gaps;
  for (std::size_t j = 0; j < c.size(); ++j) {
    const Word window = c[j].point.coordinates(
        -r, static_cast<std::size_t>(c[j].length + 2 * r + 1));
    if (j > 0) {
      const Word walk = shortest_walk(g, pinned.back(), window.front());
      assert(!walk.empty() && walk.size() <= g.size());
      pinned.insert(pinned.end(), walk.begin(), walk.end() - 1);
      gaps.push_back(2 * r + static_cast<std::int64_t>(walk.size()));
    }
    pinned.insert(pinned.end(), window.begin(), window.end());
  }
  // Outside the pinned span z follows x_1 to the left and x_k to the right.
  const SymbolicPoint& first = c[0].point;
  const SymbolicPoint& last = c[c.size() - 1].point;
  const std::int64_t lo = std::min(first.anchor(), -r);
  const std::int64_t pinned_end = -r + static_cast<std::int64_t>(pinned.size());
  const std::int64_t s_last = pinned_end - (c[c.size() - 1].length + r + 1);
  const std::int64_t hi = std::max(last.core_end(), c[c.size() - 1].length + r + 1);

  Word core = first.coordinates(lo, static_cast<std::size_t>(-r - lo));
  core.insert(core.end(), pinned.begin(), pinned.end());
  const Word tail = last.coordinates(pinned_end - s_last,
                                     static_cast<std::size_t>(hi - (pinned_end - s_last)));
  core.insert(core.end(), tail.begin(), tail.end());
  const auto p = static_cast<std::int64_t>(first.left_period().size());
  SymbolicPoint z(first.coordinates(lo - p, static_cast<std::size_t>(p)), std::move(core),
                  last.coordinates(hi, last.right_period().size()), lo);
  return {std::move(z), GapSchedule(std::move(gaps))};
}

ReversedTrace reverse_trace(const SftGraph& g, const SymbolicPoint& z,
                            const OrbitSequence& c, const GapSchedule& gap,
                            Resolution n, Direction direction) {
  if (!verify_trace(g, z, c, gap, n, direction)) {
    throw PreconditionError("reverse_trace: input trace does not verify");
  }
  const std::int64_t sign = sign_of(direction);
  const auto s = gap.starts(c);
  const std::size_t k = c.size();

  std::vector<OrbitBlock> blocks;
  blocks.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    const OrbitBlock& b = c[k - 1 - j];
    blocks.push_back({shift(b.point, sign * b.length), b.length});
  }
  std::vector<std::int64_t> gaps(gap.gaps().rbegin(), gap.gaps().rend());
  SymbolicPoint z_end = shift(z, sign * (s[k - 1] + c[k - 1].length));

  ReversedTrace out{std::move(z_end), OrbitSequence(std::move(blocks)),
                    GapSchedule(std::move(gaps))};
  assert(verify_trace(g, out.z, out.sequence, out.gap, n, opposite(direction)));
  return out;
}

SymbolicPoint shadow(const SftGraph& g,
                     const std::vector<SymbolicPoint>& pseudo_orbit,
                     Resolution n) {
  if (pseudo_orbit.empty()) throw InputError("empty pseudo-orbit");
  for (std::size_t t = 0; t < pseudo_orbit.size(); ++t) {
    if (!pseudo_orbit[t].is_admissible_in(g)) {
      throw InputError("pseudo-orbit entry " + std::to_string(t) +
                       " is not a point of the shift space");
    }
  }
  const std::int64_t r = n.window_radius();
  for (std::size_t t = 0; t + 1 < pseudo_orbit.size(); ++t) {
    const SymbolicPoint& a = pseudo_orbit[t];
    const SymbolicPoint& b = pseudo_orbit[t + 1];
    for (std::int64_t k = -r; k <= r; ++k) {
      if (a.at(k + 1) != b.at(k)) {
        throw InputError("not a delta-pseudo-orbit: jump at index " +
                         std::to_string(t) + " exceeds 2^-" +
                         std::to_string(n.value()));
      }
    }
  }

  const SymbolicPoint& first = pseudo_orbit.front();
  const SymbolicPoint& last = pseudo_orbit.back();
  const std::int64_t lo = std::min<std::int64_t>(0, first.anchor());
  const std::int64_t hi = std::max<std::int64_t>(1, last.core_end());

  Word core = first.coordinates(lo, static_cast<std::size_t>(-lo));
  for (const auto& x : pseudo_orbit) core.push_back(x.at(0));
  const Word tail = last.coordinates(1, static_cast<std::size_t>(hi - 1));
  core.insert(core.end(), tail.begin(), tail.end());

  const auto p = static_cast<std::int64_t>(first.left_period().size());
  const auto q = last.right_period().size();
  return SymbolicPoint(first.coordinates(lo - p, static_cast<std::size_t>(p)),
                       std::move(core),
                       last.coordinates(hi, q), lo);
}

}  // namespace sftglue
