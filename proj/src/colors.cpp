#include "zonocube/colors.hpp"

#include <sstream>

namespace zonocube {

std::string ColorSet::to_string() const {
  if (empty()) return "{}";
  auto els = elements();
  if (max() <= 9) {
    std::string s;
    for (int c : els) s += static_cast<char>('0' + c);
    return s;
  }
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < els.size(); ++i) {
    if (i) os << ',';
    os << els[i];
  }
  os << '}';
  return os.str();
}

ColorSet involute(ColorSet x, int n) {
  if (n < 0 || n > 64) throw InvalidInput("color count " + std::to_string(n) + " out of range 0..64");
  if (!x.subset_of(ColorSet::full(n)))
    throw InvalidInput("involute: " + x.to_string() + " not a subset of [" + std::to_string(n) + "]");
  ColorSet out;
  for (int c : x.elements()) out = out.with(n + 1 - c);
  return out;
}

Stick stick_members(ColorSet g) {
  if (g.size() < 2)
    throw InvalidInput("stick_members: packet " + g.to_string() + " has fewer than 2 colors");
  Stick s;
  s.packet = g;
  auto els = g.elements();
  s.members.reserve(els.size());
  // Lex order on the (k-1)-subsets of g = drop the largest element first.
  for (size_t j = els.size(); j-- > 0;) s.members.push_back(g.without(els[j]));
  return s;
}

std::vector<ColorSet> enumerate_packets(int n, int k) {
  if (n < 0 || n > 64) throw InvalidInput("enumerate_packets: n out of range 0..64");
  if (k < 0 || k > n)
    throw InvalidInput("enumerate_packets: k=" + std::to_string(k) + " out of range 0.." +
                       std::to_string(n));
  std::vector<ColorSet> out;
  out.reserve(binomial(n, k));
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  for (;;) {
    out.push_back(ColorSet::of(cur));
    if (k == 0) break;
    // advance to the lex successor
    int i = k - 1;
    while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  uint64_t r = 1;
  for (int i = 0; i < k; ++i) {
    r = r * static_cast<uint64_t>(n - i);
    r /= static_cast<uint64_t>(i + 1);
  }
  return r;
}

SubsetFamily::SubsetFamily(int n, int k) : n_(n), k_(k), sets_(enumerate_packets(n, k)) {
  rank_.reserve(sets_.size() * 2);
  for (size_t i = 0; i < sets_.size(); ++i) rank_.emplace(sets_[i].bits(), static_cast<int>(i));
}

}  // namespace zonocube
