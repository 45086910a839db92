#include "permsort/stats.hpp"

#include <stdexcept>

namespace permsort {

namespace {

std::string join(const std::vector<int>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + "}";
}

}  // namespace

std::vector<int> lr_maxima_positions(const Permutation& perm) {
  std::vector<int> out;
  int best = 0;
  for (int i = 0; i < perm.size(); ++i) {
    if (perm[i] > best) {
      best = perm[i];
      out.push_back(i + 1);
    }
  }
  return out;
}

std::vector<int> rl_maxima_positions(const Permutation& perm) {
  std::vector<int> out;
  int best = 0;
  for (int i = perm.size() - 1; i >= 0; --i) {
    if (perm[i] > best) {
      best = perm[i];
      out.push_back(i + 1);
    }
  }
  return {out.rbegin(), out.rend()};
}

std::string updown_word(const Permutation& perm) {
  std::string w;
  for (int i = 0; i + 1 < perm.size(); ++i) w += perm[i] < perm[i + 1] ? 'u' : 'd';
  return w;
}

std::vector<int> descent_set(const Permutation& perm) {
  std::vector<int> out;
  for (int i = 0; i + 1 < perm.size(); ++i) {
    if (perm[i] > perm[i + 1]) out.push_back(i + 1);
  }
  return out;
}

int major_index(const Permutation& perm) {
  int sum = 0;
  for (int d : descent_set(perm)) sum += d;
  return sum;
}

int peak_count(const Permutation& perm) {
  int peaks = 0;
  for (int i = 1; i + 1 < perm.size(); ++i) {
    if (perm[i - 1] < perm[i] && perm[i] > perm[i + 1]) ++peaks;
  }
  return peaks;
}

int inversions(const Permutation& perm) {
  int inv = 0;
  for (int i = 0; i < perm.size(); ++i) {
    for (int j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++inv;
    }
  }
  return inv;
}

int zeil(const Permutation& perm) {
  const int n = perm.size();
  if (n == 0) return 0;
  const auto pos = perm.positions();
  int k = 1;
  while (k < n && pos[n - k] > pos[n - k + 1]) ++k;
  return k;
}

int rzeil(const Permutation& perm) {
  const int n = perm.size();
  if (n == 0) return 0;
  const auto pos = perm.positions();
  int k = 1;
  while (k < n && pos[n - k] < pos[n - k + 1]) ++k;
  return k;
}

StatVector stats(const Permutation& perm) {
  StatVector sv;
  sv.lr_maxima_positions = lr_maxima_positions(perm);
  sv.rl_maxima_positions = rl_maxima_positions(perm);
  sv.updown_word = updown_word(perm);
  sv.descent_set = descent_set(perm);
  sv.major_index = major_index(perm);
  sv.peak_count = peak_count(perm);
  sv.inversions = inversions(perm);
  sv.zeil = zeil(perm);
  sv.rzeil = rzeil(perm);
  return sv;
}

const std::vector<std::string>& stat_names() {
  static const std::vector<std::string> names = {
      "lr_maxima_positions", "rl_maxima_positions", "updown_word", "descent_set",
      "major_index",         "peak_count",          "inversions",  "zeil",
      "rzeil"};
  return names;
}

std::string stat_key(const StatVector& sv, const std::string& name) {
  if (name == "lr_maxima_positions") return join(sv.lr_maxima_positions);
  if (name == "rl_maxima_positions") return join(sv.rl_maxima_positions);
  if (name == "updown_word") return "w:" + sv.updown_word;
  if (name == "descent_set") return join(sv.descent_set);
  if (name == "major_index") return std::to_string(sv.major_index);
  if (name == "peak_count") return std::to_string(sv.peak_count);
  if (name == "inversions") return std::to_string(sv.inversions);
  if (name == "zeil") return std::to_string(sv.zeil);
  if (name == "rzeil") return std::to_string(sv.rzeil);
  throw std::invalid_argument("unknown statistic: " + name);
}

}  // namespace permsort
