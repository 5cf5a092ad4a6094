#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace ringbuf {

double window_mean(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  double sum = std::accumulate(xs.begin(), xs.end(), 0.0);
  return sum / static_cast<double>(xs.size());
}

double window_variance(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  const double m = window_mean(xs);
  double acc = 0.0;
  for (double x : xs) acc += (x - m) * (x - m);
  return acc / static_cast<double>(xs.size() - 1);
}

double window_max(const std::vector<double>& xs) {
  double best = -INFINITY;
  for (double x : xs) {
    if (x > best) best = x;
  }
  return xs.empty() ? 0.0 : best;
}

double window_median(std::vector<double> xs) {
  if (xs.empty()) return 0.0;
  std::sort(xs.begin(), xs.end());
  const std::size_t mid = xs.size() / 2;
  return xs.size() % 2 ? xs[mid] : 0.5 * (xs[mid - 1] + xs[mid]);
}

}  // namespace ringbuf
