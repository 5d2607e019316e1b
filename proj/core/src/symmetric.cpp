#include "intcomb/symmetric.hpp"

#include <sstream>

namespace intcomb {

std::string partition_to_string(const Partition& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ')';
  return os.str();
}

bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

int partition_size(const Partition& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

namespace {

void build(int remaining, int max_part, int parts_left, Partition& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  if (parts_left == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    build(remaining - p, p, parts_left - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_parts) {
  std::vector<Partition> out;
  if (n < 0) return out;
  Partition cur;
  build(n, n, max_parts, cur, out);
  return out;
}

bool dominated_by(const Partition& a, const Partition& b) {
  int sa = 0, sb = 0;
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa > sb) return false;
  }
  return sa == sb;
}

Partition rectangle(int n, int alpha) {
  if (n < 0 || alpha < 0) throw std::invalid_argument("negative rectangle dimensions");
  if (n == 0) return {};
  return Partition(static_cast<std::size_t>(alpha), n);
}

}  // namespace intcomb
