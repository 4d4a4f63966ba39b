#include <sstream>

#include "gcluster/cluster.hpp"

namespace gcluster {

MultiQuiver::MultiQuiver(int mutable_count, int total, std::vector<int> multiplicities)
    : n_(mutable_count), s_(total), d_(std::move(multiplicities)) {
  if (n_ < 0 || s_ < n_) throw StructuralError("quiver needs 0 <= n <= s");
  if (static_cast<int>(d_.size()) != n_) throw StructuralError("one multiplicity per mutable vertex required");
  for (int d : d_)
    if (d < 1) throw StructuralError("multiplicities must be positive");
  b_.assign(static_cast<std::size_t>(s_) * static_cast<std::size_t>(s_), 0);
}

int MultiQuiver::multiplicity(int v) const {
  if (v < 0 || v >= s_) throw DomainError("vertex out of range");
  return v < n_ ? d_[static_cast<std::size_t>(v)] : 1;
}

std::size_t MultiQuiver::index(int from, int to) const {
  if (from < 0 || from >= s_ || to < 0 || to >= s_) throw DomainError("vertex out of range");
  return static_cast<std::size_t>(from) * static_cast<std::size_t>(s_) + static_cast<std::size_t>(to);
}

void MultiQuiver::set_arrows(int from, int to, int count) {
  if (count < 0) throw StructuralError("negative arrow count");
  if (from == to && count != 0) throw StructuralError("loops are not allowed");
  b_[index(from, to)] = count;
}

MultiQuiver MultiQuiver::with_frozen(int extra) const {
  MultiQuiver out(n_, s_ + extra, d_);
  for (int i = 0; i < s_; ++i)
    for (int j = 0; j < s_; ++j) out.set_arrows(i, j, arrows(i, j));
  return out;
}

void MultiQuiver::validate() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (arrows(i, j) > 0 && arrows(j, i) > 0)
        throw StructuralError("2-cycle between mutable vertices " + std::to_string(i + 1) + " and " +
                              std::to_string(j + 1));
}

MultiQuiver quiver_mutate(const MultiQuiver& q, int m) {
  if (!q.is_mutable(m)) throw DomainError("cannot mutate at frozen or out-of-range vertex " + std::to_string(m + 1));
  const int s = q.size();
  MultiQuiver out = q;
  for (int i = 0; i < s; ++i) {
    if (i == m || q.arrows(i, m) == 0) continue;
    for (int j = 0; j < s; ++j) {
      if (j == m || j == i || q.arrows(m, j) == 0) continue;
      const bool im = q.is_mutable(i), jm = q.is_mutable(j);
      int weight;
      if (im && jm) weight = q.multiplicity(m);
      else if (!im && jm) weight = q.multiplicity(j);
      else if (im && !jm) weight = q.multiplicity(i);
      else continue;
      out.add_arrows(i, j, weight * q.arrows(i, m) * q.arrows(m, j));
    }
  }
  for (int x = 0; x < s; ++x) {
    if (x == m) continue;
    int in = q.arrows(x, m), outc = q.arrows(m, x);
    out.set_arrows(x, m, outc);
    out.set_arrows(m, x, in);
  }
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j) {
      if (!q.is_mutable(i) && !q.is_mutable(j)) continue;
      int a = out.arrows(i, j), b = out.arrows(j, i), c = std::min(a, b);
      if (c > 0) {
        out.set_arrows(i, j, a - c);
        out.set_arrows(j, i, b - c);
      }
    }
  return out;
}

std::vector<int> exchange_exponents(const MultiQuiver& q, int m, int r) {
  if (!q.is_mutable(m)) throw DomainError("exchange relation at frozen vertex " + std::to_string(m + 1));
  const int d = q.multiplicity(m);
  if (r < 0 || r > d) throw DomainError("string index out of range");
  std::vector<int> e(static_cast<std::size_t>(q.size()), 0);
  for (int l = 0; l < q.size(); ++l) {
    if (l == m) continue;
    int out = q.arrows(m, l), in = q.arrows(l, m);
    if (q.is_mutable(l)) e[static_cast<std::size_t>(l)] = r * out + (d - r) * in;
    else e[static_cast<std::size_t>(l)] = (r * out) / d + ((d - r) * in) / d;
  }
  return e;
}

std::vector<int> y_variable(const MultiQuiver& q, int m) {
  if (!q.is_mutable(m)) throw DomainError("y-variable at frozen vertex " + std::to_string(m + 1));
  std::vector<int> e(static_cast<std::size_t>(q.size()), 0);
  for (int l = 0; l < q.size(); ++l) e[static_cast<std::size_t>(l)] = q.arrows(m, l) - q.arrows(l, m);
  return e;
}

std::string quiver_key(const MultiQuiver& q) {
  std::ostringstream os;
  os << q.mutable_count() << '/' << q.size() << ':';
  for (int v = 0; v < q.mutable_count(); ++v) os << q.multiplicity(v) << ',';
  os << ':';
  for (int i = 0; i < q.size(); ++i)
    for (int j = 0; j < q.size(); ++j)
      if (int a = q.arrows(i, j)) os << i << '>' << j << 'x' << a << ';';
  return os.str();
}

}  // namespace gcluster
