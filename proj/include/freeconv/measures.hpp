#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "freeconv/error.hpp"

namespace freeconv {

struct Atom {
  double position;
  double mass;
};

// A probability measure with finitely many atoms.  Always kept in canonical
// form: positions strictly increasing, duplicates merged, masses strictly
// positive and summing to one.
class DiscreteMeasure {
 public:
  std::span<const Atom> atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  const Atom& atom(std::size_t i) const { return atoms_[i]; }
  double min_position() const { return atoms_.front().position; }
  double max_position() const { return atoms_.back().position; }
  bool is_point_mass() const { return atoms_.size() == 1; }

  friend DiscreteMeasure make_discrete(
      std::span<const std::pair<double, double>> raw_atoms);

 private:
  DiscreteMeasure() = default;
  std::vector<Atom> atoms_;
};

// Builds the canonical form: sorts, merges equal positions, then renormalizes
// the total mass, but only when it already sums to 1 within 1e-9.  A larger
// deviation is rejected so caller bugs surface instead of being hidden.
inline DiscreteMeasure make_discrete(
    std::span<const std::pair<double, double>> raw_atoms) {
  require(!raw_atoms.empty(), errc::empty_measure);
  std::vector<Atom> atoms;
  atoms.reserve(raw_atoms.size());
  for (const auto& [pos, mass] : raw_atoms) {
    require(std::isfinite(pos) && std::isfinite(mass), errc::invalid_argument,
            "atom data must be finite");
    require(mass > 0.0, errc::nonpositive_mass);
    atoms.push_back({pos, mass});
  }
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.position < b.position; });
  std::vector<Atom> merged;
  merged.reserve(atoms.size());
  for (const Atom& a : atoms) {
    if (!merged.empty() && merged.back().position == a.position) {
      merged.back().mass += a.mass;
    } else {
      merged.push_back(a);
    }
  }
  double total = 0.0;
  for (const Atom& a : merged) total += a.mass;
  require(std::abs(total - 1.0) <= 1e-9, errc::mass_not_normalized,
          "masses sum to " + std::to_string(total));
  for (Atom& a : merged) a.mass /= total;
  DiscreteMeasure mu;
  mu.atoms_ = std::move(merged);
  return mu;
}

inline DiscreteMeasure make_discrete(
    std::initializer_list<std::pair<double, double>> raw_atoms) {
  return make_discrete(
      std::span<const std::pair<double, double>>(raw_atoms.begin(), raw_atoms.size()));
}

inline DiscreteMeasure point_mass(double a) { return make_discrete({{a, 1.0}}); }

struct WeightedNode {
  double position;
  double weight;
};

// A finite nonnegative measure given by weighted nodes.  The empty node set
// is legal and encodes the zero measure (point-mass generating pairs).
class WeightedNodeSet {
 public:
  WeightedNodeSet() = default;

  explicit WeightedNodeSet(std::span<const WeightedNode> nodes) {
    std::vector<WeightedNode> tmp;
    tmp.reserve(nodes.size());
    for (const WeightedNode& n : nodes) {
      require(std::isfinite(n.position) && std::isfinite(n.weight),
              errc::invalid_argument, "node data must be finite");
      require(n.weight >= 0.0, errc::negative_weight);
      if (n.weight > 0.0) tmp.push_back(n);
    }
    std::sort(tmp.begin(), tmp.end(), [](const WeightedNode& a, const WeightedNode& b) {
      return a.position < b.position;
    });
    for (const WeightedNode& n : tmp) {
      if (!nodes_.empty() && nodes_.back().position == n.position) {
        nodes_.back().weight += n.weight;
      } else {
        nodes_.push_back(n);
      }
    }
    for (const WeightedNode& n : nodes_) total_mass_ += n.weight;
  }

  WeightedNodeSet(std::initializer_list<WeightedNode> nodes)
      : WeightedNodeSet(std::span<const WeightedNode>(nodes.begin(), nodes.size())) {}

  static WeightedNodeSet zero() { return WeightedNodeSet(); }

  std::span<const WeightedNode> nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }
  double total_mass() const { return total_mass_; }

  WeightedNodeSet scaled(double factor) const {
    require(factor >= 0.0, errc::invalid_argument, "scale factor must be >= 0");
    WeightedNodeSet out(*this);
    out.total_mass_ = 0.0;
    for (WeightedNode& n : out.nodes_) {
      n.weight *= factor;
      out.total_mass_ += n.weight;
    }
    return out;
  }

 private:
  std::vector<WeightedNode> nodes_;
  double total_mass_ = 0.0;
};

// Shift gamma plus finite measure sigma: the generating data of a freely
// infinitely divisible law, and equally of the Nevanlinna form of a
// self-energy.
struct GeneratingPair {
  double gamma = 0.0;
  WeightedNodeSet sigma;
};

// Moment or cumulant sequences; values[j-1] holds the order-j entry.
using MomentVector = std::vector<double>;

inline constexpr int kMaxMomentOrder = 32;

inline MomentVector moments(const DiscreteMeasure& mu, int order) {
  require(order >= 1, errc::invalid_argument, "moment order must be >= 1");
  require(order <= kMaxMomentOrder, errc::order_too_large);
  MomentVector m(static_cast<std::size_t>(order), 0.0);
  for (const Atom& a : mu.atoms()) {
    double p = 1.0;
    for (int j = 0; j < order; ++j) {
      p *= a.position;
      m[static_cast<std::size_t>(j)] += a.mass * p;
    }
  }
  return m;
}

namespace detail {

// C[s][q] = sum over i_1+...+i_s = q (i_j >= 0) of m_{i_1}...m_{i_s},
// with m_0 = 1.  These are the coefficients of the free moment-cumulant
// recursion m_n = sum_{s=1..n} k_s C[s][n-s].
inline std::vector<std::vector<double>> composition_sums(
    std::span<const double> m, int smax, int qmax) {
  auto mom = [&](int j) { return j == 0 ? 1.0 : m[static_cast<std::size_t>(j - 1)]; };
  std::vector<std::vector<double>> c(
      static_cast<std::size_t>(smax) + 1,
      std::vector<double>(static_cast<std::size_t>(qmax) + 1, 0.0));
  for (int q = 0; q <= qmax; ++q) c[1][static_cast<std::size_t>(q)] = mom(q);
  for (int s = 2; s <= smax; ++s) {
    for (int q = 0; q <= qmax; ++q) {
      double acc = 0.0;
      for (int r = 0; r <= q; ++r) {
        acc += mom(r) * c[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(q - r)];
      }
      c[static_cast<std::size_t>(s)][static_cast<std::size_t>(q)] = acc;
    }
  }
  return c;
}

}  // namespace detail

// Triangular solve of the free moment-cumulant recursion for the cumulants.
inline MomentVector free_cumulants(const MomentVector& m) {
  const int n = static_cast<int>(m.size());
  require(n >= 1, errc::invalid_argument, "need at least one moment");
  require(n <= kMaxMomentOrder, errc::order_too_large);
  const auto c = detail::composition_sums(m, n, n);
  MomentVector k(m.size(), 0.0);
  for (int order = 1; order <= n; ++order) {
    double acc = m[static_cast<std::size_t>(order - 1)];
    for (int s = 1; s < order; ++s) {
      acc -= k[static_cast<std::size_t>(s - 1)] *
             c[static_cast<std::size_t>(s)][static_cast<std::size_t>(order - s)];
    }
    k[static_cast<std::size_t>(order - 1)] = acc;  // C[order][0] = 1
  }
  return k;
}

// Exact inverse of free_cumulants: runs the same recursion forward.  The
// composition sums for order n only involve moments of order < n, so the
// table can be rebuilt incrementally as moments become known.
inline MomentVector moments_from_cumulants(const MomentVector& k) {
  const int n = static_cast<int>(k.size());
  require(n >= 1, errc::invalid_argument, "need at least one cumulant");
  require(n <= kMaxMomentOrder, errc::order_too_large);
  MomentVector m(k.size(), 0.0);
  for (int order = 1; order <= n; ++order) {
    const auto c = detail::composition_sums(m, order, order);
    double acc = k[static_cast<std::size_t>(order - 1)];
    for (int s = 1; s < order; ++s) {
      acc += k[static_cast<std::size_t>(s - 1)] *
             c[static_cast<std::size_t>(s)][static_cast<std::size_t>(order - s)];
    }
    m[static_cast<std::size_t>(order - 1)] = acc;
  }
  return m;
}

// --- node-list text syntax, shared with the CLI ------------------------
//
// "t1:w1,t2:w2,..." with plain decimal reals, e.g. "0:1" or "-1:0.5,1:0.5".

namespace detail {

inline double parse_real(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  std::string buf(text);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(buf, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad number '" + buf + "'");
  }
  if (used != buf.size()) throw std::invalid_argument("bad number '" + buf + "'");
  return value;
}

}  // namespace detail

inline std::vector<std::pair<double, double>> parse_node_list(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty node list");
  std::vector<std::pair<double, double>> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view item = text.substr(start, comma - start);
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos)
      throw std::invalid_argument("node list items must look like t:w");
    out.emplace_back(detail::parse_real(item.substr(0, colon)),
                     detail::parse_real(item.substr(colon + 1)));
    start = comma + 1;
    if (comma == text.size()) break;
  }
  return out;
}

inline WeightedNodeSet parse_weighted_nodes(std::string_view text) {
  std::vector<WeightedNode> nodes;
  for (const auto& [t, w] : parse_node_list(text)) nodes.push_back({t, w});
  return WeightedNodeSet(nodes);
}

inline DiscreteMeasure parse_discrete(std::string_view text) {
  return make_discrete(std::span<const std::pair<double, double>>(parse_node_list(text)));
}

}  // namespace freeconv
