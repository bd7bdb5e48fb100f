#include "wsys/perm.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>

#include "wsys/errors.hpp"

namespace wsys {

Perm::Perm(std::vector<std::uint32_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size() + 1, false);
  for (auto v : img_) {
    if (v < 1 || v > img_.size()) {
      throw ParseError("image " + std::to_string(v) + " out of range 1.." +
                       std::to_string(img_.size()));
    }
    if (seen[v]) throw ParseError("not a bijection: " + std::to_string(v) + " repeated");
    seen[v] = true;
  }
}

Perm Perm::identity(std::uint32_t m) {
  std::vector<std::uint32_t> img(m);
  std::iota(img.begin(), img.end(), 1u);
  return Perm(std::move(img));
}

Perm Perm::standard_cycle(std::uint32_t m) {
  std::vector<std::uint32_t> img(m);
  for (std::uint32_t i = 0; i < m; ++i) img[i] = (i + 1) % m + 1;
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<std::uint32_t> inv(img_.size());
  for (std::uint32_t i = 0; i < img_.size(); ++i) inv[img_[i] - 1] = i + 1;
  return Perm(std::move(inv));
}

Perm Perm::compose(const Perm& other) const {
  std::vector<std::uint32_t> out(img_.size());
  for (std::uint32_t i = 0; i < img_.size(); ++i) out[i] = img_[other.img_[i] - 1];
  return Perm(std::move(out));
}

Perm Perm::rotated(std::uint32_t steps) const {
  const auto m = size();
  if (m == 0) return *this;
  steps %= m;
  std::vector<std::uint32_t> out(m);
  // point i moves to i + steps
  for (std::uint32_t i = 0; i < m; ++i) out[(i + steps) % m] = (img_[i] - 1 + steps) % m + 1;
  return Perm(std::move(out));
}

bool Perm::is_chord_diagram() const {
  if (img_.size() % 2 != 0) return false;
  for (std::uint32_t i = 1; i <= size(); ++i) {
    if ((*this)(i) == i || (*this)((*this)(i)) != i) return false;
  }
  return true;
}

std::string Perm::key() const {
  std::string k(img_.size(), '\0');
  for (std::size_t i = 0; i < img_.size(); ++i) k[i] = static_cast<char>(img_[i]);
  return k;
}

// ---------------------------------------------------------------- text

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::uint32_t> parse_numbers(std::string_view s) {
  std::vector<std::uint32_t> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError(std::string("unexpected character '") + c + "' in permutation");
    }
    std::uint64_t v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
      if (v > 1'000'000) throw ParseError("point out of range");
      ++i;
    }
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

}  // namespace

Perm parse_perm(std::string_view text, std::optional<std::uint32_t> m) {
  const std::string t = trim(text);
  if (t.empty() || t == "()") return Perm::identity(m.value_or(0));

  if (t.front() != '(') {
    auto img = parse_numbers(t);
    if (m && *m != img.size()) {
      throw ParseError("one-line permutation has " + std::to_string(img.size()) +
                       " points, expected " + std::to_string(*m));
    }
    return Perm(std::move(img));
  }

  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t i = 0;
  while (i < t.size()) {
    if (std::isspace(static_cast<unsigned char>(t[i]))) {
      ++i;
      continue;
    }
    if (t[i] != '(') throw ParseError("expected '(' in cycle notation");
    const auto close = t.find(')', i);
    if (close == std::string::npos) throw ParseError("unbalanced '(' in cycle notation");
    cycles.push_back(parse_numbers(std::string_view(t).substr(i + 1, close - i - 1)));
    i = close + 1;
  }
  std::uint32_t size = 0;
  for (const auto& c : cycles)
    for (auto v : c) size = std::max(size, v);
  if (m) {
    if (size > *m) throw ParseError("point " + std::to_string(size) + " exceeds m=" + std::to_string(*m));
    size = *m;
  }
  std::vector<std::uint32_t> img(size, 0);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      const auto from = c[k];
      if (from == 0) throw ParseError("points are numbered from 1");
      if (img[from - 1] != 0) throw ParseError("point " + std::to_string(from) + " repeated");
      img[from - 1] = c[(k + 1) % c.size()];
    }
  }
  for (std::uint32_t p = 0; p < size; ++p)
    if (img[p] == 0) img[p] = p + 1;
  return Perm(std::move(img));
}

std::string format_perm(const Perm& p) {
  std::string out;
  for (std::uint32_t i = 1; i <= p.size(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(p(i));
  }
  return out;
}

std::string format_cycles(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size() + 1, false);
  for (std::uint32_t i = 1; i <= p.size(); ++i) {
    if (seen[i] || p(i) == i) continue;
    out += '(';
    for (std::uint32_t j = i; !seen[j]; j = p(j)) {
      if (j != i) out += ' ';
      out += std::to_string(j);
      seen[j] = true;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

// ---------------------------------------------------------------- counts

std::vector<std::uint32_t> cycle_lengths(const Perm& p) {
  std::vector<std::uint32_t> out;
  std::vector<bool> seen(p.size() + 1, false);
  for (std::uint32_t i = 1; i <= p.size(); ++i) {
    if (seen[i]) continue;
    std::uint32_t len = 0;
    for (std::uint32_t j = i; !seen[j]; j = p(j)) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  return out;
}

std::uint32_t cycle_count(const Perm& p) {
  return static_cast<std::uint32_t>(cycle_lengths(p).size());
}

std::uint32_t face_count(const Perm& p) {
  const auto m = p.size();
  if (m == 0) return 1;
  const Perm inv = p.inverse();
  std::vector<std::uint32_t> phi(m);
  for (std::uint32_t i = 1; i <= m; ++i) phi[i - 1] = inv(i) % m + 1;
  return cycle_count(Perm(std::move(phi)));
}

Perm subperm(const Perm& p, std::uint64_t mask) {
  const auto m = p.size();
  std::vector<std::uint32_t> rank(m + 1, 0);
  std::uint32_t k = 0;
  for (std::uint32_t i = 1; i <= m; ++i)
    if ((mask >> (i - 1)) & 1u) rank[i] = ++k;
  std::vector<std::uint32_t> img(k);
  for (std::uint32_t i = 1; i <= m; ++i) {
    if (!rank[i]) continue;
    std::uint32_t j = p(i);
    while (!rank[j]) j = p(j);
    img[rank[i] - 1] = rank[j];
  }
  return Perm(std::move(img));
}

Perm subperm(const Perm& p, const std::vector<std::uint32_t>& points) {
  std::uint64_t mask = 0;
  for (auto v : points) {
    if (v < 1 || v > p.size()) throw DomainError("subset point out of range");
    mask |= std::uint64_t{1} << (v - 1);
  }
  return subperm(p, mask);
}

Perm concat(const Perm& a, const Perm& b) {
  std::vector<std::uint32_t> img = a.images();
  for (auto v : b.images()) img.push_back(v + a.size());
  return Perm(std::move(img));
}

std::vector<Perm> all_perms(std::uint32_t m) {
  std::vector<std::uint32_t> img(m);
  std::iota(img.begin(), img.end(), 1u);
  std::vector<Perm> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

namespace {

void extend_matchings(std::vector<std::uint32_t>& img, std::vector<Perm>& out) {
  auto first = std::find(img.begin(), img.end(), 0u);
  if (first == img.end()) {
    out.emplace_back(img);
    return;
  }
  const auto i = static_cast<std::uint32_t>(first - img.begin());
  for (std::uint32_t j = i + 1; j < img.size(); ++j) {
    if (img[j] != 0) continue;
    img[i] = j + 1;
    img[j] = i + 1;
    extend_matchings(img, out);
    img[i] = img[j] = 0;
  }
}

}  // namespace

std::vector<Perm> all_chord_diagrams(std::uint32_t n) {
  std::vector<std::uint32_t> img(2 * n, 0);
  std::vector<Perm> out;
  extend_matchings(img, out);
  return out;
}

// ---------------------------------------------------------------- diagrams

std::vector<std::uint32_t> chord_index(const Perm& d) {
  if (!d.is_chord_diagram()) throw DomainError("not a chord diagram: " + format_perm(d));
  std::vector<std::uint32_t> idx(d.size() + 1, 0);
  std::uint32_t next = 0;
  for (std::uint32_t i = 1; i <= d.size(); ++i) {
    if (d(i) > i) {
      idx[i] = idx[d(i)] = next++;
    }
  }
  return idx;
}

Graph intersection_graph(const Perm& d) {
  if (!d.is_chord_diagram()) throw DomainError("not a chord diagram: " + format_perm(d));
  std::vector<std::pair<std::uint32_t, std::uint32_t>> ends;
  for (std::uint32_t i = 1; i <= d.size(); ++i)
    if (d(i) > i) ends.emplace_back(i, d(i));
  Graph g(static_cast<std::uint32_t>(ends.size()));
  for (std::uint32_t i = 0; i < ends.size(); ++i) {
    for (std::uint32_t j = i + 1; j < ends.size(); ++j) {
      const auto [a1, a2] = ends[i];
      const auto [b1, b2] = ends[j];
      const bool cross = (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2);
      if (cross) g.set_edge(i + 1, j + 1, true);
    }
  }
  return g;
}

std::uint64_t chord_points(const Perm& d, std::uint64_t chord_mask) {
  const auto idx = chord_index(d);
  std::uint64_t pts = 0;
  for (std::uint32_t i = 1; i <= d.size(); ++i)
    if ((chord_mask >> idx[i]) & 1u) pts |= std::uint64_t{1} << (i - 1);
  return pts;
}

Perm sub_diagram(const Perm& d, std::uint64_t chord_mask) {
  return subperm(d, chord_points(d, chord_mask));
}

namespace {

/// Permutation induced on a rearranged circle: `order[k]` is the original
/// point now at position k+1. Fills `pos` (original point -> new position).
Perm relabel_by_order(const Perm& p, const std::vector<std::uint32_t>& order,
                      std::vector<std::uint32_t>& pos) {
  pos.assign(p.size() + 1, 0);
  for (std::uint32_t k = 0; k < order.size(); ++k) pos[order[k]] = k + 1;
  std::vector<std::uint32_t> img(p.size());
  for (std::uint32_t k = 0; k < order.size(); ++k) img[k] = pos[p(order[k])];
  return Perm(std::move(img));
}

Orbit2 checked_two_cycle(const Perm& p, Orbit2 o) {
  auto [x, y] = o;
  if (x > y) std::swap(x, y);
  if (x < 1 || y > p.size() || x == y || p(x) != y || p(y) != x) {
    throw DomainError("(" + std::to_string(o.first) + " " + std::to_string(o.second) +
                      ") is not a 2-cycle of " + format_perm(p));
  }
  return {x, y};
}

}  // namespace

Perm perm_pivot(const Perm& p, Orbit2 a, Orbit2 b) {
  a = checked_two_cycle(p, a);
  b = checked_two_cycle(p, b);
  if (b.first < a.first) std::swap(a, b);
  const auto [a1, a2] = a;
  const auto [b1, b2] = b;
  if (!(a1 < b1 && b1 < a2 && a2 < b2)) throw DomainError("pivot orbits do not interlace");

  auto run = [](std::uint32_t from, std::uint32_t to, std::vector<std::uint32_t>& out) {
    for (std::uint32_t i = from; i < to; ++i) out.push_back(i);
  };
  // A a1 B b1 C a2 D b2 E  ->  A a1 D b1 C a2 B b2 E
  std::vector<std::uint32_t> order;
  order.reserve(p.size());
  run(1, a1, order);
  order.push_back(a1);
  run(a2 + 1, b2, order);
  order.push_back(b1);
  run(b1 + 1, a2, order);
  order.push_back(a2);
  run(a1 + 1, b1, order);
  order.push_back(b2);
  run(b2 + 1, p.size() + 1, order);
  std::vector<std::uint32_t> pos;
  return relabel_by_order(p, order, pos);
}

std::pair<Orbit2, Orbit2> pivot_orbits(Orbit2 a, Orbit2 b) {
  if (a.first > a.second) std::swap(a.first, a.second);
  if (b.first > b.second) std::swap(b.first, b.second);
  const bool swapped = b.first < a.first;
  if (swapped) std::swap(a, b);
  const auto [a1, a2] = a;
  const auto [b1, b2] = b;
  if (!(a1 < b1 && b1 < a2 && a2 < b2)) throw DomainError("pivot orbits do not interlace");
  const std::uint32_t nb = b1 - a1 - 1, nc = a2 - b1 - 1, nd = b2 - a2 - 1;
  const std::uint32_t p_b1 = a1 + nd + 1;
  const std::uint32_t p_a2 = p_b1 + nc + 1;
  const std::uint32_t p_b2 = p_a2 + nb + 1;
  std::pair<Orbit2, Orbit2> out{{a1, p_a2}, {p_b1, p_b2}};
  if (swapped) std::swap(out.first, out.second);
  return out;
}

std::vector<std::pair<Orbit2, Orbit2>> interlacing_two_cycles(const Perm& p) {
  std::vector<Orbit2> twos;
  for (std::uint32_t i = 1; i <= p.size(); ++i)
    if (p(i) > i && p(p(i)) == i) twos.emplace_back(i, p(i));
  std::vector<std::pair<Orbit2, Orbit2>> out;
  for (std::size_t i = 0; i < twos.size(); ++i) {
    for (std::size_t j = i + 1; j < twos.size(); ++j) {
      const auto [a1, a2] = twos[i];
      const auto [b1, b2] = twos[j];
      if (a1 < b1 && b1 < a2 && a2 < b2) out.emplace_back(twos[i], twos[j]);
    }
  }
  return out;
}

FourTermQuadruple chord_4t_quadruple(const Perm& d, std::uint32_t e, std::uint32_t e2) {
  if (!d.is_chord_diagram()) throw DomainError("not a chord diagram: " + format_perm(d));
  const auto m = d.size();
  if (e < 1 || e > m || e2 < 1 || e2 > m || e2 != e % m + 1) {
    throw DomainError("points " + std::to_string(e) + " and " + std::to_string(e2) +
                      " are not adjacent");
  }
  if (d(e) == e2) throw DomainError("adjacent points lie on the same chord");
  const std::uint32_t far = d(e2);  // other end of the chord through e2

  std::vector<std::uint32_t> base(m);
  std::iota(base.begin(), base.end(), 1u);

  auto swapped = base;
  std::swap(swapped[e - 1], swapped[e2 - 1]);

  auto moved = [&](bool after) {
    std::vector<std::uint32_t> order;
    for (auto v : base) {
      if (v == e) continue;
      if (v == far && !after) order.push_back(e);
      order.push_back(v);
      if (v == far && after) order.push_back(e);
    }
    return order;
  };

  FourTermQuadruple q;
  const std::array<std::vector<std::uint32_t>, 4> orders{base, swapped, moved(true), moved(false)};
  for (std::size_t k = 0; k < 4; ++k) q.diagrams[k] = relabel_by_order(d, orders[k], q.relabel[k]);
  return q;
}

Graph intersection_graph_tracked(const Perm& diagram, const Perm& original,
                                 const std::vector<std::uint32_t>& relabel) {
  const auto idx = chord_index(original);
  const auto n = original.chords();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> ends(n, {0, 0});
  for (std::uint32_t i = 1; i <= original.size(); ++i) {
    if (original(i) > i) {
      auto x = relabel[i];
      auto y = relabel[original(i)];
      if (x > y) std::swap(x, y);
      if (diagram(x) != y) throw DomainError("relabel does not map chords to chords");
      ends[idx[i]] = {x, y};
    }
  }
  Graph g(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      const auto [a1, a2] = ends[i];
      const auto [b1, b2] = ends[j];
      const bool cross = (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2);
      if (cross) g.set_edge(i + 1, j + 1, true);
    }
  }
  return g;
}

}  // namespace wsys
