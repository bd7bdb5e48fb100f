#include "wsys/dmat.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "wsys/errors.hpp"

namespace wsys {

DMat::DMat(std::uint32_t ground_size, std::vector<Subset> admissible)
    : ground_(ground_size), phi_(std::move(admissible)) {
  if (ground_ > kMaxGround) {
    throw DomainError("ground set larger than " + std::to_string(kMaxGround));
  }
  if (phi_.empty()) throw DomainError("set system has no admissible sets");
  std::sort(phi_.begin(), phi_.end());
  phi_.erase(std::unique(phi_.begin(), phi_.end()), phi_.end());
  for (auto s : phi_) {
    if (s & ~full()) throw DomainError("admissible set leaves the ground set");
  }
}

bool DMat::is_admissible(Subset s) const { return std::binary_search(phi_.begin(), phi_.end(), s); }

DMat dmat_from_graph(const Graph& g) {
  if (g.size() > DMat::kMaxGround) throw DomainError("graph too large for a set system");
  std::vector<Subset> phi;
  for (Subset u = 0; u < (Subset{1} << g.size()); ++u) {
    if (g.corank_on(u) == 0) phi.push_back(u);
  }
  return DMat(g.size(), std::move(phi));
}

DMat dmat_from_chord_diagram(const Perm& diagram) {
  const auto n = diagram.chords();
  if (n > DMat::kMaxGround) throw DomainError("diagram too large for a set system");
  std::vector<Subset> phi;
  for (Subset u = 0; u < (Subset{1} << n); ++u) {
    if (face_count(sub_diagram(diagram, u)) == 1) phi.push_back(u);
  }
  return DMat(n, std::move(phi));
}

bool check_symmetric_exchange(const DMat& d) {
  for (auto phi : d.admissible()) {
    for (auto psi : d.admissible()) {
      const Subset delta = phi ^ psi;
      for (Subset xs = delta; xs; xs &= xs - 1) {
        const Subset x = xs & -xs;
        bool found = false;
        for (Subset ys = delta; ys && !found; ys &= ys - 1) {
          const Subset y = ys & -ys;
          found = d.is_admissible(phi ^ (x | y));
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

std::uint32_t distance(const DMat& d, Subset u) {
  int best = 64;
  for (auto phi : d.admissible()) best = std::min(best, std::popcount(u ^ phi));
  return static_cast<std::uint32_t>(best);
}

DMat partial_dual(const DMat& d, Subset s) {
  std::vector<Subset> phi;
  phi.reserve(d.admissible().size());
  for (auto a : d.admissible()) phi.push_back(a ^ s);
  return DMat(d.ground_size(), std::move(phi));
}

namespace {

Subset element_bit(const DMat& d, std::uint32_t e) {
  if (e < 1 || e > d.ground_size()) throw DomainError("element " + std::to_string(e) + " out of range");
  return Subset{1} << (e - 1);
}

Subset drop_bit(Subset s, std::uint32_t e) {
  const Subset low = s & ((Subset{1} << (e - 1)) - 1);
  const Subset high = (s >> e) << (e - 1);
  return low | high;
}

}  // namespace

bool is_loop(const DMat& d, std::uint32_t e) {
  const Subset bit = element_bit(d, e);
  return std::none_of(d.admissible().begin(), d.admissible().end(),
                      [bit](Subset s) { return s & bit; });
}

bool is_coloop(const DMat& d, std::uint32_t e) {
  const Subset bit = element_bit(d, e);
  return std::all_of(d.admissible().begin(), d.admissible().end(),
                     [bit](Subset s) { return s & bit; });
}

DMat dmat_delete(const DMat& d, std::uint32_t e) {
  const Subset bit = element_bit(d, e);
  if (is_coloop(d, e)) throw DomainError("cannot delete coloop " + std::to_string(e));
  std::vector<Subset> phi;
  for (auto s : d.admissible())
    if (!(s & bit)) phi.push_back(drop_bit(s, e));
  return DMat(d.ground_size() - 1, std::move(phi));
}

std::string format_subset(Subset s) {
  std::string out = "{";
  bool first = true;
  for (std::uint32_t i = 1; s; ++i, s >>= 1) {
    if (!(s & 1u)) continue;
    if (!first) out += ',';
    first = false;
    out += std::to_string(i);
  }
  return out + "}";
}

std::string format_dmat(const DMat& d) {
  std::vector<Subset> sets = d.admissible();
  // By size, then lexicographically by element list.
  std::sort(sets.begin(), sets.end(), [](Subset a, Subset b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    const Subset diff = a ^ b;
    return (a & (diff & -diff)) != 0;
  });
  std::string out = "E=" + std::to_string(d.ground_size()) + "; phi=";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i) out += ',';
    out += format_subset(sets[i]);
  }
  return out;
}

DMat parse_dmat(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) throw ParseError("set system text needs 'E=..; phi=..'");
  std::string head(text.substr(0, semi));
  std::string tail(text.substr(semi + 1));
  auto strip = [](std::string s) {
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
            s.end());
    return s;
  };
  head = strip(head);
  tail = strip(tail);
  if (head.rfind("E=", 0) != 0 || head.size() == 2) throw ParseError("set system text must start with 'E='");
  if (tail.rfind("phi=", 0) != 0) throw ParseError("set system text needs 'phi='");
  for (char c : head.substr(2))
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad ground size");
  const auto n = static_cast<std::uint32_t>(std::stoul(head.substr(2)));
  if (n > DMat::kMaxGround) throw ParseError("ground set larger than " + std::to_string(DMat::kMaxGround));
  std::vector<Subset> phi;
  std::string body = tail.substr(4);
  std::size_t i = 0;
  while (i < body.size()) {
    if (body[i] == ',') {
      ++i;
      continue;
    }
    if (body[i] != '{') throw ParseError("expected '{' in admissible set list");
    const auto close = body.find('}', i);
    if (close == std::string::npos) throw ParseError("unbalanced '{'");
    Subset s = 0;
    std::string inner = body.substr(i + 1, close - i - 1);
    std::size_t j = 0;
    while (j < inner.size()) {
      if (inner[j] == ',') {
        ++j;
        continue;
      }
      std::size_t k = j;
      while (k < inner.size() && std::isdigit(static_cast<unsigned char>(inner[k]))) ++k;
      if (k == j) throw ParseError("bad element in '{" + inner + "}'");
      const auto e = static_cast<std::uint32_t>(std::stoul(inner.substr(j, k - j)));
      if (e < 1 || e > n) throw ParseError("element " + std::to_string(e) + " out of range");
      s |= Subset{1} << (e - 1);
      j = k;
    }
    phi.push_back(s);
    i = close + 1;
  }
  if (phi.empty()) throw ParseError("set system has no admissible sets");
  return DMat(n, std::move(phi));
}

}  // namespace wsys
