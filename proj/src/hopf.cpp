#include "wsys/hopf.hpp"

#include <bit>

#include "wsys/errors.hpp"
#include "wsys/glws.hpp"

namespace wsys {

namespace {

void extend(std::uint64_t rest, std::vector<std::uint64_t>& blocks,
            const std::function<void(const std::vector<std::uint64_t>&)>& fn) {
  if (rest == 0) {
    fn(blocks);
    return;
  }
  // Every nonempty subset of `rest` as the next block.
  for (std::uint64_t t = rest; t; t = (t - 1) & rest) {
    blocks.push_back(t);
    extend(rest & ~t, blocks, fn);
    blocks.pop_back();
  }
}

std::uint64_t all_of(std::uint32_t n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

}  // namespace

void OrderedPartitionStream::for_each(
    const std::function<void(const std::vector<std::uint64_t>&)>& fn) const {
  std::vector<std::uint64_t> blocks;
  if (set_ == 0) return;
  extend(set_, blocks, fn);
}

std::uint64_t OrderedPartitionStream::count(std::uint32_t k) const {
  std::uint64_t total = 0;
  for_each([&](const std::vector<std::uint64_t>& b) { total += b.size() == k; });
  return total;
}

Poly primitive_eval(const SubsetInvariant& f, std::uint32_t n) {
  if (n == 0) return Poly();
  if (n > 12) throw DomainError("primitive projection is limited to 12 elements");
  std::vector<Poly> values(std::size_t{1} << n);
  for (std::uint64_t s = 1; s < values.size(); ++s) values[s] = f(s);

  // Sum the products per block count, then weight by (-1)^(k-1)/k.
  std::vector<Poly> by_k(n + 1);
  OrderedPartitionStream(all_of(n)).for_each([&](const std::vector<std::uint64_t>& blocks) {
    Poly prod = values[blocks[0]];
    for (std::size_t j = 1; j < blocks.size() && !prod.is_zero(); ++j) prod *= values[blocks[j]];
    by_k[blocks.size()] += prod;
  });
  Poly out;
  for (std::uint32_t k = 1; k <= n; ++k) {
    Coef w(1, k);
    if (k % 2 == 0) w = -w;
    out += by_k[k] * Poly(w);
  }
  return out;
}

Poly primitive_eval_recursive(const SubsetInvariant& f, std::uint32_t n) {
  if (n == 0) return Poly();
  if (n > 16) throw DomainError("primitive projection is limited to 16 elements");
  std::vector<Poly> values(std::size_t{1} << n);
  std::vector<Poly> conn(values.size());
  for (std::uint64_t s = 1; s < values.size(); ++s) values[s] = f(s);
  for (std::uint64_t s = 1; s < values.size(); ++s) {
    const std::uint64_t low = s & -s;
    Poly g = values[s];
    const std::uint64_t others = s & ~low;
    // Proper subsets T of s containing the lowest element.
    for (std::uint64_t t = (others - 1) & others;; t = (t - 1) & others) {
      const std::uint64_t block = t | low;
      if (block != s) g -= conn[block] * values[s & ~block];
      if (t == 0) break;
    }
    conn[s] = std::move(g);
  }
  return conn[values.size() - 1];
}

Poly primitive_eval(const std::function<Poly(const Perm&)>& f, const Perm& diagram) {
  if (!diagram.is_chord_diagram()) throw DomainError("not a chord diagram: " + format_perm(diagram));
  return primitive_eval([&](std::uint64_t chords) { return f(sub_diagram(diagram, chords)); },
                        diagram.chords());
}

Poly primitive_eval(const GraphInvariant& f, const Graph& g) {
  return primitive_eval([&](std::uint64_t vs) { return f(induced_subgraph(g, vs)); }, g.size());
}

EpsIndependence eps_independence_check(const Perm& diagram) {
  if (!diagram.is_chord_diagram()) throw DomainError("not a chord diagram: " + format_perm(diagram));
  if (diagram.chords() < 2) throw DomainError("the eps-independence check needs at least two chords");
  EpsIndependence out;
  out.value = primitive_eval([](const Perm& b) { return feps(b); }, diagram);
  out.standard_value = primitive_eval([](const Perm& b) { return spec_standard(b); }, diagram);
  out.independent = !out.value.mentions(Var::eps());
  return out;
}

}  // namespace wsys
