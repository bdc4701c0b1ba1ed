#include "mackey/catalog.hpp"

#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mackey/errors.hpp"
#include "mackey/numtheory.hpp"
#include "mackey/rational.hpp"

namespace mackey {

namespace {

std::string trim(const std::string& text) {
  std::size_t first = text.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  std::size_t last = text.find_last_not_of(" \t");
  return text.substr(first, last - first + 1);
}

unsigned parse_count(std::string text, const std::string& atom) {
  text = trim(text);
  if (text.empty()) throw error("catalog: missing number in spec '" + atom + "'");
  unsigned long long value = 0;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw error("catalog: malformed number in spec '" + atom + "'");
    value = value * 10 + static_cast<unsigned long long>(c - '0');
    if (value > 1000000) throw error("catalog: parameter too large in spec '" + atom + "'");
  }
  return static_cast<unsigned>(value);
}

// One factor of a product spec: its points, generators on those points, and
// the order it must come out to.
struct Atom {
  unsigned degree = 1;
  std::vector<Permutation> generators;
  Integer nominal_order = 1;
};

// The cycle (offset+1 ... offset+length) as a permutation of the given degree.
Permutation block_cycle(unsigned degree, unsigned offset, unsigned length) {
  std::vector<unsigned> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  for (unsigned i = 0; i < length; ++i) images[offset + i] = offset + (i + 1) % length;
  return Permutation(std::move(images));
}

Atom cyclic_atom(unsigned n, const std::string& atom) {
  if (n == 0) throw error("catalog: order must be positive in spec '" + atom + "'");
  Atom result;
  result.degree = n;
  result.nominal_order = n;
  if (n > 1) result.generators.push_back(block_cycle(n, 0, n));
  return result;
}

Atom symmetric_atom(unsigned n, const std::string& atom) {
  if (n == 0) throw error("catalog: point count must be positive in spec '" + atom + "'");
  Atom result;
  result.degree = n;
  result.nominal_order = 1;
  for (unsigned i = 2; i <= n; ++i) result.nominal_order *= i;
  if (n >= 2) {
    std::vector<unsigned> swap_images(n);
    std::iota(swap_images.begin(), swap_images.end(), 0u);
    swap_images[0] = 1;
    swap_images[1] = 0;
    result.generators.push_back(Permutation(std::move(swap_images)));
  }
  if (n >= 3) result.generators.push_back(block_cycle(n, 0, n));
  return result;
}

Atom alternating_atom(unsigned n, const std::string& atom) {
  if (n == 0) throw error("catalog: point count must be positive in spec '" + atom + "'");
  Atom result;
  result.degree = n;
  result.nominal_order = 1;
  for (unsigned i = 3; i <= n; ++i) result.nominal_order *= i;  // n!/2
  // Generated by the 3-cycles (1 2 k), k = 3..n.
  for (unsigned k = 3; k <= n; ++k) {
    std::vector<unsigned> images(n);
    std::iota(images.begin(), images.end(), 0u);
    images[0] = 1;
    images[1] = k - 1;
    images[k - 1] = 0;
    result.generators.push_back(Permutation(std::move(images)));
  }
  return result;
}

Atom dihedral_atom(unsigned n, const std::string& atom) {
  if (n < 3)
    throw error("catalog: dihedral spec '" + atom + "' needs n >= 3 (use C2 or EA(2,2))");
  Atom result;
  result.degree = n;
  result.nominal_order = 2u * n;
  result.generators.push_back(block_cycle(n, 0, n));
  // The reflection fixing point 1: j -> n + 2 - j.
  std::vector<unsigned> mirror(n);
  mirror[0] = 0;
  for (unsigned i = 1; i < n; ++i) mirror[i] = n - i;
  result.generators.push_back(Permutation(std::move(mirror)));
  return result;
}

Atom elementary_abelian_atom(unsigned p, unsigned k, const std::string& atom) {
  if (!is_prime(p)) throw error("catalog: first parameter of '" + atom + "' must be prime");
  if (k == 0) throw error("catalog: exponent must be positive in spec '" + atom + "'");
  Atom result;
  result.degree = p * k;
  result.nominal_order = 1;
  for (unsigned i = 0; i < k; ++i) {
    result.nominal_order *= p;
    result.generators.push_back(block_cycle(p * k, i * p, p));
  }
  return result;
}

Atom quaternion_atom() {
  // Left regular representation on the elements 1,-1,i,-i,j,-j,k,-k in that
  // order; the permutations below are left multiplication by i and by j.
  Atom result;
  result.degree = 8;
  result.nominal_order = 8;
  result.generators.push_back(Permutation({2, 3, 1, 0, 6, 7, 5, 4}));
  result.generators.push_back(Permutation({4, 5, 7, 6, 1, 0, 2, 3}));
  return result;
}

Atom parse_atom(const std::string& atom) {
  if (atom == "Q8") return quaternion_atom();
  if (atom.rfind("EA(", 0) == 0 && atom.size() >= 4 && atom.back() == ')') {
    std::string inner = atom.substr(3, atom.size() - 4);
    std::size_t comma = inner.find(',');
    if (comma == std::string::npos)
      throw error("catalog: spec '" + atom + "' needs two parameters EA(p,k)");
    unsigned p = parse_count(inner.substr(0, comma), atom);
    unsigned k = parse_count(inner.substr(comma + 1), atom);
    return elementary_abelian_atom(p, k, atom);
  }
  if (!atom.empty()) {
    switch (atom[0]) {
      case 'C': return cyclic_atom(parse_count(atom.substr(1), atom), atom);
      case 'S': return symmetric_atom(parse_count(atom.substr(1), atom), atom);
      case 'A': return alternating_atom(parse_count(atom.substr(1), atom), atom);
      case 'D': return dihedral_atom(parse_count(atom.substr(1), atom), atom);
      default: break;
    }
  }
  throw error("catalog: unknown group spec '" + atom + "'");
}

Permutation parse_permutation_line(const std::string& text, unsigned degree,
                                   std::size_t line_number) {
  auto fail = [line_number](const std::string& what) {
    std::ostringstream message;
    message << "generators: line " << line_number << ": " << what;
    return error(message.str());
  };

  std::vector<unsigned> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_spaces = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };

  bool any_cycle = false;
  while (true) {
    skip_spaces();
    if (i == text.size()) break;
    if (text[i] != '(') throw fail("expected '('");
    ++i;
    std::vector<unsigned> cycle;
    while (true) {
      skip_spaces();
      if (i == text.size()) throw fail("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw fail("expected a point or ')'");
      unsigned long long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<unsigned long long>(text[i] - '0');
        if (value > 1000000000ull) throw fail("point out of range");
        ++i;
      }
      if (value < 1 || value > degree) {
        std::ostringstream what;
        what << "point " << value << " out of range for degree " << degree;
        throw fail(what.str());
      }
      auto point = static_cast<unsigned>(value - 1);
      if (used[point]) {
        std::ostringstream what;
        what << "point " << value << " repeated";
        throw fail(what.str());
      }
      used[point] = true;
      cycle.push_back(point);
    }
    any_cycle = true;
    for (std::size_t c = 0; c < cycle.size(); ++c)
      images[cycle[c]] = cycle[(c + 1) % cycle.size()];
  }
  if (!any_cycle) throw fail("expected a permutation");
  return Permutation(std::move(images));
}

} // namespace

FiniteGroup build_group(const std::string& spec, std::size_t max_order) {
  if (max_order == 0) throw error("catalog: order limit must be at least 1");
  std::string trimmed = trim(spec);
  if (trimmed.empty()) throw error("catalog: empty group spec");

  if (trimmed.rfind("file:", 0) == 0) {
    std::string path = trimmed.substr(5);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("catalog: cannot read file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    auto [degree, generators] = parse_generators(buffer.str());
    return generate_group(degree, std::move(generators), max_order, trimmed);
  }

  std::vector<Atom> atoms;
  Integer nominal(1);
  unsigned long long total_degree = 0;
  std::size_t start = 0;
  while (true) {
    std::size_t split = trimmed.find('x', start);
    std::string part =
        trim(split == std::string::npos ? trimmed.substr(start)
                                        : trimmed.substr(start, split - start));
    if (part.rfind("file:", 0) == 0)
      throw error("catalog: file-backed specs cannot appear in a product");
    if (part.empty()) throw error("catalog: empty factor in product spec '" + trimmed + "'");
    atoms.push_back(parse_atom(part));
    nominal *= atoms.back().nominal_order;
    total_degree += atoms.back().degree;
    if (split == std::string::npos) break;
    start = split + 1;
  }
  if (nominal > Integer(static_cast<unsigned long long>(max_order)))
    throw error("catalog: spec '" + trimmed + "' has order " + nominal.str() +
                ", above the limit " + std::to_string(max_order));
  if (total_degree > 1000000)
    throw error("catalog: spec '" + trimmed + "' needs too many points");

  const auto degree = static_cast<unsigned>(total_degree);
  std::vector<Permutation> generators;
  unsigned offset = 0;
  for (const Atom& atom : atoms) {
    for (const Permutation& g : atom.generators) {
      std::vector<unsigned> images(degree);
      std::iota(images.begin(), images.end(), 0u);
      for (unsigned i = 0; i < atom.degree; ++i) images[offset + i] = offset + g(i);
      generators.push_back(Permutation(std::move(images)));
    }
    offset += atom.degree;
  }

  FiniteGroup group = generate_group(degree, std::move(generators), max_order, trimmed);
  if (Integer(static_cast<unsigned long long>(group.order())) != nominal)
    throw consistency_error("catalog: spec '" + trimmed + "' generated order " +
                            std::to_string(group.order()) + ", nominal " + nominal.str());
  return group;
}

std::pair<unsigned, std::vector<Permutation>> parse_generators(const std::string& text) {
  std::istringstream stream(text);
  std::string line;
  unsigned degree = 0;
  bool have_degree = false;
  std::vector<Permutation> generators;
  std::size_t line_number = 0;
  while (std::getline(stream, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string significant = trim(line);
    if (significant.empty() || significant[0] == '#') continue;
    if (!have_degree) {
      std::istringstream header(significant);
      std::string keyword;
      unsigned long long n = 0;
      header >> keyword >> n;
      std::string rest;
      if (keyword != "degree" || header.fail() || (header >> rest, !rest.empty()))
        throw error("generators: first line must be 'degree N'");
      if (n < 1 || n > 1000000) throw error("generators: degree out of range");
      degree = static_cast<unsigned>(n);
      have_degree = true;
      continue;
    }
    generators.push_back(parse_permutation_line(significant, degree, line_number));
  }
  if (!have_degree) throw error("generators: missing 'degree N' header");
  return {degree, std::move(generators)};
}

std::string format_generators(unsigned degree, const std::vector<Permutation>& generators) {
  std::ostringstream out;
  out << "degree " << degree << "\n";
  for (const Permutation& g : generators) {
    if (g.degree() != degree) throw error("generators: permutation degree mismatch");
    auto cycles = cycle_decomposition(g);
    if (cycles.empty()) {
      out << "()\n";
      continue;
    }
    for (const auto& cycle : cycles) {
      out << '(';
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (i > 0) out << ' ';
        out << cycle[i] + 1;
      }
      out << ')';
    }
    out << "\n";
  }
  return out.str();
}

std::string catalog_listing() {
  std::ostringstream out;
  out << "Group specs:\n"
      << "  C<n>          cyclic of order n (e.g. C12)\n"
      << "  S<n>          symmetric group on n points (e.g. S4)\n"
      << "  A<n>          alternating group on n points (e.g. A4)\n"
      << "  D<n>          dihedral group of order 2n, n >= 3 (e.g. D6)\n"
      << "  EA(p,k)       elementary abelian group of order p^k (e.g. EA(3,2))\n"
      << "  Q8            quaternion group of order 8\n"
      << "  <a>x<b>       direct product on disjoint points (e.g. S3xC2)\n"
      << "  file:<path>   generator file, standalone only\n"
      << "\n"
      << "Generator file format:\n"
      << "  degree N          header, 1-based points up to N\n"
      << "  (1 2 3)(4 5)      one permutation per line, disjoint cycles\n"
      << "  ()                the identity\n"
      << "  # ...             comment\n"
      << "\n"
      << "Built-in verification set:\n ";
  for (const std::string& spec : builtin_verification_specs()) out << ' ' << spec;
  out << "\n";
  return out.str();
}

std::vector<std::string> builtin_verification_specs() {
  std::vector<std::string> specs;
  for (unsigned n = 1; n <= 12; ++n) specs.push_back("C" + std::to_string(n));
  specs.insert(specs.end(),
               {"EA(2,2)", "EA(3,2)", "D4", "D6", "Q8", "S3", "S4", "A4"});
  return specs;
}

} // namespace mackey
