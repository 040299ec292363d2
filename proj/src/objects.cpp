#include "dk/objects.hpp"

#include "dk/dold_kan.hpp"
#include "dk/errors.hpp"

#include <cctype>

namespace dk {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  return out;
}

Integer parse_integer(const std::string& s, const std::string& context) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) throw ParseError("expected an integer in " + context + ", got '" + s + "'");
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw ParseError("expected an integer in " + context + ", got '" + s + "'");
  return Integer(s[0] == '+' ? s.substr(1) : s);
}

int parse_small(const std::string& s, const std::string& context, int lo, int hi) {
  auto v = parse_integer(s, context);
  if (v < lo || v > hi)
    throw ParseError(context + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<int>(v);
}

ComplexPtr parse_complex(const std::string& text, const std::string& body, int max_degree) {
  auto parts = split(body, ';');
  std::vector<Index> ranks;
  for (const auto& r : split(parts[0], ',')) ranks.push_back(parse_small(r, "complex rank", 0, 64));
  if (parts.size() > ranks.size())
    throw ParseError("complex literal has more differentials than positive degrees: " + text);
  std::vector<SparseMatrix> diffs;
  for (std::size_t n = 1; n < ranks.size(); ++n) {
    const Index rows = ranks[n - 1], cols = ranks[n];
    SparseMatrix d(rows, cols);
    if (n < parts.size() && !parts[n].empty()) {
      auto entries = split(parts[n], ',');
      if (static_cast<Index>(entries.size()) != rows * cols)
        throw ParseError("d_" + std::to_string(n) + " needs " + std::to_string(rows * cols) + " entries in " + text);
      std::vector<Triplet> trip;
      for (Index k = 0; k < rows * cols; ++k) {
        auto v = parse_integer(entries[static_cast<std::size_t>(k)], "d_" + std::to_string(n));
        if (v != 0) trip.emplace_back(k / cols, k % cols, v);
      }
      d.setFromTriplets(trip.begin(), trip.end());
    }
    diffs.push_back(std::move(d));
  }
  // Pad or cut to exactly max_degree.
  while (static_cast<int>(ranks.size()) <= max_degree) {
    diffs.push_back(SparseMatrix(ranks.back(), 0));
    ranks.push_back(0);
  }
  ranks.resize(static_cast<std::size_t>(max_degree) + 1);
  diffs.resize(static_cast<std::size_t>(max_degree));
  auto c = make_complex(std::move(ranks), std::move(diffs), text);
  auto sq = check_square_zero(*c);
  if (!sq.passed()) throw ParseError("complex literal is not a complex (d^2 != 0): " + text);
  return c;
}

}  // namespace

TestObject parse_object(std::string_view raw, int max_degree) {
  if (max_degree < 0) throw ParseError("max level must be non-negative");
  TestObject o;
  o.descriptor = trim(raw);
  const auto& text = o.descriptor;
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("object descriptor needs a kind prefix: '" + text + "'");
  const std::string kind = text.substr(0, colon);
  const std::string arg = trim(std::string_view(text).substr(colon + 1));
  if (kind == "delta") {
    o.module = free_on_standard_simplex(parse_small(arg, "simplex dimension", 0, 8), max_degree);
  } else if (kind == "nerve") {
    if (arg.size() < 2 || (arg[0] != 'z' && arg[0] != 'Z')) throw ParseError("nerve objects look like nerve:z2");
    o.ring = nerve_ring(cyclic_group(parse_small(arg.substr(1), "group order", 1, 4)), max_degree);
    o.module = o.ring->module;
  } else if (kind == "const") {
    if (arg != "Z") throw ParseError("only const:Z is supported");
    o.module = constant_z(max_degree);
  } else if (kind == "complex") {
    if (arg.size() < 2 || arg.front() != '[' || arg.back() != ']')
      throw ParseError("complex literal must be bracketed: " + text);
    o.complex = parse_complex(text, arg.substr(1, arg.size() - 2), max_degree);
  } else {
    throw ParseError("unknown object kind '" + kind + "'");
  }
  return o;
}

std::vector<std::string> split_objects(std::string_view list) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= list.size(); ++i) {
    if (i < list.size() && list[i] == '[') ++depth;
    if (i < list.size() && list[i] == ']') {
      if (--depth < 0) throw ParseError("unbalanced ']' in object list");
    }
    if (i == list.size() || (list[i] == ',' && depth == 0)) {
      auto item = trim(list.substr(start, i - start));
      if (item.empty()) throw ParseError("empty entry in object list");
      out.push_back(std::move(item));
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced '[' in object list");
  return out;
}

ModulePtr as_module(const TestObject& o, int max_degree) {
  if (o.module) return o.module;
  return gamma(o.complex, max_degree);
}

ComplexPtr as_complex(const TestObject& o, ChainWorkspace& ws) {
  if (o.complex) return o.complex;
  return ws.normalized_complex(o.module);
}

const SimplicialRing& as_ring(const TestObject& o) {
  if (!o.ring) throw ParseError("'" + o.descriptor + "' is not a simplicial ring; use a nerve object");
  return *o.ring;
}

}  // namespace dk
