#pragma once

#include "dk/chain_complex.hpp"
#include "dk/monoid.hpp"
#include "dk/simplicial_module.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dk {

/// A test object named by a descriptor:
///   delta:<p>                 Z[Delta^p]
///   nerve:z<m>                Z[N(Z/m)] (nerve:z2 is the usual one)
///   const:Z                   the constant simplicial group Z
///   complex:[r0,..,rk;d1;..]  a chain complex; d_n is rank(n-1) x rank(n),
///                             row-major, entries separated by commas
/// Exactly one of module and complex is set.
struct TestObject {
  std::string descriptor;
  ModulePtr module;
  ComplexPtr complex;
  std::optional<SimplicialRing> ring;  // set for nerve objects; ring->module == module
};

/// Builds the object truncated at max_degree. Complex literals are padded
/// with zero groups above their last degree and cut off above max_degree.
/// Throws ParseError on malformed text.
TestObject parse_object(std::string_view text, int max_degree);

/// Splits a comma-separated descriptor list, ignoring commas inside brackets.
std::vector<std::string> split_objects(std::string_view list);

/// The object as a simplicial module (Gamma of a complex).
ModulePtr as_module(const TestObject& o, int max_degree);
/// The object as a chain complex (normalized chains of a module).
ComplexPtr as_complex(const TestObject& o, ChainWorkspace& ws);
/// Throws ParseError unless the object is a nerve.
const SimplicialRing& as_ring(const TestObject& o);

}  // namespace dk
