#pragma once

namespace dk {

/// Sign rules shared by the tensor structures. The defaults are the only
/// correct ones; the alternatives exist so that tests can inject faults and
/// watch the verifiers fail.
struct MonoidalConventions {
  enum class ShuffleSign { InversionParity, AlwaysPositive };
  enum class Koszul { DegreeProduct, Zero };

  ShuffleSign shuffle_sign = ShuffleSign::InversionParity;
  Koszul koszul = Koszul::DegreeProduct;

  int koszul_sign(int p, int q) const { return koszul == Koszul::DegreeProduct && (p * q) % 2 != 0 ? -1 : 1; }
};

}  // namespace dk
