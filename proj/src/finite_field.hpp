#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gpd {

// Element of GF(p^d): d residues mod p, coefficient of basis power i at
// position i.
struct FieldElement {
  std::vector<uint32_t> coeffs;
  bool operator==(const FieldElement&) const = default;
};

// Deterministic construction of GF(p^d).  The modulus is the
// lexicographically smallest monic irreducible of degree d (free
// coefficients compared low-degree-first), the generator the lex-smallest
// element of multiplicative order q-1.  Two contexts built from the same
// (p, d) are identical.
class FieldCtx {
 public:
  static constexpr uint64_t kDefaultMaxQ = 1ull << 20;

  FieldCtx(uint64_t p, uint64_t d, uint64_t max_q = kDefaultMaxQ);

  uint64_t p() const { return p_; }
  uint64_t d() const { return d_; }
  uint64_t q() const { return q_; }
  // Free coefficients m_0..m_{d-1} of the monic modulus x^d + sum m_i x^i.
  const std::vector<uint32_t>& modulus() const { return modulus_; }
  const FieldElement& generator() const { return gen_; }

  FieldElement zero() const;
  FieldElement one() const;
  // Embeds an integer residue into the prime subfield.
  FieldElement from_residue(uint64_t r) const;
  FieldElement make(std::vector<uint32_t> coeffs) const;

  bool is_zero(const FieldElement& e) const;
  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement inv(const FieldElement& a) const;
  // Square-and-multiply; negative exponents allowed for nonzero base.
  FieldElement pow(const FieldElement& a, int64_t e) const;

  // e^(p^i), 0 <= i < d.
  FieldElement frobenius(const FieldElement& e, uint64_t i) const;
  // Least k >= 1 with e^k = 1; requires e != 0.
  uint64_t element_order(const FieldElement& e) const;
  // Canonical generator g^((q-1)/n) of the unique order-n subgroup of the
  // multiplicative group; requires n | q-1.
  FieldElement subgroup_generator(uint64_t n) const;

  // Packed integer value sum c_i p^i; a bijection [0, q).
  uint64_t code(const FieldElement& e) const;
  FieldElement from_code(uint64_t code) const;
  // Position in the lexicographic order on coefficient tuples (c_0 most
  // significant); the canonical element ordering used everywhere.
  uint64_t lex_rank(const FieldElement& e) const;
  FieldElement from_lex_rank(uint64_t rank) const;

  // Text form: d decimal coefficients separated by commas, low power first.
  std::string to_string(const FieldElement& e) const;

 private:
  void check(const FieldElement& e) const;

  uint64_t p_ = 0, d_ = 0, q_ = 0;
  std::vector<uint32_t> modulus_;
  FieldElement gen_;
  std::vector<std::pair<uint64_t, uint32_t>> unit_order_factors_;
};

}  // namespace gpd
