#include "deltasup/element_set.hpp"

#include <sstream>

#include "deltasup/errors.hpp"

namespace deltasup {

bool ElementSet::lex_less(const ElementSet& other) const {
  const std::size_t n = words_.size();
  std::size_t w = 0;
  while (w < n && words_[w] == other.words_[w]) ++w;
  if (w == n) return false;
  const std::uint64_t diff = words_[w] ^ other.words_[w];
  const int bit = std::countr_zero(diff);
  const bool first_in_this = (words_[w] >> bit) & 1u;
  // The set holding the first differing element is smaller, unless the other
  // list ends before that position (a proper prefix is smaller).
  const ElementSet& holder_other = first_in_this ? other : *this;
  bool other_has_larger = false;
  const std::uint64_t above =
      bit == 63 ? 0 : (holder_other.words_[w] >> (bit + 1)) << (bit + 1);
  if (above) other_has_larger = true;
  for (std::size_t k = w + 1; k < n && !other_has_larger; ++k)
    if (holder_other.words_[k]) other_has_larger = true;
  return first_in_this ? other_has_larger : !other_has_larger;
}

AxiomViolation::AxiomViolation(std::string axiom, std::vector<Coeffs> witness)
    : Error([&] {
        std::ostringstream os;
        os << "axiom violated: " << axiom << " (witness:";
        for (const auto& c : witness) os << ' ' << format_coeffs(c);
        os << ')';
        return os.str();
      }()),
      axiom_(std::move(axiom)),
      witness_(std::move(witness)) {}

std::string format_coeffs(const Coeffs& c) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ',';
    os << c[i];
  }
  os << ']';
  return os.str();
}

}  // namespace deltasup
