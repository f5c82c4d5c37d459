#include "p2sim/principal.hpp"

#include <stdexcept>

namespace p2sim {

char letter(Principal p) {
  switch (p) {
    case Principal::Alice: return 'A';
    case Principal::Bob: return 'B';
    case Principal::Charlie: return 'C';
    case Principal::Eve: return 'E';
  }
  throw std::invalid_argument("unknown principal");
}

Principal counterpart(Principal verifier) {
  if (verifier == Principal::Bob) return Principal::Charlie;
  if (verifier == Principal::Charlie) return Principal::Bob;
  throw std::invalid_argument("counterpart is defined for verifiers only");
}

bool is_verifier(Principal p) {
  return p == Principal::Bob || p == Principal::Charlie;
}

}  // namespace p2sim
