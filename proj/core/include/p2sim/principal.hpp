#pragma once

#include <string>

namespace p2sim {

enum class Principal { Alice, Bob, Charlie, Eve };

/// Single-letter display form: A, B, C, E.
char letter(Principal p);

/// Bob <-> Charlie. Throws std::invalid_argument for Alice or Eve.
Principal counterpart(Principal verifier);

bool is_verifier(Principal p);

}  // namespace p2sim
