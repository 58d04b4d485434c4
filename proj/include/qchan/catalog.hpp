#pragma once

#include <string>
#include <string_view>

#include "qchan/channel.hpp"

namespace qchan {

struct NamedChannel {
  std::string name;
  KrausSet kraus;
  std::string provenance;
};

/// Extreme unital trace-preserving map on C^3 with Choi rank 4. Entries are
/// real: 1/2, sqrt(2)/2 and sqrt(3)/2 in the standard basis.
NamedChannel epsilon3();

/// Extreme unital trace-preserving map on C^4 with Choi rank 5.
NamedChannel epsilon4();

NamedChannel identity_channel(std::size_t d);

/// A -> tr(A) I/d, Kraus operators |i><j|/sqrt(d) in (i, j) order.
NamedChannel depolarizing(std::size_t d);

/// Unitary from a short spec:
///   fourier:d   discrete Fourier transform, F(j,k) = w^(jk)/sqrt(d)
///   shift:d     cyclic shift |j> -> |j+1 mod d>
///   clock:d     diag(w^j)
///   x, y, z, h  single-qubit Paulis and Hadamard
/// Throws InputError for anything else.
ComplexMatrix named_unitary(std::string_view spec);

/// Resolves `eps3`, `eps4`, `id:d`, `depol:d` or any named_unitary spec.
/// Throws InputError for unknown names.
NamedChannel builtin(std::string_view name);

}  // namespace qchan
