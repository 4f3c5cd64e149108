#pragma once

#include <optional>

#include "qsym/partition.hpp"
#include "qsym/symfunc.hpp"

namespace qsym {

/// F-expansion of s_lam, computed from quasi-Yamanouchi tableaux and again
/// from descents of standard tableaux; throws CrossCheckError if they differ.
/// With max_entry = m only tableaux with entries <= m are used, which gives
/// the expansion of the Schur polynomial in m variables.
SymFunc schur_to_F(const Partition& lam, std::optional<int> max_entry = std::nullopt);

/// Expands every F_alpha as the sum of M_beta over refinements beta of alpha.
SymFunc F_to_M(const SymFunc& f);

/// True iff the M-coefficients are invariant under rearranging the index.
bool is_symmetric(const SymFunc& f);

struct SchurOptions {
  /// Only Schur terms with at most this many rows are solved for; the caller
  /// asserts no longer ones occur.
  std::optional<int> max_len;
  bool skip_symmetry_check = false;
  bool verify_round_trip = true;
};

/// Schur expansion of a symmetric function given in the F basis. Only the
/// coefficients of partition-indexed F terms are read. Throws
/// ValidationError if the symmetry check fails and CrossCheckError if
/// re-expanding the answer does not reproduce f.
SymFunc F_to_schur(const SymFunc& f, const SchurOptions& options = {});

/// Same result via signed chains: drop non-partition terms, then replace each
/// F_mu by the signed sum of s_{wt(c)} over chains c starting at mu.
SymFunc F_to_schur_via_chains(const SymFunc& f, bool skip_symmetry_check = false);

/// F-expansion of an s-basis value.
SymFunc schur_expansion_to_F(const SymFunc& g);

}  // namespace qsym
