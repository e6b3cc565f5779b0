#pragma once

// Stirling numbers of the second kind: exact values, modular tables, the
// Carlitz period, and evaluation of S(l,m) mod p for l far beyond any
// tabulable range.

#include "conglab/padic.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace conglab {

/// Dense table of S(j,i) for 0 <= j <= max_l, 0 <= i <= max_m, either exact
/// or reduced modulo a prime power. Immutable once built; safe for
/// concurrent readers.
class StirlingTable {
public:
    static StirlingTable exact(unsigned long max_l, unsigned long max_m);
    static StirlingTable modulo(const PrimePower& pp, unsigned long max_l,
                                unsigned long max_m);

    const Int& at(unsigned long l, unsigned long m) const;

    unsigned long max_l() const { return max_l_; }
    unsigned long max_m() const { return max_m_; }
    bool is_exact() const { return !modulus_.has_value(); }
    const std::optional<Int>& modulus() const { return modulus_; }

private:
    StirlingTable(std::optional<Int> modulus, unsigned long max_l,
                  unsigned long max_m);

    std::optional<Int> modulus_;
    unsigned long max_l_;
    unsigned long max_m_;
    std::vector<Int> entries_;  // row-major, (max_m_+1) per row
};

/// Process-wide caches keyed by mode; tables grow geometrically and are
/// immutable once published, so sweeps re-querying overlapping ranges hit
/// the same table.
std::shared_ptr<const StirlingTable> shared_exact_table(unsigned long max_l,
                                                        unsigned long max_m);
std::shared_ptr<const StirlingTable> shared_mod_table(const PrimePower& pp,
                                                      unsigned long max_l,
                                                      unsigned long max_m);

/// Exact S(l,m) via the recurrence S(j,i) = S(j-1,i-1) + i*S(j-1,i).
Int stirling_exact(unsigned long l, unsigned long m);

/// The period p^a(p-1) of {S(l,m) mod p : l >= m}, where a is the unique
/// natural with p^a < m <= p^(a+1). Requires m >= p.
Int carlitz_period(std::uint64_t p, unsigned long m);

/// S(l,m) mod p for l >= m >= 1 with l possibly astronomically large.
/// Uses period reduction plus tabulation when m >= p, and the
/// finite-difference sum otherwise. The two routes agree wherever both
/// apply; they are exposed separately so tests can cross-check them.
Int stirling_mod_p_fast(const Int& l, unsigned long m, std::uint64_t p);
Int stirling_mod_p_by_period(const Int& l, unsigned long m, std::uint64_t p);
Int stirling_mod_p_by_finite_difference(const Int& l, unsigned long m,
                                        std::uint64_t p);

/// Falling factorial (x)_j = x(x-1)...(x-j+1); (x)_0 = 1.
Int falling_factorial(const Int& x, unsigned long j);

}  // namespace conglab
