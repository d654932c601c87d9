#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bp/link.hpp"
#include "bp/signature.hpp"

namespace bp {

enum class Predicate { HomotopySphere, RationalHS, KEPasses, Fano };

struct CensusSpec {
    int dimension = 5;  // odd, link dimension 2n-1
    std::vector<Predicate> predicates;
    /// Restrict to the family obtained by adding one exponent to this prefix
    /// (the added exponent ranges freely; tuples are canonicalized).
    std::optional<std::vector<std::int64_t>> prefix;
};

struct CensusResult {
    std::vector<ExponentVector> tuples;      // sorted, duplicate-free
    std::map<int, std::int64_t> per_class;   // km_index -> count (dim 4k-1 only)
    std::int64_t total = 0;
    std::vector<std::string> warnings;
};

/// Bounded exhaustive search over sorted exponent tuples. Bounds come from
/// KE conditions 1 and 2; plateaus with prefix sum exactly 1 are closed off
/// by a residue scan of the homology classification. Throws
/// unbounded_search_error when the predicate set cannot bound the space.
/// Output is deterministic and identical for every `jobs` value.
CensusResult enumerate_ke_links(const CensusSpec& spec, int jobs = 1);

/// c_1 = 2, c_{k+1} = c_1...c_k + 1 = c_k^2 - c_k + 1.
BigInt c_sequence(unsigned k);

struct KervaireFamilyEntry {
    ExponentVector tuple;
    std::uint64_t prime = 0;
    KervaireType type = KervaireType::NotApplicable;
};

/// L(2c_1,...,2c_{m-2}, 2, p) for every prime p in (2c_{m-2}, 2c_{m-1}-2)
/// coprime to the other exponents. Every emitted tuple is checked to pass
/// ke_check and to be at least a rational homology sphere. m in [4, 7];
/// larger m has a prime window beyond enumeration scale.
std::vector<KervaireFamilyEntry> kervaire_family(unsigned m);

struct RhsRow {
    std::int64_t k = 0;
    bool ke_passes = false;
    bool rational_hs = false;
    BigInt torsion_order;  // valid when rational_hs
    std::int64_t betti = 0;
};

/// Rows for the family L(m,...,m,k) (m copies of m plus k), k <= k_max.
/// Rows with gcd(k,m) > 1 are included with their computed homology so the
/// companion-table series (k = m*n) are visible too.
std::vector<RhsRow> rhs_family(std::int64_t m, std::int64_t k_max);

struct ReproCell {
    std::string label;
    std::string computed;
    std::string paper;
    bool match = false;
};

struct ReproReport {
    std::string table_id;
    std::vector<ReproCell> cells;
    std::vector<std::string> warnings;
    bool all_match = false;
};

/// Recomputes one published table and reports computed vs. published value per
/// cell. Known ids: bp-orders, s5-68, s5-2377m, s7-census, brieskorn-28,
/// rhs-m3, rhs-m4, companion-b2, c-sequence. Throws usage_error otherwise.
ReproReport reproduce(const std::string& table_id, int jobs = 1);

std::vector<std::string> reproduce_ids();

} // namespace bp
