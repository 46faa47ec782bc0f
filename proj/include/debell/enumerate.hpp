#pragma once

// Exhaustive generators for the families the closed forms claim to count.
// Every count here comes from explicitly producing each object; nothing is
// computed from a formula. Sizes are capped (see enumeration_cap) and
// exceeding a cap throws std::length_error.

#include "debell/exact.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace debell {

/// Blocks of 1-based elements, each block sorted, blocks ordered by minimum.
struct BlockPartition {
  std::vector<std::vector<unsigned>> blocks;
};

/// Zero-based one-line notation: perm[i] is the image of i.
using Permutation = std::vector<unsigned>;

/// "{1,3}{2}" in the given block order.
std::string format_blocks(const std::vector<std::vector<unsigned>>& blocks);
/// Cycle notation with 1-based elements, each cycle led by its minimum: "(1,3)(2,4)".
std::string format_cycles(const Permutation& perm);

/// The cap in force: DEBELL_MAX_ENUM when set to a positive integer, else `default_cap`.
unsigned enumeration_cap(unsigned default_cap);

/// No fixed point and elements 0..r-1 in pairwise distinct cycles.
bool is_r_derangement(const Permutation& perm, unsigned r);

void for_each_set_partition(unsigned n, const std::function<void(const BlockPartition&)>& visit);

Integer set_partitions_count(unsigned n, unsigned k);
/// Partitions of [n+r] into k+r blocks with 1..r in distinct blocks.
Integer r_stirling_count(unsigned n, unsigned k, unsigned r);
Integer ordered_partitions_count(unsigned n);
/// Preferential arrangements of [n] with lambda - 1 bars (lambda sections). lambda >= 1.
Integer barred_count(unsigned n, unsigned lambda);
Integer r_derangements_enum(unsigned k, unsigned r);
/// Counted directly and through sum_i r_stirling_count(n, i, r) * r_derangements_enum(i, r);
/// throws std::logic_error if the two disagree.
Integer r_deranged_partitions_enum(unsigned n, unsigned r);

enum class Family { SetPartitions, RStirling, Ordered, Barred, Derangements, RDerangements, RDerangedPartitions };

std::string_view to_string(Family family);
Family parse_family(std::string_view name);

struct EnumQuery {
  Family family = Family::SetPartitions;
  unsigned n = 0;
  unsigned k = 0;  // block count, or k of d_{k,r} for RDerangements
  unsigned r = 0;
  unsigned lambda = 1;
};

struct ArrangementTally {
  Family family;
  EnumQuery query;
  Integer count;
};

/// Generates every object of the queried family, hands its canonical text to
/// `sink` (when non-null) and returns the tally.
ArrangementTally enumerate(const EnumQuery& query, const std::function<void(const std::string&)>& sink = {});

}  // namespace debell
