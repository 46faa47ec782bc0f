#include "debell/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace debell {

namespace {

void require_within_cap(unsigned size, unsigned default_cap, const char* what) {
  const unsigned cap = enumeration_cap(default_cap);
  if (size > cap) {
    throw std::length_error(std::string(what) + ": size " + std::to_string(size) + " exceeds enumeration cap " +
                            std::to_string(cap) + " (set DEBELL_MAX_ENUM to raise it)");
  }
}

void restricted_growth(unsigned n, std::vector<unsigned>& labels, unsigned i, unsigned used,
                       const std::function<void(const BlockPartition&)>& visit) {
  if (i == n) {
    BlockPartition p;
    p.blocks.resize(used);
    for (unsigned e = 0; e < n; ++e) p.blocks[labels[e]].push_back(e + 1);
    visit(p);
    return;
  }
  for (unsigned b = 0; b <= used; ++b) {
    labels[i] = b;
    restricted_growth(n, labels, i + 1, std::max(used, b + 1), visit);
  }
}

// Calls visit(order) for every ordering of 0..m-1.
template <typename Visit>
void for_each_permutation(unsigned m, Visit&& visit) {
  Permutation perm(m);
  std::iota(perm.begin(), perm.end(), 0u);
  do {
    visit(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

bool first_r_in_distinct_blocks(const BlockPartition& p, unsigned r) {
  // in standard form, elements 1..r sit in distinct blocks iff block i starts with i+1 for i < r
  if (p.blocks.size() < r) return false;
  for (unsigned i = 0; i < r; ++i) {
    if (p.blocks[i].front() != i + 1) return false;
  }
  return true;
}

std::vector<std::vector<unsigned>> reorder(const BlockPartition& p, const Permutation& order) {
  std::vector<std::vector<unsigned>> out;
  out.reserve(order.size());
  for (unsigned i : order) out.push_back(p.blocks[i]);
  return out;
}

// Each of the C(k+sections-1, sections-1) ways to cut a sequence of k blocks
// into `sections` consecutive (possibly empty) runs, as run lengths.
void for_each_cut(unsigned k, unsigned sections, std::vector<unsigned>& sizes, unsigned slot,
                  const std::function<void(const std::vector<unsigned>&)>& visit) {
  if (slot + 1 == sections) {
    sizes[slot] = k;
    visit(sizes);
    return;
  }
  for (unsigned i = 0; i <= k; ++i) {
    sizes[slot] = i;
    for_each_cut(k - i, sections, sizes, slot + 1, visit);
  }
}

using Sink = std::function<void(const std::string&)>;

Integer gen_set_partitions(unsigned n, unsigned k, unsigned r, const Sink& sink) {
  Integer count = 0;
  for_each_set_partition(n, [&](const BlockPartition& p) {
    if (p.blocks.size() != k || !first_r_in_distinct_blocks(p, r)) return;
    ++count;
    if (sink) sink(format_blocks(p.blocks));
  });
  return count;
}

Integer gen_barred(unsigned n, unsigned sections, bool with_bars, const Sink& sink) {
  Integer count = 0;
  std::vector<unsigned> sizes(sections);
  for_each_set_partition(n, [&](const BlockPartition& p) {
    const unsigned k = static_cast<unsigned>(p.blocks.size());
    for_each_permutation(k, [&](const Permutation& order) {
      const auto blocks = reorder(p, order);
      for_each_cut(k, sections, sizes, 0, [&](const std::vector<unsigned>& cut) {
        ++count;
        if (!sink) return;
        std::string text;
        unsigned pos = 0;
        for (unsigned s = 0; s < cut.size(); ++s) {
          if (s > 0 && with_bars) text += '|';
          text += format_blocks({blocks.begin() + pos, blocks.begin() + pos + cut[s]});
          pos += cut[s];
        }
        sink(text);
      });
    });
  });
  return count;
}

Integer gen_r_derangements(unsigned size, unsigned r, const Sink& sink) {
  Integer count = 0;
  for_each_permutation(size, [&](const Permutation& perm) {
    if (!is_r_derangement(perm, r)) return;
    ++count;
    if (sink) sink(format_cycles(perm));
  });
  return count;
}

Integer gen_r_deranged_partitions(unsigned n, unsigned r, const Sink& sink) {
  Integer count = 0;
  for_each_set_partition(n + r, [&](const BlockPartition& p) {
    if (!first_r_in_distinct_blocks(p, r)) return;
    const unsigned m = static_cast<unsigned>(p.blocks.size());
    for_each_permutation(m, [&](const Permutation& sigma) {
      if (!is_r_derangement(sigma, r)) return;
      ++count;
      if (sink) sink(format_blocks(reorder(p, sigma)));
    });
  });
  return count;
}

}  // namespace

std::string format_blocks(const std::vector<std::vector<unsigned>>& blocks) {
  std::string out;
  for (const auto& block : blocks) {
    out += '{';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(block[i]);
    }
    out += '}';
  }
  return out;
}

std::string format_cycles(const Permutation& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (unsigned start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    out += '(';
    unsigned e = start;
    bool first = true;
    do {
      if (!first) out += ',';
      first = false;
      out += std::to_string(e + 1);
      seen[e] = true;
      e = perm[e];
    } while (e != start);
    out += ')';
  }
  return out;
}

unsigned enumeration_cap(unsigned default_cap) {
  if (const char* env = std::getenv("DEBELL_MAX_ENUM")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return default_cap;
}

bool is_r_derangement(const Permutation& perm, unsigned r) {
  const unsigned m = static_cast<unsigned>(perm.size());
  if (r > m) return false;
  std::vector<unsigned> cycle(m, m);
  unsigned next_id = 0;
  for (unsigned start = 0; start < m; ++start) {
    if (perm[start] == start) return false;
    if (cycle[start] != m) continue;
    for (unsigned e = start; cycle[e] == m; e = perm[e]) cycle[e] = next_id;
    ++next_id;
  }
  for (unsigned i = 0; i < r; ++i) {
    for (unsigned j = i + 1; j < r; ++j) {
      if (cycle[i] == cycle[j]) return false;
    }
  }
  return true;
}

void for_each_set_partition(unsigned n, const std::function<void(const BlockPartition&)>& visit) {
  std::vector<unsigned> labels(n);
  restricted_growth(n, labels, 0, 0, visit);
}

Integer set_partitions_count(unsigned n, unsigned k) {
  require_within_cap(n, 10, "set_partitions_count");
  return gen_set_partitions(n, k, 0, {});
}

Integer r_stirling_count(unsigned n, unsigned k, unsigned r) {
  require_within_cap(n + r, 10, "r_stirling_count");
  return gen_set_partitions(n + r, k + r, r, {});
}

Integer ordered_partitions_count(unsigned n) {
  require_within_cap(n, 9, "ordered_partitions_count");
  return gen_barred(n, 1, false, {});
}

Integer barred_count(unsigned n, unsigned lambda) {
  if (lambda < 1) throw std::invalid_argument("barred_count needs lambda >= 1");
  require_within_cap(n, 9, "barred_count");
  return gen_barred(n, lambda, true, {});
}

Integer r_derangements_enum(unsigned k, unsigned r) {
  require_within_cap(k + r, 9, "r_derangements_enum");
  return gen_r_derangements(k + r, r, {});
}

Integer r_deranged_partitions_enum(unsigned n, unsigned r) {
  require_within_cap(n + r, 8, "r_deranged_partitions_enum");
  const Integer direct = gen_r_deranged_partitions(n, r, {});
  Integer factored = 0;
  for (unsigned i = 0; i <= n; ++i) factored += r_stirling_count(n, i, r) * r_derangements_enum(i, r);
  if (direct != factored) {
    throw std::logic_error("r-deranged partition counts disagree: direct " + direct.get_str() + ", factored " +
                           factored.get_str());
  }
  return direct;
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::SetPartitions: return "set-partitions";
    case Family::RStirling: return "r-stirling";
    case Family::Ordered: return "ordered";
    case Family::Barred: return "barred";
    case Family::Derangements: return "derangements";
    case Family::RDerangements: return "r-derangements";
    case Family::RDerangedPartitions: return "r-deranged-partitions";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::SetPartitions, Family::RStirling, Family::Ordered, Family::Barred, Family::Derangements,
                   Family::RDerangements, Family::RDerangedPartitions}) {
    if (to_string(f) == name) return f;
  }
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

ArrangementTally enumerate(const EnumQuery& q, const std::function<void(const std::string&)>& sink) {
  ArrangementTally tally{q.family, q, 0};
  switch (q.family) {
    case Family::SetPartitions:
      require_within_cap(q.n, 10, "set-partitions");
      tally.count = gen_set_partitions(q.n, q.k, 0, sink);
      break;
    case Family::RStirling:
      require_within_cap(q.n + q.r, 10, "r-stirling");
      tally.count = gen_set_partitions(q.n + q.r, q.k + q.r, q.r, sink);
      break;
    case Family::Ordered:
      require_within_cap(q.n, 9, "ordered");
      tally.count = gen_barred(q.n, 1, false, sink);
      break;
    case Family::Barred:
      if (q.lambda < 1) throw std::invalid_argument("barred family needs lambda >= 1");
      require_within_cap(q.n, 9, "barred");
      tally.count = gen_barred(q.n, q.lambda, true, sink);
      break;
    case Family::Derangements:
      require_within_cap(q.n, 9, "derangements");
      tally.count = gen_r_derangements(q.n, 0, sink);
      break;
    case Family::RDerangements:
      require_within_cap(q.k + q.r, 9, "r-derangements");
      tally.count = gen_r_derangements(q.k + q.r, q.r, sink);
      break;
    case Family::RDerangedPartitions:
      require_within_cap(q.n + q.r, 8, "r-deranged-partitions");
      tally.count = gen_r_deranged_partitions(q.n, q.r, sink);
      break;
  }
  return tally;
}

}  // namespace debell
