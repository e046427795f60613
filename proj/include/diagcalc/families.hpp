#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diagcalc/finite_monoid.hpp"
#include "diagcalc/partition.hpp"

namespace diagcalc {

/// Adjacent transposition (i, i+1).
Partition transposition(int i, int n);
/// id of the equivalence whose only non-trivial class is {i,j}.
Partition merge_projection(int i, int j, int n);
/// The map sending j to i and fixing everything else; i and j in any order.
Partition collapse(int i, int j, int n);
/// The map sending i+1 to i.
Partition step_down(int i, int n);
/// The map sending i to i+1.
Partition step_up(int i, int n);
/// d of the atom {i,j}: upper interval [i,j] joined to i' and j'.
Partition interval_cap(int i, int j, int n);
/// Identity with vertex i and i' cut off as singletons.
Partition point_cut(int i, int n);

enum class Family { pn, pnfd, sing_pnfd, ppn, ppnfd, tn, sing_tn, on, sn, en, fn, dn, in, jn, pen };

std::optional<Family> parse_family(std::string_view name);
std::string family_name(Family f);
std::vector<Family> all_families();
MonoidKind family_kind(Family f);

/// Elements built without any generating set: brute-force filters of P_n or
/// direct constructions from maps and equivalences. Sorted.
std::vector<Partition> concrete_elements(Family f, int n);

/// A generating set whose closure is the family.
std::vector<Generator> standard_generators(Family f, int n);

FiniteMonoid build_family(Family f, int n, std::size_t budget = kDefaultBudget);

/// Every partition of degree n in restricted-growth order.
std::vector<Partition> all_partitions(int n);
std::vector<Transformation> all_transformations(int n);

/// Sorted copy without duplicates.
std::vector<Partition> sorted(std::vector<Partition> v);

}  // namespace diagcalc
