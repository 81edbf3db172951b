#pragma once

#include <string>
#include <vector>

#include "fockalg/scalar.hpp"

namespace fockalg {

using Partition = std::vector<int>;          // weakly decreasing, positive parts
using MultiPartition = std::vector<Partition>;

int size(const Partition& l);
int degree(const MultiPartition& m);

// All partitions of n, reverse lexicographic: (n), (n-1,1), (n-2,2), ...
const std::vector<Partition>& partitions_of(int n);
int partition_count(int n);

// r-tuples of partitions of total size n: size vectors in descending lex order,
// then components in the order of partitions_of.
std::vector<MultiPartition> multipartitions_of(int n, int r);

Partition conjugate(const Partition& l);
// a >= b in dominance order (same size assumed)
bool dominates(const Partition& a, const Partition& b);

struct HookData {
    int arm, leg, content;
};
// 1-indexed box (i, j) = (row, column)
HookData hook_data(const Partition& l, int i, int j);

// z_lambda = prod_k k^{m_k} m_k!
Z z_lambda(const Partition& l);
// number of standard tableaux via the hook length formula
Z standard_tableaux_count(const Partition& l);
// m_k multiplicities indexed 1..max part
std::vector<int> multiplicities(const Partition& l);

std::string to_string(const Partition& l);
std::string to_string(const MultiPartition& m);

}  // namespace fockalg
