#pragma once
// Permutations of {1..n} in one-line notation, acting on the right:
// p[j-1] is the image (j)p, and (xy) means "first x, then y".

#include <vector>

namespace nw {

using Perm = std::vector<int>;

Perm perm_identity(int n);
/// Simple transposition s_i = (i, i+1).
Perm perm_simple(int i, int n);
Perm perm_mul(const Perm& x, const Perm& y);
Perm perm_inverse(const Perm& p);
bool perm_is_valid(const Perm& p);
bool perm_is_identity(const Perm& p);
int perm_length(const Perm& p);
/// Reduced word i_1..i_k with p = s_{i_1} ... s_{i_k}.
std::vector<int> reduced_word(const Perm& p);
/// All permutations of {1..n} in lexicographic one-line order.
std::vector<Perm> all_perms(int n);

}  // namespace nw
