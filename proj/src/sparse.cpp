#include "jd/sparse.hpp"
#include <climits>

namespace jd {

// Rows are equations row_i . x = b_i. We eliminate the augmented system with
// the right-hand sides parked on sentinel columns past every real column id,
// so they can never become pivots while an equation still has an A-part.
std::vector<std::optional<SparseVec>>
solve_affine_multi(const std::vector<SparseVec> &rows_A,
                   const std::vector<SparseVec> &bs)
{
	int nb = (int)bs.size();
	long base = (long)INT_MAX - nb;
	RrefBasis rref;
	for (size_t i = 0; i < rows_A.size(); i++) {
		SparseVec aug = rows_A[i];
		for (int k = 0; k < nb; k++) {
			const Rat *bi = bs[k].get((int)i);
			if (bi)
				aug.set((int)(base + k), -*bi);
		}
		rref.insert(aug);
	}
	std::vector<std::optional<SparseVec>> out(nb, SparseVec{});
	for (auto &[p, row] : rref.rows) {
		if (p >= (int)base) {
			// zero A-part: every rhs this row touches is unreachable
			for (auto &[c, v] : row.e)
				out[c - base] = std::nullopt;
			continue;
		}
		for (auto &[c, v] : row.e)
			if (c >= (int)base && out[c - base])
				out[c - base]->set(p, -v);
	}
	return out;
}

std::optional<SparseVec> solve_affine(const std::vector<SparseVec> &rows_A,
                                      const SparseVec &b)
{
	return solve_affine_multi(rows_A, {b})[0];
}

} // namespace jd
