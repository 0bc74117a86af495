//! Table of marks `m([K],[H]) = |(G/K)^H|`.

use crate::lattice::{ClassId, SubgroupLattice};

/// Square table of marks over ConjSub(G) in canonical class order.
///
/// Row `K` is the transitive G-set `G/K`, column `H` the subgroup whose
/// fixed points are counted. Nonzero entries satisfy `[H] ≤ [K]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableOfMarks {
    size: usize,
    marks: Vec<i64>,
}

impl TableOfMarks {
    /// Counts, for every pair of class representatives, the cosets `gK`
    /// with `H·gK = gK`.
    pub fn compute(lattice: &SubgroupLattice) -> TableOfMarks {
        let group = lattice.group();
        let n = group.order();
        let c = lattice.num_classes();
        let mut marks = vec![0i64; c * c];
        for kc in lattice.class_ids() {
            let k = lattice.subgroup(lattice.class_rep(kc));
            // One representative per left coset gK.
            let mut covered = vec![false; n];
            let mut coset_reps = Vec::with_capacity(n / k.order());
            for g in 0..n {
                if covered[g] {
                    continue;
                }
                coset_reps.push(g);
                for &x in k.members() {
                    covered[group.mul(g, x)] = true;
                }
            }
            for hc in lattice.class_ids() {
                let h = lattice.subgroup(lattice.class_rep(hc));
                // h·gK = gK  ⇔  g⁻¹hg ∈ K
                let fixed = coset_reps
                    .iter()
                    .filter(|&&g| h.members().iter().all(|&x| k.contains(group.conjugate(g, x))))
                    .count();
                marks[kc.0 * c + hc.0] = fixed as i64;
            }
        }
        TableOfMarks { size: c, marks }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// `|(G/K)^H|` for classes `k` (the G-set) and `h` (the subgroup).
    pub fn mark(&self, k: ClassId, h: ClassId) -> i64 {
        self.marks[k.0 * self.size + h.0]
    }

    pub fn row(&self, k: ClassId) -> &[i64] {
        &self.marks[k.0 * self.size..(k.0 + 1) * self.size]
    }
}

impl SubgroupLattice {
    /// The table of marks, computed on first use and cached.
    pub fn table_of_marks(&self) -> &TableOfMarks {
        self.marks.get_or_init(|| TableOfMarks::compute(self))
    }
}
