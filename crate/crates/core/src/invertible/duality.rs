//! Consistency checks between `f` and its Berglund–Hübsch transpose.

use super::diagonal::DualPair;
use super::milnor::index_df;
use super::poly::InvertiblePolynomial;
use crate::error::{Error, Result};

/// Largest `|det E|` accepted by [`duality_check`].
pub const MAX_DUALITY_DET: i128 = 500;

/// One dual pair `(H, Hᵀ)` with the orbifold indices on both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualPairRow {
    pub subgroup: String,
    pub dual_subgroup: String,
    pub order: usize,
    pub dual_order: usize,
    /// `r_1(ind^H(df))`
    pub r1: i64,
    /// `r_1(ind^{Hᵀ}(df̃))`
    pub dual_r1: i64,
    pub equal: bool,
    /// `r1 = (−1)ⁿ dual_r1`
    pub equal_up_to_sign: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityReport {
    pub num_vars: usize,
    pub det: i128,
    /// `r_0(ind^{G_f}(df))`
    pub r0: i64,
    /// `r_0(ind^{G_f̃}(df̃))`
    pub dual_r0: i64,
    pub r0_equal: bool,
    pub pairs: Vec<DualPairRow>,
    /// The r_0 identity and every pair agree exactly.
    pub all_equal: bool,
    /// The r_0 identity and every pair agree after the sign `(−1)ⁿ` on r_1.
    pub all_equal_up_to_sign: bool,
}

pub fn duality_check(f: &InvertiblePolynomial) -> Result<DualityReport> {
    if f.det().abs() > MAX_DUALITY_DET {
        return Err(Error::BoundExceeded(format!(
            "|det E| = {} exceeds {MAX_DUALITY_DET}",
            f.det().abs()
        )));
    }
    let pair = DualPair::new(f)?;
    let (g, gt) = (pair.group(), pair.dual_group());
    let ft = pair.dual_polynomial();
    let r0 = index_df(f, g)?.r_k(0)?;
    let dual_r0 = index_df(ft, gt)?.r_k(0)?;
    let sign = if f.num_vars().is_multiple_of(2) { 1 } else { -1 };
    let mut pairs = Vec::new();
    for h in g.lattice().ids() {
        let ht = pair.dual_subgroup(h);
        let r1 = index_df(f, &g.subgroup(h))?.r_k(1)?;
        let dual_r1 = index_df(ft, &gt.subgroup(ht))?.r_k(1)?;
        pairs.push(DualPairRow {
            subgroup: g.lattice().label(h),
            dual_subgroup: gt.lattice().label(ht),
            order: g.lattice().subgroup_order(h),
            dual_order: gt.lattice().subgroup_order(ht),
            r1,
            dual_r1,
            equal: r1 == dual_r1,
            equal_up_to_sign: r1 == sign * dual_r1,
        });
    }
    let r0_equal = r0 == dual_r0;
    Ok(DualityReport {
        num_vars: f.num_vars(),
        det: f.det(),
        r0,
        dual_r0,
        r0_equal,
        all_equal: r0_equal && pairs.iter().all(|p| p.equal),
        all_equal_up_to_sign: r0_equal && pairs.iter().all(|p| p.equal_up_to_sign),
        pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_example() {
        let f = InvertiblePolynomial::chain(&[2, 3]).unwrap();
        let report = duality_check(&f).unwrap();
        assert_eq!((report.r0, report.dual_r0), (1, 1));
        let whole = report.pairs.iter().find(|p| p.order == 6).unwrap();
        assert_eq!((whole.r1, whole.dual_r1), (5, 5));
        let trivial = report.pairs.iter().find(|p| p.order == 1).unwrap();
        assert_eq!((trivial.r1, trivial.dual_r1), (4, 4));
        assert!(report.all_equal);
    }

    #[test]
    fn bound() {
        let f = InvertiblePolynomial::fermat(501).unwrap();
        assert!(matches!(duality_check(&f), Err(Error::BoundExceeded(_))));
    }
}
