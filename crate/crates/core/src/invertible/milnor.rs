//! Milnor fibres of invertible polynomials under diagonal symmetries.

use crate::burnside::BurnsideElement;
use crate::error::Result;
use crate::index::{index_from_fixed_indices_sub, FixedSetIndexData};
use crate::lattice::SubgroupId;

use super::diagonal::DiagonalGroup;
use super::poly::InvertiblePolynomial;

type Burnside = BurnsideElement<i64>;

/// What one subgroup `H` sees of the Milnor fibre: its fixed coordinates,
/// the restricted polynomial, its Milnor number and `χ(M_f^H)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedMilnorDatum {
    pub locus: Vec<usize>,
    pub restricted: InvertiblePolynomial,
    pub mu: i64,
    pub chi: i64,
}

#[derive(Clone, Debug)]
pub struct MilnorData {
    /// Indexed by [`SubgroupId`] of the acting group.
    pub per_subgroup: Vec<FixedMilnorDatum>,
    /// `χ^G(M_f)`.
    pub chi_g: Burnside,
}

fn fixed_datum(f: &InvertiblePolynomial, g: &DiagonalGroup, h: SubgroupId) -> Result<FixedMilnorDatum> {
    let locus = g.fixed_locus(h);
    let restricted = f.restrict_to(&locus)?;
    let mu = restricted.milnor_number()?;
    let m = locus.len();
    // The fibre of an m-variable isolated singularity is a bouquet of μ
    // spheres of dimension m − 1.
    let chi = if m == 0 {
        0
    } else if m % 2 == 1 {
        1 + mu
    } else {
        1 - mu
    };
    Ok(FixedMilnorDatum {
        locus,
        restricted,
        mu,
        chi,
    })
}

/// `χ(M_f^H)`: zero if `H` fixes no coordinate, else `1 + (−1)^{m−1} μ(f|_S)`.
pub fn chi_milnor_fixed(f: &InvertiblePolynomial, g: &DiagonalGroup, h: SubgroupId) -> Result<i64> {
    g.check_symmetries_of(f)?;
    Ok(fixed_datum(f, g, h)?.chi)
}

/// Fixed-point data for every subgroup and `χ^G(M_f)` assembled from it by
/// Möbius inversion over Sub(G).
pub fn milnor_data(f: &InvertiblePolynomial, g: &DiagonalGroup) -> Result<MilnorData> {
    g.check_symmetries_of(f)?;
    let lattice = g.lattice();
    let per_subgroup = lattice
        .ids()
        .map(|h| fixed_datum(f, g, h))
        .collect::<Result<Vec<_>>>()?;
    let chis = per_subgroup.iter().map(|d| d.chi).collect();
    let chi_g = index_from_fixed_indices_sub(&FixedSetIndexData::new(lattice, chis, None)?)?;
    Ok(MilnorData { per_subgroup, chi_g })
}

/// `χ^G(M_f)`.
#[allow(non_snake_case)]
pub fn chi_G_milnor(f: &InvertiblePolynomial, g: &DiagonalGroup) -> Result<Burnside> {
    Ok(milnor_data(f, g)?.chi_g)
}

/// `χ̄^G(M_f) = χ^G(M_f) − [G/G]`.
#[allow(non_snake_case)]
pub fn chibar_G_milnor(f: &InvertiblePolynomial, g: &DiagonalGroup) -> Result<Burnside> {
    Ok(&chi_G_milnor(f, g)? - &Burnside::one(g.lattice()))
}

/// `ind_rad^G(df) = −χ̄^G(M_f) = [G/G] − χ^G(M_f)`.
pub fn index_df(f: &InvertiblePolynomial, g: &DiagonalGroup) -> Result<Burnside> {
    Ok(&Burnside::one(g.lattice()) - &chi_G_milnor(f, g)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invertible::diagonal::symmetry_group;
    use crate::lattice::{ClassId, SubgroupLattice};

    fn terms(l: &SubgroupLattice, t: &[(usize, i64)]) -> Vec<(ClassId, i64)> {
        t.iter()
            .map(|&(order, a)| (l.class_ids().find(|&c| l.class_order(c) == order).unwrap(), a))
            .collect()
    }

    fn check(e: Vec<Vec<i64>>, chi: &[(usize, i64)], mu: i64) {
        let f = InvertiblePolynomial::validate(e).unwrap();
        let g = symmetry_group(&f).unwrap();
        let l = g.lattice();
        let expected = Burnside::from_terms(l, terms(l, chi));
        assert_eq!(chi_G_milnor(&f, &g).unwrap(), expected);
        let ind = index_df(&f, &g).unwrap();
        assert_eq!(ind, &Burnside::one(l) - &expected);
        assert_eq!(ind.cardinality(), mu);
    }

    #[test]
    fn ground_truth() {
        check(vec![vec![2, 0], vec![0, 3]], &[(1, -1), (2, 1), (3, 1)], 2);
        check(vec![vec![2, 1], vec![0, 3]], &[(1, -1), (2, 1)], 4);
        check(vec![vec![2, 0], vec![1, 3]], &[(1, -1), (3, 1)], 5);
    }

    #[test]
    fn fixed_characteristics() {
        let f = InvertiblePolynomial::chain(&[2, 3]).unwrap();
        let g = symmetry_group(&f).unwrap();
        let l = g.lattice();
        assert_eq!(chi_milnor_fixed(&f, &g, l.whole()).unwrap(), 0);
        assert_eq!(chi_milnor_fixed(&f, &g, l.trivial_subgroup()).unwrap(), -3);
        let z2 = l.ids().find(|&h| l.subgroup_order(h) == 2).unwrap();
        assert_eq!(chi_milnor_fixed(&f, &g, z2).unwrap(), 3);
    }

    #[test]
    fn marks_are_fixed_characteristics() {
        let f = InvertiblePolynomial::loop_of(&[2, 3]).unwrap();
        let g = symmetry_group(&f).unwrap();
        let data = milnor_data(&f, &g).unwrap();
        let l = g.lattice();
        for h in l.ids() {
            assert_eq!(data.chi_g.mark(l.class_of(h)), data.per_subgroup[h.0].chi);
        }
    }

    #[test]
    fn trivial_group_reduces_to_milnor_number() {
        let f = InvertiblePolynomial::chain(&[2, 3]).unwrap();
        let g = symmetry_group(&f).unwrap();
        let trivial = g.subgroup(g.lattice().trivial_subgroup());
        let ind = index_df(&f, &trivial).unwrap();
        assert_eq!(ind, Burnside::one(trivial.lattice()).scale(&4));
    }

    #[test]
    fn foreign_groups_are_rejected() {
        let f = InvertiblePolynomial::chain(&[2, 3]).unwrap();
        let g = symmetry_group(&InvertiblePolynomial::fermat(5).unwrap()).unwrap();
        assert!(index_df(&f, &g).is_err());
    }
}
