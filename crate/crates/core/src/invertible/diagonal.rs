//! Diagonal symmetry groups and the pairing between `G_f` and `G_{f̃}`.

use std::sync::Arc;

use num_traits::Zero;

use super::matrix::inverse;
use super::poly::InvertiblePolynomial;
use crate::error::{Error, Result};
use crate::group::{build_group, phase_is_zero, reduce_phase, Phase, Presentation};
use crate::lattice::{build_lattice, SubgroupId, SubgroupLattice};

/// Largest `|det E|` for which the symmetry group is built.
pub const MAX_SYMMETRY_ORDER: i128 = 2000;

/// A group of diagonal phase vectors, with its subgroup lattice.
#[derive(Clone, Debug)]
pub struct DiagonalGroup {
    dim: usize,
    lattice: Arc<SubgroupLattice>,
}

impl DiagonalGroup {
    /// Wraps a lattice whose elements are phase vectors of length `dim`.
    pub fn from_lattice(dim: usize, lattice: Arc<SubgroupLattice>) -> Result<Self> {
        let ok = lattice
            .group()
            .elements()
            .iter()
            .all(|e| e.as_phases().is_some_and(|p| p.len() == dim))
            || (dim == 0 && lattice.order() == 1);
        if !ok {
            return Err(Error::InvalidPresentation(format!(
                "expected phase vectors of length {dim}"
            )));
        }
        Ok(DiagonalGroup { dim, lattice })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn lattice(&self) -> &Arc<SubgroupLattice> {
        &self.lattice
    }

    pub fn order(&self) -> usize {
        self.lattice.order()
    }

    pub fn phases(&self, g: usize) -> &[Phase] {
        self.lattice.group().element(g).as_phases().unwrap_or(&[])
    }

    /// The group `H` as a diagonal group in its own right.
    pub fn subgroup(&self, h: SubgroupId) -> DiagonalGroup {
        DiagonalGroup {
            dim: self.dim,
            lattice: Arc::clone(self.lattice.embed(h).lattice()),
        }
    }

    /// Coordinates on which every element of `H` acts trivially.
    pub fn fixed_locus(&self, h: SubgroupId) -> Vec<usize> {
        let gens = self.lattice.subgroup(h).generators();
        (0..self.dim)
            .filter(|&j| gens.iter().all(|&g| phase_is_zero(&self.phases(g)[j])))
            .collect()
    }

    /// Checks `E·a ∈ ℤⁿ` for every element.
    pub fn check_symmetries_of(&self, f: &InvertiblePolynomial) -> Result<()> {
        if f.num_vars() != self.dim {
            return Err(Error::NotASymmetry(format!(
                "group acts on {} coordinates, polynomial has {}",
                self.dim,
                f.num_vars()
            )));
        }
        for g in 0..self.order() {
            if !is_symmetry(f, self.phases(g)) {
                return Err(Error::NotASymmetry(format!("{}", self.lattice.group().element(g))));
            }
        }
        Ok(())
    }
}

/// `f(λ·z) = f(z)` for `λ_j = exp(2πi a_j)`: every row of `E·a` is integral.
pub fn is_symmetry(f: &InvertiblePolynomial, a: &[Phase]) -> bool {
    a.len() == f.num_vars()
        && f.matrix().iter().all(|row| {
            row.iter()
                .zip(a)
                .map(|(&e, p)| *p * e)
                .fold(Phase::zero(), |x, y| x + y)
                .is_integer()
        })
}

/// `G_f`: generated by the columns of `E⁻¹`, of order `|det E|`.
pub fn symmetry_group(f: &InvertiblePolynomial) -> Result<DiagonalGroup> {
    let n = f.num_vars();
    if f.det().abs() > MAX_SYMMETRY_ORDER {
        return Err(Error::OrderBound {
            bound: MAX_SYMMETRY_ORDER as usize,
        });
    }
    let lattice = if n == 0 {
        SubgroupLattice::trivial()
    } else {
        let inv = inverse(f.matrix())?;
        let generators = (0..n)
            .map(|j| (0..n).map(|i| reduce_phase(inv[i][j])).collect())
            .collect();
        let group = build_group(&Presentation::Diagonal { generators })?;
        if group.order() as i128 != f.det().abs() {
            return Err(Error::Inconsistent(format!(
                "symmetry group has order {}, |det E| = {}",
                group.order(),
                f.det().abs()
            )));
        }
        build_lattice(Arc::new(group))?
    };
    Ok(DiagonalGroup { dim: n, lattice })
}

/// `⟨a, b⟩ = aᵀ Eᵀ b mod 1` for `a ∈ G_f`, `b ∈ G_{f̃}`.
pub fn pairing(f: &InvertiblePolynomial, a: &[Phase], b: &[Phase]) -> Result<Phase> {
    if !is_symmetry(f, a) {
        return Err(Error::NotASymmetry(format!("{a:?} is not in G_f")));
    }
    let e = f.matrix();
    let n = f.num_vars();
    let transposed_ok = b.len() == n
        && (0..n).all(|j| {
            (0..n)
                .map(|i| b[i] * e[i][j])
                .fold(Phase::zero(), |x, y| x + y)
                .is_integer()
        });
    if !transposed_ok {
        return Err(Error::NotASymmetry(format!("{b:?} is not in the dual group")));
    }
    Ok(raw_pairing(f, a, b))
}

fn raw_pairing(f: &InvertiblePolynomial, a: &[Phase], b: &[Phase]) -> Phase {
    // (E a)ᵀ b
    let e = f.matrix();
    let mut total = Phase::zero();
    for (i, row) in e.iter().enumerate() {
        let ea: Phase = row
            .iter()
            .zip(a)
            .map(|(&x, p)| *p * x)
            .fold(Phase::zero(), |x, y| x + y);
        total += ea * b[i];
    }
    reduce_phase(total)
}

/// `G_f` and `G_{f̃}` with the pairing between them, checked to be perfect.
#[derive(Clone, Debug)]
pub struct DualPair {
    f: InvertiblePolynomial,
    dual: InvertiblePolynomial,
    group: DiagonalGroup,
    dual_group: DiagonalGroup,
}

impl DualPair {
    pub fn new(f: &InvertiblePolynomial) -> Result<Self> {
        let dual = f.transpose();
        let pair = DualPair {
            group: symmetry_group(f)?,
            dual_group: symmetry_group(&dual)?,
            f: f.clone(),
            dual,
        };
        pair.check_perfect()?;
        Ok(pair)
    }

    pub fn polynomial(&self) -> &InvertiblePolynomial {
        &self.f
    }

    pub fn dual_polynomial(&self) -> &InvertiblePolynomial {
        &self.dual
    }

    pub fn group(&self) -> &DiagonalGroup {
        &self.group
    }

    pub fn dual_group(&self) -> &DiagonalGroup {
        &self.dual_group
    }

    /// Pairing of element ids `a ∈ G_f`, `b ∈ G_{f̃}`.
    pub fn pair(&self, a: usize, b: usize) -> Phase {
        raw_pairing(&self.f, self.group.phases(a), self.dual_group.phases(b))
    }

    /// Both induced maps into the character groups are injective.
    fn check_perfect(&self) -> Result<()> {
        let gens_t = self
            .dual_group
            .lattice()
            .subgroup(self.dual_group.lattice().whole())
            .generators();
        let gens = self.group.lattice().subgroup(self.group.lattice().whole()).generators();
        let identity = self.group.lattice().group().identity();
        let dual_identity = self.dual_group.lattice().group().identity();
        for a in (0..self.group.order()).filter(|&a| a != identity) {
            if gens_t.iter().all(|&b| self.pair(a, b).is_zero()) {
                return Err(Error::DegeneratePairing(format!(
                    "{} pairs trivially with G_f̃",
                    self.group.lattice().group().element(a)
                )));
            }
        }
        for b in (0..self.dual_group.order()).filter(|&b| b != dual_identity) {
            if gens.iter().all(|&a| self.pair(a, b).is_zero()) {
                return Err(Error::DegeneratePairing(format!(
                    "{} pairs trivially with G_f",
                    self.dual_group.lattice().group().element(b)
                )));
            }
        }
        Ok(())
    }

    /// `Hᵀ = {b ∈ G_{f̃} : ⟨a, b⟩ = 0 for all a ∈ H}`.
    pub fn dual_subgroup(&self, h: SubgroupId) -> SubgroupId {
        let gens = self.group.lattice().subgroup(h).generators();
        let members: Vec<usize> = (0..self.dual_group.order())
            .filter(|&b| gens.iter().all(|&a| self.pair(a, b).is_zero()))
            .collect();
        self.dual_group
            .lattice()
            .find(&members)
            .expect("annihilator is a subgroup")
    }

    /// The annihilator in `G_f` of a subgroup of `G_{f̃}`.
    pub fn dual_subgroup_of_dual(&self, k: SubgroupId) -> SubgroupId {
        let gens = self.dual_group.lattice().subgroup(k).generators();
        let members: Vec<usize> = (0..self.group.order())
            .filter(|&a| gens.iter().all(|&b| self.pair(a, b).is_zero()))
            .collect();
        self.group.lattice().find(&members).expect("annihilator is a subgroup")
    }
}
