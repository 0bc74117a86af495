//! Equivariant radial and GSV indices as Burnside-ring elements.
//!
//! Index data enters as integers (per stratum, per fixed set, per singular
//! orbit); everything here is bookkeeping in B(G) through the subgroup
//! lattice and its two Möbius functions.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::burnside::BurnsideElement;
use crate::error::{Error, Result};
use crate::gspace::{chi_G_stratified, StratifiedGData};
use crate::lattice::{ClassId, SubgroupEmbedding, SubgroupId, SubgroupLattice};
use crate::scalar::sign_power;

type Burnside = BurnsideElement<i64>;

/// Largest conjugacy class of subgroups for which fixed-set data over a
/// class is derived by inclusion–exclusion.
pub const MAX_INCLUSION_EXCLUSION_CLASS: usize = 16;

/// Index of a vector field summed over each stratum `V_i`, whose points all
/// have isotropy conjugate to `G_i`.
#[derive(Clone, Debug)]
pub struct StratumIndexData {
    lattice: Arc<SubgroupLattice>,
    entries: Vec<(ClassId, i64)>,
}

impl StratumIndexData {
    pub fn new(lattice: &Arc<SubgroupLattice>, entries: Vec<(ClassId, i64)>) -> Result<Self> {
        if let Some((c, _)) = entries.iter().find(|(c, _)| c.0 >= lattice.num_classes()) {
            return Err(Error::UnknownLabel(format!("class #{}", c.0)));
        }
        Ok(StratumIndexData {
            lattice: Arc::clone(lattice),
            entries,
        })
    }

    pub fn from_labels(lattice: &Arc<SubgroupLattice>, entries: &[(String, i64)]) -> Result<Self> {
        let entries = entries
            .iter()
            .map(|(label, ind)| Ok((lattice.class_by_label(label)?, *ind)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(lattice, entries)
    }

    pub fn lattice(&self) -> &Arc<SubgroupLattice> {
        &self.lattice
    }

    pub fn entries(&self) -> &[(ClassId, i64)] {
        &self.entries
    }
}

/// `Σ_i (|G_i|/|G|) ind(X; V_i, 0) [G/G_i]`.
pub fn index_from_strata(d: &StratumIndexData) -> Result<Burnside> {
    let l = d.lattice();
    let n = l.order() as i64;
    let mut b = Burnside::zero(l);
    for &(c, ind) in d.entries() {
        let scaled = ind * l.class_order(c) as i64;
        if scaled % n != 0 {
            return Err(Error::NonIntegral(format!(
                "stratum of type {} has index {ind}, not a multiple of its orbit size {}",
                l.class_label(c),
                n / l.class_order(c) as i64
            )));
        }
        b = &b + &Burnside::basis(l, c).scale(&(scaled / n));
    }
    Ok(b)
}

/// `Σ_[H] ind(X̄; V^([H])/G, 0) [G/H]` from indices of the quotient field.
pub fn index_from_quotient(d: &StratifiedGData) -> Burnside {
    chi_G_stratified(d)
}

/// Radial indices on fixed-point sets: `ind(V^H)` for every subgroup and,
/// optionally, `ind(V^[H])` on the union of the fixed sets of a class.
#[derive(Clone, Debug)]
pub struct FixedSetIndexData {
    lattice: Arc<SubgroupLattice>,
    per_subgroup: Vec<i64>,
    per_class: Option<Vec<i64>>,
}

impl FixedSetIndexData {
    /// `per_subgroup` is indexed by [`SubgroupId`], `per_class` by [`ClassId`].
    pub fn new(lattice: &Arc<SubgroupLattice>, per_subgroup: Vec<i64>, per_class: Option<Vec<i64>>) -> Result<Self> {
        if per_subgroup.len() != lattice.len() {
            return Err(Error::Inconsistent(format!(
                "{} fixed-set indices for {} subgroups",
                per_subgroup.len(),
                lattice.len()
            )));
        }
        if let Some(pc) = &per_class {
            if pc.len() != lattice.num_classes() {
                return Err(Error::Inconsistent(format!(
                    "{} class indices for {} classes",
                    pc.len(),
                    lattice.num_classes()
                )));
            }
        }
        for c in lattice.class_ids() {
            let members = lattice.class_members(c);
            let first = per_subgroup[members[0].0];
            if members.iter().any(|h| per_subgroup[h.0] != first) {
                return Err(Error::Inconsistent(format!(
                    "fixed-set indices differ across the conjugacy class of {}",
                    lattice.class_label(c)
                )));
            }
        }
        Ok(FixedSetIndexData {
            lattice: Arc::clone(lattice),
            per_subgroup,
            per_class,
        })
    }

    /// Data keyed by subgroup label. A label stands for its whole conjugacy
    /// class; every class must be covered.
    pub fn from_labels(
        lattice: &Arc<SubgroupLattice>,
        per_subgroup: &BTreeMap<String, i64>,
        per_class: Option<&BTreeMap<String, i64>>,
    ) -> Result<Self> {
        let mut by_class: Vec<Option<i64>> = vec![None; lattice.num_classes()];
        for (label, &v) in per_subgroup {
            let c = lattice.class_by_label(label)?;
            match by_class[c.0] {
                Some(w) if w != v => {
                    return Err(Error::Inconsistent(format!(
                        "conflicting fixed-set indices within the class of {label}"
                    )))
                }
                _ => by_class[c.0] = Some(v),
            }
        }
        let mut values = Vec::with_capacity(lattice.len());
        for h in lattice.ids() {
            let c = lattice.class_of(h);
            values
                .push(by_class[c.0].ok_or_else(|| {
                    Error::Inconsistent(format!("no fixed-set index for {}", lattice.class_label(c)))
                })?);
        }
        let per_class = match per_class {
            None => None,
            Some(map) => {
                let mut pc: Vec<Option<i64>> = vec![None; lattice.num_classes()];
                for (label, &v) in map {
                    pc[lattice.class_by_label(label)?.0] = Some(v);
                }
                Some(
                    pc.into_iter()
                        .enumerate()
                        .map(|(i, v)| {
                            v.ok_or_else(|| {
                                Error::Inconsistent(format!("no class index for {}", lattice.class_label(ClassId(i))))
                            })
                        })
                        .collect::<Result<Vec<_>>>()?,
                )
            }
        };
        Self::new(lattice, values, per_class)
    }

    pub fn lattice(&self) -> &Arc<SubgroupLattice> {
        &self.lattice
    }

    pub fn per_subgroup(&self) -> &[i64] {
        &self.per_subgroup
    }

    pub fn get(&self, h: SubgroupId) -> i64 {
        self.per_subgroup[h.0]
    }

    pub fn per_class(&self) -> Option<&[i64]> {
        self.per_class.as_deref()
    }

    /// `ind(V^[H])`, taken from the supplied class data or else derived from
    /// the per-subgroup data by inclusion–exclusion over the conjugates of
    /// `H`, using `V^{H_1} ∩ V^{H_2} = V^{⟨H_1, H_2⟩}`.
    pub fn class_values(&self) -> Result<Vec<i64>> {
        if let Some(pc) = &self.per_class {
            return Ok(pc.clone());
        }
        let l = &self.lattice;
        l.class_ids()
            .map(|c| {
                let members = l.class_members(c);
                if members.len() > MAX_INCLUSION_EXCLUSION_CLASS {
                    return Err(Error::BoundExceeded(format!(
                        "class of {} has {} conjugates; supply per-class data",
                        l.class_label(c),
                        members.len()
                    )));
                }
                let mut total = 0i64;
                for mask in 1u32..(1 << members.len()) {
                    let mut join: Option<SubgroupId> = None;
                    for (i, &h) in members.iter().enumerate() {
                        if mask >> i & 1 == 1 {
                            join = Some(join.map_or(h, |j| l.join(j, h)));
                        }
                    }
                    let sign = if mask.count_ones() % 2 == 1 { 1 } else { -1 };
                    total += sign * self.per_subgroup[join.expect("nonempty").0];
                }
                Ok(total)
            })
            .collect()
    }

    /// The same data seen by a subgroup `H`: its subgroups' fixed sets.
    pub fn restrict(&self, embedding: &SubgroupEmbedding) -> Result<FixedSetIndexData> {
        if !self.lattice.same_group(embedding.parent()) {
            return Err(Error::GroupMismatch {
                left: self.lattice.id().to_string(),
                right: embedding.parent().id().to_string(),
            });
        }
        let local = embedding.lattice();
        let values = local
            .ids()
            .map(|k| self.per_subgroup[embedding.subgroup_to_parent(k).0])
            .collect();
        FixedSetIndexData::new(local, values, None)
    }
}

/// Forward evaluation: `ind(V^H) = Σ_{K ⊇ H} a_[K] |N_G(K)|/|K|` and
/// `ind(V^[H]) = Σ_{[K] ≥ [H]} a_[K] |G|/|K|`.
pub fn fixed_indices_from_index(b: &Burnside) -> FixedSetIndexData {
    let l = b.lattice();
    let per_subgroup = l
        .ids()
        .map(|h| {
            l.supergroups(h)
                .iter()
                .map(|&k| {
                    let a = *b.coeff(l.class_of(k));
                    a * (l.subgroup_order(l.normalizer_of(k)) / l.subgroup_order(k)) as i64
                })
                .sum()
        })
        .collect();
    let per_class = l
        .class_ids()
        .map(|h| {
            b.terms()
                .filter(|&(k, _)| l.zeta_conj(h, k))
                .map(|(k, a)| a * (l.order() / l.class_order(k)) as i64)
                .sum()
        })
        .collect();
    FixedSetIndexData {
        lattice: Arc::clone(l),
        per_subgroup,
        per_class: Some(per_class),
    }
}

/// Inversion over Sub(G): `a_[H] = (|H|/|N_G(H)|) Σ_K μ′(H,K) ind(V^K)`.
pub fn index_from_fixed_indices_sub(d: &FixedSetIndexData) -> Result<Burnside> {
    let l = d.lattice();
    let coeffs = l
        .class_ids()
        .map(|c| {
            let h = l.class_rep(c);
            let sum: i64 = l.supergroups(h).iter().map(|&k| l.mu_sub(h, k) * d.get(k)).sum();
            let num = sum * l.subgroup_order(h) as i64;
            let den = l.subgroup_order(l.normalizer_of(h)) as i64;
            exact(num, den, l, c)
        })
        .collect::<Result<Vec<_>>>()?;
    Burnside::from_coeffs(l, coeffs)
}

/// Inversion over ConjSub(G): `a_[H] = (|H|/|G|) Σ_[K] μ([H],[K]) ind(V^[K])`.
pub fn index_from_fixed_indices_conj(d: &FixedSetIndexData) -> Result<Burnside> {
    let l = d.lattice();
    let values = d.class_values()?;
    let coeffs = l
        .class_ids()
        .map(|h| {
            let sum: i64 = l.class_ids().map(|k| l.mu_conj(h, k) * values[k.0]).sum();
            exact(sum * l.class_order(h) as i64, l.order() as i64, l, h)
        })
        .collect::<Result<Vec<_>>>()?;
    Burnside::from_coeffs(l, coeffs)
}

fn exact(num: i64, den: i64, l: &SubgroupLattice, c: ClassId) -> Result<i64> {
    if num % den != 0 {
        return Err(Error::NonIntegral(format!(
            "coefficient of [G/{}] is {num}/{den}",
            l.class_label(c)
        )));
    }
    Ok(num / den)
}

/// Both Möbius inversions; they must agree.
pub fn index_from_fixed_indices(d: &FixedSetIndexData) -> Result<Burnside> {
    let sub = index_from_fixed_indices_sub(d)?;
    let conj = index_from_fixed_indices_conj(d)?;
    if sub != conj {
        return Err(Error::Inconsistent(format!(
            "inversion over subgroups gives {sub}, over classes {conj}"
        )));
    }
    Ok(sub)
}

/// A singular orbit `G·p` with the local index of `p` in `B(G_p)`.
#[derive(Clone, Debug)]
pub struct SingularOrbitDatum {
    pub isotropy: SubgroupId,
    pub local_index: Burnside,
}

impl SingularOrbitDatum {
    /// A point with isotropy `h` whose local index is `k·[G_p/G_p]`.
    pub fn fixed_point(lattice: &Arc<SubgroupLattice>, h: SubgroupId, k: i64) -> Self {
        let embedding = lattice.embed(h);
        SingularOrbitDatum {
            isotropy: h,
            local_index: Burnside::one(embedding.lattice()).scale(&k),
        }
    }
}

/// `I^G_{G_p}` of the local index.
pub fn induce_orbit_index(datum: &SingularOrbitDatum, lattice: &Arc<SubgroupLattice>) -> Result<Burnside> {
    if datum.isotropy.0 >= lattice.len() {
        return Err(Error::NotASubgroup(format!("subgroup #{}", datum.isotropy.0)));
    }
    datum.local_index.induce(&lattice.embed(datum.isotropy))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoincareHopfReport {
    pub pass: bool,
    /// `Σ_p I^G_{G_p} ind(p) − χ^G`.
    pub discrepancy: Burnside,
}

/// Compares the sum of induced orbit indices with `χ^G`.
pub fn poincare_hopf_check(chi_g: &Burnside, orbits: &[SingularOrbitDatum]) -> Result<PoincareHopfReport> {
    let l = chi_g.lattice();
    let mut total = Burnside::zero(l);
    for datum in orbits {
        total = total.try_add(&induce_orbit_index(datum, l)?)?;
    }
    let discrepancy = total.try_sub(chi_g)?;
    Ok(PoincareHopfReport {
        pass: discrepancy.is_zero(),
        discrepancy,
    })
}

/// `ind_GSV = ind_rad + χ̄^G(M)`.
pub fn gsv_from_radial(ind_rad: &Burnside, chibar_milnor: &Burnside) -> Result<Burnside> {
    ind_rad.try_add(chibar_milnor)
}

/// Inputs of the GSV assembly: for every subgroup `K`, the dimension
/// `n_K` of its fixed space and, where `n_K > k`, `dim Ω_{V^K, ω}`.
#[derive(Clone, Debug)]
pub struct GsvDimensions {
    pub fixed_dims: Vec<usize>,
    pub dims: Vec<Option<i64>>,
}

/// `Σ_[H] (|H|/|N_G(H)|) Σ_{K: n_K > k} μ′(H,K) (−1)^{n_K−k} dim Ω_K [G/H]`.
pub fn gsv_assemble_from_dims(lattice: &Arc<SubgroupLattice>, data: &GsvDimensions, k: usize) -> Result<Burnside> {
    if data.fixed_dims.len() != lattice.len() || data.dims.len() != lattice.len() {
        return Err(Error::Inconsistent(format!(
            "dimension tables must have one entry per subgroup ({})",
            lattice.len()
        )));
    }
    let mut weighted = vec![0i64; lattice.len()];
    for h in lattice.ids() {
        let n_k = data.fixed_dims[h.0];
        if n_k > k {
            let d = data.dims[h.0].ok_or_else(|| Error::MissingDimension(lattice.label(h)))?;
            weighted[h.0] = sign_power::<i64>(n_k as i64 - k as i64) * d;
        }
    }
    let coeffs = lattice
        .class_ids()
        .map(|c| {
            let h = lattice.class_rep(c);
            let sum: i64 = lattice
                .supergroups(h)
                .iter()
                .map(|&kk| lattice.mu_sub(h, kk) * weighted[kk.0])
                .sum();
            exact(
                sum * lattice.subgroup_order(h) as i64,
                lattice.subgroup_order(lattice.normalizer_of(h)) as i64,
                lattice,
                c,
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Burnside::from_coeffs(lattice, coeffs)
}

/// `μ^G_f = (−1)^{n−1} χ̄^G(M_f)`.
pub fn equivariant_milnor(chibar: &Burnside, n: usize) -> Burnside {
    chibar.scale(&sign_power(n as i64 - 1))
}

/// `ind^{G,(k)} = r^(k)_G(ind^G)`.
pub fn higher_order_index(b: &Burnside, k: usize) -> Result<i64> {
    b.r_k(k)
}
