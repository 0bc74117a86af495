//! The Burnside ring B(G).
//!
//! An element is an integer combination `Σ a_[H] [G/H]` over the conjugacy
//! classes of subgroups. Products are formed in mark space, where the mark
//! homomorphism `b ↦ (|b^H|)_[H]` is componentwise multiplicative, and pulled
//! back through the triangular table of marks.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lattice::{ClassId, SubgroupEmbedding, SubgroupId, SubgroupLattice};
use crate::scalar::{exact_div, Scalar};

/// Largest `k` accepted by the higher-order reductions.
pub const MAX_TUPLE_RANK: usize = 3;
/// Upper bound on `|G|^(k+1)` for the commuting-tuple sums.
pub const MAX_TUPLE_COUNT: u128 = 100_000_000;

#[derive(Clone)]
pub struct BurnsideElement<T> {
    lattice: Arc<SubgroupLattice>,
    coeffs: Vec<T>,
}

impl<T: Scalar> BurnsideElement<T> {
    pub fn zero(lattice: &Arc<SubgroupLattice>) -> Self {
        BurnsideElement {
            lattice: Arc::clone(lattice),
            coeffs: vec![T::zero(); lattice.num_classes()],
        }
    }

    /// The multiplicative identity `[G/G]`.
    pub fn one(lattice: &Arc<SubgroupLattice>) -> Self {
        Self::basis(lattice, lattice.whole_class())
    }

    /// The transitive G-set `[G/H]` for `H` in class `c`.
    pub fn basis(lattice: &Arc<SubgroupLattice>, c: ClassId) -> Self {
        let mut b = Self::zero(lattice);
        b.coeffs[c.0] = T::one();
        b
    }

    pub fn from_coeffs(lattice: &Arc<SubgroupLattice>, coeffs: Vec<T>) -> Result<Self> {
        if coeffs.len() != lattice.num_classes() {
            return Err(Error::Inconsistent(format!(
                "{} coefficients for {} classes",
                coeffs.len(),
                lattice.num_classes()
            )));
        }
        Ok(BurnsideElement {
            lattice: Arc::clone(lattice),
            coeffs,
        })
    }

    /// Sums `a·[G/H]` over the given terms; repeated classes accumulate.
    pub fn from_terms(lattice: &Arc<SubgroupLattice>, terms: impl IntoIterator<Item = (ClassId, T)>) -> Self {
        let mut b = Self::zero(lattice);
        for (c, a) in terms {
            b.coeffs[c.0] = b.coeffs[c.0].clone() + a;
        }
        b
    }

    pub fn lattice(&self) -> &Arc<SubgroupLattice> {
        &self.lattice
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, c: ClassId) -> &T {
        &self.coeffs[c.0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|a| a.is_zero())
    }

    /// Nonzero terms in canonical class order.
    pub fn terms(&self) -> impl Iterator<Item = (ClassId, &T)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(i, a)| (ClassId(i), a))
    }

    pub fn check_same_group(&self, other: &Self) -> Result<()> {
        if self.lattice.same_group(&other.lattice) {
            Ok(())
        } else {
            Err(Error::GroupMismatch {
                left: self.lattice.id().to_string(),
                right: other.lattice.id().to_string(),
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same_group(other)?;
        Ok(self.zip_with(other, |a, b| a.clone() + b.clone()))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same_group(other)?;
        Ok(self.zip_with(other, |a, b| a.clone() - b.clone()))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Self {
        BurnsideElement {
            lattice: Arc::clone(&self.lattice),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn scale(&self, k: &T) -> Self {
        BurnsideElement {
            lattice: Arc::clone(&self.lattice),
            coeffs: self.coeffs.iter().map(|a| a.clone() * k.clone()).collect(),
        }
    }

    /// `|b^H|` for `H` in class `h`.
    pub fn mark(&self, h: ClassId) -> T {
        let table = self.lattice.table_of_marks();
        self.terms()
            .fold(T::zero(), |acc, (k, a)| acc + a.clone() * T::from_int(table.mark(k, h)))
    }

    /// The image under the mark homomorphism, one entry per class.
    pub fn marks(&self) -> Vec<T> {
        self.lattice.class_ids().map(|h| self.mark(h)).collect()
    }

    /// Inverts the mark homomorphism. Fails when the mark vector does not
    /// come from an integral element.
    pub fn from_marks(lattice: &Arc<SubgroupLattice>, marks: &[T]) -> Result<Self> {
        let c = lattice.num_classes();
        if marks.len() != c {
            return Err(Error::Inconsistent(format!("{} marks for {c} classes", marks.len())));
        }
        let table = lattice.table_of_marks();
        let mut coeffs = vec![T::zero(); c];
        // mark(H) = Σ_{[K] ≥ [H]} a_K m(K, H): solve from the top class down.
        for h in (0..c).rev() {
            let mut rest = marks[h].clone();
            for k in h + 1..c {
                let m = table.mark(ClassId(k), ClassId(h));
                if m != 0 {
                    rest = rest - coeffs[k].clone() * T::from_int(m);
                }
            }
            let diag = T::from_int(table.mark(ClassId(h), ClassId(h)));
            coeffs[h] = exact_div(&rest, &diag).ok_or_else(|| {
                Error::NonIntegral(format!(
                    "mark vector is not integral at class {}",
                    lattice.class_label(ClassId(h))
                ))
            })?;
        }
        Ok(BurnsideElement {
            lattice: Arc::clone(lattice),
            coeffs,
        })
    }

    /// Ring product (cartesian product of G-sets).
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_same_group(other)?;
        let product: Vec<T> = self
            .marks()
            .into_iter()
            .zip(other.marks())
            .map(|(a, b)| a * b)
            .collect();
        Self::from_marks(&self.lattice, &product)
    }

    /// `|A| = Σ a_[H] |G|/|H|`.
    pub fn cardinality(&self) -> T {
        let n = self.lattice.order();
        self.terms().fold(T::zero(), |acc, (c, a)| {
            acc + a.clone() * T::from_count(n / self.lattice.class_order(c))
        })
    }

    /// Restriction `R^G_H`: the same sets with only the `H`-action.
    pub fn restrict(&self, embedding: &SubgroupEmbedding) -> Result<Self> {
        if !self.lattice.same_group(embedding.parent()) {
            return Err(Error::GroupMismatch {
                left: self.lattice.id().to_string(),
                right: embedding.parent().id().to_string(),
            });
        }
        let group = self.lattice.group();
        let n = group.order();
        let local = embedding.lattice();
        let h_members: Vec<usize> = (0..local.order()).map(|g| embedding.element_to_parent(g)).collect();
        let mut out = Self::zero(local);
        for (kc, a) in self.terms() {
            let k = self.lattice.subgroup(self.lattice.class_rep(kc));
            let mut coset_of = vec![usize::MAX; n];
            let mut reps = Vec::new();
            for g in 0..n {
                if coset_of[g] == usize::MAX {
                    for &x in k.members() {
                        coset_of[group.mul(g, x)] = reps.len();
                    }
                    reps.push(g);
                }
            }
            let mut visited = vec![false; reps.len()];
            for (ci, &g) in reps.iter().enumerate() {
                if visited[ci] {
                    continue;
                }
                for &h in &h_members {
                    visited[coset_of[group.mul(h, g)]] = true;
                }
                // Stabilizer of gK in H: h with g⁻¹hg ∈ K.
                let stabilizer: Vec<usize> = (0..local.order())
                    .filter(|&lh| k.contains(group.conjugate(g, h_members[lh])))
                    .collect();
                let sub = local.find(&stabilizer).expect("stabilizer is a subgroup");
                let c = local.class_of(sub).0;
                out.coeffs[c] = out.coeffs[c].clone() + a.clone();
            }
        }
        Ok(out)
    }

    /// Induction `I^G_H`: `[H/K] ↦ [G/K]`, for `self` an element of B(H).
    pub fn induce(&self, embedding: &SubgroupEmbedding) -> Result<Self> {
        if !self.lattice.same_group(embedding.lattice()) {
            return Err(Error::GroupMismatch {
                left: self.lattice.id().to_string(),
                right: embedding.lattice().id().to_string(),
            });
        }
        let parent = embedding.parent();
        let mut out = Self::zero(parent);
        for (c, a) in self.terms() {
            let k = embedding.subgroup_to_parent(self.lattice.class_rep(c));
            let pc = parent.class_of(k).0;
            out.coeffs[pc] = out.coeffs[pc].clone() + a.clone();
        }
        Ok(out)
    }

    /// `r^(k)_G(b)`: the linear map sending `[G/H]` to
    /// `(1/|G|) Σ |(G/H)^⟨g_0,…,g_k⟩|` over pairwise-commuting `(k+1)`-tuples.
    /// `r_0` counts orbits, `r_1` is the orbifold reduction.
    pub fn r_k(&self, k: usize) -> Result<T> {
        let counts = commuting_tuple_counts(&self.lattice, k)?;
        let marks = self.marks();
        let total = counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .fold(T::zero(), |acc, (s, &c)| {
                let class = self.lattice.class_of(SubgroupId(s));
                acc + T::from_u64(c).expect("tuple count fits") * marks[class.0].clone()
            });
        exact_div(&total, &T::from_count(self.lattice.order()))
            .ok_or_else(|| Error::NonIntegral(format!("r_{k}: fixed-point sum {total} not divisible by |G|")))
    }

    /// The permutation character `g ↦ |b^⟨g⟩|`.
    pub fn permutation_character(&self) -> ClassFunction<T> {
        let group = self.lattice.group();
        let marks = self.marks();
        let values = group
            .conjugacy_classes()
            .iter()
            .map(|class| {
                let cyclic = self.lattice.cyclic(class[0]);
                marks[self.lattice.class_of(cyclic).0].clone()
            })
            .collect();
        ClassFunction {
            lattice: Arc::clone(&self.lattice),
            values,
        }
    }

    /// Converts the coefficients to another scalar type.
    pub fn convert<U: Scalar>(&self) -> Option<BurnsideElement<U>> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.to_i128().and_then(U::from_i128))
            .collect::<Option<Vec<U>>>()?;
        Some(BurnsideElement {
            lattice: Arc::clone(&self.lattice),
            coeffs,
        })
    }
}

/// Number of pairwise-commuting `(k+1)`-tuples of elements generating each
/// subgroup, indexed by [`SubgroupId`].
///
/// A tuple is extended one element at a time; the next element has to
/// centralize the subgroup generated so far, which is the same as commuting
/// with every earlier entry.
pub fn commuting_tuple_counts(lattice: &SubgroupLattice, k: usize) -> Result<Vec<u64>> {
    let n = lattice.order();
    if k > MAX_TUPLE_RANK || (n as u128).pow(k as u32 + 1) > MAX_TUPLE_COUNT {
        return Err(Error::BoundExceeded(format!(
            "commuting {}-tuples in a group of order {n}",
            k + 1
        )));
    }
    let group = lattice.group();
    let s = lattice.len();
    let mut centralizers: HashMap<usize, Vec<usize>> = HashMap::new();
    let mut joins: HashMap<(usize, usize), usize> = HashMap::new();
    let mut counts = vec![0u64; s];
    counts[lattice.trivial_subgroup().0] = 1;
    for _ in 0..=k {
        let mut next = vec![0u64; s];
        for h in 0..s {
            if counts[h] == 0 {
                continue;
            }
            let sub = lattice.subgroup(SubgroupId(h));
            let cent = centralizers.entry(h).or_insert_with(|| {
                (0..n)
                    .filter(|&g| sub.generators().iter().all(|&x| group.commutes(g, x)))
                    .collect()
            });
            for &g in cent.iter() {
                let t = *joins.entry((h, g)).or_insert_with(|| {
                    if sub.contains(g) {
                        h
                    } else {
                        lattice.join(SubgroupId(h), lattice.cyclic(g)).0
                    }
                });
                next[t] += counts[h];
            }
        }
        counts = next;
    }
    Ok(counts)
}

impl<T: Scalar> PartialEq for BurnsideElement<T> {
    fn eq(&self, other: &Self) -> bool {
        self.lattice.same_group(&other.lattice) && self.coeffs == other.coeffs
    }
}

impl<T: Scalar> Eq for BurnsideElement<T> {}

impl<T: Scalar> fmt::Display for BurnsideElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, a) in self.terms() {
            let label = self.lattice.class_label(c);
            let (neg, mag) = if a.is_negative() {
                (true, -a.clone())
            } else {
                (false, a.clone())
            };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            if mag.is_one() {
                write!(f, "[G/{label}]")?;
            } else {
                write!(f, "{mag}[G/{label}]")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for BurnsideElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BurnsideElement<{}>({self})", self.lattice.id())
    }
}

impl<T: Scalar> Add for &BurnsideElement<T> {
    type Output = BurnsideElement<T>;

    /// # Panics
    /// If the operands live over different groups; see [`BurnsideElement::try_add`].
    fn add(self, rhs: Self) -> BurnsideElement<T> {
        self.try_add(rhs).expect("Burnside elements over different groups")
    }
}

impl<T: Scalar> Sub for &BurnsideElement<T> {
    type Output = BurnsideElement<T>;

    fn sub(self, rhs: Self) -> BurnsideElement<T> {
        self.try_sub(rhs).expect("Burnside elements over different groups")
    }
}

impl<T: Scalar> Add for BurnsideElement<T> {
    type Output = BurnsideElement<T>;

    fn add(self, rhs: Self) -> BurnsideElement<T> {
        &self + &rhs
    }
}

impl<T: Scalar> Sub for BurnsideElement<T> {
    type Output = BurnsideElement<T>;

    fn sub(self, rhs: Self) -> BurnsideElement<T> {
        &self - &rhs
    }
}

impl<T: Scalar> Neg for BurnsideElement<T> {
    type Output = BurnsideElement<T>;

    fn neg(self) -> BurnsideElement<T> {
        BurnsideElement {
            coeffs: self.coeffs.into_iter().map(|a| -a).collect(),
            lattice: self.lattice,
        }
    }
}

impl<T: Scalar> Neg for &BurnsideElement<T> {
    type Output = BurnsideElement<T>;

    fn neg(self) -> BurnsideElement<T> {
        -self.clone()
    }
}

/// A class function on G: one value per conjugacy class of elements, in the
/// order of [`crate::group::FiniteGroup::conjugacy_classes`].
#[derive(Clone, Debug)]
pub struct ClassFunction<T> {
    lattice: Arc<SubgroupLattice>,
    values: Vec<T>,
}

impl<T: Scalar> ClassFunction<T> {
    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn value(&self, g: usize) -> &T {
        &self.values[self.lattice.group().conjugacy_class_of(g)]
    }

    pub fn lattice(&self) -> &Arc<SubgroupLattice> {
        &self.lattice
    }
}

impl<T: Scalar> PartialEq for ClassFunction<T> {
    fn eq(&self, other: &Self) -> bool {
        self.lattice.same_group(&other.lattice) && self.values == other.values
    }
}
