//! Subgroup lattices of finite groups.
//!
//! All subgroups are enumerated by closing the cyclic subgroups under joins.
//! Subgroups are kept in canonical order (by order, then by sorted member
//! ids); conjugacy classes are represented by their smallest member in that
//! order, and classes are ordered by representative. Both Möbius functions
//! (on Sub(G) and on ConjSub(G)) are tabulated eagerly.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::marks::TableOfMarks;

/// Largest group order accepted by [`build_lattice`].
pub const MAX_GROUP_ORDER: usize = 2000;
/// Largest number of subgroups a lattice may have.
pub const MAX_SUBGROUPS: usize = 1024;

/// Index of a subgroup in the canonical subgroup list of a lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubgroupId(pub usize);

/// Index of a conjugacy class of subgroups in canonical class order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassId(pub usize);

impl fmt::Display for SubgroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A subgroup, as the sorted ids of its members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    members: Vec<usize>,
    generators: Vec<usize>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// Some generating set (not necessarily minimal).
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.binary_search(&g).is_ok()
    }
}

pub struct SubgroupLattice {
    group: Arc<FiniteGroup>,
    subgroups: Vec<Subgroup>,
    lookup: HashMap<Vec<usize>, SubgroupId>,
    leq: Vec<bool>,
    supers: Vec<Vec<SubgroupId>>,
    class_of: Vec<ClassId>,
    classes: Vec<Vec<SubgroupId>>,
    normalizers: Vec<SubgroupId>,
    mu_sub: Vec<i64>,
    zeta_conj: Vec<bool>,
    mu_conj: Vec<i64>,
    pub(crate) marks: OnceLock<TableOfMarks>,
}

impl fmt::Debug for SubgroupLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SubgroupLattice")
            .field("group", &self.group.fingerprint())
            .field("order", &self.group.order())
            .field("subgroups", &self.subgroups.len())
            .field("classes", &self.classes.len())
            .finish()
    }
}

/// Enumerates the subgroup lattice of `group`.
pub fn build_lattice(group: Arc<FiniteGroup>) -> Result<Arc<SubgroupLattice>> {
    let n = group.order();
    if n > MAX_GROUP_ORDER {
        return Err(Error::SizeBound(format!("group order {n} exceeds {MAX_GROUP_ORDER}")));
    }
    let mut found: Vec<Subgroup> = Vec::new();
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut push = |found: &mut Vec<Subgroup>, members: Vec<usize>, generators: Vec<usize>| -> Result<bool> {
        if seen.contains_key(&members) {
            return Ok(false);
        }
        if found.len() >= MAX_SUBGROUPS {
            return Err(Error::SizeBound(format!("more than {MAX_SUBGROUPS} subgroups")));
        }
        seen.insert(members.clone(), found.len());
        found.push(Subgroup { members, generators });
        Ok(true)
    };

    for g in 0..n {
        let gens = if g == group.identity() { vec![] } else { vec![g] };
        push(&mut found, group.generated(&gens), gens)?;
    }
    let cyclic_count = found.len();
    let mut i = 0;
    while i < found.len() {
        for c in 0..cyclic_count {
            let Some(&g) = found[c].generators.first() else {
                continue;
            };
            if found[i].contains(g) {
                continue;
            }
            let mut gens = found[i].generators.clone();
            gens.push(g);
            let members = group.generated(&gens);
            push(&mut found, members, gens)?;
        }
        i += 1;
    }
    Ok(Arc::new(SubgroupLattice::assemble(group, found)))
}

impl SubgroupLattice {
    fn assemble(group: Arc<FiniteGroup>, mut subgroups: Vec<Subgroup>) -> SubgroupLattice {
        subgroups.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members.cmp(&b.members)));
        let s = subgroups.len();
        let n = group.order();
        let lookup: HashMap<Vec<usize>, SubgroupId> = subgroups
            .iter()
            .enumerate()
            .map(|(i, h)| (h.members.clone(), SubgroupId(i)))
            .collect();

        let masks: Vec<Vec<bool>> = subgroups
            .iter()
            .map(|h| {
                let mut m = vec![false; n];
                for &g in &h.members {
                    m[g] = true;
                }
                m
            })
            .collect();
        let mut leq = vec![false; s * s];
        for a in 0..s {
            for b in a..s {
                let (oa, ob) = (subgroups[a].order(), subgroups[b].order());
                if ob % oa == 0 && subgroups[a].members.iter().all(|&g| masks[b][g]) {
                    leq[a * s + b] = true;
                }
            }
        }
        let supers: Vec<Vec<SubgroupId>> = (0..s)
            .map(|a| (a..s).filter(|&b| leq[a * s + b]).map(SubgroupId).collect())
            .collect();

        // Conjugacy classes and normalizers.
        let whole = SubgroupId(s - 1);
        let mut class_of = vec![ClassId(usize::MAX); s];
        let mut classes: Vec<Vec<SubgroupId>> = Vec::new();
        let mut normalizers = vec![whole; s];
        if group.is_abelian() {
            for h in 0..s {
                class_of[h] = ClassId(h);
                classes.push(vec![SubgroupId(h)]);
            }
        } else {
            for h in 0..s {
                let mut normalizer = Vec::new();
                let mut conjugates = Vec::new();
                for g in 0..n {
                    let mut image: Vec<usize> = subgroups[h].members.iter().map(|&x| group.conjugate(g, x)).collect();
                    image.sort_unstable();
                    let id = lookup[&image];
                    if id.0 == h {
                        normalizer.push(g);
                    }
                    conjugates.push(id);
                }
                normalizers[h] = lookup[&normalizer];
                if class_of[h].0 == usize::MAX {
                    conjugates.sort_unstable();
                    conjugates.dedup();
                    let id = ClassId(classes.len());
                    for c in &conjugates {
                        class_of[c.0] = id;
                    }
                    classes.push(conjugates);
                }
            }
        }

        // Möbius function of Sub(G). Canonical order is a linear extension
        // of inclusion, so supers[h] lists the interval [h, G] bottom-up.
        let mut mu_sub = vec![0i64; s * s];
        for h in 0..s {
            let up = &supers[h];
            for (j, k) in up.iter().enumerate() {
                let value = if k.0 == h {
                    1
                } else {
                    -up[..j]
                        .iter()
                        .filter(|z| leq[z.0 * s + k.0])
                        .map(|z| mu_sub[h * s + z.0])
                        .sum::<i64>()
                };
                mu_sub[h * s + k.0] = value;
            }
        }

        // ConjSub(G): [H] ≤ [K] iff the representative of [H] lies in some conjugate of K.
        let c = classes.len();
        let mut zeta_conj = vec![false; c * c];
        for a in 0..c {
            let rep = classes[a][0];
            for b in 0..c {
                zeta_conj[a * c + b] = classes[b].iter().any(|k| leq[rep.0 * s + k.0]);
            }
        }
        let mut mu_conj = vec![0i64; c * c];
        for a in 0..c {
            for b in a..c {
                if !zeta_conj[a * c + b] {
                    continue;
                }
                mu_conj[a * c + b] = if a == b {
                    1
                } else {
                    -(a..b)
                        .filter(|&z| zeta_conj[a * c + z] && zeta_conj[z * c + b])
                        .map(|z| mu_conj[a * c + z])
                        .sum::<i64>()
                };
            }
        }

        SubgroupLattice {
            group,
            subgroups,
            lookup,
            leq,
            supers,
            class_of,
            classes,
            normalizers,
            mu_sub,
            zeta_conj,
            mu_conj,
            marks: OnceLock::new(),
        }
    }

    /// Lattice of the trivial group.
    pub fn trivial() -> Arc<SubgroupLattice> {
        build_lattice(Arc::new(FiniteGroup::trivial())).expect("trivial lattice")
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Short identifier of the underlying group.
    pub fn id(&self) -> &str {
        self.group.fingerprint()
    }

    pub fn same_group(&self, other: &SubgroupLattice) -> bool {
        std::ptr::eq(self, other) || self.id() == other.id()
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = SubgroupId> + '_ {
        (0..self.subgroups.len()).map(SubgroupId)
    }

    pub fn subgroup(&self, h: SubgroupId) -> &Subgroup {
        &self.subgroups[h.0]
    }

    pub fn subgroup_order(&self, h: SubgroupId) -> usize {
        self.subgroups[h.0].order()
    }

    pub fn trivial_subgroup(&self) -> SubgroupId {
        SubgroupId(0)
    }

    pub fn whole(&self) -> SubgroupId {
        SubgroupId(self.subgroups.len() - 1)
    }

    /// Canonical label `H<order>_<index>`.
    pub fn label(&self, h: SubgroupId) -> String {
        format!("H{}_{}", self.subgroup_order(h), h.0)
    }

    /// Looks up a subgroup by its sorted member ids.
    pub fn find(&self, members: &[usize]) -> Option<SubgroupId> {
        self.lookup.get(members).copied()
    }

    /// Looks up a subgroup by an arbitrary (unsorted) member list.
    pub fn subgroup_of(&self, members: &[usize]) -> Result<SubgroupId> {
        let mut sorted = members.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        self.find(&sorted)
            .ok_or_else(|| Error::NotASubgroup(format!("{} elements do not form a subgroup", sorted.len())))
    }

    pub fn find_label(&self, label: &str) -> Result<SubgroupId> {
        let parse = || -> Option<SubgroupId> {
            let rest = label.strip_prefix('H')?;
            let (order, index) = rest.split_once('_')?;
            let (order, index): (usize, usize) = (order.parse().ok()?, index.parse().ok()?);
            (index < self.len() && self.subgroup_order(SubgroupId(index)) == order).then_some(SubgroupId(index))
        };
        parse().ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// `a ⊆ b`.
    pub fn contains(&self, a: SubgroupId, b: SubgroupId) -> bool {
        self.leq[a.0 * self.len() + b.0]
    }

    /// Subgroups containing `h` (including `h`), in canonical order.
    pub fn supergroups(&self, h: SubgroupId) -> &[SubgroupId] {
        &self.supers[h.0]
    }

    pub fn cyclic(&self, g: usize) -> SubgroupId {
        self.find(&self.group.generated(&[g]))
            .expect("every cyclic subgroup is enumerated")
    }

    /// Smallest subgroup containing both `a` and `b`.
    pub fn join(&self, a: SubgroupId, b: SubgroupId) -> SubgroupId {
        if self.contains(a, b) {
            return b;
        }
        if self.contains(b, a) {
            return a;
        }
        let mut gens = self.subgroups[a.0].generators.clone();
        gens.extend_from_slice(&self.subgroups[b.0].generators);
        self.find(&self.group.generated(&gens))
            .expect("lattice is closed under joins")
    }

    pub fn normalizer_of(&self, h: SubgroupId) -> SubgroupId {
        self.normalizers[h.0]
    }

    /// `N_G(H) = {g : g⁻¹Hg = H}` for a subgroup given by its members.
    pub fn normalizer(&self, members: &[usize]) -> Result<SubgroupId> {
        let group = &self.group;
        if !group.is_subgroup(members) {
            return Err(Error::NotASubgroup(format!(
                "{} elements are not closed under multiplication",
                members.len()
            )));
        }
        let mut mask = vec![false; group.order()];
        for &x in members {
            mask[x] = true;
        }
        let normalizer: Vec<usize> = (0..group.order())
            .filter(|&g| members.iter().all(|&x| mask[group.conjugate(g, x)]))
            .collect();
        Ok(self.find(&normalizer).expect("normalizer is a subgroup"))
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_ids(&self) -> impl Iterator<Item = ClassId> + '_ {
        (0..self.classes.len()).map(ClassId)
    }

    pub fn class_of(&self, h: SubgroupId) -> ClassId {
        self.class_of[h.0]
    }

    pub fn class_members(&self, c: ClassId) -> &[SubgroupId] {
        &self.classes[c.0]
    }

    pub fn class_rep(&self, c: ClassId) -> SubgroupId {
        self.classes[c.0][0]
    }

    /// Order of the subgroups in class `c`.
    pub fn class_order(&self, c: ClassId) -> usize {
        self.subgroup_order(self.class_rep(c))
    }

    pub fn class_label(&self, c: ClassId) -> String {
        self.label(self.class_rep(c))
    }

    /// The class containing the subgroup with the given label.
    pub fn class_by_label(&self, label: &str) -> Result<ClassId> {
        Ok(self.class_of(self.find_label(label)?))
    }

    pub fn trivial_class(&self) -> ClassId {
        ClassId(0)
    }

    pub fn whole_class(&self) -> ClassId {
        ClassId(self.classes.len() - 1)
    }

    /// μ′(H, K) on Sub(G); zero unless `H ⊆ K`.
    pub fn mu_sub(&self, h: SubgroupId, k: SubgroupId) -> i64 {
        self.mu_sub[h.0 * self.len() + k.0]
    }

    /// ζ([H], [K]) = 1 iff some conjugate of K contains H.
    pub fn zeta_conj(&self, h: ClassId, k: ClassId) -> bool {
        self.zeta_conj[h.0 * self.num_classes() + k.0]
    }

    /// μ([H], [K]) on ConjSub(G).
    pub fn mu_conj(&self, h: ClassId, k: ClassId) -> i64 {
        self.mu_conj[h.0 * self.num_classes() + k.0]
    }

    /// The subgroup `h` as a group of its own, with its own lattice.
    pub fn embed(self: &Arc<Self>, h: SubgroupId) -> SubgroupEmbedding {
        let members = self.subgroups[h.0].members.clone();
        let group = Arc::new(self.group.restricted_to(&members));
        let local = |g: usize| members.binary_search(&g).expect("member of subgroup");
        let subgroups: Vec<Subgroup> = self
            .ids()
            .filter(|&k| self.contains(k, h))
            .map(|k| {
                let sub = &self.subgroups[k.0];
                Subgroup {
                    members: sub.members.iter().map(|&g| local(g)).collect(),
                    generators: sub.generators.iter().map(|&g| local(g)).collect(),
                }
            })
            .collect();
        let lattice = Arc::new(SubgroupLattice::assemble(group, subgroups));
        let sub_to_parent = lattice
            .subgroups
            .iter()
            .map(|k| {
                let parent_members: Vec<usize> = k.members.iter().map(|&g| members[g]).collect();
                self.lookup[&parent_members]
            })
            .collect();
        SubgroupEmbedding {
            parent: Arc::clone(self),
            subgroup: h,
            lattice,
            to_parent: members,
            sub_to_parent,
        }
    }
}

/// A subgroup `H ⊆ G` together with its own lattice and the inclusion maps.
#[derive(Clone, Debug)]
pub struct SubgroupEmbedding {
    parent: Arc<SubgroupLattice>,
    subgroup: SubgroupId,
    lattice: Arc<SubgroupLattice>,
    to_parent: Vec<usize>,
    sub_to_parent: Vec<SubgroupId>,
}

impl SubgroupEmbedding {
    pub fn parent(&self) -> &Arc<SubgroupLattice> {
        &self.parent
    }

    /// The subgroup's id in the parent lattice.
    pub fn subgroup(&self) -> SubgroupId {
        self.subgroup
    }

    /// The lattice of the subgroup viewed as a group.
    pub fn lattice(&self) -> &Arc<SubgroupLattice> {
        &self.lattice
    }

    /// Parent element id of a local element id.
    pub fn element_to_parent(&self, g: usize) -> usize {
        self.to_parent[g]
    }

    /// Local element id of a parent element, if it lies in the subgroup.
    pub fn element_from_parent(&self, g: usize) -> Option<usize> {
        self.to_parent.binary_search(&g).ok()
    }

    /// Parent subgroup id of a local subgroup.
    pub fn subgroup_to_parent(&self, k: SubgroupId) -> SubgroupId {
        self.sub_to_parent[k.0]
    }
}
