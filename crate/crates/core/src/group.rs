//! Finite groups with an explicit multiplication table.
//!
//! Groups are built from a [`Presentation`] by closing the generators under
//! multiplication. Permutation and phase-vector elements are sorted into a
//! canonical order (the identity is always first); table presentations keep
//! the ids they were given.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Zero;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// An exact phase in ℚ/ℤ, always stored reduced into `[0, 1)`.
pub type Phase = Ratio<i64>;

/// Reduces a rational into `[0, 1)`.
pub fn reduce_phase(p: Phase) -> Phase {
    p - p.floor()
}

/// A concrete group element.
///
/// Permutations compose as functions, `(a·b)(x) = a(b(x))`, so a
/// permutation group acts on the left of its points.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Perm(Vec<u32>),
    Phases(Vec<Phase>),
    Abstract(u32),
}

impl Element {
    fn compose(&self, other: &Element) -> Element {
        match (self, other) {
            (Element::Perm(a), Element::Perm(b)) => Element::Perm(b.iter().map(|&x| a[x as usize]).collect()),
            (Element::Phases(a), Element::Phases(b)) => {
                Element::Phases(a.iter().zip(b).map(|(x, y)| reduce_phase(*x + *y)).collect())
            }
            _ => unreachable!("composition is only used within one presentation kind"),
        }
    }

    pub fn as_perm(&self) -> Option<&[u32]> {
        match self {
            Element::Perm(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_phases(&self) -> Option<&[Phase]> {
        match self {
            Element::Phases(p) => Some(p),
            _ => None,
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Perm(p) => {
                let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
                write!(f, "[{}]", parts.join(","))
            }
            Element::Phases(p) => {
                let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
                write!(f, "({})", parts.join(","))
            }
            Element::Abstract(i) => write!(f, "g{i}"),
        }
    }
}

/// How a group is handed to [`build_group`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Presentation {
    /// Generators as 0-based one-line images on `degree` points.
    Permutation { degree: usize, generators: Vec<Vec<usize>> },
    /// Generators as phase vectors in (ℚ/ℤ)ⁿ; the group law is addition mod 1.
    Diagonal { generators: Vec<Vec<Phase>> },
    /// An explicit multiplication table, `table[a][b] = a·b`.
    Table { table: Vec<Vec<usize>> },
}

impl Presentation {
    /// Cyclic group of order `n`, as phases `k/n` on one coordinate.
    pub fn cyclic(n: i64) -> Self {
        Presentation::Diagonal {
            generators: vec![vec![reduce_phase(Phase::new(1, n.max(1)))]],
        }
    }

    /// Finite abelian group Z/n₁ × … × Z/n_r as independent phase coordinates.
    pub fn abelian(orders: &[i64]) -> Self {
        let r = orders.len();
        let generators = orders
            .iter()
            .enumerate()
            .map(|(i, &n)| {
                (0..r)
                    .map(|j| {
                        if i == j {
                            reduce_phase(Phase::new(1, n.max(1)))
                        } else {
                            Phase::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        Presentation::Diagonal { generators }
    }

    /// Symmetric group on `n` points.
    pub fn symmetric(n: usize) -> Self {
        let mut generators = Vec::new();
        if n >= 2 {
            let mut swap: Vec<usize> = (0..n).collect();
            swap.swap(0, 1);
            generators.push(swap);
            generators.push((0..n).map(|i| (i + 1) % n).collect());
        }
        Presentation::Permutation { degree: n, generators }
    }

    /// Alternating group on `n ≥ 3` points, generated by 3-cycles `(0 1 i)`.
    pub fn alternating(n: usize) -> Self {
        let generators = (2..n)
            .map(|i| {
                let mut p: Vec<usize> = (0..n).collect();
                p[0] = 1;
                p[1] = i;
                p[i] = 0;
                p
            })
            .collect();
        Presentation::Permutation { degree: n, generators }
    }

    /// Symmetry group of the regular `n`-gon (order `2n`), acting on its vertices.
    pub fn dihedral(n: usize) -> Self {
        let rotation = (0..n).map(|i| (i + 1) % n).collect();
        let reflection = (0..n).map(|i| (n - i) % n).collect();
        Presentation::Permutation {
            degree: n,
            generators: vec![rotation, reflection],
        }
    }
}

/// Size limits enforced while building a group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_order: usize,
    pub max_degree: usize,
    pub max_denominator: i64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: 2000,
            max_degree: 16,
            max_denominator: 1_000_000,
        }
    }
}

/// A finite group with its full multiplication table.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    elements: Vec<Element>,
    index: HashMap<Element, usize>,
    table: Vec<u32>,
    inverses: Vec<u32>,
    identity: usize,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
    fingerprint: String,
}

/// Builds a group from a presentation with the default [`Limits`].
pub fn build_group(presentation: &Presentation) -> Result<FiniteGroup> {
    build_group_with(presentation, &Limits::default())
}

pub fn build_group_with(presentation: &Presentation, limits: &Limits) -> Result<FiniteGroup> {
    match presentation {
        Presentation::Permutation { degree, generators } => {
            if *degree > limits.max_degree {
                return Err(Error::BoundExceeded(format!(
                    "permutation degree {degree} exceeds {}",
                    limits.max_degree
                )));
            }
            let mut gens = Vec::with_capacity(generators.len());
            for (i, g) in generators.iter().enumerate() {
                if g.len() != *degree {
                    return Err(Error::NonInvertibleGenerator {
                        index: i,
                        reason: format!("expected {degree} images, got {}", g.len()),
                    });
                }
                let mut seen = vec![false; *degree];
                for &x in g {
                    if x >= *degree || seen[x] {
                        return Err(Error::NonInvertibleGenerator {
                            index: i,
                            reason: "images are not a permutation".into(),
                        });
                    }
                    seen[x] = true;
                }
                gens.push(Element::Perm(g.iter().map(|&x| x as u32).collect()));
            }
            let identity = Element::Perm((0..*degree as u32).collect());
            close_and_sort(identity, gens, limits.max_order)
        }
        Presentation::Diagonal { generators } => {
            let dim = generators.first().map_or(0, Vec::len);
            let mut gens = Vec::with_capacity(generators.len());
            for (i, g) in generators.iter().enumerate() {
                if g.len() != dim {
                    return Err(Error::InvalidPresentation(format!(
                        "phase generator {i} has {} coordinates, expected {dim}",
                        g.len()
                    )));
                }
                if let Some(p) = g.iter().find(|p| *p.denom() > limits.max_denominator) {
                    return Err(Error::NonInvertibleGenerator {
                        index: i,
                        reason: format!("denominator of {p} exceeds {}", limits.max_denominator),
                    });
                }
                gens.push(Element::Phases(g.iter().map(|p| reduce_phase(*p)).collect()));
            }
            let identity = Element::Phases(vec![Phase::zero(); dim]);
            close_and_sort(identity, gens, limits.max_order)
        }
        Presentation::Table { table } => from_table(table, limits.max_order),
    }
}

fn close_and_sort(identity: Element, gens: Vec<Element>, max_order: usize) -> Result<FiniteGroup> {
    let mut seen: HashMap<Element, ()> = HashMap::new();
    let mut queue = VecDeque::new();
    seen.insert(identity.clone(), ());
    queue.push_back(identity);
    let mut found = Vec::new();
    while let Some(x) = queue.pop_front() {
        for s in &gens {
            let y = x.compose(s);
            if !seen.contains_key(&y) {
                if seen.len() >= max_order {
                    return Err(Error::OrderBound { bound: max_order });
                }
                seen.insert(y.clone(), ());
                queue.push_back(y);
            }
        }
        found.push(x);
    }
    found.sort();
    let index: HashMap<Element, usize> = found.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let n = found.len();
    let mut table = vec![0u32; n * n];
    for (a, x) in found.iter().enumerate() {
        for (b, y) in found.iter().enumerate() {
            table[a * n + b] = index[&x.compose(y)] as u32;
        }
    }
    // The identity sorts first for both permutations and phase vectors.
    Ok(FiniteGroup::assemble(found, index, table, 0))
}

fn from_table(rows: &[Vec<usize>], max_order: usize) -> Result<FiniteGroup> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::InvalidPresentation("empty multiplication table".into()));
    }
    if n > max_order {
        return Err(Error::OrderBound { bound: max_order });
    }
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidPresentation("table is not square".into()));
    }
    if rows.iter().flatten().any(|&x| x >= n) {
        return Err(Error::InvalidPresentation("table entry out of range".into()));
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|a| rows[e][a] == a && rows[a][e] == a))
        .ok_or_else(|| Error::InvalidPresentation("no two-sided identity".into()))?;
    for a in 0..n {
        let has_inverse = (0..n).any(|b| rows[a][b] == identity && rows[b][a] == identity);
        if !has_inverse {
            return Err(Error::NonInvertibleGenerator {
                index: a,
                reason: "element has no two-sided inverse".into(),
            });
        }
    }
    let check = |a: usize, b: usize, c: usize| rows[rows[a][b]][c] == rows[a][rows[b][c]];
    let associative = if n <= 64 {
        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| check(a, b, c))))
    } else {
        // Deterministic sample of triples.
        let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
        (0..20_000).all(|_| {
            let mut next = || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                (state % n as u64) as usize
            };
            let (a, b, c) = (next(), next(), next());
            check(a, b, c)
        })
    };
    if !associative {
        return Err(Error::InvalidPresentation("multiplication is not associative".into()));
    }
    let elements: Vec<Element> = (0..n as u32).map(Element::Abstract).collect();
    let index = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let table = rows.iter().flatten().map(|&x| x as u32).collect();
    Ok(FiniteGroup::assemble(elements, index, table, identity))
}

impl FiniteGroup {
    fn assemble(
        elements: Vec<Element>,
        index: HashMap<Element, usize>,
        table: Vec<u32>,
        identity: usize,
    ) -> FiniteGroup {
        let n = elements.len();
        let mut inverses = vec![0u32; n];
        for a in 0..n {
            for b in 0..n {
                if table[a * n + b] as usize == identity {
                    inverses[a] = b as u32;
                    break;
                }
            }
        }
        let mut group = FiniteGroup {
            elements,
            index,
            table,
            inverses,
            identity,
            class_of: vec![usize::MAX; n],
            classes: Vec::new(),
            fingerprint: String::new(),
        };
        for g in 0..n {
            if group.class_of[g] != usize::MAX {
                continue;
            }
            let mut class: Vec<usize> = (0..n).map(|x| group.conjugate(x, g)).collect();
            class.sort_unstable();
            class.dedup();
            let id = group.classes.len();
            for &c in &class {
                group.class_of[c] = id;
            }
            group.classes.push(class);
        }
        group.fingerprint = group.compute_fingerprint();
        group
    }

    fn compute_fingerprint(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update((self.order() as u64).to_le_bytes());
        for e in &self.elements {
            hasher.update(e.to_string().as_bytes());
            hasher.update(b";");
        }
        for x in &self.table {
            hasher.update(x.to_le_bytes());
        }
        let digest = hasher.finalize();
        digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
    }

    /// The trivial group.
    pub fn trivial() -> FiniteGroup {
        let e = Element::Abstract(0);
        let index = HashMap::from([(e.clone(), 0)]);
        FiniteGroup::assemble(vec![e], index, vec![0], 0)
    }

    /// The subgroup on `members` (sorted ids of `self`) as a group in its own
    /// right. Local id `i` corresponds to `members[i]`.
    pub(crate) fn restricted_to(&self, members: &[usize]) -> FiniteGroup {
        let local: HashMap<usize, usize> = members.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let m = members.len();
        let mut table = vec![0u32; m * m];
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate() {
                table[i * m + j] = local[&self.mul(a, b)] as u32;
            }
        }
        let elements: Vec<Element> = members.iter().map(|&g| self.elements[g].clone()).collect();
        let index = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        FiniteGroup::assemble(elements, index, table, local[&self.identity])
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn element(&self, g: usize) -> &Element {
        &self.elements[g]
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn find(&self, e: &Element) -> Option<usize> {
        self.index.get(e).copied()
    }

    /// Short stable identifier derived from the element list and the table.
    pub fn fingerprint(&self) -> &str {
        &self.fingerprint
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    /// `g⁻¹ h g`.
    #[inline]
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(self.inv(g), h), g)
    }

    #[inline]
    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..a).all(|b| self.commutes(a, b)))
    }

    pub fn power(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Sorted members of the subgroup generated by `gens`.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = vec![self.identity];
        seen[self.identity] = true;
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            for &s in gens {
                let y = self.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }

    /// Whether `members` (any order, no duplicates required) is a subgroup.
    pub fn is_subgroup(&self, members: &[usize]) -> bool {
        let n = self.order();
        if members.iter().any(|&g| g >= n) {
            return false;
        }
        let mut mask = vec![false; n];
        for &g in members {
            mask[g] = true;
        }
        if !mask[self.identity] {
            return false;
        }
        // A nonempty finite subset closed under multiplication is a subgroup.
        members.iter().all(|&a| members.iter().all(|&b| mask[self.mul(a, b)]))
    }

    /// Conjugacy classes of elements, each sorted, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn conjugacy_class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }
}

/// Builds the phase `num/den` reduced into `[0, 1)`.
pub fn phase(num: i64, den: i64) -> Result<Phase> {
    if den == 0 {
        return Err(Error::InvalidPresentation("zero denominator in phase".into()));
    }
    let g = num.gcd(&den);
    let (mut n, mut d) = (num / g, den / g);
    if d < 0 {
        n = -n;
        d = -d;
    }
    Ok(reduce_phase(Ratio::new_raw(n, d)))
}

/// Whether a phase is zero in ℚ/ℤ.
pub fn phase_is_zero(p: &Phase) -> bool {
    p.is_integer()
}
