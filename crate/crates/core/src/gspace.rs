//! Finite models of G-spaces: stratified orbit-type data and simplicial
//! complexes with a simplicial group action.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use crate::burnside::{BurnsideElement, MAX_TUPLE_COUNT, MAX_TUPLE_RANK};
use crate::error::{Error, Result};
use crate::group::{build_group_with, Limits, Presentation};
use crate::lattice::{build_lattice, ClassId, SubgroupId, SubgroupLattice};

type Burnside = BurnsideElement<i64>;

/// A finite abstract simplicial complex. Simplices are sorted vertex lists,
/// stored in canonical order (by dimension, then lexicographically).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    simplices: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl SimplicialComplex {
    /// The downward closure of `faces` on the given vertices. Every vertex is
    /// a 0-simplex whether or not it appears in a face.
    pub fn new(labels: Vec<String>, faces: &[Vec<usize>]) -> Result<Self> {
        let n = labels.len();
        let distinct: BTreeSet<&String> = labels.iter().collect();
        if distinct.len() != n {
            return Err(Error::InvalidComplex("duplicate vertex labels".into()));
        }
        let mut all: BTreeSet<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
        for face in faces {
            let mut s = face.clone();
            s.sort_unstable();
            s.dedup();
            if s.is_empty() {
                return Err(Error::InvalidComplex("empty simplex".into()));
            }
            if let Some(&v) = s.iter().find(|&&v| v >= n) {
                return Err(Error::InvalidComplex(format!("unknown vertex {v}")));
            }
            if s.len() > 20 {
                return Err(Error::BoundExceeded(format!("simplex with {} vertices", s.len())));
            }
            if all.contains(&s) {
                continue;
            }
            let k = s.len();
            for mask in 1u32..(1 << k) {
                all.insert((0..k).filter(|i| mask >> i & 1 == 1).map(|i| s[i]).collect());
            }
        }
        let mut simplices: Vec<Vec<usize>> = all.into_iter().collect();
        simplices.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let index = simplices.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        Ok(SimplicialComplex {
            labels,
            simplices,
            index,
        })
    }

    /// Vertices labelled `0..n`.
    pub fn with_vertices(n: usize, faces: &[Vec<usize>]) -> Result<Self> {
        Self::new((0..n).map(|v| v.to_string()).collect(), faces)
    }

    pub fn empty() -> Self {
        SimplicialComplex {
            labels: Vec::new(),
            simplices: Vec::new(),
            index: HashMap::new(),
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn simplices(&self) -> &[Vec<usize>] {
        &self.simplices
    }

    pub fn contains(&self, simplex: &[usize]) -> bool {
        self.index.contains_key(simplex)
    }

    pub fn simplex_index(&self, simplex: &[usize]) -> Option<usize> {
        self.index.get(simplex).copied()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Top dimension, or `-1` for the empty complex.
    pub fn dim(&self) -> i64 {
        self.simplices.last().map_or(-1, |s| s.len() as i64 - 1)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices.iter().map(|s| simplex_sign(s)).sum()
    }

    /// Number of simplices of each dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; (self.dim() + 1).max(0) as usize];
        for s in &self.simplices {
            f[s.len() - 1] += 1;
        }
        f
    }
}

fn simplex_sign(s: &[usize]) -> i64 {
    if s.len() % 2 == 1 {
        1
    } else {
        -1
    }
}

/// A simplicial complex with a group acting by vertex permutations.
#[derive(Clone, Debug)]
pub struct GSimplicialComplex {
    complex: SimplicialComplex,
    lattice: Arc<SubgroupLattice>,
    /// `action[g][v]` is the image of vertex `v` under group element `g`.
    action: Vec<Vec<usize>>,
}

/// One G-orbit of simplices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplexOrbit {
    pub representative: Vec<usize>,
    pub stabilizer: SubgroupId,
    pub size: usize,
}

impl SimplexOrbit {
    pub fn dim(&self) -> usize {
        self.representative.len() - 1
    }
}

impl GSimplicialComplex {
    /// Checks that `action` is a left action of the lattice's group by
    /// simplicial automorphisms.
    pub fn new(complex: SimplicialComplex, lattice: Arc<SubgroupLattice>, action: Vec<Vec<usize>>) -> Result<Self> {
        let group = lattice.group();
        let n = complex.num_vertices();
        if action.len() != group.order() {
            return Err(Error::InvalidComplex(format!(
                "{} vertex permutations for a group of order {}",
                action.len(),
                group.order()
            )));
        }
        for p in &action {
            check_permutation(p, n)?;
        }
        for a in 0..group.order() {
            for b in 0..group.order() {
                let ab = &action[group.mul(a, b)];
                if (0..n).any(|v| ab[v] != action[a][action[b][v]]) {
                    return Err(Error::InvalidComplex(
                        "vertex permutations do not form a group action".into(),
                    ));
                }
            }
        }
        let x = GSimplicialComplex {
            complex,
            lattice,
            action,
        };
        x.check_preserves_simplices()?;
        Ok(x)
    }

    /// Acts by the group generated by the given vertex permutations.
    pub fn from_permutations(complex: SimplicialComplex, generators: Vec<Vec<usize>>) -> Result<Self> {
        let n = complex.num_vertices();
        for g in &generators {
            check_permutation(g, n)?;
        }
        let limits = Limits {
            max_degree: usize::MAX,
            ..Limits::default()
        };
        let group = build_group_with(&Presentation::Permutation { degree: n, generators }, &limits)?;
        let action = group
            .elements()
            .iter()
            .map(|e| {
                e.as_perm()
                    .expect("permutation group")
                    .iter()
                    .map(|&v| v as usize)
                    .collect()
            })
            .collect();
        let lattice = build_lattice(Arc::new(group))?;
        let x = GSimplicialComplex {
            complex,
            lattice,
            action,
        };
        x.check_preserves_simplices()?;
        Ok(x)
    }

    /// Extends generator images to an action of the whole group, failing if
    /// they do not define a homomorphism.
    pub fn from_generator_images(
        complex: SimplicialComplex,
        lattice: Arc<SubgroupLattice>,
        generators: &[usize],
        images: &[Vec<usize>],
    ) -> Result<Self> {
        if generators.len() != images.len() {
            return Err(Error::InvalidComplex("one image per generator required".into()));
        }
        let group = Arc::clone(lattice.group());
        let n = complex.num_vertices();
        for p in images {
            check_permutation(p, n)?;
        }
        let mut action: Vec<Option<Vec<usize>>> = vec![None; group.order()];
        action[group.identity()] = Some((0..n).collect());
        let mut queue = vec![group.identity()];
        while let Some(g) = queue.pop() {
            let pg = action[g].clone().expect("assigned");
            for (&s, ps) in generators.iter().zip(images) {
                let gs = group.mul(g, s);
                let image: Vec<usize> = ps.iter().map(|&v| pg[v]).collect();
                match &action[gs] {
                    Some(existing) if *existing != image => {
                        return Err(Error::InvalidComplex(
                            "generator images do not define a homomorphism".into(),
                        ))
                    }
                    Some(_) => {}
                    None => {
                        action[gs] = Some(image);
                        queue.push(gs);
                    }
                }
            }
        }
        let action = action
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::InvalidComplex("generators do not generate the group".into()))?;
        Self::new(complex, lattice, action)
    }

    pub fn with_trivial_action(complex: SimplicialComplex, lattice: Arc<SubgroupLattice>) -> Self {
        let identity: Vec<usize> = (0..complex.num_vertices()).collect();
        GSimplicialComplex {
            action: vec![identity; lattice.order()],
            complex,
            lattice,
        }
    }

    fn check_preserves_simplices(&self) -> Result<()> {
        for g in 0..self.action.len() {
            for s in self.complex.simplices() {
                if !self.complex.contains(&self.act(g, s)) {
                    return Err(Error::InvalidComplex(format!(
                        "group element {g} does not map simplices to simplices"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn lattice(&self) -> &Arc<SubgroupLattice> {
        &self.lattice
    }

    pub fn vertex_action(&self, g: usize) -> &[usize] {
        &self.action[g]
    }

    /// `g·σ` as a sorted vertex list.
    pub fn act(&self, g: usize, simplex: &[usize]) -> Vec<usize> {
        let mut image: Vec<usize> = simplex.iter().map(|&v| self.action[g][v]).collect();
        image.sort_unstable();
        image
    }

    /// Setwise-stable simplices are fixed vertexwise.
    pub fn is_regular(&self) -> bool {
        self.check_regular().is_ok()
    }

    pub fn check_regular(&self) -> Result<()> {
        for g in 0..self.action.len() {
            for s in self.complex.simplices() {
                if s.len() > 1 && self.act(g, s) == *s && s.iter().any(|&v| self.action[g][v] != v) {
                    return Err(Error::NotRegular(format!(
                        "element {g} maps simplex {:?} to itself without fixing it; subdivide first",
                        self.vertex_labels(s)
                    )));
                }
            }
        }
        Ok(())
    }

    fn vertex_labels(&self, s: &[usize]) -> Vec<&str> {
        s.iter().map(|&v| self.complex.labels[v].as_str()).collect()
    }

    /// Orbits of simplices with their stabilizers, in order of first
    /// appearance in the canonical simplex list.
    pub fn simplex_orbits(&self) -> Result<Vec<SimplexOrbit>> {
        let mut seen = vec![false; self.complex.simplices().len()];
        let mut orbits = Vec::new();
        for (i, s) in self.complex.simplices().iter().enumerate() {
            if seen[i] {
                continue;
            }
            let mut stabilizer = Vec::new();
            let mut size = 0;
            for g in 0..self.action.len() {
                let image = self.act(g, s);
                if image == *s {
                    stabilizer.push(g);
                }
                let j = self.complex.simplex_index(&image).expect("action preserves simplices");
                if !seen[j] {
                    seen[j] = true;
                    size += 1;
                }
            }
            orbits.push(SimplexOrbit {
                representative: s.clone(),
                stabilizer: self.lattice.subgroup_of(&stabilizer)?,
                size,
            });
        }
        Ok(orbits)
    }

    /// Disjoint union of two complexes with actions of the same group.
    pub fn disjoint_union(&self, other: &GSimplicialComplex) -> Result<Self> {
        if !self.lattice.same_group(&other.lattice) {
            return Err(Error::GroupMismatch {
                left: self.lattice.id().to_string(),
                right: other.lattice.id().to_string(),
            });
        }
        let offset = self.complex.num_vertices();
        let labels: Vec<String> = self
            .complex
            .labels
            .iter()
            .map(|l| format!("a.{l}"))
            .chain(other.complex.labels.iter().map(|l| format!("b.{l}")))
            .collect();
        let faces: Vec<Vec<usize>> = self
            .complex
            .simplices()
            .iter()
            .cloned()
            .chain(
                other
                    .complex
                    .simplices()
                    .iter()
                    .map(|s| s.iter().map(|v| v + offset).collect()),
            )
            .collect();
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| a.iter().copied().chain(b.iter().map(|v| v + offset)).collect())
            .collect();
        Ok(GSimplicialComplex {
            complex: SimplicialComplex::new(labels, &faces)?,
            lattice: Arc::clone(&self.lattice),
            action,
        })
    }
}

fn check_permutation(p: &[usize], n: usize) -> Result<()> {
    if p.len() != n {
        return Err(Error::InvalidComplex(format!(
            "expected {n} vertex images, got {}",
            p.len()
        )));
    }
    let mut seen = vec![false; n];
    for &v in p {
        if v >= n || seen[v] {
            return Err(Error::InvalidComplex("vertex images are not a permutation".into()));
        }
        seen[v] = true;
    }
    Ok(())
}

/// `χ^G(X) = Σ_{orbits G·σ} (−1)^{dim σ} [G/G_σ]`.
#[allow(non_snake_case)]
pub fn chi_G_simplicial(x: &GSimplicialComplex) -> Result<Burnside> {
    x.check_regular()?;
    let lattice = x.lattice();
    let terms = x
        .simplex_orbits()?
        .into_iter()
        .map(|o| (lattice.class_of(o.stabilizer), simplex_sign(&o.representative)));
    Ok(Burnside::from_terms(lattice, terms))
}

/// The subcomplex of simplices fixed vertexwise by `h`, with trivial action.
pub fn fixed_subcomplex(x: &GSimplicialComplex, h: SubgroupId) -> Result<GSimplicialComplex> {
    x.check_regular()?;
    let lattice = x.lattice();
    let generators = lattice.subgroup(h).generators();
    let fixed: Vec<usize> = (0..x.complex().num_vertices())
        .filter(|&v| generators.iter().all(|&g| x.vertex_action(g)[v] == v))
        .collect();
    let local: HashMap<usize, usize> = fixed.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let labels = fixed.iter().map(|&v| x.complex().labels()[v].clone()).collect();
    let faces: Vec<Vec<usize>> = x
        .complex()
        .simplices()
        .iter()
        .filter(|s| s.iter().all(|v| local.contains_key(v)))
        .map(|s| s.iter().map(|v| local[v]).collect())
        .collect();
    Ok(GSimplicialComplex::with_trivial_action(
        SimplicialComplex::new(labels, &faces)?,
        Arc::clone(lattice),
    ))
}

/// Barycentric subdivision: vertices are the simplices of `x`, simplices
/// are chains under inclusion, and the action is induced.
pub fn barycentric_subdivide(x: &GSimplicialComplex) -> Result<GSimplicialComplex> {
    let old = x.complex();
    let simplices = old.simplices();
    let labels: Vec<String> = simplices
        .iter()
        .map(|s| {
            let parts: Vec<&str> = s.iter().map(|&v| old.labels()[v].as_str()).collect();
            format!("{{{}}}", parts.join(","))
        })
        .collect();
    // Maximal chains end at maximal simplices and step down one vertex at a
    // time; their downward closure is the whole subdivision.
    let mut is_face = vec![false; simplices.len()];
    for s in simplices {
        if s.len() > 1 {
            for skip in 0..s.len() {
                let face: Vec<usize> = s
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v)
                    .collect();
                is_face[old.simplex_index(&face).expect("downward closed")] = true;
            }
        }
    }
    let mut chains = Vec::new();
    for (i, s) in simplices.iter().enumerate() {
        if !is_face[i] {
            let mut chain = vec![i];
            extend_flags(old, s, &mut chain, &mut chains);
        }
    }
    let action = (0..x.lattice().order())
        .map(|g| {
            simplices
                .iter()
                .map(|s| old.simplex_index(&x.act(g, s)).expect("action preserves simplices"))
                .collect()
        })
        .collect();
    Ok(GSimplicialComplex {
        complex: SimplicialComplex::new(labels, &chains)?,
        lattice: Arc::clone(x.lattice()),
        action,
    })
}

fn extend_flags(complex: &SimplicialComplex, top: &[usize], chain: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if top.len() == 1 {
        out.push(chain.clone());
        return;
    }
    for skip in 0..top.len() {
        let face: Vec<usize> = top
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, &v)| v)
            .collect();
        chain.push(complex.simplex_index(&face).expect("downward closed"));
        extend_flags(complex, &face, chain, out);
        chain.pop();
    }
}

/// `χ^(k)(X, G) = (1/|G|) Σ χ(X^⟨g_0,…,g_k⟩)` over pairwise-commuting
/// `(k+1)`-tuples, enumerated one tuple at a time.
pub fn chi_k_direct(x: &GSimplicialComplex, k: usize) -> Result<i64> {
    x.check_regular()?;
    let group = x.lattice().group();
    let n = group.order();
    if k > MAX_TUPLE_RANK || (n as u128).pow(k as u32 + 1) > MAX_TUPLE_COUNT {
        return Err(Error::BoundExceeded(format!(
            "commuting {}-tuples in a group of order {n}",
            k + 1
        )));
    }
    let nv = x.complex().num_vertices();
    let fixed_by: Vec<Vec<bool>> = (0..n)
        .map(|g| (0..nv).map(|v| x.vertex_action(g)[v] == v).collect())
        .collect();
    let mut memo: HashMap<Vec<bool>, i64> = HashMap::new();
    let mut total = 0i64;
    let mut tuple = Vec::with_capacity(k + 1);
    let all = vec![true; nv];
    tuple_sum(x, &fixed_by, k + 1, &mut tuple, &all, &mut memo, &mut total);
    if total % n as i64 != 0 {
        return Err(Error::NonIntegral(format!("χ^({k}) sum {total} not divisible by {n}")));
    }
    Ok(total / n as i64)
}

fn tuple_sum(
    x: &GSimplicialComplex,
    fixed_by: &[Vec<bool>],
    len: usize,
    tuple: &mut Vec<usize>,
    mask: &[bool],
    memo: &mut HashMap<Vec<bool>, i64>,
    total: &mut i64,
) {
    if tuple.len() == len {
        let chi = *memo.entry(mask.to_vec()).or_insert_with(|| {
            x.complex()
                .simplices()
                .iter()
                .filter(|s| s.iter().all(|&v| mask[v]))
                .map(|s| simplex_sign(s))
                .sum()
        });
        *total += chi;
        return;
    }
    let group = x.lattice().group();
    for g in 0..group.order() {
        if tuple.iter().all(|&t| group.commutes(g, t)) {
            let next: Vec<bool> = mask.iter().zip(&fixed_by[g]).map(|(a, b)| *a && *b).collect();
            tuple.push(g);
            tuple_sum(x, fixed_by, len, tuple, &next, memo, total);
            tuple.pop();
        }
    }
}

/// The orbifold Euler characteristic `χ^(1)`.
pub fn chi_orbifold_direct(x: &GSimplicialComplex) -> Result<i64> {
    chi_k_direct(x, 1)
}

/// Orbit-type data: strata `V^([H])` recorded by class together with the
/// Euler characteristic of their quotient `V^([H])/G`.
#[derive(Clone, Debug)]
pub struct StratifiedGData {
    lattice: Arc<SubgroupLattice>,
    strata: Vec<(ClassId, i64)>,
}

impl StratifiedGData {
    pub fn new(lattice: &Arc<SubgroupLattice>, strata: Vec<(ClassId, i64)>) -> Result<Self> {
        if let Some((c, _)) = strata.iter().find(|(c, _)| c.0 >= lattice.num_classes()) {
            return Err(Error::UnknownLabel(format!("class #{}", c.0)));
        }
        Ok(StratifiedGData {
            lattice: Arc::clone(lattice),
            strata,
        })
    }

    /// Strata given by subgroup label (any member of the class).
    pub fn from_labels(lattice: &Arc<SubgroupLattice>, strata: &[(String, i64)]) -> Result<Self> {
        let strata = strata
            .iter()
            .map(|(label, chi)| Ok((lattice.class_by_label(label)?, *chi)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(lattice, strata)
    }

    /// The orbit-type decomposition of a regular G-complex.
    pub fn from_complex(x: &GSimplicialComplex) -> Result<Self> {
        x.check_regular()?;
        let strata = x
            .simplex_orbits()?
            .into_iter()
            .map(|o| (x.lattice().class_of(o.stabilizer), simplex_sign(&o.representative)))
            .collect();
        Self::new(x.lattice(), strata)
    }

    pub fn lattice(&self) -> &Arc<SubgroupLattice> {
        &self.lattice
    }

    pub fn strata(&self) -> &[(ClassId, i64)] {
        &self.strata
    }
}

/// `χ^G(V) = Σ_i χ(V_i/G) [G/H_i]`.
#[allow(non_snake_case)]
pub fn chi_G_stratified(d: &StratifiedGData) -> Burnside {
    Burnside::from_terms(d.lattice(), d.strata().iter().copied())
}

/// The reduced characteristic `χ̄^G(V) = χ^G(V) − [G/G]`.
#[allow(non_snake_case)]
pub fn chi_G_stratified_reduced(d: &StratifiedGData) -> Burnside {
    &chi_G_stratified(d) - &Burnside::one(d.lattice())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, Presentation};

    fn lattice(p: Presentation) -> Arc<SubgroupLattice> {
        build_lattice(Arc::new(build_group(&p).unwrap())).unwrap()
    }

    fn cycle(n: usize) -> SimplicialComplex {
        let edges: Vec<Vec<usize>> = (0..n).map(|i| vec![i, (i + 1) % n]).collect();
        SimplicialComplex::with_vertices(n, &edges).unwrap()
    }

    fn rotation(n: usize, step: usize) -> Vec<usize> {
        (0..n).map(|i| (i + step) % n).collect()
    }

    fn square_with_reflection() -> GSimplicialComplex {
        // Reflection of the square 0-1-2-3 fixing vertices 0 and 2.
        GSimplicialComplex::from_permutations(cycle(4), vec![vec![0, 3, 2, 1]]).unwrap()
    }

    #[test]
    fn complex_basics() {
        let c = cycle(3);
        assert_eq!(c.f_vector(), vec![3, 3]);
        assert_eq!(c.euler_characteristic(), 0);
        assert_eq!(c.dim(), 1);
        let disk = SimplicialComplex::with_vertices(3, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(disk.f_vector(), vec![3, 3, 1]);
        assert_eq!(disk.euler_characteristic(), 1);
        assert_eq!(SimplicialComplex::empty().euler_characteristic(), 0);
    }

    #[test]
    fn invalid_complexes_are_rejected() {
        assert!(SimplicialComplex::with_vertices(2, &[vec![0, 2]]).is_err());
        assert!(SimplicialComplex::with_vertices(2, &[vec![]]).is_err());
        assert!(SimplicialComplex::new(vec!["a".into(), "a".into()], &[]).is_err());
        // a rotation that does not preserve edges of the path 0-1-2
        let path = SimplicialComplex::with_vertices(3, &[vec![0, 1], vec![1, 2]]).unwrap();
        assert!(GSimplicialComplex::from_permutations(path, vec![rotation(3, 1)]).is_err());
    }

    #[test]
    fn triangle_with_rotation() {
        let x = GSimplicialComplex::from_permutations(cycle(3), vec![rotation(3, 1)]).unwrap();
        assert!(chi_G_simplicial(&x).unwrap().is_zero());
    }

    #[test]
    fn square_with_reflection_examples() {
        let x = square_with_reflection();
        let l = x.lattice();
        let chi = chi_G_simplicial(&x).unwrap();
        let expected = Burnside::from_terms(l, [(l.whole_class(), 2), (l.trivial_class(), -1)]);
        assert_eq!(chi, expected);

        let fixed = fixed_subcomplex(&x, l.whole()).unwrap();
        assert_eq!(fixed.complex().f_vector(), vec![2]);
        assert_eq!(fixed.complex().euler_characteristic(), 2);
        let all = fixed_subcomplex(&x, l.trivial_subgroup()).unwrap();
        assert_eq!(all.complex(), x.complex());

        assert_eq!(chi_k_direct(&x, 0).unwrap(), 1);
        assert_eq!(chi_orbifold_direct(&x).unwrap(), 3);
    }

    #[test]
    fn trivial_action_gives_euler_characteristic() {
        let l = lattice(Presentation::symmetric(3));
        let disk = SimplicialComplex::with_vertices(3, &[vec![0, 1, 2]]).unwrap();
        let x = GSimplicialComplex::with_trivial_action(disk, Arc::clone(&l));
        assert_eq!(chi_G_simplicial(&x).unwrap(), Burnside::one(&l));
        for k in 0..=2 {
            assert_eq!(chi_k_direct(&x, k).unwrap(), Burnside::one(&l).r_k(k).unwrap());
        }
        let circle = GSimplicialComplex::with_trivial_action(cycle(5), SubgroupLattice::trivial());
        for k in 0..=3 {
            assert_eq!(chi_k_direct(&circle, k).unwrap(), 0);
        }
    }

    #[test]
    fn free_action_has_empty_fixed_sets() {
        let x = GSimplicialComplex::from_permutations(cycle(6), vec![rotation(6, 1)]).unwrap();
        let l = x.lattice();
        for h in l.ids().filter(|&h| h != l.trivial_subgroup()) {
            assert!(fixed_subcomplex(&x, h).unwrap().complex().is_empty());
        }
    }

    #[test]
    fn irregular_edge_flip_needs_subdivision() {
        let edge = SimplicialComplex::with_vertices(2, &[vec![0, 1]]).unwrap();
        let x = GSimplicialComplex::from_permutations(edge, vec![vec![1, 0]]).unwrap();
        assert!(matches!(chi_G_simplicial(&x), Err(Error::NotRegular(_))));
        let sd = barycentric_subdivide(&x).unwrap();
        assert!(sd.is_regular());
        assert_eq!(sd.complex().f_vector(), vec![3, 2]);
        let l = sd.lattice();
        let fixed = fixed_subcomplex(&sd, l.whole()).unwrap();
        assert_eq!(fixed.complex().labels(), &["{0,1}".to_string()]);
        // an interval folded at its midpoint
        let expected = Burnside::from_terms(l, [(l.whole_class(), 1)]);
        assert_eq!(chi_G_simplicial(&sd).unwrap(), expected);
    }

    #[test]
    fn subdivision_of_a_point_is_a_point() {
        let l = lattice(Presentation::cyclic(2));
        let point = SimplicialComplex::with_vertices(1, &[]).unwrap();
        let x = GSimplicialComplex::with_trivial_action(point, l);
        let sd = barycentric_subdivide(&x).unwrap();
        assert_eq!(sd.complex().f_vector(), vec![1]);
    }

    #[test]
    fn subdivision_preserves_chi_g() {
        let x = square_with_reflection();
        let sd = barycentric_subdivide(&x).unwrap();
        assert_eq!(sd.complex().f_vector(), vec![8, 8]);
        assert_eq!(chi_G_simplicial(&sd).unwrap(), chi_G_simplicial(&x).unwrap());

        let tetra = SimplicialComplex::with_vertices(4, &[vec![0, 1, 2, 3]]).unwrap();
        let sd = barycentric_subdivide(&GSimplicialComplex::with_trivial_action(
            tetra,
            SubgroupLattice::trivial(),
        ))
        .unwrap();
        // 15 faces, 50 inclusions of pairs, 60 flags of length 3, 24 full flags
        assert_eq!(sd.complex().f_vector(), vec![15, 50, 60, 24]);
    }

    #[test]
    fn disjoint_union_is_additive() {
        let x = square_with_reflection();
        let y = x.disjoint_union(&x).unwrap();
        let chi = chi_G_simplicial(&x).unwrap();
        assert_eq!(chi_G_simplicial(&y).unwrap(), &chi + &chi);
    }

    #[test]
    fn generator_images_define_the_action() {
        let l = lattice(Presentation::cyclic(4));
        let g = (0..4).find(|&g| l.group().element_order(g) == 4).unwrap();
        let x = GSimplicialComplex::from_generator_images(cycle(4), Arc::clone(&l), &[g], &[rotation(4, 1)]).unwrap();
        assert_eq!(x.vertex_action(l.group().mul(g, g)), rotation(4, 2).as_slice());
        let points = SimplicialComplex::with_vertices(3, &[]).unwrap();
        assert!(GSimplicialComplex::from_generator_images(points, l, &[g], &[rotation(3, 1)]).is_err());
    }

    #[test]
    fn stratified_examples() {
        let l = lattice(Presentation::cyclic(6));
        let z2 = l.class_ids().find(|&c| l.class_order(c) == 2).unwrap();
        let z3 = l.class_ids().find(|&c| l.class_order(c) == 3).unwrap();
        let d = StratifiedGData::new(&l, vec![(l.trivial_class(), -1), (z2, 1), (z3, 1)]).unwrap();
        let expected = Burnside::from_coeffs(&l, vec![-1, 1, 1, 0]).unwrap();
        assert_eq!(chi_G_stratified(&d), expected);
        assert_eq!(
            chi_G_stratified_reduced(&d),
            Burnside::from_coeffs(&l, vec![-1, 1, 1, -1]).unwrap()
        );
        let point = StratifiedGData::new(&l, vec![(l.whole_class(), 1)]).unwrap();
        assert_eq!(chi_G_stratified(&point), Burnside::one(&l));
        assert!(chi_G_stratified(&StratifiedGData::new(&l, vec![]).unwrap()).is_zero());
        assert!(matches!(
            StratifiedGData::from_labels(&l, &[("H5_0".into(), 1)]),
            Err(Error::UnknownLabel(_))
        ));
    }

    #[test]
    fn stratified_matches_simplicial() {
        let x = square_with_reflection();
        let d = StratifiedGData::from_complex(&x).unwrap();
        assert_eq!(chi_G_stratified(&d), chi_G_simplicial(&x).unwrap());
    }
}
