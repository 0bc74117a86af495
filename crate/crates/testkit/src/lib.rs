//! Fixtures and independent oracles for the integration and acceptance tests.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::Arc;

use eqindex::group::{build_group, Presentation};
use eqindex::invertible::{DiagonalGroup, InvertiblePolynomial};
use eqindex::{
    barycentric_subdivide, build_lattice, Burnside, GSimplicialComplex, SimplicialComplex, SubgroupId, SubgroupLattice,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

pub fn lattice(p: Presentation) -> Arc<SubgroupLattice> {
    build_lattice(Arc::new(build_group(&p).unwrap())).unwrap()
}

/// Q8 as left multiplication on its own elements ±1, ±i, ±j, ±k.
pub fn quaternion() -> Presentation {
    // order: 1, i, j, k, -1, -i, -j, -k
    let mul = |a: usize, b: usize| -> usize {
        let table = [[0, 1, 2, 3], [1, 4, 3, 6], [2, 7, 4, 1], [3, 2, 5, 4]];
        let sign = (a >= 4) ^ (b >= 4);
        let r = table[a % 4][b % 4];
        if sign {
            (r + 4) % 8
        } else {
            r
        }
    };
    Presentation::Permutation {
        degree: 8,
        generators: vec![(0..8).map(|x| mul(1, x)).collect(), (0..8).map(|x| mul(2, x)).collect()],
    }
}

/// The groups of the ring-axiom suite.
pub fn ring_groups() -> Vec<(&'static str, Arc<SubgroupLattice>)> {
    vec![
        ("Z2", lattice(Presentation::cyclic(2))),
        ("Z6", lattice(Presentation::cyclic(6))),
        ("Z2xZ2", lattice(Presentation::abelian(&[2, 2]))),
        ("S3", lattice(Presentation::symmetric(3))),
        ("D4", lattice(Presentation::dihedral(4))),
    ]
}

pub fn abelian_groups() -> Vec<(&'static str, Arc<SubgroupLattice>)> {
    vec![
        ("Z1", SubgroupLattice::trivial()),
        ("Z2", lattice(Presentation::cyclic(2))),
        ("Z3", lattice(Presentation::cyclic(3))),
        ("Z4", lattice(Presentation::cyclic(4))),
        ("Z6", lattice(Presentation::cyclic(6))),
        ("Z2xZ2", lattice(Presentation::abelian(&[2, 2]))),
        ("Z2xZ4", lattice(Presentation::abelian(&[2, 4]))),
        ("Z3xZ3", lattice(Presentation::abelian(&[3, 3]))),
    ]
}

pub fn random_element(l: &Arc<SubgroupLattice>, rng: &mut impl Rng, bound: i64) -> Burnside {
    let coeffs = (0..l.num_classes()).map(|_| rng.random_range(-bound..=bound)).collect();
    Burnside::from_coeffs(l, coeffs).unwrap()
}

// ---------------------------------------------------------------------------
// Simplicial suite

fn cycle(n: usize) -> SimplicialComplex {
    let edges: Vec<Vec<usize>> = (0..n).map(|i| vec![i, (i + 1) % n]).collect();
    SimplicialComplex::with_vertices(n, &edges).unwrap()
}

fn shift(n: usize, k: usize) -> Vec<usize> {
    (0..n).map(|i| (i + k) % n).collect()
}

/// Boundary of the octahedron; vertex `2i` is `+e_i`, `2i+1` is `−e_i`.
fn octahedron() -> SimplicialComplex {
    let mut faces = Vec::new();
    for x in 0..2 {
        for y in 2..4 {
            for z in 4..6 {
                faces.push(vec![x, y, z]);
            }
        }
    }
    SimplicialComplex::with_vertices(6, &faces).unwrap()
}

fn flip(axis: usize) -> Vec<usize> {
    (0..6).map(|v| if v / 2 == axis { v ^ 1 } else { v }).collect()
}

/// Rotation by a quarter turn about the z-axis: +x → +y → −x → −y.
fn quarter_turn() -> Vec<usize> {
    vec![2, 3, 1, 0, 4, 5]
}

/// Swap of the x and y coordinates.
fn swap_xy() -> Vec<usize> {
    vec![2, 3, 0, 1, 4, 5]
}

/// Cyclic permutation of the coordinates x → y → z → x.
fn rotate_axes() -> Vec<usize> {
    vec![2, 3, 4, 5, 0, 1]
}

/// The 3×3 triangulated torus.
fn torus() -> SimplicialComplex {
    let v = |i: usize, j: usize| (i % 3) * 3 + (j % 3);
    let mut faces = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            faces.push(vec![v(i, j), v(i + 1, j), v(i + 1, j + 1)]);
            faces.push(vec![v(i, j), v(i, j + 1), v(i + 1, j + 1)]);
        }
    }
    SimplicialComplex::with_vertices(9, &faces).unwrap()
}

fn torus_translation(di: usize, dj: usize) -> Vec<usize> {
    (0..9).map(|x| ((x / 3 + di) % 3) * 3 + (x % 3 + dj) % 3).collect()
}

/// At least ten regular G-complexes: circles and spheres with rotations,
/// reflections, antipodal maps and product actions.
pub fn simplicial_suite() -> Vec<(&'static str, GSimplicialComplex)> {
    let perm = |c: SimplicialComplex, gens: Vec<Vec<usize>>| GSimplicialComplex::from_permutations(c, gens).unwrap();
    let square_reflection = perm(cycle(4), vec![vec![0, 3, 2, 1]]);
    let square_d4 = barycentric_subdivide(&perm(cycle(4), vec![shift(4, 1), vec![0, 3, 2, 1]])).unwrap();
    let octa_s3 = barycentric_subdivide(&perm(octahedron(), vec![swap_xy(), rotate_axes()])).unwrap();
    let disk = SimplicialComplex::with_vertices(3, &[vec![0, 1, 2]]).unwrap();
    vec![
        ("triangle, Z3 rotation", perm(cycle(3), vec![shift(3, 1)])),
        ("hexagon, Z6 rotation", perm(cycle(6), vec![shift(6, 1)])),
        ("square, reflection", square_reflection.clone()),
        (
            "square, Z2xZ2 half-turn and reflection",
            perm(cycle(4), vec![shift(4, 2), vec![0, 3, 2, 1]]),
        ),
        ("subdivided square, D4", square_d4),
        (
            "octahedron, antipodal",
            perm(octahedron(), vec![(0..6).map(|v| v ^ 1).collect()]),
        ),
        (
            "octahedron, half-turn",
            perm(octahedron(), vec![vec![1, 0, 3, 2, 4, 5]]),
        ),
        ("octahedron, Z4 rotation", perm(octahedron(), vec![quarter_turn()])),
        ("octahedron, equatorial reflection", perm(octahedron(), vec![flip(2)])),
        (
            "octahedron, Z2^3 sign changes",
            perm(octahedron(), vec![flip(0), flip(1), flip(2)]),
        ),
        ("subdivided octahedron, S3 on axes", octa_s3),
        (
            "torus, Z3xZ3 translations",
            perm(torus(), vec![torus_translation(1, 0), torus_translation(0, 1)]),
        ),
        (
            "two squares, reflection",
            square_reflection.disjoint_union(&square_reflection).unwrap(),
        ),
        (
            "disk, trivial S3",
            GSimplicialComplex::with_trivial_action(disk, lattice(Presentation::symmetric(3))),
        ),
    ]
}

// ---------------------------------------------------------------------------
// Invertible fixtures

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum AtomShape {
    Fermat(i64),
    Chain(Vec<i64>),
    Loop(Vec<i64>),
}

impl AtomShape {
    fn size(&self) -> usize {
        match self {
            AtomShape::Fermat(_) => 1,
            AtomShape::Chain(a) | AtomShape::Loop(a) => a.len(),
        }
    }

    fn det(&self) -> i64 {
        match self {
            AtomShape::Fermat(a) => *a,
            AtomShape::Chain(a) => a.iter().product(),
            AtomShape::Loop(a) => a.iter().product::<i64>() - if a.len() % 2 == 0 { 1 } else { -1 },
        }
    }

    fn polynomial(&self) -> InvertiblePolynomial {
        match self {
            AtomShape::Fermat(a) => InvertiblePolynomial::fermat(*a),
            AtomShape::Chain(a) => InvertiblePolynomial::chain(a),
            AtomShape::Loop(a) => InvertiblePolynomial::loop_of(a),
        }
        .unwrap()
    }
}

fn tuples(len: usize, max: i64) -> Vec<Vec<i64>> {
    if len == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for t in tuples(len - 1, max) {
        for a in 2..=max {
            let mut t = t.clone();
            t.push(a);
            out.push(t);
        }
    }
    out
}

/// Atoms in at most `max_vars` variables with exponents ≥ 2 and
/// `|det| ≤ max_det`; loops are taken up to rotation.
fn atoms(max_vars: usize, max_det: i64) -> Vec<AtomShape> {
    let mut out = Vec::new();
    for a in 2..=max_det {
        out.push(AtomShape::Fermat(a));
    }
    for k in 2..=max_vars {
        for t in tuples(k, max_det) {
            let chain = AtomShape::Chain(t.clone());
            if chain.det() <= max_det {
                out.push(chain);
            }
            let canonical = (0..k).all(|r| {
                let rotated: Vec<i64> = (0..k).map(|i| t[(i + r) % k]).collect();
                t <= rotated
            });
            let lp = AtomShape::Loop(t);
            if canonical && lp.det() <= max_det {
                out.push(lp);
            }
        }
    }
    out
}

/// Every sum of Fermat, chain and loop atoms in at most `max_vars`
/// variables with all exponents ≥ 2 and `|det E| ≤ max_det`, up to
/// relabelling of variables.
pub fn invertible_fixtures(max_vars: usize, max_det: i64) -> Vec<InvertiblePolynomial> {
    let pool = atoms(max_vars, max_det);
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn rec(
        pool: &[AtomShape],
        start: usize,
        vars: usize,
        det: i64,
        (max_vars, max_det): (usize, i64),
        stack: &mut Vec<usize>,
        out: &mut Vec<InvertiblePolynomial>,
    ) {
        if !stack.is_empty() {
            let mut f = pool[stack[0]].polynomial();
            for &i in &stack[1..] {
                f = f.direct_sum(&pool[i].polynomial()).unwrap();
            }
            out.push(f);
        }
        for i in start..pool.len() {
            let a = &pool[i];
            if vars + a.size() <= max_vars && det * a.det() <= max_det {
                stack.push(i);
                rec(pool, i, vars + a.size(), det * a.det(), (max_vars, max_det), stack, out);
                stack.pop();
            }
        }
    }
    rec(&pool, 0, 0, 1, (max_vars, max_det), &mut stack, &mut out);
    out
}

/// The three polynomials with hand-computed indices.
pub fn named_polynomials() -> Vec<(&'static str, InvertiblePolynomial)> {
    vec![
        (
            "x^2+y^3",
            InvertiblePolynomial::validate(vec![vec![2, 0], vec![0, 3]]).unwrap(),
        ),
        (
            "x^2y+y^3",
            InvertiblePolynomial::validate(vec![vec![2, 1], vec![0, 3]]).unwrap(),
        ),
        (
            "x^2+xy^3",
            InvertiblePolynomial::validate(vec![vec![2, 0], vec![1, 3]]).unwrap(),
        ),
    ]
}

/// One- and two-variable fixtures for the Milnor-number comparison.
pub fn small_fixtures() -> Vec<InvertiblePolynomial> {
    let mut out = Vec::new();
    for a in 2..=12 {
        out.push(InvertiblePolynomial::fermat(a).unwrap());
        for b in a..=12 {
            out.push(InvertiblePolynomial::validate(vec![vec![a, 0], vec![0, b]]).unwrap());
        }
    }
    for a in 2..=6 {
        for b in 2..=6 {
            for m in [vec![vec![a, 1], vec![0, b]], vec![vec![a, 1], vec![1, b]]] {
                if let Ok(f) = InvertiblePolynomial::validate(m) {
                    out.push(f);
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Jacobian-ideal oracle: Buchberger's algorithm over ℚ with grevlex order.

type Monomial = Vec<u32>;
type Poly = BTreeMap<Monomial, BigRational>;

fn grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
    da.cmp(&db).then_with(|| {
        for i in (0..a.len()).rev() {
            if a[i] != b[i] {
                return b[i].cmp(&a[i]);
            }
        }
        Ordering::Equal
    })
}

fn leading(p: &Poly) -> Option<(&Monomial, &BigRational)> {
    p.iter().max_by(|x, y| grevlex(x.0, y.0))
}

fn divides(a: &Monomial, b: &Monomial) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn add_scaled(p: &mut Poly, q: &Poly, c: &BigRational, shift: &Monomial) {
    for (m, v) in q {
        let key: Monomial = m.iter().zip(shift).map(|(a, b)| a + b).collect();
        let entry = p.entry(key.clone()).or_insert_with(BigRational::zero);
        *entry += c * v;
        if entry.is_zero() {
            p.remove(&key);
        }
    }
}

fn reduce(mut p: Poly, basis: &[Poly]) -> Poly {
    let mut remainder = Poly::new();
    while let Some((lm, lc)) = leading(&p).map(|(m, c)| (m.clone(), c.clone())) {
        let divisor = basis.iter().find(|g| divides(leading(g).unwrap().0, &lm));
        match divisor {
            Some(g) => {
                let (gm, gc) = leading(g).unwrap();
                let shift: Monomial = lm.iter().zip(gm).map(|(a, b)| a - b).collect();
                let c = -(lc / gc);
                add_scaled(&mut p, g, &c, &shift);
            }
            None => {
                p.remove(&lm);
                remainder.insert(lm, lc);
            }
        }
    }
    remainder
}

fn groebner(generators: Vec<Poly>) -> Vec<Poly> {
    let mut basis: Vec<Poly> = generators.into_iter().filter(|p| !p.is_empty()).collect();
    let mut pairs: Vec<(usize, usize)> = (0..basis.len()).flat_map(|i| (0..i).map(move |j| (j, i))).collect();
    while let Some((i, j)) = pairs.pop() {
        let (mi, ci) = leading(&basis[i]).map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let (mj, cj) = leading(&basis[j]).map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let lcm: Monomial = mi.iter().zip(&mj).map(|(a, b)| *a.max(b)).collect();
        let si: Monomial = lcm.iter().zip(&mi).map(|(a, b)| a - b).collect();
        let sj: Monomial = lcm.iter().zip(&mj).map(|(a, b)| a - b).collect();
        let mut s = Poly::new();
        add_scaled(&mut s, &basis[i], &(BigRational::one() / ci), &si);
        add_scaled(&mut s, &basis[j], &(-BigRational::one() / cj), &sj);
        let r = reduce(s, &basis);
        if !r.is_empty() {
            basis.push(r);
            let k = basis.len() - 1;
            pairs.extend((0..k).map(|a| (a, k)));
        }
    }
    basis
}

/// `dim ℚ[z]/(∂f/∂z_1, …, ∂f/∂z_n)`, counted as standard monomials.
pub fn jacobian_milnor_number(f: &InvertiblePolynomial) -> u64 {
    let n = f.num_vars();
    let e = f.matrix();
    let partials: Vec<Poly> = (0..n)
        .map(|j| {
            let mut p = Poly::new();
            for row in e {
                if row[j] > 0 {
                    let mut m: Monomial = row.iter().map(|&x| x as u32).collect();
                    m[j] -= 1;
                    let c = BigRational::from_integer(BigInt::from(row[j]));
                    let entry = p.entry(m).or_insert_with(BigRational::zero);
                    *entry += c;
                }
            }
            p
        })
        .collect();
    let basis = groebner(partials);
    let leads: Vec<Monomial> = basis.iter().map(|g| leading(g).unwrap().0.clone()).collect();
    // A zero-dimensional ideal has a pure power of every variable among its
    // leading monomials; standard monomials live below those powers.
    let bounds: Vec<u32> = (0..n)
        .map(|j| {
            leads
                .iter()
                .filter(|m| m.iter().enumerate().all(|(i, &x)| i == j || x == 0))
                .map(|m| m[j])
                .min()
                .expect("isolated singularity")
        })
        .collect();
    let mut count = 0;
    let mut m = vec![0u32; n];
    loop {
        if !leads.iter().any(|l| divides(l, &m)) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return count;
            }
            m[i] += 1;
            if m[i] < bounds[i] {
                break;
            }
            m[i] = 0;
            i += 1;
        }
    }
}

// ---------------------------------------------------------------------------
// Milnor-fibre oracle

/// `χ(M_f^H)` for the fixed locus of `h`: the locus is read off the phases,
/// a one-dimensional fibre `z^a = δ` is counted as `a` points, and higher
/// dimensional fibres use `1 + (−1)^{m−1} μ_Jac`.
pub fn fixed_fibre_characteristic(f: &InvertiblePolynomial, g: &DiagonalGroup, h: SubgroupId) -> i64 {
    let l = g.lattice();
    let members = l.subgroup(h).members();
    let locus: Vec<usize> = (0..f.num_vars())
        .filter(|&j| members.iter().all(|&m| g.phases(m)[j].is_zero()))
        .collect();
    let rows: Vec<Vec<i64>> = f
        .matrix()
        .iter()
        .filter(|row| row.iter().enumerate().all(|(j, &e)| e == 0 || locus.contains(&j)))
        .map(|row| locus.iter().map(|&j| row[j]).collect())
        .collect();
    assert_eq!(rows.len(), locus.len(), "restriction is not invertible");
    match locus.len() {
        0 => 0,
        1 => rows[0][0],
        m => {
            let mu = jacobian_milnor_number(&InvertiblePolynomial::validate(rows).unwrap()) as i64;
            if m % 2 == 1 {
                1 + mu
            } else {
                1 - mu
            }
        }
    }
}

/// `χ^G(M_f)` recovered from its marks.
pub fn milnor_characteristic_oracle(f: &InvertiblePolynomial, g: &DiagonalGroup) -> Burnside {
    let l = g.lattice();
    let marks: Vec<i64> = l
        .class_ids()
        .map(|c| fixed_fibre_characteristic(f, g, l.class_rep(c)))
        .collect();
    Burnside::from_marks(l, &marks).unwrap()
}
