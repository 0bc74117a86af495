//! One PASS/FAIL line per acceptance criterion.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use eqindex::invertible::chibar_G_milnor;
use eqindex::{
    chi_G_simplicial, chi_k_direct, duality_check, fixed_indices_from_index, fixed_subcomplex, gsv_from_radial,
    index_df, index_from_fixed_indices, index_from_fixed_indices_conj, index_from_fixed_indices_sub,
    poincare_hopf_check, symmetry_group, Burnside, SingularOrbitDatum, SubgroupLattice,
};
use eqindex_testkit as kit;
use rand::rngs::StdRng;
use rand::SeedableRng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    check(elapsed < limit, || format!("took {elapsed:.2?}, limit {limit:.0?}"))
}

fn class_by_order(l: &SubgroupLattice, order: usize) -> eqindex::ClassId {
    l.class_ids().find(|&c| l.class_order(c) == order).unwrap()
}

fn ring_axioms() -> Outcome {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(1);
    let mut count = 0;
    for (name, l) in kit::ring_groups() {
        let xs: Vec<Burnside> = (0..200).map(|_| kit::random_element(&l, &mut rng, 30)).collect();
        let one = Burnside::one(&l);
        for i in 0..xs.len() {
            let (a, b, c) = (&xs[i], &xs[(i + 1) % 200], &xs[(i + 7) % 200]);
            let ab = a.multiply(b).map_err(|e| e.to_string())?;
            check(&(a + b) + c == a + &(b + c), || {
                format!("{name}: additive associativity")
            })?;
            check(a + b == b + a, || format!("{name}: additive commutativity"))?;
            check(&(a - b) + b == *a, || format!("{name}: additive inverse"))?;
            check(ab == b.multiply(a).unwrap(), || format!("{name}: commutativity"))?;
            check(
                ab.multiply(c).unwrap() == a.multiply(&b.multiply(c).unwrap()).unwrap(),
                || format!("{name}: associativity"),
            )?;
            check(a.multiply(&(b + c)).unwrap() == &ab + &a.multiply(c).unwrap(), || {
                format!("{name}: distributivity")
            })?;
            check(a.multiply(&one).unwrap() == *a, || format!("{name}: unit"))?;
            for k in l.class_ids() {
                check(ab.mark(k) == a.mark(k) * b.mark(k), || {
                    format!("{name}: mark of {a} * {b}")
                })?;
            }
            count += 1;
        }
    }
    within(start.elapsed(), Duration::from_secs(10))?;
    Ok(format!("{count} elements over 5 groups in {:.2?}", start.elapsed()))
}

fn mobius_round_trip() -> Outcome {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(2);
    for (name, l) in kit::ring_groups() {
        for _ in 0..200 {
            let b = kit::random_element(&l, &mut rng, 50);
            let data = fixed_indices_from_index(&b);
            let back = index_from_fixed_indices(&data).map_err(|e| format!("{name}: {e}"))?;
            check(back == b, || format!("{name}: {b} came back as {back}"))?;
            if l.group().is_abelian() {
                let sub = index_from_fixed_indices_sub(&data).unwrap();
                let conj = index_from_fixed_indices_conj(&data).unwrap();
                check(sub == conj, || format!("{name}: flavours disagree on {b}"))?;
            }
        }
    }
    within(start.elapsed(), Duration::from_secs(10))?;
    Ok(format!("1000 elements over 5 groups in {:.2?}", start.elapsed()))
}

fn mark_identity() -> Outcome {
    let suite = kit::simplicial_suite();
    let mut checked = 0;
    for (name, x) in &suite {
        let chi = chi_G_simplicial(x).map_err(|e| format!("{name}: {e}"))?;
        let l = x.lattice();
        for h in l.ids() {
            let fixed = fixed_subcomplex(x, h).unwrap().complex().euler_characteristic();
            check(chi.mark(l.class_of(h)) == fixed, || format!("{name}, {}", l.label(h)))?;
            checked += 1;
        }
    }
    Ok(format!("{} complexes, {checked} subgroups", suite.len()))
}

fn reductions() -> Outcome {
    let suite = kit::simplicial_suite();
    for (name, x) in &suite {
        let chi = chi_G_simplicial(x).unwrap();
        for k in 0..=2 {
            let direct = chi_k_direct(x, k).map_err(|e| format!("{name}: {e}"))?;
            let r = chi.r_k(k).map_err(|e| format!("{name}: {e}"))?;
            check(r == direct, || format!("{name}, k = {k}: r_k = {r}, direct = {direct}"))?;
        }
    }
    let groups = kit::abelian_groups();
    for (name, l) in &groups {
        for c in l.class_ids() {
            let h = l.class_order(c) as i64;
            for k in 0..=3 {
                let r = Burnside::basis(l, c).r_k(k).map_err(|e| format!("{name}: {e}"))?;
                check(r == h.pow(k as u32), || {
                    format!("{name}, {}: r_{k} = {r}", l.class_label(c))
                })?;
            }
        }
    }
    Ok(format!("{} complexes, {} abelian groups", suite.len(), groups.len()))
}

fn ground_truth() -> Outcome {
    let expected: [&[(usize, i64)]; 3] = [
        &[(6, 1), (1, 1), (2, -1), (3, -1)],
        &[(6, 1), (1, 1), (2, -1)],
        &[(6, 1), (1, 1), (3, -1)],
    ];
    let cardinalities = [2, 4, 5];
    let mut slowest = Duration::ZERO;
    for (((name, f), terms), mu) in kit::named_polynomials().into_iter().zip(expected).zip(cardinalities) {
        let start = Instant::now();
        let g = symmetry_group(&f).map_err(|e| format!("{name}: {e}"))?;
        let l = g.lattice();
        check(l.order() == 6, || format!("{name}: |G_f| = {}", l.order()))?;
        let truth = Burnside::from_terms(
            l,
            terms
                .iter()
                .map(|&(o, a)| (class_by_order(l, o), a))
                .collect::<Vec<_>>(),
        );
        let oracle = &Burnside::one(l) - &kit::milnor_characteristic_oracle(&f, &g);
        check(oracle == truth, || format!("{name}: oracle gives {oracle}"))?;
        check(kit::jacobian_milnor_number(&f) as i64 == mu, || {
            format!("{name}: Jacobian oracle")
        })?;
        let ind = index_df(&f, &g).map_err(|e| format!("{name}: {e}"))?;
        check(ind == truth, || format!("{name}: {ind}, expected {truth}"))?;
        check(ind.cardinality() == mu, || {
            format!("{name}: cardinality {}", ind.cardinality())
        })?;
        slowest = slowest.max(start.elapsed());
        within(start.elapsed(), Duration::from_secs(1))?;
    }
    Ok(format!("3 polynomials, slowest {slowest:.2?}"))
}

fn milnor_numbers() -> Outcome {
    let fixtures = kit::small_fixtures();
    for f in &fixtures {
        let mo = f.milnor_number().map_err(|e| format!("{f}: {e}"))?;
        let jac = kit::jacobian_milnor_number(f) as i64;
        check(mo == jac, || format!("{f}: {mo} vs {jac}"))?;
    }
    Ok(format!("{} fixtures", fixtures.len()))
}

fn duality() -> Outcome {
    let start = Instant::now();
    let fixtures = kit::invertible_fixtures(3, 60);
    let mut failures = Vec::new();
    let mut signed = 0;
    let mut odd = 0;
    for f in &fixtures {
        let report = duality_check(f).map_err(|e| format!("{f}: {e}"))?;
        if report.all_equal_up_to_sign {
            signed += 1;
        }
        if !report.all_equal {
            let why = if !report.r0_equal {
                format!("r0 {} vs {}", report.r0, report.dual_r0)
            } else {
                let p = report.pairs.iter().find(|p| !p.equal).unwrap();
                format!("r1 on ({}, {}): {} vs {}", p.subgroup, p.dual_subgroup, p.r1, p.dual_r1)
            };
            if report.num_vars % 2 == 1 {
                odd += 1;
            }
            failures.push(format!("{f} (n = {}): {why}", report.num_vars));
        }
    }
    within(start.elapsed(), Duration::from_secs(120))?;
    if failures.is_empty() {
        Ok(format!("{} polynomials in {:.2?}", fixtures.len(), start.elapsed()))
    } else {
        Err(format!(
            "{} of {} polynomials violate the literal identity ({odd} with odd n), e.g. {}; \
             {signed} satisfy it with the sign (-1)^n",
            failures.len(),
            fixtures.len(),
            failures[0]
        ))
    }
}

fn restriction() -> Outcome {
    let fixtures = kit::invertible_fixtures(3, 60);
    let mut pairs = 0;
    for f in &fixtures {
        let g = symmetry_group(f).unwrap();
        let whole = index_df(f, &g).unwrap();
        for h in g.lattice().ids() {
            let restricted = whole.restrict(&g.lattice().embed(h)).map_err(|e| format!("{f}: {e}"))?;
            let direct = index_df(f, &g.subgroup(h)).map_err(|e| format!("{f}: {e}"))?;
            check(direct == restricted, || {
                format!("{f}, {}: {direct} vs {restricted}", g.lattice().label(h))
            })?;
            pairs += 1;
        }
    }
    Ok(format!("{} polynomials, {pairs} subgroups", fixtures.len()))
}

fn orbit_data(x: &eqindex::GSimplicialComplex) -> Vec<SingularOrbitDatum> {
    let l = x.lattice();
    x.simplex_orbits()
        .unwrap()
        .into_iter()
        .map(|o| {
            let sign = if o.dim() % 2 == 0 { 1 } else { -1 };
            SingularOrbitDatum::fixed_point(l, o.stabilizer, sign)
        })
        .collect()
}

fn poincare_hopf() -> Outcome {
    let suite = kit::simplicial_suite();
    let (_, sphere) = suite.iter().find(|(n, _)| *n == "octahedron, Z4 rotation").unwrap();
    let l = sphere.lattice();
    let chi = chi_G_simplicial(sphere).unwrap();
    check(chi == Burnside::one(l).scale(&2), || {
        format!("rotation model has chi^G = {chi}")
    })?;
    let poles = vec![SingularOrbitDatum::fixed_point(l, l.whole(), 1); 2];
    check(poincare_hopf_check(&chi, &poles).unwrap().pass, || {
        "rotation model rejected".into()
    })?;
    for (name, x) in &suite {
        let chi = chi_G_simplicial(x).unwrap();
        let mut orbits = orbit_data(x);
        let report = poincare_hopf_check(&chi, &orbits).map_err(|e| format!("{name}: {e}"))?;
        check(report.pass, || format!("{name}: discrepancy {}", report.discrepancy))?;
        let first = &mut orbits[0];
        first.local_index = &first.local_index + &Burnside::one(first.local_index.lattice());
        let corrupted = poincare_hopf_check(&chi, &orbits).unwrap();
        check(!corrupted.pass && !corrupted.discrepancy.is_zero(), || {
            format!("{name}: corruption missed")
        })?;
    }
    Ok(format!("rotation model and {} orbit decompositions", suite.len()))
}

fn gsv() -> Outcome {
    let fixtures = kit::invertible_fixtures(3, 60);
    for f in &fixtures {
        let g = symmetry_group(f).unwrap();
        let l = g.lattice();
        let chibar = chibar_G_milnor(f, &g).map_err(|e| format!("{f}: {e}"))?;
        let chi = kit::milnor_characteristic_oracle(f, &g);
        let radial = gsv_from_radial(&Burnside::one(l), &chibar).unwrap();
        check(radial == chi, || format!("{f}: {radial} vs {chi}"))?;
        let of_df = gsv_from_radial(&index_df(f, &g).unwrap(), &chibar).unwrap();
        check(of_df.is_zero(), || format!("{f}: GSV index of df is {of_df}"))?;
    }
    Ok(format!("{} polynomials", fixtures.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("Burnside ring axioms and multiplicative marks", ring_axioms),
        ("Moebius round trip", mobius_round_trip),
        ("mark identity on the simplicial suite", mark_identity),
        ("r_k against commuting tuples", reductions),
        ("invertible pipeline ground truth", ground_truth),
        ("Milnor-Orlik against the Jacobian ideal", milnor_numbers),
        ("duality of r_0 and r_1", duality),
        ("restriction compatibility", restriction),
        ("Poincare-Hopf checker", poincare_hopf),
        ("GSV relation", gsv),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {:>2}: PASS  {title} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {title} ({why})", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
