//! Acceptance suite: one pass/fail line per criterion, nonzero exit on any
//! failure. Runs with `harness = false` so the lines always reach the log.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use malcev::corpus::{
    cyclic_group, direct_sum, group_algebra, matrix_algebra, random_ideal, random_matrix_subalgebra,
    tiny_algebras, triangular, truncated_polynomial,
};
use malcev::idempotents::{lift_from_ideal, lift_idempotent_newton, lifting_seed, newton_step_bound};
use malcev::io::{AlgebraFile, ReportFile};
use malcev::oracle::{brute_malcev_conjugacy, brute_radical, OracleReport, TinyCensus};
use malcev::radical::{self, RadicalData};
use malcev::splitting::{failed, verify_split, verify_split_with_radical, SplitContext};
use malcev::wedderburn::{check_complement, complement, conjugate_to_contain};
use malcev::{Algebra, Element, Error, FieldSpec, Side, SidedIdeal, Subspace};

const Q: FieldSpec = FieldSpec::Rationals;
const F101: FieldSpec = FieldSpec::PrimeField(101);

/// Outcome of one criterion.
struct Line {
    ok: bool,
    detail: String,
}

fn line(ok: bool, detail: impl Into<String>) -> Line {
    Line {
        ok,
        detail: detail.into(),
    }
}

/// Tallies of a property over many cases, keeping the first few failures.
#[derive(Default)]
struct Tally {
    cases: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failures.len() < 5 {
            self.failures.push(describe());
        } else if !ok {
            self.failures.push(String::new());
        }
    }

    fn merge(&mut self, other: Tally) {
        self.cases += other.cases;
        self.failures.extend(other.failures);
    }

    fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn summary(&self) -> String {
        let shown: Vec<&str> = self.failures.iter().filter(|f| !f.is_empty()).map(String::as_str).collect();
        if self.ok() {
            format!("{} cases", self.cases)
        } else {
            format!("{} of {} cases failed; first: {}", self.failures.len(), self.cases, shown.join(" | "))
        }
    }
}

fn fixed_fixtures() -> Vec<(String, Algebra)> {
    let mut out = vec![
        ("T2/Q".to_string(), triangular(Q, 2)),
        ("T3/Q".into(), triangular(Q, 3)),
        ("T4/Q".into(), triangular(Q, 4)),
        ("M2/Q".into(), matrix_algebra(Q, 2)),
        ("M3/Q".into(), matrix_algebra(Q, 3)),
        ("zero3/Q".into(), Algebra::zero_product(Q, 3)),
        ("k[t]/t^2/Q".into(), truncated_polynomial(Q, 2)),
        ("k[t]/t^4/Q".into(), truncated_polynomial(Q, 4)),
        ("QC2".into(), group_algebra(Q, &cyclic_group(2)).unwrap()),
        ("QC3".into(), group_algebra(Q, &cyclic_group(3)).unwrap()),
        ("T2+M2/Q".into(), direct_sum(Q, &[triangular(Q, 2), matrix_algebra(Q, 2)]).unwrap()),
        ("T2/GF(101)".into(), triangular(F101, 2)),
        ("T3/GF(101)".into(), triangular(F101, 3)),
        ("M2/GF(101)".into(), matrix_algebra(F101, 2)),
    ];
    for path in ["t2.json", "t3.json", "m2.json", "zero3.json", "dual.json", "m2_gf5.json"] {
        let full = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/").to_string() + path;
        let text = std::fs::read_to_string(&full).expect("fixture present");
        let a = AlgebraFile::parse(&text).unwrap().algebra().unwrap();
        out.push((format!("fixtures/{path}"), a));
    }
    out
}

fn random_instances() -> Vec<(String, Algebra)> {
    let mut out = Vec::new();
    for field in [Q, F101] {
        for s in 0..110u64 {
            let n = [2, 3, 3, 4, 4][(s % 5) as usize];
            let g = 2 + (s % 2) as usize;
            let (a, _) = random_matrix_subalgebra(field, n, g, 1000 + s).unwrap();
            out.push((format!("rand(n={n},g={g},seed={})/{field}", 1000 + s), a));
        }
    }
    out
}

/// Everything the later criteria need from one main-suite instance.
#[derive(Default)]
struct MainOutcome {
    split: Tally,
    lifting: Tally,
    wedderburn: Tally,
    determinism: Tally,
    max_dim: usize,
    nontrivial_conjugations: usize,
}

fn lifting_checks(tally: &mut Tally, name: &str, a: &Algebra, rad: &RadicalData, ideal: &SidedIdeal) {
    let left = match ideal.side() {
        Side::Right => return,
        _ => SidedIdeal::new(a, Side::Left, ideal.space().clone()).unwrap(),
    };
    let Ok(Some((_, x))) = lifting_seed(a, rad, &left) else {
        return;
    };
    let xbar = rad.quotient.project(&x);
    let phi = lift_from_ideal(a, rad, &left, &x);
    let newton = lift_idempotent_newton(a, rad, &left, &x);
    let bound = newton_step_bound(rad.nilpotency_index);
    let ok = match (&phi, &newton) {
        (Ok((e1, _, _)), Ok((e2, trace))) => {
            a.is_idempotent(e1)
                && a.is_idempotent(e2)
                && rad.quotient.project(e1) == xbar
                && rad.quotient.project(e2) == xbar
                && trace.steps <= bound
        }
        _ => false,
    };
    tally.check(ok, || format!("{name}: seed {x}: phi {:?}, newton {:?}", phi.as_ref().err(), newton.as_ref().err()));
}

fn run_main_instance(index: usize, name: &str, a: &Algebra) -> MainOutcome {
    let mut out = MainOutcome {
        max_dim: a.dim(),
        ..Default::default()
    };
    let ctx = match SplitContext::new(a) {
        Ok(c) => c,
        Err(e) => {
            out.split.check(false, || format!("{name}: {e}"));
            return out;
        }
    };
    let rad = ctx.radical();
    let generic = ctx.complement();
    let gc = check_complement(a, rad.space(), &generic.space);
    // dim S = dim A/R and the projection is multiplicative on S
    let q = &rad.quotient;
    let iso = generic.space.dim() == q.target.dim()
        && generic.basis.iter().all(|x| {
            generic
                .basis
                .iter()
                .all(|y| q.project(&a.mul(x, y)) == q.target.mul(&q.project(x), &q.project(y)))
        });
    out.wedderburn.check(gc.all() && iso, || format!("{name}: generic complement {gc:?}, iso {iso}"));

    let mut ideals: Vec<SidedIdeal> = (0..4u64)
        .map(|k| {
            let side = if k % 2 == 0 { Side::Left } else { Side::Right };
            random_ideal(a, side, k * 7919 + index as u64)
        })
        .collect();
    if let Some(one) = a.find_identity() {
        ideals.push(a.ideal_generated(Side::Left, &[one]));
    }
    for (k, ideal) in ideals.iter().enumerate() {
        let report = match ctx.split(ideal) {
            Ok(r) => r,
            Err(e) => {
                out.split.check(false, || format!("{name} ideal {k}: {e}"));
                continue;
            }
        };
        // the report goes through its file form before it is checked
        let text = ReportFile::from_report(a, &report).emit();
        let parsed = ReportFile::parse(&text).and_then(|f| f.to_report());
        let ok = match &parsed {
            Ok(back) => {
                let checks = verify_split(a, ideal, back);
                let bad = failed(&checks);
                out.split.check(bad.is_empty() && back == &report, || format!("{name} ideal {k}: falsified {bad:?}"));
                true
            }
            Err(e) => {
                out.split.check(false, || format!("{name} ideal {k}: report round trip {e}"));
                false
            }
        };
        if ok {
            let again = ReportFile::from_report(a, &ctx.split(ideal).unwrap()).emit();
            let fresh = ReportFile::from_report(a, &malcev::split_ideal(a, ideal).unwrap()).emit();
            out.determinism.check(again == text && fresh == text, || format!("{name} ideal {k}: output differs on rerun"));
        }
        lifting_checks(&mut out.lifting, name, a, rad, ideal);

        if !report.e.is_zero() {
            let conj = check_complement(a, rad.space(), &report.s);
            out.wedderburn.check(conj.all() && report.s.contains(report.e.coords()), || {
                format!("{name} ideal {k}: conjugated complement {conj:?}")
            });
            if report.s != generic.space {
                out.nontrivial_conjugations += 1;
            }
        }
    }
    out
}

fn criterion_main(instances: &[(String, Algebra)]) -> (Line, MainOutcome, Duration) {
    let start = Instant::now();
    let outcomes: Vec<MainOutcome> = instances
        .par_iter()
        .enumerate()
        .map(|(i, (n, a))| run_main_instance(i, n, a))
        .collect();
    let elapsed = start.elapsed();
    let mut total = MainOutcome::default();
    for o in outcomes {
        total.split.merge(o.split);
        total.lifting.merge(o.lifting);
        total.wedderburn.merge(o.wedderburn);
        total.determinism.merge(o.determinism);
        total.max_dim = total.max_dim.max(o.max_dim);
        total.nontrivial_conjugations += o.nontrivial_conjugations;
    }
    let enough = instances.len() >= 200 && total.split.cases >= 3 * instances.len();
    let in_time = elapsed <= Duration::from_secs(300);
    let ok = total.split.ok() && enough && in_time && total.max_dim <= 12;
    let l = line(
        ok,
        format!(
            "{} instances, {} split+check runs, max dim {}, {:.1}s; {}",
            instances.len(),
            total.split.cases,
            total.max_dim,
            elapsed.as_secs_f64(),
            total.split.summary()
        ),
    );
    (l, total, elapsed)
}

fn tiny_censuses() -> Vec<TinyCensus> {
    let mut algebras = Vec::new();
    for (p, seed) in [(2u64, 0u64), (3, 100)] {
        algebras.extend(tiny_algebras(FieldSpec::PrimeField(p), 4, 12, seed));
    }
    algebras
        .par_iter()
        .map(|(name, a)| TinyCensus::new(name, a).unwrap())
        .collect()
}

fn merge_reports(reports: impl IntoIterator<Item = Result<OracleReport, Error>>) -> Line {
    let mut cases = 0;
    let mut instances = 0;
    let mut bad = Vec::new();
    for r in reports {
        match r {
            Ok(r) => {
                instances += 1;
                cases += r.domain_size;
                if !r.passed() {
                    bad.push(r.to_string());
                }
            }
            Err(e) => bad.push(e.to_string()),
        }
    }
    let detail = if bad.is_empty() {
        format!("{instances} instances, {cases} cases, 0 counterexamples")
    } else {
        format!("{} failing instances; first: {}", bad.len(), bad[0])
    };
    line(bad.is_empty() && instances > 0, detail)
}

fn tiny_lifting(censuses: &[TinyCensus]) -> Tally {
    let mut tally = Tally::default();
    for c in censuses {
        let rad = radical::certify(&c.algebra, c.radical.clone()).unwrap();
        for i in &c.left_ideals {
            let ideal = SidedIdeal::new(&c.algebra, Side::Left, i.clone()).unwrap();
            lifting_checks(&mut tally, &c.name, &c.algebra, &rad, &ideal);
        }
    }
    tally
}

fn tiny_splits(censuses: &[TinyCensus]) -> Tally {
    let mut tally = Tally::default();
    for c in censuses {
        let ctx = SplitContext::with_radical(&c.algebra, c.radical.clone()).unwrap();
        for i in &c.left_ideals {
            let ideal = SidedIdeal::new(&c.algebra, Side::Left, i.clone()).unwrap();
            match ctx.split(&ideal) {
                Ok(rep) => {
                    let checks = verify_split_with_radical(&c.algebra, &c.radical, &ideal, &rep);
                    let bad = failed(&checks);
                    tally.check(bad.is_empty(), || format!("{} {i}: {bad:?}", c.name));
                }
                Err(e) => tally.check(false, || format!("{} {i}: {e}", c.name)),
            }
        }
    }
    tally
}

fn worked_conjugation() -> bool {
    let t2 = triangular(Q, 2);
    let rad = radical::radical(&t2).unwrap();
    let s0 = complement(&t2, &rad).unwrap();
    let e = Element::from_i64(Q, &[1, 1, 0]);
    let (s, _) = conjugate_to_contain(&t2, &rad, &s0, &e).unwrap();
    let expected = Subspace::span(
        Q,
        3,
        [Element::from_i64(Q, &[1, 1, 0]).into_coords(), Element::from_i64(Q, &[0, -1, 1]).into_coords()],
    );
    s.basis == vec![Element::from_i64(Q, &[1, 1, 0]), Element::from_i64(Q, &[0, -1, 1])] && s.space == expected
}

/// Generic complement against its conjugates onto every idempotent it
/// misses, searched by brute force.
fn criterion_conjugacy() -> Line {
    let mut algebras = Vec::new();
    for (p, seed) in [(2u64, 0u64), (3, 100), (5, 200)] {
        algebras.extend(tiny_algebras(FieldSpec::PrimeField(p), 4, 12, seed));
    }
    let results: Vec<(usize, Tally)> = algebras
        .par_iter()
        .map(|(name, a)| {
            let mut tally = Tally::default();
            let mut pairs = 0;
            let Ok(r) = brute_radical(a) else {
                return (0, tally);
            };
            let rad = radical::certify(a, r.clone()).unwrap();
            let s1 = complement(a, &rad).unwrap();
            for e in malcev::oracle::brute_idempotents(a).unwrap() {
                if s1.space.contains(e.coords()) {
                    continue;
                }
                let (s2, _) = conjugate_to_contain(a, &rad, &s1, &e).unwrap();
                if s2.space == s1.space {
                    continue;
                }
                pairs += 1;
                let found = brute_malcev_conjugacy(a, &r, &s1.space, &s2.space);
                tally.check(found.is_ok(), || format!("{name}, e = {e}: {found:?}"));
                let back = brute_malcev_conjugacy(a, &r, &s2.space, &s1.space);
                tally.check(back.is_ok(), || format!("{name}, e = {e} (reverse): {back:?}"));
            }
            (usize::from(pairs > 0), tally)
        })
        .collect();
    let mut total = Tally::default();
    let mut instances = 0;
    for (i, t) in results {
        instances += i;
        total.merge(t);
    }
    line(
        total.ok() && instances >= 20,
        format!("{instances} instances with distinct complement pairs; {}", total.summary()),
    )
}

fn criterion_radical() -> Line {
    let mut tally = Tally::default();
    let algebras = tiny_algebras(FieldSpec::PrimeField(5), 3, 20, 300);
    for (name, a) in &algebras {
        let brute = brute_radical(a).unwrap();
        let lib = radical::radical(a);
        let ok = matches!(&lib, Ok(r) if r.space() == &brute);
        tally.check(ok, || format!("{name}: brute {brute}, trace form {:?}", lib.map(|r| r.space().to_string())));
    }
    let strict_upper = |n: usize| {
        let t = triangular(Q, n);
        let mut idx = 0;
        let mut vs = Vec::new();
        for a in 0..n {
            for b in a..n {
                if a < b {
                    vs.push(Element::basis(Q, t.dim(), idx).into_coords());
                }
                idx += 1;
            }
        }
        (t, Subspace::span(Q, n * (n + 1) / 2, vs))
    };
    for n in 1..=4 {
        let m = radical::radical(&matrix_algebra(Q, n)).unwrap();
        tally.check(m.space().is_zero(), || format!("M{n}: radical {}", m.space()));
        let (t, expected) = strict_upper(n);
        let r = radical::radical(&t).unwrap();
        tally.check(r.space() == &expected && r.nilpotency_index == n, || format!("T{n}: radical {}", r.space()));
    }
    for n in 1..=4 {
        let r = radical::radical(&Algebra::zero_product(Q, n)).unwrap();
        tally.check(r.dim() == n, || format!("zero{n}: radical dim {}", r.dim()));
    }
    let gf5 = algebras.len();
    line(tally.ok() && gf5 > 0, format!("{gf5} GF(5) instances plus fixed fixtures; {}", tally.summary()))
}

fn criterion_determinism(main: &MainOutcome) -> Line {
    let mut tally = Tally::default();
    // generated instances and their files
    for s in 0..20u64 {
        let a = random_matrix_subalgebra(Q, 3, 2, s).unwrap().0;
        let b = random_matrix_subalgebra(Q, 3, 2, s).unwrap().0;
        tally.check(AlgebraFile::from_algebra(&a).emit() == AlgebraFile::from_algebra(&b).emit(), || {
            format!("corpus seed {s} differs")
        });
        tally.check(random_ideal(&a, Side::Left, s) == random_ideal(&b, Side::Left, s), || {
            format!("ideal seed {s} differs")
        });
    }
    let ok = tally.ok() && main.determinism.ok() && main.determinism.cases > 0;
    line(
        ok,
        format!(
            "{} repeated reports byte-identical, {} corpus regenerations; {}",
            main.determinism.cases,
            tally.cases,
            if main.determinism.ok() { tally.summary() } else { main.determinism.summary() }
        ),
    )
}

fn main() -> ExitCode {
    let mut lines: BTreeMap<u32, (&str, Line)> = BTreeMap::new();

    let mut instances = random_instances();
    instances.extend(fixed_fixtures());
    let (l1, mut main_outcome, _) = criterion_main(&instances);
    lines.insert(1, ("split then check on the random corpus", l1));

    let censuses = tiny_censuses();
    lines.insert(
        2,
        (
            "bar-minimal iff idempotent generated",
            merge_reports(censuses.iter().map(|c| c.characterization())),
        ),
    );
    let mut l3 = merge_reports(censuses.iter().flat_map(|c| [c.bijection(), c.minimal_non_nilpotent()]));
    let tiny_split = tiny_splits(&censuses);
    l3.ok &= tiny_split.ok();
    l3.detail = format!("{}; tiny-field splits: {}", l3.detail, tiny_split.summary());
    lines.insert(3, ("right equivalence bijection", l3));

    let mut lifting = Tally::default();
    lifting.merge(tiny_lifting(&censuses));
    let tiny_cases = lifting.cases;
    let main_cases = main_outcome.lifting.cases;
    lifting.merge(std::mem::take(&mut main_outcome.lifting));
    lines.insert(
        4,
        (
            "phi-lift and Newton lift agree on idempotence and image",
            line(
                lifting.ok() && tiny_cases > 0 && main_cases > 0,
                format!("{main_cases} main-suite seeds, {tiny_cases} tiny seeds; {}", lifting.summary()),
            ),
        ),
    );

    let worked = worked_conjugation();
    let w = &main_outcome.wedderburn;
    lines.insert(
        5,
        (
            "complements and conjugation",
            line(
                w.ok() && worked,
                format!(
                    "{}, {} nontrivial conjugations, T2 worked conjugation {}",
                    w.summary(),
                    main_outcome.nontrivial_conjugations,
                    if worked { "exact" } else { "MISMATCH" }
                ),
            ),
        ),
    );
    lines.insert(6, ("conjugacy of complements by 1 + r", criterion_conjugacy()));
    lines.insert(7, ("radical cross-check", criterion_radical()));
    lines.insert(8, ("determinism", criterion_determinism(&main_outcome)));

    let mut all = true;
    for (n, (name, l)) in &lines {
        all &= l.ok;
        println!("criterion {n} {} - {name}: {}", if l.ok { "PASS" } else { "FAIL" }, l.detail);
    }
    if all {
        println!("acceptance: all {} criteria pass", lines.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: FAILED");
        ExitCode::FAILURE
    }
}
