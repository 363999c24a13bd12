//! `malcev fuzz`: the property suites on seeded random instances.

use malcev::corpus::{random_ideal, random_matrix_subalgebra, tiny_algebras};
use malcev::oracle::{OracleReport, TinyCensus};
use malcev::splitting::{failed, verify_split, SplitContext};
use malcev::{FieldSpec, Side};

fn split_suite(field: FieldSpec, seed: u64, count: u64) -> OracleReport {
    let mut rep = OracleReport::new(&format!("random subalgebras over {field}"), "split then check");
    for i in 0..count {
        let s = seed.wrapping_add(i);
        let n = 2 + (s % 3) as usize;
        let g = 1 + (s % 3) as usize;
        let (a, _) = match random_matrix_subalgebra(field, n, g, s) {
            Ok(x) => x,
            Err(e) => {
                rep.record(false, || format!("seed {s}: construction failed: {e}"));
                continue;
            }
        };
        let ctx = match SplitContext::new(&a) {
            Ok(c) => c,
            Err(e) => {
                rep.record(false, || format!("seed {s}: {e}"));
                continue;
            }
        };
        for (k, side) in [Side::Left, Side::Left, Side::Right].into_iter().enumerate() {
            let ideal = random_ideal(&a, side, s.wrapping_mul(3).wrapping_add(k as u64));
            match ctx.split(&ideal) {
                Ok(report) => {
                    let checks = verify_split(&a, &ideal, &report);
                    let bad = failed(&checks).join(", ");
                    rep.record(bad.is_empty(), || format!("seed {s}, ideal {k}: falsified {bad}"));
                }
                Err(e) => rep.record(false, || format!("seed {s}, ideal {k}: {e}")),
            }
        }
    }
    rep
}

pub fn run(seed: u64, count: u64, tiny_oracles: bool) -> Result<(), String> {
    let mut reports = vec![
        split_suite(FieldSpec::Rationals, seed, count),
        split_suite(FieldSpec::PrimeField(101), seed, count),
    ];
    if tiny_oracles {
        for p in [2, 3] {
            let field = FieldSpec::PrimeField(p);
            for (name, a) in tiny_algebras(field, 4, count as usize, seed) {
                match TinyCensus::new(&name, &a) {
                    Ok(c) => {
                        for r in [c.characterization(), c.bijection(), c.minimal_non_nilpotent()] {
                            reports.push(r.map_err(|e| format!("{name}: {e}"))?);
                        }
                    }
                    Err(e) => return Err(format!("{name}: {e}")),
                }
            }
        }
    }
    let mut bad = 0;
    for r in &reports {
        println!("{r}");
        if !r.passed() {
            bad += 1;
        }
    }
    if bad == 0 {
        Ok(())
    } else {
        Err(format!("{bad} suite(s) found counterexamples"))
    }
}
